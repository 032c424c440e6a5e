//! Finite abelian groups presented as ordered products of cyclic groups.
//!
//! A [`GroupSpec`] is the list of cyclic moduli `n_1, …, n_r` exactly as the
//! user wrote them; no canonicalization to invariant factors is performed,
//! because the even/odd bookkeeping downstream depends on the presentation.
//! Elements are coordinate tuples reduced mod each modulus, enumerated in
//! lexicographic order; all indexing elsewhere in the crate relies on that
//! fixed order.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::Result;

/// A finite abelian group `Z_{n_1} × ⋯ × Z_{n_r}` in the written order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u64>,
    order: u64,
    even_count: usize,
    odd_count: usize,
}

/// An element of a [`GroupSpec`]: one residue per modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupSpec {
    /// Builds a spec, rejecting moduli below 1.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::Parse("group spec has no moduli".into()));
        }
        for &n in &moduli {
            if n == 0 {
                return Err(Error::Parse("modulus must be ≥ 1".into()));
            }
        }
        let order = moduli.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n));
        let order = order.ok_or_else(|| Error::Validation("group order overflows u64".into()))?;
        let even_count = moduli.iter().filter(|&&n| n % 2 == 0).count();
        let odd_count = moduli.len() - even_count;
        Ok(GroupSpec {
            moduli,
            order,
            even_count,
            odd_count,
        })
    }

    /// Parses the `"n1xn2x...xnr"` form, e.g. `"4x6x3"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        let mut moduli = Vec::new();
        for token in text.trim().split('x') {
            if token.is_empty() {
                return Err(Error::Parse(format!("empty token in group spec \"{text}\"")));
            }
            let n: u64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus token \"{token}\"")))?;
            if n == 0 {
                return Err(Error::Parse(format!(
                    "modulus must be ≥ 1 (got \"{token}\")"
                )));
            }
            moduli.push(n);
        }
        GroupSpec::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of cyclic factors in the presentation.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Group order `∏ n_i`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of even moduli.
    pub fn even_count(&self) -> usize {
        self.even_count
    }

    /// Number of odd moduli; moduli of 1 count as odd.
    pub fn odd_count(&self) -> usize {
        self.odd_count
    }

    /// True when every element squares to the identity (all moduli in {1, 2}).
    pub fn is_elementary_two(&self) -> bool {
        self.moduli.iter().all(|&n| n <= 2)
    }

    pub fn is_all_odd(&self) -> bool {
        self.even_count == 0
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.moduli.len()],
        }
    }

    /// The generator `e_i` of the i-th cyclic factor (0-based).
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.moduli.len()];
        coords[i] = if self.moduli[i] == 1 { 0 } else { 1 };
        GroupElement { coords }
    }

    /// Builds an element from raw coordinates, reducing each mod `n_i`.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::Structural(format!(
                "element has {} coordinates, spec has {} moduli",
                coords.len(),
                self.moduli.len()
            )));
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &n)| c % n)
                .collect(),
        })
    }

    /// Lexicographic enumeration of all `∏ n_i` elements.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order as usize);
        let mut coords = vec![0u64; self.moduli.len()];
        loop {
            out.push(GroupElement {
                coords: coords.clone(),
            });
            // odometer increment, least significant coordinate last
            let mut i = self.moduli.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < self.moduli[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    /// Index of an element in the enumeration order (mixed-radix value).
    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        self.check(e)?;
        let mut idx: u64 = 0;
        for (c, &n) in e.coords.iter().zip(&self.moduli) {
            idx = idx * n + c;
        }
        Ok(idx as usize)
    }

    /// Inverse of [`GroupSpec::index_of`].
    pub fn element_at(&self, mut index: usize) -> Result<GroupElement> {
        if index as u64 >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.order as usize,
            });
        }
        let mut coords = vec![0u64; self.moduli.len()];
        for i in (0..self.moduli.len()).rev() {
            coords[i] = (index as u64) % self.moduli[i];
            index /= self.moduli[i] as usize;
        }
        Ok(GroupElement { coords })
    }

    fn check(&self, e: &GroupElement) -> Result<()> {
        if e.coords.len() != self.moduli.len() {
            return Err(Error::Structural(format!(
                "element has {} coordinates, spec has {} moduli",
                e.coords.len(),
                self.moduli.len()
            )));
        }
        Ok(())
    }

    /// Componentwise sum mod `n_i`.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        })
    }

    /// Componentwise negation.
    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// `a + a`.
    pub fn double(&self, a: &GroupElement) -> Result<GroupElement> {
        self.add(a, a)
    }

    /// `m · a` by repeated-squaring-free modular arithmetic.
    pub fn scale(&self, m: u64, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| (x % n).wrapping_mul(m % n) % n)
                .collect(),
        })
    }

    /// Least `m ≥ 1` with `m·a = 0`: the lcm of the coordinate orders.
    pub fn element_order(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        let mut ord = 1u64;
        for (&c, &n) in a.coords.iter().zip(&self.moduli) {
            let coord_order = if c == 0 { 1 } else { n / gcd(n, c) };
            ord = lcm(ord, coord_order);
        }
        Ok(ord)
    }

    /// The doubling subgroup `2H = {h + h}`, presented with moduli
    /// `n_i / gcd(n_i, 2)` and embedded via `r_i ↦ 2·e_i`.
    pub fn double_subgroup(&self) -> Embedding {
        let source_moduli: Vec<u64> = self.moduli.iter().map(|&n| n / gcd(n, 2)).collect();
        let source = GroupSpec::new(source_moduli).expect("halved moduli stay ≥ 1");
        let generator_images: Vec<GroupElement> = (0..self.moduli.len())
            .map(|i| {
                let e = self.basis(i);
                self.double(&e).expect("conforming element")
            })
            .collect();
        Embedding {
            source,
            target: self.clone(),
            generator_images,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Tuple display: `(a,b,c)`, or the bare residue for rank-1 groups.
    pub fn display(&self) -> String {
        if self.coords.len() == 1 {
            self.coords[0].to_string()
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

/// An injective homomorphism from one spec into another, given by the images
/// of the source's cyclic generators.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: GroupSpec,
    target: GroupSpec,
    generator_images: Vec<GroupElement>,
}

impl Embedding {
    pub fn source(&self) -> &GroupSpec {
        &self.source
    }

    pub fn target(&self) -> &GroupSpec {
        &self.target
    }

    pub fn generator_images(&self) -> &[GroupElement] {
        &self.generator_images
    }

    /// Applies the homomorphism to a source element.
    pub fn apply(&self, e: &GroupElement) -> Result<GroupElement> {
        if e.coords.len() != self.source.rank() {
            return Err(Error::Structural(
                "element does not conform to the embedding source".into(),
            ));
        }
        let mut acc = self.target.identity();
        for (i, &c) in e.coords.iter().enumerate() {
            let img = self.target.scale(c, &self.generator_images[i])?;
            acc = self.target.add(&acc, &img)?;
        }
        Ok(acc)
    }

    /// Image of the whole source, in source enumeration order.
    pub fn image(&self) -> Vec<GroupElement> {
        self.source
            .elements()
            .iter()
            .map(|e| self.apply(e).expect("conforming element"))
            .collect()
    }

    /// Size of the image set (deduplicated).
    pub fn image_size(&self) -> usize {
        self.image().into_iter().collect::<HashSet<_>>().len()
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
