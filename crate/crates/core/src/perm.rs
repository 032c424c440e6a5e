//! Permutations, breadth-first group closure, orbits, conjugacy classes, and
//! the generalized-dihedral presentation certificate.
//!
//! Groups here are tiny (a few hundred elements at most), so everything is
//! fully enumerated and deduplicated by image list; no stabilizer chains.

use std::collections::{HashMap, VecDeque};

use crate::abelian::GroupSpec;
use crate::error::Error;
use crate::Result;

/// A permutation of `[0, n)` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on `[0, images.len())`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::Validation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::Validation(format!("image {img} repeated")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            ord = crate::abelian::lcm(ord, len);
        }
        ord
    }

    /// n-fold composition power.
    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Restriction to an invariant point set, re-indexed by position in
    /// `points` (which must be sorted).
    pub fn restrict(&self, points: &[usize]) -> Result<Permutation> {
        let pos: HashMap<usize, usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            let img = self.images[p];
            match pos.get(&img) {
                Some(&i) => images.push(i),
                None => {
                    return Err(Error::Structural(format!(
                        "point set not invariant: {p} ↦ {img} leaves it"
                    )))
                }
            }
        }
        Ok(Permutation { images })
    }

    /// Cycle notation for display, fixed points omitted; identity is `"()"`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.images.len()];
        let mut out = String::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                first = false;
                p = self.images[p];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// A fully enumerated permutation group with conjugacy class data.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    classes: Vec<ConjugacyClass>,
}

/// One conjugacy class: member indices into `PermGroup::elements`, with the
/// minimal-image-list member as representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl PermGroup {
    /// Breadth-first closure of the generated group, erroring out past `cap`.
    pub fn closure(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        if cap == 0 {
            return Err(Error::Validation("closure cap must be ≥ 1".into()));
        }
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => {
                return Err(Error::Validation(
                    "closure needs at least one generator".into(),
                ))
            }
        };
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Structural(
                    "generators have mismatched degrees".into(),
                ));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = elements[i].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge {
                            reached: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let classes = conjugacy_classes(&elements, &index, generators);
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
            classes,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Conjugacy classes sorted by (size, representative image list).
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// Index of the class containing element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(&i))
            .expect("every element lies in a class")
    }

    /// All elements commuting with `x`.
    pub fn centralizer(&self, x: &Permutation) -> Result<Vec<usize>> {
        if !self.contains(x) {
            return Err(Error::Membership(
                "centralizer argument is not a group element".into(),
            ));
        }
        Ok((0..self.elements.len())
            .filter(|&i| self.elements[i].compose(x) == x.compose(&self.elements[i]))
            .collect())
    }

    /// Exhaustively re-checks closure under right multiplication by
    /// generators. Intended for the verification sweeps.
    pub fn verify_closed(&self) -> bool {
        self.elements.iter().all(|e| {
            self.generators
                .iter()
                .all(|g| self.index.contains_key(&e.compose(g)))
        })
    }
}

fn conjugacy_classes(
    elements: &[Permutation],
    index: &HashMap<Permutation, usize>,
    generators: &[Permutation],
) -> Vec<ConjugacyClass> {
    let n = elements.len();
    let mut assigned = vec![false; n];
    // precompute generator inverses once
    let gen_pairs: Vec<(Permutation, Permutation)> = generators
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let mut classes = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        // orbit of `start` under conjugation by generators
        let mut members = vec![start];
        assigned[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (g, g_inv) in &gen_pairs {
                let conj = g.compose(&elements[i]).compose(g_inv);
                let j = index[&conj];
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let representative = *members
            .iter()
            .min_by_key(|&&i| &elements[i])
            .expect("class is nonempty");
        classes.push(ConjugacyClass {
            representative,
            members,
        });
    }
    classes.sort_by(|a, b| {
        (a.members.len(), &elements[a.representative])
            .cmp(&(b.members.len(), &elements[b.representative]))
    });
    classes
}

/// Orbit partition of `[0, degree)` under the listed permutations, each orbit
/// sorted, orbits ordered by minimum element.
pub fn orbits(generators: &[Permutation], degree: usize) -> Result<Vec<Vec<usize>>> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::Structural(
                "generator degree does not match the point count".into(),
            ));
        }
    }
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    Ok(out)
}

/// Result of checking a group against the generalized dihedral presentation
/// `{H, s | s², s h s⁻¹ = h⁻¹}` with caller-supplied candidate generators.
///
/// When the reflection candidate is the identity the group degenerates to the
/// abelian part alone and only the abelian presentation is checked.
#[derive(Debug, Clone)]
pub struct PresentationCertificate {
    pub abelian_part: GroupSpec,
    pub abelian_generators: Vec<Permutation>,
    pub reflection: Permutation,
    pub degenerate: bool,
    pub verified: bool,
    /// First failing relation when `verified` is false.
    pub failure: Option<String>,
}

/// Checks every presentation relation, the generator orders against
/// `expected`'s moduli, and the counting argument `|g| = 2·|expected|`
/// (`|g| = |expected|` in the degenerate identity-reflection case).
pub fn certify_generalized_dihedral(
    group: &PermGroup,
    expected: &GroupSpec,
    abelian_generators: &[Permutation],
    reflection: &Permutation,
) -> Result<PresentationCertificate> {
    if abelian_generators.len() != expected.rank() {
        return Err(Error::Structural(format!(
            "{} abelian generators supplied for a rank-{} spec",
            abelian_generators.len(),
            expected.rank()
        )));
    }
    for g in abelian_generators.iter().chain(std::iter::once(reflection)) {
        if g.degree() != group.degree() {
            return Err(Error::Structural(
                "candidate generator degree does not match the group".into(),
            ));
        }
    }

    let degenerate = reflection.is_identity();
    let fail = |msg: String| PresentationCertificate {
        abelian_part: expected.clone(),
        abelian_generators: abelian_generators.to_vec(),
        reflection: reflection.clone(),
        degenerate,
        verified: false,
        failure: Some(msg),
    };

    for (i, g) in abelian_generators.iter().enumerate() {
        if !group.contains(g) {
            return Ok(fail(format!("abelian generator {i} is not in the group")));
        }
        let want = expected.moduli()[i];
        let got = g.order();
        if got != want {
            return Ok(fail(format!(
                "abelian generator {i} has order {got}, expected {want}"
            )));
        }
    }
    if !group.contains(reflection) {
        return Ok(fail("reflection candidate is not in the group".into()));
    }
    for i in 0..abelian_generators.len() {
        for j in (i + 1)..abelian_generators.len() {
            let ab = abelian_generators[i].compose(&abelian_generators[j]);
            let ba = abelian_generators[j].compose(&abelian_generators[i]);
            if ab != ba {
                return Ok(fail(format!("abelian generators {i} and {j} do not commute")));
            }
        }
    }

    if !degenerate {
        if !reflection.compose(reflection).is_identity() {
            return Ok(fail("reflection squared is not the identity".into()));
        }
        let r_inv = reflection.inverse();
        for (i, g) in abelian_generators.iter().enumerate() {
            let conj = reflection.compose(g).compose(&r_inv);
            if conj != g.inverse() {
                return Ok(fail(format!(
                    "reflection does not invert abelian generator {i}"
                )));
            }
        }
    }

    // Enumerate every product h·sᵉ over the expected mixed radix and check
    // pairwise distinctness plus exhaustion of the group.
    let copies = if degenerate { 1 } else { 2 };
    let expected_order = expected.order() as usize * copies;
    if group.order() != expected_order {
        return Ok(fail(format!(
            "group has order {}, presentation predicts {}",
            group.order(),
            expected_order
        )));
    }
    let mut seen: HashMap<Permutation, (usize, usize)> = HashMap::new();
    for (idx, h) in expected.elements().iter().enumerate() {
        let mut word = Permutation::identity(group.degree());
        for (i, &c) in h.coords().iter().enumerate() {
            word = abelian_generators[i].pow(c).compose(&word);
        }
        for flip in 0..copies {
            let full = if flip == 0 {
                word.clone()
            } else {
                word.compose(reflection)
            };
            if let Some(&(prev_idx, prev_flip)) = seen.get(&full) {
                return Ok(fail(format!(
                    "products collide: element {idx} (flip {flip}) equals element {prev_idx} (flip {prev_flip})"
                )));
            }
            if !group.contains(&full) {
                return Ok(fail(format!("product {idx} (flip {flip}) escapes the group")));
            }
            seen.insert(full, (idx, flip));
        }
    }
    debug_assert_eq!(seen.len(), group.order());

    Ok(PresentationCertificate {
        abelian_part: expected.clone(),
        abelian_generators: abelian_generators.to_vec(),
        reflection: reflection.clone(),
        degenerate,
        verified: true,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::Quandle;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_rightmost_first() {
        // f = (0 1), g = (1 2); (f ∘ g)(1) = f(2) = 2
        let f = perm(&[1, 0, 2]);
        let g = perm(&[0, 2, 1]);
        assert_eq!(f.compose(&g).images(), &[1, 2, 0]);
    }

    #[test]
    fn inverse_and_order() {
        let p = perm(&[1, 2, 0, 4, 3]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert_eq!(p.pow(6), Permutation::identity(5));
        assert_eq!(p.pow(1), p);
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }

    fn right_maps(q: &Quandle) -> Vec<Permutation> {
        (0..q.size()).map(|j| q.right_map(j).unwrap()).collect()
    }

    #[test]
    fn closure_of_odd_dihedral_quandle() {
        // brute-force cross-check: |Inn(takasaki([3]))| = |Dih(Z_3)| = 6
        let q = Quandle::takasaki(&GroupSpec::parse("3").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.verify_closed());
    }

    #[test]
    fn closure_of_identity_only() {
        let g = PermGroup::closure(&[Permutation::identity(4)], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn closure_of_even_dihedral_quandle() {
        // 2G = Z_3 for G = Z_6, so |Inn| = 2·3 = 6
        let q = Quandle::takasaki(&GroupSpec::parse("6").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let q = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        let err = PermGroup::closure(&right_maps(&q), 4).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { cap: 4, .. }), "{err}");
    }

    #[test]
    fn orbit_examples() {
        let q4 = Quandle::takasaki(&GroupSpec::parse("4").unwrap()).unwrap();
        assert_eq!(
            orbits(&right_maps(&q4), 4).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
        let q5 = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        assert_eq!(orbits(&right_maps(&q5), 5).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let q = Quandle::takasaki(&GroupSpec::parse("4x6x3").unwrap()).unwrap();
        let orbs = orbits(&right_maps(&q), 72).unwrap();
        assert_eq!(orbs.len(), 4);
        assert!(orbs.iter().all(|o| o.len() == 18));
    }

    #[test]
    fn class_sizes_of_odd_inn() {
        // Dih(Z_5) has (|H|+3)/2 = 4 classes of sizes 1, 2, 2, 5
        let q = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        assert_eq!(g.class_sizes(), vec![1, 2, 2, 5]);
        let total: usize = g.class_sizes().iter().sum();
        assert_eq!(total, g.order());
        for c in g.classes() {
            assert_eq!(g.order() % c.members.len(), 0);
        }
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let q = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        let z = g.centralizer(&Permutation::identity(5)).unwrap();
        assert_eq!(z.len(), g.order());
    }

    #[test]
    fn centralizer_of_reflection_in_odd_case() {
        // k = 0 for Dih(Z_5): |C(s)| = 2^{0+1} = 2
        let q = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        let s = q.right_map(0).unwrap();
        assert_eq!(g.centralizer(&s).unwrap().len(), 2);
    }

    #[test]
    fn centralizer_rejects_non_members() {
        let q = Quandle::takasaki(&GroupSpec::parse("5").unwrap()).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        // a transposition fixes 3 points, so it is neither a translation nor
        // a reflection of the dihedral action
        let outsider = perm(&[1, 0, 2, 3, 4]);
        assert!(g.centralizer(&outsider).is_err());
    }

    #[test]
    fn certify_inn_of_odd_takasaki() {
        let spec = GroupSpec::parse("5").unwrap();
        let q = Quandle::takasaki(&spec).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        let s = q.right_map(0).unwrap();
        let a = q.right_map(q.takasaki_index(&[1]).unwrap()).unwrap().compose(&s);
        let cert =
            certify_generalized_dihedral(&g, spec.double_subgroup().source(), &[a], &s).unwrap();
        assert!(cert.verified, "{:?}", cert.failure);
        assert!(!cert.degenerate);
        assert_eq!(cert.reflection.order(), 2);
    }

    #[test]
    fn certify_degenerate_trivial_quandle() {
        let spec = GroupSpec::parse("2x2").unwrap();
        let q = Quandle::takasaki(&spec).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        assert_eq!(g.order(), 1);
        let s = q.right_map(0).unwrap();
        assert!(s.is_identity());
        let gens: Vec<Permutation> = (0..2)
            .map(|i| {
                q.right_map(q.takasaki_index(&[[1, 0], [0, 1]][i]).unwrap())
                    .unwrap()
                    .compose(&s)
            })
            .collect();
        let expected = GroupSpec::new(vec![1, 1]).unwrap();
        let cert = certify_generalized_dihedral(&g, &expected, &gens, &s).unwrap();
        assert!(cert.verified, "{:?}", cert.failure);
        assert!(cert.degenerate);
    }

    #[test]
    fn certify_restricted_special_case_orbit() {
        // Inn(X_0) of takasaki([2,4]) is Z_2 with identity reflection
        let spec = GroupSpec::parse("2x4").unwrap();
        let q = Quandle::takasaki(&spec).unwrap();
        let all = orbits(&right_maps(&q), 8).unwrap();
        let x0 = &all[0];
        let restricted: Vec<Permutation> = (0..q.size())
            .map(|j| q.right_map(j).unwrap().restrict(x0).unwrap())
            .collect();
        let g = PermGroup::closure(&restricted, 100).unwrap();
        assert_eq!(g.order(), 2);
        let s = q.right_map(0).unwrap().restrict(x0).unwrap();
        assert!(s.is_identity());
        // generator of order 2 comes from the Z_4 coordinate
        let t = q
            .right_map(q.takasaki_index(&[0, 1]).unwrap())
            .unwrap()
            .restrict(x0)
            .unwrap()
            .compose(&s);
        let expected = GroupSpec::new(vec![2]).unwrap();
        let cert = certify_generalized_dihedral(&g, &expected, &[t], &s).unwrap();
        assert!(cert.verified, "{:?}", cert.failure);
        assert!(cert.degenerate);
    }

    #[test]
    fn certify_reports_failed_relations() {
        let spec = GroupSpec::parse("5").unwrap();
        let q = Quandle::takasaki(&spec).unwrap();
        let g = PermGroup::closure(&right_maps(&q), 100).unwrap();
        let s = q.right_map(0).unwrap();
        let a = q.right_map(1).unwrap().compose(&s);
        // wrong expected order
        let wrong = GroupSpec::new(vec![7]).unwrap();
        let cert = certify_generalized_dihedral(&g, &wrong, &[a], &s).unwrap();
        assert!(!cert.verified);
        assert!(cert.failure.is_some());
    }

    #[test]
    fn restrict_rejects_non_invariant_sets() {
        let p = perm(&[1, 2, 0]);
        assert!(p.restrict(&[0, 1]).is_err());
    }

    #[test]
    fn cycle_string_formats() {
        assert_eq!(Permutation::identity(3).cycle_string(), "()");
        assert_eq!(perm(&[0, 3, 2, 1]).cycle_string(), "(1 3)");
    }
}
