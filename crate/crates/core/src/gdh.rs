//! Abstract model of the generalized dihedral group `Dih(H) = H ⋊ Z_2` for a
//! finite abelian `H`, with closed-form predictions for its center,
//! centralizers, and conjugacy class profile, plus brute-force counterparts
//! used to check those predictions.
//!
//! Elements are written `h·sᵉ` as [`DihElement`] pairs; the defining relation
//! `s h s⁻¹ = h⁻¹` gives the multiplication law implemented here. When `H` is
//! an elementary abelian 2-group the whole group is abelian and the
//! non-abelian assumptions behind the formulas fail; predictions then return
//! flagged results instead of errors so batch sweeps stay robust.

use std::collections::HashMap;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::Error;
use crate::perm::{PermGroup, Permutation};
use crate::Result;

/// An element `h·sᵉ` of `Dih(H)`: `flip = false` lies in `H`, `flip = true`
/// in the reflection coset `Hs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihElement {
    pub h: GroupElement,
    pub flip: bool,
}

impl DihElement {
    pub fn plain(h: GroupElement) -> Self {
        DihElement { h, flip: false }
    }

    pub fn reflected(h: GroupElement) -> Self {
        DihElement { h, flip: true }
    }

    /// Display as `h`, `s`, or `h·s`.
    pub fn display(&self) -> String {
        match (self.flip, self.h.coords().iter().all(|&c| c == 0)) {
            (false, true) => "1".into(),
            (false, false) => self.h.display(),
            (true, true) => "s".into(),
            (true, false) => format!("{}·s", self.h.display()),
        }
    }
}

pub fn identity(spec: &GroupSpec) -> DihElement {
    DihElement::plain(spec.identity())
}

/// `(h1, 0)(h2, ε) = (h1 + h2, ε)`; `(h1, 1)(h2, ε) = (h1 − h2, 1 − ε)`.
pub fn multiply(spec: &GroupSpec, a: &DihElement, b: &DihElement) -> Result<DihElement> {
    let h = if a.flip {
        spec.sub(&a.h, &b.h)?
    } else {
        spec.add(&a.h, &b.h)?
    };
    Ok(DihElement {
        h,
        flip: a.flip ^ b.flip,
    })
}

pub fn inverse(spec: &GroupSpec, a: &DihElement) -> Result<DihElement> {
    if a.flip {
        Ok(a.clone()) // reflections are involutions: (hs)(hs) = 1
    } else {
        Ok(DihElement::plain(spec.neg(&a.h)?))
    }
}

/// All `2|H|` elements: the `H` part in enumeration order, then `Hs`.
pub fn enumerate(spec: &GroupSpec) -> Vec<DihElement> {
    let mut out = Vec::with_capacity(2 * spec.order() as usize);
    for h in spec.elements() {
        out.push(DihElement::plain(h));
    }
    for h in spec.elements() {
        out.push(DihElement::reflected(h));
    }
    out
}

/// Index of a dih element in [`enumerate`] order.
pub fn index_of(spec: &GroupSpec, e: &DihElement) -> Result<usize> {
    let base = if e.flip { spec.order() as usize } else { 0 };
    Ok(base + spec.index_of(&e.h)?)
}

/// Center prediction: `{h : h_j ∈ {0, n_j/2} at even moduli, h_j = 0 at odd
/// moduli}`, of size `2^k`. `whole_group` flags the degenerate abelian case
/// (`H` elementary 2-group), where the center is all of `Dih(H)` instead.
#[derive(Debug, Clone)]
pub struct CenterPrediction {
    pub elements: Vec<DihElement>,
    pub whole_group: bool,
}

pub fn predicted_center(spec: &GroupSpec) -> CenterPrediction {
    let elements = spec
        .elements()
        .into_iter()
        .filter(|h| {
            h.coords()
                .iter()
                .zip(spec.moduli())
                .all(|(&c, &n)| if n % 2 == 0 { c == 0 || c == n / 2 } else { c == 0 })
        })
        .map(DihElement::plain)
        .collect();
    CenterPrediction {
        elements,
        whole_group: spec.is_elementary_two(),
    }
}

/// Class profile of `Dih(H)`: `2^k` singletons, `(|H| − 2^k)/2` pairs
/// `{h, h⁻¹}`, and `2^k` reflection classes of size `|Dih(H)|/2^{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProfile {
    pub singleton_count: u64,
    pub pair_count: u64,
    pub large_count: u64,
    pub large_size: u64,
    /// Set when `Dih(H)` is abelian and the singleton/large split collapses.
    pub abelian: bool,
}

impl ClassProfile {
    /// `1·singletons + 2·pairs + large_count·large_size`, always `2|H|`.
    pub fn total_elements(&self) -> u64 {
        self.singleton_count + 2 * self.pair_count + self.large_count * self.large_size
    }

    pub fn class_count(&self) -> u64 {
        self.singleton_count + self.pair_count + self.large_count
    }

    /// Multiset of class sizes, ascending.
    pub fn sizes(&self) -> Vec<u64> {
        let mut sizes = Vec::new();
        sizes.extend(std::iter::repeat_n(1, self.singleton_count as usize));
        sizes.extend(std::iter::repeat_n(2, self.pair_count as usize));
        sizes.extend(std::iter::repeat_n(self.large_size, self.large_count as usize));
        sizes.sort_unstable();
        sizes
    }
}

pub fn predicted_class_profile(spec: &GroupSpec) -> ClassProfile {
    let k = spec.even_count() as u32;
    let order = spec.order();
    let two_k = 1u64 << k;
    ClassProfile {
        singleton_count: two_k,
        pair_count: (order - two_k) / 2,
        large_count: two_k,
        large_size: (2 * order) >> (k + 1),
        abelian: spec.is_elementary_two(),
    }
}

/// Brute-force center by scanning commutation against every element.
pub fn brute_force_center(spec: &GroupSpec) -> Result<Vec<DihElement>> {
    let all = enumerate(spec);
    let mut out = Vec::new();
    for a in &all {
        let mut central = true;
        for b in &all {
            if multiply(spec, a, b)? != multiply(spec, b, a)? {
                central = false;
                break;
            }
        }
        if central {
            out.push(a.clone());
        }
    }
    Ok(out)
}

/// Brute-force centralizer order of `x` by direct commutation count.
pub fn centralizer_order(spec: &GroupSpec, x: &DihElement) -> Result<usize> {
    let mut count = 0;
    for g in enumerate(spec) {
        if multiply(spec, &g, x)? == multiply(spec, x, &g)? {
            count += 1;
        }
    }
    Ok(count)
}

/// The left-regular permutation action of `Dih(H)` on itself, bridging the
/// abstract model to the brute-force class machinery of [`crate::perm`].
pub struct RegularAction {
    pub spec: GroupSpec,
    pub group: PermGroup,
    /// For each permutation index in `group`, the dih element it represents.
    pub element_of: Vec<DihElement>,
}

/// Builds the regular action from the standard generators (cyclic basis
/// translations and the reflection).
pub fn regular_action(spec: &GroupSpec) -> Result<RegularAction> {
    let all = enumerate(spec);
    let index: HashMap<DihElement, usize> = all
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let left_translation = |g: &DihElement| -> Result<Permutation> {
        let mut images = Vec::with_capacity(all.len());
        for x in &all {
            images.push(index[&multiply(spec, g, x)?]);
        }
        Permutation::from_images(images)
    };
    let mut generators = Vec::new();
    for i in 0..spec.rank() {
        generators.push(left_translation(&DihElement::plain(spec.basis(i)))?);
    }
    generators.push(left_translation(&DihElement::reflected(spec.identity()))?);
    let cap = 2 * spec.order() as usize + 1;
    let group = PermGroup::closure(&generators, cap)?;
    if group.order() != 2 * spec.order() as usize {
        return Err(Error::Internal(format!(
            "regular action of Dih({spec}) closed at {} elements, expected {}",
            group.order(),
            2 * spec.order()
        )));
    }
    // L_g(1) = g recovers the element represented by each permutation
    let id_index = index[&identity(spec)];
    let element_of = group
        .elements()
        .iter()
        .map(|p| all[p.apply(id_index)].clone())
        .collect();
    Ok(RegularAction {
        spec: spec.clone(),
        group,
        element_of,
    })
}

impl RegularAction {
    /// Conjugacy classes as sets of dih elements, in the underlying
    /// [`PermGroup`] class order.
    pub fn classes(&self) -> Vec<Vec<DihElement>> {
        self.group
            .classes()
            .iter()
            .map(|c| {
                let mut members: Vec<DihElement> = c
                    .members
                    .iter()
                    .map(|&i| self.element_of[i].clone())
                    .collect();
                members.sort();
                members
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> GroupSpec {
        GroupSpec::parse(text).unwrap()
    }

    fn el(s: &GroupSpec, coords: &[u64]) -> GroupElement {
        s.element(coords).unwrap()
    }

    #[test]
    fn reflections_are_involutions() {
        let s = spec("4x6");
        for h in s.elements() {
            let r = DihElement::reflected(h);
            assert_eq!(multiply(&s, &r, &r).unwrap(), identity(&s));
        }
    }

    #[test]
    fn multiplication_law_in_dih_z5() {
        let s = spec("5");
        let a = DihElement::plain(el(&s, &[1]));
        let srefl = DihElement::reflected(el(&s, &[0]));
        assert_eq!(
            multiply(&s, &a, &srefl).unwrap(),
            DihElement::reflected(el(&s, &[1]))
        );
        // s·h = h⁻¹·s
        assert_eq!(
            multiply(&s, &srefl, &a).unwrap(),
            DihElement::reflected(el(&s, &[4]))
        );
    }

    #[test]
    fn associativity_exhaustive_small() {
        for text in ["12", "2x6", "3x4", "2x2x3"] {
            let s = spec(text);
            let all = enumerate(&s);
            for a in &all {
                for b in &all {
                    let ab = multiply(&s, a, b).unwrap();
                    for c in &all {
                        let bc = multiply(&s, b, c).unwrap();
                        assert_eq!(
                            multiply(&s, &ab, c).unwrap(),
                            multiply(&s, a, &bc).unwrap(),
                            "associativity fails in Dih({text})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_multiply_to_identity() {
        let s = spec("4x3");
        for g in enumerate(&s) {
            let inv = inverse(&s, &g).unwrap();
            assert_eq!(multiply(&s, &g, &inv).unwrap(), identity(&s));
            assert_eq!(multiply(&s, &inv, &g).unwrap(), identity(&s));
        }
    }

    #[test]
    fn predicted_center_of_z2_x_z6() {
        let s = spec("2x6");
        let center = predicted_center(&s);
        assert!(!center.whole_group);
        let got: Vec<&[u64]> = center.elements.iter().map(|e| e.h.coords()).collect();
        assert_eq!(got, vec![&[0, 0][..], &[0, 3], &[1, 0], &[1, 3]]);
        assert!(center.elements.iter().all(|e| !e.flip));
    }

    #[test]
    fn predicted_center_of_z5_is_trivial() {
        let s = spec("5");
        let center = predicted_center(&s);
        assert_eq!(center.elements, vec![identity(&s)]);
    }

    #[test]
    fn predicted_center_matches_brute_force_for_z4() {
        let s = spec("4");
        let predicted = predicted_center(&s);
        let brute = brute_force_center(&s).unwrap();
        assert_eq!(predicted.elements, brute);
        let coords: Vec<u64> = predicted.elements.iter().map(|e| e.h.coords()[0]).collect();
        assert_eq!(coords, vec![0, 2]);
    }

    #[test]
    fn center_flagged_for_elementary_two_group() {
        let s = spec("2x2");
        let center = predicted_center(&s);
        assert!(center.whole_group);
        let brute = brute_force_center(&s).unwrap();
        assert_eq!(brute.len(), 2 * s.order() as usize);
    }

    #[test]
    fn class_profile_examples() {
        let p5 = predicted_class_profile(&spec("5"));
        assert_eq!((p5.singleton_count, p5.pair_count, p5.large_count, p5.large_size), (1, 2, 1, 5));
        assert_eq!(p5.total_elements(), 10);

        let p26 = predicted_class_profile(&spec("2x6"));
        assert_eq!(
            (p26.singleton_count, p26.pair_count, p26.large_count, p26.large_size),
            (4, 4, 4, 3)
        );
        assert_eq!(p26.total_elements(), 24);
    }

    #[test]
    fn class_profile_of_z9_matches_brute_force() {
        let s = spec("9");
        let predicted = predicted_class_profile(&s);
        assert_eq!(
            (predicted.singleton_count, predicted.pair_count, predicted.large_count, predicted.large_size),
            (1, 4, 1, 9)
        );
        let action = regular_action(&s).unwrap();
        let mut brute_sizes: Vec<u64> = action
            .group
            .class_sizes()
            .iter()
            .map(|&s| s as u64)
            .collect();
        brute_sizes.sort_unstable();
        assert_eq!(brute_sizes, predicted.sizes());
    }

    #[test]
    fn regular_action_class_sizes_match_profile() {
        for text in ["5", "2x6", "4", "8", "3x3", "2x4"] {
            let s = spec(text);
            let action = regular_action(&s).unwrap();
            assert_eq!(action.group.order(), 2 * s.order() as usize);
            let mut brute: Vec<u64> =
                action.group.class_sizes().iter().map(|&v| v as u64).collect();
            brute.sort_unstable();
            assert_eq!(brute, predicted_class_profile(&s).sizes(), "Dih({text})");
        }
    }

    #[test]
    fn classes_pair_each_element_with_its_inverse() {
        let s = spec("2x6");
        let action = regular_action(&s).unwrap();
        for class in action.classes() {
            for g in &class {
                assert!(
                    class.contains(&inverse(&s, g).unwrap()),
                    "class of {} misses its inverse",
                    g.display()
                );
            }
            if !class[0].flip && class.len() <= 2 {
                // Cl(h) = {h, h⁻¹}
                let h = &class[0];
                let mut expected = vec![h.clone(), inverse(&s, h).unwrap()];
                expected.sort();
                expected.dedup();
                assert_eq!(class, expected);
            }
        }
    }

    #[test]
    fn centralizer_of_reflections_has_order_two_to_k_plus_one() {
        for text in ["5", "2x6", "4x3", "8"] {
            let s = spec(text);
            let expect = 1usize << (s.even_count() + 1);
            for h in s.elements() {
                let sh = DihElement::reflected(h);
                assert_eq!(
                    centralizer_order(&s, &sh).unwrap(),
                    expect,
                    "|C(sh)| in Dih({text})"
                );
            }
        }
    }

    #[test]
    fn dih_element_display() {
        let s = spec("4x3");
        assert_eq!(identity(&s).display(), "1");
        assert_eq!(DihElement::reflected(s.identity()).display(), "s");
        assert_eq!(DihElement::plain(el(&s, &[1, 2])).display(), "(1,2)");
        assert_eq!(DihElement::reflected(el(&s, &[1, 0])).display(), "(1,0)·s");
    }
}
