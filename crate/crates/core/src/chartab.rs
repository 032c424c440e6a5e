//! Irreducible character tables.
//!
//! For `Dih(H)` with `H` not an elementary abelian 2-group, the table is
//! assembled in closed form from the linear characters of `H`: each
//! self-conjugate (±1-valued) character extends two ways (`s ↦ ±1`), giving
//! `2^{k+1}` linear characters, and each conjugate pair `{φ, φ̄}` induces one
//! degree-2 character with values `φ(h) + φ(−h) = 2cos(2π Σ t_i m_i / n_i)`
//! on `H` and exactly 0 on the reflection coset. Elementary abelian 2-groups
//! get their plain ±1 table.
//!
//! [`brute_force_dihedral_table`] rebuilds the same table by a different
//! route — conjugacy classes from the regular permutation action, characters
//! by complex induction and exhaustive homomorphism splitting — and is the
//! oracle the closed form is checked against.

use num_complex::Complex64;

use crate::abelian::{gcd, GroupElement, GroupSpec};
use crate::error::Error;
use crate::gdh::{self, DihElement};
use crate::Result;

/// Kind of an irreducible character of the identified group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrrepKind {
    /// Linear, reflection ↦ +1 (includes the trivial character).
    LinearPlus,
    /// Linear, reflection ↦ −1 (the sign character family).
    LinearMinus,
    /// Induced from a conjugate pair of characters of `H`.
    DegreeTwo,
}

/// An irreducible character, labelled by an exponent tuple of the abelian
/// part. Degree-2 labels are the lexicographically smaller member of the
/// conjugate pair `{t, −t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    pub kind: IrrepKind,
    pub label: Vec<u64>,
}

impl Irrep {
    pub fn degree(&self) -> usize {
        match self.kind {
            IrrepKind::DegreeTwo => 2,
            _ => 1,
        }
    }

    pub fn display(&self) -> String {
        let label: Vec<String> = self.label.iter().map(|c| c.to_string()).collect();
        let label = label.join(",");
        match self.kind {
            IrrepKind::LinearPlus => format!("lin+({label})"),
            IrrepKind::LinearMinus => format!("lin-({label})"),
            IrrepKind::DegreeTwo => format!("deg2({label})"),
        }
    }
}

/// One conjugacy class of the modelled group.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub representative: DihElement,
    pub size: usize,
}

/// A complete irreducible character table with real values.
///
/// Values known exact (±1, ±2, 0 and the rational-cosine cases) are stored as
/// exact integers promoted to `f64`; general degree-2 entries are
/// double-precision cosines.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    base: GroupSpec,
    dihedral: bool,
    group_order: u64,
    classes: Vec<ClassInfo>,
    irreps: Vec<Irrep>,
    values: Vec<Vec<f64>>,
}

/// An unordered conjugate pair of exponent tuples `{t, −t}`.
pub type ConjugatePair = (Vec<u64>, Vec<u64>);

/// Splits the `|H|` linear characters of `H` (as exponent tuples) into the
/// self-conjugate ones (all values ±1, count `2^k`) and unordered conjugate
/// pairs `{t, −t}` (count `(|H| − 2^k)/2`).
pub fn character_pairs(spec: &GroupSpec) -> (Vec<Vec<u64>>, Vec<ConjugatePair>) {
    let mut real = Vec::new();
    let mut pairs = Vec::new();
    for t in spec.elements() {
        let neg = spec.neg(&t).expect("conforming element");
        if t == neg {
            real.push(t.coords().to_vec());
        } else if t < neg {
            pairs.push((t.coords().to_vec(), neg.coords().to_vec()));
        }
    }
    (real, pairs)
}

/// ±1 value of the self-conjugate character `t` at `h`.
fn real_character_value(spec: &GroupSpec, t: &[u64], h: &[u64]) -> i64 {
    let mut parity = 0u64;
    for ((&ti, &hi), &n) in t.iter().zip(h).zip(spec.moduli()) {
        if n.is_multiple_of(2) && ti == n / 2 {
            parity += hi;
        }
    }
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `2cos(2π Σ t_i h_i / n_i)`, exact when the reduced angle denominator is in
/// {1, 2, 3, 4, 6} (the only rational cosine cases).
fn degree_two_value(spec: &GroupSpec, t: &[u64], h: &[u64]) -> f64 {
    let mut den: u64 = 1;
    for &n in spec.moduli() {
        den = crate::abelian::lcm(den, n);
    }
    let mut num: u64 = 0;
    for ((&ti, &hi), &n) in t.iter().zip(h).zip(spec.moduli()) {
        let term = ((ti % n) as u128 * (hi % n) as u128 % n as u128) * (den / n) as u128;
        num = ((num as u128 + term) % den as u128) as u64;
    }
    let g = gcd(num.max(1), den);
    let (p, q) = if num == 0 { (0, 1) } else { (num / g, den / g) };
    match (q, p) {
        (1, _) => 2.0,
        (2, _) => -2.0,
        (3, _) => -1.0,
        (4, _) => 0.0,
        (6, _) => 1.0,
        _ => 2.0 * (2.0 * std::f64::consts::PI * p as f64 / q as f64).cos(),
    }
}

/// Reflection-coset class representatives: one per coset of `2H` in `H`,
/// with coordinates in {0, 1} at even moduli and 0 at odd moduli, in
/// lexicographic order (so the class of `s` itself comes first).
fn reflection_coset_reps(spec: &GroupSpec) -> Vec<GroupElement> {
    let mut reps = vec![vec![]];
    for &n in spec.moduli() {
        let choices: &[u64] = if n % 2 == 0 { &[0, 1] } else { &[0] };
        let mut next = Vec::with_capacity(reps.len() * choices.len());
        for r in &reps {
            for &c in choices {
                let mut r2 = r.clone();
                r2.push(c);
                next.push(r2);
            }
        }
        reps = next;
    }
    reps.into_iter()
        .map(|coords| spec.element(&coords).expect("conforming coset rep"))
        .collect()
}

impl CharacterTable {
    /// The table of `Dih(H)` via Clifford theory of the index-2 subgroup.
    ///
    /// Rejects elementary abelian 2-groups, where `Dih(H)` degenerates to an
    /// abelian group; use [`CharacterTable::build_elementary`] there.
    pub fn build_dihedral(spec: &GroupSpec) -> Result<CharacterTable> {
        if spec.is_elementary_two() {
            return Err(Error::Validation(format!(
                "Dih({spec}) is abelian (elementary 2-group); build the elementary table instead"
            )));
        }
        let order = spec.order();
        let k = spec.even_count() as u32;

        // classes: identity, then {h, −h} by lex representative, then the
        // 2^k reflection cosets
        let mut classes = vec![ClassInfo {
            representative: gdh::identity(spec),
            size: 1,
        }];
        for h in spec.elements().into_iter().skip(1) {
            let neg = spec.neg(&h)?;
            if h <= neg {
                classes.push(ClassInfo {
                    size: if h == neg { 1 } else { 2 },
                    representative: DihElement::plain(h),
                });
            }
        }
        let coset_size = (order >> k) as usize;
        for rep in reflection_coset_reps(spec) {
            classes.push(ClassInfo {
                representative: DihElement::reflected(rep),
                size: coset_size,
            });
        }

        let (real_labels, pair_labels) = character_pairs(spec);
        let mut irreps = Vec::new();
        for t in &real_labels {
            irreps.push(Irrep {
                kind: IrrepKind::LinearPlus,
                label: t.clone(),
            });
        }
        for t in &real_labels {
            irreps.push(Irrep {
                kind: IrrepKind::LinearMinus,
                label: t.clone(),
            });
        }
        for (t, _) in &pair_labels {
            irreps.push(Irrep {
                kind: IrrepKind::DegreeTwo,
                label: t.clone(),
            });
        }
        if irreps.len() != classes.len() {
            return Err(Error::Internal(format!(
                "Dih({spec}): {} irreps vs {} classes",
                irreps.len(),
                classes.len()
            )));
        }

        let mut values = Vec::with_capacity(irreps.len());
        for irrep in &irreps {
            let mut row = Vec::with_capacity(classes.len());
            for class in &classes {
                let h = class.representative.h.coords();
                let v = match irrep.kind {
                    IrrepKind::LinearPlus | IrrepKind::LinearMinus => {
                        let sign = if class.representative.flip
                            && irrep.kind == IrrepKind::LinearMinus
                        {
                            -1
                        } else {
                            1
                        };
                        (sign * real_character_value(spec, &irrep.label, h)) as f64
                    }
                    IrrepKind::DegreeTwo => {
                        if class.representative.flip {
                            0.0
                        } else {
                            degree_two_value(spec, &irrep.label, h)
                        }
                    }
                };
                row.push(v);
            }
            values.push(row);
        }

        Ok(CharacterTable {
            base: spec.clone(),
            dihedral: true,
            group_order: 2 * order,
            classes,
            irreps,
            values,
        })
    }

    /// The ±1 table of an elementary abelian 2-group (all moduli in {1, 2});
    /// every class is a singleton.
    pub fn build_elementary(spec: &GroupSpec) -> Result<CharacterTable> {
        if !spec.is_elementary_two() {
            return Err(Error::Validation(format!(
                "{spec} is not an elementary abelian 2-group"
            )));
        }
        let classes: Vec<ClassInfo> = spec
            .elements()
            .into_iter()
            .map(|h| ClassInfo {
                representative: DihElement::plain(h),
                size: 1,
            })
            .collect();
        let irreps: Vec<Irrep> = spec
            .elements()
            .into_iter()
            .map(|t| Irrep {
                kind: IrrepKind::LinearPlus,
                label: t.coords().to_vec(),
            })
            .collect();
        let values = irreps
            .iter()
            .map(|irrep| {
                classes
                    .iter()
                    .map(|c| {
                        real_character_value(spec, &irrep.label, c.representative.h.coords()) as f64
                    })
                    .collect()
            })
            .collect();
        Ok(CharacterTable {
            base: spec.clone(),
            dihedral: false,
            group_order: spec.order(),
            classes,
            irreps,
            values,
        })
    }

    /// Dispatches on the spec: elementary 2-groups get the abelian table,
    /// everything else the dihedral table.
    pub fn for_group(spec: &GroupSpec) -> Result<CharacterTable> {
        if spec.is_elementary_two() {
            CharacterTable::build_elementary(spec)
        } else {
            CharacterTable::build_dihedral(spec)
        }
    }

    pub fn base_spec(&self) -> &GroupSpec {
        &self.base
    }

    /// True for `Dih(H)` tables, false for elementary abelian ones.
    pub fn is_dihedral(&self) -> bool {
        self.dihedral
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn value(&self, irrep: usize, class: usize) -> f64 {
        self.values[irrep][class]
    }

    /// Index of the conjugacy class containing `e`.
    pub fn class_index_of(&self, e: &DihElement) -> Result<usize> {
        if e.flip {
            if !self.dihedral {
                return Err(Error::Membership(
                    "elementary table has no reflection classes".into(),
                ));
            }
            // reflection classes are the cosets of 2H: match parities at
            // even moduli
            for (i, class) in self.classes.iter().enumerate() {
                if !class.representative.flip {
                    continue;
                }
                let same_coset = class
                    .representative
                    .h
                    .coords()
                    .iter()
                    .zip(e.h.coords())
                    .zip(self.base.moduli())
                    .all(|((&a, &b), &n)| n % 2 != 0 || a % 2 == b % 2);
                if same_coset {
                    return Ok(i);
                }
            }
        } else {
            let neg = self.base.neg(&e.h)?;
            for (i, class) in self.classes.iter().enumerate() {
                if class.representative.flip {
                    continue;
                }
                if class.representative.h == e.h || class.representative.h == neg {
                    return Ok(i);
                }
            }
        }
        Err(Error::Membership(format!(
            "element {} not found in any class",
            e.display()
        )))
    }

    /// Full member list of a class (representatives included).
    pub fn class_members(&self, class: usize) -> Result<Vec<DihElement>> {
        let info = self
            .classes
            .get(class)
            .ok_or(Error::IndexOutOfRange {
                index: class,
                size: self.classes.len(),
            })?;
        let rep = &info.representative;
        let mut members = if rep.flip {
            // coset (rep + 2H)·s
            let mut out: Vec<DihElement> = self
                .base
                .elements()
                .iter()
                .map(|g| {
                    let shift = self.base.double(g)?;
                    Ok(DihElement::reflected(self.base.add(&rep.h, &shift)?))
                })
                .collect::<Result<_>>()?;
            out.sort();
            out.dedup();
            out
        } else {
            let mut out = vec![rep.clone(), DihElement::plain(self.base.neg(&rep.h)?)];
            out.sort();
            out.dedup();
            out
        };
        members.sort();
        if members.len() != info.size {
            return Err(Error::Internal(format!(
                "class {class} enumerated {} members, recorded size {}",
                members.len(),
                info.size
            )));
        }
        Ok(members)
    }

    /// `⟨a, b⟩ = (1/|G|) Σ_classes size · a · b` (all values real here).
    pub fn inner_product(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        if a.len() != self.classes.len() || b.len() != self.classes.len() {
            return Err(Error::Structural(format!(
                "class functions must have {} entries",
                self.classes.len()
            )));
        }
        let sum: f64 = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(c, (&x, &y))| c.size as f64 * x * y)
            .sum();
        Ok(sum / self.group_order as f64)
    }

    /// `Σ (deg χ)²`, which must equal the group order.
    pub fn sum_of_degree_squares(&self) -> u64 {
        self.irreps.iter().map(|r| (r.degree() * r.degree()) as u64).sum()
    }

    /// Max deviation of `⟨χ_i, χ_j⟩` from `δ_ij` over all row pairs.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.irreps.len() {
            for j in 0..self.irreps.len() {
                let ip = self
                    .inner_product(&self.values[i], &self.values[j])
                    .expect("rows are class functions");
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - expected).abs());
            }
        }
        worst
    }

    /// Max deviation of `Σ_χ χ(C_i)χ(C_j)` from `δ_ij·|G|/|C_i|`.
    pub fn column_orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.classes.len() {
            for j in 0..self.classes.len() {
                let sum: f64 = self.values.iter().map(|row| row[i] * row[j]).sum();
                let expected = if i == j {
                    self.group_order as f64 / self.classes[i].size as f64
                } else {
                    0.0
                };
                worst = worst.max((sum - expected).abs());
            }
        }
        worst
    }

    /// Plain-text grid of the table.
    pub fn render_text(&self) -> String {
        let mut header: Vec<String> = vec!["".into()];
        for c in &self.classes {
            header.push(format!("{}[{}]", c.representative.display(), c.size));
        }
        let mut rows: Vec<Vec<String>> = vec![header];
        for (irrep, vals) in self.irreps.iter().zip(&self.values) {
            let mut row = vec![irrep.display()];
            for &v in vals {
                if (v - v.round()).abs() < 1e-12 {
                    row.push(format!("{}", v.round() as i64));
                } else {
                    row.push(format!("{v:.6}"));
                }
            }
            rows.push(row);
        }
        let cols = rows[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in rows {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:>width$}", width = widths[c]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// A character table computed by brute force, aligned with the classes of the
/// regular permutation action (ordering unrelated to the closed form).
#[derive(Debug)]
pub struct BruteTable {
    pub classes: Vec<Vec<DihElement>>,
    pub rows: Vec<Vec<f64>>,
}

/// Value of the linear character `t` of `H` as a complex number.
fn phi_complex(spec: &GroupSpec, t: &[u64], h: &[u64]) -> Complex64 {
    let mut frac = 0.0f64;
    for ((&ti, &hi), &n) in t.iter().zip(h).zip(spec.moduli()) {
        frac += ((ti % n) * (hi % n) % n) as f64 / n as f64;
    }
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * frac)
}

/// Rebuilds the irreducible character table of `Dih(H)` without the closed
/// form: conjugacy classes come from the regular permutation action, each of
/// the `|H|` characters of `H` is induced up by the textbook coset formula
/// using explicit group arithmetic, equivalent induced characters are
/// deduplicated, and the reducible ones (norm 2) are split by exhaustively
/// verifying the two sign extensions as homomorphisms.
pub fn brute_force_dihedral_table(spec: &GroupSpec) -> Result<BruteTable> {
    let action = gdh::regular_action(spec)?;
    let classes = action.classes();
    let class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let group_order = 2 * spec.order();
    let srefl = DihElement::reflected(spec.identity());

    // induced character of each exponent tuple, evaluated per class
    let tuples: Vec<Vec<u64>> = spec
        .elements()
        .into_iter()
        .map(|e| e.coords().to_vec())
        .collect();
    let mut induced: Vec<Vec<Complex64>> = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut row = Vec::with_capacity(classes.len());
        for class in &classes {
            let g = &class[0];
            let mut value = Complex64::new(0.0, 0.0);
            // coset representatives {1, s}: χ(g) = Σ_x [x⁻¹gx ∈ H]·φ(x⁻¹gx)
            for x in [gdh::identity(spec), srefl.clone()] {
                let x_inv = gdh::inverse(spec, &x)?;
                let conj = gdh::multiply(spec, &x_inv, &gdh::multiply(spec, g, &x)?)?;
                if !conj.flip {
                    value += phi_complex(spec, t, conj.h.coords());
                }
            }
            row.push(value);
        }
        induced.push(row);
    }

    // deduplicate equivalent induced characters
    let mut kept: Vec<(Vec<u64>, Vec<Complex64>)> = Vec::new();
    'next: for (t, row) in tuples.iter().zip(&induced) {
        for (_, seen) in &kept {
            if row
                .iter()
                .zip(seen.iter())
                .all(|(a, b)| (a - b).norm() < 1e-9)
            {
                continue 'next;
            }
        }
        kept.push((t.clone(), row.clone()));
    }

    let all = gdh::enumerate(spec);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (t, row) in &kept {
        let norm: f64 = row
            .iter()
            .zip(&class_sizes)
            .map(|(v, &s)| s as f64 * v.norm_sqr())
            .sum::<f64>()
            / group_order as f64;
        if (norm - 1.0).abs() < 1e-8 {
            // irreducible induced character; values must already be real
            let mut real_row = Vec::with_capacity(row.len());
            for v in row {
                if v.im.abs() > 1e-9 {
                    return Err(Error::Internal(format!(
                        "irreducible induced character of Dih({spec}) has imaginary part {}",
                        v.im
                    )));
                }
                real_row.push(v.re);
            }
            rows.push(real_row);
        } else if (norm - 2.0).abs() < 1e-8 {
            // splits into the two sign extensions; verify each candidate is
            // multiplicative over every pair of group elements
            for sign in [1.0f64, -1.0] {
                let theta = |g: &DihElement| -> f64 {
                    let base = phi_complex(spec, t, g.h.coords()).re;
                    if g.flip {
                        sign * base
                    } else {
                        base
                    }
                };
                for a in &all {
                    for b in &all {
                        let ab = gdh::multiply(spec, a, b)?;
                        if (theta(&ab) - theta(a) * theta(b)).abs() > 1e-9 {
                            return Err(Error::Internal(format!(
                                "sign extension of φ_{t:?} (s ↦ {sign}) fails to be a homomorphism on Dih({spec})"
                            )));
                        }
                    }
                }
                let mut real_row = Vec::with_capacity(classes.len());
                for class in &classes {
                    let v = theta(&class[0]);
                    for member in class {
                        if (theta(member) - v).abs() > 1e-9 {
                            return Err(Error::Internal(
                                "linear character not constant on a brute-force class".into(),
                            ));
                        }
                    }
                    real_row.push(v);
                }
                rows.push(real_row);
            }
        } else {
            return Err(Error::Internal(format!(
                "induced character of Dih({spec}) has norm {norm}, expected 1 or 2"
            )));
        }
    }

    if rows.len() != classes.len() {
        return Err(Error::Internal(format!(
            "brute-force table of Dih({spec}) has {} rows for {} classes",
            rows.len(),
            classes.len()
        )));
    }
    let id_class = classes
        .iter()
        .position(|c| c.contains(&gdh::identity(spec)))
        .ok_or_else(|| Error::Internal("identity class missing from brute-force classes".into()))?;
    let degree_sq: f64 = rows.iter().map(|r| r[id_class] * r[id_class]).sum();
    if (degree_sq - group_order as f64).abs() > 1e-6 {
        return Err(Error::Internal(format!(
            "brute-force degrees square-sum to {degree_sq}, expected {group_order}"
        )));
    }

    Ok(BruteTable { classes, rows })
}

/// Matches a closed-form table against a brute-force one and returns the
/// largest entry deviation. Classes are aligned through their members, rows
/// through a greedy unique matching; any structural mismatch is an error.
pub fn compare_with_brute(table: &CharacterTable, brute: &BruteTable) -> Result<f64> {
    if brute.classes.len() != table.classes().len() {
        return Err(Error::Internal(format!(
            "class counts differ: brute {}, closed form {}",
            brute.classes.len(),
            table.classes().len()
        )));
    }
    // map each brute class to the closed-form class containing its first
    // member; the map must be a bijection with matching sizes
    let mut class_map = Vec::with_capacity(brute.classes.len());
    let mut hit = vec![false; table.classes().len()];
    for bc in &brute.classes {
        let idx = table.class_index_of(&bc[0])?;
        if hit[idx] {
            return Err(Error::Internal("two brute classes map to one closed-form class".into()));
        }
        if table.classes()[idx].size != bc.len() {
            return Err(Error::Internal(format!(
                "class size mismatch: brute {} vs closed form {}",
                bc.len(),
                table.classes()[idx].size
            )));
        }
        hit[idx] = true;
        class_map.push(idx);
    }

    let mut used = vec![false; brute.rows.len()];
    let mut worst: f64 = 0.0;
    for closed_row in table.values() {
        let mut best: Option<(usize, f64)> = None;
        for (bi, brute_row) in brute.rows.iter().enumerate() {
            if used[bi] {
                continue;
            }
            let dev = brute_row
                .iter()
                .enumerate()
                .map(|(ci, &v)| (v - closed_row[class_map[ci]]).abs())
                .fold(0.0f64, f64::max);
            if best.is_none_or(|(_, d)| dev < d) {
                best = Some((bi, dev));
            }
        }
        let (bi, dev) = best.ok_or_else(|| Error::Internal("ran out of brute-force rows".into()))?;
        if dev > 1e-6 {
            return Err(Error::Internal(format!(
                "no brute-force row matches a closed-form row (best deviation {dev:.3e})"
            )));
        }
        used[bi] = true;
        worst = worst.max(dev);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> GroupSpec {
        GroupSpec::parse(text).unwrap()
    }

    #[test]
    fn character_pairs_of_z5() {
        let (real, pairs) = character_pairs(&spec("5"));
        assert_eq!(real, vec![vec![0]]);
        assert_eq!(pairs, vec![(vec![1], vec![4]), (vec![2], vec![3])]);
    }

    #[test]
    fn character_pairs_of_z2_x_z6() {
        let (real, pairs) = character_pairs(&spec("2x6"));
        assert_eq!(real.len(), 4);
        assert_eq!(pairs.len(), 4);
        for (a, b) in &pairs {
            let s = spec("2x6");
            let ea = s.element(a).unwrap();
            assert_eq!(s.neg(&ea).unwrap().coords(), &b[..]);
        }
    }

    #[test]
    fn character_pairs_of_z2() {
        let (real, pairs) = character_pairs(&spec("2"));
        assert_eq!(real.len(), 2);
        assert!(pairs.is_empty());
    }

    #[test]
    fn dihedral_table_of_z5() {
        let t = CharacterTable::build_dihedral(&spec("5")).unwrap();
        assert_eq!(t.group_order(), 10);
        let degrees: Vec<usize> = t.irreps().iter().map(|r| r.degree()).collect();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
        assert_eq!(t.sum_of_degree_squares(), 10);
        // classes: 1, {1,4}, {2,3}, reflections
        assert_eq!(t.classes().len(), 4);
        let sizes: Vec<usize> = t.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 2, 5]);
        // χ_ψ1 at class of r: 2cos(2π/5)
        let psi1 = t.value(2, 1);
        assert!((psi1 - 0.618034).abs() < 1e-6, "got {psi1}");
        assert!((psi1 - 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
        // reflection column of degree-2 rows is exactly zero
        assert_eq!(t.value(2, 3), 0.0);
        assert_eq!(t.value(3, 3), 0.0);
    }

    #[test]
    fn dihedral_table_of_z2_x_z6() {
        let t = CharacterTable::build_dihedral(&spec("2x6")).unwrap();
        let linear = t
            .irreps()
            .iter()
            .filter(|r| r.degree() == 1)
            .count();
        let deg2 = t.irreps().iter().filter(|r| r.degree() == 2).count();
        assert_eq!(linear, 8);
        assert_eq!(deg2, 4);
        assert_eq!(t.sum_of_degree_squares(), 24);
        assert_eq!(t.classes().len(), t.irreps().len());
    }

    #[test]
    fn dihedral_table_of_z3_has_exact_integer_entry() {
        let t = CharacterTable::build_dihedral(&spec("3")).unwrap();
        let degrees: Vec<usize> = t.irreps().iter().map(|r| r.degree()).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        // 2cos(2π/3) = −1, stored exactly
        assert_eq!(t.value(2, 1), -1.0);
    }

    #[test]
    fn dihedral_table_rejects_elementary_specs() {
        assert!(CharacterTable::build_dihedral(&spec("2x2")).is_err());
        assert!(CharacterTable::build_elementary(&spec("3")).is_err());
    }

    #[test]
    fn elementary_table_of_klein_four() {
        let t = CharacterTable::build_elementary(&spec("2x2")).unwrap();
        assert_eq!(t.classes().len(), 4);
        assert_eq!(t.irreps().len(), 4);
        for row in t.values() {
            for &v in row {
                assert!(v == 1.0 || v == -1.0);
            }
        }
        assert!(t.row_orthogonality_residual() < 1e-12);
    }

    #[test]
    fn elementary_table_of_z2_and_trivial() {
        let t = CharacterTable::build_elementary(&spec("2")).unwrap();
        assert_eq!(t.values(), &[vec![1.0, 1.0], vec![1.0, -1.0]]);
        let t1 = CharacterTable::build_elementary(&spec("1")).unwrap();
        assert_eq!(t1.values(), &[vec![1.0]]);
    }

    #[test]
    fn rows_are_orthonormal() {
        for text in ["5", "3", "2x6", "8", "4x3"] {
            let t = CharacterTable::build_dihedral(&spec(text)).unwrap();
            assert!(
                t.row_orthogonality_residual() < 1e-9,
                "row orthogonality for Dih({text})"
            );
            assert!(
                t.column_orthogonality_residual() < 1e-9,
                "column orthogonality for Dih({text})"
            );
            for row in t.values() {
                let ip = t.inner_product(row, row).unwrap();
                assert!((ip - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn inner_product_validates_lengths() {
        let t = CharacterTable::build_dihedral(&spec("5")).unwrap();
        assert!(t.inner_product(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn class_index_lookup() {
        let s = spec("2x6");
        let t = CharacterTable::build_dihedral(&s).unwrap();
        for (i, class) in t.classes().iter().enumerate() {
            for member in t.class_members(i).unwrap() {
                assert_eq!(t.class_index_of(&member).unwrap(), i);
            }
            assert_eq!(t.class_members(i).unwrap().len(), class.size);
        }
        let total: usize = t.classes().iter().map(|c| c.size).sum();
        assert_eq!(total as u64, t.group_order());
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for text in ["3", "5", "9", "2x6", "12", "2x4", "4"] {
            let s = spec(text);
            let closed = CharacterTable::build_dihedral(&s).unwrap();
            let brute = brute_force_dihedral_table(&s).unwrap();
            let residual = compare_with_brute(&closed, &brute).unwrap();
            assert!(residual < 1e-8, "Dih({text}) residual {residual:.3e}");
        }
    }

    #[test]
    fn brute_force_comparison_rejects_the_wrong_group() {
        // Dih(3x3) and Dih(9) have the same class profile but different
        // element shapes and character values
        let closed = CharacterTable::build_dihedral(&spec("9")).unwrap();
        let brute = brute_force_dihedral_table(&spec("3x3")).unwrap();
        assert!(compare_with_brute(&closed, &brute).is_err());
    }

    #[test]
    fn render_text_contains_classes_and_rows() {
        let t = CharacterTable::build_dihedral(&spec("3")).unwrap();
        let text = t.render_text();
        assert!(text.contains("lin+(0)"));
        assert!(text.contains("deg2(1)"));
        assert!(text.lines().count() == 4);
    }
}
