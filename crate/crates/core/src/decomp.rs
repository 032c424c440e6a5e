//! Decomposition of the quandle ring `K[T]` of a Takasaki quandle into
//! simple right ideals.
//!
//! The pipeline per orbit `X_i`: restrict every right translation to the
//! orbit, close the restricted maps into `Inn(X_i)`, certify the predicted
//! presentation (`Dih(2H)` in general, an elementary abelian 2-group in the
//! special case), compute the fixed-point character of the action against
//! the identified group's conjugacy classes, read off multiplicities by
//! character inner products, and cross-check the closed-form character and
//! summand counts. [`verify_right_ideals`] then rebuilds the isotypic
//! projectors explicitly (over `ℝ` or `ℂ`) and checks idempotency,
//! completeness, ranks, and closure under right multiplication.

use std::collections::HashSet;

use num_complex::Complex64;

use crate::abelian::GroupSpec;
use crate::chartab::{CharacterTable, IrrepKind};
use crate::error::Error;
use crate::gdh::DihElement;
use crate::matrix::{Matrix, Scalar};
use crate::perm::{self, certify_generalized_dihedral, PermGroup, Permutation, PresentationCertificate};
use crate::quandle::Quandle;
use crate::Result;

/// Which decomposition regime a group presentation falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// All moduli odd: one orbit, `K[T] = V_triv ⊕ ⊕ V_j`.
    Odd,
    /// Even order outside the special case.
    EvenGeneral,
    /// `H = Z_2^a × Z_4^b` with `b ≥ 1`: all summands one-dimensional.
    Special,
    /// Elementary abelian 2-group: the trivial quandle, identity action.
    TrivialDegenerate,
}

impl CaseTag {
    /// Case detection from the presentation's moduli, in the documented
    /// precedence order.
    pub fn detect(spec: &GroupSpec) -> CaseTag {
        if spec.is_all_odd() {
            CaseTag::Odd
        } else if spec.is_elementary_two() {
            CaseTag::TrivialDegenerate
        } else if spec.moduli().iter().all(|&n| n == 1 || n == 2 || n == 4) {
            CaseTag::Special
        } else {
            CaseTag::EvenGeneral
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Odd => "odd",
            CaseTag::EvenGeneral => "even_general",
            CaseTag::Special => "special",
            CaseTag::TrivialDegenerate => "trivial_degenerate",
        }
    }
}

/// Ground field for the projector verification arithmetic. The reported
/// decomposition shape is field-independent; only the matrix arithmetic
/// changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(&self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

/// One orbit of the quandle together with its restricted action and the
/// certified identification of the generated group.
#[derive(Debug, Clone)]
pub struct OrbitAction {
    pub orbit_id: usize,
    /// Sorted quandle indices of the orbit points.
    pub points: Vec<usize>,
    /// Binary orbit label per even component (odd components contribute 0).
    pub label: Vec<u8>,
    /// Quandle index of the orbit representative (minimum point).
    pub base_point: usize,
    /// `T_j = R_j|_orbit` for every quandle element `j`, re-indexed to
    /// positions within `points`.
    pub restricted_maps: Vec<Permutation>,
    /// The group generated by the restricted maps.
    pub inn: PermGroup,
    /// Certificate identifying `inn` with `Dih(2H)` (or its degenerate
    /// abelian form).
    pub certificate: PresentationCertificate,
    pub case_tag: CaseTag,
}

impl OrbitAction {
    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Orbit label in the `X_(0,1,0)` convention.
    pub fn label_string(&self) -> String {
        let parts: Vec<String> = self.label.iter().map(|b| b.to_string()).collect();
        format!("X_({})", parts.join(","))
    }

    /// Image of an abstract `h·sᵉ` under the certified identification.
    pub fn identify(&self, e: &DihElement) -> Result<Permutation> {
        let cert = &self.certificate;
        if e.h.coords().len() != cert.abelian_part.rank() {
            return Err(Error::Structural(
                "element does not conform to the identified abelian part".into(),
            ));
        }
        let mut word = Permutation::identity(self.inn.degree());
        for (i, &c) in e.h.coords().iter().enumerate() {
            word = cert.abelian_generators[i].pow(c).compose(&word);
        }
        if e.flip {
            word = word.compose(&cert.reflection);
        }
        Ok(word)
    }
}

/// A permutation character: fixed-point counts per conjugacy class of the
/// identified group (exact integers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<u64>,
}

impl Character {
    pub fn as_reals(&self) -> Vec<f64> {
        self.values.iter().map(|&v| v as f64).collect()
    }
}

/// Splits the quandle into orbit actions, each with its certified group.
///
/// Fails with a prediction-violation error when any certificate does not
/// verify, quoting the failing relation.
pub fn orbit_actions(q: &Quandle) -> Result<Vec<OrbitAction>> {
    let data = q
        .takasaki_data()
        .ok_or_else(|| Error::Validation("decomposition requires a Takasaki quandle".into()))?;
    let spec = data.spec().clone();
    let case_tag = CaseTag::detect(&spec);
    let maps = q.right_maps()?;
    let orbits = perm::orbits(&maps, q.size())?;
    let expected = spec.double_subgroup().source().clone();

    let mut actions = Vec::with_capacity(orbits.len());
    for (orbit_id, points) in orbits.into_iter().enumerate() {
        let restricted: Vec<Permutation> = maps
            .iter()
            .map(|m| m.restrict(&points))
            .collect::<Result<_>>()?;
        let generators: Vec<Permutation> = {
            let mut seen = HashSet::new();
            restricted
                .iter()
                .filter(|p| seen.insert((*p).clone()))
                .cloned()
                .collect()
        };
        let inn = PermGroup::closure(&generators, 2 * points.len().max(1))?;

        let base_point = points[0];
        let base = &data.elements()[base_point];
        let reflection = restricted[base_point].clone();
        let mut abelian_generators = Vec::with_capacity(spec.rank());
        for i in 0..spec.rank() {
            let shifted = spec.add(base, &spec.basis(i))?;
            let idx = data
                .index_of(&shifted)
                .ok_or_else(|| Error::Internal("shifted base point missing".into()))?;
            abelian_generators.push(restricted[idx].compose(&reflection));
        }
        let certificate =
            certify_generalized_dihedral(&inn, &expected, &abelian_generators, &reflection)?;
        if !certificate.verified {
            return Err(Error::PredictionViolated(format!(
                "orbit {orbit_id} of {spec}: inner automorphism group fails the Dih({expected}) presentation: {}",
                certificate.failure.as_deref().unwrap_or("unknown relation")
            )));
        }
        if certificate.degenerate != expected.is_elementary_two() {
            return Err(Error::Internal(format!(
                "orbit {orbit_id} of {spec}: degenerate flag disagrees with 2H parity"
            )));
        }

        let label: Vec<u8> = base
            .coords()
            .iter()
            .zip(spec.moduli())
            .map(|(&c, &n)| if n % 2 == 0 { (c % 2) as u8 } else { 0 })
            .collect();

        actions.push(OrbitAction {
            orbit_id,
            points,
            label,
            base_point,
            restricted_maps: restricted,
            inn,
            certificate,
            case_tag,
        });
    }
    Ok(actions)
}

/// Builds the character table of the identified group of an action.
pub fn table_for_action(action: &OrbitAction) -> Result<CharacterTable> {
    CharacterTable::for_group(&action.certificate.abelian_part)
}

/// Fixed-point character of the action, indexed by the table's classes.
///
/// Every member of a class must fix the same number of points; a mismatch is
/// an internal consistency error.
pub fn permutation_character(action: &OrbitAction, table: &CharacterTable) -> Result<Character> {
    let m = action.size();
    let mut values = Vec::with_capacity(table.classes().len());
    for ci in 0..table.classes().len() {
        let members = table.class_members(ci)?;
        let mut class_count: Option<u64> = None;
        for member in &members {
            let p = action.identify(member)?;
            let fixed = (0..m).filter(|&x| p.apply(x) == x).count() as u64;
            match class_count {
                None => class_count = Some(fixed),
                Some(prev) if prev != fixed => {
                    return Err(Error::Internal(format!(
                        "fixed-point count differs within class {ci}: {prev} vs {fixed}"
                    )))
                }
                _ => {}
            }
        }
        values.push(class_count.expect("classes are nonempty"));
    }
    let id_class = table.class_index_of(&DihElement::plain(
        table.base_spec().identity(),
    ))?;
    if values[id_class] != m as u64 {
        return Err(Error::Internal(format!(
            "identity fixes {} points, orbit has {m}",
            values[id_class]
        )));
    }
    Ok(Character { values })
}

/// Closed-form character of an orbit action: orbit size at the
/// identity, `2^k` on the class of the reflection (`k` = even moduli of the
/// identified abelian part), zero elsewhere. For degenerate (abelian)
/// actions this is the regular character.
pub fn predicted_character(action: &OrbitAction, table: &CharacterTable) -> Result<Character> {
    let spec = &action.certificate.abelian_part;
    let mut values = vec![0u64; table.classes().len()];
    let id_class = table.class_index_of(&DihElement::plain(spec.identity()))?;
    values[id_class] = action.size() as u64;
    if !action.certificate.degenerate {
        let s_class = table.class_index_of(&DihElement::reflected(spec.identity()))?;
        values[s_class] = 1u64 << spec.even_count();
    }
    Ok(Character { values })
}

/// Multiplicity vector of a character against a table, with the
/// `⟨ψ,ψ⟩ = Σ d_i²` consistency value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicities {
    pub d: Vec<u64>,
    pub norm: u64,
}

/// Tolerance for rounding character inner products to integers.
pub const MULTIPLICITY_ROUNDING_TOL: f64 = 1e-6;

/// `d_i = ⟨ch, χ_i⟩`, gated to integers, with the dimension equation
/// `Σ d_i·deg_i = ch(1)` and the norm equation checked.
pub fn multiplicities(ch: &Character, table: &CharacterTable) -> Result<Multiplicities> {
    let reals = ch.as_reals();
    let mut d = Vec::with_capacity(table.irreps().len());
    for (i, row) in table.values().iter().enumerate() {
        let ip = table.inner_product(&reals, row)?;
        let rounded = ip.round();
        if (ip - rounded).abs() >= MULTIPLICITY_ROUNDING_TOL || rounded < 0.0 {
            return Err(Error::Tolerance(format!(
                "multiplicity of irrep {i} is {ip}, not a non-negative integer"
            )));
        }
        d.push(rounded as u64);
    }
    let id_class = table.class_index_of(&DihElement::plain(table.base_spec().identity()))?;
    let dimension: u64 = d
        .iter()
        .zip(table.irreps())
        .map(|(&di, r)| di * r.degree() as u64)
        .sum();
    if dimension != ch.values[id_class] {
        return Err(Error::PredictionViolated(format!(
            "multiplicities sum to dimension {dimension}, character degree is {}",
            ch.values[id_class]
        )));
    }
    let self_ip = table.inner_product(&reals, &reals)?;
    let norm = self_ip.round();
    if (self_ip - norm).abs() >= MULTIPLICITY_ROUNDING_TOL {
        return Err(Error::Tolerance(format!(
            "character self inner product {self_ip} is not an integer"
        )));
    }
    let norm = norm as u64;
    let d_sq: u64 = d.iter().map(|&x| x * x).sum();
    if norm != d_sq {
        return Err(Error::PredictionViolated(format!(
            "⟨ψ,ψ⟩ = {norm} but Σ d_i² = {d_sq}"
        )));
    }
    Ok(Multiplicities { d, norm })
}

/// Per-orbit summands in the decomposition report.
#[derive(Debug, Clone)]
pub struct PerOrbit {
    pub orbit_id: usize,
    pub label: Vec<u8>,
    pub size: usize,
    pub inn_order: usize,
    pub degenerate: bool,
    /// Multiplicity per table irrep (0 or 1 throughout the theory).
    pub multiplicities: Vec<u64>,
    /// Degrees of the table irreps, parallel to `multiplicities`.
    pub degrees: Vec<usize>,
    pub summand_count: u64,
    pub dimension: u64,
    pub computed_character: Vec<u64>,
    pub predicted_character: Vec<u64>,
}

impl PerOrbit {
    pub fn label_string(&self) -> String {
        let parts: Vec<String> = self.label.iter().map(|b| b.to_string()).collect();
        format!("X_({})", parts.join(","))
    }

    /// Dimensions of the simple summands, in irrep order.
    pub fn summand_dimensions(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .zip(&self.degrees)
            .filter(|(&d, _)| d == 1)
            .map(|(_, &deg)| deg)
            .collect()
    }
}

/// The serializable outcome of [`decompose`].
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub spec: GroupSpec,
    pub case_tag: CaseTag,
    pub order: usize,
    pub orbit_count: usize,
    /// Order of the full inner automorphism group of the quandle.
    pub inn_order: usize,
    pub per_orbit: Vec<PerOrbit>,
    pub total_summands: u64,
    pub total_dimension: u64,
}

/// A decomposition with the working objects (actions and tables) retained
/// for further verification; [`DecompositionReport`] is the data part.
#[derive(Debug)]
pub struct Decomposition {
    pub actions: Vec<OrbitAction>,
    pub tables: Vec<CharacterTable>,
    pub report: DecompositionReport,
}

/// Expected simple-summand count per orbit under the decomposition theory.
fn expected_summands_per_orbit(case: CaseTag, h_tilde: &GroupSpec) -> u64 {
    let k = h_tilde.even_count() as u32;
    match case {
        // for odd H, 2H ≅ H and the count is 1 + (|H|−1)/2
        CaseTag::Odd => 1 + (h_tilde.order() - 1) / 2,
        CaseTag::EvenGeneral => (1 << k) + (h_tilde.order() - (1 << k)) / 2,
        // elementary identified group: one summand per linear character
        CaseTag::Special | CaseTag::TrivialDegenerate => h_tilde.order(),
    }
}

/// Decomposes `K[T]` per orbit and assembles the report, verifying the
/// closed-form characters, the multiplicity pattern, and all counts.
pub fn decompose(q: &Quandle) -> Result<Decomposition> {
    let data = q
        .takasaki_data()
        .ok_or_else(|| Error::Validation("decomposition requires a Takasaki quandle".into()))?;
    let spec = data.spec().clone();
    let case_tag = CaseTag::detect(&spec);

    // full inner automorphism group with its own certificate
    let maps = q.right_maps()?;
    let distinct: Vec<Permutation> = {
        let mut seen = HashSet::new();
        maps.iter().filter(|p| seen.insert((*p).clone())).cloned().collect()
    };
    let inn_t = PermGroup::closure(&distinct, 2 * q.size().max(1))?;
    let expected = spec.double_subgroup().source().clone();
    let r0 = maps[0].clone();
    let mut inn_gens = Vec::with_capacity(spec.rank());
    for i in 0..spec.rank() {
        let idx = data
            .index_of(&spec.basis(i))
            .ok_or_else(|| Error::Internal("basis element missing from index".into()))?;
        inn_gens.push(maps[idx].compose(&r0));
    }
    let inn_cert = certify_generalized_dihedral(&inn_t, &expected, &inn_gens, &r0)?;
    if !inn_cert.verified {
        return Err(Error::PredictionViolated(format!(
            "Inn(T) of {spec} fails the Dih({expected}) presentation: {}",
            inn_cert.failure.as_deref().unwrap_or("unknown relation")
        )));
    }

    let actions = orbit_actions(q)?;
    if actions.len() != 1 << spec.even_count() {
        return Err(Error::PredictionViolated(format!(
            "{spec}: found {} orbits, expected 2^{} = {}",
            actions.len(),
            spec.even_count(),
            1 << spec.even_count()
        )));
    }

    let mut tables = Vec::with_capacity(actions.len());
    let mut per_orbit = Vec::with_capacity(actions.len());
    for action in &actions {
        let table = table_for_action(action)?;
        let computed = permutation_character(action, &table)?;
        let predicted = predicted_character(action, &table)?;
        if computed != predicted {
            return Err(Error::PredictionViolated(format!(
                "orbit {} of {spec}: computed character {:?} differs from closed form {:?}",
                action.orbit_id, computed.values, predicted.values
            )));
        }
        let mults = multiplicities(&computed, &table)?;
        for (i, (&d, irrep)) in mults.d.iter().zip(table.irreps()).enumerate() {
            let expected_d = match irrep.kind {
                IrrepKind::LinearPlus | IrrepKind::DegreeTwo => 1,
                IrrepKind::LinearMinus => 0,
            };
            if d != expected_d {
                return Err(Error::PredictionViolated(format!(
                    "orbit {} of {spec}: irrep {i} ({}) has multiplicity {d}, theory predicts {expected_d}",
                    action.orbit_id,
                    irrep.display()
                )));
            }
        }
        let summand_count: u64 = mults.d.iter().sum();
        let expected_count = expected_summands_per_orbit(case_tag, &expected);
        if summand_count != expected_count {
            return Err(Error::PredictionViolated(format!(
                "orbit {} of {spec}: {summand_count} summands, theorem predicts {expected_count}",
                action.orbit_id
            )));
        }
        let dimension: u64 = mults
            .d
            .iter()
            .zip(table.irreps())
            .map(|(&d, r)| d * r.degree() as u64)
            .sum();
        if dimension != action.size() as u64 {
            return Err(Error::PredictionViolated(format!(
                "orbit {} of {spec}: dimensions sum to {dimension}, orbit size is {}",
                action.orbit_id,
                action.size()
            )));
        }
        per_orbit.push(PerOrbit {
            orbit_id: action.orbit_id,
            label: action.label.clone(),
            size: action.size(),
            inn_order: action.inn.order(),
            degenerate: action.certificate.degenerate,
            multiplicities: mults.d.clone(),
            degrees: table.irreps().iter().map(|r| r.degree()).collect(),
            summand_count,
            dimension,
            computed_character: computed.values.clone(),
            predicted_character: predicted.values.clone(),
        });
        tables.push(table);
    }

    let total_summands: u64 = per_orbit.iter().map(|o| o.summand_count).sum();
    let total_dimension: u64 = per_orbit.iter().map(|o| o.dimension).sum();
    if total_dimension != q.size() as u64 {
        return Err(Error::PredictionViolated(format!(
            "{spec}: total dimension {total_dimension} differs from |T| = {}",
            q.size()
        )));
    }

    let report = DecompositionReport {
        spec,
        case_tag,
        order: q.size(),
        orbit_count: actions.len(),
        inn_order: inn_t.order(),
        per_orbit,
        total_summands,
        total_dimension,
    };
    Ok(Decomposition {
        actions,
        tables,
        report,
    })
}

/// One named verification check with its worst residual.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

/// Outcome of the projector verification for one field.
#[derive(Debug, Clone)]
pub struct VerificationRecord {
    pub field: Field,
    pub tolerance: f64,
    pub checks: Vec<CheckRecord>,
    /// Projector ranks per orbit, per irrep.
    pub ranks: Vec<Vec<usize>>,
    pub max_residual: f64,
    pub all_pass: bool,
}

/// Default residual tolerance for projector verification.
pub const PROJECTOR_RESIDUAL_TOL: f64 = 1e-8;

/// Singular-value threshold for rank decisions.
pub const RANK_SINGULAR_VALUE_TOL: f64 = 1e-6;

fn verify_orbit_projectors<S: Scalar>(
    action: &OrbitAction,
    table: &CharacterTable,
    mults: &[u64],
    tol: f64,
    checks: &mut Vec<CheckRecord>,
) -> Result<Vec<usize>> {
    let m = action.size();
    let group_order = action.inn.order();
    let orbit = action.label_string();

    // every group element once, with its class index
    let mut elements: Vec<(Permutation, usize)> = Vec::with_capacity(group_order);
    for ci in 0..table.classes().len() {
        for member in table.class_members(ci)? {
            elements.push((action.identify(&member)?, ci));
        }
    }
    if elements.len() != group_order {
        return Err(Error::Internal(format!(
            "class members enumerate {} elements, group has {group_order}",
            elements.len()
        )));
    }

    let mut projectors: Vec<Matrix<S>> = Vec::with_capacity(table.irreps().len());
    for (row, irrep) in table.values().iter().zip(table.irreps()) {
        let mut p = Matrix::<S>::zero(m);
        let scale = irrep.degree() as f64 / group_order as f64;
        for (perm, ci) in &elements {
            let coeff = S::from_re(scale * row[*ci]);
            if coeff == S::zero() {
                continue;
            }
            for x in 0..m {
                let y = perm.apply(x);
                p.set(y, x, S::add(p.get(y, x), coeff));
            }
        }
        projectors.push(p);
    }

    // idempotency
    let mut idem: f64 = 0.0;
    for p in &projectors {
        idem = idem.max(p.matmul(p).sub(p).max_abs());
    }
    checks.push(CheckRecord {
        name: format!("{orbit}_projector_idempotent"),
        pass: idem < tol,
        residual: idem,
    });

    // completeness: Σ p_i = I
    let mut sum = Matrix::<S>::zero(m);
    for p in &projectors {
        sum.add_scaled(p, S::one());
    }
    let complete = sum.trace_norm_diff_identity();
    checks.push(CheckRecord {
        name: format!("{orbit}_projector_sum_identity"),
        pass: complete < tol,
        residual: complete,
    });

    // ranks: rank(p_i) = deg_i · d_i
    let mut ranks = Vec::with_capacity(projectors.len());
    let mut rank_ok = true;
    for ((p, irrep), &d) in projectors.iter().zip(table.irreps()).zip(mults) {
        let r = p.rank(RANK_SINGULAR_VALUE_TOL)?;
        if r != irrep.degree() * d as usize {
            rank_ok = false;
        }
        ranks.push(r);
    }
    checks.push(CheckRecord {
        name: format!("{orbit}_projector_ranks"),
        pass: rank_ok,
        residual: 0.0,
    });

    // right-ideal closure: (I − p_i)·M(R_x)·p_i = 0 for every quandle element
    let mut closure: f64 = 0.0;
    for p in &projectors {
        for rx in &action.restricted_maps {
            let ap = p.permute_rows(rx.images());
            let residual = ap.sub(&p.matmul(&ap)).max_abs();
            closure = closure.max(residual);
        }
    }
    checks.push(CheckRecord {
        name: format!("{orbit}_right_ideal_closure"),
        pass: closure < tol,
        residual: closure,
    });

    Ok(ranks)
}

/// Rebuilds every orbit's isotypic projectors over the chosen field and
/// checks idempotency, completeness, ranks, and right-multiplication closure
/// at the given residual tolerance (default [`PROJECTOR_RESIDUAL_TOL`]).
pub fn verify_right_ideals(
    decomposition: &Decomposition,
    field: Field,
    tol: Option<f64>,
) -> Result<VerificationRecord> {
    let tol = tol.unwrap_or(PROJECTOR_RESIDUAL_TOL);
    let mut checks = Vec::new();
    let mut ranks = Vec::new();
    for (action, (table, per_orbit)) in decomposition
        .actions
        .iter()
        .zip(decomposition.tables.iter().zip(&decomposition.report.per_orbit))
    {
        let orbit_ranks = match field {
            Field::Real => verify_orbit_projectors::<f64>(
                action,
                table,
                &per_orbit.multiplicities,
                tol,
                &mut checks,
            )?,
            Field::Complex => verify_orbit_projectors::<Complex64>(
                action,
                table,
                &per_orbit.multiplicities,
                tol,
                &mut checks,
            )?,
        };
        ranks.push(orbit_ranks);
    }
    let max_residual = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(VerificationRecord {
        field,
        tolerance: tol,
        checks,
        ranks,
        max_residual,
        all_pass,
    })
}

/// Checks the fixed-point support claim: apart from the identity, exactly
/// the conjugacy class of the reflection has fixed points on the orbit, and
/// its size is `|G|/2^{k+1}` (no non-identity fixed points at all in the
/// degenerate case).
pub fn check_fixed_point_support(action: &OrbitAction, table: &CharacterTable) -> Result<()> {
    let spec = &action.certificate.abelian_part;
    let m = action.size();
    let mut with_fixed: Vec<DihElement> = Vec::new();
    for ci in 0..table.classes().len() {
        for member in table.class_members(ci)? {
            let p = action.identify(&member)?;
            if p.is_identity() {
                continue;
            }
            if (0..m).any(|x| p.apply(x) == x) {
                with_fixed.push(member);
            }
        }
    }
    if action.certificate.degenerate {
        if !with_fixed.is_empty() {
            return Err(Error::PredictionViolated(format!(
                "degenerate orbit action has {} non-identity elements with fixed points",
                with_fixed.len()
            )));
        }
        return Ok(());
    }
    let s_class = table.class_index_of(&DihElement::reflected(spec.identity()))?;
    let expected_size = table.classes()[s_class].size;
    if with_fixed.len() != expected_size {
        return Err(Error::PredictionViolated(format!(
            "{} elements have fixed points, |Cl(s)| = {expected_size}",
            with_fixed.len()
        )));
    }
    for e in &with_fixed {
        if table.class_index_of(e)? != s_class {
            return Err(Error::PredictionViolated(format!(
                "element {} has fixed points but lies outside Cl(s)",
                e.display()
            )));
        }
    }
    Ok(())
}
