//! Builders turning core results into canonical JSON values, plus the small
//! shared computations (orbit listings) used by both output formats.

use qtak_core::decomp::{DecompositionReport, VerificationRecord};
use qtak_core::sweep::SweepReport;
use qtak_core::{perm, CharacterTable, Error, OrbitAction, Quandle, Result};
use serde_json::{json, Value};

/// One orbit with its binary label and member points.
pub struct OrbitListing {
    pub label: Vec<u8>,
    pub points: Vec<usize>,
}

impl OrbitListing {
    pub fn label_string(&self) -> String {
        let parts: Vec<String> = self.label.iter().map(|b| b.to_string()).collect();
        format!("X_({})", parts.join(","))
    }
}

/// Orbits of the right-translation action, labelled by the parity pattern of
/// their minimum element (0 for odd components).
pub fn orbit_listings(q: &Quandle) -> Result<Vec<OrbitListing>> {
    let data = q
        .takasaki_data()
        .ok_or_else(|| Error::Validation("orbit listing requires a Takasaki quandle".into()))?;
    let spec = data.spec();
    let maps = q.right_maps()?;
    let orbits = perm::orbits(&maps, q.size())?;
    Ok(orbits
        .into_iter()
        .map(|points| {
            let min = &data.elements()[points[0]];
            let label = min
                .coords()
                .iter()
                .zip(spec.moduli())
                .map(|(&c, &n)| if n % 2 == 0 { (c % 2) as u8 } else { 0 })
                .collect();
            OrbitListing { label, points }
        })
        .collect())
}

fn coords_value(q: &Quandle, point: usize) -> Value {
    let data = q.takasaki_data().expect("takasaki quandle");
    Value::Array(
        data.elements()[point]
            .coords()
            .iter()
            .map(|&c| json!(c))
            .collect(),
    )
}

pub fn axioms_value(q: &Quandle, spec_text: &str) -> Value {
    let report = q.check_axioms();
    let check = |c: &qtak_core::quandle::AxiomCheck| {
        json!({
            "pass": c.pass,
            "witness": c.witness.map(|w| json!([w[0], w[1], w[2]])).unwrap_or(Value::Null),
        })
    };
    json!({
        "spec": spec_text,
        "order": q.size(),
        "axioms": {
            "idempotence": check(&report.idempotence),
            "right_bijectivity": check(&report.right_bijectivity),
            "right_distributivity": check(&report.right_distributivity),
        },
        "pass": report.all_pass(),
        "trivial_quandle": q.takasaki_data().map(|d| d.spec().is_elementary_two()).unwrap_or(false),
    })
}

pub fn orbits_value(q: &Quandle, spec_text: &str, listings: &[OrbitListing]) -> Value {
    let orbits: Vec<Value> = listings
        .iter()
        .map(|l| {
            json!({
                "label": l.label,
                "size": l.points.len(),
                "elements": Value::Array(l.points.iter().map(|&p| coords_value(q, p)).collect()),
            })
        })
        .collect();
    json!({
        "spec": spec_text,
        "order": q.size(),
        "orbit_count": listings.len(),
        "orbits": orbits,
    })
}

fn table_value(table: &CharacterTable) -> Value {
    let classes: Vec<Value> = table
        .classes()
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative.display(),
                "size": c.size,
            })
        })
        .collect();
    let irreps: Vec<Value> = table
        .irreps()
        .iter()
        .map(|r| {
            let kind = match r.kind {
                qtak_core::IrrepKind::LinearPlus => "linear_plus",
                qtak_core::IrrepKind::LinearMinus => "linear_minus",
                qtak_core::IrrepKind::DegreeTwo => "degree_two",
            };
            json!({
                "kind": kind,
                "label": r.label,
                "degree": r.degree(),
            })
        })
        .collect();
    json!({
        "group": format!("{}", table.base_spec()),
        "dihedral": table.is_dihedral(),
        "group_order": table.group_order(),
        "classes": classes,
        "irreps": irreps,
    })
}

fn verification_value(ver: &VerificationRecord) -> Value {
    let checks: Vec<Value> = ver
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "pass": c.pass,
                "residual": c.residual,
            })
        })
        .collect();
    json!({
        "field": ver.field.as_str(),
        "tolerance": ver.tolerance,
        "checks": checks,
        "ranks": ver.ranks,
        "max_residual": ver.max_residual,
        "all_pass": ver.all_pass,
    })
}

pub fn decompose_value(
    q: &Quandle,
    spec_text: &str,
    report: &DecompositionReport,
    actions: &[OrbitAction],
    table: &CharacterTable,
    ver: &VerificationRecord,
) -> Value {
    let orbits: Vec<Value> = actions
        .iter()
        .map(|a| {
            json!({
                "label": a.label,
                "size": a.size(),
                "elements": Value::Array(a.points.iter().map(|&p| coords_value(q, p)).collect()),
            })
        })
        .collect();
    let per_orbit: Vec<Value> = report
        .per_orbit
        .iter()
        .map(|o| {
            json!({
                "orbit": o.orbit_id,
                "label": o.label,
                "size": o.size,
                "inn_order": o.inn_order,
                "degenerate": o.degenerate,
                "multiplicities": o.multiplicities,
                "summands": o.summand_count,
                "dimension": o.dimension,
                "character": o.computed_character,
                "predicted_character": o.predicted_character,
            })
        })
        .collect();
    json!({
        "spec": spec_text,
        "order": report.order,
        "orbits": orbits,
        "case": report.case_tag.as_str(),
        "inn_order": report.inn_order,
        "table": table_value(table),
        "decomposition": {
            "per_orbit": per_orbit,
            "totals": {
                "summands": report.total_summands,
                "dimension": report.total_dimension,
            },
        },
        "verification": verification_value(ver),
    })
}

pub fn verify_value(report: &SweepReport) -> Value {
    let specs: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            let checks: Vec<Value> = o
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "pass": c.pass,
                        "detail": c.detail.clone().map(Value::String).unwrap_or(Value::Null),
                    })
                })
                .collect();
            json!({
                "spec": o.spec,
                "order": o.order,
                "pass": o.pass,
                "millis": o.millis,
                "checks": checks,
            })
        })
        .collect();
    let failures: Vec<Value> = report
        .failures()
        .into_iter()
        .map(|(spec, check)| json!({"spec": spec, "check": check}))
        .collect();
    json!({
        "max_order": report.max_order,
        "spec_count": report.spec_count,
        "fail_count": report.fail_count,
        "all_pass": report.all_pass,
        "millis": report.millis,
        "failures": failures,
        "specs": specs,
    })
}
