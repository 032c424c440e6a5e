//! Human-readable rendering in the usual notation (`X_(0,1,0)`
//! orbit labels, `U`/`V` summand names) for easy cross-checking.

use std::fmt::Write as _;

use qtak_core::decomp::{CaseTag, DecompositionReport, PerOrbit, VerificationRecord};
use qtak_core::sweep::SweepReport;
use qtak_core::{CharacterTable, Quandle};

use crate::report::OrbitListing;

pub fn axioms_text(q: &Quandle, spec_text: &str) -> String {
    let report = q.check_axioms();
    let trivial = q
        .takasaki_data()
        .map(|d| d.spec().is_elementary_two())
        .unwrap_or(false);
    let note = if trivial { " [trivial quandle]" } else { "" };
    if report.all_pass() {
        format!("axioms: pass (order {}){note}\n", q.size())
    } else {
        format!(
            "axioms: FAIL ({spec_text}, order {}): {}\n",
            q.size(),
            report.describe()
        )
    }
}

pub fn orbits_text(q: &Quandle, spec_text: &str, listings: &[OrbitListing]) -> String {
    let data = q.takasaki_data().expect("takasaki quandle");
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group {spec_text}: order {}, {} orbit{}",
        q.size(),
        listings.len(),
        if listings.len() == 1 { "" } else { "s" }
    );
    for l in listings {
        let members: Vec<String> = l
            .points
            .iter()
            .map(|&p| data.elements()[p].display())
            .collect();
        let _ = writeln!(
            out,
            "{} [{}]: {}",
            l.label_string(),
            l.points.len(),
            members.join(" ")
        );
    }
    out
}

/// Summand names: `V_triv ⊕ V_j` in the odd case, `U_{i,j}`
/// (degree 1) and `V_{i,j}` (degree 2) elsewhere.
fn summand_names(case: CaseTag, orbit: &PerOrbit) -> Vec<String> {
    let mut names = Vec::new();
    let mut u = 0usize;
    let mut v = 0usize;
    for (&d, &deg) in orbit.multiplicities.iter().zip(&orbit.degrees) {
        if d == 0 {
            continue;
        }
        if deg == 1 {
            u += 1;
            if case == CaseTag::Odd {
                names.push("V_triv".to_string());
            } else {
                names.push(format!("U_{{{},{}}}", orbit.orbit_id, u));
            }
        } else {
            v += 1;
            if case == CaseTag::Odd {
                names.push(format!("V_{v}"));
            } else {
                names.push(format!("V_{{{},{}}}", orbit.orbit_id, v));
            }
        }
    }
    names
}

pub fn decompose_text(
    spec_text: &str,
    report: &DecompositionReport,
    table: &CharacterTable,
    ver: &VerificationRecord,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group {spec_text}: order {}, case {}",
        report.order,
        report.case_tag.as_str()
    );
    let _ = writeln!(
        out,
        "Inn(T): order {}, certified {}",
        report.inn_order,
        if report.inn_order == 1 {
            "trivial".to_string()
        } else {
            format!("Dih({})", table.base_spec())
        }
    );
    let group_name = if table.is_dihedral() {
        format!("Dih({})", table.base_spec())
    } else {
        format!("elementary abelian {}", table.base_spec())
    };
    let _ = writeln!(out, "identified orbit group: {group_name}");
    let _ = writeln!(out, "character table:");
    for line in table.render_text().lines() {
        let _ = writeln!(out, "  {line}");
    }
    for orbit in &report.per_orbit {
        let _ = writeln!(
            out,
            "orbit {} [{}]: Inn order {}, character {:?} (matches closed form)",
            orbit.label_string(),
            orbit.size,
            orbit.inn_order,
            orbit.computed_character
        );
        let names = summand_names(report.case_tag, orbit);
        let dims: Vec<String> = orbit
            .summand_dimensions()
            .iter()
            .map(|d| d.to_string())
            .collect();
        let target = if report.orbit_count == 1 {
            "K[T]".to_string()
        } else {
            format!("K[{}]", orbit.label_string())
        };
        let _ = writeln!(out, "  {target} = {}", names.join(" ⊕ "));
        let _ = writeln!(
            out,
            "  {} summands, dimensions [{}], total {}",
            orbit.summand_count,
            dims.join(", "),
            orbit.dimension
        );
    }
    let _ = writeln!(
        out,
        "totals: {} simple right ideals, dimension {} = |T|",
        report.total_summands, report.total_dimension
    );
    let _ = writeln!(
        out,
        "verification (field {}, tol {:.1e}): {} with max residual {:.3e}",
        ver.field.as_str(),
        ver.tolerance,
        if ver.all_pass { "PASS" } else { "FAIL" },
        ver.max_residual
    );
    for check in &ver.checks {
        if !check.pass {
            let _ = writeln!(out, "  FAIL {} (residual {:.3e})", check.name, check.residual);
        }
    }
    out
}

pub fn verify_text(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "sweep up to order {}: {} specs",
        report.max_order, report.spec_count
    );
    for o in &report.outcomes {
        if o.pass {
            let _ = writeln!(
                out,
                "ok   {} (order {}, {} checks, {:.1} ms)",
                o.spec,
                o.order,
                o.checks.len(),
                o.millis
            );
        } else {
            let _ = writeln!(out, "FAIL {} (order {}):", o.spec, o.order);
            for c in &o.checks {
                if !c.pass {
                    let _ = writeln!(
                        out,
                        "     {}: {}",
                        c.name,
                        c.detail.as_deref().unwrap_or("failed")
                    );
                }
            }
        }
    }
    let _ = writeln!(
        out,
        "sweep result: {} passed, {} failed in {:.2} s",
        report.spec_count - report.fail_count,
        report.fail_count,
        report.millis / 1e3
    );
    out
}
