//! Batch verification sweeps: every claim of the theory, re-checked for
//! every abelian group presentation up to a target order.
//!
//! [`enumerate_specs`] lists moduli multisets in non-decreasing order (each
//! modulus ≥ 2, plus the order-1 group), which covers every isomorphism
//! class once while keeping presentation-dependent bookkeeping meaningful.
//! [`check_spec`] runs the full battery on one spec; [`run_sweep`] fans the
//! specs out over a worker pool and merges a deterministic report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::abelian::GroupSpec;
use crate::chartab::{self, CharacterTable};
use crate::decomp::{self, Field};
use crate::error::Error;
use crate::gdh::{self, DihElement};
use crate::perm::{self, certify_generalized_dihedral, PermGroup, Permutation};
use crate::quandle::Quandle;
use crate::Result;

/// Bounds and tolerances for one sweep run.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_order: u64,
    /// Residual tolerance for projector checks.
    pub tolerance: f64,
    /// Worker threads; 0 means use available parallelism.
    pub threads: usize,
    /// Largest |H| for the brute-force center/class/centralizer oracles.
    pub class_oracle_max: u64,
    /// Largest |H| for the brute-force character-table comparison.
    pub table_oracle_max: u64,
    /// Largest |T| for the projector verification (both fields).
    pub projector_max: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_order: 64,
            tolerance: decomp::PROJECTOR_RESIDUAL_TOL,
            threads: 0,
            class_oracle_max: 32,
            table_oracle_max: 16,
            projector_max: 40,
        }
    }
}

/// One named check within a spec's battery.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

/// All checks for one group spec.
#[derive(Debug, Clone)]
pub struct SpecOutcome {
    pub spec: String,
    pub order: u64,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
    pub millis: f64,
}

/// Merged result of a sweep.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub max_order: u64,
    pub outcomes: Vec<SpecOutcome>,
    pub spec_count: usize,
    pub fail_count: usize,
    pub all_pass: bool,
    pub millis: f64,
}

impl SweepReport {
    /// Failing `(spec, check)` pairs for machine-readable output.
    pub fn failures(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for o in &self.outcomes {
            for c in &o.checks {
                if !c.pass {
                    let mut name = c.name.to_string();
                    if let Some(d) = &c.detail {
                        name.push_str(": ");
                        name.push_str(d);
                    }
                    out.push((o.spec.clone(), name));
                }
            }
        }
        out
    }
}

/// All moduli multisets (non-decreasing, each ≥ 2) with product ≤
/// `max_order`, plus the order-1 group, sorted by (order, moduli).
pub fn enumerate_specs(max_order: u64) -> Vec<GroupSpec> {
    let mut lists: Vec<Vec<u64>> = vec![vec![1]];
    fn extend(min: u64, budget: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        for n in min..=budget {
            current.push(n);
            out.push(current.clone());
            extend(n, budget / n, current, out);
            current.pop();
        }
    }
    if max_order >= 2 {
        let mut current = Vec::new();
        extend(2, max_order, &mut current, &mut lists);
    }
    lists.sort_by_key(|m| (m.iter().product::<u64>(), m.clone()));
    lists
        .into_iter()
        .map(|m| GroupSpec::new(m).expect("moduli ≥ 1"))
        .collect()
}

fn run_check(
    checks: &mut Vec<CheckOutcome>,
    name: &'static str,
    f: impl FnOnce() -> Result<()>,
) {
    match f() {
        Ok(()) => checks.push(CheckOutcome {
            name,
            pass: true,
            detail: None,
        }),
        Err(e) => checks.push(CheckOutcome {
            name,
            pass: false,
            detail: Some(e.to_string()),
        }),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PredictionViolated(msg()))
    }
}

/// Full battery for one spec. Construction failures mark every dependent
/// check failed rather than aborting the sweep.
pub fn check_spec(spec: &GroupSpec, config: &SweepConfig) -> SpecOutcome {
    let started = Instant::now();
    let mut checks = Vec::new();

    let q = match Quandle::takasaki(spec) {
        Ok(q) => q,
        Err(e) => {
            checks.push(CheckOutcome {
                name: "construct",
                pass: false,
                detail: Some(e.to_string()),
            });
            return SpecOutcome {
                spec: spec.to_string(),
                order: spec.order(),
                checks,
                pass: false,
                millis: started.elapsed().as_secs_f64() * 1e3,
            };
        }
    };

    run_check(&mut checks, "axioms", || {
        ensure(q.check_axioms().all_pass(), || q.check_axioms().describe())
    });

    let maps = q.right_maps().unwrap_or_default();
    run_check(&mut checks, "right_map_involution", || {
        for (j, r) in maps.iter().enumerate() {
            ensure(r.compose(r).is_identity(), || format!("R_{j} is not an involution"))?;
        }
        Ok(())
    });

    run_check(&mut checks, "generator_order_law", || {
        let r0 = &maps[0];
        for i in 0..spec.rank() {
            let n = spec.moduli()[i];
            let idx = q.takasaki_index(spec.basis(i).coords())?;
            let product = maps[idx].compose(r0);
            let expect = n / crate::abelian::gcd(n, 2);
            ensure(product.order() == expect, || {
                format!(
                    "R_e{i}·R_e0 has order {}, expected {expect}",
                    product.order()
                )
            })?;
        }
        Ok(())
    });

    run_check(&mut checks, "right_map_factorization", || {
        let r0 = &maps[0];
        let basis_maps: Vec<Permutation> = (0..spec.rank())
            .map(|i| {
                let idx = q.takasaki_index(spec.basis(i).coords())?;
                Ok(maps[idx].compose(r0))
            })
            .collect::<Result<_>>()?;
        for (j, e) in spec.elements().iter().enumerate() {
            let mut word = Permutation::identity(q.size());
            for (i, &c) in e.coords().iter().enumerate() {
                word = basis_maps[i].pow(c).compose(&word);
            }
            ensure(word.compose(r0) == maps[j], || {
                format!("factorization fails for R_{j}")
            })?;
        }
        Ok(())
    });

    run_check(&mut checks, "orbit_structure", || {
        let orbits = perm::orbits(&maps, q.size())?;
        let expected = 1usize << spec.even_count();
        ensure(orbits.len() == expected, || {
            format!("{} orbits, expected {expected}", orbits.len())
        })?;
        let size = q.size() / expected;
        for o in &orbits {
            ensure(o.len() == size, || {
                format!("orbit of size {}, expected {size}", o.len())
            })?;
        }
        Ok(())
    });

    let inn_t = {
        let mut distinct: Vec<Permutation> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for m in &maps {
            if seen.insert(m.clone()) {
                distinct.push(m.clone());
            }
        }
        PermGroup::closure(&distinct, 2 * q.size().max(1))
    };

    run_check(&mut checks, "inn_certificate", || {
        let inn = inn_t.as_ref().map_err(|e| e.clone())?;
        ensure(inn.verify_closed(), || "closure is not closed".into())?;
        let expected = spec.double_subgroup().source().clone();
        let predicted_order = if spec.is_elementary_two() {
            1
        } else {
            2 * expected.order() as usize
        };
        ensure(inn.order() == predicted_order, || {
            format!("|Inn(T)| = {}, expected {predicted_order}", inn.order())
        })?;
        let r0 = maps[0].clone();
        let mut gens = Vec::with_capacity(spec.rank());
        for i in 0..spec.rank() {
            let idx = q.takasaki_index(spec.basis(i).coords())?;
            gens.push(maps[idx].compose(&r0));
        }
        let cert = certify_generalized_dihedral(inn, &expected, &gens, &r0)?;
        ensure(cert.verified, || {
            cert.failure.clone().unwrap_or_else(|| "presentation fails".into())
        })?;
        // class equation on the enumerated group
        let total: usize = inn.class_sizes().iter().sum();
        ensure(total == inn.order(), || "class sizes do not sum to |G|".into())?;
        for c in inn.classes() {
            ensure(inn.order() % c.members.len() == 0, || {
                "class size does not divide |G|".into()
            })?;
        }
        Ok(())
    });

    // per-orbit actions, certificates, decomposition, characters
    let decomposition = decomp::decompose(&q);
    run_check(&mut checks, "decomposition", || {
        decomposition.as_ref().map(|_| ()).map_err(|e| e.clone())
    });

    run_check(&mut checks, "orbit_group_shift_invariance", || {
        let dec = decomposition.as_ref().map_err(|e| e.clone())?;
        let first = &dec.actions[0];
        for action in &dec.actions {
            ensure(action.inn.order() == first.inn.order(), || {
                format!(
                    "orbit {} group order {} differs from orbit 0's {}",
                    action.orbit_id,
                    action.inn.order(),
                    first.inn.order()
                )
            })?;
            ensure(
                action.certificate.degenerate == first.certificate.degenerate,
                || "degenerate flags differ across orbits".into(),
            )?;
        }
        Ok(())
    });

    run_check(&mut checks, "fixed_point_support", || {
        let dec = decomposition.as_ref().map_err(|e| e.clone())?;
        for (action, table) in dec.actions.iter().zip(&dec.tables) {
            decomp::check_fixed_point_support(action, table)?;
        }
        Ok(())
    });

    let oracle_eligible = spec.order() <= config.class_oracle_max && !spec.is_elementary_two();
    if oracle_eligible {
        let action = gdh::regular_action(spec);

        run_check(&mut checks, "center_oracle", || {
            let predicted = gdh::predicted_center(spec);
            let brute = gdh::brute_force_center(spec)?;
            ensure(predicted.elements == brute, || {
                format!(
                    "predicted center has {} elements, brute force {}",
                    predicted.elements.len(),
                    brute.len()
                )
            })
        });

        run_check(&mut checks, "class_profile_oracle", || {
            let action = action.as_ref().map_err(|e| e.clone())?;
            let profile = gdh::predicted_class_profile(spec);
            let classes = action.classes();
            let mut singletons = 0u64;
            let mut pairs = 0u64;
            let mut large = 0u64;
            for class in &classes {
                let flips: Vec<bool> = class.iter().map(|e| e.flip).collect();
                ensure(
                    flips.iter().all(|&f| f == flips[0]),
                    || "class mixes H and sH elements".into(),
                )?;
                if flips[0] {
                    ensure(class.len() as u64 == profile.large_size, || {
                        format!(
                            "reflection class of size {}, predicted {}",
                            class.len(),
                            profile.large_size
                        )
                    })?;
                    large += 1;
                } else if class.len() == 1 {
                    singletons += 1;
                } else {
                    ensure(class.len() == 2, || "H-class larger than 2".into())?;
                    let inv = gdh::inverse(spec, &class[0])?;
                    ensure(class.contains(&inv), || {
                        "pair class is not {h, h⁻¹}".into()
                    })?;
                    pairs += 1;
                }
            }
            ensure(
                (singletons, pairs, large)
                    == (profile.singleton_count, profile.pair_count, profile.large_count),
                || {
                    format!(
                        "profile ({singletons},{pairs},{large}) vs predicted ({},{},{})",
                        profile.singleton_count, profile.pair_count, profile.large_count
                    )
                },
            )?;
            ensure(profile.total_elements() == 2 * spec.order(), || {
                "profile does not account for every element".into()
            })
        });

        run_check(&mut checks, "centralizer_oracle", || {
            let expect = 1usize << (spec.even_count() + 1);
            for h in spec.elements() {
                let sh = DihElement::reflected(h);
                let got = gdh::centralizer_order(spec, &sh)?;
                ensure(got == expect, || {
                    format!("|C(sh)| = {got}, predicted {expect}")
                })?;
            }
            Ok(())
        });

        run_check(&mut checks, "table_validity", || {
            let table = CharacterTable::build_dihedral(spec)?;
            ensure(
                table.sum_of_degree_squares() == table.group_order(),
                || "Σ deg² differs from |G|".into(),
            )?;
            ensure(table.irreps().len() == table.classes().len(), || {
                "irrep count differs from class count".into()
            })?;
            let row = table.row_orthogonality_residual();
            ensure(row < 1e-9, || format!("row orthogonality residual {row:.3e}"))?;
            let col = table.column_orthogonality_residual();
            ensure(col < 1e-9, || format!("column orthogonality residual {col:.3e}"))
        });
    }

    if spec.order() <= config.table_oracle_max && !spec.is_elementary_two() {
        run_check(&mut checks, "table_bruteforce_match", || {
            let closed = CharacterTable::build_dihedral(spec)?;
            let brute = chartab::brute_force_dihedral_table(spec)?;
            let residual = chartab::compare_with_brute(&closed, &brute)?;
            ensure(residual < 1e-8, || {
                format!("table residual {residual:.3e}")
            })
        });
    }

    if spec.order() <= config.projector_max {
        run_check(&mut checks, "projectors_both_fields", || {
            let dec = decomposition.as_ref().map_err(|e| e.clone())?;
            let real = decomp::verify_right_ideals(dec, Field::Real, Some(config.tolerance))?;
            ensure(real.all_pass, || {
                let failing: Vec<&str> = real
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                format!("real-field checks failed: {}", failing.join(", "))
            })?;
            let complex = decomp::verify_right_ideals(dec, Field::Complex, Some(config.tolerance))?;
            ensure(complex.all_pass, || {
                format!("complex-field residual {:.3e}", complex.max_residual)
            })?;
            ensure(real.ranks == complex.ranks, || {
                "rank outcomes differ between fields".into()
            })
        });
    }

    let pass = checks.iter().all(|c| c.pass);
    SpecOutcome {
        spec: spec.to_string(),
        order: spec.order(),
        checks,
        pass,
        millis: started.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs the battery for every spec up to `config.max_order` on a worker
/// pool; the report is merged in enumeration order regardless of scheduling.
pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let started = Instant::now();
    let specs = enumerate_specs(config.max_order);
    let threads = if config.threads == 0 {
        std::thread::available_parallelism().map(|v| v.get()).unwrap_or(1)
    } else {
        config.threads
    };
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<SpecOutcome>>> = Mutex::new(vec![None; specs.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(specs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= specs.len() {
                    break;
                }
                let outcome = check_spec(&specs[i], config);
                slots.lock().expect("no poisoned workers")[i] = Some(outcome);
            });
        }
    });
    let outcomes: Vec<SpecOutcome> = slots
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|o| o.expect("every slot filled"))
        .collect();
    let fail_count = outcomes.iter().filter(|o| !o.pass).count();
    SweepReport {
        max_order: config.max_order,
        spec_count: outcomes.len(),
        fail_count,
        all_pass: fail_count == 0,
        outcomes,
        millis: started.elapsed().as_secs_f64() * 1e3,
    }
}
