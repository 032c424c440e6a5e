//! Finite quandles as dense Cayley tables, plus the constructors used by the
//! rest of the crate: Takasaki quandles `a ▷ b = 2b − a` over a [`GroupSpec`],
//! dihedral and trivial quandles, and direct products.
//!
//! Construction does not force the quandle axioms — [`Quandle::check_axioms`]
//! reports them, so deliberately broken tables (mutants, imported files) can
//! be diagnosed instead of rejected blindly.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// Default bound on quandle order; override with `QTAK_MAX_GROUP_ORDER`.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Current construction cap (env override wins when it parses).
pub fn construction_cap() -> usize {
    std::env::var("QTAK_MAX_GROUP_ORDER")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

fn check_cap(n: usize) -> Result<()> {
    let cap = construction_cap();
    if n > cap {
        return Err(Error::Validation(format!(
            "quandle order {n} exceeds the construction cap {cap} (set QTAK_MAX_GROUP_ORDER to raise it)"
        )));
    }
    Ok(())
}

/// Extra structure carried by Takasaki quandles: the group presentation and
/// the element ↔ row-index correspondence in enumeration order.
#[derive(Debug, Clone)]
pub struct TakasakiData {
    spec: GroupSpec,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl TakasakiData {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// A finite magma `x_i ▷ x_j = x_{table[i][j]}` with display labels.
#[derive(Debug, Clone)]
pub struct Quandle {
    size: usize,
    table: Vec<usize>, // row-major, table[i*size + j]
    labels: Vec<String>,
    takasaki: Option<TakasakiData>,
}

/// Outcome of one axiom scan: pass flag plus the first violating triple.
///
/// Witness layout: idempotence `[i, i, i]`; right bijectivity `[i1, i2, j]`
/// (rows `i1 ≠ i2` collide in column `j`); distributivity `[i, j, m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub pass: bool,
    pub witness: Option<[usize; 3]>,
}

impl AxiomCheck {
    fn ok() -> Self {
        AxiomCheck {
            pass: true,
            witness: None,
        }
    }

    fn fail(witness: [usize; 3]) -> Self {
        AxiomCheck {
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Per-axiom report from [`Quandle::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub idempotence: AxiomCheck,
    pub right_bijectivity: AxiomCheck,
    pub right_distributivity: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.idempotence.pass && self.right_bijectivity.pass && self.right_distributivity.pass
    }

    /// Short human summary, e.g. `"axiom 2 fails at rows 0,1 column 1"`.
    pub fn describe(&self) -> String {
        if self.all_pass() {
            return "all axioms hold".into();
        }
        let mut parts = Vec::new();
        if let Some([i, _, _]) = self.idempotence.witness {
            parts.push(format!("axiom 1 fails at element {i}"));
        }
        if let Some([i1, i2, j]) = self.right_bijectivity.witness {
            parts.push(format!("axiom 2 fails at rows {i1},{i2} column {j}"));
        }
        if let Some([i, j, m]) = self.right_distributivity.witness {
            parts.push(format!("axiom 3 fails at triple ({i},{j},{m})"));
        }
        parts.join("; ")
    }
}

impl Quandle {
    /// Builds a quandle from a raw table (entries range-checked only).
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Quandle> {
        let n = table.len();
        check_cap(n)?;
        if n == 0 {
            return Err(Error::Validation("quandle must have at least one element".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::Structural(format!(
                    "table row has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::Validation(format!(
                        "table entry {v} out of range for order {n}"
                    )));
                }
                flat.push(v);
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::Structural("label count does not match order".into()));
                }
                l
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(Quandle {
            size: n,
            table: flat,
            labels,
            takasaki: None,
        })
    }

    /// The Takasaki quandle of `spec`: `x ▷ y = 2y − x` componentwise, rows
    /// and columns in the spec's enumeration order.
    pub fn takasaki(spec: &GroupSpec) -> Result<Quandle> {
        let n = spec.order() as usize;
        check_cap(n)?;
        let elements = spec.elements();
        let index: HashMap<GroupElement, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let mut table = vec![0usize; n * n];
        for (j, ej) in elements.iter().enumerate() {
            let twice = spec.double(ej)?;
            for (i, ei) in elements.iter().enumerate() {
                let result = spec.sub(&twice, ei)?;
                table[i * n + j] = index[&result];
            }
        }
        let labels = elements.iter().map(|e| e.display()).collect();
        Ok(Quandle {
            size: n,
            table,
            labels,
            takasaki: Some(TakasakiData {
                spec: spec.clone(),
                elements,
                index,
            }),
        })
    }

    /// The dihedral quandle `R_n`; equal to `takasaki([n])` entry for entry.
    pub fn dihedral(n: u64) -> Result<Quandle> {
        if n == 0 {
            return Err(Error::Validation("dihedral quandle needs n ≥ 1".into()));
        }
        Quandle::takasaki(&GroupSpec::new(vec![n])?)
    }

    /// The trivial quandle `x_i ▷ x_j = x_i`.
    pub fn trivial(n: usize) -> Result<Quandle> {
        if n == 0 {
            return Err(Error::Validation("trivial quandle needs n ≥ 1".into()));
        }
        check_cap(n)?;
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = i;
            }
        }
        Ok(Quandle {
            size: n,
            table,
            labels: (0..n).map(|i| i.to_string()).collect(),
            takasaki: None,
        })
    }

    /// Componentwise product on pairs, row-major: `(i_a, i_b) ↦ i_a·|b| + i_b`.
    pub fn direct_product(a: &Quandle, b: &Quandle) -> Result<Quandle> {
        let n = a.size * b.size;
        check_cap(n)?;
        let mut table = vec![0usize; n * n];
        let mut labels = Vec::with_capacity(n);
        for ia in 0..a.size {
            for ib in 0..b.size {
                labels.push(format!("({},{})", a.labels[ia], b.labels[ib]));
            }
        }
        for ia in 0..a.size {
            for ib in 0..b.size {
                let row = ia * b.size + ib;
                for ja in 0..a.size {
                    for jb in 0..b.size {
                        let col = ja * b.size + jb;
                        let ra = a.table[ia * a.size + ja];
                        let rb = b.table[ib * b.size + jb];
                        table[row * n + col] = ra * b.size + rb;
                    }
                }
            }
        }
        Ok(Quandle {
            size: n,
            table,
            labels,
            takasaki: None,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `x_i ▷ x_j` as a row index.
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.size + j]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Takasaki structure, when this quandle was built from a group spec.
    pub fn takasaki_data(&self) -> Option<&TakasakiData> {
        self.takasaki.as_ref()
    }

    /// Row index of the group element with the given coordinates.
    pub fn takasaki_index(&self, coords: &[u64]) -> Result<usize> {
        let data = self
            .takasaki
            .as_ref()
            .ok_or_else(|| Error::Validation("not a Takasaki quandle".into()))?;
        let e = data.spec.element(coords)?;
        data.index_of(&e)
            .ok_or_else(|| Error::Internal("element missing from index".into()))
    }

    /// Scans all three quandle axioms, recording the first witness of each
    /// violation (report stays bounded regardless of how broken the table is).
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size;
        let mut idempotence = AxiomCheck::ok();
        for i in 0..n {
            if self.op(i, i) != i {
                idempotence = AxiomCheck::fail([i, i, i]);
                break;
            }
        }

        let mut right_bijectivity = AxiomCheck::ok();
        'columns: for j in 0..n {
            let mut seen = vec![usize::MAX; n];
            for i in 0..n {
                let v = self.op(i, j);
                if seen[v] != usize::MAX {
                    right_bijectivity = AxiomCheck::fail([seen[v], i, j]);
                    break 'columns;
                }
                seen[v] = i;
            }
        }

        let mut right_distributivity = AxiomCheck::ok();
        'triples: for i in 0..n {
            for j in 0..n {
                let ij = self.op(i, j);
                for m in 0..n {
                    if self.op(ij, m) != self.op(self.op(i, m), self.op(j, m)) {
                        right_distributivity = AxiomCheck::fail([i, j, m]);
                        break 'triples;
                    }
                }
            }
        }

        AxiomReport {
            idempotence,
            right_bijectivity,
            right_distributivity,
        }
    }

    /// The right translation `R_{x_j} : i ↦ i ▷ j` as a permutation.
    ///
    /// Fails when `j` is out of range or the column is not a bijection.
    pub fn right_map(&self, j: usize) -> Result<Permutation> {
        if j >= self.size {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.size,
            });
        }
        Permutation::from_images((0..self.size).map(|i| self.op(i, j)).collect())
    }

    /// All right translations in element order.
    pub fn right_maps(&self) -> Result<Vec<Permutation>> {
        (0..self.size).map(|j| self.right_map(j)).collect()
    }

    /// Mutates one table entry; used to build axiom-violating mutants.
    pub fn set_entry(&mut self, i: usize, j: usize, v: usize) -> Result<()> {
        if i >= self.size || j >= self.size {
            return Err(Error::IndexOutOfRange {
                index: i.max(j),
                size: self.size,
            });
        }
        if v >= self.size {
            return Err(Error::Validation(format!(
                "table entry {v} out of range for order {}",
                self.size
            )));
        }
        self.table[i * self.size + j] = v;
        self.takasaki = None; // no longer matches any group structure
        Ok(())
    }

    /// Cayley-table text form: first line `n`, then `n` rows of `n`
    /// space-separated 0-based indices.
    pub fn to_table_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.size);
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.op(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Parses the text form produced by [`Quandle::to_table_text`].
    pub fn from_table_text(text: &str) -> Result<Quandle> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table text".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the order".into()))?;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {n} table rows")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad table entry \"{tok}\"")))
                })
                .collect::<Result<_>>()?;
            table.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after table rows".into()));
        }
        Quandle::from_table(table, None)
    }
}
