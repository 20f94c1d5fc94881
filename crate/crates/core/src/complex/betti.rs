//! Graded Betti numbers of `R/I` from Hochster's formula
//! `β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ_σ)`.

use super::homology::{reduced_homology_of_faces, CoefficientField};
use crate::bits::{self, VertexSet};
use crate::error::{guard, Result};
use crate::limits::Limits;
use crate::monomial::MonomialIdeal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// Nonzero graded Betti numbers `β_{i,j}` of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiRepr", from = "BettiRepr")]
pub struct BettiTable {
    field: CoefficientField,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiRepr {
    characteristic: CoefficientField,
    entries: Vec<BettiEntry>,
}

impl From<BettiTable> for BettiRepr {
    fn from(b: BettiTable) -> Self {
        BettiRepr {
            characteristic: b.field,
            entries: b.entries(),
        }
    }
}

impl From<BettiRepr> for BettiTable {
    fn from(r: BettiRepr) -> Self {
        BettiTable {
            field: r.characteristic,
            entries: r
                .entries
                .into_iter()
                .filter(|e| e.value > 0)
                .map(|e| ((e.i, e.j), e.value))
                .collect(),
        }
    }
}

/// `reg`, `pd`, `depth = n - pd` and Krull dimension of `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalInvariants {
    pub field: CoefficientField,
    pub reg: usize,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
}

impl BettiTable {
    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
            .collect()
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `max{i : β_{i,j} ≠ 0}`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Regularity of the ideal `I` itself: `reg(R/I) + 1`, or 0 for `I = 0`.
    pub fn ideal_reg(&self) -> usize {
        if self.pd() == 0 {
            0
        } else {
            self.reg() + 1
        }
    }
}

impl fmt::Display for BettiTable {
    /// Rows indexed by `j - i`, columns by `i`, zeros printed as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pd, reg) = (self.pd(), self.reg());
        let cell = |s: String| format!("{s:>w$}", w = 1 + self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len()));
        let mut head = format!("{:>7}", "");
        let mut total = format!("{:>7}", "total:");
        for i in 0..=pd {
            head += &cell(i.to_string());
            total += &cell(self.total(i).to_string());
        }
        writeln!(f, "{head}")?;
        writeln!(f, "{total}")?;
        for r in 0..=reg {
            let mut line = format!("{:>7}", format!("{r}:"));
            for i in 0..=pd {
                let v = self.get(i, i + r);
                line += &cell(if v == 0 { ".".into() } else { v.to_string() });
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl MonomialIdeal {
    /// Betti table of `R/I` over `field` for square-free `I`.
    pub fn betti_table(&self, field: CoefficientField) -> Result<BettiTable> {
        self.require_squarefree()?;
        let n = self.nvars();
        guard("variables for Betti tables", n, Limits::get().betti_vars)?;
        let gens = self.support_sets();
        let max_faces = Limits::get().max_faces;
        // Δ_σ is a cone unless σ is a union of generators inside σ.
        let sigmas: Vec<VertexSet> = bits::subsets(bits::full(n))
            .filter(|&s| gens.iter().filter(|&&e| e & s == e).fold(0, |a, e| a | e) == s)
            .collect();
        let parts: Vec<Vec<((usize, usize), u64)>> = sigmas
            .par_iter()
            .map(|&s| {
                let faces: Vec<VertexSet> = {
                    let mut v: Vec<VertexSet> = bits::subsets(s)
                        .filter(|&f| gens.iter().all(|&e| e & f != e))
                        .collect();
                    v.sort_by_key(|f| (f.count_ones(), *f));
                    v
                };
                if faces.len() > max_faces {
                    return Err(crate::Error::ResourceExceeded {
                        what: "faces",
                        limit: max_faces,
                    });
                }
                let h = reduced_homology_of_faces(&faces, field);
                let size = bits::len(s);
                // h[k+1] = dim H̃_k contributes to i = |σ| - k - 1.
                Ok(h.iter()
                    .enumerate()
                    .filter(|(_, &r)| r > 0)
                    .map(|(idx, &r)| ((size - idx, size), r as u64))
                    .collect())
            })
            .collect::<Result<_>>()?;
        let mut entries = BTreeMap::new();
        for part in parts {
            for (key, v) in part {
                *entries.entry(key).or_insert(0) += v;
            }
        }
        Ok(BettiTable { field, entries })
    }

    /// `reg`, `pd`, `depth` and `dim` of `R/I` for square-free `I`.
    pub fn homological_invariants(&self, field: CoefficientField) -> Result<HomologicalInvariants> {
        let b = self.betti_table(field)?;
        let dim = self.nvars()
            - self
                .minimal_prime_supports()?
                .iter()
                .map(|s| bits::len(*s))
                .min()
                .unwrap_or(0);
        Ok(HomologicalInvariants {
            field,
            reg: b.reg(),
            pd: b.pd(),
            depth: self.nvars() - b.pd(),
            dim,
        })
    }
}
