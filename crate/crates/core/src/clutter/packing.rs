use super::Clutter;
use crate::bits::{self, VertexSet};
use crate::error::{guard, Result};
use crate::limits::Limits;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A minor without the König property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingMinor {
    /// Deleted vertices of the original clutter.
    pub delete: VertexSet,
    /// Contracted vertices of the original clutter.
    pub contract: VertexSet,
    pub minor: Clutter,
    pub alpha0: usize,
    pub beta1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingReport {
    pub konig: bool,
    pub packing: bool,
    /// A failing minor none of whose proper minors fail.
    pub witness: Option<FailingMinor>,
}

impl Clutter {
    /// Some vertex cover has at most `k` vertices.
    pub fn has_cover_within(&self, k: usize) -> bool {
        fn go(edges: &[VertexSet], chosen: VertexSet, left: usize) -> bool {
            let Some(&e) = edges.iter().find(|&&e| e & chosen == 0) else {
                return true;
            };
            left > 0 && bits::elements(e).any(|v| go(edges, chosen | 1 << v, left - 1))
        }
        go(&self.edges, 0, k)
    }

    /// `α0 = β1`. Since `β1 ≤ α0`, it suffices to find a cover of size `β1`.
    pub fn is_konig(&self) -> bool {
        self.has_cover_within(self.matching_number())
    }

    /// König property of the clutter and of all its minors. Minors are
    /// visited by increasing size; within a size, removed sets in
    /// lexicographic order and, for each, contraction sets by increasing size
    /// then lexicographically, so pure deletions come first. Minors whose
    /// contraction empties an edge are skipped.
    pub fn konig_and_packing(&self) -> Result<PackingReport> {
        guard("vertices for minor enumeration", self.n, Limits::get().packing_vertices)?;
        let konig = self.is_konig();
        let n = self.n;
        for kept in 0..=n {
            let mut removed: Vec<VertexSet> = bits::subsets(self.vertices())
                .filter(|&r| bits::len(r) == n - kept)
                .collect();
            removed.sort_by(|a, b| bits::elements(*a).cmp(bits::elements(*b)));
            let mut jobs = Vec::new();
            for r in removed {
                let mut cs: Vec<VertexSet> = bits::subsets(r).collect();
                cs.sort_by(|a, b| {
                    a.count_ones()
                        .cmp(&b.count_ones())
                        .then_with(|| bits::elements(*a).cmp(bits::elements(*b)))
                });
                jobs.extend(cs.into_iter().map(|c| (r & !c, c)));
            }
            let failing = jobs.par_iter().find_map_first(|&(d, c)| {
                let m = self.minor(d, c).ok()?;
                (!m.is_konig()).then(|| {
                    let alpha0 = m.minimal_covers().iter().map(|s| bits::len(*s)).min().unwrap_or(0);
                    let beta1 = m.matching_number();
                    FailingMinor {
                        delete: d,
                        contract: c,
                        minor: m,
                        alpha0,
                        beta1,
                    }
                })
            });
            if let Some(w) = failing {
                return Ok(PackingReport {
                    konig,
                    packing: false,
                    witness: Some(w),
                });
            }
        }
        Ok(PackingReport {
            konig,
            packing: true,
            witness: None,
        })
    }
}
