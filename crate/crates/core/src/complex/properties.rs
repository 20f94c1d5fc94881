//! Cohen-Macaulay type properties of simplicial complexes.

use super::homology::CoefficientField;
use super::SimplicialComplex;
use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{guard, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProperties {
    pub field: CoefficientField,
    pub cm: bool,
    pub scm: bool,
    pub shellable: bool,
    pub vertex_decomposable: bool,
    pub connected_codim1: bool,
    pub unmixed: bool,
}

impl SimplicialComplex {
    /// Reisner: every link `lk(F)` has `H̃_i = 0` for `i < dim lk(F)`.
    pub fn is_cohen_macaulay(&self, field: CoefficientField) -> Result<bool> {
        if !self.is_pure() {
            return Ok(false);
        }
        for face in self.faces()? {
            let lk = self.link(face);
            let h = lk.reduced_homology(field)?;
            // h[k] is H̃_{k-1}; the last entry is the top dimension.
            if h.iter().rev().skip(1).any(|&r| r > 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Duval: `Δ^[i]` is Cohen-Macaulay for every `-1 ≤ i ≤ dim Δ`.
    pub fn is_sequentially_cm(&self, field: CoefficientField) -> Result<bool> {
        let Some(d) = self.dim() else { return Ok(true) };
        for i in -1..=d {
            if !self.pure_skeleton(i)?.is_cohen_macaulay(field)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `1 + max{i : K[Δ^i] is CM}`, which equals `depth K[Δ]`.
    pub fn depth_from_skeletons(&self, field: CoefficientField) -> Result<usize> {
        let d = self.dim().unwrap_or(-1);
        let mut best = -1;
        for i in -1..=d {
            if self.skeleton(i)?.is_cohen_macaulay(field)? {
                best = i;
            }
        }
        Ok((best + 1) as usize)
    }

    /// Existence of a (possibly non-pure) shelling order.
    pub fn is_shellable(&self) -> Result<bool> {
        let f = self.facets();
        let m = f.len();
        guard("facets for shellability", m, Limits::get().shell_facets)?;
        if m <= 1 {
            return Ok(true);
        }
        // F_j may follow the set S iff each F_j \ F_i (i ∈ S) contains a
        // vertex v with F_j \ {v} ⊆ F_l for some l ∈ S.
        let can_follow = |s: u32, j: usize| -> bool {
            let mut u: VertexSet = 0;
            for l in bits::elements(s as u64) {
                let d = f[j] & !f[l];
                if d.count_ones() == 1 {
                    u |= d;
                }
            }
            bits::elements(s as u64).all(|i| f[j] & !f[i] & u != 0)
        };
        let mut dead = HashSet::new();
        fn extend(
            s: u32,
            m: usize,
            dead: &mut HashSet<u32>,
            ok: &dyn Fn(u32, usize) -> bool,
        ) -> bool {
            if s.count_ones() as usize == m {
                return true;
            }
            if dead.contains(&s) {
                return false;
            }
            for j in 0..m {
                if s & (1 << j) == 0 && ok(s, j) && extend(s | 1 << j, m, dead, ok) {
                    return true;
                }
            }
            dead.insert(s);
            false
        }
        Ok((0..m).any(|j| extend(1 << j, m, &mut dead, &can_follow)))
    }

    /// A simplex, or some shedding vertex `v` has a vertex decomposable link
    /// and deletion and no facet of `lk(v)` is a facet of `del(v)`.
    pub fn is_vertex_decomposable(&self) -> bool {
        fn vd(facets: &[VertexSet], memo: &mut HashMap<Vec<VertexSet>, bool>) -> bool {
            if facets.len() <= 1 {
                return true;
            }
            if let Some(&r) = memo.get(facets) {
                return r;
            }
            let verts = facets.iter().fold(0, |a, f| a | f);
            let mut result = false;
            for v in bits::elements(verts) {
                let bit = 1u64 << v;
                let lk = bits::maximal_sets(
                    facets.iter().filter(|&&f| f & bit != 0).map(|&f| f & !bit).collect(),
                );
                let del = bits::maximal_sets(facets.iter().map(|&f| f & !bit).collect());
                if lk.iter().any(|g| del.contains(g)) {
                    continue;
                }
                if vd(&lk, memo) && vd(&del, memo) {
                    result = true;
                    break;
                }
            }
            memo.insert(facets.to_vec(), result);
            result
        }
        vd(self.facets(), &mut HashMap::new())
    }

    /// Pure, and any two facets are joined by a chain of facets meeting
    /// consecutively in codimension one.
    pub fn is_connected_in_codim_one(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let f = self.facets();
        if f.len() <= 1 {
            return true;
        }
        let k = f[0].count_ones() - 1;
        let mut seen = vec![false; f.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..f.len() {
                if !seen[j] && (f[i] & f[j]).count_ones() == k {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn ring_properties(&self, field: CoefficientField) -> Result<RingProperties> {
        let cm = self.is_cohen_macaulay(field)?;
        Ok(RingProperties {
            field,
            cm,
            scm: cm || self.is_sequentially_cm(field)?,
            shellable: self.is_shellable()?,
            vertex_decomposable: self.is_vertex_decomposable(),
            connected_codim1: self.is_connected_in_codim_one(),
            unmixed: self.is_pure(),
        })
    }
}

impl Clutter {
    /// Properties of `R/I(C)` read off the independence complex.
    pub fn ring_properties(&self, field: CoefficientField) -> Result<RingProperties> {
        SimplicialComplex::independence(self).ring_properties(field)
    }
}
