use super::Clutter;
use crate::bits::{self, VertexSet};
use crate::error::{guard, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};

/// Covering, independence and matching numbers of a clutter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub alpha0: usize,
    pub beta0: usize,
    pub beta1: usize,
    pub im: usize,
    /// Smallest maximal matching; graphs only.
    pub beta_prime: Option<usize>,
    pub alpha0_prime: usize,
    pub beta0_prime: usize,
}

impl Clutter {
    pub fn cover_invariants(&self) -> Result<InvariantRecord> {
        guard("vertices for cover invariants", self.n, Limits::get().cover_vertices)?;
        let covers = self.minimal_covers();
        let alpha0 = covers.iter().map(|c| bits::len(*c)).min().unwrap_or(0);
        let alpha0_prime = covers.iter().map(|c| bits::len(*c)).max().unwrap_or(0);
        Ok(InvariantRecord {
            alpha0,
            beta0: self.n - alpha0,
            beta1: self.matching_number(),
            im: self.induced_matching_number(),
            beta_prime: self.is_graph().then(|| self.min_maximal_matching()),
            alpha0_prime,
            beta0_prime: self.n - alpha0_prime,
        })
    }

    /// Maximum number of pairwise disjoint edges.
    pub fn matching_number(&self) -> usize {
        fn go(edges: &[VertexSet], used: VertexSet, size: usize, best: &mut usize) {
            let free: Vec<VertexSet> = edges.iter().copied().filter(|e| e & used == 0).collect();
            if free.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let remaining = bits::len(free.iter().fold(0, |a, e| a | e));
            let min_edge = free.iter().map(|e| bits::len(*e)).min().unwrap_or(1);
            if size + remaining / min_edge <= *best {
                return;
            }
            let v = free.iter().fold(0, |a, e| a | e).trailing_zeros();
            for &e in free.iter().filter(|e| *e >> v & 1 == 1) {
                go(&free, used | e, size + 1, best);
            }
            go(&free, used | 1 << v, size, best);
        }
        let mut best = 0;
        go(&self.edges, 0, 0, &mut best);
        best
    }

    /// `M` is a set of pairwise disjoint edges whose union contains no other edge.
    pub fn is_induced_matching(&self, m: &[VertexSet]) -> bool {
        let u = m.iter().fold(0, |a, e| a | e);
        let disjoint = m.iter().map(|e| bits::len(*e)).sum::<usize>() == bits::len(u);
        disjoint && self.edges.iter().filter(|&&e| e & u == e).count() == m.len()
    }

    /// Largest induced matching.
    pub fn induced_matching_number(&self) -> usize {
        fn go(c: &Clutter, start: usize, chosen: &mut Vec<VertexSet>, best: &mut usize) {
            *best = (*best).max(chosen.len());
            if chosen.len() + (c.edges.len() - start) <= *best {
                return;
            }
            let u = chosen.iter().fold(0, |a, e| a | e);
            for k in start..c.edges.len() {
                let e = c.edges[k];
                if e & u != 0 {
                    continue;
                }
                let w = u | e;
                if c.edges.iter().filter(|&&f| f & w == f).count() != chosen.len() + 1 {
                    continue;
                }
                chosen.push(e);
                go(c, k + 1, chosen, best);
                chosen.pop();
            }
        }
        let mut best = 0;
        go(self, 0, &mut Vec::new(), &mut best);
        best
    }

    /// Smallest maximal matching of a graph (minimum edge dominating matching).
    fn min_maximal_matching(&self) -> usize {
        fn go(edges: &[VertexSet], matched: VertexSet, size: usize, best: &mut usize) {
            if size >= *best {
                return;
            }
            let Some(&e) = edges.iter().find(|&&e| e & matched == 0) else {
                *best = size;
                return;
            };
            // e must be dominated: some free edge through one of its ends joins.
            for &f in edges.iter().filter(|&&f| f & e != 0 && f & matched == 0) {
                go(edges, matched | f, size + 1, best);
            }
        }
        let mut best = usize::MAX;
        go(&self.edges, 0, 0, &mut best);
        best
    }
}
