use super::Clutter;
use crate::bits::{self, VertexSet};
use crate::error::{guard, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};

/// Structural predicates. Graph-only entries are `None` for other clutters;
/// `b_graph` is also `None` for graphs with isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub bipartite: Option<bool>,
    pub chordal: Option<bool>,
    pub weakly_chordal: Option<bool>,
    pub perfect: Option<bool>,
    pub uniform_d: Option<usize>,
    pub balanced: bool,
    pub totally_balanced: bool,
    pub diadic: bool,
    pub binary: bool,
    pub b_graph: Option<bool>,
}

impl Clutter {
    pub fn structure_flags(&self) -> Result<StructureFlags> {
        let graph = self.is_graph();
        let (weakly_chordal, perfect) = if graph {
            (Some(self.is_weakly_chordal()?), Some(self.is_perfect()?))
        } else {
            (None, None)
        };
        Ok(StructureFlags {
            bipartite: graph.then(|| self.is_bipartite().expect("graph")),
            chordal: graph.then(|| self.is_chordal().expect("graph")),
            weakly_chordal,
            perfect,
            uniform_d: self.uniformity(),
            balanced: self.is_balanced()?,
            totally_balanced: self.is_totally_balanced()?,
            diadic: self.is_diadic(),
            binary: self.is_binary(),
            b_graph: if graph { self.is_b_graph()? } else { None },
        })
    }

    /// Two-colourable graph.
    pub fn is_bipartite(&self) -> Result<bool> {
        self.require_graph()?;
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in bits::elements(self.neighbors(v)) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every cycle of length ≥ 4 has a chord; decided by simplicial elimination.
    pub fn is_chordal(&self) -> Result<bool> {
        self.require_graph()?;
        let adj: Vec<VertexSet> = (0..self.n).map(|v| self.neighbors(v)).collect();
        let mut alive = self.vertices();
        while alive != 0 {
            let simplicial = bits::elements(alive).find(|&v| {
                let nb = adj[v] & alive;
                bits::elements(nb).all(|w| nb & !(1 << w) & !adj[w] == 0)
            });
            match simplicial {
                Some(v) => alive &= !(1 << v),
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Vertex sets inducing a chordless cycle of length at least `min_len`.
    pub fn induced_cycles(&self, min_len: usize) -> Result<Vec<VertexSet>> {
        self.require_graph()?;
        guard("vertices for induced-cycle scan", self.n, Limits::get().scan_vertices)?;
        let adj: Vec<VertexSet> = (0..self.n).map(|v| self.neighbors(v)).collect();
        Ok(bits::subsets(self.vertices())
            .filter(|&s| bits::len(s) >= min_len.max(3) && induces_cycle(&adj, s))
            .collect())
    }

    fn has_hole(&self, min_len: usize, odd_only: bool) -> Result<bool> {
        Ok(self
            .induced_cycles(min_len)?
            .iter()
            .any(|&s| !odd_only || bits::len(s) % 2 == 1))
    }

    /// No induced cycle of length ≥ 5 in the graph or its complement.
    pub fn is_weakly_chordal(&self) -> Result<bool> {
        Ok(!self.has_hole(5, false)? && !self.complement()?.has_hole(5, false)?)
    }

    /// No odd hole and no odd antihole of length ≥ 5.
    pub fn is_perfect(&self) -> Result<bool> {
        guard("vertices for perfection test", self.n, Limits::get().perfect_vertices)?;
        Ok(!self.has_hole(5, true)? && !self.complement()?.has_hole(5, true)?)
    }

    /// Lengths of the incidence cycles: square submatrices of the incidence
    /// matrix with exactly two ones in each row and column that form a single
    /// cycle. `stop` ends the search early.
    fn incidence_cycle(&self, stop: &dyn Fn(usize) -> bool) -> Result<bool> {
        guard("vertices for submatrix scan", self.n, Limits::get().scan_vertices)?;
        struct Search<'a> {
            edges: &'a [VertexSet],
            stop: &'a dyn Fn(usize) -> bool,
            first: usize,
            verts: VertexSet,
            used: Vec<VertexSet>,
        }
        impl Search<'_> {
            /// Extends from the current vertex `v`.
            fn from_vertex(&mut self, v: usize) -> bool {
                let prev = self.used.last().copied();
                for &e in self.edges {
                    if e >> v & 1 == 0 || Some(e) == prev || self.used.contains(&e) {
                        continue;
                    }
                    let others = e & self.verts & !(1 << v);
                    if others == 1 << self.first && self.used.len() >= 1 {
                        if (self.stop)(self.used.len() + 1) {
                            return true;
                        }
                        continue;
                    }
                    if others != 0 {
                        continue;
                    }
                    let blocked = self.used.iter().fold(0, |a, f| a | f);
                    for w in bits::elements(e & !self.verts) {
                        if w < self.first || blocked >> w & 1 == 1 {
                            continue;
                        }
                        self.used.push(e);
                        self.verts |= 1 << w;
                        let hit = self.from_vertex(w);
                        self.verts &= !(1 << w);
                        self.used.pop();
                        if hit {
                            return true;
                        }
                    }
                }
                false
            }
        }
        for first in 0..self.n {
            let mut s = Search {
                edges: &self.edges,
                stop,
                first,
                verts: 1 << first,
                used: Vec::new(),
            };
            if s.from_vertex(first) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// No square submatrix of odd order with two ones per row and column.
    pub fn is_balanced(&self) -> Result<bool> {
        Ok(!self.incidence_cycle(&|k| k % 2 == 1)?)
    }

    /// No square submatrix of order ≥ 3 with two ones per row and column.
    pub fn is_totally_balanced(&self) -> Result<bool> {
        Ok(!self.incidence_cycle(&|k| k >= 3)?)
    }

    /// `|e ∩ c| ≤ 2` for every edge `e` and minimal cover `c`.
    pub fn is_diadic(&self) -> bool {
        let covers = self.minimal_covers();
        self.edges
            .iter()
            .all(|e| covers.iter().all(|c| (e & c).count_ones() <= 2))
    }

    /// `|e ∩ c|` odd for every edge `e` and minimal cover `c`.
    pub fn is_binary(&self) -> bool {
        let covers = self.minimal_covers();
        self.edges
            .iter()
            .all(|e| covers.iter().all(|c| (e & c).count_ones() % 2 == 1))
    }

    /// Every vertex lies in a maximum independent set; `None` when the graph
    /// has isolated vertices.
    pub fn is_b_graph(&self) -> Result<Option<bool>> {
        self.require_graph()?;
        if self.isolated() != 0 {
            return Ok(None);
        }
        let indep = self.maximal_independent_sets();
        let beta0 = indep.iter().map(|s| bits::len(*s)).max().unwrap_or(0);
        let union = indep
            .iter()
            .filter(|s| bits::len(**s) == beta0)
            .fold(0, |a, s| a | s);
        Ok(Some(union == self.vertices()))
    }
}

/// `G[s]` is a single cycle.
fn induces_cycle(adj: &[VertexSet], s: VertexSet) -> bool {
    if bits::elements(s).any(|v| (adj[v] & s).count_ones() != 2) {
        return false;
    }
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in bits::elements(adj[v] & s & !seen) {
            seen |= 1 << w;
            stack.push(w);
        }
    }
    seen == s
}
