use super::Clutter;
use crate::bits::{self, VertexSet};
use crate::error::Result;
use serde::{Deserialize, Serialize};

/// Odd-cycle and leaf data of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleData {
    pub smallest_odd_cycle_length: Option<usize>,
    /// Chordless odd cycles, each listed in cyclic order from its least vertex.
    pub induced_odd_cycles: Vec<Vec<usize>>,
    /// Vertices of degree one.
    pub leaves: Vec<usize>,
    /// `neighbor_map[v]` is `N(v)`.
    pub neighbor_map: Vec<VertexSet>,
}

impl Clutter {
    pub fn odd_cycle_data(&self) -> Result<OddCycleData> {
        self.require_graph()?;
        let neighbor_map: Vec<VertexSet> = (0..self.n).map(|v| self.neighbors(v)).collect();
        let mut cycles: Vec<Vec<usize>> = self
            .induced_cycles(3)?
            .into_iter()
            .filter(|s| s.count_ones() % 2 == 1)
            .map(|s| cyclic_order(&neighbor_map, s))
            .collect();
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(OddCycleData {
            smallest_odd_cycle_length: cycles.first().map(Vec::len),
            induced_odd_cycles: cycles,
            leaves: (0..self.n).filter(|&v| self.degree(v) == 1).collect(),
            neighbor_map,
        })
    }

    /// Vertex sets of all odd cycles (chords allowed), sorted.
    pub(crate) fn odd_cycle_vertex_sets(&self) -> Vec<VertexSet> {
        let n = self.n;
        let adj: Vec<VertexSet> = (0..n).map(|v| self.neighbors(v)).collect();
        let mut found = std::collections::BTreeSet::new();
        // Paths from their least vertex `s`; reach[mask] holds the endpoints.
        for s in 0..n {
            let allowed = bits::full(n) & !((1u64 << s) - 1);
            let mut reach: std::collections::HashMap<VertexSet, VertexSet> =
                std::collections::HashMap::new();
            reach.insert(1 << s, 1 << s);
            let mut layer = vec![1u64 << s];
            while !layer.is_empty() {
                let mut next = Vec::new();
                for mask in layer {
                    let ends = reach[&mask];
                    if mask.count_ones() >= 3 && mask.count_ones() % 2 == 1 && ends & adj[s] != 0 {
                        found.insert(mask);
                    }
                    for e in bits::elements(ends) {
                        for w in bits::elements(adj[e] & allowed & !mask) {
                            let m2 = mask | 1 << w;
                            let entry = reach.entry(m2).or_insert_with(|| {
                                next.push(m2);
                                0
                            });
                            *entry |= 1 << w;
                        }
                    }
                }
                layer = next;
            }
        }
        found.into_iter().collect()
    }
}

/// Cycle order of a set inducing a chordless cycle.
fn cyclic_order(adj: &[VertexSet], s: VertexSet) -> Vec<usize> {
    let start = s.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (adj[start] & s).trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next = (adj[cur] & s & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}
