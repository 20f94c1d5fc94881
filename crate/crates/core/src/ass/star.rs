//! Embedded primes of `I^t` grown outward from odd cycles.
//!
//! A state is a red set `R` entering at power `t`. Seeds are unions of
//! pairwise disjoint, pairwise non-adjacent odd cycles and loops; a union of
//! cycles of lengths `2k_i + 1` enters at `1 + Σ k_i`. Moving one blue vertex
//! (a neighbor of `R` outside `R`) into `R` raises the power by one. Each
//! state yields the primes `R ∪ N(R) ∪ L ∪ C`, where `L` holds the linear
//! generators and `C` ranges over the minimal covers of the edges and loops
//! missing `R ∪ N(R)`.

use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use crate::monomial::{MonomialIdeal, PrimeSet};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssStarState {
    pub red: VertexSet,
    /// `N(red) \ red`.
    pub blue: VertexSet,
    /// Minimal cover of the edges and loops avoiding `red ∪ blue`.
    pub cover_rest: VertexSet,
    /// Least power at which the prime enters.
    pub t: u32,
}

impl AssStarState {
    pub fn prime_support(&self) -> VertexSet {
        self.red | self.blue | self.cover_rest
    }
}

/// Generators split into edges, loops (pure powers of degree ≥ 2) and
/// linear forms.
struct LoopedGraph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<VertexSet>,
    loops: VertexSet,
    linear: VertexSet,
}

impl LoopedGraph {
    fn new(i: &MonomialIdeal) -> Result<Self> {
        let n = i.nvars();
        guard("vertices for Ass*", n, Limits::get().ass_star_vertices)?;
        let mut g = LoopedGraph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
            loops: 0,
            linear: 0,
        };
        for m in i.generators() {
            let s = m.support();
            match (bits::len(s), m.degree()) {
                (1, 1) => g.linear |= s,
                (1, _) => g.loops |= s,
                (2, 2) => {
                    let [a, b] = [s.trailing_zeros() as usize, 63 - s.leading_zeros() as usize];
                    g.adj[a] |= 1 << b;
                    g.adj[b] |= 1 << a;
                    g.edges.push(s);
                }
                _ => return Err(Error::GraphRequired),
            }
        }
        Ok(g)
    }

    fn neighborhood(&self, s: VertexSet) -> VertexSet {
        bits::elements(s).fold(0, |a, v| a | self.adj[v])
    }

    /// Seed red sets with their entry powers.
    fn seeds(&self) -> Result<Vec<(VertexSet, u32)>> {
        let graph = Clutter::new(self.n, self.edges.clone())?;
        let mut cycles: Vec<(VertexSet, u32)> = graph
            .odd_cycle_vertex_sets()
            .into_iter()
            .map(|s| (s, (s.count_ones() - 1) / 2))
            .collect();
        cycles.extend(bits::elements(self.loops).map(|v| (1u64 << v, 0)));
        let mut out = Vec::new();
        self.combine(&cycles, 0, 0, 0, &mut out);
        Ok(out)
    }

    fn combine(
        &self,
        cycles: &[(VertexSet, u32)],
        from: usize,
        red: VertexSet,
        k: u32,
        out: &mut Vec<(VertexSet, u32)>,
    ) {
        let closed = red | self.neighborhood(red);
        for (i, &(c, ck)) in cycles.iter().enumerate().skip(from) {
            if c & closed == 0 {
                out.push((red | c, 1 + k + ck));
                self.combine(cycles, i + 1, red | c, k + ck, out);
            }
        }
    }

    /// Least entry power of every red set reachable by power `t_max`.
    fn red_sets(&self, t_max: u32) -> Result<BTreeMap<VertexSet, u32>> {
        let mut best: HashMap<VertexSet, u32> = HashMap::new();
        for (r, t) in self.seeds()? {
            if t <= t_max {
                let e = best.entry(r).or_insert(t);
                *e = (*e).min(t);
            }
        }
        let mut buckets: BTreeMap<u32, Vec<VertexSet>> = BTreeMap::new();
        for (&r, &t) in &best {
            buckets.entry(t).or_default().push(r);
        }
        while let Some((t, reds)) = buckets.pop_first() {
            for r in reds {
                if best[&r] != t || t == t_max {
                    continue;
                }
                for x in bits::elements(self.neighborhood(r) & !r) {
                    let r2 = r | 1 << x;
                    if best.get(&r2).is_none_or(|&old| old > t + 1) {
                        best.insert(r2, t + 1);
                        buckets.entry(t + 1).or_default().push(r2);
                    }
                }
            }
        }
        Ok(best.into_iter().collect())
    }

    fn states(&self, t_max: u32) -> Result<Vec<AssStarState>> {
        let mut out = Vec::new();
        for (red, t) in self.red_sets(t_max)? {
            let blue = self.neighborhood(red) & !red;
            let p1 = red | blue;
            let mut rest: Vec<VertexSet> = self.edges.iter().copied().filter(|e| e & p1 == 0).collect();
            rest.extend(bits::elements(self.loops & !p1).map(|v| 1u64 << v));
            for cover in bits::minimal_transversals(&rest) {
                out.push(AssStarState {
                    red,
                    blue,
                    cover_rest: cover | self.linear,
                    t,
                });
            }
        }
        out.sort_by_key(|s| (s.t, bits::to_vec(s.red), bits::to_vec(s.cover_rest)));
        Ok(out)
    }
}

impl MonomialIdeal {
    /// Growth states of `Ass*(R/I^t)` for `t ≤ t_max`, for ideals generated
    /// by edges, pure powers and variables.
    pub fn ass_star_states(&self, t_max: u32) -> Result<Vec<AssStarState>> {
        LoopedGraph::new(self)?.states(t_max)
    }

    /// `Ass*(R/I^t)`: the grown primes that are not minimal over `I`.
    pub fn ass_star(&self, t: u32) -> Result<PrimeSet> {
        let min = self.minimal_primes();
        Ok(PrimeSet::from_supports(
            self.ass_star_states(t)?
                .iter()
                .map(AssStarState::prime_support)
                .filter(|&s| !min.contains_support(s)),
        ))
    }
}
