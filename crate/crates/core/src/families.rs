//! Test families: graphs and clutters up to isomorphism, uniform clutters,
//! and seeded random clutters.

use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashSet};

/// Largest vertex count for graph enumeration.
pub const MAX_GRAPH_VERTICES: usize = 9;
/// Largest ground set for clutter enumeration.
pub const MAX_CLUTTER_VERTICES: usize = 6;

fn too_large(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceExceeded { what, limit });
    }
    Ok(())
}

/// Colour refinement: vertices get isomorphism-invariant colours `0..k`.
fn refine(adj: &[VertexSet]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = bits::elements(adj[v]).map(|w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            sig.iter().collect::<std::collections::BTreeSet<_>>().into_iter().zip(0..).collect();
        let next: Vec<usize> = sig.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

/// Upper-triangle adjacency bits after placing vertex `order[i]` at `i`.
fn code(adj: &[VertexSet], order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Canonical code of a graph on at most 11 vertices: the least adjacency
/// code over the orderings that list colour classes in colour order.
pub(crate) fn canonical_graph_code(adj: &[VertexSet]) -> u64 {
    let color = refine(adj);
    let k = color.iter().max().map_or(0, |m| m + 1);
    let cells: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|c| permutations(&(0..adj.len()).filter(|&v| color[v] == c).collect::<Vec<_>>()))
        .collect();
    let mut best = u64::MAX;
    let mut choice = vec![0usize; k];
    loop {
        let order: Vec<usize> = (0..k).flat_map(|c| cells[c][choice[c]].iter().copied()).collect();
        best = best.min(code(adj, &order));
        let mut c = 0;
        while c < k {
            choice[c] += 1;
            if choice[c] < cells[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
        if c == k {
            return best;
        }
    }
}

/// One graph from each isomorphism class on exactly `n` vertices, in a
/// deterministic order.
pub fn graphs(n: usize) -> Result<Vec<Clutter>> {
    too_large("vertices for graph enumeration", n, MAX_GRAPH_VERTICES)?;
    let mut level: Vec<Vec<VertexSet>> = vec![Vec::new()];
    for m in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nb in 0..1u64 << (m - 1) {
                let mut a = adj.clone();
                for w in bits::elements(nb) {
                    a[w] |= 1 << (m - 1);
                }
                a.push(nb);
                if seen.insert(canonical_graph_code(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|adj| from_adjacency(&adj)).collect())
}

fn from_adjacency(adj: &[VertexSet]) -> Clutter {
    let n = adj.len();
    let edges = (0..n)
        .flat_map(|v| bits::elements(adj[v] & !((2u64 << v) - 1)).map(move |w| 1u64 << v | 1 << w))
        .collect();
    Clutter::new(n, edges).expect("graph edges form a clutter")
}

pub fn is_connected(c: &Clutter) -> bool {
    let n = c.n();
    if n == 0 {
        return true;
    }
    let mut seen: VertexSet = 1;
    let mut frontier: VertexSet = 1;
    while frontier != 0 {
        let next = bits::elements(frontier).fold(0, |a, v| a | c.neighbors(v));
        frontier = next & !seen;
        seen |= next;
    }
    seen == bits::full(n)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Clutter>> {
    Ok(graphs(n)?.into_iter().filter(is_connected).collect())
}

/// Graphs on `1..=max_n` vertices up to isomorphism.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Clutter>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(graphs(n)?);
    }
    Ok(out)
}


/// Colour refinement on the vertices of a clutter: a vertex is split by the
/// colour multisets of the edges through it.
fn refine_clutter(n: usize, edges: &[VertexSet]) -> Vec<usize> {
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sig: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut through: Vec<Vec<usize>> = edges
                    .iter()
                    .filter(|&&e| e >> v & 1 == 1)
                    .map(|&e| {
                        let mut c: Vec<usize> = bits::elements(e).map(|w| color[w]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                through.sort_unstable();
                (color[v], through)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<Vec<usize>>), usize> =
            sig.iter().collect::<std::collections::BTreeSet<_>>().into_iter().zip(0..).collect();
        color = sig.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return color;
        }
        classes = ranks.len();
    }
}

/// Canonical family mask: the least mask over the relabellings that place
/// colour classes in colour order.
fn canonical_clutter_mask(n: usize, edges: &[VertexSet]) -> u64 {
    let color = refine_clutter(n, edges);
    let k = color.iter().max().map_or(0, |m| m + 1);
    let cells: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|c| permutations(&(0..n).filter(|&v| color[v] == c).collect::<Vec<_>>()))
        .collect();
    let mut best = u64::MAX;
    let mut choice = vec![0usize; k];
    let mut position = vec![0usize; n];
    loop {
        for (i, v) in (0..k).flat_map(|c| cells[c][choice[c]].iter().copied()).enumerate() {
            position[v] = i;
        }
        let image = edges
            .iter()
            .map(|&e| bits::elements(e).fold(0u64, |a, v| a | 1 << position[v]));
        best = best.min(image.fold(0, |a, e| a | 1 << e));
        let mut c = 0;
        while c < k {
            choice[c] += 1;
            if choice[c] < cells[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
        if c == k {
            return best;
        }
    }
}

/// One clutter from each isomorphism class on exactly `n ≤ 6` vertices,
/// including the discrete clutter, ordered by number of edges.
pub fn clutters(n: usize) -> Result<Vec<Clutter>> {
    too_large("vertices for clutter enumeration", n, MAX_CLUTTER_VERTICES)?;
    // Deleting an edge keeps a clutter, so each class with m edges extends
    // some class with m - 1 edges.
    let mut level: Vec<Vec<VertexSet>> = vec![Vec::new()];
    let mut out = Vec::new();
    while !level.is_empty() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for s in 1..1u64 << n {
                if edges.iter().all(|&e| e & s != e && e & s != s) {
                    let mut grown = edges.clone();
                    grown.push(s);
                    if seen.insert(canonical_clutter_mask(n, &grown)) {
                        next.push(grown);
                    }
                }
            }
        }
        out.extend(level.into_iter().map(|e| Clutter::new(n, e).expect("antichain")));
        level = next;
    }
    Ok(out)
}

/// Clutters on `1..=max_n` vertices up to isomorphism.
pub fn clutters_up_to(max_n: usize) -> Result<Vec<Clutter>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(clutters(n)?);
    }
    Ok(out)
}

/// Calls `visit` on every `d`-uniform clutter on `0..n` (labelled, at least
/// one edge). There are `2^C(n,d) - 1` of them.
pub fn for_each_uniform(n: usize, d: usize, visit: &mut dyn FnMut(&Clutter)) -> Result<()> {
    let sets: Vec<VertexSet> = (0..1u64 << n).filter(|s| s.count_ones() as usize == d).collect();
    too_large("edges for uniform enumeration", sets.len(), 24)?;
    for mask in 1..1u64 << sets.len() {
        let edges = bits::elements(mask).map(|i| sets[i]).collect();
        visit(&Clutter::new(n, edges).expect("uniform families are clutters"));
    }
    Ok(())
}

/// `count` clutters on `n` vertices drawn from a seeded generator: each has
/// 1 to `2n` random edges of size 1 to `n - 1`, minimalized.
pub fn random_clutters(n: usize, count: usize, seed: u64) -> Vec<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = rng.gen_range(1..=2 * n);
            let edges = (0..q)
                .map(|_| {
                    let size = rng.gen_range(1..n.max(2));
                    let mut e = 0u64;
                    while (e.count_ones() as usize) < size {
                        e |= 1 << rng.gen_range(0..n);
                    }
                    e
                })
                .collect();
            Clutter::minimalize(n, edges).expect("nonempty edges")
        })
        .collect()
}

/// `count` random `d`-uniform clutters on `n` vertices.
pub fn random_uniform_clutters(n: usize, d: usize, count: usize, seed: u64) -> Vec<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets: Vec<VertexSet> = (0..1u64 << n).filter(|s| s.count_ones() as usize == d).collect();
    (0..count)
        .map(|_| {
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges: Vec<VertexSet> = sets.iter().copied().filter(|_| rng.gen_bool(p)).collect();
            if edges.is_empty() {
                edges.push(sets[rng.gen_range(0..sets.len())]);
            }
            Clutter::new(n, edges).expect("uniform families are clutters")
        })
        .collect()
}

/// `count` random graphs on `n` vertices with edge probability `p`.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        edges.push(1u64 << a | 1 << b);
                    }
                }
            }
            Clutter::new(n, edges).expect("graph")
        })
        .collect()
}
