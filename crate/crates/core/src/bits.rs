//! Vertex sets as `u64` bit masks (vertex `i` is bit `i`, 0-based).

/// A set of at most 64 vertices.
pub type VertexSet = u64;

/// Iterates the elements of `set` in increasing order.
pub fn elements(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn to_vec(set: VertexSet) -> Vec<usize> {
    elements(set).collect()
}

pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> VertexSet {
    items.into_iter().fold(0, |acc, i| acc | (1u64 << i))
}

/// All vertices `0..n`.
pub fn full(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn len(set: VertexSet) -> usize {
    set.count_ones() as usize
}

/// Iterates every subset of `set`, starting with the empty set.
pub fn subsets(set: VertexSet) -> impl Iterator<Item = VertexSet> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set {
            None
        } else {
            Some((cur.wrapping_sub(set)) & set)
        };
        Some(cur)
    })
}

/// Keeps the inclusion-minimal sets, sorted and without duplicates.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-maximal sets, sorted and without duplicates.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == s) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Minimal transversals (minimal hitting sets) of a family of nonempty sets,
/// by incremental transversal expansion.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut current: Vec<VertexSet> = vec![0];
    for &e in family {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(elements(e).map(|v| t | (1u64 << v)));
            }
        }
        current = minimal_sets(next);
    }
    current
}
