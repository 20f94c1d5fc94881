//! Brute-force reference computations sharing no algorithm with the
//! library. Sets are bitmasks over `0..n`, monomials exponent vectors.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

pub type Set = u64;
pub type Mono = Vec<u32>;
/// Betti numbers of `R/I` keyed by `(i, j)`; zero entries absent.
pub type Betti = BTreeMap<(usize, usize), usize>;

pub fn members(s: Set) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| s >> i & 1 == 1)
}

pub fn size(s: Set) -> usize {
    s.count_ones() as usize
}

pub fn set(items: &[usize]) -> Set {
    items.iter().fold(0, |a, &i| a | 1 << i)
}

pub fn is_cover(edges: &[Set], s: Set) -> bool {
    edges.iter().all(|&e| e & s != 0)
}

pub fn minimal_covers(n: usize, edges: &[Set]) -> Vec<Set> {
    (0..1u64 << n)
        .filter(|&s| is_cover(edges, s) && members(s).all(|v| !is_cover(edges, s & !(1 << v))))
        .collect()
}

pub fn alpha0(n: usize, edges: &[Set]) -> usize {
    minimal_covers(n, edges).into_iter().map(size).min().unwrap_or(0)
}

pub fn alpha0_prime(n: usize, edges: &[Set]) -> usize {
    minimal_covers(n, edges).into_iter().map(size).max().unwrap_or(0)
}

pub fn is_independent(edges: &[Set], s: Set) -> bool {
    edges.iter().all(|&e| e & s != e)
}

pub fn beta0(n: usize, edges: &[Set]) -> usize {
    (0..1u64 << n).filter(|&s| is_independent(edges, s)).map(size).max().unwrap_or(0)
}

/// Every matching, as a list of edge indices.
pub fn matchings(edges: &[Set]) -> Vec<Vec<usize>> {
    fn go(edges: &[Set], from: usize, used: Set, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for i in from..edges.len() {
            if edges[i] & used == 0 {
                cur.push(i);
                go(edges, i + 1, used | edges[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn beta1(edges: &[Set]) -> usize {
    matchings(edges).iter().map(Vec::len).max().unwrap_or(0)
}

/// Largest matching whose union contains no other edge.
pub fn induced_matching_number(edges: &[Set]) -> usize {
    matchings(edges)
        .into_iter()
        .filter(|m| {
            let u = m.iter().fold(0, |a, &i| a | edges[i]);
            edges.iter().enumerate().all(|(j, &e)| e & u != e || m.contains(&j))
        })
        .map(|m| m.len())
        .max()
        .unwrap_or(0)
}

/// Smallest maximal matching.
pub fn min_maximal_matching(edges: &[Set]) -> usize {
    matchings(edges)
        .into_iter()
        .filter(|m| {
            let u = m.iter().fold(0, |a, &i| a | edges[i]);
            edges.iter().all(|&e| e & u != 0)
        })
        .map(|m| m.len())
        .min()
        .unwrap_or(0)
}

fn adjacency(n: usize, edges: &[Set]) -> Vec<Set> {
    (0..n)
        .map(|v| edges.iter().filter(|&&e| e >> v & 1 == 1).fold(0, |a, &e| a | e) & !(1 << v))
        .collect()
}

/// Whether some vertex set of size at least `k` induces a cycle.
pub fn has_induced_cycle(n: usize, edges: &[Set], k: usize) -> bool {
    let adj = adjacency(n, edges);
    (0..1u64 << n).filter(|&s| size(s) >= k).any(|s| {
        if !members(s).all(|v| size(adj[v] & s) == 2) {
            return false;
        }
        let start = s.trailing_zeros() as usize;
        let (mut seen, mut frontier) = (1u64 << start, 1u64 << start);
        while frontier != 0 {
            let next = members(frontier).fold(0, |a, v| a | adj[v]) & s & !seen;
            seen |= next;
            frontier = next;
        }
        seen == s
    })
}

pub fn complement_graph(n: usize, edges: &[Set]) -> Vec<Set> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| 1u64 << i | 1 << j))
        .filter(|e| !edges.contains(e))
        .collect()
}

pub fn is_chordal(n: usize, edges: &[Set]) -> bool {
    !has_induced_cycle(n, edges, 4)
}

pub fn is_weakly_chordal(n: usize, edges: &[Set]) -> bool {
    !has_induced_cycle(n, edges, 5) && !has_induced_cycle(n, &complement_graph(n, edges), 5)
}

pub fn is_bipartite(n: usize, edges: &[Set]) -> bool {
    (0..1u64 << n).any(|s| edges.iter().all(|&e| size(e & s) == 1))
}

/// Independent sets of the largest size.
pub fn multiplicity(n: usize, edges: &[Set]) -> usize {
    let b0 = beta0(n, edges);
    (0..1u64 << n).filter(|&s| size(s) == b0 && is_independent(edges, s)).count()
}

// Monomials.

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

pub fn member(gens: &[Mono], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

pub fn squarefree(n: usize, s: Set) -> Mono {
    (0..n).map(|i| (s >> i & 1) as u32).collect()
}

pub fn edge_gens(n: usize, edges: &[Set]) -> Vec<Mono> {
    edges.iter().map(|&e| squarefree(n, e)).collect()
}

/// Minimal generators of `I^t` from all products of `t` generators.
pub fn power(gens: &[Mono], t: u32) -> Vec<Mono> {
    let n = gens.first().map_or(0, Vec::len);
    let mut p = vec![vec![0; n]];
    for _ in 0..t {
        let mut next = Vec::new();
        for a in &p {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        p = minimalize(next);
    }
    p
}

/// Every exponent vector in the box `0 ≤ c_i ≤ bound_i`.
fn for_each_in_box(bound: &[u32], mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    let mut c = vec![0u32; bound.len()];
    loop {
        if visit(&c) {
            return true;
        }
        let mut i = 0;
        while i < c.len() && c[i] == bound[i] {
            c[i] = 0;
            i += 1;
        }
        if i == c.len() {
            return false;
        }
        c[i] += 1;
    }
}

/// Whether the prime on `p` is associated to `R/J`: after inverting the
/// variables outside `p`, some monomial `c ∉ J` has `x_i c ∈ J` for all
/// `i ∈ p`. Such a `c` has exponents below the generators' maxima.
pub fn is_associated(gens: &[Mono], p: Set) -> bool {
    if p == 0 || gens.is_empty() {
        return false;
    }
    let n = gens[0].len();
    let local = minimalize(
        gens.iter()
            .map(|g| (0..n).map(|i| if p >> i & 1 == 1 { g[i] } else { 0 }).collect())
            .collect(),
    );
    let bound: Vec<u32> = (0..n)
        .map(|i| local.iter().map(|g| g[i]).max().unwrap_or(0))
        .collect();
    if members(p).any(|i| bound[i] == 0) {
        return false;
    }
    let b: Vec<u32> = bound.iter().map(|&x| x.saturating_sub(1)).collect();
    for_each_in_box(&b, |c| {
        !member(&local, c)
            && members(p).all(|i| {
                let mut d = c.to_vec();
                d[i] += 1;
                member(&local, &d)
            })
    })
}

pub fn ass(gens: &[Mono]) -> BTreeSet<Set> {
    let n = gens.first().map_or(0, Vec::len);
    (1..1u64 << n).filter(|&p| is_associated(gens, p)).collect()
}

pub fn in_symbolic(covers: &[Set], m: &[u32], t: u32) -> bool {
    covers.iter().all(|&c| members(c).map(|i| m[i]).sum::<u32>() >= t)
}

/// A monomial of `I^(t)` outside `I^t` for square-free `I`, if any. Minimal
/// generators of `I^(t)` have exponents at most `t`.
pub fn symbolic_witness(n: usize, edges: &[Set], t: u32) -> Option<Mono> {
    let covers = minimal_covers(n, edges);
    let p = power(&edge_gens(n, edges), t);
    let mut found = None;
    for_each_in_box(&vec![t; n], |m| {
        if in_symbolic(&covers, m, t) && !member(&p, m) {
            found = Some(m.to_vec());
            return true;
        }
        false
    });
    found
}

// Linear algebra and homology.

/// Rank over `Q` (`p = 0`) or `F_p`.
pub fn rank(rows: &[Vec<i64>], p: u32) -> usize {
    if rows.is_empty() {
        return 0;
    }
    if p == 0 {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let cols = m[0].len();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, piv);
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[r][c];
                    for k in c..cols {
                        let d = &f * &m[r][k];
                        m[i][k] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    } else {
        let p = i64::from(p);
        let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
        let cols = m[0].len();
        let inv = |a: i64| -> i64 {
            let (mut b, mut e, mut acc) = (a, p - 2, 1i64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            acc
        };
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, piv);
            let iv = inv(m[r][c]);
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c] * iv % p;
                    for k in c..cols {
                        m[i][k] = (m[i][k] - f * m[r][k]).rem_euclid(p);
                    }
                }
            }
            r += 1;
        }
        r
    }
}

/// Homology ranks of a chain complex given by its bases and boundary maps:
/// `boundary(cell)` lists `(face index in the previous degree, sign)`.
fn chain_homology(
    bases: &[Vec<Set>],
    boundary: impl Fn(usize, Set) -> Vec<(Set, i64)>,
    p: u32,
) -> Vec<usize> {
    let ranks: Vec<usize> = (0..bases.len())
        .map(|k| {
            if k == 0 || bases[k].is_empty() || bases[k - 1].is_empty() {
                return 0;
            }
            let index: BTreeMap<Set, usize> = bases[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows: Vec<Vec<i64>> = bases[k]
                .iter()
                .map(|&cell| {
                    let mut row = vec![0i64; bases[k - 1].len()];
                    for (face, sign) in boundary(k, cell) {
                        if let Some(&i) = index.get(&face) {
                            row[i] += sign;
                        }
                    }
                    row
                })
                .collect();
            rank(&rows, p)
        })
        .collect();
    (0..bases.len())
        .map(|k| bases[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

fn face_boundary(cell: Set) -> Vec<(Set, i64)> {
    members(cell)
        .enumerate()
        .map(|(pos, v)| (cell & !(1 << v), if pos % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// `[dim H̃_{-1}, dim H̃_0, ...]` of the complex with exactly these faces.
pub fn reduced_homology(faces: &[Set], p: u32) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|&f| size(f)).max().unwrap_or(0);
    let mut bases = vec![Vec::new(); top + 1];
    for &f in faces {
        bases[size(f)].push(f);
    }
    for b in &mut bases {
        b.sort_unstable();
    }
    chain_homology(&bases, |_, cell| face_boundary(cell), p)
}

pub fn submasks(b: Set) -> Vec<Set> {
    let mut out = Vec::new();
    let mut f = b;
    loop {
        out.push(f);
        if f == 0 {
            return out;
        }
        f = (f - 1) & b;
    }
}

pub fn closure(n: usize, facets: &[Set]) -> Vec<Set> {
    (0..1u64 << n).filter(|&s| facets.iter().any(|&f| s & f == s)).collect()
}

/// Betti numbers of `R/I` for the square-free ideal generated by `gens`,
/// from the upper Koszul complexes `K^b = {F ⊆ b : x^(b - F) ∈ I}` with
/// `β_{i,b}(I) = dim H̃_{i-1}(K^b)`.
pub fn betti_koszul(n: usize, gens: &[Set], p: u32) -> Betti {
    let mut out = Betti::new();
    out.insert((0, 0), 1);
    for b in 1..1u64 << n {
        let faces: Vec<Set> = submasks(b)
            .into_iter()
            .filter(|&f| gens.iter().any(|&g| g & (b & !f) == g))
            .collect();
        for (idx, h) in reduced_homology(&faces, p).into_iter().enumerate() {
            if h > 0 {
                *out.entry((idx + 1, size(b))).or_default() += h;
            }
        }
    }
    out
}

/// Betti numbers of `R/I` from the Taylor complex of `gens`: in multidegree
/// `b` the minimal part is spanned by the generator subsets with lcm `b`.
pub fn betti_taylor(gens: &[Mono], p: u32) -> Betti {
    let q = gens.len();
    assert!(q <= 16);
    let lcm = |s: Set| -> Mono {
        let n = gens[0].len();
        (0..n).map(|i| members(s).map(|j| gens[j][i]).max().unwrap_or(0)).collect()
    };
    let mut classes: BTreeMap<Mono, Vec<Set>> = BTreeMap::new();
    for s in 1..1u64 << q {
        classes.entry(lcm(s)).or_default().push(s);
    }
    let mut out = Betti::new();
    out.insert((0, 0), 1);
    for (b, subsets) in classes {
        let top = subsets.iter().map(|&s| size(s)).max().unwrap();
        let mut bases = vec![Vec::new(); top + 1];
        for s in subsets {
            bases[size(s)].push(s);
        }
        let degree: usize = b.iter().map(|&x| x as usize).sum();
        for (k, h) in chain_homology(&bases, |_, cell| face_boundary(cell), p).into_iter().enumerate() {
            if h > 0 {
                *out.entry((k, degree)).or_default() += h;
            }
        }
    }
    out
}

pub fn reg(b: &Betti) -> usize {
    b.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
}

pub fn pd(b: &Betti) -> usize {
    b.keys().map(|&(i, _)| i).max().unwrap_or(0)
}

/// Sequential Cohen-Macaulayness of the independence complex, through the
/// cover ideal: it holds iff for every `d` the square-free degree-`d` part of
/// the cover ideal has a linear resolution.
pub fn scm(n: usize, edges: &[Set], p: u32) -> bool {
    if edges.is_empty() {
        return true;
    }
    (1..=n).all(|d| {
        let part: Vec<Set> = (0..1u64 << n).filter(|&s| size(s) == d && is_cover(edges, s)).collect();
        part.is_empty() || betti_koszul(n, &part, p).keys().all(|&(i, j)| i == 0 || j == i - 1 + d)
    })
}

// Polyhedra.

pub type Point = Vec<BigRational>;

fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Point> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .chain(std::iter::once(&rhs))
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, piv);
        let lead = m[c][c].clone();
        for k in c..=n {
            m[c][k] = &m[c][k] / &lead;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=n {
                    let d = &f * &m[c][k];
                    m[i][k] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

fn choose(k: usize, items: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: usize, from: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in from..items {
            cur.push(i);
            go(k, items, i + 1, cur, visit);
            cur.pop();
        }
    }
    go(k, items, 0, &mut Vec::new(), visit)
}

/// Vertices of `{x : a x ≥ b}` in dimension `dim`: feasible unique solutions
/// of every `dim` constraints taken with equality.
pub fn vertices(constraints: &[(Vec<i64>, i64)], dim: usize) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    choose(dim, constraints.len(), &mut |idx| {
        let a: Vec<Vec<i64>> = idx.iter().map(|&i| constraints[i].0.clone()).collect();
        let b: Vec<i64> = idx.iter().map(|&i| constraints[i].1).collect();
        if let Some(x) = solve(&a, &b) {
            let feasible = constraints.iter().all(|(row, rhs)| {
                let lhs: BigRational = row
                    .iter()
                    .zip(&x)
                    .map(|(&c, v)| BigRational::from_integer(BigInt::from(c)) * v)
                    .sum();
                lhs >= BigRational::from_integer(BigInt::from(*rhs))
            });
            if feasible {
                out.insert(x);
            }
        }
    });
    out
}

fn unit_row(n: usize, i: usize, sign: i64) -> Vec<i64> {
    (0..n).map(|j| if i == j { sign } else { 0 }).collect()
}

/// Vertices of `Q(A) = {x ≥ 0 : x(e) ≥ 1 for every edge e}`.
pub fn q_vertices(n: usize, edges: &[Set]) -> BTreeSet<Point> {
    let mut cons: Vec<(Vec<i64>, i64)> = (0..n).map(|i| (unit_row(n, i, 1), 0)).collect();
    cons.extend(edges.iter().map(|&e| ((0..n).map(|i| (e >> i & 1) as i64).collect(), 1)));
    vertices(&cons, n)
}

/// Vertices of `P(A) = {x ≥ 0 : xA ≤ 1}`.
pub fn p_vertices(n: usize, edges: &[Set]) -> BTreeSet<Point> {
    let mut cons: Vec<(Vec<i64>, i64)> = (0..n).map(|i| (unit_row(n, i, 1), 0)).collect();
    cons.extend(edges.iter().map(|&e| ((0..n).map(|i| -((e >> i & 1) as i64)).collect(), -1)));
    vertices(&cons, n)
}

pub fn is_integral(x: &Point) -> bool {
    x.iter().all(|v| v.is_integer())
}

fn total(x: &Point) -> BigRational {
    x.iter().sum()
}

/// Minimum of `Σ x` over `Q(A)`, attained at a vertex.
pub fn cover_lp(n: usize, edges: &[Set]) -> BigRational {
    q_vertices(n, edges).iter().map(total).min().unwrap_or_else(BigRational::zero)
}

/// Maximum of `Σ y` over `{y ≥ 0 : Σ_{e ∋ v} y_e ≤ 1}`.
pub fn matching_lp(n: usize, edges: &[Set]) -> BigRational {
    let q = edges.len();
    let mut cons: Vec<(Vec<i64>, i64)> = (0..q).map(|i| (unit_row(q, i, 1), 0)).collect();
    cons.extend((0..n).map(|v| (edges.iter().map(|&e| -((e >> v & 1) as i64)).collect(), -1)));
    vertices(&cons, q).iter().map(total).max().unwrap_or_else(BigRational::zero)
}

pub fn rational(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

pub fn one() -> BigRational {
    BigRational::one()
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

/// Every square submatrix has determinant in `{-1, 0, 1}`.
pub fn is_totally_unimodular(rows: &[Vec<i64>]) -> bool {
    let (r, c) = (rows.len(), rows.first().map_or(0, Vec::len));
    for k in 1..=r.min(c) {
        let mut ok = true;
        choose(k, r, &mut |ri| {
            if !ok {
                return;
            }
            choose(k, c, &mut |ci| {
                let m: Vec<Vec<i64>> = ri.iter().map(|&i| ci.iter().map(|&j| rows[i][j]).collect()).collect();
                if det(&m).abs() > 1 {
                    ok = false;
                }
            });
        });
        if !ok {
            return false;
        }
    }
    true
}

/// Vertex-by-edge incidence matrix.
pub fn incidence(n: usize, edges: &[Set]) -> Vec<Vec<i64>> {
    (0..n).map(|v| edges.iter().map(|&e| (e >> v & 1) as i64).collect()).collect()
}

/// Edges of the minor deleting `d` and contracting `c`, or `None` when a
/// contraction empties an edge.
pub fn minor(edges: &[Set], d: Set, c: Set) -> Option<Vec<Set>> {
    let mut out: Vec<Set> = edges.iter().filter(|&&e| e & d == 0).map(|&e| e & !c).collect();
    if out.contains(&0) {
        return None;
    }
    out.sort_unstable();
    out.dedup();
    let min: Vec<Set> = out
        .iter()
        .copied()
        .filter(|&e| !out.iter().any(|&f| f != e && f & e == f))
        .collect();
    Some(min)
}

/// Every minor without an empty edge satisfies `α0 = β1`.
pub fn packs(n: usize, edges: &[Set]) -> bool {
    (0..1u64 << n).all(|d| {
        let rest = !d & ((1u64 << n) - 1);
        let mut c = rest;
        loop {
            if let Some(m) = minor(edges, d, c) {
                if alpha0(n, &m) != beta1(&m) {
                    return false;
                }
            }
            if c == 0 {
                return true;
            }
            c = (c - 1) & rest;
        }
    })
}
