use super::{IncidenceMatrix, RationalPoint};
use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{guard, Result};
use crate::limits::Limits;
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Integrality of `Q(A)` and `P(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralityReport {
    pub q_integral: bool,
    pub p_integral: bool,
    /// Least fractional vertex of `Q(A)`.
    pub fractional_witness: Option<RationalPoint>,
    /// Least fractional vertex of `P(A)`.
    pub p_fractional_witness: Option<RationalPoint>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// `xA ≥ 1`
    Cover,
    /// `xA ≤ 1`
    Packing,
}

/// Exact for 0/1 matrices of order ≤ 12, whose minors are far below `P`.
const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    r
}

/// Row echelon form mod `P` that accepts a row only if it raises the rank.
#[derive(Clone)]
struct Echelon {
    /// (pivot column, normalized row)
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn reduce(&self, mut v: Vec<u64>) -> Option<(usize, Vec<u64>)> {
        for (c, r) in &self.rows {
            if v[*c] != 0 {
                let f = v[*c];
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + P - mul_mod(f, *y)) % P;
                }
            }
        }
        let c = v.iter().position(|&x| x != 0)?;
        let inv = inv_mod(v[c]);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv);
        }
        Some((c, v))
    }
}

/// Solves `B y = 1` over the rationals for a nonsingular 0/1 matrix `B`.
fn solve_ones(b: &[Vec<u8>]) -> Vec<BigRational> {
    let k = b.len();
    let mut m: Vec<Vec<Ratio<i128>>> = b
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Ratio::from_integer(x as i128))
                .chain(std::iter::once(Ratio::one()))
                .collect()
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !m[r][col].is_zero()).expect("nonsingular");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter()
        .map(|r| {
            let v = r[k];
            BigRational::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))
        })
        .collect()
}

/// Vertices whose zero set is exactly `V \ free`.
fn vertices_with_support(a: &IncidenceMatrix, free: VertexSet, side: Side) -> Vec<RationalPoint> {
    let n = a.rows();
    let zero = bits::full(n) & !free;
    if side == Side::Cover && a.columns().iter().any(|&e| e & zero == e) {
        return Vec::new();
    }
    let fv = bits::to_vec(free);
    let k = fv.len();
    if k == 0 {
        return vec![RationalPoint::indicator(n, 0)];
    }
    let rows: Vec<Vec<u8>> = a
        .columns()
        .iter()
        .filter(|&&e| e & free != 0)
        .map(|&e| fv.iter().map(|&v| (e >> v & 1) as u8).collect())
        .collect();
    let mut found = BTreeSet::new();
    let mut chosen = Vec::new();
    bases(&rows, 0, &Echelon { rows: Vec::new() }, &mut chosen, k, &mut |basis| {
        let b: Vec<Vec<u8>> = basis.iter().map(|&i| rows[i].clone()).collect();
        let y = solve_ones(&b);
        if y.iter().any(|v| !v.is_positive()) {
            return;
        }
        let mut x = vec![BigRational::zero(); n];
        for (&v, val) in fv.iter().zip(y) {
            x[v] = val;
        }
        let p = RationalPoint(x);
        let one = BigRational::one();
        let feasible = a.columns().iter().all(|&e| {
            let s = p.sum_over(e);
            match side {
                Side::Cover => s >= one,
                Side::Packing => s <= one,
            }
        });
        if feasible {
            found.insert(p);
        }
    });
    found.into_iter().collect()
}

/// Depth-first choice of `k` rows of full rank, each accepted row raising
/// the rank.
fn bases(
    rows: &[Vec<u8>],
    start: usize,
    ech: &Echelon,
    chosen: &mut Vec<usize>,
    k: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..rows.len() {
        if rows.len() - i < need {
            return;
        }
        let v = rows[i].iter().map(|&x| x as u64).collect();
        if let Some(r) = ech.reduce(v) {
            let mut next = ech.clone();
            next.rows.push(r);
            chosen.push(i);
            bases(rows, i + 1, &next, chosen, k, visit);
            chosen.pop();
        }
    }
}

fn enumerate(a: &IncidenceMatrix, side: Side) -> Result<Vec<RationalPoint>> {
    guard("vertices for polyhedra", a.rows(), Limits::get().polyhedra_vertices)?;
    let n = a.rows();
    let parts: Vec<Vec<RationalPoint>> = bits::subsets(bits::full(n))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|free| vertices_with_support(a, free, side))
        .collect();
    let mut all: Vec<RationalPoint> = parts.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

impl IncidenceMatrix {
    /// Vertices of `Q(A)`, sorted.
    pub fn vertices_q(&self) -> Result<Vec<RationalPoint>> {
        enumerate(self, Side::Cover)
    }

    /// Vertices of `P(A)`, sorted.
    pub fn vertices_p(&self) -> Result<Vec<RationalPoint>> {
        enumerate(self, Side::Packing)
    }
}

impl Clutter {
    pub fn integrality_report(&self) -> Result<IntegralityReport> {
        let a = IncidenceMatrix::new(self);
        let q = a.vertices_q()?;
        let p = a.vertices_p()?;
        let qw = q.into_iter().find(|v| !v.is_integral());
        let pw = p.into_iter().find(|v| !v.is_integral());
        Ok(IntegralityReport {
            q_integral: qw.is_none(),
            p_integral: pw.is_none(),
            fractional_witness: qw,
            p_fractional_witness: pw,
        })
    }
}
