use super::{rational_string, IncidenceMatrix, RationalPoint};
use crate::clutter::Clutter;
use crate::error::Result;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Optimal values of the covering LP `min{⟨1,x⟩ : x ≥ 0, xA ≥ 1}` and its
/// dual, the matching LP `max{⟨1,y⟩ : y ≥ 0, Ay ≤ 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalCover {
    #[serde(with = "rational_string")]
    pub cover_lp_value: BigRational,
    #[serde(with = "rational_string")]
    pub matching_lp_value: BigRational,
    /// Lexicographically greatest optimal vertex of `Q(A)`.
    pub optimal_cover: RationalPoint,
    /// Optimal edge weights found by the simplex method.
    pub optimal_matching: RationalPoint,
}

/// `max{⟨c,y⟩ : Ay ≤ b, y ≥ 0}` for `b ≥ 0` by the simplex method with
/// Bland's rule; `None` when unbounded.
pub(crate) fn simplex_max(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    c: &[BigRational],
) -> Option<(BigRational, Vec<BigRational>)> {
    let (m, k) = (a.len(), c.len());
    let width = k + m;
    // tableau rows: [coefficients | rhs]
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut cost: Vec<BigRational> = c.iter().cloned().chain((0..=m).map(|_| BigRational::zero())).collect();
    let mut basis: Vec<usize> = (k..width).collect();
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_positive()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let lhs = &t[i][width] / &t[i][enter];
                        let rhs = &t[l][width] / &t[l][enter];
                        lhs < rhs || (lhs == rhs && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let l = leave?;
        let inv = t[l][enter].recip();
        for x in t[l].iter_mut() {
            *x *= &inv;
        }
        let pivot = t[l].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != l && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&pivot) {
            *x -= &f * y;
        }
        basis[l] = enter;
    }
    let mut y = vec![BigRational::zero(); k];
    for (i, &v) in basis.iter().enumerate() {
        if v < k {
            y[v] = t[i][width].clone();
        }
    }
    Some((-cost[width].clone(), y))
}

/// Lexicographically least objective vector over `{x ≥ 0 : xA ≥ 1}` for the
/// objective `(⟨1,x⟩, -x_1, ..., -x_n, s)`, by the dual simplex method. The
/// starting basis of surplus variables is dual feasible; the cost vectors
/// of all columns are independent, so every pivot strictly raises the dual
/// objective and the method cannot cycle.
fn lex_min_cover(a: &IncidenceMatrix) -> RationalPoint {
    let (n, m) = (a.rows(), a.cols());
    let width = n + m;
    let len = 1 + width;
    let unit = |k: usize, v: i64| -> Vec<BigRational> {
        let mut c = vec![BigRational::zero(); len];
        c[k] = BigRational::from_integer(v.into());
        c
    };
    let mut cost: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut c = unit(1 + i, -1);
            c[0] = BigRational::one();
            c
        })
        .chain((0..m).map(|e| unit(1 + n + e, 1)))
        .collect();
    // row e: -x(e) + s_e = -1
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|e| {
            let mut row: Vec<BigRational> = (0..n).map(|i| BigRational::from_integer((-i64::from(a.entry(i, e))).into())).collect();
            row.extend((0..m).map(|f| if f == e { BigRational::one() } else { BigRational::zero() }));
            row.push(-BigRational::one());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();
    while let Some(r) = (0..m).filter(|&r| t[r][width].is_negative()).min_by_key(|&r| basis[r]) {
        let q = (0..width)
            .filter(|&j| t[r][j].is_negative())
            .min_by(|&i, &j| {
                let ri: Vec<BigRational> = cost[i].iter().map(|c| c / -&t[r][i]).collect();
                let rj: Vec<BigRational> = cost[j].iter().map(|c| c / -&t[r][j]).collect();
                ri.cmp(&rj)
            })
            .expect("Q(A) is nonempty");
        let inv = t[r][q].recip();
        for x in t[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[q].is_zero() {
                let f = row[q].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        let cq = cost[q].clone();
        for (j, c) in cost.iter_mut().enumerate() {
            if !pivot[j].is_zero() {
                for (x, y) in c.iter_mut().zip(&cq) {
                    *x -= y * &pivot[j];
                }
            }
        }
        basis[r] = q;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[r][width].clone();
        }
    }
    RationalPoint(x)
}

impl IncidenceMatrix {
    /// Solves the covering LP by the dual simplex method and the matching
    /// LP by the primal simplex method; the two optima agree by duality.
    pub fn fractional_cover(&self) -> Result<FractionalCover> {
        let best = lex_min_cover(self);
        let cover = best.sum();
        let a: Vec<Vec<BigRational>> = (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| BigRational::from_integer(self.entry(i, j).into())).collect())
            .collect();
        let ones = |k: usize| vec![BigRational::one(); k];
        let (matching, y) = simplex_max(&a, &ones(self.rows()), &ones(self.cols()))
            .expect("the matching LP is bounded");
        debug_assert_eq!(cover, matching, "LP duality");
        Ok(FractionalCover {
            cover_lp_value: cover,
            matching_lp_value: matching,
            optimal_cover: best,
            optimal_matching: RationalPoint(y),
        })
    }
}

impl Clutter {
    pub fn fractional_cover(&self) -> Result<FractionalCover> {
        IncidenceMatrix::new(self).fractional_cover()
    }
}
