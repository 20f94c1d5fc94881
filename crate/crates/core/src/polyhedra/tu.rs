use super::IncidenceMatrix;
use crate::bits::{self, VertexSet};
use crate::error::{guard, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};

/// A square submatrix with determinant outside `{0, ±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuViolation {
    /// 0-based row indices.
    pub rows: Vec<usize>,
    /// 0-based column indices.
    pub cols: Vec<usize>,
    pub determinant: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuReport {
    pub totally_unimodular: bool,
    /// Smallest violation, least in (size, rows, cols) order.
    pub violation: Option<TuViolation>,
}

/// Fraction-free Gaussian elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

fn combinations(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            if go(n, k, i + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(n, k, 0, &mut Vec::with_capacity(k), visit)
}

impl IncidenceMatrix {
    /// Exhaustive subdeterminant test. Submatrices with a row or column
    /// holding at most one 1 are skipped: their determinant is a smaller
    /// minor up to sign.
    pub fn total_unimodularity(&self) -> Result<TuReport> {
        let (n, q) = (self.rows(), self.cols());
        guard("matrix order for unimodularity", n.min(q), Limits::get().tu_dim)?;
        let mut violation = None;
        for k in 2..=n.min(q) {
            let done = combinations(n, k, &mut |rows| {
                let rset: VertexSet = bits::from_indices(rows.iter().copied());
                let eligible: Vec<usize> = (0..q)
                    .filter(|&j| (self.columns()[j] & rset).count_ones() >= 2)
                    .collect();
                if eligible.len() < k {
                    return false;
                }
                combinations(eligible.len(), k, &mut |pick| {
                    let cols: Vec<usize> = pick.iter().map(|&i| eligible[i]).collect();
                    let m: Vec<Vec<i128>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| self.entry(i, j) as i128).collect())
                        .collect();
                    if m.iter().any(|r| r.iter().sum::<i128>() < 2) {
                        return false;
                    }
                    let d = bareiss_det(m);
                    if d.abs() > 1 {
                        violation = Some(TuViolation {
                            rows: rows.to_vec(),
                            cols,
                            determinant: d,
                        });
                        return true;
                    }
                    false
                })
            });
            if done {
                break;
            }
        }
        Ok(TuReport {
            totally_unimodular: violation.is_none(),
            violation,
        })
    }

    pub fn is_totally_unimodular(&self) -> Result<bool> {
        Ok(self.total_unimodularity()?.totally_unimodular)
    }
}
