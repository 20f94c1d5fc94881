use super::SimplicialComplex;
use crate::clutter::Clutter;
use crate::error::Result;
use serde::{Deserialize, Serialize};

/// Hilbert series of `K[Δ] = R/I` written as `h(t) / (1 - t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Coefficients of `h`, constant term first, trailing zeros trimmed.
    pub numerator: Vec<i64>,
    /// Krull dimension `d = dim Δ + 1`.
    pub denominator_exp: usize,
    /// `h(1)`: number of independent sets of size `d`.
    pub multiplicity: u64,
    /// `deg h - d`.
    pub a_invariant: i64,
    /// Number of facets of `Δ`.
    pub arith_deg: usize,
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

impl SimplicialComplex {
    /// `h(t) = Σ_i f_{i-1} t^i (1 - t)^{d-i}`. The void complex has `h = 0`.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        let f = self.f_vector()?;
        let d = f.len().saturating_sub(1);
        let mut h = vec![0i64; d + 1];
        for (i, &fi) in f.iter().enumerate() {
            for k in 0..=d - i {
                let c = binomial(d - i, k) * fi as i64;
                h[i + k] += if k % 2 == 0 { c } else { -c };
            }
        }
        while h.last() == Some(&0) {
            h.pop();
        }
        Ok(HilbertData {
            denominator_exp: d,
            multiplicity: f.last().copied().unwrap_or(0),
            a_invariant: h.len() as i64 - 1 - d as i64,
            numerator: h,
            arith_deg: self.facets().len(),
        })
    }
}

impl Clutter {
    /// Hilbert data of `R/I(C)`.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        SimplicialComplex::independence(self).hilbert_data()
    }
}
