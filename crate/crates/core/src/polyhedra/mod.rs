//! The set-covering polyhedron `Q(A) = {x ≥ 0 : xA ≥ 1}` and the packing
//! polytope `P(A) = {x ≥ 0 : xA ≤ 1}` of a clutter, in exact arithmetic.

mod lp;
mod tu;
mod vertices;

pub use lp::FractionalCover;
pub use tu::TuReport;
pub use vertices::IntegralityReport;

use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// 0/1 matrix with one row per vertex and one column per edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceMatrix {
    n: usize,
    columns: Vec<VertexSet>,
}

impl IncidenceMatrix {
    pub fn new(c: &Clutter) -> Self {
        IncidenceMatrix {
            n: c.n(),
            columns: c.edges().to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[VertexSet] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.columns[j] >> i & 1) as u8
    }

    /// Column indices of the edges through vertex `i`.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        (0..self.cols()).filter(|&j| self.entry(i, j) == 1).collect()
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.cols()).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A point with reduced rational coordinates, serialized as `"p/q"` strings
/// (`"p"` when integral).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn coordinates(&self) -> &[BigRational] {
        &self.0
    }

    pub fn from_integers(v: &[i64]) -> Self {
        RationalPoint(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn indicator(n: usize, s: VertexSet) -> Self {
        RationalPoint(
            (0..n)
                .map(|i| if s >> i & 1 == 1 { BigRational::one() } else { BigRational::zero() })
                .collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Support as a vertex set.
    pub fn support(&self) -> VertexSet {
        bits::from_indices((0..self.0.len()).filter(|&i| !self.0[i].is_zero()))
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |a, x| a + x)
    }

    /// `Σ_{i ∈ s} x_i`.
    pub fn sum_over(&self, s: VertexSet) -> BigRational {
        bits::elements(s).fold(BigRational::zero(), |a, i| a + &self.0[i])
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RationalPoint)
    }
}

/// Parses `"p"` or `"p/q"` with `q ≠ 0`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!q.is_zero()).then(|| BigRational::new(p, q))
}

/// Serde adapter for a single rational as a `"p/q"` string.
pub(crate) mod rational_string {
    use super::parse_rational;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).ok_or_else(|| serde::de::Error::custom(format!("bad rational {raw:?}")))
    }
}
