use super::linalg::{rank_mod_p, rank_rational};
use super::SimplicialComplex;
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// `Q` (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct CoefficientField {
    characteristic: u32,
}

impl CoefficientField {
    pub const RATIONALS: CoefficientField = CoefficientField { characteristic: 0 };
    pub const F2: CoefficientField = CoefficientField { characteristic: 2 };

    /// `F_p` for prime `p`, or `Q` for `0`.
    pub fn new(characteristic: u32) -> Result<Self> {
        let p = characteristic;
        if p == 1 || (p > 1 && (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0)) {
            return Err(Error::InvalidArgument(format!("{p} is not 0 or a prime")));
        }
        if p > 1 << 31 {
            return Err(Error::InvalidArgument("characteristic too large".into()));
        }
        Ok(CoefficientField { characteristic: p })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub(crate) fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match self.characteristic {
            0 => rank_rational(rows),
            p => rank_mod_p(rows, u64::from(p)),
        }
    }
}

impl Default for CoefficientField {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl TryFrom<u32> for CoefficientField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        CoefficientField::new(p)
    }
}

impl From<CoefficientField> for u32 {
    fn from(f: CoefficientField) -> u32 {
        f.characteristic
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ"),
            p => write!(f, "ZZ/{p}"),
        }
    }
}

/// Ranks of reduced homology of the complex with faces `faces` (sorted by
/// size, closed under subsets), for dimensions `-1..=dim`.
pub(crate) fn reduced_homology_of_faces(faces: &[VertexSet], field: CoefficientField) -> Vec<usize> {
    let Some(top) = faces.last().map(|f| f.count_ones() as usize) else {
        return Vec::new();
    };
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank_bd[k] = rank of the boundary from faces of size k to size k-1.
    let mut rank_bd = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<VertexSet, usize> =
            by_size[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<Vec<i64>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[k - 1].len()];
                for (pos, v) in crate::bits::elements(f).enumerate() {
                    row[index[&(f & !(1 << v))]] = if pos % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        rank_bd[k] = field.rank(&rows);
    }
    (0..=top)
        .map(|k| by_size[k].len() - rank_bd[k] - rank_bd[k + 1])
        .collect()
}

impl SimplicialComplex {
    /// `[dim H̃_{-1}, dim H̃_0, ..., dim H̃_dim]`; empty for the void complex.
    pub fn reduced_homology(&self, field: CoefficientField) -> Result<Vec<usize>> {
        Ok(reduced_homology_of_faces(&self.faces()?, field))
    }

    /// `H̃_i = 0` for all `i`.
    pub fn is_acyclic(&self, field: CoefficientField) -> Result<bool> {
        Ok(self.reduced_homology(field)?.iter().all(|&h| h == 0))
    }
}
