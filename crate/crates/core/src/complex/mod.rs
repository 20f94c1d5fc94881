//! Simplicial complexes on `0..n`, stored by their facets.
//!
//! The void complex has no faces and no facets; the complex `{∅}` has the
//! single facet `∅`.

mod betti;
mod hilbert;
mod homology;
mod linalg;
mod properties;

pub use betti::{BettiTable, HomologicalInvariants};
pub use hilbert::HilbertData;
pub use homology::CoefficientField;
pub use properties::RingProperties;

use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal ones are dropped.
    pub fn new(n: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if faces.iter().any(|&f| f & !bits::full(n) != 0) {
            return Err(Error::InvalidArgument("vertex index out of range".into()));
        }
        Ok(SimplicialComplex {
            n,
            facets: bits::maximal_sets(faces),
        })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: Vec::new(),
        }
    }

    /// `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    /// Faces are the independent sets of `c`.
    pub fn independence(c: &Clutter) -> Self {
        SimplicialComplex {
            n: c.n(),
            facets: c.maximal_independent_sets(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// Union of the facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    /// All faces, sorted by size then value.
    pub fn faces(&self) -> Result<Vec<VertexSet>> {
        let limit = Limits::get().max_faces;
        let mut all: Vec<VertexSet> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            guard("faces", 1usize.checked_shl(f.count_ones()).unwrap_or(usize::MAX), limit)?;
            for s in bits::subsets(f) {
                if seen.insert(s) {
                    all.push(s);
                }
            }
            guard("faces", all.len(), limit)?;
        }
        all.sort_by_key(|s| (s.count_ones(), *s));
        Ok(all)
    }

    /// f-vector `(f_{-1}, f_0, ..., f_dim)`; empty for the void complex.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let mut f = vec![0u64; self.dim().map_or(0, |d| (d + 2) as usize)];
        for s in self.faces()? {
            f[s.count_ones() as usize] += 1;
        }
        Ok(f)
    }

    fn check_dim_index(&self, i: isize) -> Result<()> {
        let d = self.dim().unwrap_or(-1);
        if i < -1 || i > d {
            return Err(Error::RangeError {
                value: i as i64,
                min: -1,
                max: d as i64,
            });
        }
        Ok(())
    }

    /// `Δ^i`: faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Result<Self> {
        self.check_dim_index(i)?;
        let k = (i + 1) as u32;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= k {
                faces.push(f);
            } else {
                faces.extend(bits::subsets(f).filter(|s| s.count_ones() == k));
            }
        }
        SimplicialComplex::new(self.n, faces)
    }

    /// `Δ^[i]`: generated by the faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        self.check_dim_index(i)?;
        let k = (i + 1) as u32;
        let faces = self
            .facets
            .iter()
            .filter(|f| f.count_ones() >= k)
            .flat_map(|&f| bits::subsets(f).filter(move |s| s.count_ones() == k))
            .collect();
        SimplicialComplex::new(self.n, faces)
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void when `F ∉ Δ`.
    pub fn link(&self, face: VertexSet) -> Self {
        let facets = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        SimplicialComplex::new(self.n, facets).expect("same ground set")
    }

    /// Faces avoiding `v`.
    pub fn deletion(&self, v: usize) -> Self {
        let facets = self.facets.iter().map(|&f| f & !(1 << v)).collect();
        SimplicialComplex::new(self.n, facets).expect("same ground set")
    }

    /// Faces contained in `s`.
    pub fn restrict(&self, s: VertexSet) -> Self {
        let facets = self.facets.iter().map(|&f| f & s).collect();
        SimplicialComplex::new(self.n, facets).expect("same ground set")
    }
}
