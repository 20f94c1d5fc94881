//! Monomials, monomial ideals and monomial primes.
//!
//! A monomial is an exponent vector over `n ≤ 64` variables. Ideals keep
//! their minimal generators sorted by degree, then lexicographically with
//! `x1` largest, so equal ideals compare equal.

mod decompose;
mod ops;
mod prime;
mod socle;

pub use decompose::LinearQuotients;
pub use prime::{MonomialPrime, PrimeSet};

use crate::bits::{self, VertexSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Largest supported variable count.
pub const MAX_VARS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
    support: VertexSet,
}

impl Monomial {
    /// Panics if more than [`MAX_VARS`] exponents are given.
    pub fn new(exps: Vec<u16>) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut degree = 0u32;
        let mut support = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += u32::from(e);
            if e > 0 {
                support |= 1 << i;
            }
        }
        Monomial {
            exps,
            degree,
            support,
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::new(e)
    }

    /// The square-free monomial `∏_{i ∈ set} x_i`.
    pub fn from_set(n: usize, set: VertexSet) -> Self {
        let mut e = vec![0; n];
        for i in bits::elements(set) {
            e[i] = 1;
        }
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    pub fn checked_pow(&self, t: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                u16::try_from(u32::from(a) * t).map_err(|_| Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// `self / other`; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.strip(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x1*x3^2`, or `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let exps = Vec::<u16>::deserialize(d)?;
        if exps.len() > MAX_VARS {
            return Err(serde::de::Error::custom("too many variables"));
        }
        Ok(Monomial::new(exps))
    }
}

/// Sorts, deduplicates and drops every monomial divisible by another.
pub(crate) fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // `lower` = number of kept monomials of degree strictly below the current one.
    let mut lower = 0;
    for g in gens {
        while lower < kept.len() && kept[lower].degree < g.degree {
            lower += 1;
        }
        if !kept[..lower].iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal given by its minimal generators. Never the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    squarefree: bool,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    generators: Vec<Monomial>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;
    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.n, r.generators)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(i: MonomialIdeal) -> Self {
        IdealRepr {
            n: i.n,
            generators: i.gens,
        }
    }
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VARS} variables supported"
            )));
        }
        for g in &gens {
            if g.nvars() != n {
                return Err(Error::VariableMismatch(g.nvars(), n));
            }
            if g.is_one() {
                return Err(Error::UnitGenerator);
            }
        }
        Ok(Self::from_minimal(n, minimal_monomials(gens)))
    }

    /// `gens` must already be minimal, sorted and free of the unit monomial.
    pub(crate) fn from_minimal(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| !g.is_one()));
        let squarefree = gens.iter().all(Monomial::is_squarefree);
        MonomialIdeal { n, gens, squarefree }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
            squarefree: true,
        }
    }

    /// The square-free ideal generated by `x_e` for each nonempty set `e`.
    pub fn from_sets(n: usize, sets: &[VertexSet]) -> Result<Self> {
        if sets.iter().any(|&s| s == 0) {
            return Err(Error::UnitGenerator);
        }
        if sets.iter().any(|&s| s & !bits::full(n) != 0) {
            return Err(Error::InvalidArgument("vertex index out of range".into()));
        }
        Self::new(n, sets.iter().map(|&s| Monomial::from_set(n, s)).collect())
    }

    /// The prime `(x_i : i ∈ set)` as an ideal.
    pub fn prime(n: usize, set: VertexSet) -> Self {
        Self::from_minimal(
            n,
            {
                let mut g: Vec<_> = bits::elements(set).map(|i| Monomial::var(n, i)).collect();
                g.sort();
                g
            },
        )
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    /// Supports of the generators (meaningful for square-free ideals).
    pub fn support_sets(&self) -> Vec<VertexSet> {
        self.gens.iter().map(Monomial::support).collect()
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VertexSet {
        self.gens.iter().fold(0, |a, g| a | g.support())
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Exponentwise maximum over the generators.
    pub fn lcm_exponents(&self) -> Vec<u16> {
        let mut l = vec![0u16; self.n];
        for g in &self.gens {
            for (a, &b) in l.iter_mut().zip(g.exponents()) {
                *a = (*a).max(b);
            }
        }
        l
    }

    pub(crate) fn require_squarefree(&self) -> Result<()> {
        if self.squarefree {
            Ok(())
        } else {
            Err(Error::SquareFreeRequired)
        }
    }

    pub(crate) fn require_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.n, other.n))
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}
