use super::{minimal_monomials, Monomial, MonomialIdeal};
use crate::bits::{self, VertexSet};
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use std::collections::HashSet;

impl MonomialIdeal {
    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_minimal(self.n, minimal_monomials(gens)))
    }

    /// `I · J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let limit = Limits::get().max_generators;
        let mut seen = HashSet::new();
        let mut cand = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a.checked_mul(b)?;
                if seen.insert(p.clone()) {
                    cand.push(p);
                }
            }
            guard("product candidates", cand.len(), limit.saturating_mul(8))?;
        }
        let gens = minimal_monomials(cand);
        guard("generators", gens.len(), limit)?;
        Ok(MonomialIdeal::from_minimal(self.n, gens))
    }

    /// Minimal generators of `I^t`, `t ≥ 1`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        let mut p = self.clone();
        for _ in 1..t {
            p = p.product(self)?;
        }
        Ok(p)
    }

    /// `(I : c)`; `None` when `c ∈ I`, i.e. the colon is the whole ring.
    pub fn colon(&self, c: &Monomial) -> Option<MonomialIdeal> {
        if self.contains(c) {
            return None;
        }
        let gens = self.gens.iter().map(|g| g.strip(c)).collect();
        Some(MonomialIdeal::from_minimal(self.n, minimal_monomials(gens)))
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let mut seen = HashSet::new();
        let mut cand = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let l = a.lcm(b);
                if seen.insert(l.clone()) {
                    cand.push(l);
                }
            }
        }
        let gens = minimal_monomials(cand);
        guard("generators", gens.len(), Limits::get().max_generators)?;
        Ok(MonomialIdeal::from_minimal(self.n, gens))
    }

    /// Intersection of a nonempty list, folded left to right.
    pub fn intersect_all(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?;
        rest.iter().try_fold(first.clone(), |acc, i| acc.intersect(i))
    }

    /// `∩ (x_e)` over the generator supports `e`, folded as ideal intersections.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        if self.is_zero() {
            return Err(Error::InvalidArgument("dual of the zero ideal".into()));
        }
        let primes: Vec<MonomialIdeal> = self
            .gens
            .iter()
            .map(|g| MonomialIdeal::prime(self.n, g.support()))
            .collect();
        MonomialIdeal::intersect_all(&primes)
    }

    /// Supports of the minimal primes of a square-free ideal (its minimal covers).
    pub fn minimal_prime_supports(&self) -> Result<Vec<VertexSet>> {
        self.require_squarefree()?;
        Ok(bits::minimal_transversals(&self.support_sets()))
    }

    /// `I^(t) = ∩ p^t` over the minimal primes `p` of a square-free `I`.
    pub fn symbolic_power(&self, t: u32) -> Result<MonomialIdeal> {
        self.require_squarefree()?;
        if t == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let limit = Limits::get().max_generators;
        let mut acc: Option<Vec<Monomial>> = None;
        for p in self.minimal_prime_supports()? {
            let next = match acc {
                None => degree_monomials(self.n, p, t),
                Some(cur) => intersect_with_prime_power(self.n, &cur, p, t),
            };
            let next = minimal_monomials(next);
            guard("generators", next.len(), limit)?;
            acc = Some(next);
        }
        Ok(MonomialIdeal::from_minimal(self.n, acc.unwrap_or_default()))
    }
}

/// All monomials of degree `d` in the variables of `set`.
fn degree_monomials(n: usize, set: VertexSet, d: u32) -> Vec<Monomial> {
    let vars = bits::to_vec(set);
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(vars: &[usize], k: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if k + 1 == vars.len() {
            exps[vars[k]] = left as u16;
            out.push(Monomial::new(exps.clone()));
            exps[vars[k]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[vars[k]] = e as u16;
            rec(vars, k + 1, left - e, exps, out);
        }
        exps[vars[k]] = 0;
    }
    if vars.is_empty() {
        return out;
    }
    rec(&vars, 0, d, &mut exps, &mut out);
    out
}

/// Generators of `(gens) ∩ p^t`: each `g` times every monomial in `p` of the
/// missing `p`-degree.
fn intersect_with_prime_power(n: usize, gens: &[Monomial], p: VertexSet, t: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for g in gens {
        let have: u32 = bits::elements(p).map(|i| u32::from(g.exponents()[i])).sum();
        if have >= t {
            out.push(g.clone());
        } else {
            for extra in degree_monomials(n, p, t - have) {
                out.push(Monomial::new(
                    g.exponents()
                        .iter()
                        .zip(extra.exponents())
                        .map(|(a, b)| a + b)
                        .collect(),
                ));
            }
        }
    }
    out
}
