//! Associated primes through socle witnesses of localizations.
//!
//! `p_S ∈ Ass(R/J)` iff the localization `J_S` (variables outside `S` set
//! to 1) has a socle monomial `c`: `c ∉ J_S` and `x_i c ∈ J_S` for `i ∈ S`.
//! Such `c` is found by fixing one exponent at a time; fixing `c_v = a`
//! turns the conditions into conditions on colon ideals in fewer variables.

use super::{Monomial, MonomialIdeal, MonomialPrime, PrimeSet};
use crate::bits::{self, VertexSet};
use crate::error::{guard, Error, Result};
use crate::limits::Limits;

type Exps = Vec<u16>;

fn is_unit(e: &Exps) -> bool {
    e.iter().all(|&x| x == 0)
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimal_raw(mut v: Vec<Exps>) -> Vec<Exps> {
    v.sort_by_cached_key(|e| (e.iter().map(|&x| u32::from(x)).sum::<u32>(), e.clone()));
    v.dedup();
    let mut kept: Vec<Exps> = Vec::with_capacity(v.len());
    for e in v {
        if !kept.iter().any(|k| divides(k, &e)) {
            kept.push(e);
        }
    }
    kept
}

/// Generators of `(gens : x_v^a)` free of `x_v`.
fn slice(gens: &[Exps], v: usize, a: u16) -> Vec<Exps> {
    minimal_raw(
        gens.iter()
            .filter(|g| g[v] <= a)
            .map(|g| {
                let mut h = g.clone();
                h[v] = 0;
                h
            })
            .collect(),
    )
}

/// `c` must avoid `a` and lie in every ideal of `filters`; `x_v c ∈ a` for
/// every remaining `v`. Filters are never the unit ideal.
fn search(a: &[Exps], filters: &[Vec<Exps>], vars: &mut Vec<usize>, acc: &mut Exps) -> bool {
    if vars.is_empty() {
        return a.is_empty() && filters.is_empty();
    }
    let mut best: Option<(usize, Vec<u16>)> = None;
    for (k, &v) in vars.iter().enumerate() {
        let mut vals: Vec<u16> = a.iter().map(|g| g[v]).filter(|&e| e > 0).collect();
        vals.sort_unstable();
        vals.dedup();
        if vals.is_empty() {
            return false;
        }
        if best.as_ref().is_none_or(|(_, b)| vals.len() < b.len()) {
            best = Some((k, vals));
        }
    }
    let (k, vals) = best.expect("vars nonempty");
    let v = vars.swap_remove(k);
    for e in vals {
        let val = e - 1;
        let a2 = slice(a, v, val);
        if a2.iter().any(is_unit) {
            continue;
        }
        let mut f2: Vec<Vec<Exps>> = Vec::with_capacity(filters.len() + 1);
        let mut dead = false;
        for f in filters.iter().map(|f| slice(f, v, val)).chain([slice(a, v, e)]) {
            if f.is_empty() || f.iter().all(|g| a2.iter().any(|h| divides(h, g))) {
                dead = true;
                break;
            }
            if !f.iter().any(is_unit) {
                f2.push(f);
            }
        }
        if dead {
            continue;
        }
        acc[v] = val;
        if search(&a2, &f2, vars, acc) {
            return true;
        }
    }
    acc[v] = 0;
    vars.push(v);
    let last = vars.len() - 1;
    vars.swap(k, last);
    false
}

/// A socle monomial of `R/(gens)` in the variables of `vars`, if any.
/// `gens` must be minimal and supported in `vars`.
fn socle_monomial(gens: Vec<Exps>, vars: &[usize], n: usize) -> Option<Exps> {
    let mut acc = vec![0u16; n];
    let mut vars = vars.to_vec();
    search(&gens, &[], &mut vars, &mut acc).then_some(acc)
}

impl MonomialIdeal {
    /// Localizes at `p_S`: every variable outside `support` is set to 1.
    pub fn localize(&self, support: VertexSet) -> Option<MonomialIdeal> {
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| {
                Monomial::new(
                    g.exponents()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| if support >> i & 1 == 1 { e } else { 0 })
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal::new(self.n, gens).ok()
    }

    /// A monomial `c` with `(I : c) = p_S`, if `p_S` is associated to `R/I`.
    pub fn prime_witness(&self, support: VertexSet) -> Option<Monomial> {
        if support == 0 || self.gens.iter().any(|g| g.support() & support == 0) {
            return None;
        }
        let local: Vec<Exps> = minimal_raw(
            self.gens
                .iter()
                .map(|g| {
                    g.exponents()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| if support >> i & 1 == 1 { e } else { 0 })
                        .collect()
                })
                .collect(),
        );
        let vars = bits::to_vec(support);
        let mut c = socle_monomial(local, &vars, self.n)?;
        let lcm = self.lcm_exponents();
        for (i, e) in c.iter_mut().enumerate() {
            if support >> i & 1 == 0 {
                *e = lcm[i];
            }
        }
        Some(Monomial::new(c))
    }

    /// Every associated prime of `R/I` with a witness `c`, `(I : c) = p`.
    pub fn associated_prime_witnesses(&self) -> Result<Vec<(MonomialPrime, Monomial)>> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "associated primes of the zero ideal".into(),
            ));
        }
        let supp = self.support();
        guard("support size for associated primes", bits::len(supp), Limits::get().ass_vars)?;
        let mut out = Vec::new();
        for s in bits::subsets(supp) {
            if let Some(c) = self.prime_witness(s) {
                out.push((MonomialPrime::new(s).expect("nonempty"), c));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// `Ass(R/I)`.
    pub fn associated_primes(&self) -> Result<PrimeSet> {
        Ok(self
            .associated_prime_witnesses()?
            .into_iter()
            .map(|(p, _)| p)
            .collect())
    }

    /// `Min(R/I)`: the inclusion-minimal primes containing `I`.
    pub fn minimal_primes(&self) -> PrimeSet {
        let supports: Vec<VertexSet> = self.support_sets();
        PrimeSet::from_supports(bits::minimal_transversals(&supports))
    }
}

#[cfg(test)]
mod tests {
    use super::super::testutil::*;
    use super::*;

    fn notchain() -> MonomialIdeal {
        ideal(
            5,
            &[
                "x1*x2^2*x3",
                "x2*x3^2*x4",
                "x3*x4^2*x5",
                "x4*x5^2*x1",
                "x5*x1^2*x2",
            ],
        )
    }

    #[test]
    fn triangle_square_has_maximal_ideal() {
        let p = cycle(3).power(2).unwrap();
        let ass = p.associated_primes().unwrap();
        assert_eq!(ass.len(), 4);
        assert!(ass.contains_support(0b111));
        assert_eq!(ass.minimal(), cycle(3).minimal_primes());
    }

    #[test]
    fn witnesses_give_the_prime() {
        let p = cycle(5).power(3).unwrap();
        for (q, c) in p.associated_prime_witnesses().unwrap() {
            assert_eq!(p.colon(&c).unwrap(), MonomialIdeal::prime(5, q.support()));
        }
    }

    #[test]
    fn square_of_four_cycle_is_unmixed() {
        for t in 1..=3 {
            let ass = cycle(4).power(t).unwrap().associated_primes().unwrap();
            assert_eq!(ass, cycle(4).minimal_primes());
        }
    }

    #[test]
    fn notchain_maximal_ideal() {
        let i = notchain();
        let got: Vec<bool> = (1..=4)
            .map(|t| {
                i.power(t)
                    .unwrap()
                    .associated_primes()
                    .unwrap()
                    .contains_support(0b11111)
            })
            .collect();
        assert_eq!(got, vec![true, false, false, true]);
    }

    #[test]
    fn mixed_powers() {
        let i = ideal(2, &["x1^2*x2", "x1*x2^2"]);
        assert_eq!(i.associated_primes().unwrap().supports(), vec![0b01, 0b11, 0b10]);
    }
}
