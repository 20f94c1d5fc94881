use super::{minimal_monomials, Monomial, MonomialIdeal};
use crate::bits::{self, VertexSet};
use crate::error::{guard, Error, Result};
use crate::limits::Limits;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Corner exponents `a` of an irreducible ideal `(x_i^{a_i} : a_i > 0)`.
type Corner = Vec<u16>;

/// `(x^a) ⊆ (x^b)` for irreducible ideals given by their corners.
fn corner_subset(a: &Corner, b: &Corner) -> bool {
    a.iter()
        .zip(b)
        .all(|(&x, &y)| x == 0 || (y > 0 && y <= x))
}

/// Drops every component containing another one.
fn irredundant(mut comps: Vec<Corner>) -> Vec<Corner> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .map(|q| !comps.iter().any(|p| p != q && corner_subset(p, q)))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

struct Splitter {
    memo: HashMap<Vec<Monomial>, Vec<Corner>>,
    limit: usize,
}

impl Splitter {
    /// `I = (I, x_i^a) ∩ (I, m / x_i^a)` for a generator `m = x_i^a m'`, `m' ≠ 1`.
    fn split(&mut self, gens: Vec<Monomial>) -> Result<Vec<Corner>> {
        if let Some(r) = self.memo.get(&gens) {
            return Ok(r.clone());
        }
        let mixed = gens.iter().find(|g| g.support().count_ones() >= 2);
        let result = match mixed {
            None => {
                let mut corner = vec![0u16; gens[0].nvars()];
                for g in &gens {
                    let i = g.support().trailing_zeros() as usize;
                    corner[i] = g.exponents()[i];
                }
                vec![corner]
            }
            Some(m) => {
                let i = m.support().trailing_zeros() as usize;
                let mut pure = vec![0u16; m.nvars()];
                pure[i] = m.exponents()[i];
                let pure = Monomial::new(pure);
                let rest = m.strip(&pure);
                let mut left = gens.clone();
                left.push(pure);
                let mut right = gens.clone();
                right.push(rest);
                let mut comps = self.split(minimal_monomials(left))?;
                comps.extend(self.split(minimal_monomials(right))?);
                irredundant(comps)
            }
        };
        guard("irreducible components", result.len(), self.limit)?;
        self.memo.insert(gens, result.clone());
        Ok(result)
    }
}

/// Outcome of the linear-quotient ordering search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearQuotients {
    /// An admissible ordering, when one exists.
    pub ordering: Option<Vec<Monomial>>,
    /// Distinct generator subsets examined; with `ordering = None` the search
    /// covered every subset reachable as an admissible prefix.
    pub states_explored: usize,
}

impl MonomialIdeal {
    /// Irredundant irreducible components, each generated by pure powers.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("decomposition of the zero ideal".into()));
        }
        let mut s = Splitter {
            memo: HashMap::new(),
            limit: Limits::get().max_components,
        };
        let mut corners = s.split(self.gens.clone())?;
        corners.sort_by(|a, b| {
            let ka: Vec<usize> = bits::to_vec(corner_support(a));
            let kb: Vec<usize> = bits::to_vec(corner_support(b));
            ka.cmp(&kb).then_with(|| a.cmp(b))
        });
        Ok(corners
            .into_iter()
            .map(|c| {
                let gens = c
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let mut v = vec![0u16; self.n];
                        v[i] = e;
                        Monomial::new(v)
                    })
                    .collect();
                MonomialIdeal::new(self.n, gens).expect("pure powers are valid")
            })
            .collect())
    }

    /// Searches for an ordering `g_1..g_q` with every `((g_1..g_i) : g_{i+1})`
    /// generated by variables.
    pub fn has_linear_quotients(&self) -> Result<LinearQuotients> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("linear quotients of the zero ideal".into()));
        }
        let q = self.gens.len();
        guard("generators for linear quotients", q, Limits::get().lq_generators)?;
        // linear_after(s, j): ((g_i : i ∈ s) : g_j) is generated by variables.
        let linear_after = |s: u32, j: usize| -> bool {
            let quots: Vec<Monomial> = (0..q)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| self.gens[i].strip(&self.gens[j]))
                .collect();
            minimal_monomials(quots).iter().all(|m| m.degree() == 1)
        };
        let full: u32 = if q == 32 { u32::MAX } else { (1 << q) - 1 };
        let mut dead: HashMap<u32, ()> = HashMap::new();
        let mut explored = 0usize;
        let mut order = Vec::with_capacity(q);
        fn dfs(
            s: u32,
            full: u32,
            q: usize,
            order: &mut Vec<usize>,
            dead: &mut HashMap<u32, ()>,
            explored: &mut usize,
            lin: &dyn Fn(u32, usize) -> bool,
        ) -> bool {
            if s == full {
                return true;
            }
            if dead.contains_key(&s) {
                return false;
            }
            *explored += 1;
            for j in 0..q {
                if s >> j & 1 == 0 && (s == 0 || lin(s, j)) {
                    order.push(j);
                    if dfs(s | 1 << j, full, q, order, dead, explored, lin) {
                        return true;
                    }
                    order.pop();
                }
            }
            dead.insert(s, ());
            false
        }
        let found = dfs(0, full, q, &mut order, &mut dead, &mut explored, &linear_after);
        Ok(LinearQuotients {
            ordering: found.then(|| order.iter().map(|&j| self.gens[j].clone()).collect()),
            states_explored: explored,
        })
    }
}

fn corner_support(c: &Corner) -> VertexSet {
    c.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}
