use crate::bits;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, PrimeSet};
use crate::polyhedra::IncidenceMatrix;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerAss {
    pub t: u32,
    pub primes: PrimeSet,
}

/// Outcome of comparing `I^t` with `I^(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum NtfVerdict {
    /// Holds for every `t`.
    Yes { reason: String },
    /// `I^t ≠ I^(t)` at the least such `t`.
    No { witness: u32 },
    /// `I^t = I^(t)` for `t ≤ up_to`.
    Unknown { up_to: u32 },
}

impl NtfVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            NtfVerdict::Yes { .. } => "yes",
            NtfVerdict::No { .. } => "no",
            NtfVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// `Ass(R/I^t)` for `t = 1..=window`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssReport {
    pub window: u32,
    pub powers: Vec<PowerAss>,
    /// Least `N` with `Ass(R/I^t) = Ass(R/I^N)` for `N ≤ t ≤ window`.
    pub stable_index: u32,
    /// Proven upper bound on the index of stability, when one is known.
    pub stability_bound: Option<u32>,
    /// The window reaches `stability_bound`, so `stable_index` is global.
    pub stability_proven: bool,
    /// `Ass(R/I^t) ⊆ Ass(R/I^{t+1})` throughout the window.
    pub chain_ok: bool,
    pub ntf: Option<NtfVerdict>,
}

/// The edge ideal of a graph, read off a square-free quadratic ideal, with
/// isolated variables dropped.
fn as_graph(i: &MonomialIdeal) -> Option<Clutter> {
    if i.is_zero() || !i.is_squarefree() || i.generators().iter().any(|g| g.degree() != 2) {
        return None;
    }
    let verts = bits::to_vec(i.support());
    let pos = |v: usize| verts.binary_search(&v).expect("support vertex");
    let edges = i
        .support_sets()
        .iter()
        .map(|&e| bits::from_indices(bits::elements(e).map(pos)))
        .collect();
    Clutter::new(verts.len(), edges).ok()
}

impl MonomialIdeal {
    /// `1` for bipartite graphs; `n - k - s` for connected non-bipartite
    /// graphs on `n` vertices with `s` leaves and least odd cycle of length
    /// `2k + 1`. Isolated variables are ignored.
    pub fn stability_bound(&self) -> Option<u32> {
        let g = as_graph(self)?;
        if g.is_bipartite().ok()? {
            return Some(1);
        }
        if !super::is_connected(&g) {
            return None;
        }
        let d = g.odd_cycle_data().ok()?;
        let k = (d.smallest_odd_cycle_length? - 1) / 2;
        Some((g.n() - k - d.leaves.len()) as u32)
    }

    /// The proven stability bound, or 4 when none is known.
    pub fn default_window(&self) -> u32 {
        self.stability_bound().unwrap_or(4).max(1)
    }

    pub fn stability_scan(&self, window: u32) -> Result<AssReport> {
        if window == 0 {
            return Err(Error::RangeError {
                value: 0,
                min: 1,
                max: i64::from(u32::MAX),
            });
        }
        let mut powers = Vec::new();
        let mut p = self.clone();
        for t in 1..=window {
            if t > 1 {
                p = p.product(self)?;
            }
            powers.push(PowerAss {
                t,
                primes: p.associated_primes()?,
            });
        }
        let last = &powers[powers.len() - 1].primes;
        let stable_index = powers
            .iter()
            .rev()
            .take_while(|a| &a.primes == last)
            .last()
            .map_or(window, |a| a.t);
        let chain_ok = powers.windows(2).all(|w| w[0].primes.is_subset(&w[1].primes));
        let stability_bound = self.stability_bound();
        Ok(AssReport {
            window,
            powers,
            stable_index,
            stability_bound,
            stability_proven: stability_bound.is_some_and(|b| b <= window),
            chain_ok,
            ntf: None,
        })
    }

    /// Exact answers for bipartite graphs and totally unimodular incidence
    /// matrices; otherwise compares `I^t` with `I^(t)` for `2 ≤ t ≤ window`.
    pub fn ntf_check(&self, window: u32) -> Result<NtfVerdict> {
        self.require_squarefree()?;
        if self.is_zero() {
            return Ok(NtfVerdict::Yes { reason: "zero ideal".into() });
        }
        if as_graph(self).is_some_and(|g| g.is_bipartite().unwrap_or(false)) {
            return Ok(NtfVerdict::Yes { reason: "bipartite graph".into() });
        }
        let a = IncidenceMatrix::new(&Clutter::from_ideal(self)?);
        if let Ok(true) = a.is_totally_unimodular() {
            return Ok(NtfVerdict::Yes {
                reason: "totally unimodular incidence matrix".into(),
            });
        }
        let mut p = self.clone();
        for t in 2..=window {
            p = p.product(self)?;
            if p != self.symbolic_power(t)? {
                return Ok(NtfVerdict::No { witness: t });
            }
        }
        Ok(NtfVerdict::Unknown { up_to: window.max(1) })
    }
}
