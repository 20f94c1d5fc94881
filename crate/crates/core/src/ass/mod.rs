//! Associated primes of powers of monomial ideals.

mod scan;
mod star;

pub use scan::{AssReport, NtfVerdict, PowerAss};
pub use star::AssStarState;

use crate::bits::{self, VertexSet};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, PrimeSet};

impl MonomialIdeal {
    /// `Ass(R/I^t)`.
    pub fn ass_powers(&self, t: u32) -> Result<PrimeSet> {
        self.power(t)?.associated_primes()
    }
}

/// Vertices of the odd cycle of `g` in cyclic order from its least vertex,
/// when `g` is connected and every vertex off that chordless odd cycle is a
/// leaf.
fn whiskered_odd_cycle(g: &Clutter) -> Result<Vec<usize>> {
    g.require_graph()?;
    let n = g.n();
    let mismatch = |why: &str| Error::ShapeMismatch(why.to_string());
    if !is_connected(g) {
        return Err(mismatch("graph is not connected"));
    }
    let core: VertexSet = bits::from_indices((0..n).filter(|&v| g.degree(v) >= 2));
    let k = bits::len(core);
    if k < 3 || k % 2 == 0 {
        return Err(mismatch("non-leaf vertices do not form an odd cycle"));
    }
    if bits::elements(core).any(|v| bits::len(g.neighbors(v) & core) != 2) {
        return Err(mismatch("non-leaf vertices do not induce a cycle"));
    }
    let start = core.trailing_zeros() as usize;
    let mut order = vec![start];
    let (mut prev, mut cur) = (start, (g.neighbors(start) & core).trailing_zeros() as usize);
    while cur != start {
        order.push(cur);
        let next = (g.neighbors(cur) & core & !(1 << prev)).trailing_zeros() as usize;
        (prev, cur) = (cur, next);
    }
    if order.len() != k {
        return Err(mismatch("non-leaf vertices form several cycles"));
    }
    Ok(order)
}

fn is_connected(g: &Clutter) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen: VertexSet = 1;
    let mut frontier: VertexSet = 1;
    while frontier != 0 {
        let mut next = 0;
        for v in bits::elements(frontier) {
            next |= g.neighbors(v);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == bits::full(n)
}

/// For an odd cycle of length `2k+1` whose other vertices are leaves and
/// `t ≥ k+1`: `c = (∏ cycle vertices)(x_a x_b)^{t-k-1}` with `x_a x_b` the
/// first cycle edge. Then `(I^t : c) = m` and `deg c = 2t - 1`.
pub fn cycle_witness(g: &Clutter, t: u32) -> Result<Monomial> {
    let cycle = whiskered_odd_cycle(g)?;
    let k = (cycle.len() as u32 - 1) / 2;
    if t < k + 1 {
        return Err(Error::RangeError {
            value: t as i64,
            min: k as i64 + 1,
            max: i64::MAX,
        });
    }
    let b = Monomial::from_set(g.n(), bits::from_indices(cycle.iter().copied()));
    let edge = Monomial::from_set(g.n(), 1 << cycle[0] | 1 << cycle[1]);
    b.checked_mul(&edge.checked_pow(t - k - 1)?)
}
