use crate::bits;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_VARS};
use serde::{Deserialize, Serialize};

/// A directed graph on `0..n` without loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::InvalidArgument(format!("at most {MAX_VARS} vertices")));
        }
        if arcs.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
            return Err(Error::InvalidArgument("arc endpoints must be distinct vertices".into()));
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Digraph {
            n,
            arcs,
            labels: None,
        })
    }

    /// The directed cycle `0 → 1 → ... → n-1 → 0`.
    pub fn cycle(n: usize) -> Self {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid cycle")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument("label count differs from n".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `I_t(D)`: generated by `x_{i1}...x_{it}` over directed paths
    /// `i1 → ... → it` on `t` distinct vertices.
    pub fn path_ideal(&self, t: usize) -> Result<MonomialIdeal> {
        if t < 2 {
            return Err(Error::RangeError {
                value: t as i64,
                min: 2,
                max: i64::MAX,
            });
        }
        let mut out = Vec::new();
        fn walk(d: &Digraph, v: usize, used: u64, left: usize, out: &mut Vec<u64>) {
            if left == 0 {
                out.push(used);
                return;
            }
            for &(a, b) in &d.arcs {
                if a == v && used >> b & 1 == 0 {
                    walk(d, b, used | 1 << b, left - 1, out);
                }
            }
        }
        for v in 0..self.n {
            walk(self, v, 1 << v, t - 1, &mut out);
        }
        out.sort_unstable();
        out.dedup();
        MonomialIdeal::new(
            self.n,
            out.into_iter().map(|s| Monomial::from_set(self.n, s)).collect(),
        )
        .map(|i| {
            debug_assert!(i.generators().iter().all(|g| bits::len(g.support()) == t));
            i
        })
    }
}
