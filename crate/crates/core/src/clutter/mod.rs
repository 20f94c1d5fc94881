//! Clutters (Sperner families of nonempty vertex sets) and graphs.

mod cycles;
mod digraph;
mod invariants;
mod packing;
mod structure;

pub use cycles::OddCycleData;
pub use digraph::Digraph;
pub use invariants::InvariantRecord;
pub use packing::{FailingMinor, PackingReport};
pub use structure::StructureFlags;

use crate::bits::{self, VertexSet};
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, MAX_VARS};
use serde::{Deserialize, Serialize};

/// A clutter on vertices `0..n`. Edges are sorted bit masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clutter {
    n: usize,
    edges: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Clutter {
    /// Validates the Sperner condition; comparable edges are an error.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let mut edges = check_edges(n, edges)?;
        edges.sort_unstable();
        edges.dedup();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a & b == a || a & b == b {
                    let (small, big) = if a & b == a { (a, b) } else { (b, a) };
                    return Err(Error::SpernerViolation(bits::to_vec(small), bits::to_vec(big)));
                }
            }
        }
        Ok(Clutter {
            n,
            edges,
            labels: None,
        })
    }

    /// Keeps the inclusion-minimal edges.
    pub fn minimalize(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let edges = bits::minimal_sets(check_edges(n, edges)?);
        Ok(Clutter {
            n,
            edges,
            labels: None,
        })
    }

    /// Builds from 0-based index lists.
    pub fn from_lists(n: usize, edges: &[&[usize]]) -> Result<Self> {
        if edges.iter().flat_map(|e| e.iter()).any(|&v| v >= n) {
            return Err(Error::InvalidArgument("vertex index out of range".into()));
        }
        Clutter::new(
            n,
            edges.iter().map(|e| bits::from_indices(e.iter().copied())).collect(),
        )
    }

    pub fn discrete(n: usize) -> Self {
        Clutter {
            n,
            edges: Vec::new(),
            labels: None,
        }
    }

    /// The cycle `0-1-...-(n-1)-0`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (1 << i) | (1 << ((i + 1) % n))).collect();
        Clutter::new(n, edges).expect("cycle is a clutter")
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (1 << (i - 1)) | (1 << i)).collect();
        Clutter::new(n, edges).expect("path is a clutter")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((1 << i) | (1 << j));
            }
        }
        Clutter::new(n, edges).expect("complete graph is a clutter")
    }

    /// Attaches vertex names; their count must equal `n`.
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

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Name of vertex `v`: its label, or its 1-based index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        bits::full(self.n)
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every edge has exactly two vertices (true for discrete clutters).
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() == 2)
    }

    pub(crate) fn require_graph(&self) -> Result<()> {
        if self.is_graph() {
            Ok(())
        } else {
            Err(Error::GraphRequired)
        }
    }

    /// `Some(d)` when every edge has `d` vertices and there is an edge.
    pub fn uniformity(&self) -> Option<usize> {
        let d = self.edges.first()?.count_ones();
        self.edges
            .iter()
            .all(|e| e.count_ones() == d)
            .then_some(d as usize)
    }

    /// Union of the edges meeting `v`, without `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| *e >> v & 1 == 1)
            .fold(0, |acc, e| acc | e)
            & !(1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| *e >> v & 1 == 1).count()
    }

    /// Vertices lying in no edge.
    pub fn isolated(&self) -> VertexSet {
        self.vertices() & !self.edges.iter().fold(0, |a, e| a | e)
    }

    /// `S` contains no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|&e| e & s != e)
    }

    /// `S` meets every edge.
    pub fn is_cover(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|&e| e & s != 0)
    }

    /// The edge ideal `I(C)` in `n` variables.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_sets(self.n, &self.edges).expect("edges are nonempty")
    }

    /// The clutter of supports of a square-free ideal.
    pub fn from_ideal(i: &MonomialIdeal) -> Result<Self> {
        i.require_squarefree()?;
        Clutter::new(i.nvars(), i.support_sets())
    }

    /// Minimal vertex covers; the discrete clutter has blocker `{∅}`, which
    /// is not a clutter, so it is rejected.
    pub fn blocker(&self) -> Result<Clutter> {
        if self.is_discrete() {
            return Err(Error::InvalidArgument("blocker of a discrete clutter".into()));
        }
        let mut b = Clutter::minimalize(self.n, bits::minimal_transversals(&self.edges))?;
        b.labels = self.labels.clone();
        Ok(b)
    }

    /// Minimal vertex covers as sets (`[∅]` for a discrete clutter).
    pub fn minimal_covers(&self) -> Vec<VertexSet> {
        bits::minimal_transversals(&self.edges)
    }

    /// Maximal independent sets: complements of minimal covers.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let full = self.vertices();
        let mut v: Vec<_> = self.minimal_covers().into_iter().map(|c| full & !c).collect();
        v.sort_unstable();
        v
    }

    /// The subclutter on `s` (edges contained in `s`), relabelled to
    /// `0..|s|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> Clutter {
        let s = s & self.vertices();
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & s == e)
            .map(|&e| compress(e, s))
            .collect();
        Clutter {
            n: bits::len(s),
            edges,
            labels: self.sub_labels(s),
        }
    }

    /// Deletion sets `x_i = 0` (drops edges meeting `delete`); contraction sets
    /// `x_i = 1` (removes `contract` from every edge, then keeps minimal
    /// edges). The result lives on the remaining vertices, relabelled in
    /// increasing order. `EmptyEdge` when an edge lies inside `contract`.
    pub fn minor(&self, delete: VertexSet, contract: VertexSet) -> Result<Clutter> {
        if delete & contract != 0 {
            return Err(Error::InvalidArgument("delete and contract sets overlap".into()));
        }
        let keep = self.vertices() & !delete & !contract;
        let mut edges = Vec::new();
        for &e in &self.edges {
            if e & delete != 0 {
                continue;
            }
            let r = e & !contract;
            if r == 0 {
                return Err(Error::EmptyEdge);
            }
            edges.push(compress(r, keep));
        }
        Ok(Clutter {
            n: bits::len(keep),
            edges: bits::minimal_sets(edges),
            labels: self.sub_labels(keep),
        })
    }

    /// Complement graph.
    pub fn complement(&self) -> Result<Clutter> {
        self.require_graph()?;
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let e = (1 << i) | (1 << j);
                if !self.edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
        Ok(Clutter {
            n: self.n,
            edges,
            labels: self.labels.clone(),
        })
    }

    /// Disjoint union, with the vertices of `other` shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Clutter) -> Result<Clutter> {
        if self.n + other.n > MAX_VARS {
            return Err(Error::InvalidArgument("too many vertices".into()));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e << self.n));
        Clutter::new(self.n + other.n, edges)
    }

    /// Adds vertices `n..n+k` to every edge (the clutter of `x_{n+1}..x_{n+k} · I`).
    pub fn cone(&self, k: usize) -> Result<Clutter> {
        if self.n + k > MAX_VARS {
            return Err(Error::InvalidArgument("too many vertices".into()));
        }
        let apex = bits::full(self.n + k) & !self.vertices();
        let edges = if self.edges.is_empty() {
            vec![apex]
        } else {
            self.edges.iter().map(|e| e | apex).collect()
        };
        Clutter::new(self.n + k, edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Clutter {
        let edges = self
            .edges
            .iter()
            .map(|&e| bits::elements(e).fold(0, |a, v| a | 1 << perm[v]))
            .collect::<Vec<_>>();
        let mut edges = edges;
        edges.sort_unstable();
        Clutter {
            n: self.n,
            edges,
            labels: None,
        }
    }

    fn sub_labels(&self, s: VertexSet) -> Option<Vec<String>> {
        self.labels
            .as_ref()
            .map(|l| bits::elements(s).map(|v| l[v].clone()).collect())
    }
}

fn check_edges(n: usize, edges: Vec<VertexSet>) -> Result<Vec<VertexSet>> {
    if n > MAX_VARS {
        return Err(Error::InvalidArgument(format!("at most {MAX_VARS} vertices")));
    }
    for &e in &edges {
        if e == 0 {
            return Err(Error::EmptyEdge);
        }
        if e & !bits::full(n) != 0 {
            return Err(Error::InvalidArgument("vertex index out of range".into()));
        }
    }
    Ok(edges)
}

/// Renumbers the elements of `e ⊆ s` by their rank inside `s`.
fn compress(e: VertexSet, s: VertexSet) -> VertexSet {
    let mut out = 0;
    for (k, v) in bits::elements(s).enumerate() {
        if e >> v & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}
