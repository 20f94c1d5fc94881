//! Theorem-verification suites: each enumerates a family up to a size bound
//! and checks one identity or implication on every instance.

use crate::bits;
use crate::clutter::Clutter;
use crate::complex::{CoefficientField, SimplicialComplex};
use crate::error::{Error, Result};
use crate::families;
use crate::io::print_clutter;
use crate::monomial::MonomialIdeal;
use crate::polyhedra::IncidenceMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SUITES: [&str; 16] = [
    "terai",
    "additivity",
    "reg-sandwich",
    "chordal-reg",
    "froberg",
    "duval-skeleton",
    "scm-pd",
    "leaf-chain",
    "cycle-ass",
    "disjoint-ass",
    "lehman",
    "konig-lp",
    "tu-ntf",
    "bipartite-ntf",
    "multiplicity-bound",
    "b-graph",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteFailure {
    /// Position of the instance in the enumeration.
    pub serial: usize,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub t_max: u32,
    pub instances: usize,
    /// Ordered by serial number.
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub(crate) const FIELDS: [CoefficientField; 2] = [
    CoefficientField::RATIONALS,
    CoefficientField::F2,
];

/// `Ok(None)` passes, `Ok(Some(why))` fails, `Err` fails with the error.
type Outcome = Result<Option<String>>;

fn run<T: Sync>(
    instances: &[T],
    show: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Outcome + Sync,
) -> (usize, Vec<SuiteFailure>) {
    let failures = instances
        .par_iter()
        .enumerate()
        .filter_map(|(serial, x)| {
            let detail = match check(x) {
                Ok(None) => return None,
                Ok(Some(why)) => why,
                Err(e) => format!("error: {e}"),
            };
            Some(SuiteFailure {
                serial,
                input: show(x),
                detail,
            })
        })
        .collect();
    (instances.len(), failures)
}

fn fail_unless(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    Ok((!ok).then(why))
}

/// Graphs on at most `min(n, 8)` vertices up to isomorphism.
pub fn graph_family(n: usize) -> Result<Vec<Clutter>> {
    families::graphs_up_to(n.min(8))
}

/// All clutters up to isomorphism on at most 6 vertices, then 40 seeded
/// random clutters for each larger vertex count up to `n`.
pub fn clutter_family(n: usize) -> Result<Vec<Clutter>> {
    let mut out = families::clutters_up_to(n.min(families::MAX_CLUTTER_VERTICES))?;
    for m in families::MAX_CLUTTER_VERTICES + 1..=n {
        out.extend(families::random_clutters(m, 40, 0x5eed + m as u64));
    }
    Ok(out)
}

fn reg(c: &Clutter, f: CoefficientField) -> Result<usize> {
    Ok(c.edge_ideal().betti_table(f)?.reg())
}

fn pd_ideal(i: &MonomialIdeal, f: CoefficientField) -> Result<usize> {
    Ok(i.betti_table(f)?.pd())
}

fn ntf_window(i: &MonomialIdeal, t_max: u32) -> Result<Option<u32>> {
    let mut p = i.clone();
    for t in 2..=t_max {
        p = p.product(i)?;
        if p != i.symbolic_power(t)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn terai(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = clutter_family(n)?.into_iter().filter(|c| !c.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |c| {
        let dual = c.blocker()?.edge_ideal();
        for f in FIELDS {
            let (r, p) = (reg(c, f)?, pd_ideal(&dual, f)?);
            if r + 1 != p {
                return Ok(Some(format!("over {f}: reg R/I = {r}, pd R/I_c = {p}")));
            }
        }
        Ok(None)
    }))
}

fn additivity(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam = graph_family(n.saturating_sub(1).min(5))?;
    let mut pairs = Vec::new();
    for (i, a) in fam.iter().enumerate() {
        for b in &fam[i..] {
            if a.n() + b.n() <= n {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(run(
        &pairs,
        |(a, b)| format!("{}+\n{}", print_clutter(a), print_clutter(b)),
        |(a, b)| {
            let u = a.disjoint_union(b)?;
            let f = CoefficientField::RATIONALS;
            let (ru, ra, rb) = (reg(&u, f)?, reg(a, f)?, reg(b, f)?);
            fail_unless(ru == ra + rb, || format!("reg of union {ru} != {ra} + {rb}"))
        },
    ))
}

fn reg_sandwich(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam = graph_family(n)?;
    Ok(run(&fam, print_clutter, |g| {
        let inv = g.cover_invariants()?;
        let upper = inv.beta_prime.expect("graph");
        for f in FIELDS {
            let r = reg(g, f)?;
            if !(inv.im <= r && r <= upper) {
                return Ok(Some(format!("over {f}: im {} reg {r} beta' {upper}", inv.im)));
            }
        }
        Ok(None)
    }))
}

fn chordal_reg(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam = graph_family(n)?;
    Ok(run(&fam, print_clutter, |g| {
        let chordal = g.is_chordal()?;
        let weak = g.is_weakly_chordal()?;
        let scm_bip = g.is_bipartite()?
            && SimplicialComplex::independence(g).is_sequentially_cm(CoefficientField::RATIONALS)?;
        if !(chordal || weak || scm_bip) {
            return Ok(None);
        }
        let im = g.induced_matching_number();
        let r = reg(g, CoefficientField::RATIONALS)?;
        fail_unless(r == im, || {
            format!("reg {r} != im {im} (chordal {chordal}, weakly chordal {weak}, sCM bipartite {scm_bip})")
        })
    }))
}

fn froberg(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = graph_family(n)?.into_iter().filter(|g| !g.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |g| {
        let linear = reg(g, CoefficientField::RATIONALS)? == 1;
        let co_chordal = g.complement()?.is_chordal()?;
        fail_unless(linear == co_chordal, || format!("reg = 1 is {linear}, complement chordal is {co_chordal}"))
    }))
}

fn duval_skeleton(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam = clutter_family(n)?;
    Ok(run(&fam, print_clutter, |c| {
        let delta = SimplicialComplex::independence(c);
        for f in FIELDS {
            let depth = c.n() - c.edge_ideal().betti_table(f)?.pd();
            let skel = delta.depth_from_skeletons(f)?;
            if depth != skel {
                return Ok(Some(format!("over {f}: n - pd = {depth}, skeleton depth = {skel}")));
            }
        }
        let b0p = c.cover_invariants()?.beta0_prime as isize;
        for i in -1..b0p {
            if delta.pure_skeleton(i)? != delta.skeleton(i)? {
                return Ok(Some(format!("pure {i}-skeleton differs from the {i}-skeleton")));
            }
        }
        Ok(None)
    }))
}

fn scm_pd(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = clutter_family(n)?.into_iter().filter(|c| !c.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |c| {
        let a0p = c.cover_invariants()?.alpha0_prime;
        let delta = SimplicialComplex::independence(c);
        let dual = c.blocker()?.edge_ideal();
        for f in FIELDS {
            let pd = c.edge_ideal().betti_table(f)?.pd();
            let reg_c = dual.betti_table(f)?.reg();
            let scm = delta.is_sequentially_cm(f)?;
            let ok = pd >= a0p && reg_c + 1 >= a0p && (!scm || (pd == a0p && reg_c + 1 == a0p));
            if !ok {
                return Ok(Some(format!("over {f}: pd {pd}, reg R/I_c {reg_c}, alpha0' {a0p}, scm {scm}")));
            }
        }
        Ok(None)
    }))
}

fn leaf_chain(n: usize, t_max: u32) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = (2..=n.min(8))
        .map(families::connected_graphs)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .filter(|g| (0..g.n()).any(|v| g.degree(v) == 1))
        .collect();
    Ok(run(&fam, print_clutter, |g| {
        let r = g.edge_ideal().stability_scan(t_max)?;
        fail_unless(r.chain_ok, || "Ass(R/I^t) is not ascending".into())
    }))
}

/// Odd cycles, and odd cycles with one pendant leaf, on at most `n` vertices.
fn cycle_family(n: usize) -> Vec<Clutter> {
    let mut out = Vec::new();
    for len in (3..=n).step_by(2) {
        out.push(Clutter::cycle(len));
        if len < n {
            let mut edges = Clutter::cycle(len).edges().to_vec();
            edges.push(1 | 1 << len);
            out.push(Clutter::new(len + 1, edges).expect("whiskered cycle"));
        }
    }
    out
}

fn cycle_ass(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam = cycle_family(n);
    Ok(run(&fam, print_clutter, |g| {
        let i = g.edge_ideal();
        let min = i.minimal_primes();
        let m = bits::full(g.n());
        let k = (g.n() as u32 - g.odd_cycle_data()?.leaves.len() as u32 - 1) / 2;
        for t in 1..=k + 2 {
            let ass = i.ass_powers(t)?;
            let expected = if t <= k { min.clone() } else { min.union(&crate::PrimeSet::from_supports([m])) };
            if ass != expected {
                return Ok(Some(format!("t = {t}: Ass = {ass}")));
            }
            if t > k {
                let c = crate::cycle_witness(g, t)?;
                let colon = i.power(t)?.colon(&c);
                if c.degree() != 2 * t - 1 || colon != Some(MonomialIdeal::prime(g.n(), m)) {
                    return Ok(Some(format!("t = {t}: witness {c} fails")));
                }
            }
        }
        Ok(None)
    }))
}

fn disjoint_ass(n: usize, t_max: u32) -> Result<(usize, Vec<SuiteFailure>)> {
    let small: Vec<Clutter> = (2..=n.saturating_sub(2).min(4))
        .map(families::connected_graphs)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.n() + b.n() <= n {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let t_max = t_max.min(4);
    Ok(run(
        &pairs,
        |(a, b)| format!("{}+\n{}", print_clutter(a), print_clutter(b)),
        |(a, b)| {
            let u = a.disjoint_union(b)?.edge_ideal();
            let (ia, ib) = (a.edge_ideal(), b.edge_ideal());
            let shift = a.n();
            let ass_a: Vec<_> = (1..=t_max).map(|t| ia.ass_powers(t)).collect::<Result<_>>()?;
            let ass_b: Vec<_> = (1..=t_max).map(|t| ib.ass_powers(t)).collect::<Result<_>>()?;
            for t in 1..=t_max {
                let mut expected = Vec::new();
                for t1 in 1..=t {
                    let t2 = t + 1 - t1;
                    for p in ass_a[t1 as usize - 1].supports() {
                        for q in ass_b[t2 as usize - 1].supports() {
                            expected.push(p | q << shift);
                        }
                    }
                }
                let expected = crate::PrimeSet::from_supports(expected);
                let got = u.ass_powers(t)?;
                if got != expected {
                    return Ok(Some(format!("t = {t}: Ass = {got}, composed = {expected}")));
                }
            }
            Ok(None)
        },
    ))
}

fn lehman(n: usize, t_max: u32) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = clutter_family(n)?.into_iter().filter(|c| !c.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |c| {
        if !c.konig_and_packing()?.packing {
            return Ok(None);
        }
        if !c.integrality_report()?.q_integral {
            return Ok(Some("packs but Q(A) is not integral".into()));
        }
        Ok(ntf_window(&c.edge_ideal(), t_max.min(3))?.map(|t| format!("packs but I^{t} != I^({t})")))
    }))
}

fn konig_lp(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = clutter_family(n)?.into_iter().filter(|c| !c.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |c| {
        let inv = c.cover_invariants()?;
        let lp = c.fractional_cover()?;
        let int = |k: usize| BigRational::from_integer(BigInt::from(k));
        let chain = int(inv.beta1) <= lp.matching_lp_value
            && lp.matching_lp_value == lp.cover_lp_value
            && lp.cover_lp_value <= int(inv.alpha0);
        let konig = inv.alpha0 == inv.beta1;
        let all_equal = int(inv.beta1) == lp.cover_lp_value && lp.cover_lp_value == int(inv.alpha0);
        fail_unless(chain && konig == all_equal && konig == c.is_konig(), || {
            format!(
                "beta1 {} matching {} cover {} alpha0 {}",
                inv.beta1, lp.matching_lp_value, lp.cover_lp_value, inv.alpha0
            )
        })
    }))
}

fn tu_ntf(n: usize, t_max: u32) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = clutter_family(n)?.into_iter().filter(|c| !c.is_discrete()).collect();
    Ok(run(&fam, print_clutter, |c| {
        if !IncidenceMatrix::new(c).is_totally_unimodular()? {
            return Ok(None);
        }
        let rep = c.integrality_report()?;
        if !(rep.q_integral && rep.p_integral) {
            return Ok(Some("TU but a polyhedron has a fractional vertex".into()));
        }
        for (name, i) in [("I", c.edge_ideal()), ("I^v", c.blocker()?.edge_ideal())] {
            if let Some(t) = ntf_window(&i, t_max)? {
                return Ok(Some(format!("TU but {name} has a power {t} differing from the symbolic power")));
            }
        }
        Ok(None)
    }))
}

fn bipartite_ntf(n: usize, t_max: u32) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = graph_family(n)?
        .into_iter()
        .filter(|g| !g.is_discrete() && g.is_bipartite().unwrap_or(false))
        .collect();
    Ok(run(&fam, print_clutter, |g| {
        let i = g.edge_ideal();
        if let Some(t) = ntf_window(&i, t_max)? {
            return Ok(Some(format!("I^{t} != I^({t})")));
        }
        let min = i.minimal_primes();
        for t in 1..=t_max {
            let ass = i.ass_powers(t)?;
            if ass != min {
                return Ok(Some(format!("t = {t}: Ass = {ass}")));
            }
        }
        Ok(None)
    }))
}

fn multiplicity_bound(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let mut fam: Vec<Clutter> = graph_family(n)?.into_iter().filter(|g| !g.is_discrete()).collect();
    for m in 3..=n.min(families::MAX_CLUTTER_VERTICES) {
        fam.extend(families::clutters(m)?.into_iter().filter(|c| c.uniformity().is_some()));
    }
    for m in families::MAX_CLUTTER_VERTICES + 1..=n {
        for d in 3..m {
            fam.extend(families::random_uniform_clutters(m, d, 20, 0xd00d + (m * 16 + d) as u64));
        }
    }
    Ok(run(&fam, print_clutter, |c| {
        let d = c.uniformity().expect("uniform") as u64;
        let e = c.hilbert_data()?.multiplicity;
        let a0 = c.cover_invariants()?.alpha0 as u32;
        fail_unless(e <= d.pow(a0), || format!("e = {e} > {d}^{a0}"))
    }))
}

fn b_graph(n: usize) -> Result<(usize, Vec<SuiteFailure>)> {
    let fam: Vec<Clutter> = graph_family(n)?.into_iter().filter(|g| g.isolated() == 0).collect();
    Ok(run(&fam, print_clutter, |g| {
        if g.is_b_graph()? != Some(true) {
            return Ok(None);
        }
        let inv = g.cover_invariants()?;
        fail_unless(inv.beta0 <= inv.alpha0, || format!("B-graph with beta0 {} > alpha0 {}", inv.beta0, inv.alpha0))
    }))
}

/// Runs suite `id` on its family up to `n` vertices with powers up to `t_max`.
pub fn verify_suite(id: &str, n: usize, t_max: u32) -> Result<SuiteReport> {
    let (instances, failures) = match id {
        "terai" => terai(n)?,
        "additivity" => additivity(n)?,
        "reg-sandwich" => reg_sandwich(n)?,
        "chordal-reg" => chordal_reg(n)?,
        "froberg" => froberg(n)?,
        "duval-skeleton" => duval_skeleton(n)?,
        "scm-pd" => scm_pd(n)?,
        "leaf-chain" => leaf_chain(n, t_max)?,
        "cycle-ass" => cycle_ass(n)?,
        "disjoint-ass" => disjoint_ass(n, t_max)?,
        "lehman" => lehman(n, t_max)?,
        "konig-lp" => konig_lp(n)?,
        "tu-ntf" => tu_ntf(n, t_max)?,
        "bipartite-ntf" => bipartite_ntf(n, t_max)?,
        "multiplicity-bound" => multiplicity_bound(n)?,
        "b-graph" => b_graph(n)?,
        _ => return Err(Error::UnknownSuite(id.to_string())),
    };
    Ok(SuiteReport {
        suite: id.to_string(),
        n,
        t_max,
        instances,
        failures,
    })
}
