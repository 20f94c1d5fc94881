//! Aggregated reports over every analysis module, with per-section status.

use crate::ass::AssReport;
use crate::clutter::{Clutter, InvariantRecord, PackingReport, StructureFlags};
use crate::complex::{
    BettiTable, CoefficientField, HilbertData, HomologicalInvariants, RingProperties,
};
use crate::error::{Error, Result};
use crate::io::{print_ideal, Input};
use crate::monomial::MonomialIdeal;
use crate::polyhedra::{FractionalCover, IncidenceMatrix, IntegralityReport, TuReport};
use serde::{Deserialize, Serialize};
use std::fmt::{self, Write};
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Module {
    Invariants,
    Structure,
    Homology,
    Ass,
    Polyhedra,
}

impl Module {
    pub const ALL: [Module; 5] = [
        Module::Invariants,
        Module::Structure,
        Module::Homology,
        Module::Ass,
        Module::Polyhedra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Module::Invariants => "invariants",
            Module::Structure => "structure",
            Module::Homology => "homology",
            Module::Ass => "ass",
            Module::Polyhedra => "polyhedra",
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Module {
    type Err = Error;
    fn from_str(s: &str) -> Result<Module> {
        Module::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown module `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    /// Fields for the homology section, in order.
    pub fields: Vec<CoefficientField>,
    /// Power window for the ass section; `None` uses the ideal's default.
    pub t_max: Option<u32>,
    pub enable: Vec<Module>,
    /// Path length used to turn a digraph into an ideal.
    pub path_length: usize,
    /// Record wall-clock time per section. Off makes reports reproducible.
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            fields: vec![CoefficientField::RATIONALS],
            t_max: None,
            enable: Module::ALL.to_vec(),
            path_length: 2,
            timings: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionStatus {
    Ok,
    /// Not requested in the options.
    Disabled,
    /// The input lacks the structure the module needs.
    NotApplicable,
    /// Includes exceeded resource limits.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldHomology {
    pub field: CoefficientField,
    pub betti: BettiTable,
    pub invariants: HomologicalInvariants,
    pub properties: RingProperties,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySection {
    pub hilbert: HilbertData,
    pub fields: Vec<FieldHomology>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedralReport {
    pub integrality: IntegralityReport,
    pub fractional_cover: FractionalCover,
    pub total_unimodularity: TuReport,
    pub packing: PackingReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionData {
    Invariants(InvariantRecord),
    Structure(StructureFlags),
    Homology(HomologySection),
    Ass(AssReport),
    Polyhedra(PolyhedralReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub module: Module,
    pub status: SectionStatus,
    pub error: Option<String>,
    pub micros: Option<u64>,
    pub data: Option<SectionData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: Input,
    /// The ideal every section analyses, in the ideal text format.
    pub ideal: String,
    pub options: ReportOptions,
    /// One entry per module, in `Module::ALL` order.
    pub sections: Vec<Section>,
}

impl Report {
    /// True iff no section failed.
    pub fn succeeded(&self) -> bool {
        self.sections.iter().all(|s| s.status != SectionStatus::Failed)
    }

    pub fn section(&self, m: Module) -> &Section {
        self.sections.iter().find(|s| s.module == m).expect("every module has a section")
    }
}

fn homology(c: &Clutter, fields: &[CoefficientField]) -> Result<HomologySection> {
    let i = c.edge_ideal();
    let fields = fields
        .iter()
        .map(|&field| {
            let betti = i.betti_table(field)?;
            Ok(FieldHomology {
                field,
                invariants: i.homological_invariants(field)?,
                properties: c.ring_properties(field)?,
                betti,
            })
        })
        .collect::<Result<_>>()?;
    Ok(HomologySection {
        hilbert: c.hilbert_data()?,
        fields,
    })
}

fn ass(i: &MonomialIdeal, t_max: Option<u32>) -> Result<AssReport> {
    let window = t_max.unwrap_or_else(|| i.default_window());
    let mut r = i.stability_scan(window)?;
    if i.is_squarefree() {
        r.ntf = Some(i.ntf_check(window)?);
    }
    Ok(r)
}

fn polyhedra(c: &Clutter) -> Result<PolyhedralReport> {
    Ok(PolyhedralReport {
        integrality: c.integrality_report()?,
        fractional_cover: c.fractional_cover()?,
        total_unimodularity: IncidenceMatrix::new(c).total_unimodularity()?,
        packing: c.konig_and_packing()?,
    })
}

/// Runs every enabled module on `input`. Errors inside a module mark its
/// section failed and never abort the report; only an invalid digraph path
/// length is fatal.
pub fn run_report(input: &Input, options: &ReportOptions) -> Result<Report> {
    let ideal = match input {
        Input::Ideal(i) => i.clone(),
        Input::Clutter(c) => c.edge_ideal(),
        Input::Digraph(d) => d.path_ideal(options.path_length)?,
    };
    let clutter = match input {
        Input::Clutter(c) => Some(c.clone()),
        _ if ideal.is_squarefree() => Some(Clutter::from_ideal(&ideal)?),
        _ => None,
    };
    let sections = Module::ALL
        .into_iter()
        .map(|module| {
            let mut section = Section {
                module,
                status: SectionStatus::Disabled,
                error: None,
                micros: None,
                data: None,
            };
            if !options.enable.contains(&module) {
                return section;
            }
            let start = Instant::now();
            let result = match (module, &clutter) {
                (Module::Ass, _) if ideal.is_zero() => None,
                (Module::Ass, _) => Some(ass(&ideal, options.t_max).map(SectionData::Ass)),
                (_, None) => None,
                (Module::Invariants, Some(c)) => Some(c.cover_invariants().map(SectionData::Invariants)),
                (Module::Structure, Some(c)) => Some(c.structure_flags().map(SectionData::Structure)),
                (Module::Homology, Some(c)) => Some(homology(c, &options.fields).map(SectionData::Homology)),
                (Module::Polyhedra, Some(c)) => Some(polyhedra(c).map(SectionData::Polyhedra)),
            };
            if options.timings {
                section.micros = Some(start.elapsed().as_micros() as u64);
            }
            match result {
                None => {
                    section.status = SectionStatus::NotApplicable;
                    section.error = Some(if ideal.is_zero() {
                        "the zero ideal has only the zero prime as associated prime".to_string()
                    } else {
                        Error::SquareFreeRequired.to_string()
                    });
                }
                Some(Ok(data)) => {
                    section.status = SectionStatus::Ok;
                    section.data = Some(data);
                }
                Some(Err(e)) => {
                    section.status = SectionStatus::Failed;
                    section.error = Some(e.to_string());
                }
            }
            section
        })
        .collect();
    Ok(Report {
        input: input.clone(),
        ideal: print_ideal(&ideal),
        options: options.clone(),
        sections,
    })
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn yes(b: bool) -> &'static str {
    flag(Some(b))
}

fn write_data(out: &mut String, data: &SectionData) -> fmt::Result {
    match data {
        SectionData::Invariants(r) => {
            writeln!(out, "  alpha0 {}  beta0 {}  beta1 {}  im {}", r.alpha0, r.beta0, r.beta1, r.im)?;
            writeln!(out, "  alpha0' {}  beta0' {}", r.alpha0_prime, r.beta0_prime)?;
            if let Some(b) = r.beta_prime {
                writeln!(out, "  beta' {b}")?;
            }
        }
        SectionData::Structure(s) => {
            writeln!(
                out,
                "  bipartite {}  chordal {}  weakly chordal {}  perfect {}",
                flag(s.bipartite),
                flag(s.chordal),
                flag(s.weakly_chordal),
                flag(s.perfect)
            )?;
            let d = s.uniform_d.map_or("no".to_string(), |d| d.to_string());
            writeln!(
                out,
                "  uniform {d}  balanced {}  totally balanced {}  diadic {}  binary {}  B-graph {}",
                yes(s.balanced),
                yes(s.totally_balanced),
                yes(s.diadic),
                yes(s.binary),
                flag(s.b_graph)
            )?;
        }
        SectionData::Homology(h) => {
            writeln!(
                out,
                "  h-vector {:?} over (1-t)^{}  multiplicity {}  a-invariant {}  arithmetic degree {}",
                h.hilbert.numerator,
                h.hilbert.denominator_exp,
                h.hilbert.multiplicity,
                h.hilbert.a_invariant,
                h.hilbert.arith_deg
            )?;
            for fh in &h.fields {
                let (inv, p) = (&fh.invariants, &fh.properties);
                writeln!(out, "  over {}", fh.field)?;
                for line in fh.betti.to_string().lines() {
                    writeln!(out, "    {line}")?;
                }
                writeln!(out, "    reg {}  pd {}  depth {}  dim {}", inv.reg, inv.pd, inv.depth, inv.dim)?;
                writeln!(
                    out,
                    "    CM {}  sCM {}  shellable {}  vertex decomposable {}  connected in codim 1 {}  unmixed {}",
                    yes(p.cm),
                    yes(p.scm),
                    yes(p.shellable),
                    yes(p.vertex_decomposable),
                    yes(p.connected_codim1),
                    yes(p.unmixed)
                )?;
            }
        }
        SectionData::Ass(a) => {
            for p in &a.powers {
                writeln!(out, "  t = {}: {}", p.t, p.primes)?;
            }
            let bound = a.stability_bound.map_or("none".to_string(), |b| b.to_string());
            let proven = if a.stability_proven { "proven" } else { "within window" };
            writeln!(out, "  stable from t = {} ({proven}; bound {bound})", a.stable_index)?;
            writeln!(out, "  ascending chain {}", yes(a.chain_ok))?;
            if let Some(v) = &a.ntf {
                writeln!(out, "  normally torsion-free {}", v.label())?;
            }
        }
        SectionData::Polyhedra(p) => {
            let i = &p.integrality;
            writeln!(out, "  Q(A) integral {}  P(A) integral {}", yes(i.q_integral), yes(i.p_integral))?;
            if let Some(w) = &i.fractional_witness {
                writeln!(out, "  fractional vertex of Q(A) {w}")?;
            }
            if let Some(w) = &i.p_fractional_witness {
                writeln!(out, "  fractional vertex of P(A) {w}")?;
            }
            let f = &p.fractional_cover;
            writeln!(
                out,
                "  cover LP {}  matching LP {}  optimal cover {}",
                f.cover_lp_value, f.matching_lp_value, f.optimal_cover
            )?;
            writeln!(out, "  totally unimodular {}", yes(p.total_unimodularity.totally_unimodular))?;
            if let Some(v) = &p.total_unimodularity.violation {
                writeln!(out, "  submatrix rows {:?} cols {:?} has determinant {}", v.rows, v.cols, v.determinant)?;
            }
            writeln!(out, "  König {}  packing {}", yes(p.packing.konig), yes(p.packing.packing))?;
        }
    }
    Ok(())
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let status = match self.status {
            SectionStatus::Ok => "ok",
            SectionStatus::Disabled => "disabled",
            SectionStatus::NotApplicable => "not applicable",
            SectionStatus::Failed => "FAILED",
        };
        match self.micros {
            Some(us) => writeln!(out, "[{}] {status} ({us} us)", self.module)?,
            None => writeln!(out, "[{}] {status}", self.module)?,
        }
        if let Some(e) = &self.error {
            writeln!(out, "  {e}")?;
        }
        if let Some(d) = &self.data {
            write_data(&mut out, d)?;
        }
        f.write_str(&out)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "input ({})", self.input.kind())?;
        for line in self.input.to_text().lines() {
            writeln!(out, "  {line}")?;
        }
        if !matches!(self.input, Input::Ideal(_)) {
            writeln!(out, "ideal")?;
            for line in self.ideal.lines() {
                writeln!(out, "  {line}")?;
            }
        }
        for s in &self.sections {
            write!(out, "{s}")?;
        }
        f.write_str(&out)
    }
}
