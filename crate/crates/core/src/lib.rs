//! Edge ideals of clutters and the combinatorics around them.
//!
//! The crate computes regularity, projective dimension, depth and
//! multiplicity of square-free monomial ideals through the Stanley-Reisner
//! correspondence, decides Cohen-Macaulay type properties of independence
//! complexes, computes associated primes of powers, and studies the
//! set-covering polyhedron of a clutter with exact rational arithmetic.

pub mod ass;
pub mod bits;
pub mod clutter;
pub mod complex;
pub mod error;
pub mod families;
pub mod io;
pub mod limits;
pub mod monomial;
pub mod polyhedra;
pub mod report;
pub mod suites;

pub use ass::{cycle_witness, AssReport, AssStarState, NtfVerdict, PowerAss};
pub use clutter::{Clutter, Digraph};
pub use complex::{
    BettiTable, CoefficientField, HilbertData, HomologicalInvariants, RingProperties,
    SimplicialComplex,
};
pub use error::{Error, Result};
pub use monomial::{LinearQuotients, Monomial, MonomialIdeal, MonomialPrime, PrimeSet};
pub use polyhedra::{FractionalCover, IncidenceMatrix, IntegralityReport, RationalPoint, TuReport};
pub use report::{run_report, Module, Report, ReportOptions, SectionData, SectionStatus};
pub use suites::{verify_suite, SuiteReport, SUITES};
