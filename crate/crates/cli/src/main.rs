//! `edgeideal`: reports, associated primes, covering polyhedra, duals and
//! verification suites for clutters, monomial ideals and digraphs.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use edgeideal::io::{parse_input, print_clutter, print_ideal, Input};
use edgeideal::{run_report, verify_suite, CoefficientField, Module, ReportOptions, SUITES};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const AFTER_HELP: &str = "Input files hold an ideal (`vars n` header), a clutter (`vertices n` header, \
one edge per line) or a digraph (`vertices n` header, `u -> v` arcs). Use `-` for stdin.\n\
Resource limits can be raised with EDGEIDEAL_LIMITS, e.g. EDGEIDEAL_LIMITS=betti_vars=18,ass_vars=24.\n\
Exit status: 0 when every requested section succeeds, 1 when a section or suite fails, 2 on usage or input errors.";

#[derive(Parser)]
#[command(name = "edgeideal", version, about = "Edge ideals of clutters", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every enabled module on the input.
    Report {
        file: PathBuf,
        /// Coefficient characteristic, 0 or a prime; repeat for several fields.
        #[arg(long = "field", default_values_t = [0u32])]
        fields: Vec<u32>,
        /// Largest power scanned for associated primes.
        #[arg(long)]
        tmax: Option<u32>,
        /// Comma separated subset of invariants,structure,homology,ass,polyhedra.
        #[arg(long, value_delimiter = ',')]
        enable: Option<Vec<String>>,
        /// Path length turning a digraph into an ideal.
        #[arg(long, default_value_t = 2)]
        path_length: usize,
        /// Omit per-section timings for byte-identical output.
        #[arg(long)]
        no_timings: bool,
        #[arg(long)]
        json: bool,
    },
    /// Associated primes of powers, stability and torsion-freeness.
    Ass {
        file: PathBuf,
        #[arg(long)]
        tmax: u32,
        #[arg(long, default_value_t = 2)]
        path_length: usize,
        #[arg(long)]
        json: bool,
    },
    /// Covering polyhedra, total unimodularity, LP duality and packing.
    Polyhedra {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        path_length: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check one theorem on every instance of a family.
    Verify {
        /// One of the registered suite names.
        suite: String,
        /// Largest vertex count.
        #[arg(long)]
        n: usize,
        #[arg(long, alias = "t", default_value_t = 4)]
        tmax: u32,
        #[arg(long)]
        json: bool,
    },
    /// Blocker of a clutter or Alexander dual of a square-free ideal.
    Dual { file: PathBuf },
}

fn read_input(path: &Path) -> anyhow::Result<Input> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_input(&text).with_context(|| format!("parsing {}", path.display()))
}

fn single_section(file: &Path, module: Module, tmax: Option<u32>, path_length: usize, json: bool) -> anyhow::Result<bool> {
    let options = ReportOptions {
        t_max: tmax,
        enable: vec![module],
        path_length,
        timings: false,
        ..ReportOptions::default()
    };
    let report = run_report(&read_input(file)?, &options)?;
    let section = report.section(module);
    if json {
        println!("{}", serde_json::to_string_pretty(section)?);
    } else {
        print!("{section}");
    }
    Ok(report.succeeded())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Report {
            file,
            fields,
            tmax,
            enable,
            path_length,
            no_timings,
            json,
        } => {
            let fields = fields
                .into_iter()
                .map(CoefficientField::new)
                .collect::<Result<Vec<_>, _>>()?;
            let enable = match enable {
                Some(names) => names.iter().map(|m| m.parse()).collect::<Result<Vec<Module>, _>>()?,
                None => Module::ALL.to_vec(),
            };
            let options = ReportOptions {
                fields,
                t_max: tmax,
                enable,
                path_length,
                timings: !no_timings,
            };
            let report = run_report(&read_input(&file)?, &options)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
            Ok(report.succeeded())
        }
        Command::Ass {
            file,
            tmax,
            path_length,
            json,
        } => {
            if tmax == 0 {
                bail!("--tmax must be at least 1");
            }
            single_section(&file, Module::Ass, Some(tmax), path_length, json)
        }
        Command::Polyhedra { file, path_length, json } => {
            single_section(&file, Module::Polyhedra, None, path_length, json)
        }
        Command::Verify { suite, n, tmax, json } => {
            if !SUITES.contains(&suite.as_str()) {
                bail!("unknown suite `{suite}`; available: {}", SUITES.join(", "));
            }
            let report = verify_suite(&suite, n, tmax)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                let verdict = if report.passed() { "pass" } else { "FAIL" };
                println!(
                    "{} (n <= {}, t <= {}): {} instances, {} failures: {verdict}",
                    report.suite,
                    report.n,
                    report.t_max,
                    report.instances,
                    report.failures.len()
                );
                for f in &report.failures {
                    println!("instance {}: {}", f.serial, f.detail);
                    for line in f.input.lines() {
                        println!("  {line}");
                    }
                }
            }
            Ok(report.passed())
        }
        Command::Dual { file } => {
            match read_input(&file)? {
                Input::Clutter(c) => print!("{}", print_clutter(&c.blocker()?)),
                Input::Ideal(i) => print!("{}", print_ideal(&i.alexander_dual()?)),
                Input::Digraph(_) => bail!("dual expects a clutter or an ideal"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
