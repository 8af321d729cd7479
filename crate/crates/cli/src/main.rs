//! `rogers`: command-line access to ring validation, ideal lattices, local
//! classification, shifted-union checks, order probes and integer sieves.
//!
//! Exit status is 0 on success or a positive verdict, 2 when a violation is
//! found and printed, and 1 on usage or input errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use rogers_core::catalog;
use rogers_core::ideal::{all_ideals, ideal_generated, ideals_form_chain, Ideal};
use rogers_core::local::{classify, local_decomposition};
use rogers_core::order::{nonmaximality_probe, rogers_check_order, IntegerLattice, Order};
use rogers_core::parse::{parse_order, parse_ring, parse_vectors};
use rogers_core::rogers::{counterexample, rogers_check, theorem2_scan, Mode, Witness};
use rogers_core::sieve::{rogers_min_density, union_density, Progression};
use rogers_core::{Element, Error, FiniteRing, Limits};

#[derive(Parser, Debug)]
#[command(
    name = "rogers",
    version,
    about = "Shifted unions of ideals in finite rings and orders"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    #[arg(long, global = true)]
    carrier_bound: Option<usize>,
    #[arg(long, global = true)]
    tuple_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a ring and print its presentation summary.
    Validate { ring: String },
    /// List every ideal of a ring.
    Ideals { ring: String },
    /// Decompose into local factors and test each for a chain of ideals.
    Classify { ring: String },
    /// Minimize the shifted union of the given ideals, or evaluate given shifts.
    RogersCheck {
        ring: String,
        #[arg(long = "ideal", required = true)]
        ideals: Vec<String>,
        #[arg(long)]
        shifts: Option<String>,
    },
    /// Construct a violating triple for a ring that is not a chain-local product.
    Counterexample { ring: String },
    /// Check every triple of ideals exhaustively.
    VerifyTheorem2 { ring: String },
    /// Check ideals of an order through its finite quotient.
    OrderCheck {
        order: String,
        #[arg(long = "ideal")]
        ideals: Vec<String>,
        #[arg(long)]
        shifts: Option<String>,
    },
    /// Look for a violation in O/(n) for n = 2..=bound.
    Probe {
        order: String,
        #[arg(long)]
        bound: u64,
    },
    /// Density of a union of progressions `a:q`.
    Sieve {
        #[arg(long = "prog", required = true, allow_hyphen_values = true)]
        progs: Vec<String>,
    },
    /// Minimum union density over all shifts for the given moduli.
    SieveMin {
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
    },
}

/// Output records: a kind plus ordered fields.
struct Output {
    format: Format,
    text: String,
}

impl Output {
    fn new(format: Format) -> Self {
        Self {
            format,
            text: String::new(),
        }
    }

    fn record(&mut self, kind: &str, fields: Vec<(&str, String)>) {
        match self.format {
            Format::Machine => {
                let _ = write!(self.text, "{kind}");
                for (k, v) in fields {
                    let _ = write!(self.text, " {k}={v}");
                }
                self.text.push('\n');
            }
            Format::Human => {
                let _ = writeln!(self.text, "{kind}:");
                for (k, v) in fields {
                    let _ = writeln!(self.text, "  {k}={v}");
                }
            }
        }
    }
}

type CliResult<T> = Result<T, Error>;

fn element_str(e: &Element) -> String {
    e.0.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn elements_str(es: &[Element]) -> String {
    es.iter().map(element_str).collect::<Vec<_>>().join(";")
}

fn ints_str(v: &[BigInt]) -> String {
    v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
}

fn vectors_str(vs: &[Vec<BigInt>]) -> String {
    vs.iter().map(|v| ints_str(v)).collect::<Vec<_>>().join(";")
}

/// Generators in `--ideal` syntax; the zero ideal prints as the zero vector.
fn ideal_str(ring: &FiniteRing, ideal: &Ideal) -> String {
    let gens = ideal.generator_elements(ring);
    if gens.is_empty() {
        element_str(&ring.element(0))
    } else {
        elements_str(&gens)
    }
}

fn lattice_str(l: &IntegerLattice) -> String {
    vectors_str(&l.basis().row_vecs())
}

fn load_ring(arg: &str, limits: &Limits) -> CliResult<Arc<FiniteRing>> {
    match arg.strip_prefix("catalog:") {
        Some(name) => catalog::ring(name, limits),
        None => parse_ring(&read(arg)?, limits),
    }
}

fn load_order(arg: &str, limits: &Limits) -> CliResult<(Order, Vec<Vec<Vec<BigInt>>>)> {
    match arg.strip_prefix("catalog:") {
        Some(name) => Ok((catalog::order(name, limits)?, Vec::new())),
        None => {
            let f = parse_order(&read(arg)?, limits)?;
            Ok((f.order, f.ideals))
        }
    }
}

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {path}: {e}"),
    })
}

fn ring_vector(ring: &FiniteRing, v: &[BigInt]) -> CliResult<usize> {
    if v.len() != ring.rank() {
        return Err(Error::Dimension(format!(
            "expected {} coordinates, got {}",
            ring.rank(),
            v.len()
        )));
    }
    Ok(ring.index_of_ints(v))
}

fn ring_ideal(ring: &FiniteRing, spec: &str) -> CliResult<Ideal> {
    let gens = parse_vectors(spec)?
        .iter()
        .map(|v| ring_vector(ring, v))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ideal_generated(ring, &gens))
}

fn witness_record(out: &mut Output, ring: &FiniteRing, w: &Witness) {
    let mut fields: Vec<(&str, String)> = Vec::new();
    let names = ["ideal1", "ideal2", "ideal3"];
    for (name, i) in names.iter().zip(&w.ideals) {
        fields.push((name, ideal_str(ring, i)));
    }
    fields.push(("shifts", elements_str(&w.shifts)));
    fields.push(("union_shifted", w.union_shifted.to_string()));
    fields.push(("union_baseline", w.union_baseline.to_string()));
    out.record("witness", fields);
}

fn run(cli: &Cli, limits: &Limits, out: &mut Output) -> CliResult<u8> {
    match &cli.command {
        Command::Validate { ring } => {
            let r = load_ring(ring, limits)?;
            let d: Vec<String> = r.invariant_factors().iter().map(u64::to_string).collect();
            out.record(
                "ring",
                vec![
                    ("order", r.order().to_string()),
                    ("rank", r.rank().to_string()),
                    ("invariant_factors", d.join(",")),
                    ("one", element_str(&r.element(r.one()))),
                    ("valid", "true".into()),
                ],
            );
            Ok(0)
        }
        Command::Ideals { ring } => {
            let r = load_ring(ring, limits)?;
            let ideals = all_ideals(&r);
            out.record(
                "ideals",
                vec![
                    ("count", ideals.len().to_string()),
                    ("chain", ideals_form_chain(&ideals).to_string()),
                ],
            );
            for (i, id) in ideals.iter().enumerate() {
                out.record(
                    "ideal",
                    vec![
                        ("index", i.to_string()),
                        ("size", id.size().to_string()),
                        ("generators", ideal_str(&r, id)),
                    ],
                );
            }
            Ok(0)
        }
        Command::Classify { ring } => {
            let r = load_ring(ring, limits)?;
            let dec = local_decomposition(&r, limits)?;
            let v = classify(&r, limits)?;
            out.record(
                "classification",
                vec![
                    ("chain_local_product", v.is_chain_local_product.to_string()),
                    ("factors", v.per_factor.len().to_string()),
                    (
                        "offending_factor",
                        v.offending_factor.map_or("none".into(), |i| i.to_string()),
                    ),
                ],
            );
            for (f, &e) in v.per_factor.iter().zip(&dec.idempotents) {
                out.record(
                    "factor",
                    vec![
                        ("index", f.index.to_string()),
                        ("idempotent", element_str(&r.element(e))),
                        ("order", f.order.to_string()),
                        ("local", f.is_local.to_string()),
                        ("chain", f.is_chain.to_string()),
                        ("ideals", f.ideal_count.to_string()),
                    ],
                );
            }
            Ok(0)
        }
        Command::RogersCheck { ring, ideals, shifts } => {
            let r = load_ring(ring, limits)?;
            let ideals = ideals
                .iter()
                .map(|s| ring_ideal(&r, s))
                .collect::<CliResult<Vec<_>>>()?;
            let shift_elems = match shifts {
                None => None,
                Some(s) => Some(
                    parse_vectors(s)?
                        .iter()
                        .map(|v| ring_vector(&r, v).map(|x| r.element(x)))
                        .collect::<CliResult<Vec<_>>>()?,
                ),
            };
            let mode = match &shift_elems {
                None => Mode::Full,
                Some(s) => Mode::VerifyOnly(s),
            };
            let rep = rogers_check(&r, &ideals, mode, limits)?;
            let mut fields = vec![
                (
                    "mode",
                    if shift_elems.is_some() { "verify" } else { "full" }.to_string(),
                ),
                ("ideals", rep.ideals.len().to_string()),
                ("baseline", rep.baseline.to_string()),
                ("minimum", rep.minimum.to_string()),
                ("satisfied", rep.satisfied.to_string()),
                ("shifts", elements_str(&rep.witness_shifts)),
                ("tuples_examined", rep.tuples_examined.to_string()),
            ];
            if shift_elems.is_some() {
                fields.retain(|(k, _)| *k != "tuples_examined");
            }
            out.record("rogers", fields);
            Ok(if rep.satisfied { 0 } else { 2 })
        }
        Command::Counterexample { ring } => {
            let r = load_ring(ring, limits)?;
            match counterexample(&r, limits) {
                Ok(w) => {
                    witness_record(out, &r, &w);
                    Ok(2)
                }
                Err(Error::AlreadyChainLocalProduct) => {
                    out.record(
                        "counterexample",
                        vec![("chain_local_product", "true".into()), ("witness", "none".into())],
                    );
                    Ok(0)
                }
                Err(e) => Err(e),
            }
        }
        Command::VerifyTheorem2 { ring } => {
            let r = load_ring(ring, limits)?;
            let scan = theorem2_scan(&r, limits)?;
            let cls = classify(&r, limits)?;
            out.record(
                "triple_scan",
                vec![
                    ("verdict", scan.verdict.to_string()),
                    ("chain_local_product", cls.is_chain_local_product.to_string()),
                    ("ideals", scan.ideal_count.to_string()),
                    ("triples", scan.triples.to_string()),
                ],
            );
            if let Some(w) = &scan.violation {
                witness_record(out, &r, w);
            }
            Ok(if scan.verdict { 0 } else { 2 })
        }
        Command::OrderCheck { order, ideals, shifts } => {
            let (o, file_ideals) = load_order(order, limits)?;
            let gens = if ideals.is_empty() {
                file_ideals
            } else {
                ideals.iter().map(|s| parse_vectors(s)).collect::<CliResult<Vec<_>>>()?
            };
            if gens.is_empty() {
                return Err(Error::NoIdeals);
            }
            let shifts = shifts.as_deref().map(parse_vectors).transpose()?;
            let rep = rogers_check_order(&o, &gens, shifts.as_deref(), limits)?;
            out.record(
                "order_rogers",
                vec![
                    ("rank", o.rank().to_string()),
                    ("quotient_order", rep.quotient.ring.order().to_string()),
                    ("intersection", lattice_str(&rep.intersection)),
                    ("baseline", rep.report.baseline.to_string()),
                    ("minimum", rep.report.minimum.to_string()),
                    ("satisfied", rep.report.satisfied.to_string()),
                    ("shifts", vectors_str(&rep.lifted_shifts)),
                ],
            );
            for (i, l) in rep.lattices.iter().enumerate() {
                out.record(
                    "lattice",
                    vec![
                        ("index", i.to_string()),
                        ("basis", lattice_str(l)),
                        ("covolume", l.index().to_string()),
                    ],
                );
            }
            Ok(if rep.report.satisfied { 0 } else { 2 })
        }
        Command::Probe { order, bound } => {
            let (o, _) = load_order(order, limits)?;
            match nonmaximality_probe(&o, *bound, limits)? {
                None => {
                    out.record("probe", vec![("bound", bound.to_string()), ("witness", "none".into())]);
                    Ok(0)
                }
                Some(w) => {
                    let mut fields = vec![("bound", bound.to_string()), ("conductor", w.conductor.to_string())];
                    let names = ["ideal1", "ideal2", "ideal3"];
                    for (name, l) in names.iter().zip(&w.lattices) {
                        fields.push((name, lattice_str(l)));
                    }
                    fields.push(("shifts", vectors_str(&w.shifts)));
                    fields.push(("union_shifted", w.union_shifted.to_string()));
                    fields.push(("union_baseline", w.union_baseline.to_string()));
                    out.record("probe", fields);
                    Ok(2)
                }
            }
        }
        Command::Sieve { progs } => {
            let ps = progs.iter().map(|s| parse_prog(s)).collect::<CliResult<Vec<_>>>()?;
            let rep = union_density(&ps, limits)?;
            out.record(
                "sieve",
                vec![
                    ("density", rep.density.to_string()),
                    ("period", rep.period.to_string()),
                    ("residues", rep.residues.to_string()),
                ],
            );
            Ok(0)
        }
        Command::SieveMin { moduli } => {
            let rep = rogers_min_density(moduli, limits)?;
            let shifts: Vec<String> = rep.witness_shifts.iter().map(u64::to_string).collect();
            out.record(
                "sieve_min",
                vec![
                    ("min", rep.min_density.to_string()),
                    ("zero_shift", rep.density.to_string()),
                    ("period", rep.period.to_string()),
                    ("shifts", shifts.join(",")),
                    ("holds", (rep.min_density >= rep.density).to_string()),
                ],
            );
            Ok(if rep.min_density >= rep.density { 0 } else { 2 })
        }
    }
}

fn parse_prog(s: &str) -> CliResult<Progression> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("expected a:q, got `{s}`"),
    };
    let (a, q) = s.split_once(':').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let q: u64 = q.trim().parse().map_err(|_| bad())?;
    Progression::new(a, q)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut limits = Limits::default();
    if let Some(b) = cli.carrier_bound {
        limits = limits.with_carrier_bound(b);
    }
    if let Some(c) = cli.tuple_cap {
        limits = limits.with_tuple_cap(c);
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    let mut out = Output::new(cli.format);
    match pool.install(|| run(&cli, &limits, &mut out)) {
        Ok(code) => {
            print!("{}", out.text);
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
