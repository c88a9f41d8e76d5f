//! Batch CLI over the library: constructions and verifications emitting JSON
//! reports on stdout and a human summary on stderr.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use coadex::chevalley::{self, SimpleType};
use coadex::coad;
use coadex::fixture::Fixture;
use coadex::lie::{Element, LieAlgebra, LieAlgebraJson};
use coadex::linalg::Subspace;
use coadex::pipeline;
use coadex::poly::MultiPoly;
use coadex::rat::Rat;
use coadex::report::Report;
use coadex::rng::{SeededRng, DEFAULT_SEED};
use coadex::weights::{self, Torus, WeightDecomp};
use coadex::Error;

/// Environment variable overriding the default seed.
const SEED_ENV: &str = "COADEX_SEED";

#[derive(Parser)]
#[command(
    name = "coadex",
    about = "Exact computations with structure-constant Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a simple Lie algebra in a Chevalley basis and emit its JSON.
    Build {
        /// Cartan-Killing type: A, B, C, D, E, F or G
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        /// write the JSON here instead of stdout
        #[arg(long)]
        out: Option<String>,
    },
    /// Run every integrity check on a centralizer fixture file.
    VerifyFixture {
        /// fixture JSON; defaults to the embedded centralizer table
        #[arg(long)]
        file: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// recompute kernel vectors by fraction-free elimination
        #[arg(long)]
        rederive: bool,
    },
    /// Full verification: Chevalley F4 down to the weight-space conclusions.
    VerifyF4 {
        #[arg(long)]
        seed: Option<u64>,
        /// certify the index from re-derived kernel vectors instead of the
        /// transcribed ones
        #[arg(long)]
        rederive: bool,
    },
    /// Certify the index of an algebra from a JSON file.
    Index {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Test a polynomial for invariance and semi-invariance.
    InvariantCheck {
        #[arg(long)]
        algebra: String,
        /// polynomial in the x1..xn text format
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Torus weight decomposition of an algebra.
    Weights {
        #[arg(long)]
        algebra: String,
        /// torus element: a 1-based basis index, or comma-separated
        /// rational coefficients
        #[arg(long)]
        torus: String,
    },
    /// Weight decomposition plus the pairing determinants delta_lambda.
    Delta {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        torus: String,
    },
    /// The subspace g_u + [g,g] + g(x) at a sampled generic point.
    G0 {
        #[arg(long)]
        algebra: String,
        /// 1-based basis indices spanning g_u; defaults to the
        /// positive-degree part of the file's grading, if any
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn seed_or_default(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn load_fixture(path: &str) -> Result<Fixture, Error> {
    let text = std::fs::read_to_string(path)?;
    Fixture::parse(&text)
}

fn parse_torus_element(alg: &LieAlgebra, spec: &str) -> Result<Element, Error> {
    if let Ok(idx) = spec.trim().parse::<usize>() {
        if idx == 0 || idx > alg.dim() {
            return Err(Error::Parse(format!(
                "torus index {idx} out of range 1..{}",
                alg.dim()
            )));
        }
        return Ok(Element::basis(alg.dim(), idx - 1));
    }
    let coeffs: Vec<Rat> = spec
        .split(',')
        .map(Rat::parse)
        .collect::<Result<_, _>>()?;
    if coeffs.len() != alg.dim() {
        return Err(Error::Parse(format!(
            "torus vector has {} coefficients, algebra has dimension {}",
            coeffs.len(),
            alg.dim()
        )));
    }
    Ok(Element::from_coeffs(coeffs))
}

fn parse_index_set(spec: &str, dim: usize) -> Result<BTreeSet<usize>, Error> {
    let mut out = BTreeSet::new();
    for part in spec.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index `{part}`")))?;
        if idx == 0 || idx > dim {
            return Err(Error::Parse(format!("index {idx} out of range 1..{dim}")));
        }
        out.insert(idx - 1);
    }
    Ok(out)
}

fn emit(report: &Report) -> bool {
    println!("{}", report.to_json());
    eprint!("{}", report.human_summary());
    report.passed
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Build { kind, rank, out } => {
            let kind = SimpleType::from_str(&kind)?;
            let chev = chevalley::build_simple(kind, rank)?;
            let json = LieAlgebraJson::from_algebra(
                &chev.algebra,
                None,
                Some(chev.labels.clone()),
            );
            let text = serde_json::to_string_pretty(&json)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    eprintln!(
                        "built {kind}{rank}: dim {} with {} positive roots -> {path}",
                        chev.dim(),
                        chev.root_system.num_positive()
                    );
                }
                None => {
                    println!("{text}");
                    eprintln!(
                        "built {kind}{rank}: dim {} with {} positive roots",
                        chev.dim(),
                        chev.root_system.num_positive()
                    );
                }
            }
            Ok(true)
        }
        Cmd::VerifyFixture {
            file,
            seed,
            rederive,
        } => {
            let fx = match file {
                Some(path) => load_fixture(&path)?,
                None => Fixture::f4_centralizer()?,
            };
            let report = pipeline::verify_fixture(&fx, seed_or_default(seed), rederive)?;
            Ok(emit(&report))
        }
        Cmd::VerifyF4 { seed, rederive } => {
            let report = pipeline::verify_f4(seed_or_default(seed), rederive)?;
            Ok(emit(&report))
        }
        Cmd::Index { algebra, seed } => {
            let seed = seed_or_default(seed);
            let fx = load_fixture(&algebra)?;
            let names = ["f1", "f2", "f3", "f4"];
            let cert = if names.iter().all(|n| fx.kernel_vectors.contains_key(*n)) {
                coad::index_with_kernel(&fx.algebra, &fx.certified_kernel_vectors()?, seed)?
            } else {
                // symbolic kernel derivation grows with minor size; refuse
                // sizes where it cannot finish rather than hang
                if fx.algebra.dim() > 24 {
                    return Err(Error::Algebra(format!(
                        "certifying the index of a {}-dimensional algebra needs symbolic \
                         kernel vectors; supply them in the file (kernel_vectors) or use a \
                         smaller algebra",
                        fx.algebra.dim()
                    )));
                }
                coad::index(&fx.algebra, seed)?
            };
            let mut report = Report::new("index", seed);
            report.set_inputs(fx.source_digest.as_bytes());
            report.check(
                "index",
                true,
                format!("index {} with witness rank {}", cert.index, cert.witness_rank),
            );
            report.attach("index_certificate", &cert);
            Ok(emit(&report))
        }
        Cmd::InvariantCheck { algebra, poly } => {
            let fx = load_fixture(&algebra)?;
            let p = MultiPoly::parse(fx.algebra.dim(), &poly)?;
            let invariant = coad::is_invariant(&fx.algebra, &p)?;
            let semi = coad::is_semi_invariant(&fx.algebra, &p)?;
            let mut report = Report::new("invariant-check", 0);
            report.set_inputs(format!("{} {poly}", fx.source_digest).as_bytes());
            report.check(
                "invariant",
                invariant,
                if invariant {
                    "the polynomial is invariant for the adjoint action"
                } else {
                    "the polynomial is not invariant"
                },
            );
            match &semi {
                Some(w) => report.attach("semi_invariant_weight", w),
                None => report.attach("semi_invariant_weight", &serde_json::Value::Null),
            }
            Ok(emit(&report))
        }
        Cmd::Weights { algebra, torus } => {
            let fx = load_fixture(&algebra)?;
            let t = parse_torus_element(&fx.algebra, &torus)?;
            let torus = Torus::new(&fx.algebra, vec![t])?;
            let whole = Subspace::full(fx.algebra.dim());
            let decomp = WeightDecomp::new(&fx.algebra, &torus, &whole, None)?;
            let mut report = Report::new("weights", 0);
            report.set_inputs(fx.source_digest.as_bytes());
            let summary: Vec<(String, usize)> = decomp
                .weights
                .iter()
                .map(|w| {
                    (
                        w.iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        decomp.e_dim(w),
                    )
                })
                .collect();
            report.check(
                "decomposition",
                true,
                format!("{} weights", decomp.weights.len()),
            );
            report.check(
                "pair-symmetry",
                decomp.pair_symmetric(),
                "dim E_w = dim E_-w for every weight",
            );
            report.attach("weights", &summary);
            Ok(emit(&report))
        }
        Cmd::Delta { algebra, torus } => {
            let fx = load_fixture(&algebra)?;
            let t = parse_torus_element(&fx.algebra, &torus)?;
            let torus = Torus::new(&fx.algebra, vec![t])?;
            let whole = Subspace::full(fx.algebra.dim());
            let decomp = WeightDecomp::new(&fx.algebra, &torus, &whole, None)?;
            let dr = weights::delta_report(&fx.algebra, &decomp)?;
            let mut report = Report::new("delta", 0);
            report.set_inputs(fx.source_digest.as_bytes());
            report.check(
                "delta",
                true,
                format!(
                    "product over {} nonzero weights is {}",
                    dr.per_weight.len(),
                    if dr.delta_nonzero { "nonzero" } else { "zero" }
                ),
            );
            report.attach("delta_report", &dr);
            Ok(emit(&report))
        }
        Cmd::G0 { algebra, u, seed } => {
            let seed = seed_or_default(seed);
            let fx = load_fixture(&algebra)?;
            let n = fx.algebra.dim();
            let u_set: BTreeSet<usize> = match (&u, &fx.grading) {
                (Some(spec), _) => parse_index_set(spec, n)?,
                (None, Some(g)) => g.positive_indices().into_iter().collect(),
                (None, None) => BTreeSet::new(),
            };
            let g_u = Subspace::from_spanning(
                n,
                u_set.iter().map(|&i| Element::basis(n, i).coeffs),
            );
            let mut rng = SeededRng::new(seed);
            let point = rng.point(n);
            let (g0, proper) = coad::g0_subspace(&fx.algebra, &point, &g_u, &mut rng)?;
            let mut report = Report::new("g0", seed);
            report.set_inputs(fx.source_digest.as_bytes());
            report.check(
                "g0",
                true,
                format!(
                    "dim {} of {} ({})",
                    g0.dim(),
                    n,
                    if proper {
                        "proper: semi-invariants that are not invariant exist"
                    } else {
                        "not proper"
                    }
                ),
            );
            report.attach("dim", &g0.dim());
            report.attach("proper", &proper);
            report.attach("point", &point);
            Ok(emit(&report))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Io(_) | Error::Json(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
