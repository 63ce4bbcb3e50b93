//! `polya` — Polya groups of real quadratic, bi-quadratic and simplest
//! cubic fields from the command line.
//!
//! Exit codes: 0 success / claim verified; 1 verification failed (a claim
//! did not reproduce); 2 unsupported or malformed input; 3 a search or
//! effort budget ran out.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use cache::UnitCache;
use output::{big, emit};
use polya_core::{arith, constructors, cubic, density, formoracle, quadfield};
use polya_core::{BiquadField, Error, SimplestCubic, TupleCertificate};

#[derive(Parser)]
#[command(name = "polya", version, about = "Polya groups of small-degree fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Emit tab-separated output instead of JSON.
    #[arg(long, global = true)]
    tsv: bool,
    /// Emit JSON output (the default).
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Fundamental-unit cache file (append-only `d x y norm` lines).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Absolute ceiling for prime scans in arithmetic progressions.
    #[arg(long, global = true, value_name = "B")]
    search_bound: Option<BigInt>,
    /// Miller-Rabin rounds for candidates above 2^64.
    #[arg(long, global = true, value_name = "R")]
    mr_rounds: Option<u32>,
    /// Continued-fraction step budget.
    #[arg(long, global = true, value_name = "B")]
    cf_bound: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank data and fundamental unit of Q(sqrt d).
    Quad {
        #[arg(long)]
        d: BigInt,
    },
    /// Independent Polya rank of Q(sqrt d) via binary quadratic forms.
    Oracle {
        #[arg(long)]
        d: BigInt,
    },
    /// Rank data of the bi-quadratic field Q(sqrt m, sqrt n).
    Biquad {
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        n: BigInt,
    },
    /// Simplest cubic field data for parameter n.
    Cubic {
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Prime tuple r_i = 1 (mod 8pq) with pairwise Jacobi -1, by the
    /// incremental CRT construction.
    Tuple {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: BigInt,
        #[arg(long)]
        q: BigInt,
    },
    /// Check Po(K_{m,p-1}) = Po(K_{m,p}) = (Z/2)^(t-1) on a fresh family
    /// instance.
    VerifyBiquad {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        q: BigInt,
    },
    /// Produce and re-check a certificate that |Po(K_p)| > M.
    VerifyCubic {
        #[arg(long = "M")]
        m: f64,
    },
    /// Square-free density of h at primes = a (mod m) up to X, against the
    /// Euler product.
    Density {
        #[arg(long = "X")]
        x: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 10_000)]
        cutoff: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(rounds) = cli.global.mr_rounds {
        if rounds == 0 {
            eprintln!("--mr-rounds must be positive");
            return ExitCode::from(2);
        }
        arith::set_mr_rounds(rounds);
    }
    match run(&cli) {
        Ok(value) => {
            emit(&value, cli.global.tsv);
            ExitCode::SUCCESS
        }
        Err(Outcome::NotVerified(value)) => {
            emit(&value, cli.global.tsv);
            ExitCode::from(1)
        }
        Err(Outcome::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::EffortExceeded(_) | Error::SearchExhausted(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

enum Outcome {
    /// A verification subcommand ran to completion but the claim failed.
    NotVerified(Value),
    Lib(Error),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::Lib(e)
    }
}

fn run(cli: &Cli) -> Result<Value, Outcome> {
    let g = &cli.global;
    let cf = g.cf_bound.unwrap_or(polya_core::DEFAULT_CF_STEPS);
    let ceiling = g
        .search_bound
        .clone()
        .unwrap_or_else(arith::default_search_ceiling);
    match &cli.cmd {
        Cmd::Quad { d } => {
            let field = quadfield::QuadField::new(d)?;
            let mut cache = match &g.cache {
                Some(path) => UnitCache::load(path),
                None => UnitCache::ephemeral(),
            };
            let unit = match cache.get(d) {
                Some(u) => u.clone(),
                None => {
                    let u = quadfield::fundamental_unit_bounded(d, cf)?;
                    cache.store(u.clone());
                    u
                }
            };
            let h1 = quadfield::quad_h1_rank_bounded(d, cf)?;
            let rank = field.ramified.len() - h1;
            Ok(json!({
                "d": big(d),
                "rank": rank,
                "ramified": field.ramified.iter().map(big).collect::<Vec<_>>(),
                "h1_rank": h1,
                "unit": {"x": big(&unit.x), "y": big(&unit.y), "norm": unit.norm},
            }))
        }
        Cmd::Oracle { d } => {
            let disc = quadfield::discriminant(d)?;
            let group = formoracle::narrow_class_group(&disc)?;
            let rank = formoracle::polya_group_oracle(d)?;
            Ok(json!({
                "d": big(d),
                "discriminant": big(&disc),
                "h_plus": group.h_plus(),
                "rank": rank,
            }))
        }
        Cmd::Biquad { m, n } => {
            let field = BiquadField::new_bounded(m, n, cf)?;
            Ok(json!({
                "m": big(m),
                "n": big(n),
                "d1": big(&field.d1),
                "d2": big(&field.d2),
                "d3": big(&field.d3),
                "ramified": field.ramified.iter()
                    .map(|(p, e)| json!([big(p), e]))
                    .collect::<Vec<_>>(),
                "s": field.ramified.len(),
                "h1_rank": field.h1_rank,
                "rank": field.polya_rank,
            }))
        }
        Cmd::Cubic { n } => {
            let k = SimplestCubic::new(n)?;
            if !k.squarefree {
                return Err(Outcome::Lib(Error::Unsupported(format!(
                    "h({n}) = {} is not square-free",
                    k.hn
                ))));
            }
            let disc = cubic::discriminant_simplest_cubic(n)?;
            Ok(json!({
                "n": big(n),
                "h": big(&k.hn),
                "squarefree": true,
                "discriminant": big(&disc),
                "ramified": k.ramified.as_ref().unwrap().iter().map(big).collect::<Vec<_>>(),
                "r_k": k.r_k().unwrap(),
                "po_order": big(k.po_order.as_ref().unwrap()),
            }))
        }
        Cmd::Tuple { t, p, q } => {
            let cert = constructors::crt_prime_tuple(*t, p, q, &ceiling)?;
            Ok(tuple_json(&cert))
        }
        Cmd::VerifyBiquad { t, q } => {
            let report = constructors::verify_theorem_biquad_bounded(*t, q, &ceiling, cf)?;
            let value = json!({
                "t": report.t,
                "q": big(&report.q),
                "p": big(&report.p),
                "m": big(&report.m),
                "tuple": tuple_json(&report.tuple),
                "rank_kmp": report.rank_kmp,
                "rank_kmp_minus_1": report.rank_kmp_minus_1,
                "expected": report.expected,
                "h1_structure_ok": report.h1_structure_ok,
                "passed": report.passed,
            });
            if report.passed {
                Ok(value)
            } else {
                Err(Outcome::NotVerified(value))
            }
        }
        Cmd::VerifyCubic { m } => {
            let cert = constructors::verify_theorem_cubic(*m, &ceiling)?;
            Ok(json!({
                "bound": cert.bound,
                "t": cert.t,
                "auxiliary_primes": cert.auxiliary_primes.iter().map(big).collect::<Vec<_>>(),
                "x0": big(&cert.x0),
                "modulus": big(&cert.modulus),
                "p": big(&cert.p),
                "hn_factors": cert.hn_factors.factors.iter()
                    .map(|(p, e)| json!([big(p), e]))
                    .collect::<Vec<_>>(),
                "po_lower_bound": big(&cert.po_lower_bound),
            }))
        }
        Cmd::Density { x, a, m, cutoff } => {
            let r = density::density_report(*x, *a, *m, *cutoff)?;
            Ok(json!({
                "x": r.x,
                "a": r.a,
                "m": r.m,
                "empirical": r.empirical,
                "primes_in_ap": r.primes_in_ap,
                "euler_c": r.euler_c,
                "tail_factor_lower_bound": r.tail_factor_lower_bound,
                "main_term": r.main_term,
                "ratio": r.ratio,
            }))
        }
    }
}

fn tuple_json(cert: &TupleCertificate) -> Value {
    json!({
        "t": cert.t,
        "p": big(&cert.p),
        "q": big(&cert.q),
        "primes": cert.primes.iter().map(big).collect::<Vec<_>>(),
        "transcript": cert.transcript.iter().map(|step| json!({
            "congruences": step.congruences.iter()
                .map(|(r, m)| json!([big(r), big(m)]))
                .collect::<Vec<_>>(),
            "x0": big(&step.x0),
            "modulus": big(&step.modulus),
            "found": big(&step.found),
        })).collect::<Vec<_>>(),
    })
}
