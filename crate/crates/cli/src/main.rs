mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hyperlat::analysis::{check_rank2_criterion_in, modular_flats_of_rank, poincare, supersolvable_in};
use hyperlat::cache::{CacheStatus, LatticeCache};
use hyperlat::claims::{verify, Scope};
use hyperlat::{build_lattice_limited, Arrangement, ArrangementSpec, Error, IntersectionLattice};

use report::{ArrangementDto, CertificateDto, ClaimDto, CriterionDto, Report, VerdictDto};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

/// Exact intersection lattices, modular flats and supersolvability of
/// hyperplane arrangements over cyclotomic fields.
///
/// ARRANGEMENT is a catalog name (G(r,p,l), An, Bn, Dn, I2(m), Boolean(n),
/// D4, F4, H3, G25, G26, G29, G31), a path to an arrangement file (or
/// @path), or a product such as "B2 * G(3,3,3)".
#[derive(Parser, Debug)]
#[command(name = "hyperlat", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for cached lattices.
    #[arg(long, global = true, env = "HYPERLAT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Abort lattice construction beyond this many flats.
    #[arg(long, global = true, default_value_t = 500_000)]
    max_flats: usize,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Include wall-clock time in JSON output.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize and summarize an arrangement.
    Build { arrangement: String },
    /// Number of flats of each rank.
    Lattice { arrangement: String },
    /// Modularity of every flat of the given rank, with witnesses.
    Modular {
        arrangement: String,
        #[arg(long)]
        rank: usize,
    },
    /// Supersolvability certificate: a modular chain or a refutation.
    Supersolvable {
        arrangement: String,
        /// Also compare with the existence of a modular rank-2 flat
        /// (refused for reducible input).
        #[arg(long)]
        rank2_criterion: bool,
    },
    /// Poincaré polynomial, and exponents when supersolvable.
    Poincare { arrangement: String },
    /// Irreducible factors.
    Decompose { arrangement: String },
    /// Re-derive the catalogued non-modularity claims.
    VerifyPaper {
        /// all, witnesses, rank2, criterion, or an arrangement name.
        #[arg(default_value = "all")]
        scope: String,
    },
}

struct Context {
    cache: Option<LatticeCache>,
    max_flats: usize,
}

impl Context {
    fn lattice(&self, arr: &Arrangement) -> hyperlat::Result<IntersectionLattice> {
        match &self.cache {
            Some(cache) => {
                let (lattice, status) = cache.get_or_build(arr, self.max_flats)?;
                if status == CacheStatus::Replaced {
                    eprintln!("warning: invalid cache entry rebuilt");
                }
                Ok(lattice)
            }
            None => build_lattice_limited(arr, self.max_flats),
        }
    }
}

fn load(text: &str) -> hyperlat::Result<(String, Arrangement)> {
    let spec = ArrangementSpec::parse(text)?;
    let arr = spec.resolve()?;
    Ok((spec.to_string(), arr))
}

fn run(cli: &Cli, ctx: &Context) -> hyperlat::Result<Report> {
    Ok(match &cli.command {
        Command::Build { arrangement } => {
            let (name, arr) = load(arrangement)?;
            Report::Build { arrangement: ArrangementDto::new(&name, &arr) }
        }
        Command::Lattice { arrangement } => {
            let (name, arr) = load(arrangement)?;
            let lattice = ctx.lattice(&arr)?;
            Report::Lattice {
                arrangement: ArrangementDto::new(&name, &arr),
                level_sizes: lattice.level_sizes(),
                total_flats: lattice.len(),
            }
        }
        Command::Modular { arrangement, rank } => {
            let (name, arr) = load(arrangement)?;
            let lattice = ctx.lattice(&arr)?;
            let verdicts = modular_flats_of_rank(&lattice, *rank)?;
            Report::Modular {
                arrangement: ArrangementDto::new(&name, &arr),
                rank: *rank,
                flats: verdicts.len(),
                modular: verdicts.iter().filter(|v| v.modular).count(),
                verdicts: verdicts.iter().map(VerdictDto::new).collect(),
            }
        }
        Command::Supersolvable { arrangement, rank2_criterion } => {
            let (name, arr) = load(arrangement)?;
            let essentialized = !arr.is_essential();
            let target = if essentialized { arr.essentialize() } else { arr.clone() };
            let criterion = if *rank2_criterion {
                let factors = arr.irreducible_decomposition();
                if factors.len() != 1 {
                    return Err(Error::Refused(format!(
                        "the rank-2 criterion applies to irreducible arrangements; {name} has {} factors",
                        factors.len()
                    )));
                }
                Some(factors.into_iter().next().unwrap())
            } else {
                None
            };
            let lattice = ctx.lattice(&target)?;
            let mut cert = supersolvable_in(&lattice)?;
            cert.essentialized = essentialized;
            let rank2_criterion = match criterion {
                Some(factor) => Some(CriterionDto::new(&check_rank2_criterion_in(&ctx.lattice(&factor)?)?)),
                None => None,
            };
            Report::Supersolvable {
                arrangement: ArrangementDto::new(&name, &arr),
                certificate: CertificateDto::new(&name, &cert),
                rank2_criterion,
            }
        }
        Command::Poincare { arrangement } => {
            let (name, arr) = load(arrangement)?;
            let lattice = ctx.lattice(&arr)?;
            let pi = poincare(&lattice);
            let supersolvable = if arr.is_essential() {
                supersolvable_in(&lattice)?.supersolvable
            } else {
                supersolvable_in(&ctx.lattice(&arr.essentialize())?)?.supersolvable
            };
            let exponents = if supersolvable {
                Some(pi.integer_factorization().ok_or_else(|| {
                    Error::Inconsistent(format!("π = {pi} of a supersolvable arrangement does not split over ℤ"))
                })?)
            } else {
                None
            };
            Report::Poincare {
                arrangement: ArrangementDto::new(&name, &arr),
                coefficients: pi.coefficients.clone(),
                polynomial: pi.to_string(),
                supersolvable,
                exponents,
            }
        }
        Command::Decompose { arrangement } => {
            let (name, arr) = load(arrangement)?;
            let factors = arr.irreducible_decomposition();
            Report::Decompose {
                arrangement: ArrangementDto::new(&name, &arr),
                factors: factors
                    .iter()
                    .enumerate()
                    .map(|(k, f)| ArrangementDto::new(&format!("factor {k}"), f))
                    .collect(),
            }
        }
        Command::VerifyPaper { scope } => {
            let results = verify(&Scope::parse(scope)?, ctx.max_flats)?;
            let passed = results.iter().filter(|r| r.passed).count();
            Report::VerifyPaper {
                scope: scope.clone(),
                passed,
                failed: results.len() - passed,
                claims: results.iter().map(ClaimDto::new).collect(),
            }
        }
    })
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::UnknownArrangement(_)
        | Error::InvalidHyperplane(_)
        | Error::BadLength { .. }
        | Error::AmbientMismatch { .. }
        | Error::OrderMismatch { .. }
        | Error::ZeroOrder => EXIT_PARSE,
        Error::Refused(_) | Error::TooManyFlats { .. } | Error::RankOutOfRange { .. } => EXIT_REFUSED,
        _ => EXIT_VERIFICATION,
    }
}

#[derive(Serialize)]
struct Timed<'a> {
    #[serde(flatten)]
    report: &'a Report,
    elapsed_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    }
    let ctx = Context { cache: cli.cache_dir.clone().map(LatticeCache::new), max_flats: cli.max_flats };
    let start = Instant::now();
    let report = match run(&cli, &ctx) {
        Ok(r) => r,
        Err(e) => {
            let code = exit_code_for(&e);
            eprintln!("{e}");
            return ExitCode::from(code);
        }
    };
    let elapsed = start.elapsed();
    let out = if cli.json {
        let text = if cli.timing {
            serde_json::to_string_pretty(&Timed { report: &report, elapsed_ms: elapsed.as_secs_f64() * 1e3 })
        } else {
            serde_json::to_string_pretty(&report)
        };
        text.expect("reports serialize") + "\n"
    } else {
        let mut text = report.human();
        if cli.timing {
            text.push_str(&format!("elapsed: {:.1} ms\n", elapsed.as_secs_f64() * 1e3));
        }
        text
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match &report {
        Report::VerifyPaper { failed, .. } if *failed > 0 => ExitCode::from(EXIT_VERIFICATION),
        _ => ExitCode::SUCCESS,
    }
}
