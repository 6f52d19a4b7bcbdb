use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use scx::campaign::{run_suite, CampaignConfig};
use scx::input::{load_complex, load_matroid, load_partition, load_subset};
use scx::report::VerificationReport;
use scx::{exit_code, reproduce, EXIT_CHECK_FAILED, EXIT_PASS};
use scx_core::domination::HallReport;
use scx_core::homology::{betti_exact, betti_hodge, spectrum, KERNEL_TOL};
use scx_core::matroid::{check_my_hms, check_my_hms_star, phi, phi_star};
use scx_core::numerics::format_rational;
use scx_core::report::extended_float;
use scx_core::{Error, Result};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "scx", version, about = "Spectra, cohomology and domination checks for simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the reduced Laplacian L_k.
    Spectrum {
        /// Complex JSON file or builtin:NAME.
        input: String,
        #[arg(long)]
        dim: isize,
        /// Eigenvalues at or below this count towards the kernel dimension.
        #[arg(long, default_value_t = KERNEL_TOL)]
        tol: f64,
        #[arg(long)]
        pretty: bool,
    },
    /// Exact reduced Betti number over the rationals.
    Betti {
        input: String,
        #[arg(long)]
        dim: isize,
        #[arg(long)]
        pretty: bool,
    },
    /// Run a seeded randomized campaign.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        #[arg(long, default_value_t = KERNEL_TOL)]
        kernel_tol: f64,
        #[arg(long)]
        pretty: bool,
        /// Include wall time in the report (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// Check a named example: rpartite, ag23, pg33 or ag23-sharpness.
    Reproduce {
        name: String,
        /// Also run the exact homology of the projective complex.
        #[arg(long)]
        stretch: bool,
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        timing: bool,
    },
    /// General position parameters of a matroid.
    Matroid {
        #[arg(value_enum)]
        sub: MatroidSub,
        /// Matroid JSON file, builtin:AG23, builtin:PG33 or uniform:R,N.
        #[arg(long)]
        matroid: String,
        /// all, a comma-separated list, or a JSON array file.
        #[arg(long)]
        subset: Option<String>,
        /// Partition JSON file, 3-parallel-lines or singletons:N.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatroidSub {
    Phi,
    Phistar,
    Hall,
}

#[derive(Serialize)]
struct SpectrumOut {
    k: isize,
    n: usize,
    eigenvalues: Vec<f64>,
    #[serde(with = "extended_float")]
    mu: f64,
    #[serde(with = "extended_float")]
    lambda_max: f64,
    kernel_dim: usize,
    tol: f64,
}

#[derive(Serialize)]
struct HallRowOut {
    classes: Vec<usize>,
    value: f64,
    threshold: f64,
    holds: bool,
}

#[derive(Serialize)]
struct HallOut {
    check: String,
    hypothesis: bool,
    witness: Option<Vec<usize>>,
    outcome: scx_core::Outcome,
    rows: Vec<HallRowOut>,
}

impl From<&HallReport> for HallOut {
    fn from(h: &HallReport) -> Self {
        HallOut {
            check: h.report.check.clone(),
            hypothesis: h.hypothesis,
            witness: h.witness.map(|w| w.to_vec()),
            outcome: h.report.outcome,
            rows: h
                .rows
                .iter()
                .map(|r| HallRowOut {
                    classes: (0..64).filter(|b| r.mask >> b & 1 == 1).collect(),
                    value: r.value,
                    threshold: r.threshold,
                    holds: r.holds,
                })
                .collect(),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

fn emit_report(mut report: VerificationReport, pretty: bool, started: Option<Instant>) -> i32 {
    report.wall_time_s = started.map(|s| s.elapsed().as_secs_f64());
    if pretty {
        print!("{}", report.to_table());
    } else {
        println!("{}", json(&report));
    }
    if report.pass {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Spectrum { input, dim, tol, pretty } => {
            let x = load_complex(&input)?.value;
            let sp = spectrum(&x, dim)?;
            let kernel_dim = betti_hodge(&x, dim, tol)?;
            let out = SpectrumOut {
                k: dim,
                n: x.n(),
                eigenvalues: sp.eigenvalues,
                mu: sp.mu,
                lambda_max: sp.lambda_max,
                kernel_dim,
                tol,
            };
            if pretty {
                println!("k = {}  n = {}  size = {}", out.k, out.n, out.eigenvalues.len());
                println!("mu_{} = {}", out.k, out.mu);
                println!("lambda_max = {}", out.lambda_max);
                println!("kernel dimension = {}", out.kernel_dim);
            } else {
                println!("{}", json(&out));
            }
            Ok(EXIT_PASS)
        }
        Command::Betti { input, dim, pretty } => {
            let x = load_complex(&input)?.value;
            let b = betti_exact(&x, dim);
            if pretty {
                println!("beta_{dim} = {b}");
            } else {
                println!("{b}");
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { suite, seed, trials, n_max, d_max, kernel_tol, pretty, timing } => {
            if n_max > 12 {
                return Err(Error::Guard { what: "--n-max", value: n_max, limit: 12 });
            }
            let cfg = CampaignConfig { seed, trials, n_max, d_max, kernel_tol, ..CampaignConfig::default() };
            let started = Instant::now();
            let report = run_suite(&suite, &cfg)?;
            Ok(emit_report(report, pretty, timing.then_some(started)))
        }
        Command::Reproduce { name, stretch, pretty, timing } => {
            let started = Instant::now();
            let report = reproduce::run(&name, stretch)?;
            Ok(emit_report(report, pretty, timing.then_some(started)))
        }
        Command::Matroid { sub, matroid, subset, partition, pretty } => {
            let m = load_matroid(&matroid)?.value;
            let s = load_subset(subset.as_deref(), m.ground_set())?;
            match sub {
                MatroidSub::Phi => {
                    let (size, witness) = phi(&m, s)?;
                    if pretty {
                        println!("phi = {size}  witness {:?}", witness.to_vec());
                    } else {
                        println!("{}", json(&serde_json::json!({ "phi": size, "witness": witness.to_vec() })));
                    }
                    Ok(EXIT_PASS)
                }
                MatroidSub::Phistar => {
                    let star = phi_star(&m, s)?;
                    let value = format_rational(&star.value);
                    if pretty {
                        println!("phi* = {value}  ({} constraint groups)", star.constraints);
                    } else {
                        let weights: Vec<String> = star.weights.iter().map(format_rational).collect();
                        println!(
                            "{}",
                            json(&serde_json::json!({
                                "phi_star": value,
                                "weights": weights,
                                "constraints": star.constraints,
                            }))
                        );
                    }
                    Ok(EXIT_PASS)
                }
                MatroidSub::Hall => {
                    let arg = partition
                        .ok_or_else(|| Error::InvalidInput("hall needs --partition".into()))?;
                    let p = load_partition(&arg)?;
                    let reports = [check_my_hms_star(&m, &p)?, check_my_hms(&m, &p)?];
                    let pass = reports.iter().all(|h| h.report.passed());
                    if pretty {
                        for h in &reports {
                            println!("{}: hypothesis {}  outcome {:?}", h.report.check, h.hypothesis, h.report.outcome);
                            println!("  {:<12} {:>12} {:>12} {}", "classes", "value", "threshold", "holds");
                            for r in &HallOut::from(h).rows {
                                println!("  {:<12} {:>12.4} {:>12} {}", format!("{:?}", r.classes), r.value, r.threshold, r.holds);
                            }
                            println!("  witness {:?}", h.witness.map(|w| w.to_vec()));
                        }
                    } else {
                        let out: Vec<HallOut> = reports.iter().map(HallOut::from).collect();
                        println!("{}", json(&out));
                    }
                    Ok(if pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("scx: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
