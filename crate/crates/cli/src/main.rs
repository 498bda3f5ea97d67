//! `qwalk`: run quantum and classical walks, evaluate `.qwc` circuits and
//! compare spreading rates from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qwalk::analysis::{mean, spread_fit, stddev, total_variation};
use qwalk::classical::{crw_exact, crw_monte_carlo};
use qwalk::dsl::{evaluate, parse};
use qwalk::polarization::graybox_coin;
use qwalk::walk::{hadamard_gauge, run_walk, trajectory, CoinMode, WalkConfig};
use qwalk::{Distribution, Spin, SpinOrbitState};

use crate::output::{
    ascii_histogram, distribution_csv, entries, trajectory_csv, CircuitReport, ClassicalReport,
    CompareReport, CompareRow, FitReport, OutputFormat, WalkReport,
};

const PRUNE_ENV: &str = "QWALK_PRUNE_EPS";

#[derive(Debug, Parser)]
#[command(name = "qwalk", version, about = "Discrete-time quantum walks on photon spin/OAM space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coin {
    /// The ideal Hadamard coin.
    Hadamard,
    /// The wave-plate gray box (QWP 0°, HWP 22.5°, q-plate, HWP 0°), started
    /// from the phase-adjusted initial state that makes it reproduce the
    /// Hadamard walk's distribution.
    Physical,
}

impl Coin {
    fn name(self) -> &'static str {
        match self {
            Coin::Hadamard => "hadamard",
            Coin::Physical => "physical",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct InitSpec {
    label: String,
    r: Complex64,
    l: Complex64,
}

fn parse_init(text: &str) -> Result<InitSpec, String> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (r, l) = match text {
        "R" => (one, zero),
        "L" => (zero, one),
        "RiL" => (one, Complex64::new(0.0, 1.0)),
        custom => parse_custom_init(custom)?,
    };
    if r.norm_sqr() == 0.0 && l.norm_sqr() == 0.0 {
        return Err("initial coin state must have a nonzero amplitude".into());
    }
    Ok(InitSpec {
        label: text.to_string(),
        r,
        l,
    })
}

/// `(re,im),(re,im)`, whitespace ignored.
fn parse_custom_init(text: &str) -> Result<(Complex64, Complex64), String> {
    let bad = || format!("expected R, L, RiL or \"(re,im),(re,im)\", got {text:?}");
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once("),(").ok_or_else(bad)?;
    let complex = |s: &str| -> Result<Complex64, String> {
        let (re, im) = s.split_once(',').ok_or_else(bad)?;
        let re: f64 = re.parse().map_err(|_| bad())?;
        let im: f64 = im.parse().map_err(|_| bad())?;
        if !(re.is_finite() && im.is_finite()) {
            return Err(bad());
        }
        Ok(Complex64::new(re, im))
    };
    Ok((complex(a)?, complex(b)?))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an n-step quantum walk and print the OAM distribution.
    Walk {
        #[arg(long)]
        steps: usize,
        /// Initial coin state: R, L, RiL for (|R⟩+i|L⟩)/√2, or "(re,im),(re,im)".
        #[arg(long, default_value = "R", value_parser = parse_init)]
        init: InitSpec,
        /// Initial OAM index.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m0: i64,
        #[arg(long, value_enum, default_value_t = Coin::Hadamard)]
        coin: Coin,
        /// OAM step per walk step (2q of the q-plate).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        stride: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
        /// Draw an ASCII histogram on stderr.
        #[arg(long)]
        hist: bool,
        /// Also emit the distribution after every step.
        #[arg(long)]
        trajectory: bool,
    },
    /// Evaluate a .qwc circuit file.
    Circuit {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
        #[arg(long)]
        hist: bool,
    },
    /// Classical random walk, exact or Monte Carlo.
    Classical {
        #[arg(long)]
        steps: u32,
        /// Number of Monte Carlo trials; exact binomial distribution when absent.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        mc: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        out: OutputFormat,
        #[arg(long)]
        hist: bool,
    },
    /// Tabulate quantum and classical spread for several step counts.
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        steps_list: Vec<usize>,
        #[arg(long, default_value = "RiL", value_parser = parse_init)]
        init: InitSpec,
        #[arg(long, value_enum, default_value_t = Coin::Hadamard)]
        coin: Coin,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        out: OutputFormat,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Parse(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}\n\nFor more information, try '--help'.");
                ExitCode::from(2)
            }
            Failure::Internal(msg) => {
                eprintln!("internal error: {msg}");
                ExitCode::from(1)
            }
            Failure::Parse(msg) => {
                eprintln!("{msg}");
                ExitCode::from(3)
            }
        }
    }
}

impl From<qwalk::Error> for Failure {
    fn from(e: qwalk::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn prune_eps() -> Result<Option<f64>, Failure> {
    match std::env::var(PRUNE_ENV) {
        Err(_) => Ok(None),
        Ok(v) if v.trim().is_empty() => Ok(None),
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(eps) if eps.is_finite() && eps >= 0.0 => Ok(Some(eps)),
            _ => Err(Failure::Usage(format!("{PRUNE_ENV} must be a non-negative number, got {v:?}"))),
        },
    }
}

fn walk_config(init: &InitSpec, m0: i64, coin: Coin, stride: u32, steps: usize) -> Result<WalkConfig, Failure> {
    let state = SpinOrbitState::superpose(&[(init.r, Spin::R, m0), (init.l, Spin::L, m0)])?;
    let cfg = match coin {
        Coin::Hadamard => WalkConfig::new(state, steps),
        Coin::Physical => {
            let (_, gauge) = hadamard_gauge(&graybox_coin(), stride)?;
            WalkConfig::new(gauge.adjust_initial(&state), steps).with_coin(CoinMode::PhysicalGraybox)
        }
    };
    Ok(cfg.with_stride(stride).with_prune(prune_eps()?))
}

fn moments(d: &Distribution) -> Result<(f64, f64), Failure> {
    Ok((mean(d)?, stddev(d)?))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Walk {
            steps,
            init,
            m0,
            coin,
            stride,
            out,
            hist,
            trajectory: with_trajectory,
        } => {
            let cfg = walk_config(&init, m0, coin, stride, steps)?;
            let (dist, traj) = if with_trajectory {
                let mut traj = trajectory(&cfg)?;
                (traj.pop().unwrap(), Some(traj))
            } else {
                (run_walk(&cfg)?.oam_marginal(), None)
            };
            let (mu, sigma) = moments(&dist)?;
            if hist {
                eprint!("{}", ascii_histogram(&dist));
            }
            match out {
                OutputFormat::Json => print_json(&WalkReport {
                    steps,
                    coin: coin.name(),
                    init: init.label,
                    distribution: entries(&dist),
                    mean: mu,
                    stddev: sigma,
                    trajectory: traj.map(|t| {
                        t.iter().chain(std::iter::once(&dist)).map(entries).collect()
                    }),
                })?,
                OutputFormat::Csv => match traj {
                    Some(mut t) => {
                        t.push(dist);
                        print!("{}", trajectory_csv(&t));
                    }
                    None => print!("{}", distribution_csv(&dist)),
                },
            }
        }
        Command::Circuit { path, out, hist } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let circuit = parse(&text).map_err(|e| Failure::Parse(format!("{}:{e}", path.display())))?;
            let eval = evaluate(&circuit)?;
            match (eval.distribution, circuit.measure) {
                (Some(dist), Some(window)) => {
                    if hist {
                        eprint!("{}", ascii_histogram(&dist));
                    }
                    let (mu, sigma) = if dist.is_normalized() {
                        let (m, s) = moments(&dist)?;
                        (Some(m), Some(s))
                    } else {
                        (None, None)
                    };
                    match out {
                        OutputFormat::Json => print_json(&CircuitReport {
                            circuit: path.display().to_string(),
                            window: [window.m_min, window.m_max],
                            normalized: dist.is_normalized(),
                            captured_mass: dist.total_mass(),
                            distribution: entries(&dist),
                            mean: mu,
                            stddev: sigma,
                        })?,
                        OutputFormat::Csv => print!("{}", distribution_csv(&dist)),
                    }
                }
                _ => print!("{}", eval.state.dump()),
            }
        }
        Command::Classical {
            steps,
            mc,
            seed,
            out,
            hist,
        } => {
            let exact = crw_exact(steps);
            let (dist, tv) = match mc {
                Some(trials) => {
                    let d = crw_monte_carlo(steps, trials, seed)?;
                    let tv = total_variation(&d, &exact)?;
                    (d, Some(tv))
                }
                None => (exact, None),
            };
            let (mu, sigma) = moments(&dist)?;
            if hist {
                eprint!("{}", ascii_histogram(&dist));
            }
            match out {
                OutputFormat::Json => print_json(&ClassicalReport {
                    steps,
                    method: if mc.is_some() { "monte_carlo" } else { "exact" },
                    trials: mc,
                    seed: mc.map(|_| seed),
                    distribution: entries(&dist),
                    mean: mu,
                    stddev: sigma,
                    total_variation_to_exact: tv,
                })?,
                OutputFormat::Csv => print!("{}", distribution_csv(&dist)),
            }
        }
        Command::Compare {
            steps_list,
            init,
            coin,
            out,
        } => {
            let mut sorted = steps_list.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted != steps_list {
                return Err(Failure::Usage("--steps-list must be strictly increasing".into()));
            }
            let max_n = *sorted.last().unwrap();
            let traj = trajectory(&walk_config(&init, 0, coin, 1, max_n)?)?;
            let mut rows = Vec::with_capacity(steps_list.len());
            for &n in &steps_list {
                let sigma_q = stddev(&traj[n])?;
                let steps = u32::try_from(n).map_err(|_| Failure::Usage(format!("step count {n} too large")))?;
                let sigma_c = stddev(&crw_exact(steps))?;
                rows.push(CompareRow {
                    n,
                    sigma_q,
                    sigma_c,
                    ratio: sigma_q / sigma_c,
                });
            }
            let fit = |f: fn(&CompareRow) -> f64| {
                let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, f(r))).collect();
                spread_fit(&pts).ok().map(|s| FitReport {
                    slope: s.slope,
                    r_squared: s.r_squared,
                })
            };
            let report = CompareReport {
                init: init.label,
                coin: coin.name(),
                qrw_fit: fit(|r| r.sigma_q),
                crw_fit: fit(|r| r.sigma_c),
                reference_slope: std::f64::consts::FRAC_1_SQRT_2,
                rows,
            };
            match out {
                OutputFormat::Json => print_json(&report)?,
                OutputFormat::Csv => {
                    print!("{}", report.csv());
                    eprint!("{}", report.fit_summary());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}
