//! Command-line front end: synthesize dividers, run divisions through the
//! simulators, emit resource reports and sweep verification.

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qdiv::lowering::lower;
use qdiv::refmodel;
use qdiv::resources::{comparison_report, count_with_prediction, predicted_divider_tcount};
use qdiv::sim::{run_basis, run_statevector_with_limit, BasisState, DEFAULT_WIDTH_LIMIT};
use qdiv::synth::{build_divider, DividerInstance};
use qdiv::{Error, Level};

/// Exit codes: 0 success, 1 internal failure, 2 usage or guard error,
/// 3 domain error.
const EXIT_INTERNAL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;

/// Exhaustive verification is capped to keep the 4^n pair sweep tractable.
const EXHAUSTIVE_MAX_N: usize = 5;

#[derive(Parser)]
#[command(
    name = "qdiv",
    version,
    about = "Restoring integer-division quantum circuits: synthesize, lower, simulate, analyze",
    after_help = "The state-vector simulator refuses circuits wider than 14 qubits unless \
                  QDIV_WIDTH_LIMIT overrides the guard. Valid division inputs are any n-bit \
                  dividend with a divisor in 1..=2^(n-1)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Logical,
    Toffoli,
    Cliffordt,
}

impl From<LevelArg> for Level {
    fn from(arg: LevelArg) -> Level {
        match arg {
            LevelArg::Logical => Level::Logical,
            LevelArg::Toffoli => Level::ToffoliCnot,
            LevelArg::Cliffordt => Level::CliffordT,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a divider and emit OpenQASM 2.0 (register map on stderr)
    Build {
        /// Operand width in qubits
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=63))]
        n: u64,
        #[arg(long, value_enum, default_value_t = LevelArg::Logical)]
        level: LevelArg,
        /// Write QASM here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Divide through the simulated circuit and check it against the oracle
    Run {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=63))]
        n: u64,
        #[arg(long)]
        dividend: u64,
        #[arg(long)]
        divisor: u64,
        #[arg(long, value_enum, default_value_t = LevelArg::Logical)]
        level: LevelArg,
    },
    /// Print the resource report and the baseline comparison
    Resources {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=63))]
        n: u64,
        #[arg(long, value_enum, default_value_t = LevelArg::Logical)]
        level: LevelArg,
    },
    /// Sweep (dividend, divisor) pairs against the oracle
    #[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=63))]
        n: u64,
        /// Every in-domain pair (only for n <= 5)
        #[arg(long)]
        exhaustive: bool,
        /// Number of random samples
        #[arg(long, value_name = "SAMPLES")]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct LayoutMap<'a> {
    dividend: &'a [usize],
    divisor: &'a [usize],
    ancilla: &'a [usize],
    quotient: &'a [usize],
    remainder: &'a [usize],
}

#[derive(Serialize)]
struct RunOutcome {
    quotient: u64,
    remainder: u64,
    divisor_preserved: bool,
    oracle_agrees: bool,
}

#[derive(Serialize)]
struct ResourcesOutput {
    report: qdiv::resources::ResourceReport,
    comparison: qdiv::resources::ComparisonReport,
}

#[derive(Serialize)]
struct Counterexample {
    dividend: u64,
    divisor: u64,
    expected_quotient: u64,
    expected_remainder: u64,
    got_quotient: u64,
    got_remainder: u64,
    divisor_preserved: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    mode: &'static str,
    seed: Option<u64>,
    samples: u64,
    passed: u64,
    failed: u64,
    counterexample: Option<Counterexample>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    });
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::DomainViolation(_) | Error::DivisionByZero => EXIT_DOMAIN,
        Error::BadWidth | Error::WidthLimitExceeded { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn statevector_width_limit() -> Result<usize, Error> {
    match std::env::var("QDIV_WIDTH_LIMIT") {
        Ok(value) => value.parse().map_err(|_| {
            Error::DomainViolation(format!(
                "QDIV_WIDTH_LIMIT must be an integer, got {value:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_WIDTH_LIMIT),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Build { n, level, output } => cmd_build(n as usize, level.into(), output),
        Command::Run {
            n,
            dividend,
            divisor,
            level,
        } => cmd_run(n as usize, dividend, divisor, level.into()),
        Command::Resources { n, level } => cmd_resources(n as usize, level.into()),
        Command::Verify {
            n,
            exhaustive,
            random,
            seed,
        } => cmd_verify(n as usize, exhaustive, random, seed),
    }
}

fn cmd_build(n: usize, level: Level, output: Option<PathBuf>) -> Result<i32, Error> {
    let instance = build_divider(n)?;
    let circuit = lower(instance.circuit(), level)?;
    let qasm = circuit.export_qasm()?;
    let layout = instance.layout();
    eprintln!(
        "{}",
        json(&LayoutMap {
            dividend: layout.q_bits(),
            divisor: layout.d_bits(),
            ancilla: layout.r_bits(),
            quotient: layout.quotient_bits(),
            remainder: layout.remainder_bits(),
        })
    );
    match output {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, qasm) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return Ok(EXIT_INTERNAL);
            }
        }
        None => {
            print!("{qasm}");
            std::io::stdout().flush().ok();
        }
    }
    Ok(0)
}

fn division_input(instance: &DividerInstance, dividend: u64, divisor: u64) -> BasisState {
    let layout = instance.layout();
    let mut input = BasisState::zeros(instance.circuit().width());
    input.set_register(layout.q_bits(), dividend);
    input.set_register(layout.d_bits(), divisor);
    input
}

fn decode_outputs(instance: &DividerInstance, out: &BasisState) -> (u64, u64, u64) {
    let layout = instance.layout();
    (
        out.register_value(layout.quotient_bits()),
        out.register_value(layout.remainder_bits()),
        out.register_value(layout.d_bits()),
    )
}

/// Simulates one division on the instance at the requested level and decodes
/// the output registers.
fn simulate_division(
    instance: &DividerInstance,
    level: Level,
    dividend: u64,
    divisor: u64,
) -> Result<(u64, u64, u64), Error> {
    let input = division_input(instance, dividend, divisor);
    let out = match level {
        Level::Logical | Level::ToffoliCnot => {
            let circuit = lower(instance.circuit(), level)?;
            run_basis(&circuit, &input)?
        }
        Level::CliffordT => {
            let circuit = lower(instance.circuit(), Level::CliffordT)?;
            let sv = run_statevector_with_limit(&circuit, &input, statevector_width_limit()?)?;
            let (index, probability) = sv.dominant_basis_state();
            if (probability - 1.0).abs() > 1e-6 {
                return Err(Error::BadLayout(format!(
                    "state-vector output is not a basis state (p = {probability})"
                )));
            }
            BasisState::from_index(instance.circuit().width(), index)
        }
    };
    Ok(decode_outputs(instance, &out))
}

fn cmd_run(n: usize, dividend: u64, divisor: u64, level: Level) -> Result<i32, Error> {
    let (expected_q, expected_r) = refmodel::restoring_divide(dividend, divisor, n)?;
    let instance = build_divider(n)?;
    let (quotient, remainder, divisor_out) =
        simulate_division(&instance, level, dividend, divisor)?;
    let outcome = RunOutcome {
        quotient,
        remainder,
        divisor_preserved: divisor_out == divisor,
        oracle_agrees: (quotient, remainder) == (expected_q, expected_r),
    };
    println!("{}", json(&outcome));
    Ok(if outcome.divisor_preserved && outcome.oracle_agrees {
        0
    } else {
        EXIT_INTERNAL
    })
}

fn cmd_resources(n: usize, level: Level) -> Result<i32, Error> {
    let instance = build_divider(n)?;
    let circuit = lower(instance.circuit(), level)?;
    let report = count_with_prediction(
        &circuit,
        instance.ancilla_count(),
        n,
        predicted_divider_tcount(n)?,
    );
    let comparison = comparison_report(n)?;
    let matches = report.matches_prediction;
    println!("{}", json(&ResourcesOutput { report, comparison }));
    Ok(if matches { 0 } else { EXIT_INTERNAL })
}

fn cmd_verify(n: usize, exhaustive: bool, random: Option<u64>, seed: u64) -> Result<i32, Error> {
    if exhaustive && n > EXHAUSTIVE_MAX_N {
        eprintln!(
            "error: exhaustive verification is limited to n <= {EXHAUSTIVE_MAX_N}; \
             use --random SAMPLES for n = {n}"
        );
        return Ok(EXIT_USAGE);
    }
    let instance = build_divider(n)?;
    let pairs: Box<dyn Iterator<Item = (u64, u64)>> = if exhaustive {
        let domain = refmodel::divisor_domain(n);
        Box::new(
            domain.flat_map(move |divisor| (0..1u64 << n).map(move |dividend| (dividend, divisor))),
        )
    } else {
        let samples = random.expect("clap enforces the mode group");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max_divisor = 1u64 << (n - 1);
        Box::new(
            (0..samples)
                .map(move |_| (rng.gen_range(0..1u64 << n), rng.gen_range(1..=max_divisor))),
        )
    };

    let mut passed = 0u64;
    let mut failed = 0u64;
    let mut counterexample = None;
    for (dividend, divisor) in pairs {
        let (expected_q, expected_r) = refmodel::restoring_divide(dividend, divisor, n)?;
        let input = division_input(&instance, dividend, divisor);
        let out = run_basis(instance.circuit(), &input)?;
        let (quotient, remainder, divisor_out) = decode_outputs(&instance, &out);
        let divisor_preserved = divisor_out == divisor;
        if (quotient, remainder) == (expected_q, expected_r) && divisor_preserved {
            passed += 1;
        } else {
            failed += 1;
            counterexample.get_or_insert(Counterexample {
                dividend,
                divisor,
                expected_quotient: expected_q,
                expected_remainder: expected_r,
                got_quotient: quotient,
                got_remainder: remainder,
                divisor_preserved,
            });
        }
    }
    let report = VerifyReport {
        n,
        mode: if exhaustive { "exhaustive" } else { "random" },
        seed: if exhaustive { None } else { Some(seed) },
        samples: passed + failed,
        passed,
        failed,
        counterexample,
    };
    println!("{}", json(&report));
    Ok(if failed == 0 { 0 } else { EXIT_INTERNAL })
}
