use std::process::ExitCode;

use atomic_leibniz::frobenius::DualBasisMethod;
use atomic_leibniz::leibniz::Direction;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod report;
mod selftest;

use atomic_leibniz::{BigInt, BigRational, Coeff};
use config::{ConfigError, CoxeterType, Format, Ring, RunConfig};
use report::Check;
use report::Report;

/// Demazure operators, parabolic double cosets and atomic Leibniz rules with exact arithmetic.
#[derive(Parser)]
#[command(name = "atomic-leibniz", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// `perm`, `root`, `affine`, or a path to a JSON realization config
    #[arg(long, global = true, default_value = "perm")]
    realization: String,
    /// Coxeter type of the built-in realization
    #[arg(long = "type", global = true, value_enum, ignore_case = true, default_value = "a")]
    coxeter_type: CoxeterType,
    /// Strands for type A (S_n), rank for B/C/D, m for the dihedral type I
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Degree bound for enumerated inputs
    #[arg(long, global = true, default_value_t = 8)]
    degmax: u32,
    /// Bound on enumerated group and coset sizes
    #[arg(long, global = true, default_value_t = 10080)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Coefficient ring of the realization
    #[arg(long, global = true, value_enum, default_value = "z")]
    ring: Ring,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Right,
    Left,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Generic,
    Grassmannian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Feasible,
    Infeasible,
}

#[derive(Subcommand)]
enum Command {
    /// List the (I,J)-double cosets inside W_M
    Cosets {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "M")]
        m: Option<String>,
    },
    /// Build Frobenius dual bases of R^J over R^M and check them
    Dualbases {
        #[arg(long = "M")]
        m: Option<String>,
        #[arg(long = "J")]
        j: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Solve for the lower-term operators of the atom [[M∖s ⊂ M ⊃ M∖t]]
    SolveT {
        #[arg(long = "M")]
        m: Option<String>,
        #[arg(long)]
        s: String,
        /// Inputs in R^J; defaults to the invariant basis up to --degmax
        #[arg(long = "f")]
        f: Vec<String>,
        #[arg(long, value_enum, default_value = "both")]
        direction: DirectionArg,
    },
    /// Polynomial forcing through double leaves, compared with the rightward rule
    Forcing {
        #[arg(long = "M")]
        m: Option<String>,
        #[arg(long)]
        s: String,
        #[arg(long = "f")]
        f: Vec<String>,
    },
    /// Test whether a coset admits a Leibniz rule with unconstrained lower terms
    ProbeNaive {
        #[arg(long = "I")]
        i: String,
        #[arg(long = "J")]
        j: String,
        /// Any element of the coset, as a word
        #[arg(long)]
        min: String,
        #[arg(long = "M")]
        m: Option<String>,
        #[arg(long = "f")]
        f: Vec<String>,
        /// Fail unless the outcome matches
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Check the complete-symmetric closed form for S_a × S_b ⊂ S_(a+b)
    ClosedForm {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 5)]
        imax: u32,
    },
    /// Iterated twisted Leibniz expansion of ∂_w(fg)
    Iterated {
        #[arg(long)]
        word: String,
        #[arg(long)]
        f: String,
        /// Test polynomials; defaults to five seeded random ones
        #[arg(long = "g")]
        g: Vec<String>,
    },
    /// Built-in regression suites in S_4
    Selftest {
        #[arg(long, value_enum, default_value = "all")]
        suite: selftest::Suite,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Cosets { .. } => "cosets",
            Command::Dualbases { .. } => "dualbases",
            Command::SolveT { .. } => "solve-t",
            Command::Forcing { .. } => "forcing",
            Command::ProbeNaive { .. } => "probe-naive",
            Command::ClosedForm { .. } => "closed-form",
            Command::Iterated { .. } => "iterated",
            Command::Selftest { .. } => "selftest",
        }
    }
}

fn run(cfg: &RunConfig, command: &Command) -> anyhow::Result<Report> {
    cfg.validate()?;
    let checks = match (command, cfg.ring) {
        (Command::Selftest { suite }, _) => selftest::run(cfg, *suite)?,
        (_, Ring::Z) => dispatch::<BigInt>(cfg, command)?,
        (_, Ring::Q) => dispatch::<BigRational>(cfg, command)?,
    };
    let label = match command {
        Command::ClosedForm { a, b, .. } => format!("permutation({})", a + b),
        Command::Selftest { .. } => "permutation(4)".into(),
        _ => cfg.label(),
    };
    Ok(Report::new(command.name(), label, cfg.degmax, cfg.cap, cfg.seed, checks))
}

fn dispatch<C: Coeff>(cfg: &RunConfig, command: &Command) -> anyhow::Result<Vec<Check>> {
    Ok(match command {
        Command::Cosets { i, j, m } => commands::cosets::<C>(cfg, i, j, m.as_deref())?,
        Command::Dualbases { m, j, method } => {
            let method = match method {
                MethodArg::Auto => DualBasisMethod::Auto,
                MethodArg::Generic => DualBasisMethod::Generic,
                MethodArg::Grassmannian => DualBasisMethod::Grassmannian,
            };
            commands::dualbases::<C>(cfg, m.as_deref(), j, method)?
        }
        Command::SolveT { m, s, f, direction } => {
            let dirs: &[Direction] = match direction {
                DirectionArg::Right => &[Direction::Rightward],
                DirectionArg::Left => &[Direction::Leftward],
                DirectionArg::Both => &[Direction::Rightward, Direction::Leftward],
            };
            commands::solve_t::<C>(cfg, m.as_deref(), s, f, dirs)?
        }
        Command::Forcing { m, s, f } => commands::forcing::<C>(cfg, m.as_deref(), s, f)?,
        Command::ProbeNaive { i, j, min, m, f, expect } => {
            let args = commands::ProbeArgs {
                i,
                j,
                min,
                m: m.as_deref(),
                fs: f,
                expect: expect.map(|e| matches!(e, Expect::Feasible)),
            };
            commands::probe_naive::<C>(cfg, &args)?
        }
        Command::ClosedForm { a, b, imax } => commands::closed_form::<C>(cfg, *a, *b, *imax)?,
        Command::Iterated { word, f, g } => commands::iterated::<C>(cfg, word, f, g)?,
        Command::Selftest { suite } => selftest::run(cfg, *suite)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let cfg = RunConfig {
        realization: g.realization,
        coxeter_type: g.coxeter_type,
        n: g.n,
        degmax: g.degmax,
        cap: g.cap,
        format: g.format,
        ring: g.ring,
        seed: g.seed,
    };
    match run(&cfg, &cli.command) {
        Ok(report) => {
            match cfg.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.downcast_ref::<ConfigError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
