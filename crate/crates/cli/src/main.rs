use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nctop::commands::{self, CheckCmd, MonoidCmd, Params};
use nctop::files::{load_quiver, load_rep};
use nctop::{CliError, Report};
use nctop_core::opens::Flavor;
use nctop_core::Prime;

#[derive(Parser)]
#[command(
    name = "nctop",
    version,
    about = "Non-commutative topologies on quiver representations"
)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Upper bound on brute-force group and search sizes.
    #[arg(long, global = true, env = "NCTOP_BUDGET", default_value_t = nctop::DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Scale {
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Universe bound on total dimension.
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    /// Longest sampled word.
    #[arg(long, default_value_t = 2)]
    max_word_len: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    L,
    R,
    O,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::L => Flavor::Left,
            FlavorArg::R => Flavor::Right,
            FlavorArg::O => Flavor::Scattered,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// All Jordan-Hölder factor sequences of a representation, bottom to top.
    Jh { quiver: String, rep: String },
    /// Does the representation lie in the basic open of a word such as "l {S2}{S1}"?
    Member {
        quiver: String,
        rep: String,
        word: String,
    },
    /// Check the axiom table for one flavor over a finite universe.
    Axioms {
        quiver: String,
        #[arg(value_enum)]
        flavor: FlavorArg,
        #[command(flatten)]
        scale: Scale,
    },
    /// Composition monoid queries. Words look like R2R1.
    Monoid {
        quiver: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[command(subcommand)]
        sub: MonoidSub,
    },
    /// Cross-checks between basic opens, the monoid and the commutative case.
    Check {
        quiver: String,
        #[command(flatten)]
        scale: Scale,
        #[command(subcommand)]
        sub: CheckSub,
    },
    /// DOT graph of the strict order between short words.
    Dot {
        quiver: String,
        #[arg(value_enum)]
        flavor: FlavorArg,
        #[command(flatten)]
        scale: Scale,
    },
}

#[derive(Subcommand)]
enum MonoidSub {
    Relations,
    Eq {
        a: String,
        b: String,
    },
    /// Can WORD be rewritten to start (l) or end (r) with PREFIX?
    Prefix {
        word: String,
        prefix: String,
        #[arg(long, value_enum, default_value = "l")]
        side: FlavorArg,
    },
    /// Compare the point sets of both sides of every relation.
    Semcheck,
    /// Iso classes with a filtration of the given factor sequence.
    Points {
        word: String,
    },
}

#[derive(Subcommand)]
enum CheckSub {
    /// Membership against prefix rewriting, over the whole universe.
    Prefix {
        word: String,
    },
    /// Equivalence of two words in the monoid against ≈ on the universe.
    MonoidEquiv {
        a: String,
        b: String,
        #[arg(long, default_value_t = 4)]
        star_bound: usize,
    },
    /// UV ≈ VU for all letters and idempotency of basic opens.
    Commute,
    Equiv {
        a: String,
        b: String,
    },
    Leq {
        a: String,
        b: String,
    },
}

enum Output {
    Report(Report),
    Raw(String),
}

fn params(s: Scale, budget: u64) -> Result<Params, CliError> {
    Ok(Params {
        p: Prime::new(s.p)?,
        max_dim: s.max_dim,
        max_word_len: s.max_word_len,
        budget,
    })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let budget = cli.budget;
    let report = match cli.cmd {
        Cmd::Jh { quiver, rep } => {
            let q = load_quiver(&quiver)?;
            commands::cmd_jh(&load_rep(&q, &rep)?, budget)?
        }
        Cmd::Member { quiver, rep, word } => {
            let q = load_quiver(&quiver)?;
            commands::cmd_member(&load_rep(&q, &rep)?, &word, budget)?
        }
        Cmd::Axioms {
            quiver,
            flavor,
            scale,
        } => commands::cmd_axioms(
            &load_quiver(&quiver)?,
            flavor.into(),
            &params(scale, budget)?,
        )?,
        Cmd::Monoid { quiver, p, sub } => {
            let sub = match sub {
                MonoidSub::Relations => MonoidCmd::Relations,
                MonoidSub::Eq { a, b } => MonoidCmd::Eq(a, b),
                MonoidSub::Prefix { word, prefix, side } => MonoidCmd::Prefix {
                    word,
                    prefix,
                    side: side.into(),
                },
                MonoidSub::Semcheck => MonoidCmd::Semcheck,
                MonoidSub::Points { word } => MonoidCmd::Points(word),
            };
            let mut ps = Params::new(Prime::new(p)?);
            ps.budget = budget;
            commands::cmd_monoid(&load_quiver(&quiver)?, &sub, &ps)?
        }
        Cmd::Check { quiver, scale, sub } => {
            let sub = match sub {
                CheckSub::Prefix { word } => CheckCmd::Prefix(word),
                CheckSub::MonoidEquiv { a, b, star_bound } => CheckCmd::MonoidEquiv {
                    a,
                    b,
                    star_len_bound: star_bound,
                },
                CheckSub::Commute => CheckCmd::Commute,
                CheckSub::Equiv { a, b } => CheckCmd::Equiv(a, b),
                CheckSub::Leq { a, b } => CheckCmd::Leq(a, b),
            };
            commands::cmd_check(&load_quiver(&quiver)?, &sub, &params(scale, budget)?)?
        }
        Cmd::Dot {
            quiver,
            flavor,
            scale,
        } => {
            return Ok(Output::Raw(commands::cmd_dot(
                &load_quiver(&quiver)?,
                flavor.into(),
                &params(scale, budget)?,
            )?))
        }
    };
    Ok(Output::Report(report))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                CliError::EXIT_CODE as u8
            } else {
                0
            });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(Output::Raw(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.render());
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::EXIT_CODE as u8)
        }
    }
}
