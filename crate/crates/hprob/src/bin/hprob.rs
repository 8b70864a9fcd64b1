//! Command-line front end: loads a space file, runs one query, prints the
//! result, and exits with a category-specific status code.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 query error,
//! 5 verification failure.

use clap::{Args, Parser, Subcommand};
use hprob::{
    load, run_query, verify, LoadError, ProbSpace, QueryCommand, QueryError, VerifyError,
    DEFAULT_VERIFY_CAP,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "hprob", version, about = "Exact hyperbolic-valued probability queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Path to the space file (JSON)
    #[arg(long)]
    space: PathBuf,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Load a space file and check the measure axioms
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Probability of an event
    Prob {
        #[command(flatten)]
        common: Common,
        /// Event name or inline atom list ("1,2")
        #[arg(long)]
        event: String,
    },
    /// Conditional probability of an event given another
    Cond {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        event: String,
        #[arg(long)]
        given: String,
    },
    /// Multiplication theorem: P(A & B) against P(B) * P(A | B)
    Mult {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Generalized multiplication theorem over an ordered chain of events
    Chain {
        #[command(flatten)]
        common: Common,
        /// Repeat --event for each chain element, in order
        #[arg(long = "event", required = true)]
        events: Vec<String>,
    },
    /// Mutual independence of two events
    Indep {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Joint versus pairwise independence of a family of events
    Joint {
        #[command(flatten)]
        common: Common,
        /// Repeat --event for each family member
        #[arg(long = "event", required = true)]
        events: Vec<String>,
    },
    /// Law of total probability over a fundamental system of events
    Total {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        event: String,
        /// Repeat --part for each part of the system
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
    /// Bayes' theorem for one hypothesis of a fundamental system
    Bayes {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        hypothesis: String,
        #[arg(long)]
        event: String,
        /// Repeat --part for each part of the system
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
    /// Re-verify every axiom, property, and theorem on the loaded space
    Verify {
        #[command(flatten)]
        common: Common,
        /// Maximum atom count accepted by the verifier
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: usize,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 2;
const EXIT_VALIDATION: i32 = 3;
const EXIT_QUERY: i32 = 4;
const EXIT_VERIFICATION: i32 = 5;

fn fail(category: &str, message: impl std::fmt::Display, code: i32) -> i32 {
    eprintln!("error[{category}]: {message}");
    code
}

fn load_space(path: &PathBuf) -> Result<ProbSpace, i32> {
    load(path).map_err(|err| match err {
        LoadError::Parse(_) => fail("parse-error", &err, EXIT_PARSE),
        LoadError::Validation(_) | LoadError::UnknownAtomInEvent { .. } => {
            fail("validation-error", &err, EXIT_VALIDATION)
        }
    })
}

fn run(cli: Cli) -> i32 {
    let (common, action): (&Common, Option<QueryCommand>) = match &cli.command {
        Command::Validate { common } => (common, Some(QueryCommand::Validate)),
        Command::Prob { common, event } => (
            common,
            Some(QueryCommand::Prob {
                event: event.clone(),
            }),
        ),
        Command::Cond {
            common,
            event,
            given,
        } => (
            common,
            Some(QueryCommand::Cond {
                event: event.clone(),
                given: given.clone(),
            }),
        ),
        Command::Mult { common, a, b } => (
            common,
            Some(QueryCommand::Mult {
                a: a.clone(),
                b: b.clone(),
            }),
        ),
        Command::Chain { common, events } => (
            common,
            Some(QueryCommand::Chain {
                events: events.clone(),
            }),
        ),
        Command::Indep { common, a, b } => (
            common,
            Some(QueryCommand::Indep {
                a: a.clone(),
                b: b.clone(),
            }),
        ),
        Command::Joint { common, events } => (
            common,
            Some(QueryCommand::Joint {
                events: events.clone(),
            }),
        ),
        Command::Total {
            common,
            event,
            parts,
        } => (
            common,
            Some(QueryCommand::Total {
                event: event.clone(),
                parts: parts.clone(),
            }),
        ),
        Command::Bayes {
            common,
            hypothesis,
            event,
            parts,
        } => (
            common,
            Some(QueryCommand::Bayes {
                hypothesis: hypothesis.clone(),
                event: event.clone(),
                parts: parts.clone(),
            }),
        ),
        Command::Verify { common, .. } => (common, None),
    };

    let space = match load_space(&common.space) {
        Ok(space) => space,
        Err(code) => return code,
    };

    match (&cli.command, action) {
        (Command::Verify { cap, .. }, _) => match verify(&space, *cap) {
            Ok(report) => {
                if common.json {
                    let mut json =
                        serde_json::to_string(&report).expect("report serializes");
                    json.push('\n');
                    print!("{json}");
                } else {
                    print!("{}", report.render());
                }
                if report.all_passed {
                    EXIT_OK
                } else {
                    fail(
                        "verification-failure",
                        format!("{} laws violated", report.failure_count()),
                        EXIT_VERIFICATION,
                    )
                }
            }
            Err(err @ VerifyError::CapExceeded { .. }) => {
                fail("query-error", err, EXIT_QUERY)
            }
        },
        (_, Some(command)) => match run_query(&space, &command) {
            Ok(result) => {
                if common.json {
                    print!("{}", result.render_json());
                } else {
                    print!("{}", result.render_text());
                }
                EXIT_OK
            }
            Err(err @ QueryError::UnknownEvent { .. })
            | Err(err @ QueryError::Space(_))
            | Err(err @ QueryError::Inference(_))
            | Err(err @ QueryError::Verify(_)) => fail("query-error", err, EXIT_QUERY),
        },
        (_, None) => unreachable!("every non-verify command maps to a query"),
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
