//! Exact probability measures with values in the ring of hyperbolic
//! (split-complex) numbers.
//!
//! A hyperbolic number is `a + b*j` with `j*j = 1`. The ring splits along
//! the idempotents `e = (1+j)/2` and `e+ = (1-j)/2`, which makes arithmetic
//! componentwise but also introduces zero-divisors, and only a partial
//! order. This crate builds finite measure spaces whose event probabilities
//! live in that ring: a measure is nonnegative (componentwise), countably
//! additive (finitely, on a finite space), and has total mass `1`, `e`, or
//! `e+`. The zero-divisor values force a four-way case analysis in
//! conditional probability, and the classical theorems (multiplication,
//! independence, total probability, Bayes) survive in adapted forms that
//! this crate states and machine-verifies exactly.
//!
//! All scalars are arbitrary-precision rationals; there is no floating
//! point and no tolerance anywhere. Every case split is driven by the exact
//! zero-divisor classification of a measure value.
//!
//! ## Layout
//!
//! - [`HNum`]: ring arithmetic, conjugation, classification ([`ZdClass`]),
//!   the partial order ([`OrderRel`]), modulus, suprema.
//! - [`ProbSpace`] / [`Event`] / [`Regime`]: validated finite spaces and
//!   the measure-theoretic property suite.
//! - conditional probability ([`CondCase`]), multiplication theorems
//!   ([`ChainCondition`]), independence ([`IndepReport`]), fundamental
//!   systems ([`Fse`]), total probability, and Bayes ([`BayesResult`]).
//! - a JSON space-file format ([`SpaceFile`]) with canonical byte-stable
//!   serialization, a query layer ([`QueryCommand`]), and a law-by-law
//!   verifier ([`verify`]) behind the `hprob` command-line tool.
//!
//! The `examples/` directory walks through each capability; start with
//! `hyperbolic_arithmetic` and `build_spaces`.
//!
//! ```
//! use hprob::{rat, Event, HNum, ProbSpace, Regime};
//!
//! let space = ProbSpace::build(
//!     (1..=4).map(|i| (i.to_string(), HNum::from_real(rat(1, 4)))),
//!     Regime::Unit,
//! )
//! .unwrap();
//! let a = Event::new(["1", "2"]);
//! assert_eq!(space.measure(&a).unwrap(), HNum::from_real(rat(1, 2)));
//! ```

// Error variants carry the exact offending values (whole hyperbolic
// numbers), which the validation contract surfaces to callers; those
// variants outgrow clippy's default Result size budget.
#![allow(clippy::result_large_err, clippy::large_enum_variant)]

mod bayes;
mod conditional;
mod hnum;
mod independence;
mod io;
mod query;
mod rational;
mod space;
mod verify;

pub use bayes::{BayesResult, Fse};
pub use conditional::{ChainCondition, CondCase, InferenceError};
pub use hnum::{sup_d, HNum, HNumError, OrderRel, ParseHNumError, ZdClass};
pub use independence::{IndepCase, IndepReport};
pub use io::{
    canonical_json, from_json, load, save, space_from_file, to_space_file, AtomRecord, LoadError,
    SpaceFile,
};
pub use query::{resolve_event, run_query, QueryCommand, QueryError, QueryResult, Rendering};
pub use rational::{format_rational, parse_rational, rat, rat_int, ParseRationalError, Rational};
pub use space::{Event, ProbSpace, Regime, SpaceError};
pub use verify::{verify, LawCheck, VerifyError, VerifyReport, DEFAULT_VERIFY_CAP};
