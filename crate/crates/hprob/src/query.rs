//! Query layer shared by the command-line tool: resolves event arguments,
//! dispatches to the measure and inference operations, and renders results
//! deterministically in text or JSON.

use crate::bayes::Fse;
use crate::conditional::{CondCase, InferenceError};
use crate::hnum::{HNum, ZdClass};
use crate::space::{Event, ProbSpace, SpaceError};
use crate::verify::VerifyError;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("cannot resolve event {spec:?}: {detail}")]
    UnknownEvent { spec: String, detail: String },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Inference(#[from] InferenceError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// One query against a loaded space. Event fields hold raw argument strings;
/// see [`resolve_event`] for how they are interpreted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryCommand {
    Validate,
    Prob { event: String },
    Cond { event: String, given: String },
    Mult { a: String, b: String },
    Chain { events: Vec<String> },
    Indep { a: String, b: String },
    Joint { events: Vec<String> },
    Total { event: String, parts: Vec<String> },
    Bayes { hypothesis: String, event: String, parts: Vec<String> },
}

/// A hyperbolic number rendered in both canonical textual forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rendering {
    pub idempotent: String,
    pub cartesian: String,
}

impl From<&HNum> for Rendering {
    fn from(value: &HNum) -> Self {
        Rendering {
            idempotent: value.idempotent_string(),
            cartesian: value.cartesian_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub value: Option<Rendering>,
    pub case_tags: Vec<String>,
    pub residuals: Vec<Rendering>,
}

impl QueryResult {
    fn new(value: &HNum) -> Self {
        QueryResult {
            value: Some(value.into()),
            case_tags: Vec::new(),
            residuals: Vec::new(),
        }
    }

    fn tag(mut self, tag: impl Into<String>) -> Self {
        self.case_tags.push(tag.into());
        self
    }

    fn residual(mut self, value: &HNum) -> Self {
        self.residuals.push(value.into());
        self
    }

    /// Deterministic human-readable rendering: the dual value line first,
    /// then one line per case tag and residual.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(v) = &self.value {
            writeln!(out, "{} = {}", v.idempotent, v.cartesian).unwrap();
        }
        for tag in &self.case_tags {
            writeln!(out, "case: {tag}").unwrap();
        }
        for r in &self.residuals {
            writeln!(out, "residual: {} = {}", r.idempotent, r.cartesian).unwrap();
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("query result serializes");
        out.push('\n');
        out
    }
}

/// Resolves an event argument: first as a registered event name, otherwise
/// as an inline comma-separated list of atom ids.
pub fn resolve_event(space: &ProbSpace, spec: &str) -> Result<Event, QueryError> {
    if let Some(event) = space.named_event(spec) {
        return Ok(event.clone());
    }
    let event = Event::new(spec.split(',').map(str::to_string));
    if let Err(err) = space.measure(&event) {
        return Err(QueryError::UnknownEvent {
            spec: spec.to_string(),
            detail: err.to_string(),
        });
    }
    Ok(event)
}

fn resolve_events(space: &ProbSpace, specs: &[String]) -> Result<Vec<Event>, QueryError> {
    specs.iter().map(|s| resolve_event(space, s)).collect()
}

fn mult_case_tag(class: ZdClass) -> &'static str {
    match class {
        ZdClass::Invertible => "mult-case-a",
        ZdClass::Zero => "mult-case-b",
        ZdClass::ZdE => "mult-case-c",
        ZdClass::ZdEdag => "mult-case-d",
    }
}

fn bayes_tag(case: &CondCase) -> &'static str {
    match case {
        CondCase::Invertible => "bayes-invertible",
        CondCase::ZeroMeasure => "bayes-zero-measure",
        CondCase::ZdE(_) => "bayes-zde",
        CondCase::ZdEdag(_) => "bayes-zdedag",
    }
}

pub fn run_query(space: &ProbSpace, command: &QueryCommand) -> Result<QueryResult, QueryError> {
    match command {
        QueryCommand::Validate => {
            let mass = space.regime().mass();
            Ok(QueryResult::new(&mass)
                .tag("valid")
                .tag(format!("regime-{}", space.regime())))
        }
        QueryCommand::Prob { event } => {
            let event = resolve_event(space, event)?;
            Ok(QueryResult::new(&space.measure(&event)?))
        }
        QueryCommand::Cond { event, given } => {
            let a = resolve_event(space, event)?;
            let b = resolve_event(space, given)?;
            let (value, case) = space.cond(&a, &b)?;
            Ok(QueryResult::new(&value).tag(case.tag()))
        }
        QueryCommand::Mult { a, b } => {
            let a = resolve_event(space, a)?;
            let b = resolve_event(space, b)?;
            let (lhs, rhs) = space.mult_theorem(&a, &b)?;
            let case = mult_case_tag(space.measure(&b)?.classify());
            Ok(QueryResult::new(&lhs).tag(case).residual(&(lhs.clone() - rhs)))
        }
        QueryCommand::Chain { events } => {
            let events = resolve_events(space, events)?;
            let (lhs, rhs, condition) = space.chain_mult(&events)?;
            Ok(QueryResult::new(&lhs)
                .tag(condition.tag())
                .residual(&(lhs.clone() - rhs)))
        }
        QueryCommand::Indep { a, b } => {
            let ea = resolve_event(space, a)?;
            let eb = resolve_event(space, b)?;
            let report = space.independence(&ea, &eb)?;
            let pab = space.measure(&ea.intersection(&eb))?;
            let product = space.measure(&ea)? * space.measure(&eb)?;
            Ok(QueryResult::new(&pab)
                .tag(report.case.tag())
                .tag(if report.mutual() { "independent" } else { "dependent" })
                .tag(if report.product_holds {
                    "product-holds"
                } else {
                    "product-violated"
                })
                .residual(&(pab.clone() - product)))
        }
        QueryCommand::Joint { events } => {
            let events = resolve_events(space, events)?;
            let (jointly, pairwise) = space.joint_independence(&events)?;
            let intersection = events
                .iter()
                .skip(1)
                .fold(events[0].clone(), |acc, e| acc.intersection(e));
            Ok(QueryResult::new(&space.measure(&intersection)?)
                .tag(if jointly {
                    "jointly-independent"
                } else {
                    "not-jointly-independent"
                })
                .tag(if pairwise {
                    "pairwise-independent"
                } else {
                    "not-pairwise-independent"
                }))
        }
        QueryCommand::Total { event, parts } => {
            let a = resolve_event(space, event)?;
            let fse = Fse::new(resolve_events(space, parts)?);
            let total = space.total_probability(&a, &fse)?;
            let direct = space.measure(&a)?;
            Ok(QueryResult::new(&total).residual(&(total.clone() - direct)))
        }
        QueryCommand::Bayes {
            hypothesis,
            event,
            parts,
        } => {
            let h = resolve_event(space, hypothesis)?;
            let a = resolve_event(space, event)?;
            let fse = Fse::new(resolve_events(space, parts)?);
            let result = space.bayes(&h, &a, &fse)?;
            Ok(QueryResult::new(&result.posterior)
                .tag(bayes_tag(&result.branch))
                .residual(&result.residual))
        }
    }
}
