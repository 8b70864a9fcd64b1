//! Law of total probability and Bayes' theorem.
//!
//! Both are stated over a fundamental system of events (FSE): a finite
//! partition of the sample space. Total probability is an exact identity in
//! every regime. Bayes' theorem splits on the classification of `P(A)`:
//! with an invertible `P(A)` the posterior is the familiar ratio, while in
//! the zero-divisor branches the theorem only pins the identity obtained by
//! projecting onto the surviving ideal. Each branch therefore reports a
//! residual that must vanish exactly.

use crate::conditional::{CondCase, InferenceError};
use crate::hnum::HNum;
use crate::space::{Event, ProbSpace};

/// A fundamental (complete) system of events: pairwise disjoint parts whose
/// union is the whole sample space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fse {
    parts: Vec<Event>,
}

impl Fse {
    pub fn new(parts: Vec<Event>) -> Self {
        Fse { parts }
    }

    pub fn parts(&self) -> &[Event] {
        &self.parts
    }
}

/// Posterior for one hypothesis, the branch taken, and the residual of the
/// branch identity (always exactly zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BayesResult {
    pub posterior: HNum,
    pub branch: CondCase,
    pub residual: HNum,
}

impl ProbSpace {
    /// Checks that the parts are pairwise disjoint and cover the space.
    pub fn validate_fse(&self, fse: &Fse) -> Result<(), InferenceError> {
        let mut union = 0u128;
        for part in fse.parts() {
            let mask = self.mask_of(part)?;
            if union & mask != 0 {
                return Err(InferenceError::InvalidFse("parts are not pairwise disjoint"));
            }
            union |= mask;
        }
        let full = if self.atom_count() == 128 {
            u128::MAX
        } else {
            (1u128 << self.atom_count()) - 1
        };
        if union != full {
            return Err(InferenceError::InvalidFse("parts do not cover the sample space"));
        }
        Ok(())
    }

    /// Law of total probability: `sum_i P(H_i) * P(A | H_i)`.
    ///
    /// Equals `P(A)` exactly, including when parts carry zero-divisor or
    /// zero measures.
    pub fn total_probability(&self, a: &Event, fse: &Fse) -> Result<HNum, InferenceError> {
        self.validate_fse(fse)?;
        let mut total = HNum::zero();
        for part in fse.parts() {
            let prior = self.measure(part)?;
            let (likelihood, _) = self.cond(a, part)?;
            total = total + prior * likelihood;
        }
        Ok(total)
    }

    /// Bayes' theorem for one hypothesis of the system.
    ///
    /// The posterior is `P(H_k | A)` computed from the conditional
    /// definition. The residual is the branch identity:
    ///
    /// - invertible `P(A)`: `posterior * sum_i P(H_i) P(A|H_i) - P(H_k) P(A|H_k)`;
    /// - `P(A) = l*e`: the bracketed difference multiplied by `e`;
    /// - `P(A) = l*e+`: the bracketed difference multiplied by `e+`;
    /// - `P(A) = 0`: the posterior falls back to `P(H_k)` (vacuous
    ///   conditioning) and the residual is zero by convention.
    pub fn bayes(
        &self,
        hypothesis: &Event,
        a: &Event,
        fse: &Fse,
    ) -> Result<BayesResult, InferenceError> {
        self.validate_fse(fse)?;
        if !fse.parts().iter().any(|p| p == hypothesis) {
            return Err(InferenceError::HypothesisNotInFse);
        }

        let (posterior, branch) = self.cond(hypothesis, a)?;
        let evidence = {
            let mut total = HNum::zero();
            for part in fse.parts() {
                let prior = self.measure(part)?;
                let (likelihood, _) = self.cond(a, part)?;
                total = total + prior * likelihood;
            }
            total
        };
        let prior = self.measure(hypothesis)?;
        let (likelihood, _) = self.cond(a, hypothesis)?;
        let weighted = prior * likelihood;

        let residual = match &branch {
            CondCase::Invertible => &posterior * &evidence - &weighted,
            CondCase::ZdE(_) => (weighted - &posterior * &evidence) * HNum::e(),
            CondCase::ZdEdag(_) => (weighted - &posterior * &evidence) * HNum::edag(),
            CondCase::ZeroMeasure => HNum::zero(),
        };

        Ok(BayesResult {
            posterior,
            branch,
            residual,
        })
    }
}
