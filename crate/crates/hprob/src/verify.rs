//! Whole-space verification: replays the measure axioms, the basic property
//! suite, and the conditional-probability theorems against a loaded space
//! and reports one pass/fail line per law.
//!
//! Laws quantified over events are checked exhaustively on small spaces
//! (every event, every pair) and on deterministic fixed-seed samples above
//! that, so identical input always produces identical output. Everything is
//! exact; a single counterexample fails the law and is reported.

use crate::bayes::Fse;
use crate::conditional::CondCase;
use crate::hnum::{HNum, ZdClass};
use crate::space::{Event, ProbSpace, Regime};
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

pub const DEFAULT_VERIFY_CAP: usize = 12;

/// Spaces get exhaustive pair treatment up to this many atoms.
const EXHAUSTIVE_LIMIT: usize = 6;
const SAMPLED_PAIRS: usize = 1500;
const SAMPLED_CHAINS: usize = 120;
const SAMPLED_SYSTEMS: usize = 60;
const RNG_SEED: u64 = 0x4850_524f_4221;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("space has {atoms} atoms, which exceeds the verification cap {cap}")]
    CapExceeded { atoms: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub passed: bool,
    /// Counterexample description when the law failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerifyReport {
    pub checks: Vec<LawCheck>,
    pub all_passed: bool,
}

impl VerifyReport {
    fn new(checks: Vec<LawCheck>) -> Self {
        let all_passed = checks.iter().all(|c| c.passed);
        VerifyReport { checks, all_passed }
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// Deterministic text rendering: one line per law plus a result line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            match (&check.passed, &check.detail) {
                (true, _) => writeln!(out, "{}: pass", check.law).unwrap(),
                (false, Some(detail)) => {
                    writeln!(out, "{}: FAIL ({detail})", check.law).unwrap()
                }
                (false, None) => writeln!(out, "{}: FAIL", check.law).unwrap(),
            }
        }
        if self.all_passed {
            out.push_str("result: all-pass\n");
        } else {
            writeln!(out, "result: fail ({} laws violated)", self.failure_count()).unwrap();
        }
        out
    }
}

/// Runs the full law suite on a space with at most `cap` atoms.
pub fn verify(space: &ProbSpace, cap: usize) -> Result<VerifyReport, VerifyError> {
    let n = space.atom_count();
    if n > cap {
        return Err(VerifyError::CapExceeded { atoms: n, cap });
    }
    let harness = Harness::new(space);
    let checks = vec![
        harness.axiom_nonnegativity(),
        harness.axiom_total_mass(),
        harness.axiom_additivity(),
        harness.property_complement(),
        harness.property_empty(),
        harness.property_monotonicity(),
        harness.property_inclusion_exclusion(),
        harness.property_subadditivity(),
        harness.property_continuity(),
        harness.corollary_regime_form(),
        harness.multiplication_theorem(),
        harness.generalized_multiplication(),
        harness.conditional_measure_axioms(),
        harness.total_probability_law(),
        harness.bayes_residuals(),
    ];
    Ok(VerifyReport::new(checks))
}

struct Harness<'a> {
    space: &'a ProbSpace,
    atoms: Vec<String>,
    /// Measure of every event, indexed by atom bitmask.
    table: Vec<HNum>,
    full: u128,
}

impl<'a> Harness<'a> {
    fn new(space: &'a ProbSpace) -> Self {
        let atoms: Vec<String> = space.atoms().map(str::to_string).collect();
        let n = atoms.len();
        let size = 1usize << n;
        let mut table = Vec::with_capacity(size);
        table.push(HNum::zero());
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = &table[mask & (mask - 1)];
            let weight = space.weight(&atoms[low]).expect("atom is indexed");
            table.push(rest + weight);
        }
        Harness {
            space,
            atoms,
            table,
            full: (size - 1) as u128,
        }
    }

    fn n(&self) -> usize {
        self.atoms.len()
    }

    fn event_of(&self, mask: u128) -> Event {
        Event::new(
            self.atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| a.clone()),
        )
    }

    fn m(&self, mask: u128) -> &HNum {
        &self.table[mask as usize]
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(RNG_SEED ^ self.n() as u64)
    }

    fn random_mask(&self, rng: &mut ChaCha8Rng) -> u128 {
        rng.gen_range(0..=self.full)
    }

    fn exhaustive(&self) -> bool {
        self.n() <= EXHAUSTIVE_LIMIT
    }

    /// All (a, b) pairs on small spaces, a fixed-seed sample otherwise.
    fn pairs(&self) -> Vec<(u128, u128)> {
        if self.exhaustive() {
            let mut out = Vec::with_capacity(((self.full + 1) * (self.full + 1)) as usize);
            for a in 0..=self.full {
                for b in 0..=self.full {
                    out.push((a, b));
                }
            }
            out
        } else {
            let mut rng = self.rng();
            (0..SAMPLED_PAIRS)
                .map(|_| (self.random_mask(&mut rng), self.random_mask(&mut rng)))
                .collect()
        }
    }

    fn pass(law: &'static str) -> LawCheck {
        LawCheck {
            law,
            passed: true,
            detail: None,
        }
    }

    fn fail(law: &'static str, detail: String) -> LawCheck {
        LawCheck {
            law,
            passed: false,
            detail: Some(detail),
        }
    }

    fn axiom_nonnegativity(&self) -> LawCheck {
        const LAW: &str = "axiom-i-nonnegativity";
        for mask in 0..=self.full {
            if !self.m(mask).is_nonneg() {
                return Self::fail(
                    LAW,
                    format!("P({}) = {} has a negative component", self.event_of(mask), self.m(mask)),
                );
            }
        }
        Self::pass(LAW)
    }

    fn axiom_total_mass(&self) -> LawCheck {
        const LAW: &str = "axiom-ii-total-mass";
        let expected = self.space.regime().mass();
        let actual = self.m(self.full);
        if *actual == expected {
            Self::pass(LAW)
        } else {
            Self::fail(LAW, format!("P(omega) = {actual}, regime requires {expected}"))
        }
    }

    fn axiom_additivity(&self) -> LawCheck {
        const LAW: &str = "axiom-iii-additivity";
        // all disjoint pairs: b runs over submasks of the complement of a
        for a in 0..=self.full {
            let comp = self.full & !a;
            let mut b = comp;
            loop {
                if self.m(a | b) != &(self.m(a) + self.m(b)) {
                    return Self::fail(
                        LAW,
                        format!(
                            "P({} | {}) != P + P for disjoint events",
                            self.event_of(a),
                            self.event_of(b)
                        ),
                    );
                }
                if b == 0 {
                    break;
                }
                b = (b - 1) & comp;
            }
        }
        Self::pass(LAW)
    }

    fn property_complement(&self) -> LawCheck {
        const LAW: &str = "property-i-complement";
        let mass = self.space.regime().mass();
        for a in 0..=self.full {
            let sum = self.m(a) + self.m(self.full & !a);
            if sum != mass {
                return Self::fail(
                    LAW,
                    format!("P({}) + P(complement) = {sum} != {mass}", self.event_of(a)),
                );
            }
        }
        Self::pass(LAW)
    }

    fn property_empty(&self) -> LawCheck {
        const LAW: &str = "property-ii-empty-event";
        if self.m(0).is_zero() {
            Self::pass(LAW)
        } else {
            Self::fail(LAW, format!("P(empty) = {}", self.m(0)))
        }
    }

    fn property_monotonicity(&self) -> LawCheck {
        const LAW: &str = "property-iii-monotonicity";
        // a runs over submasks of b
        for b in 0..=self.full {
            let mut a = b;
            loop {
                if !self.m(a).compare(self.m(b)).is_less_or_equal() {
                    return Self::fail(
                        LAW,
                        format!(
                            "P({}) and P({}) violate the order for a nested pair",
                            self.event_of(a),
                            self.event_of(b)
                        ),
                    );
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        Self::pass(LAW)
    }

    fn property_inclusion_exclusion(&self) -> LawCheck {
        const LAW: &str = "property-iv-inclusion-exclusion";
        for (a, b) in self.pairs() {
            let ie = self.m(a) + self.m(b) - self.m(a & b);
            if &ie != self.m(a | b) {
                return Self::fail(
                    LAW,
                    format!(
                        "pair {} , {}: alternating sum {ie} != P(union) {}",
                        self.event_of(a),
                        self.event_of(b),
                        self.m(a | b)
                    ),
                );
            }
        }
        // triples, exhaustively only on very small spaces
        let triples: Vec<(u128, u128, u128)> = if self.n() <= 4 {
            let mut out = Vec::new();
            for a in 0..=self.full {
                for b in 0..=self.full {
                    for c in 0..=self.full {
                        out.push((a, b, c));
                    }
                }
            }
            out
        } else {
            let mut rng = self.rng();
            (0..SAMPLED_PAIRS)
                .map(|_| {
                    (
                        self.random_mask(&mut rng),
                        self.random_mask(&mut rng),
                        self.random_mask(&mut rng),
                    )
                })
                .collect()
        };
        for (a, b, c) in triples {
            let ie = self.m(a) + self.m(b) + self.m(c) - self.m(a & b) - self.m(a & c)
                - self.m(b & c)
                + self.m(a & b & c);
            if &ie != self.m(a | b | c) {
                return Self::fail(
                    LAW,
                    format!(
                        "triple {} , {} , {}: alternating sum differs from P(union)",
                        self.event_of(a),
                        self.event_of(b),
                        self.event_of(c)
                    ),
                );
            }
        }
        Self::pass(LAW)
    }

    fn property_subadditivity(&self) -> LawCheck {
        const LAW: &str = "property-v-subadditivity";
        for (a, b) in self.pairs() {
            let bound = self.m(a) + self.m(b);
            if !self.m(a | b).compare(&bound).is_less_or_equal() {
                return Self::fail(
                    LAW,
                    format!(
                        "P(union of {} and {}) is not below the sum of measures",
                        self.event_of(a),
                        self.event_of(b)
                    ),
                );
            }
        }
        Self::pass(LAW)
    }

    fn property_continuity(&self) -> LawCheck {
        const LAW: &str = "property-vi-continuity";
        let mut rng = self.rng();
        for _ in 0..SAMPLED_CHAINS {
            let mut mask = self.random_mask(&mut rng);
            let mut chain = vec![self.event_of(mask)];
            for _ in 0..3 {
                mask &= self.random_mask(&mut rng);
                chain.push(self.event_of(mask));
            }
            match self.space.continuity_limit(&chain) {
                Ok(limit) => {
                    // the chain stabilizes at its last event
                    if &limit != self.m(mask) {
                        return Self::fail(
                            LAW,
                            format!("chain ending in {}: limit {limit} differs", self.event_of(mask)),
                        );
                    }
                }
                Err(err) => return Self::fail(LAW, format!("chain rejected: {err}")),
            }
        }
        Self::pass(LAW)
    }

    fn corollary_regime_form(&self) -> LawCheck {
        const LAW: &str = "corollary-regime-form";
        let mass = self.space.regime().mass();
        for mask in 0..=self.full {
            let p = self.m(mask);
            if !p.compare(&mass).is_less_or_equal() {
                return Self::fail(
                    LAW,
                    format!("P({}) = {p} is not comparable with the total mass", self.event_of(mask)),
                );
            }
            let in_form = match self.space.regime() {
                Regime::Unit => true,
                Regime::E => {
                    matches!(p.classify(), ZdClass::Zero | ZdClass::ZdE)
                        && !p.e_part().is_negative()
                        && p.e_part() <= &crate::rational::Rational::one()
                }
                Regime::Edag => {
                    matches!(p.classify(), ZdClass::Zero | ZdClass::ZdEdag)
                        && !p.edag_part().is_negative()
                        && p.edag_part() <= &crate::rational::Rational::one()
                }
            };
            if !in_form {
                return Self::fail(
                    LAW,
                    format!(
                        "P({}) = {p} is not of the single-ideal form required by the regime",
                        self.event_of(mask)
                    ),
                );
            }
        }
        Self::pass(LAW)
    }

    fn multiplication_theorem(&self) -> LawCheck {
        const LAW: &str = "multiplication-theorem";
        for (a, b) in self.pairs() {
            let ea = self.event_of(a);
            let eb = self.event_of(b);
            match self.space.mult_theorem(&ea, &eb) {
                Ok((lhs, rhs)) => {
                    if lhs != rhs {
                        return Self::fail(
                            LAW,
                            format!("events {ea} , {eb}: P(A & B) = {lhs} but P(B)P(A|B) = {rhs}"),
                        );
                    }
                }
                Err(err) => return Self::fail(LAW, format!("events {ea} , {eb}: {err}")),
            }
        }
        Self::pass(LAW)
    }

    fn generalized_multiplication(&self) -> LawCheck {
        const LAW: &str = "generalized-multiplication";
        let mut rng = self.rng();
        for _ in 0..SAMPLED_CHAINS {
            let len = rng.gen_range(2..=5usize);
            let events: Vec<Event> = (0..len)
                .map(|_| self.event_of(self.random_mask(&mut rng)))
                .collect();
            match self.space.chain_mult(&events) {
                Ok((lhs, rhs, condition)) => {
                    if condition.applies() && lhs != rhs {
                        return Self::fail(
                            LAW,
                            format!(
                                "chain of {len} events under {}: {lhs} != {rhs}",
                                condition.tag()
                            ),
                        );
                    }
                }
                Err(err) => return Self::fail(LAW, format!("chain rejected: {err}")),
            }
        }
        Self::pass(LAW)
    }

    fn conditional_measure_axioms(&self) -> LawCheck {
        const LAW: &str = "conditional-measure-axioms";
        let mut rng = self.rng();
        let conditions: Vec<u128> = if self.exhaustive() {
            (0..=self.full).collect()
        } else {
            (0..SAMPLED_SYSTEMS).map(|_| self.random_mask(&mut rng)).collect()
        };
        for b_mask in conditions {
            let b = self.event_of(b_mask);
            let pb = self.m(b_mask);
            if pb.is_zero() {
                continue;
            }
            let (self_cond, case) = match self.space.cond(&b, &b) {
                Ok(v) => v,
                Err(err) => return Self::fail(LAW, format!("cond({b}, {b}): {err}")),
            };
            let expected = match case {
                CondCase::Invertible => HNum::one(),
                CondCase::ZdE(_) => HNum::e(),
                CondCase::ZdEdag(_) => HNum::edag(),
                CondCase::ZeroMeasure => unreachable!("zero measure filtered above"),
            };
            if self_cond != expected {
                return Self::fail(
                    LAW,
                    format!("P({b} | {b}) = {self_cond}, expected {expected}"),
                );
            }
            // nonnegativity and finite additivity of A -> P(A | B)
            for _ in 0..8 {
                let a1 = self.random_mask(&mut rng);
                let a2 = self.random_mask(&mut rng) & !a1;
                let e1 = self.event_of(a1);
                let e2 = self.event_of(a2);
                let union = self.event_of(a1 | a2);
                let c1 = self.space.cond(&e1, &b).expect("valid events").0;
                let c2 = self.space.cond(&e2, &b).expect("valid events").0;
                let cu = self.space.cond(&union, &b).expect("valid events").0;
                if !c1.is_nonneg() {
                    return Self::fail(LAW, format!("P({e1} | {b}) = {c1} is negative"));
                }
                if cu != &c1 + &c2 {
                    return Self::fail(
                        LAW,
                        format!("P({union} | {b}) != P({e1} | {b}) + P({e2} | {b})"),
                    );
                }
            }
        }
        Self::pass(LAW)
    }

    /// Random partition of the atoms into at most `parts` events.
    fn random_partition(&self, rng: &mut ChaCha8Rng, parts: usize) -> Vec<Event> {
        let mut masks = vec![0u128; parts];
        for i in 0..self.n() {
            masks[rng.gen_range(0..parts)] |= 1 << i;
        }
        masks.into_iter().map(|m| self.event_of(m)).collect()
    }

    fn total_probability_law(&self) -> LawCheck {
        const LAW: &str = "total-probability";
        let mut rng = self.rng();
        for _ in 0..SAMPLED_SYSTEMS {
            let parts = rng.gen_range(1..=self.n().min(4));
            let fse = Fse::new(self.random_partition(&mut rng, parts));
            let a_mask = self.random_mask(&mut rng);
            let a = self.event_of(a_mask);
            match self.space.total_probability(&a, &fse) {
                Ok(total) => {
                    if &total != self.m(a_mask) {
                        return Self::fail(
                            LAW,
                            format!("event {a}: total {total} != P(A) {}", self.m(a_mask)),
                        );
                    }
                }
                Err(err) => return Self::fail(LAW, format!("event {a}: {err}")),
            }
        }
        Self::pass(LAW)
    }

    fn bayes_residuals(&self) -> LawCheck {
        const LAW: &str = "bayes-residuals";
        let mut rng = self.rng();
        for _ in 0..SAMPLED_SYSTEMS {
            let parts = rng.gen_range(1..=self.n().min(4));
            let fse = Fse::new(self.random_partition(&mut rng, parts));
            let a = self.event_of(self.random_mask(&mut rng));
            let hypothesis = fse.parts()[rng.gen_range(0..fse.parts().len())].clone();
            match self.space.bayes(&hypothesis, &a, &fse) {
                Ok(result) => {
                    if !result.residual.is_zero() {
                        return Self::fail(
                            LAW,
                            format!(
                                "hypothesis {hypothesis}, event {a}: residual {} != 0",
                                result.residual
                            ),
                        );
                    }
                }
                Err(err) => return Self::fail(LAW, format!("hypothesis {hypothesis}: {err}")),
            }
        }
        Self::pass(LAW)
    }
}
