//! Conditional probability and the multiplication theorems.
//!
//! Because measures here may take zero-divisor values, `P(A | B)` is defined
//! by a four-way dispatch on the classification of `P(B)`:
//!
//! 1. invertible: the usual ratio `P(A & B) / P(B)`;
//! 2. zero: conditioning is vacuous, `P(A | B) = P(A)`;
//! 3. `P(B) = l*e`, `l > 0`: `(P(A & B)/l)*e + P(A)*e+`;
//! 4. `P(B) = l*e+`, `l > 0`: the mirror image of case 3.
//!
//! The dispatch is exact (driven by the zero-divisor classification of a
//! rational-valued measure), so there are no tolerance thresholds anywhere.

use crate::hnum::{HNum, ZdClass};
use crate::rational::Rational;
use crate::space::{Event, ProbSpace, Regime, SpaceError};

/// Which branch of the conditional-probability definition applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CondCase {
    Invertible,
    ZeroMeasure,
    /// The conditioning event had measure `l*e`; carries `l`.
    ZdE(Rational),
    /// The conditioning event had measure `l*e+`; carries `l`.
    ZdEdag(Rational),
}

impl CondCase {
    pub fn tag(&self) -> &'static str {
        match self {
            CondCase::Invertible => "cond-case-1",
            CondCase::ZeroMeasure => "cond-case-2",
            CondCase::ZdE(_) => "cond-case-3",
            CondCase::ZdEdag(_) => "cond-case-4",
        }
    }
}

/// Hypothesis classification for the generalized multiplication theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainCondition {
    /// The measure of the full intersection is invertible.
    IntersectionInvertible,
    /// Some event has measure in the positive `e`-ideal and so does the
    /// full intersection.
    PositiveEIdeal,
    /// The `e+` twin of `PositiveEIdeal`.
    PositiveEdagIdeal,
    /// None of the theorem's hypotheses hold; no equality is promised.
    NotApplicable,
}

impl ChainCondition {
    pub fn tag(&self) -> &'static str {
        match self {
            ChainCondition::IntersectionInvertible => "chain-condition-1",
            ChainCondition::PositiveEIdeal => "chain-condition-2",
            ChainCondition::PositiveEdagIdeal => "chain-condition-3",
            ChainCondition::NotApplicable => "chain-condition-none",
        }
    }

    pub fn applies(&self) -> bool {
        !matches!(self, ChainCondition::NotApplicable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InferenceError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("conditioning event has measure zero")]
    ZeroCondition,
    #[error("need at least {needed} events")]
    TooFewEvents { needed: usize },
    #[error("events are not mutually independent")]
    NotIndependentInput,
    #[error("invalid fundamental system of events: {0}")]
    InvalidFse(&'static str),
    #[error("hypothesis is not part of the fundamental system")]
    HypothesisNotInFse,
}

impl ProbSpace {
    /// Conditional probability of `a` given `b`, with the branch taken.
    pub fn cond(&self, a: &Event, b: &Event) -> Result<(HNum, CondCase), SpaceError> {
        let pa = self.measure(a)?;
        let pb = self.measure(b)?;
        let pab = self.measure(&a.intersection(b))?;
        match pb.classify() {
            ZdClass::Invertible => {
                let value = pab.checked_div(&pb).expect("divisor is invertible");
                Ok((value, CondCase::Invertible))
            }
            ZdClass::Zero => Ok((pa, CondCase::ZeroMeasure)),
            ZdClass::ZdE => {
                let lambda = pb.e_part().clone();
                let value = HNum::from_parts(pab.e_part() / &lambda, pa.edag_part().clone());
                Ok((value, CondCase::ZdE(lambda)))
            }
            ZdClass::ZdEdag => {
                let lambda = pb.edag_part().clone();
                let value = HNum::from_parts(pa.e_part().clone(), pab.edag_part() / &lambda);
                Ok((value, CondCase::ZdEdag(lambda)))
            }
        }
    }

    /// The new probabilistic space induced on the atoms of `b` by
    /// conditioning on `b`.
    ///
    /// Atom weights are `P({w} | b)`; the regime matches `P(b | b)`, which
    /// is `1`, `e`, or `e+` according to the classification of `P(b)`.
    /// Conditioning on a null event does not induce a measure on the trace
    /// algebra, so `P(b) = 0` is rejected.
    pub fn conditional_space(&self, b: &Event) -> Result<ProbSpace, InferenceError> {
        let pb = self.measure(b)?;
        let regime = match pb.classify() {
            ZdClass::Zero => return Err(InferenceError::ZeroCondition),
            ZdClass::Invertible => Regime::Unit,
            ZdClass::ZdE => Regime::E,
            ZdClass::ZdEdag => Regime::Edag,
        };
        let mut pairs = Vec::with_capacity(b.len());
        for atom in self.atoms() {
            if b.contains(atom) {
                let (w, _) = self.cond(&Event::new([atom]), b)?;
                pairs.push((atom.to_string(), w));
            }
        }
        Ok(ProbSpace::build(pairs, regime)?)
    }

    /// Multiplication theorem: returns `(P(A & B), P(B) * P(A | B))`.
    ///
    /// The two values are equal for every pair of events, in every regime.
    pub fn mult_theorem(&self, a: &Event, b: &Event) -> Result<(HNum, HNum), SpaceError> {
        let lhs = self.measure(&a.intersection(b))?;
        let pb = self.measure(b)?;
        let (given_b, _) = self.cond(a, b)?;
        Ok((lhs, pb * given_b))
    }

    /// Generalized multiplication theorem over an ordered list of events.
    ///
    /// Returns the measure of the full intersection, the telescoping product
    /// `P(A1) * P(A2 | A1) * ... * P(An | A1 & ... & A(n-1))`, and which of
    /// the theorem's hypotheses held. The two values agree whenever the
    /// condition is applicable; with `NotApplicable` both are still returned
    /// but nothing is promised.
    pub fn chain_mult(
        &self,
        events: &[Event],
    ) -> Result<(HNum, HNum, ChainCondition), InferenceError> {
        if events.len() < 2 {
            return Err(InferenceError::TooFewEvents { needed: 2 });
        }
        for event in events {
            self.mask_of(event)?;
        }

        let full = events
            .iter()
            .skip(1)
            .fold(events[0].clone(), |acc, e| acc.intersection(e));
        let lhs = self.measure(&full)?;

        let mut rhs = self.measure(&events[0])?;
        let mut prefix = events[0].clone();
        for event in &events[1..] {
            let (factor, _) = self.cond(event, &prefix)?;
            rhs = rhs * factor;
            prefix = prefix.intersection(event);
        }

        let has_class = |class: ZdClass| -> Result<bool, SpaceError> {
            for event in events {
                if self.measure(event)?.classify() == class {
                    return Ok(true);
                }
            }
            Ok(false)
        };
        let condition = match lhs.classify() {
            ZdClass::Invertible => ChainCondition::IntersectionInvertible,
            ZdClass::ZdE if has_class(ZdClass::ZdE)? => ChainCondition::PositiveEIdeal,
            ZdClass::ZdEdag if has_class(ZdClass::ZdEdag)? => ChainCondition::PositiveEdagIdeal,
            _ => ChainCondition::NotApplicable,
        };

        Ok((lhs, rhs, condition))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn uniform(n: usize) -> ProbSpace {
        ProbSpace::build(
            (1..=n).map(|i| (i.to_string(), HNum::from_real(rat(1, n as i64)))),
            Regime::Unit,
        )
        .unwrap()
    }

    // Unit-regime space holding zero-divisor events: atom 1 weighs (1/2)e,
    // atom 2 weighs (1/2)e + e+.
    fn mixed_space() -> ProbSpace {
        ProbSpace::build(
            [
                ("1", HNum::from_parts(rat(1, 2), rat_int(0))),
                ("2", HNum::from_parts(rat(1, 2), rat_int(1))),
            ],
            Regime::Unit,
        )
        .unwrap()
    }

    fn e_space() -> ProbSpace {
        ProbSpace::build(
            [
                ("1", HNum::from_parts(rat(1, 2), rat_int(0))),
                ("2", HNum::from_parts(rat(1, 3), rat_int(0))),
                ("3", HNum::from_parts(rat(1, 6), rat_int(0))),
            ],
            Regime::E,
        )
        .unwrap()
    }

    #[test]
    fn conditioning_event_on_itself_gives_the_regime_mass() {
        let space = uniform(4);
        let b = Event::new(["2", "3"]);
        let (value, case) = space.cond(&b, &b).unwrap();
        assert_eq!(value, HNum::one());
        assert_eq!(case, CondCase::Invertible);

        let e_regime = e_space();
        let b = Event::new(["1", "2"]);
        let (value, case) = e_regime.cond(&b, &b).unwrap();
        assert_eq!(value, HNum::e());
        assert_eq!(case, CondCase::ZdE(rat(5, 6)));

        let edag = ProbSpace::build(
            [
                ("x", HNum::from_parts(rat_int(0), rat(1, 4))),
                ("y", HNum::from_parts(rat_int(0), rat(3, 4))),
            ],
            Regime::Edag,
        )
        .unwrap();
        let b = Event::new(["x"]);
        let (value, case) = edag.cond(&b, &b).unwrap();
        assert_eq!(value, HNum::edag());
        assert_eq!(case, CondCase::ZdEdag(rat(1, 4)));
    }

    #[test]
    fn invertible_case_on_uniform_space() {
        let space = uniform(4);
        let a = Event::new(["1", "2"]);
        let b = Event::new(["2", "3"]);
        let (value, case) = space.cond(&a, &b).unwrap();
        assert_eq!(value, HNum::from_real(rat(1, 2)));
        assert_eq!(case, CondCase::Invertible);
    }

    #[test]
    fn zero_divisor_case_in_a_unit_space() {
        let space = mixed_space();
        let b = Event::new(["1"]);
        assert_eq!(
            space.measure(&b).unwrap(),
            HNum::from_parts(rat(1, 2), rat_int(0))
        );
        // P({1} | {1}) = (P1(A&B)/l)e + P2(A)e+ = (1/2 / 1/2)e + 0e+ = e
        let (value, case) = space.cond(&b, &b).unwrap();
        assert_eq!(value, HNum::e());
        assert_eq!(case, CondCase::ZdE(rat(1, 2)));
        // P({2} | {1}): empty intersection, P2({2}) = 1
        let (value, _) = space.cond(&Event::new(["2"]), &b).unwrap();
        assert_eq!(value, HNum::edag());
        // P(omega | {1}) = e + e+ = 1
        let (value, _) = space.cond(&space.omega(), &b).unwrap();
        assert_eq!(value, HNum::one());
    }

    #[test]
    fn zero_measure_condition_is_vacuous() {
        let space = e_space();
        // any event avoiding every positively weighted e-part... use empty
        let a = Event::new(["1"]);
        let (value, case) = space.cond(&a, &Event::empty()).unwrap();
        assert_eq!(value, space.measure(&a).unwrap());
        assert_eq!(case, CondCase::ZeroMeasure);
    }

    #[test]
    fn case_three_matches_componentwise_classical_conditionals() {
        let space = mixed_space();
        let b = Event::new(["1"]);
        for a in [Event::empty(), Event::new(["1"]), Event::new(["2"]), space.omega()] {
            let (value, _) = space.cond(&a, &b).unwrap();
            // independent route: classical conditional of the e components,
            // paired with the unconditioned e+ component
            let p1_ab = space.measure(&a.intersection(&b)).unwrap().e_part().clone();
            let p1_b = space.measure(&b).unwrap().e_part().clone();
            let p2_a = space.measure(&a).unwrap().edag_part().clone();
            assert_eq!(value, HNum::from_parts(p1_ab / p1_b, p2_a));
        }
    }

    #[test]
    fn conditional_space_on_omega_is_the_space_itself() {
        let space = uniform(4);
        let new = space.conditional_space(&space.omega()).unwrap();
        assert_eq!(new.regime(), Regime::Unit);
        for atom in space.atoms() {
            assert_eq!(new.weight(atom), space.weight(atom));
        }
    }

    #[test]
    fn conditional_space_restricts_and_renormalizes() {
        let space = uniform(4);
        let b = Event::new(["2", "3"]);
        let new = space.conditional_space(&b).unwrap();
        assert_eq!(new.atom_count(), 2);
        assert_eq!(new.regime(), Regime::Unit);
        assert_eq!(new.weight("2").unwrap(), &HNum::from_real(rat(1, 2)));
        // its measure agrees with cond on every subevent of b
        for a in [Event::empty(), Event::new(["2"]), Event::new(["3"]), b.clone()] {
            let (expected, _) = space.cond(&a, &b).unwrap();
            assert_eq!(new.measure(&a).unwrap(), expected);
        }
    }

    #[test]
    fn conditional_space_regime_follows_the_case() {
        let space = mixed_space();
        let b = Event::new(["1"]);
        let new = space.conditional_space(&b).unwrap();
        assert_eq!(new.regime(), Regime::E);
        assert_eq!(new.measure(&new.omega()).unwrap(), HNum::e());
        assert_eq!(
            space.conditional_space(&Event::empty()).unwrap_err(),
            InferenceError::ZeroCondition
        );
    }

    #[test]
    fn multiplication_theorem_examples() {
        let space = uniform(4);
        let a = Event::new(["1", "2"]);
        let b = Event::new(["2", "3"]);
        let (lhs, rhs) = space.mult_theorem(&a, &b).unwrap();
        assert_eq!(lhs, HNum::from_real(rat(1, 4)));
        assert_eq!(rhs, lhs);

        // zero-measure conditioning event: both sides vanish
        let (lhs, rhs) = space.mult_theorem(&a, &Event::empty()).unwrap();
        assert_eq!(lhs, HNum::zero());
        assert_eq!(rhs, HNum::zero());

        // zero-divisor conditioning event in a unit space
        let mixed = mixed_space();
        let (lhs, rhs) = mixed
            .mult_theorem(&Event::new(["2"]), &Event::new(["1"]))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_reduces_to_the_binary_theorem() {
        let space = uniform(4);
        let a = Event::new(["1", "2"]);
        let b = Event::new(["2", "3"]);
        let (lhs, rhs, _) = space.chain_mult(&[b.clone(), a.clone()]).unwrap();
        let (expected_lhs, expected_rhs) = space.mult_theorem(&a, &b).unwrap();
        assert_eq!(lhs, expected_lhs);
        assert_eq!(rhs, expected_rhs);
    }

    #[test]
    fn nested_chain_on_uniform_eight() {
        let space = uniform(8);
        let chain = [
            Event::new(["1", "2", "3", "4"]),
            Event::new(["1", "2"]),
            Event::new(["1"]),
        ];
        let (lhs, rhs, condition) = space.chain_mult(&chain).unwrap();
        assert_eq!(lhs, HNum::from_real(rat(1, 8)));
        assert_eq!(rhs, lhs);
        assert_eq!(condition, ChainCondition::IntersectionInvertible);
    }

    #[test]
    fn chain_in_the_e_regime_hits_condition_two() {
        let space = e_space();
        let chain = [Event::new(["1", "2"]), Event::new(["1", "3"])];
        let (lhs, rhs, condition) = space.chain_mult(&chain).unwrap();
        assert_eq!(condition, ChainCondition::PositiveEIdeal);
        assert_eq!(lhs, HNum::from_parts(rat(1, 2), rat_int(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_needs_two_events() {
        let space = uniform(4);
        assert_eq!(
            space.chain_mult(&[space.omega()]).unwrap_err(),
            InferenceError::TooFewEvents { needed: 2 }
        );
    }

    fn all_events(space: &ProbSpace) -> Vec<Event> {
        let atoms: Vec<&str> = space.atoms().collect();
        (0u32..(1 << atoms.len()))
            .map(|mask| {
                Event::new(
                    atoms
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, a)| a.to_string()),
                )
            })
            .collect()
    }

    // P(A & B) = P(B) P(A | B) for every event pair of several small weight
    // grids covering all four dispatch cases.
    #[test]
    fn multiplication_theorem_exhaustive_on_small_grids() {
        let grids = [
            uniform(5),
            ProbSpace::build(
                [
                    ("1", HNum::from_parts(rat(1, 3), rat_int(0))),
                    ("2", HNum::from_parts(rat_int(0), rat(1, 4))),
                    ("3", HNum::from_parts(rat(1, 3), rat(1, 4))),
                    ("4", HNum::from_parts(rat(1, 3), rat(1, 2))),
                    ("5", HNum::zero()),
                ],
                Regime::Unit,
            )
            .unwrap(),
            ProbSpace::build(
                (1..=4).map(|i| (i.to_string(), HNum::from_parts(rat(1, 4), rat_int(0)))),
                Regime::E,
            )
            .unwrap(),
            ProbSpace::build(
                (1..=4).map(|i| (i.to_string(), HNum::from_parts(rat_int(0), rat(1, 4)))),
                Regime::Edag,
            )
            .unwrap(),
        ];
        for space in &grids {
            let events = all_events(space);
            for a in &events {
                for b in &events {
                    let (lhs, rhs) = space.mult_theorem(a, b).unwrap();
                    assert_eq!(lhs, rhs, "failed for A={a}, B={b}");
                }
            }
        }
    }
}
