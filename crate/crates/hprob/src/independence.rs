//! Independence of events under zero-divisor-valued measures.
//!
//! `A` is independent of `B` when `P(A | B) = P(A)`. Both directions are
//! computed from the conditional definition rather than assuming the
//! symmetry corollary, so every call re-exercises it. The case analysis
//! follows the classification of the two measures; the opposite-ideal case
//! is degenerate: such pairs are always mutually independent and their
//! intersection is null.

use crate::hnum::ZdClass;
use crate::space::{Event, ProbSpace, SpaceError};
use crate::conditional::InferenceError;
use crate::HNum;

/// The five-way case split for an independence query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndepCase {
    /// At least one of the two events has measure zero.
    ZeroMeasure,
    /// Both measures are invertible.
    BothInvertible,
    /// Both measures are zero-divisors in the same ideal.
    SameIdealZd,
    /// Zero-divisors in complementary ideals (`l*e` against `m*e+`).
    OppositeIdealZd,
    /// One zero-divisor, one invertible measure.
    ZdAndInvertible,
}

impl IndepCase {
    pub fn tag(&self) -> &'static str {
        match self {
            IndepCase::ZeroMeasure => "case-i",
            IndepCase::BothInvertible => "case-ii",
            IndepCase::SameIdealZd => "case-iii",
            IndepCase::OppositeIdealZd => "case-iv",
            IndepCase::ZdAndInvertible => "case-v",
        }
    }
}

/// Result of an independence query between two events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndepReport {
    pub case: IndepCase,
    pub a_indep_b: bool,
    pub b_indep_a: bool,
    /// Whether `P(A & B) = P(A) * P(B)`.
    pub product_holds: bool,
}

impl IndepReport {
    pub fn mutual(&self) -> bool {
        self.a_indep_b && self.b_indep_a
    }
}

impl ProbSpace {
    /// Tests independence in both directions and the product identity.
    pub fn independence(&self, a: &Event, b: &Event) -> Result<IndepReport, SpaceError> {
        let pa = self.measure(a)?;
        let pb = self.measure(b)?;
        let pab = self.measure(&a.intersection(b))?;
        let (given_b, _) = self.cond(a, b)?;
        let (given_a, _) = self.cond(b, a)?;
        let case = match (pa.classify(), pb.classify()) {
            (ZdClass::Zero, _) | (_, ZdClass::Zero) => IndepCase::ZeroMeasure,
            (ZdClass::Invertible, ZdClass::Invertible) => IndepCase::BothInvertible,
            (ZdClass::ZdE, ZdClass::ZdE) | (ZdClass::ZdEdag, ZdClass::ZdEdag) => {
                IndepCase::SameIdealZd
            }
            (ZdClass::ZdE, ZdClass::ZdEdag) | (ZdClass::ZdEdag, ZdClass::ZdE) => {
                IndepCase::OppositeIdealZd
            }
            _ => IndepCase::ZdAndInvertible,
        };
        Ok(IndepReport {
            case,
            a_indep_b: given_b == pa,
            b_indep_a: given_a == pb,
            product_holds: pab == &pa * &pb,
        })
    }

    /// Checks that independence of `a` and `b` transfers to their
    /// complements: all of `(a, b^c)`, `(a^c, b)`, `(a^c, b^c)` must be
    /// mutually independent. Rejects input pairs that are not themselves
    /// mutually independent.
    pub fn complement_independence(&self, a: &Event, b: &Event) -> Result<bool, InferenceError> {
        if !self.independence(a, b)?.mutual() {
            return Err(InferenceError::NotIndependentInput);
        }
        let a_c = self.complement(a)?;
        let b_c = self.complement(b)?;
        Ok(self.independence(a, &b_c)?.mutual()
            && self.independence(&a_c, b)?.mutual()
            && self.independence(&a_c, &b_c)?.mutual())
    }

    /// Joint versus pairwise independence of a family of events.
    ///
    /// Jointly independent means the product identity holds for every index
    /// subset of size two or more; pairwise restricts that to pairs. Joint
    /// implies pairwise, never the other way around.
    pub fn joint_independence(&self, events: &[Event]) -> Result<(bool, bool), InferenceError> {
        if events.len() < 2 {
            return Err(InferenceError::TooFewEvents { needed: 2 });
        }
        let measures = events
            .iter()
            .map(|e| self.measure(e))
            .collect::<Result<Vec<_>, _>>()?;

        let mut jointly = true;
        let mut pairwise = true;
        for subset in 1u64..(1u64 << events.len()) {
            if subset.count_ones() < 2 {
                continue;
            }
            let mut intersection: Option<Event> = None;
            let mut product = HNum::one();
            for (i, event) in events.iter().enumerate() {
                if subset & (1 << i) != 0 {
                    intersection = Some(match intersection {
                        Some(acc) => acc.intersection(event),
                        None => event.clone(),
                    });
                    product = product * &measures[i];
                }
            }
            let inter = intersection.expect("subset has at least two members");
            if self.measure(&inter)? != product {
                jointly = false;
                if subset.count_ones() == 2 {
                    pairwise = false;
                }
            }
        }
        Ok((jointly, pairwise))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::space::Regime;

    fn uniform4() -> ProbSpace {
        ProbSpace::build(
            (1..=4).map(|i| (i.to_string(), HNum::from_real(rat(1, 4)))),
            Regime::Unit,
        )
        .unwrap()
    }

    // Unit space mixing both zero-divisor ideals: events on atom 1 have
    // e-type measure, events on atom 2 have e+-type measure.
    fn opposed_space() -> ProbSpace {
        ProbSpace::build(
            [
                ("1", HNum::from_parts(rat(1, 3), rat_int(0))),
                ("2", HNum::from_parts(rat_int(0), rat(1, 2))),
                ("3", HNum::from_parts(rat(2, 3), rat(1, 2))),
            ],
            Regime::Unit,
        )
        .unwrap()
    }

    #[test]
    fn null_events_are_independent_of_everything() {
        let space = uniform4();
        let report = space
            .independence(&Event::empty(), &Event::new(["1", "2"]))
            .unwrap();
        assert_eq!(report.case, IndepCase::ZeroMeasure);
        assert!(report.mutual());
        assert!(report.product_holds);
    }

    #[test]
    fn uniform_half_events_are_independent() {
        let space = uniform4();
        let report = space
            .independence(&Event::new(["1", "2"]), &Event::new(["2", "3"]))
            .unwrap();
        assert_eq!(report.case, IndepCase::BothInvertible);
        assert!(report.mutual());
        assert!(report.product_holds);
    }

    #[test]
    fn dependent_pair_is_reported_in_both_directions() {
        let space = uniform4();
        let report = space
            .independence(&Event::new(["1"]), &Event::new(["1", "2"]))
            .unwrap();
        assert!(!report.a_indep_b);
        assert!(!report.b_indep_a);
        assert!(!report.product_holds);
    }

    #[test]
    fn opposite_ideals_are_always_independent_with_null_intersection() {
        let space = opposed_space();
        let a = Event::new(["1"]);
        let b = Event::new(["2"]);
        assert_eq!(space.measure(&a).unwrap().classify(), ZdClass::ZdE);
        assert_eq!(space.measure(&b).unwrap().classify(), ZdClass::ZdEdag);
        let report = space.independence(&a, &b).unwrap();
        assert_eq!(report.case, IndepCase::OppositeIdealZd);
        assert!(report.mutual());
        assert!(report.product_holds);
        assert_eq!(space.measure(&a.intersection(&b)).unwrap(), HNum::zero());
    }

    #[test]
    fn same_ideal_case_follows_the_scaled_product_rule() {
        // uniform e-regime: {1,2} and {2,3} satisfy l = n/m exactly
        let space = ProbSpace::build(
            (1..=4).map(|i| (i.to_string(), HNum::from_parts(rat(1, 4), rat_int(0)))),
            Regime::E,
        )
        .unwrap();
        let report = space
            .independence(&Event::new(["1", "2"]), &Event::new(["2", "3"]))
            .unwrap();
        assert_eq!(report.case, IndepCase::SameIdealZd);
        assert!(report.mutual());
        assert!(report.product_holds);

        let dependent = space
            .independence(&Event::new(["1"]), &Event::new(["1", "2"]))
            .unwrap();
        assert_eq!(dependent.case, IndepCase::SameIdealZd);
        assert!(!dependent.mutual());
    }

    #[test]
    fn complement_independence_holds_for_independent_pairs() {
        let space = uniform4();
        assert!(space
            .complement_independence(&Event::new(["1", "2"]), &Event::new(["2", "3"]))
            .unwrap());
        let err = space
            .complement_independence(&Event::new(["1"]), &Event::new(["1", "2"]))
            .unwrap_err();
        assert_eq!(err, InferenceError::NotIndependentInput);
    }

    #[test]
    fn complement_independence_in_the_e_regime() {
        let space = ProbSpace::build(
            (1..=4).map(|i| (i.to_string(), HNum::from_parts(rat(1, 4), rat_int(0)))),
            Regime::E,
        )
        .unwrap();
        assert!(space
            .complement_independence(&Event::new(["1", "2"]), &Event::new(["2", "3"]))
            .unwrap());
    }

    #[test]
    fn bernstein_family_is_pairwise_but_not_jointly_independent() {
        let space = uniform4();
        let family = [
            Event::new(["1", "2"]),
            Event::new(["1", "3"]),
            Event::new(["1", "4"]),
        ];
        let (jointly, pairwise) = space.joint_independence(&family).unwrap();
        assert!(pairwise);
        assert!(!jointly);
    }

    #[test]
    fn pair_query_agrees_with_the_binary_report() {
        let space = uniform4();
        let a = Event::new(["1", "2"]);
        let b = Event::new(["2", "3"]);
        let (jointly, pairwise) = space.joint_independence(&[a.clone(), b.clone()]).unwrap();
        let report = space.independence(&a, &b).unwrap();
        assert_eq!(jointly, report.product_holds);
        assert_eq!(pairwise, report.product_holds);
        assert_eq!(
            space.joint_independence(&[a]).unwrap_err(),
            InferenceError::TooFewEvents { needed: 2 }
        );
    }
}
