//! Building measure spaces in the three regimes, the validation errors,
//! and the basic property suite (complement, monotonicity,
//! inclusion-exclusion, subadditivity, continuity).
//!
//! Run with: cargo run -p hprob --example build_spaces

use hprob::{canonical_json, rat, rat_int, Event, HNum, ProbSpace, Regime, SpaceError};

fn main() {
    // Unit regime: both component measures are classical probabilities.
    let mut uniform = ProbSpace::build(
        (1..=4).map(|i| (i.to_string(), HNum::from_real(rat(1, 4)))),
        Regime::Unit,
    )
    .unwrap();
    uniform.register_event("A", Event::new(["1", "2"])).unwrap();
    println!("uniform-4 total mass = {}", uniform.measure(&uniform.omega()).unwrap());

    // E regime: every weight is a multiple of e; the e+ measure is trivial.
    let e_space = ProbSpace::build(
        [
            ("heads", HNum::from_parts(rat(1, 2), rat_int(0))),
            ("tails", HNum::from_parts(rat(1, 2), rat_int(0))),
        ],
        Regime::E,
    )
    .unwrap();
    println!("e-regime total mass  = {}", e_space.measure(&e_space.omega()).unwrap());

    // Validation catches exactly the two axioms that can fail.
    let unbalanced = ProbSpace::build(
        [
            ("1", HNum::from_parts(rat(3, 4), rat(1, 4))),
            ("2", HNum::from_parts(rat(1, 2), rat(3, 4))),
        ],
        Regime::Unit,
    );
    match unbalanced {
        Err(SpaceError::MassMismatch { actual, expected }) => {
            println!("\nrejected: weights sum to {actual}, regime requires {expected}")
        }
        other => panic!("expected a mass mismatch, got {other:?}"),
    }
    let negative = ProbSpace::build(
        [
            ("1", HNum::from_real(rat(5, 4))),
            ("2", HNum::from_real(rat(-1, 4))),
        ],
        Regime::Unit,
    );
    match negative {
        Err(SpaceError::NegativeWeight { atom, weight }) => {
            println!("rejected: atom {atom} has weight {weight}")
        }
        other => panic!("expected a negative weight, got {other:?}"),
    }

    // Complement: P(A) + P(A^c) is the total mass.
    let a = Event::new(["1"]);
    let (p, rest) = uniform.complement_law(&a).unwrap();
    println!("\nP({a}) = {p},  P(complement) = {rest}");

    // Monotonicity: nested events always compare.
    let b = Event::new(["1", "2"]);
    println!("P({a}) vs P({b}) -> {:?}", uniform.monotone_compare(&a, &b).unwrap());

    // Inclusion-exclusion equals a direct union measurement.
    let c = Event::new(["2", "3"]);
    let via_ie = uniform.union_inclusion_exclusion(&[b.clone(), c.clone()]).unwrap();
    let direct = uniform.measure(&b.union(&c)).unwrap();
    println!("P({b} u {c}) = {via_ie} (inclusion-exclusion) = {direct} (direct)");
    assert_eq!(via_ie, direct);

    // Subadditivity: the union never outweighs the sum.
    let (union, bound, rel) = uniform.subadditivity_check(&[b.clone(), c.clone()]).unwrap();
    println!("P(union) = {union} vs sum {bound} -> {rel:?}");

    // Continuity along a decreasing chain of events.
    let chain = [Event::new(["1", "2", "3"]), b.clone(), a.clone()];
    println!("limit along chain  = {}", uniform.continuity_limit(&chain).unwrap());

    // Canonical serialization round-trips byte for byte.
    let json = canonical_json(&uniform);
    println!("\ncanonical file:\n{json}");
    let reloaded = hprob::from_json(&json).unwrap();
    assert_eq!(canonical_json(&reloaded), json);
}
