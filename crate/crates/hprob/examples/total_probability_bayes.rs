//! Law of total probability and Bayes' theorem over fundamental systems of
//! events, including the zero-divisor branches where the theorem pins an
//! identity instead of a closed-form posterior.
//!
//! Run with: cargo run -p hprob --example total_probability_bayes

use hprob::{rat, rat_int, CondCase, Event, Fse, HNum, ProbSpace, Regime};

fn main() {
    let uniform = ProbSpace::build(
        (1..=4).map(|i| (i.to_string(), HNum::from_real(rat(1, 4)))),
        Regime::Unit,
    )
    .unwrap();
    let halves = Fse::new(vec![Event::new(["1", "2"]), Event::new(["3", "4"])]);

    println!("=== Total probability ===\n");
    let a = Event::new(["2", "3"]);
    let total = uniform.total_probability(&a, &halves).unwrap();
    println!(
        "sum of P(H_i) P(A | H_i) = {total}, direct measure = {}",
        uniform.measure(&a).unwrap()
    );
    assert_eq!(total, uniform.measure(&a).unwrap());

    // The law stays exact when parts have zero-divisor measure.
    let mixed = ProbSpace::build(
        [
            ("1", HNum::from_parts(rat(1, 2), rat_int(0))),
            ("2", HNum::from_parts(rat(1, 4), rat(1, 2))),
            ("3", HNum::from_parts(rat(1, 4), rat(1, 2))),
        ],
        Regime::Unit,
    )
    .unwrap();
    let system = Fse::new(vec![Event::new(["1"]), Event::new(["2", "3"])]);
    for event in [Event::new(["1", "2"]), Event::new(["3"]), mixed.omega()] {
        let total = mixed.total_probability(&event, &system).unwrap();
        assert_eq!(total, mixed.measure(&event).unwrap());
        println!("zero-divisor part, event {event}: total = {total}");
    }

    println!("\n=== Bayes with an invertible evidence measure ===\n");
    let result = uniform
        .bayes(&Event::new(["1", "2"]), &a, &halves)
        .unwrap();
    println!(
        "posterior = {}, branch = {}, residual = {}",
        result.posterior.dual_string(),
        result.branch.tag(),
        result.residual
    );
    assert_eq!(result.posterior, HNum::from_real(rat(1, 2)));
    assert!(result.residual.is_zero());

    println!("\n=== Bayes in a zero-divisor branch ===\n");
    // Evidence event with measure (1/2)e: only the e-component of the
    // posterior is pinned by the theorem; the residual must still vanish.
    let evidence = Event::new(["1"]);
    println!("P(evidence) = {}", mixed.measure(&evidence).unwrap());
    for part in system.parts() {
        let result = mixed.bayes(part, &evidence, &system).unwrap();
        assert!(matches!(result.branch, CondCase::ZdE(_)));
        assert!(result.residual.is_zero());
        println!(
            "hypothesis {part}: posterior = {}, branch = {}, residual = {}",
            result.posterior.dual_string(),
            result.branch.tag(),
            result.residual
        );
    }

    println!("\n=== Null evidence falls back to the prior ===\n");
    let edag_space = ProbSpace::build(
        [
            ("u", HNum::from_parts(rat_int(0), rat(2, 3))),
            ("v", HNum::from_parts(rat_int(0), rat(1, 3))),
        ],
        Regime::Edag,
    )
    .unwrap();
    let parts = Fse::new(vec![Event::new(["u"]), Event::new(["v"])]);
    let result = edag_space
        .bayes(&Event::new(["u"]), &Event::empty(), &parts)
        .unwrap();
    println!(
        "posterior = {} (the prior), branch = {}",
        result.posterior,
        result.branch.tag()
    );
    assert_eq!(result.branch, CondCase::ZeroMeasure);
    assert_eq!(
        result.posterior,
        edag_space.measure(&Event::new(["u"])).unwrap()
    );
}
