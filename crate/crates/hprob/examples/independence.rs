//! Independence under zero-divisor-valued measures: the five-case analysis,
//! the paradoxical opposite-ideal case, complement independence, and the
//! gap between pairwise and joint independence.
//!
//! Run with: cargo run -p hprob --example independence

use hprob::{rat, rat_int, Event, HNum, IndepCase, ProbSpace, Regime};

fn main() {
    let uniform = ProbSpace::build(
        (1..=4).map(|i| (i.to_string(), HNum::from_real(rat(1, 4)))),
        Regime::Unit,
    )
    .unwrap();

    println!("=== Case (ii): invertible measures ===\n");
    let a = Event::new(["1", "2"]);
    let b = Event::new(["2", "3"]);
    let report = uniform.independence(&a, &b).unwrap();
    println!(
        "{a} vs {b}: case {:?}, mutual = {}, product holds = {}",
        report.case,
        report.mutual(),
        report.product_holds
    );
    assert_eq!(report.case, IndepCase::BothInvertible);
    assert!(report.mutual());

    println!("\n=== Case (i): a null event is independent of everything ===\n");
    let report = uniform.independence(&Event::empty(), &a).unwrap();
    println!("{{}} vs {a}: mutual = {}", report.mutual());
    assert!(report.mutual() && report.product_holds);

    // Space with events in both zero-divisor ideals.
    let opposed = ProbSpace::build(
        [
            ("1", HNum::from_parts(rat(1, 3), rat_int(0))),
            ("2", HNum::from_parts(rat_int(0), rat(1, 2))),
            ("3", HNum::from_parts(rat(2, 3), rat(1, 2))),
        ],
        Regime::Unit,
    )
    .unwrap();

    println!("\n=== Case (iv): opposite ideals are always independent ===\n");
    let x = Event::new(["1"]); // measure (1/3)e
    let y = Event::new(["2"]); // measure (1/2)e+
    let report = opposed.independence(&x, &y).unwrap();
    println!(
        "P({x}) = {}, P({y}) = {}",
        opposed.measure(&x).unwrap(),
        opposed.measure(&y).unwrap()
    );
    println!(
        "case {:?}, mutual = {}, P(x & y) = {}",
        report.case,
        report.mutual(),
        opposed.measure(&x.intersection(&y)).unwrap()
    );
    assert_eq!(report.case, IndepCase::OppositeIdealZd);
    assert!(report.mutual());

    println!("\n=== Independence survives complementation ===\n");
    let ok = uniform.complement_independence(&a, &b).unwrap();
    println!("{a}, {b} and all complement pairs independent: {ok}");
    assert!(ok);

    println!("\n=== Pairwise is weaker than joint ===\n");
    let family = [
        Event::new(["1", "2"]),
        Event::new(["1", "3"]),
        Event::new(["1", "4"]),
    ];
    let (jointly, pairwise) = uniform.joint_independence(&family).unwrap();
    println!("three half-events through atom 1: pairwise = {pairwise}, jointly = {jointly}");
    let triple = family[0].intersection(&family[1]).intersection(&family[2]);
    println!(
        "P(triple intersection) = {} but the product of measures is 1/8",
        uniform.measure(&triple).unwrap()
    );
    assert!(pairwise && !jointly);

    // A jointly independent family: two independent splits of a uniform
    // four-point space.
    let splits = [Event::new(["1", "2"]), Event::new(["1", "3"])];
    let (jointly, pairwise) = uniform.joint_independence(&splits).unwrap();
    println!("\ntwo independent splits: pairwise = {pairwise}, jointly = {jointly}");
    assert!(jointly && pairwise);
}
