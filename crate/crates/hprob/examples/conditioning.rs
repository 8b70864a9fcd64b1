//! The four-way conditional-probability dispatch, the induced conditional
//! space, and the multiplication theorems.
//!
//! Run with: cargo run -p hprob --example conditioning

use hprob::{rat, rat_int, CondCase, Event, HNum, ProbSpace, Regime};

fn main() {
    // A unit-regime space that still contains zero-divisor events: atom 1
    // carries pure e-weight, atom 3 pure e+-weight.
    let space = ProbSpace::build(
        [
            ("1", HNum::from_parts(rat(1, 2), rat_int(0))),
            ("2", HNum::from_parts(rat(1, 2), rat(1, 2))),
            ("3", HNum::from_parts(rat_int(0), rat(1, 2))),
        ],
        Regime::Unit,
    )
    .unwrap();

    println!("=== The four conditional cases ===\n");

    // Case 1: invertible condition, the classical ratio.
    let omega = space.omega();
    let a = Event::new(["1"]);
    let (value, case) = space.cond(&a, &omega).unwrap();
    println!("P({a} | {omega}) = {}   [{}]", value.dual_string(), case.tag());

    // Case 2: null condition, conditioning is vacuous.
    let (value, case) = space.cond(&a, &Event::empty()).unwrap();
    println!("P({a} | {{}})    = {}   [{}]", value.dual_string(), case.tag());

    // Case 3: condition with measure in the e-ideal.
    let b = Event::new(["1"]);
    let (value, case) = space.cond(&Event::new(["2"]), &b).unwrap();
    println!("P({{2}} | {b})   = {}   [{}]", value.dual_string(), case.tag());
    assert_eq!(case, CondCase::ZdE(rat(1, 2)));

    // Case 4: the e+ mirror image.
    let c = Event::new(["3"]);
    let (value, case) = space.cond(&Event::new(["2"]), &c).unwrap();
    println!("P({{2}} | {c})   = {}   [{}]", value.dual_string(), case.tag());

    // Conditioning an event on itself always returns the regime mass of the
    // induced space: 1, e, or e+.
    println!("\n=== Conditioning induces a new space ===\n");
    for event in [omega.clone(), b.clone(), c.clone()] {
        let (mass, _) = space.cond(&event, &event).unwrap();
        let induced = space.conditional_space(&event).unwrap();
        println!(
            "condition {event}: P(B|B) = {mass}, induced regime {}",
            induced.regime()
        );
        assert_eq!(induced.measure(&induced.omega()).unwrap(), mass);
    }

    // The induced measure agrees with cond on every subevent.
    let induced = space.conditional_space(&Event::new(["1", "2"])).unwrap();
    for sub in [Event::new(["1"]), Event::new(["2"]), Event::new(["1", "2"])] {
        let (direct, _) = space.cond(&sub, &Event::new(["1", "2"])).unwrap();
        assert_eq!(induced.measure(&sub).unwrap(), direct);
    }
    println!("\ninduced measure matches cond on the trace algebra");

    // Multiplication theorem: P(A & B) = P(B) P(A | B), every case.
    println!("\n=== Multiplication theorems ===\n");
    for (x, y) in [
        (Event::new(["2"]), omega.clone()),
        (Event::new(["2"]), b.clone()),
        (Event::new(["2"]), c.clone()),
        (Event::new(["1"]), Event::empty()),
    ] {
        let (lhs, rhs) = space.mult_theorem(&x, &y).unwrap();
        println!("P({x} & {y}) = {lhs}  =  P(B)P(A|B) = {rhs}");
        assert_eq!(lhs, rhs);
    }

    // The generalized theorem telescopes over a chain when one of its
    // hypotheses holds; the classification is reported.
    let chain = [omega, Event::new(["1", "2"]), b];
    let (lhs, rhs, condition) = space.chain_mult(&chain).unwrap();
    println!(
        "\nchain of {} events: P(intersection) = {lhs}, product = {rhs}   [{}]",
        chain.len(),
        condition.tag()
    );
    assert_eq!(lhs, rhs);
}
