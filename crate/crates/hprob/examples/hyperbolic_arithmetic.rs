//! Tour of the hyperbolic number ring: idempotent decomposition,
//! zero-divisors, the partial order, and the hyperbolic-valued modulus.
//!
//! Run with: cargo run -p hprob --example hyperbolic_arithmetic

use hprob::{rat, rat_int, sup_d, HNum, OrderRel, ZdClass};

fn main() {
    println!("=== Hyperbolic numbers: a + b*j with j*j = 1 ===\n");

    // Two ways to build the same number.
    let z = HNum::from_cartesian(rat_int(3), rat_int(2));
    println!("z = {}", z.dual_string());
    println!("  e-part {}   e+-part {}", z.e_part(), z.edag_part());

    // The idempotents split the ring into two ideals.
    let e = HNum::e();
    let edag = HNum::edag();
    println!("\ne = {}   e+ = {}", e.dual_string(), edag.dual_string());
    println!("e + e+          = {}", (&e + &edag).dual_string());
    println!("e * e+          = {}", (&e * &edag).dual_string());
    println!("e * e           = {}", (&e * &e).dual_string());

    // Conjugation swaps the idempotent components; z * conj(z) is real.
    println!("\nconj(z)         = {}", z.conj().dual_string());
    println!("z * conj(z)     = {}", (&z * &z.conj()).dual_string());

    // Inverses exist exactly when both components are nonzero.
    let w = HNum::from_parts(rat_int(2), rat_int(4));
    println!("\nw = {}", w.dual_string());
    println!("w^-1            = {}", w.inverse().unwrap().dual_string());
    println!("e^-1            = {:?}", e.inverse().unwrap_err());

    // Classification drives every case split in the probability layer.
    for value in [HNum::zero(), HNum::one(), e.clone(), edag.clone()] {
        println!("classify({})  -> {:?}", value, value.classify());
    }
    assert_eq!(z.classify(), ZdClass::Invertible);

    // The componentwise order is partial: e and e+ are incomparable.
    println!("\n0 vs e          -> {:?}", HNum::zero().compare(&e));
    println!("e vs e+         -> {:?}", e.compare(&edag));
    println!("2 vs 5          -> {:?}", HNum::from_int(2).compare(&HNum::from_int(5)));
    assert_eq!(e.compare(&edag), OrderRel::Incomparable);

    // Modulus: componentwise absolute value, multiplicative, triangle law.
    let a = HNum::from_parts(rat(-2, 1), rat(3, 1));
    println!("\n|{}|  = {}", a, a.hmod());
    let b = HNum::from_parts(rat(1, 2), rat(-5, 3));
    assert_eq!((&a * &b).hmod(), &a.hmod() * &b.hmod());
    let triangle = (&a + &b).hmod().compare(&(&a.hmod() + &b.hmod()));
    println!("triangle check  -> {triangle:?}");

    // Componentwise supremum of a finite set.
    let x = HNum::from_cartesian(rat_int(2), rat_int(1));
    let y = HNum::from_cartesian(rat_int(1), rat_int(-1));
    println!("\nsup {{2+j, 1-j}}  = {}", sup_d([&x, &y]).unwrap().dual_string());

    // Text round trip through both canonical forms.
    let parsed: HNum = "1/2*e + 0*e+".parse().unwrap();
    assert_eq!(parsed.cartesian_string(), "1/4 + 1/4*j");
    println!("\nparsed \"1/2*e + 0*e+\" back to {}", parsed.dual_string());
}
