//! Matroids as rank tables: validation, deletion and contraction, molecules,
//! and the three multiplicity-function axioms.
//!
//! Run with: cargo run --example matroid_axioms

use posmon::matroid::{check_a1, check_a2, check_p, Matroid, MultiplicityFunction};

fn main() {
    let u24 = Matroid::uniform(2, 4).unwrap();
    println!("U(2,4) valid: {}", u24.is_valid());
    println!("bases: {:?}", u24.bases());
    println!(
        "contraction by an element equals U(1,3): {}",
        u24.contraction(0).unwrap() == Matroid::uniform(1, 3).unwrap()
    );
    println!(
        "nontrivial molecules of U(2,4): {}",
        u24.molecules(true).len()
    );

    // One coloop and one loop; the smallest matroid with a nontrivial
    // molecule.
    let lc = Matroid::from_rank_table(2, vec![0, 1, 0, 1]).unwrap();
    println!("loop-coloop molecules:");
    for m in lc.molecules(true) {
        println!("  {m}");
    }

    // A multiplicity that satisfies all three axioms, and one that breaks
    // the molecule identity.
    let good = MultiplicityFunction::from_u64(2, &[2, 12, 2, 12]).unwrap();
    let bad = MultiplicityFunction::from_u64(2, &[1, 2, 1, 3]).unwrap();
    for (name, m) in [("good", &good), ("bad", &bad)] {
        println!(
            "{name}: A1 = {}, A2 = {}, P = {}",
            check_a1(&lc, m).unwrap(),
            check_a2(&lc, m).unwrap(),
            check_p(&lc, m).unwrap()
        );
    }

    // Axioms survive pointwise products.
    let squared = good.multiply(&good).unwrap();
    println!(
        "product of the good one with itself: A1 = {}, A2 = {}, P = {}",
        check_a1(&lc, &squared).unwrap(),
        check_a2(&lc, &squared).unwrap(),
        check_p(&lc, &squared).unwrap()
    );

    // An invalid rank table, caught by the validator.
    let broken = Matroid::from_rank_table(2, vec![0, 1, 1, 0]).unwrap();
    for violation in broken.validate() {
        println!("violation: {violation}");
    }
}
