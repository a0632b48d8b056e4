//! The canonical near-chain form of a monotone function, and the rewriting
//! system that reaches it from any formal expression.
//!
//! Run with: cargo run --example near_chain_form

use posmon::monoid::{FormalExpr, MonotoneFunction};
use posmon::poset::Poset;

fn main() {
    let poset = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();

    // (1,1,2,2) written over the two principal upper sets.
    let irr = poset.enumerate_irreducible_upper_sets();
    let acd = irr[2].clone();
    let bcd = irr[3].clone();
    let expr = FormalExpr::from_terms(&poset, [(acd.clone(), 1), (bcd.clone(), 1)]).unwrap();
    let f = expr.evaluate().unwrap();
    println!("{acd} + {bcd} evaluates to {f}");

    // The pair overlaps without nesting, so one rewrite applies: replace the
    // two indicators by those of the intersection parts and the union.
    let rewritten = expr.rewrite_step(&acd, &bcd).unwrap();
    println!("after one rewrite: {rewritten}");
    println!(
        "degree preserved: {} = {}",
        expr.degree().unwrap(),
        rewritten.degree().unwrap()
    );
    println!(
        "strictly smaller in the term order: {:?}",
        expr.compare(&rewritten).unwrap()
    );

    // Exhaustive rewriting and direct support peeling agree.
    let normal = expr.normal_form().unwrap();
    let peeled = f.near_chain_decomposition();
    println!("normal form: {normal}");
    assert_eq!(normal, peeled);

    // A function with repeated coefficients.
    let g = MonotoneFunction::new(&poset, vec![2, 1, 4, 3]).unwrap();
    println!("{g} decomposes as {}", g.near_chain_decomposition());
}
