//! From a matroid to a poset: the divisibility digraph on subsets, the order
//! it induces, and prime-wise slicing of multiplicities.
//!
//! Run with: cargo run --example slice_posets

use posmon::matroid::{subset_label, Matroid, MultiplicityFunction};
use posmon::poset::Bits;

fn main() {
    let lc = Matroid::from_rank_table(2, vec![0, 1, 0, 1]).unwrap();
    let graph = lc.digraph();
    println!("digraph edges (tail -> head):");
    for (t, h) in graph.edges() {
        println!("  {{{}}} -> {{{}}}", subset_label(*t), subset_label(*h));
    }
    println!(
        "sinks are the bases: {:?}",
        graph.sinks().iter().map(|&s| subset_label(s)).collect::<Vec<_>>()
    );

    // The induced poset of U(1,2) has two minimal and two maximal elements.
    let poset = Matroid::uniform(1, 2).unwrap().slice_poset().unwrap();
    println!("induced poset of U(1,2):");
    println!(
        "  minimal: {:?}",
        Bits(poset.minimals()).map(|x| poset.label(x)).collect::<Vec<_>>()
    );
    println!(
        "  maximal: {:?}",
        Bits(poset.maximals()).map(|x| poset.label(x)).collect::<Vec<_>>()
    );
    println!(
        "  irreducible upper sets: {}",
        poset.enumerate_irreducible_upper_sets().len()
    );

    // Slicing splits a multiplicity into one exponent table per prime and
    // loses nothing.
    let mult = MultiplicityFunction::from_u64(2, &[6, 12, 10, 360]).unwrap();
    println!("support primes of {:?}: {:?}", [6, 12, 10, 360], mult.support_primes());
    let slices: Vec<_> = mult
        .support_primes()
        .into_iter()
        .map(|p| mult.p_slice(p).unwrap())
        .collect();
    for s in &slices {
        println!("  p = {}: exponents {:?}", s.prime(), s.values());
    }
    assert_eq!(MultiplicityFunction::reconstruct(&slices).unwrap(), mult);
    println!("reconstruction from all slices is exact");
}
