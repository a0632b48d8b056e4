//! Prime elements of the monoid: the combinatorial criterion and the bounded
//! brute-force oracle that cross-checks it.
//!
//! Run with: cargo run --example prime_elements

use posmon::poset::Poset;
use posmon::structure::{is_prime, prime_oracle, primes};

fn main() {
    // With two minimal elements the single defining relation touches every
    // generator, so nothing is prime.
    let no_primes = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();
    println!("first poset: {} prime(s)", primes(&no_primes).len());

    // With a minimum, the indicator of the whole poset is prime.
    let diamond = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .unwrap();
    for set in diamond.enumerate_irreducible_upper_sets() {
        let fast = is_prime(&diamond, &set).unwrap();
        let slow = prime_oracle(&diamond, &set, 3).unwrap();
        println!("  {set}: prime = {fast} (oracle at degree 3: {slow})");
        assert_eq!(fast, slow);
    }

    // On a chain the monoid is free, so every generator is prime.
    let chain = Poset::chain(&["x", "y", "z"]).unwrap();
    println!(
        "chain of three: {} of {} irreducibles prime",
        primes(&chain).len(),
        chain.enumerate_irreducible_upper_sets().len()
    );
}
