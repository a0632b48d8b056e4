//! The Gorenstein test via level functions and the Cohen-Macaulay type via
//! minimal interior lattice points.
//!
//! Run with: cargo run --example gorenstein_and_type

use posmon::poset::Poset;
use posmon::structure::{cm_type, interior_minimal_generators, level_function};

fn main() {
    // A chain of unequal height on one side: not graded, type three.
    let poset = Poset::from_relations(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "e"), ("d", "e")],
    )
    .unwrap();

    match level_function(&poset) {
        Some(level) => println!("graded with level {:?}", level.values()),
        None => println!("not graded: maximal chains to e have different lengths"),
    }

    let gens = interior_minimal_generators(&poset).unwrap();
    println!("minimal generators of the interior:");
    for g in gens.generators() {
        println!("  {g}");
    }
    println!("Cohen-Macaulay type: {}", cm_type(&poset).unwrap());

    // A graded poset has a level function and type one.
    let chain = Poset::chain(&["a", "b", "c", "d"]).unwrap();
    let level = level_function(&chain).expect("chains are graded");
    println!(
        "chain: level {:?}, type {}",
        level.values(),
        cm_type(&chain).unwrap()
    );
    assert_eq!(
        interior_minimal_generators(&chain).unwrap().generators()[0].values(),
        level.values()
    );
}
