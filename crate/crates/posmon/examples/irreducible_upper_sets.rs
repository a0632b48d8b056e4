//! Build a poset from relation pairs and list its irreducible upper sets,
//! the index set of the minimal generators of the monoid of monotone
//! functions.
//!
//! Run with: cargo run --example irreducible_upper_sets

use posmon::poset::Poset;

fn main() {
    // Two minimal elements a, b below two maximal elements c, d.
    let poset = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();

    println!("covers: {:?}", poset.covers());

    println!("irreducible upper sets:");
    for set in poset.enumerate_irreducible_upper_sets() {
        println!("  {set}  indicator {:?}", set.indicator());
    }

    // {c, d} is an upper set but splits into two irreducible parts.
    let cd = poset.upper_set(poset.mask_of(&["c", "d"]).unwrap()).unwrap();
    println!(
        "is {{c,d}} irreducible? {}",
        poset.is_irreducible_upper_set(&cd).unwrap()
    );
    let parts: Vec<String> = poset
        .decompose_upper_set(&cd)
        .unwrap()
        .iter()
        .map(|p| p.to_string())
        .collect();
    println!("unique decomposition of {{c,d}}: {}", parts.join(" | "));

    // The up-closure of {a} climbs to everything above a.
    let up_a = poset.up_closure(poset.mask_of(&["a"]).unwrap());
    println!("up-closure of {{a}}: {up_a}");
}
