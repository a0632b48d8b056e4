//! The defining relations of the monoid and the Groebner basis of the toric
//! ideal of its monoid ring, with the text export format.
//!
//! Run with: cargo run --example presentation_and_groebner

use posmon::json::{groebner_text, presentation_text};
use posmon::monoid::{groebner_basis, presentation};
use posmon::poset::Poset;

fn main() {
    let two_by_two = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();
    let diamond = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .unwrap();
    let chain = Poset::chain(&["a", "b", "c", "d"]).unwrap();

    for (name, poset) in [
        ("two minimal below two maximal", &two_by_two),
        ("diamond", &diamond),
        ("chain", &chain),
    ] {
        let rels = presentation(poset);
        println!("== {name}: {} relation(s)", rels.len());
        print!("{}", presentation_text(&rels));
        let basis = groebner_basis(poset);
        print!("{}", groebner_text(poset, &basis));
        println!();
    }
    // A chain has nested generators only, so its monoid is free and both
    // exports are empty.
}
