//! The cone of rational monotone functions: extremal rays, facets, witnesses
//! for facet minimality, and the simplicial cover by maximal near-chains.
//!
//! Run with: cargo run --example cone_geometry

use posmon::monoid::maximal_near_chains;
use posmon::poset::Poset;
use posmon::structure::cone_description;

fn main() {
    let poset = Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap();
    let cone = cone_description(&poset);

    println!("extremal rays (irreducible indicators):");
    for ray in cone.ray_vectors() {
        println!("  {ray:?}");
    }

    println!("facets and their minimality witnesses:");
    for &facet in cone.facets() {
        let witness = cone.facet_witness(facet);
        let violated: Vec<usize> = cone
            .facets()
            .iter()
            .enumerate()
            .filter(|&(_, f)| !cone.facet_holds(*f, &witness))
            .map(|(i, _)| i)
            .collect();
        println!("  {facet:?}  witness {witness:?} violates only facet {violated:?}");
    }

    // Maximal near-chains index the full-dimensional cones of a triangulation.
    println!("maximal near-chains:");
    for family in maximal_near_chains(&poset) {
        let names: Vec<String> = family.iter().map(|s| s.to_string()).collect();
        println!("  {}", names.join(" "));
    }
}
