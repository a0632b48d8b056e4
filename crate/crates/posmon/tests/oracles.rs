//! Definition-level cross-checks that are too heavy for unit tests: partition
//! uniqueness on eight-element posets, the complement bijection between
//! induced posets of complementary ranks, maximal near-chain properties, and
//! the Dedekind prefix.

mod common;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use posmon::counting::{count_irreducibles, dedekind_column, CountOptions, DEDEKIND};
use posmon::matroid::Matroid;
use posmon::monoid::{maximal_near_chains, near_chain_pair, presentation};
use posmon::poset::Bits;
use posmon::structure::cm_type;

#[test]
fn partition_uniqueness_up_to_eight_elements() {
    let mut rng = SmallRng::seed_from_u64(81);
    let mut posets = common::named_posets();
    for _ in 0..6 {
        posets.push(common::random_poset(&mut rng, 8));
    }
    for poset in posets {
        if poset.len() > 8 {
            continue;
        }
        for mask in common::all_upper_masks(&poset) {
            assert_eq!(
                common::count_irreducible_partitions(&poset, mask),
                1,
                "mask {mask:b} of {:?}",
                poset.labels()
            );
        }
    }
}

#[test]
fn complement_map_is_an_order_isomorphism() {
    for n in 1..=5usize {
        for k in 0..=n {
            let p = Matroid::uniform(k, n).unwrap().slice_poset().unwrap();
            let q = Matroid::uniform(n - k, n).unwrap().slice_poset().unwrap();
            let full = (1u32 << n) - 1;
            // Element i of either poset is the subset with bitmask i.
            for a in 0..=full {
                for b in 0..=full {
                    assert_eq!(
                        p.lt(a as usize, b as usize),
                        q.lt((full ^ a) as usize, (full ^ b) as usize),
                        "complement map fails at U({k},{n}), {a:b} vs {b:b}"
                    );
                }
            }
        }
    }
}

#[test]
fn duality_transfers_counts_and_type() {
    let opts = CountOptions::default();
    for n in 1..=4usize {
        for k in 0..=n / 2 {
            let p = Matroid::uniform(k, n).unwrap().slice_poset().unwrap();
            let q = Matroid::uniform(n - k, n).unwrap().slice_poset().unwrap();
            let c1 = count_irreducibles(&p).unwrap().count;
            let c2 = count_irreducibles(&q).unwrap().count;
            assert_eq!(c1, c2, "counts differ at ({k},{n})");
            assert_eq!(
                cm_type(&p).unwrap(),
                cm_type(&q).unwrap(),
                "types differ at ({k},{n})"
            );
            let _ = opts;
        }
    }
}

#[test]
fn dedekind_prefix_strictly_increases() {
    let opts = CountOptions::default();
    let mut last = 0u64;
    for (n, &expected) in DEDEKIND.iter().enumerate().take(6) {
        let r = dedekind_column(n, &opts).unwrap();
        assert_eq!(r.count, expected);
        assert!(r.count > last || n == 0);
        last = r.count;
    }
}

#[test]
fn maximal_near_chain_families_are_maximal_and_covering() {
    let mut rng = SmallRng::seed_from_u64(82);
    let mut posets = common::named_posets();
    for _ in 0..8 {
        let n = rng.gen_range(3..=6);
        posets.push(common::random_poset(&mut rng, n));
    }
    for poset in posets {
        if poset.len() > 6 || poset.is_empty() {
            continue;
        }
        let irr = poset.enumerate_irreducible_upper_sets();
        let families = maximal_near_chains(&poset);
        for family in &families {
            assert!(common::is_near_chain_family(family));
            // No further irreducible extends the family.
            for candidate in &irr {
                if family.iter().any(|s| s.bits() == candidate.bits()) {
                    continue;
                }
                assert!(
                    !family.iter().all(|s| near_chain_pair(s, candidate)),
                    "family not maximal on {:?}",
                    poset.labels()
                );
            }
            // Indicators of a near-chain are linearly independent.
            let rows: Vec<Vec<i64>> = family
                .iter()
                .map(|s| s.indicator().iter().map(|&v| v as i64).collect())
                .collect();
            assert_eq!(common::rational_rank(&rows), family.len());
        }
        // Every canonical support extends to some maximal family.
        for _ in 0..20 {
            let f = common::random_monotone(&mut rng, &poset, 2);
            let support: Vec<u64> = f
                .near_chain_decomposition()
                .terms()
                .map(|(s, _)| s.bits())
                .collect();
            assert!(
                families.iter().any(|family| {
                    support
                        .iter()
                        .all(|m| family.iter().any(|s| s.bits() == *m))
                }),
                "support not covered on {:?}",
                poset.labels()
            );
        }
    }
}

#[test]
fn interior_generators_of_u34_have_the_forced_shape() {
    // Chains below the bases force value |A| + 1 on every proper subset; the
    // whole set sits below the bases and ranges over 1..=3.
    let poset = Matroid::uniform(3, 4).unwrap().slice_poset().unwrap();
    let gens = posmon::structure::interior_minimal_generators(&poset).unwrap();
    assert_eq!(gens.len(), 3);
    let full = poset.index_of("abcd").unwrap();
    let mut whole_values = Vec::new();
    for g in gens.generators() {
        for mask in 0..15u32 {
            let idx = poset
                .index_of(&posmon::matroid::subset_label(mask))
                .unwrap();
            assert_eq!(g.value(idx), mask.count_ones() as u64 + 1);
        }
        whole_values.push(g.value(full));
    }
    assert_eq!(whole_values, vec![1, 2, 3]);
}

#[test]
fn presentation_sides_always_evaluate_equal() {
    let mut rng = SmallRng::seed_from_u64(83);
    for _ in 0..10 {
        let n = rng.gen_range(2..=6);
        let poset = common::random_poset(&mut rng, n);
        for (lhs, rhs) in presentation(&poset) {
            assert_eq!(lhs.evaluate().unwrap(), rhs.evaluate().unwrap());
            // Left side is a non-near-chain pair, right side is a near-chain.
            assert!(!lhs.is_near_chain());
            assert!(rhs.is_near_chain());
        }
    }
}

#[test]
fn engine_agrees_with_enumeration_on_random_posets() {
    let mut rng = SmallRng::seed_from_u64(84);
    for _ in 0..20 {
        let n = rng.gen_range(1..=8);
        let poset = common::random_poset(&mut rng, n);
        // The internal cross-check asserts agreement for posets this small.
        let result = count_irreducibles(&poset).unwrap();
        let listed = poset.enumerate_irreducible_upper_sets();
        assert_eq!(result.count as usize, listed.len());
        for s in &listed {
            assert!(Bits(s.bits()).all(|x| x < poset.len()));
        }
    }
}
