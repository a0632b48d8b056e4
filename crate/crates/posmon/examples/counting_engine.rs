//! Exact irreducible counts over the posets induced by uniform matroids,
//! including the Dedekind-number column at rank zero.
//!
//! Run with: cargo run --release --example counting_engine

use posmon::counting::{count_uniform, dedekind_column, CountOptions, DEDEKIND};

fn main() {
    let opts = CountOptions::default();

    println!("counts for U(k, n), k up to the symmetry axis:");
    for n in 1..=5usize {
        let mut row = Vec::new();
        for k in 0..=n / 2 {
            let r = count_uniform(k, n, &opts).unwrap();
            row.push(format!("{}", r.count));
        }
        println!("  n = {n}: {}", row.join(" "));
    }

    println!("rank-zero column equals the Dedekind numbers:");
    for (n, &expected) in DEDEKIND.iter().enumerate().take(6) {
        let r = dedekind_column(n, &opts).unwrap();
        println!("  n = {n}: {expected} ({} in {:?})", r.method, r.elapsed);
    }

    // The full n = 6 cells: rank 0 and 1 take well under a minute; ranks 2
    // and 3 are the heavyweight entries behind the --stretch flag of the
    // table1 subcommand.
    let multi = CountOptions {
        threads: 0,
        ..CountOptions::default()
    };
    for k in [0usize, 1] {
        let r = count_uniform(k, 6, &multi).unwrap();
        println!("U({k},6) = {} in {:?}", r.count, r.elapsed);
    }
}
