//! Sweep every rank table on up to three elements and compare irreducible
//! counts against the uniform matroids: evidence for the maximality
//! conjectures, per rank and globally.
//!
//! Run with: cargo run --example conjecture_sweep

use posmon::counting::conjecture_sweep;

fn main() {
    for n in 1..=3usize {
        let report = conjecture_sweep(n).unwrap();
        println!(
            "n = {}: {} valid rank tables",
            report.n, report.matroid_count
        );
        for row in &report.per_rank {
            println!(
                "  rank {}: {} matroids, max count {}, uniform count {}, uniform attains max: {}",
                row.rank, row.matroids, row.max_count, row.uniform_count, row.uniform_attains_max
            );
        }
        println!(
            "  global max {} vs half-rank uniform {} => attained: {}",
            report.global_max,
            report.half_rank_uniform_count,
            report.global_attained_by_half_rank_uniform
        );
    }
}
