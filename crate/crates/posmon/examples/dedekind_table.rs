//! Produce the full table of irreducible counts with per-cell timings, the
//! same data the `table1` subcommand renders.
//!
//! Run with: cargo run --release --example dedekind_table

use std::time::Duration;

use posmon::counting::{table1, CountOptions, Table1Options, TableCell};

fn main() {
    let opts = Table1Options {
        count: CountOptions {
            threads: 0,
            budget: Some(Duration::from_secs(120)),
            cross_check: true,
        },
        // The n = 6 cells at k = 2, 3 need several minutes; set this to true
        // (and raise the budget) to compute them as well.
        stretch: false,
    };
    let table = table1(6, &opts).unwrap();
    for row in &table.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .enumerate()
            .map(|(k, cell)| match cell {
                TableCell::Exact(r) => format!("{}", r.count),
                TableCell::Dual { count, .. } => format!("{count}"),
                TableCell::Timeout { millis } => format!("timeout({millis}ms)"),
                TableCell::Skipped { .. } => format!("k={k}: opt-in"),
            })
            .collect();
        println!("n = {}: {}", row.n, cells.join("  "));
    }
}
