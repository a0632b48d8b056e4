//! Shared oracles and generators for the integration suites.
//!
//! Everything here recomputes results straight from definitions, independent
//! of the library's algorithmic path, so the suites can cross-check the two.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::SmallRng;
use rand::Rng;

use posmon::monoid::{near_chain_pair, MonotoneFunction};
use posmon::poset::{Bits, Poset};

/// The worked example with two minimal and two maximal elements.
pub fn p1() -> Poset {
    Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
    .unwrap()
}

/// The diamond a < b < d, a < c < d.
pub fn p2() -> Poset {
    Poset::from_relations(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .unwrap()
}

/// The chain a < b < c < e with the extra minimal element d < e.
pub fn p3() -> Poset {
    Poset::from_relations(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "e"), ("d", "e")],
    )
    .unwrap()
}

const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// A hand-picked family of small posets covering the shapes the suites need.
pub fn named_posets() -> Vec<Poset> {
    let mut out = vec![
        p1(),
        p2(),
        p3(),
        Poset::antichain(&["a"]).unwrap(),
        Poset::chain(&["a", "b", "c"]).unwrap(),
        Poset::chain(&["a", "b", "c", "d", "e", "f"]).unwrap(),
        Poset::antichain(&["a", "b", "c", "d"]).unwrap(),
        // N shape: x < z, y < z, y < w.
        Poset::from_relations(&["x", "y", "z", "w"], &[("x", "z"), ("y", "z"), ("y", "w")])
            .unwrap(),
        // Three-element fan below a top plus an isolated point.
        Poset::from_relations(
            &["a", "b", "c", "t", "i"],
            &[("a", "t"), ("b", "t"), ("c", "t")],
        )
        .unwrap(),
        // Crown on six elements.
        Poset::from_relations(
            &["a", "b", "c", "x", "y", "z"],
            &[
                ("a", "x"),
                ("a", "y"),
                ("b", "y"),
                ("b", "z"),
                ("c", "z"),
                ("c", "x"),
            ],
        )
        .unwrap(),
    ];
    for n in 1..=3 {
        for r in 0..=n {
            out.push(
                posmon::matroid::Matroid::uniform(r, n)
                    .unwrap()
                    .slice_poset()
                    .unwrap(),
            );
        }
    }
    out
}

/// Every labeled strict order on exactly `n <= 4` elements, by brute force
/// over relation sets.
pub fn all_posets_on(n: usize) -> Vec<Poset> {
    assert!(n <= 4, "exhaustive poset listing is for n <= 4");
    let labels: Vec<&str> = LABELS[..n].to_vec();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    'candidates: for choice in 0u32..(1 << pairs.len()) {
        let has = |i: usize, j: usize| -> bool {
            let idx = pairs.iter().position(|&p| p == (i, j)).unwrap();
            choice & (1 << idx) != 0
        };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if has(i, j) && has(j, i) {
                    continue 'candidates;
                }
                for k in 0..n {
                    if k != i && k != j && has(i, j) && has(j, k) && !has(i, k) {
                        continue 'candidates;
                    }
                }
            }
        }
        let rel: Vec<(&str, &str)> = pairs
            .iter()
            .enumerate()
            .filter(|(idx, _)| choice & (1 << idx) != 0)
            .map(|(_, &(i, j))| (labels[i], labels[j]))
            .collect();
        out.push(Poset::from_relations(&labels, &rel).unwrap());
    }
    out
}

/// A random poset on `n <= 8` elements: random forward edges, then closure.
pub fn random_poset(rng: &mut SmallRng, n: usize) -> Poset {
    assert!(n <= 8);
    let labels: Vec<&str> = LABELS[..n].to_vec();
    let density: f64 = rng.gen_range(0.1..0.5);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((labels[i], labels[j]));
            }
        }
    }
    Poset::from_relations(&labels, &rel).unwrap()
}

/// A random monotone function with cover gaps up to `step`.
pub fn random_monotone(rng: &mut SmallRng, poset: &Poset, step: u64) -> MonotoneFunction {
    let mut values = vec![0u64; poset.len()];
    for &x in poset.linear_extension() {
        let floor = Bits(poset.covers_dn(x)).map(|y| values[y]).max().unwrap_or(0);
        values[x] = floor + rng.gen_range(0..=step);
    }
    MonotoneFunction::new(poset, values).unwrap()
}

/// All up-closed masks of a small poset.
pub fn all_upper_masks(poset: &Poset) -> Vec<u64> {
    (0u64..(1 << poset.len()))
        .filter(|&m| poset.is_upper_mask(m))
        .collect()
}

/// Definitional irreducibility: nonempty and not splittable into two disjoint
/// nonempty upper sets.
pub fn brute_force_irreducible(poset: &Poset, mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut sub = (mask.wrapping_sub(1)) & mask;
    while sub != 0 {
        if poset.is_upper_mask(sub) && poset.is_upper_mask(mask & !sub) {
            return false;
        }
        sub = (sub.wrapping_sub(1)) & mask;
    }
    true
}

/// Counts the partitions of an upper set into irreducible upper sets.
pub fn count_irreducible_partitions(poset: &Poset, mask: u64) -> usize {
    if mask == 0 {
        return 1;
    }
    // The lowest set bit must land in some irreducible upper subset.
    let anchor = mask & mask.wrapping_neg();
    let mut total = 0;
    let mut part = mask;
    loop {
        if part & anchor != 0
            && poset.is_upper_mask(part)
            && brute_force_irreducible(poset, part)
        {
            total += count_irreducible_partitions(poset, mask & !part);
        }
        if part == 0 {
            break;
        }
        part = (part.wrapping_sub(1)) & mask;
    }
    total
}

/// Counts near-chain expressions over irreducible upper sets that evaluate to
/// `f`, by exhaustive search in the fixed generator order.
pub fn count_near_chain_expressions(poset: &Poset, f: &MonotoneFunction) -> usize {
    let irr = poset.enumerate_irreducible_upper_sets();
    let masks: Vec<u64> = irr.iter().map(|s| s.bits()).collect();
    fn compatible(chosen: &[u64], cand: u64) -> bool {
        chosen
            .iter()
            .all(|&c| c & cand == 0 || c & !cand == 0 || cand & !c == 0)
    }
    fn rec(
        masks: &[u64],
        i: usize,
        residual: &mut [u64],
        chosen: &mut Vec<u64>,
        found: &mut usize,
    ) {
        if residual.iter().all(|&v| v == 0) {
            *found += 1;
            return;
        }
        if i == masks.len() {
            return;
        }
        // Skipping this generator entirely.
        rec(masks, i + 1, residual, chosen, found);
        let set = masks[i];
        if !compatible(chosen, set) {
            return;
        }
        let max_c = Bits(set).map(|x| residual[x]).min().unwrap_or(0);
        if max_c == 0 {
            return;
        }
        chosen.push(set);
        for _ in 1..=max_c {
            for x in Bits(set) {
                residual[x] -= 1;
            }
            rec(masks, i + 1, residual, chosen, found);
        }
        for x in Bits(set) {
            residual[x] += max_c;
        }
        chosen.pop();
    }
    let mut residual: Vec<u64> = f.values().to_vec();
    let mut found = 0;
    rec(&masks, 0, &mut residual, &mut Vec::new(), &mut found);
    found
}

/// Enumerates every monotone integer vector with values at most `cap`.
pub fn all_monotone_points(poset: &Poset, cap: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let order = poset.linear_extension().to_vec();
    let mut values = vec![0u64; poset.len()];
    fn rec(
        poset: &Poset,
        order: &[usize],
        depth: usize,
        cap: u64,
        values: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if depth == order.len() {
            out.push(values.clone());
            return;
        }
        let x = order[depth];
        let lo = Bits(poset.covers_dn(x)).map(|y| values[y]).max().unwrap_or(0);
        for v in lo..=cap {
            values[x] = v;
            rec(poset, order, depth + 1, cap, values, out);
        }
        values[x] = 0;
    }
    rec(poset, &order, 0, cap, &mut values, &mut out);
    out
}

fn ratio(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Exact-rational feasibility of `columns * a = target, a >= 0`, by phase-one
/// simplex with Bland's rule.
#[allow(clippy::needless_range_loop)]
pub fn is_nonneg_rational_combination(columns: &[Vec<i64>], target: &[i64]) -> bool {
    let m = target.len();
    let k = columns.len();
    if m == 0 {
        return true;
    }
    // Flip rows to make the right-hand side nonnegative.
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut b: Vec<BigRational> = Vec::with_capacity(m);
    for row in 0..m {
        let flip = target[row] < 0;
        let sign = if flip { -1 } else { 1 };
        a.push(
            (0..k)
                .map(|col| ratio(sign * columns[col][row]))
                .collect(),
        );
        b.push(ratio(sign * target[row]));
    }
    // Artificial basis; phase-one objective is the sum of artificials.
    let total_cols = k + m;
    let mut tableau: Vec<Vec<BigRational>> = (0..m)
        .map(|row| {
            let mut r: Vec<BigRational> = Vec::with_capacity(total_cols + 1);
            r.extend(a[row].iter().cloned());
            for art in 0..m {
                r.push(if art == row {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            r.push(b[row].clone());
            r
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Reduced-cost row for minimizing the artificial sum.
    let mut obj: Vec<BigRational> = vec![BigRational::zero(); total_cols + 1];
    for row in 0..m {
        for col in 0..=total_cols {
            let v = tableau[row][col].clone();
            obj[col] += v;
        }
    }

    while let Some(entering) = (0..k).find(|&col| obj[col].is_positive()) {
        let mut leaving: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for row in 0..m {
            if tableau[row][entering].is_positive() {
                let r = &tableau[row][total_cols] / &tableau[row][entering];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        &r < b || (&r == b && basis[row] < basis[leaving.unwrap()])
                    }
                };
                if better {
                    best = Some(r);
                    leaving = Some(row);
                }
            }
        }
        let Some(pivot_row) = leaving else {
            // Unbounded phase-one cannot happen; treat as infeasible.
            return false;
        };
        let pivot = tableau[pivot_row][entering].clone();
        for col in 0..=total_cols {
            tableau[pivot_row][col] /= pivot.clone();
        }
        for row in 0..m {
            if row != pivot_row && !tableau[row][entering].is_zero() {
                let factor = tableau[row][entering].clone();
                for col in 0..=total_cols {
                    let delta = &factor * &tableau[pivot_row][col];
                    tableau[row][col] -= delta;
                }
            }
        }
        if !obj[entering].is_zero() {
            let factor = obj[entering].clone();
            for col in 0..=total_cols {
                let delta = &factor * &tableau[pivot_row][col];
                obj[col] -= delta;
            }
        }
        basis[pivot_row] = entering;
    }
    obj[total_cols].is_zero()
}

/// Rank of an integer matrix over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| ratio(v)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for c in col..cols {
            m[rank][c] /= lead.clone();
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Checks that a family of upper sets is a near-chain.
pub fn is_near_chain_family(sets: &[posmon::poset::UpperSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets[i + 1..].iter().all(|b| near_chain_pair(a, b))
    })
}

/// Every valid rank table on `n <= 3` labeled elements.
pub fn all_valid_rank_tables(n: usize) -> Vec<posmon::matroid::Matroid> {
    use posmon::matroid::Matroid;
    assert!(n <= 3);
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    let mut out = Vec::new();
    fn fill(table: &mut Vec<u8>, idx: usize, n: usize, out: &mut Vec<Matroid>) {
        if idx == table.len() {
            let m = Matroid::from_rank_table(n, table.clone()).unwrap();
            if m.is_valid() {
                out.push(m);
            }
            return;
        }
        let cap = if idx == 0 { 0 } else { (idx as u32).count_ones() as u8 };
        for r in 0..=cap {
            table[idx] = r;
            fill(table, idx + 1, n, out);
        }
    }
    fill(&mut table, 0, n, &mut out);
    out
}
