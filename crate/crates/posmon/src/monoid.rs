//! The additive monoid of natural-valued monotone functions on a poset.
//!
//! Monotone functions are generated by the indicator functions of irreducible
//! upper sets. Every function has a unique expression over a *near-chain*, a
//! family of irreducible upper sets in which every pair is nested or disjoint.
//! This module provides that canonical form, the rewriting system that reaches
//! it from any formal expression, the induced presentation of the monoid, and
//! the Groebner basis of the defining ideal of its monoid ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::ExprError;
use crate::poset::{Bits, Poset, UpperSet};

/// A monotone function P -> N, stored as one value per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneFunction {
    poset: Poset,
    values: Vec<u64>,
}

impl MonotoneFunction {
    /// Wraps a value vector, checking monotonicity along covers.
    pub fn new(poset: &Poset, values: Vec<u64>) -> Result<Self, ExprError> {
        if values.len() != poset.len() {
            return Err(ExprError::PosetMismatch);
        }
        for &(x, y) in poset.covers() {
            if values[x] > values[y] {
                return Err(ExprError::NotMonotone {
                    lower: poset.label(x).to_owned(),
                    upper: poset.label(y).to_owned(),
                });
            }
        }
        Ok(MonotoneFunction {
            poset: poset.clone(),
            values,
        })
    }

    pub fn zero(poset: &Poset) -> Self {
        MonotoneFunction {
            poset: poset.clone(),
            values: vec![0; poset.len()],
        }
    }

    /// The indicator function of an upper set.
    pub fn indicator(upper: &UpperSet) -> Self {
        MonotoneFunction {
            poset: upper.poset().clone(),
            values: upper.indicator(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, x: usize) -> u64 {
        self.values[x]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Mask of elements with nonzero value; always an upper set.
    pub fn support(&self) -> u64 {
        let mut m = 0u64;
        for (x, &v) in self.values.iter().enumerate() {
            if v > 0 {
                m |= 1 << x;
            }
        }
        m
    }

    /// Sum of all values.
    pub fn degree(&self) -> Result<u64, ExprError> {
        self.values
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .ok_or(ExprError::ArithmeticOverflow)
    }

    /// Pointwise sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ExprError> {
        if self.poset != other.poset {
            return Err(ExprError::PosetMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.checked_add(b).ok_or(ExprError::ArithmeticOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonotoneFunction {
            poset: self.poset.clone(),
            values,
        })
    }

    /// `self - other` when the difference is again monotone and nonnegative,
    /// i.e. when `other` divides `self` in the monoid.
    pub fn try_sub(&self, other: &Self) -> Option<Self> {
        if self.poset != other.poset {
            return None;
        }
        let values: Vec<u64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()?;
        for &(x, y) in self.poset.covers() {
            if values[x] > values[y] {
                return None;
            }
        }
        Some(MonotoneFunction {
            poset: self.poset.clone(),
            values,
        })
    }

    /// Divisibility in the monoid: true iff `other - self` is again monotone.
    pub fn divides(&self, other: &Self) -> bool {
        other.try_sub(self).is_some()
    }

    /// The unique near-chain expression evaluating to this function.
    ///
    /// Works by support peeling: split the support into irreducible parts,
    /// strip as many copies of each part's indicator as fit without shrinking
    /// the part below its minimum, and recurse inside each part.
    pub fn near_chain_decomposition(&self) -> NearChainExpr {
        let mut terms: BTreeMap<UpperSet, u64> = BTreeMap::new();
        let mut values = self.values.clone();
        let mut regions: Vec<u64> = vec![self.support()];
        while let Some(region) = regions.pop() {
            // Region is an up-closed support piece with all-positive values.
            for part in self.poset.components_within(region) {
                let lowest = Bits(part).map(|x| values[x]).min().expect("nonempty part");
                debug_assert!(lowest > 0);
                let upper = self.poset.upper_set_unchecked(part);
                *terms.entry(upper).or_insert(0) += lowest;
                let mut remainder = 0u64;
                for x in Bits(part) {
                    values[x] -= lowest;
                    if values[x] > 0 {
                        remainder |= 1 << x;
                    }
                }
                if remainder != 0 {
                    regions.push(remainder);
                }
            }
        }
        NearChainExpr {
            expr: FormalExpr {
                poset: self.poset.clone(),
                terms,
            },
        }
    }
}

impl fmt::Display for MonotoneFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// True when the pair is nested or disjoint.
pub fn near_chain_pair(a: &UpperSet, b: &UpperSet) -> bool {
    let (x, y) = (a.bits(), b.bits());
    x & y == 0 || x & !y == 0 || y & !x == 0
}

/// A formal nonnegative combination of irreducible upper sets.
///
/// Terms map each irreducible upper set to a positive coefficient; the
/// near-chain condition is not required here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalExpr {
    poset: Poset,
    terms: BTreeMap<UpperSet, u64>,
}

impl FormalExpr {
    pub fn empty(poset: &Poset) -> Self {
        FormalExpr {
            poset: poset.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds an expression from (set, coefficient) pairs, accumulating
    /// repeats. Every set must be an irreducible upper set of the poset.
    pub fn from_terms<I>(poset: &Poset, terms: I) -> Result<Self, ExprError>
    where
        I: IntoIterator<Item = (UpperSet, u64)>,
    {
        let mut expr = FormalExpr::empty(poset);
        for (set, coeff) in terms {
            expr.add_term(set, coeff)?;
        }
        Ok(expr)
    }

    /// Adds `coeff` copies of an irreducible upper set.
    pub fn add_term(&mut self, set: UpperSet, coeff: u64) -> Result<(), ExprError> {
        if set.poset() != &self.poset {
            return Err(ExprError::PosetMismatch);
        }
        if !self
            .poset
            .is_irreducible_upper_set(&set)
            .map_err(|_| ExprError::NotIrreducibleTerm)?
        {
            return Err(ExprError::NotIrreducibleTerm);
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(set).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(ExprError::ArithmeticOverflow)?;
        Ok(())
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Terms in the fixed (cardinality, bitmask) order.
    pub fn terms(&self) -> impl Iterator<Item = (&UpperSet, u64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coefficient(&self, set: &UpperSet) -> u64 {
        self.terms.get(set).copied().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficient times cardinality over all terms.
    pub fn degree(&self) -> Result<u64, ExprError> {
        let mut acc: u64 = 0;
        for (set, coeff) in self.terms() {
            let d = coeff
                .checked_mul(set.len() as u64)
                .ok_or(ExprError::ArithmeticOverflow)?;
            acc = acc.checked_add(d).ok_or(ExprError::ArithmeticOverflow)?;
        }
        Ok(acc)
    }

    /// The monotone function this expression stands for.
    pub fn evaluate(&self) -> Result<MonotoneFunction, ExprError> {
        let mut values = vec![0u64; self.poset.len()];
        for (set, coeff) in self.terms() {
            for x in Bits(set.bits()) {
                values[x] = values[x]
                    .checked_add(coeff)
                    .ok_or(ExprError::ArithmeticOverflow)?;
            }
        }
        Ok(MonotoneFunction {
            poset: self.poset.clone(),
            values,
        })
    }

    /// True when the support family is pairwise nested or disjoint.
    pub fn is_near_chain(&self) -> bool {
        let sets: Vec<&UpperSet> = self.terms.keys().collect();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if !near_chain_pair(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Total preorder: degree first, then reverse lexicographic comparison of
    /// coefficient vectors over the fixed generator order. A single rewrite
    /// strictly decreases this order.
    pub fn compare(&self, other: &Self) -> Result<Ordering, ExprError> {
        if self.poset != other.poset {
            return Err(ExprError::PosetMismatch);
        }
        match self.degree()?.cmp(&other.degree()?) {
            Ordering::Equal => {}
            ord => return Ok(ord),
        }
        // Walk the union of keys from the largest generator downwards; at the
        // first difference the expression with the smaller coefficient is the
        // larger expression.
        let mut left = self.terms.iter().rev().peekable();
        let mut right = other.terms.iter().rev().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return Ok(Ordering::Equal),
                (Some(_), None) => {
                    // Only self holds this key, so self has the larger
                    // coefficient there and compares smaller.
                    return Ok(Ordering::Less);
                }
                (None, Some(_)) => return Ok(Ordering::Greater),
                (Some((ls, lc)), Some((rs, rc))) => match ls.cmp(rs) {
                    Ordering::Greater => return Ok(Ordering::Less),
                    Ordering::Less => return Ok(Ordering::Greater),
                    Ordering::Equal => {
                        if lc != rc {
                            return Ok(if lc < rc { Ordering::Greater } else { Ordering::Less });
                        }
                        left.next();
                        right.next();
                    }
                },
            }
        }
    }

    /// Replaces one copy of `i` plus one copy of `j` by the indicators of the
    /// irreducible parts of their intersection and union.
    ///
    /// Requires both sets present with positive coefficient and `{i, j}` not a
    /// near-chain. Evaluation is preserved and the result is strictly smaller
    /// under [`FormalExpr::compare`].
    pub fn rewrite_step(&self, i: &UpperSet, j: &UpperSet) -> Result<FormalExpr, ExprError> {
        if i.poset() != &self.poset || j.poset() != &self.poset {
            return Err(ExprError::PosetMismatch);
        }
        if self.coefficient(i) == 0 || self.coefficient(j) == 0 || near_chain_pair(i, j) {
            return Err(ExprError::NotApplicable);
        }
        let mut out = self.clone();
        for s in [i, j] {
            let c = out.terms.get_mut(s).expect("present by the check above");
            *c -= 1;
            if *c == 0 {
                out.terms.remove(s);
            }
        }
        let meet = self.poset.upper_set_unchecked(i.bits() & j.bits());
        let join = self.poset.upper_set_unchecked(i.bits() | j.bits());
        for part in self.poset.decompose_upper_set(&meet).expect("upper set") {
            out.add_term(part, 1)?;
        }
        for part in self.poset.decompose_upper_set(&join).expect("upper set") {
            out.add_term(part, 1)?;
        }
        Ok(out)
    }

    /// Applies rewrite steps until no violating pair remains, always picking
    /// the lexicographically smallest violating pair under the fixed generator
    /// order. Any strategy terminates and reaches the same near-chain.
    pub fn normal_form(&self) -> Result<NearChainExpr, ExprError> {
        let mut cur = self.clone();
        'outer: loop {
            let sets: Vec<UpperSet> = cur.terms.keys().cloned().collect();
            for a in 0..sets.len() {
                for b in a + 1..sets.len() {
                    if !near_chain_pair(&sets[a], &sets[b]) {
                        cur = cur.rewrite_step(&sets[a], &sets[b])?;
                        continue 'outer;
                    }
                }
            }
            return Ok(NearChainExpr { expr: cur });
        }
    }
}

impl fmt::Display for FormalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| {
                if c == 1 {
                    s.to_string()
                } else {
                    format!("{c}*{s}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A formal expression whose support is a near-chain; the canonical form of a
/// monotone function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearChainExpr {
    expr: FormalExpr,
}

impl NearChainExpr {
    pub fn expr(&self) -> &FormalExpr {
        &self.expr
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UpperSet, u64)> {
        self.expr.terms()
    }

    pub fn term_count(&self) -> usize {
        self.expr.term_count()
    }

    pub fn is_empty(&self) -> bool {
        self.expr.is_empty()
    }

    pub fn evaluate(&self) -> Result<MonotoneFunction, ExprError> {
        self.expr.evaluate()
    }
}

impl TryFrom<FormalExpr> for NearChainExpr {
    type Error = ExprError;

    fn try_from(expr: FormalExpr) -> Result<Self, ExprError> {
        if expr.is_near_chain() {
            Ok(NearChainExpr { expr })
        } else {
            Err(ExprError::NotApplicable)
        }
    }
}

impl fmt::Display for NearChainExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt(f)
    }
}

/// One defining relation of the monoid ring, as a binomial on the generator
/// variables: `lhs.0 * lhs.1 - product(rhs)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRelation {
    pub lhs: (UpperSet, UpperSet),
    pub rhs: Vec<UpperSet>,
}

/// Renders a generator variable as `x_{a,c,d}`.
pub fn variable_name(set: &UpperSet) -> String {
    format!("x_{{{}}}", set.member_labels().join(","))
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = self.rhs.iter().map(variable_name).collect();
        write!(
            f,
            "{}*{} - {}",
            variable_name(&self.lhs.0),
            variable_name(&self.lhs.1),
            rhs.join("*")
        )
    }
}

/// One relation per unordered non-near-chain pair of irreducible upper sets:
/// the pair's indicator sum equals the indicator sum of the irreducible parts
/// of their intersection and union. This is a canonical basis for the kernel
/// congruence of the evaluation morphism.
pub fn presentation(poset: &Poset) -> Vec<(FormalExpr, FormalExpr)> {
    let irr = poset.enumerate_irreducible_upper_sets();
    let mut out = Vec::new();
    for a in 0..irr.len() {
        for b in a + 1..irr.len() {
            if near_chain_pair(&irr[a], &irr[b]) {
                continue;
            }
            let lhs = FormalExpr::from_terms(
                poset,
                [(irr[a].clone(), 1), (irr[b].clone(), 1)],
            )
            .expect("irreducible generators");
            let rhs = lhs
                .rewrite_step(&irr[a], &irr[b])
                .expect("pair checked violating");
            out.push((lhs, rhs));
        }
    }
    out
}

/// The binomials of [`presentation`] on the variables `x_I`, forming a
/// Groebner basis of the defining ideal for the degree-then-revlex order.
pub fn groebner_basis(poset: &Poset) -> Vec<BinomialRelation> {
    presentation(poset)
        .into_iter()
        .map(|(lhs, rhs)| {
            let mut it = lhs.terms();
            let (a, ca) = it.next().expect("binary left side");
            let pair = if ca == 2 {
                (a.clone(), a.clone())
            } else {
                let (b, _) = it.next().expect("binary left side");
                (a.clone(), b.clone())
            };
            let mut parts = Vec::new();
            for (s, c) in rhs.terms() {
                for _ in 0..c {
                    parts.push(s.clone());
                }
            }
            BinomialRelation {
                lhs: pair,
                rhs: parts,
            }
        })
        .collect()
}

/// All near-chains that are maximal under inclusion, as families of
/// irreducible upper sets. Every monotone function's canonical support extends
/// to at least one returned family.
pub fn maximal_near_chains(poset: &Poset) -> Vec<Vec<UpperSet>> {
    let irr = poset.enumerate_irreducible_upper_sets();
    let n = irr.len();
    let words = n.div_ceil(64);
    // Compatibility adjacency: nested or disjoint.
    let mut adj = vec![vec![0u64; words]; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && near_chain_pair(&irr[a], &irr[b]) {
                adj[a][b / 64] |= 1 << (b % 64);
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut all = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    if n == 0 {
        return Vec::new();
    }
    bron_kerbosch(
        &adj,
        &mut Vec::new(),
        all,
        vec![0u64; words],
        &mut cliques,
    );
    let mut out: Vec<Vec<UpperSet>> = cliques
        .into_iter()
        .map(|mut ix| {
            ix.sort_unstable();
            ix.into_iter().map(|i| irr[i].clone()).collect()
        })
        .collect();
    out.sort();
    out
}

fn word_ones(set: &[u64]) -> u32 {
    set.iter().map(|w| w.count_ones()).sum()
}

fn bron_kerbosch(
    adj: &[Vec<u64>],
    current: &mut Vec<usize>,
    mut candidates: Vec<u64>,
    mut excluded: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if word_ones(&candidates) == 0 && word_ones(&excluded) == 0 {
        out.push(current.clone());
        return;
    }
    // Pivot on the candidate or excluded vertex with most candidate neighbours.
    let pivot = (0..adj.len())
        .filter(|&v| {
            (candidates[v / 64] | excluded[v / 64]) & (1 << (v % 64)) != 0
        })
        .max_by_key(|&v| {
            adj[v]
                .iter()
                .zip(&candidates)
                .map(|(a, c)| (a & c).count_ones())
                .sum::<u32>()
        })
        .expect("nonempty by the branch above");
    let branch: Vec<usize> = (0..adj.len())
        .filter(|&v| {
            candidates[v / 64] & (1 << (v % 64)) != 0
                && adj[pivot][v / 64] & (1 << (v % 64)) == 0
        })
        .collect();
    for v in branch {
        let neigh = &adj[v];
        current.push(v);
        let next_cand: Vec<u64> = candidates.iter().zip(neigh).map(|(c, a)| c & a).collect();
        let next_excl: Vec<u64> = excluded.iter().zip(neigh).map(|(e, a)| e & a).collect();
        bron_kerbosch(adj, current, next_cand, next_excl, out);
        current.pop();
        candidates[v / 64] &= !(1 << (v % 64));
        excluded[v / 64] |= 1 << (v % 64);
    }
}
