//! Finite posets and their upper sets.
//!
//! A [`Poset`] stores a strict partial order on at most 64 labelled elements
//! as reachability bitmasks, together with the cover relation (the transitive
//! reduction). An [`UpperSet`] is an up-closed subset of a poset, stored as a
//! bitmask over element indices. Upper sets whose induced comparability graph
//! is connected are called *irreducible*; every upper set splits uniquely into
//! irreducible parts, and those parts index the generators of the monoid of
//! monotone functions built on top of this module.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::PosetError;

/// Hard cap on poset size so every subset fits in one `u64` mask.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `above[x]` holds every y with x < y.
    above: Vec<u64>,
    /// `below[x]` holds every y with y < x.
    below: Vec<u64>,
    /// `covers_up[x]` holds every y covering x.
    covers_up: Vec<u64>,
    /// `covers_dn[x]` holds every y covered by x.
    covers_dn: Vec<u64>,
    /// Cover pairs (x, y) with y covering x, sorted by (x, y).
    covers: Vec<(usize, usize)>,
    minimals: u64,
    maximals: u64,
    /// A linear extension: if x < y then x appears before y.
    linear_extension: Vec<usize>,
    /// Longest chain ending at x, counted in elements (minimal elements get 1).
    chain_to: Vec<u32>,
    /// Longest chain strictly above x, counted in elements (maximal elements get 0).
    chain_above: Vec<u32>,
}

/// A finite strict partial order with labelled elements.
///
/// Cheap to clone; all data is immutable and shared.
#[derive(Clone, Debug)]
pub struct Poset {
    inner: Arc<Inner>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.labels == other.inner.labels && self.inner.above == other.inner.above)
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from labels and strict relation pairs `(x, y)` meaning x < y.
    ///
    /// The pairs may be any generating set of the order, not only covers; the
    /// transitive closure and the cover relation are recomputed. Elements are
    /// indexed by input order.
    pub fn from_relations<S, T>(labels: &[S], pairs: &[(T, T)]) -> Result<Poset, PosetError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }

        let mut above = vec![0u64; n];
        for (x, y) in pairs {
            let xi = *index
                .get(x.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(x.as_ref().to_owned()))?;
            let yi = *index
                .get(y.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(y.as_ref().to_owned()))?;
            above[xi] |= 1 << yi;
        }

        // Transitive closure over bitmask rows.
        for k in 0..n {
            let row_k = above[k];
            for row in above.iter_mut() {
                if *row & (1 << k) != 0 {
                    *row |= row_k;
                }
            }
        }
        for (x, row) in above.iter().enumerate() {
            if row & (1 << x) != 0 {
                return Err(PosetError::CycleDetected(labels[x].clone()));
            }
        }

        let mut below = vec![0u64; n];
        for (x, &row) in above.iter().enumerate() {
            for y in Bits(row) {
                below[y] |= 1 << x;
            }
        }

        // y covers x iff x < y and nothing sits strictly between.
        let mut covers_up = vec![0u64; n];
        let mut covers_dn = vec![0u64; n];
        let mut covers = Vec::new();
        for x in 0..n {
            for y in Bits(above[x]) {
                if above[x] & below[y] == 0 {
                    covers_up[x] |= 1 << y;
                    covers_dn[y] |= 1 << x;
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        let mut minimals = 0u64;
        let mut maximals = 0u64;
        for x in 0..n {
            if below[x] == 0 {
                minimals |= 1 << x;
            }
            if above[x] == 0 {
                maximals |= 1 << x;
            }
        }

        // Deterministic linear extension: repeatedly take the smallest-index
        // element whose lower covers are all placed.
        let mut linear_extension = Vec::with_capacity(n);
        let mut placed = 0u64;
        while linear_extension.len() < n {
            let next = (0..n)
                .find(|&x| placed & (1 << x) == 0 && below[x] & !placed == 0)
                .expect("acyclic order always has a minimal unplaced element");
            linear_extension.push(next);
            placed |= 1 << next;
        }

        let mut chain_to = vec![1u32; n];
        for &x in &linear_extension {
            for y in Bits(covers_dn[x]) {
                chain_to[x] = chain_to[x].max(chain_to[y] + 1);
            }
        }
        let mut chain_above = vec![0u32; n];
        for &x in linear_extension.iter().rev() {
            for y in Bits(covers_up[x]) {
                chain_above[x] = chain_above[x].max(chain_above[y] + 1);
            }
        }

        Ok(Poset {
            inner: Arc::new(Inner {
                labels,
                index,
                above,
                below,
                covers_up,
                covers_dn,
                covers,
                minimals,
                maximals,
                linear_extension,
                chain_to,
                chain_above,
            }),
        })
    }

    /// Convenience constructor for a chain x0 < x1 < ... of the given labels.
    pub fn chain<S: AsRef<str>>(labels: &[S]) -> Result<Poset, PosetError> {
        let pairs: Vec<(String, String)> = labels
            .windows(2)
            .map(|w| (w[0].as_ref().to_owned(), w[1].as_ref().to_owned()))
            .collect();
        Poset::from_relations(labels, &pairs)
    }

    /// Convenience constructor for an antichain of the given labels.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Result<Poset, PosetError> {
        Poset::from_relations(labels, &[] as &[(&str, &str)])
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.inner.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel(label.to_owned()))
    }

    /// Strict comparison x < y.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.inner.above[x] & (1 << y) != 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    /// Mask of all elements strictly above x.
    pub fn above(&self, x: usize) -> u64 {
        self.inner.above[x]
    }

    /// Mask of all elements strictly below x.
    pub fn below(&self, x: usize) -> u64 {
        self.inner.below[x]
    }

    pub fn covers_up(&self, x: usize) -> u64 {
        self.inner.covers_up[x]
    }

    pub fn covers_dn(&self, x: usize) -> u64 {
        self.inner.covers_dn[x]
    }

    /// Cover pairs (x, y) with y covering x, sorted by (x, y).
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.inner.covers
    }

    pub fn minimals(&self) -> u64 {
        self.inner.minimals
    }

    pub fn maximals(&self) -> u64 {
        self.inner.maximals
    }

    /// A linear extension of the order, smallest-index-first among candidates.
    pub fn linear_extension(&self) -> &[usize] {
        &self.inner.linear_extension
    }

    /// Length in elements of the longest chain ending at x.
    pub fn chain_to(&self, x: usize) -> u32 {
        self.inner.chain_to[x]
    }

    /// Length in elements of the longest chain strictly above x.
    pub fn chain_above(&self, x: usize) -> u32 {
        self.inner.chain_above[x]
    }

    /// Length in elements of the longest chain of the poset (0 when empty).
    pub fn longest_chain(&self) -> u32 {
        self.inner.chain_to.iter().copied().max().unwrap_or(0)
    }

    pub fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Translates a slice of labels into a bitmask.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64, PosetError> {
        let mut m = 0u64;
        for l in labels {
            m |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(m)
    }

    /// The up-closure of an arbitrary subset: the subset plus everything above it.
    pub fn up_closure(&self, subset: u64) -> UpperSet {
        let mut m = subset;
        for x in Bits(subset) {
            m |= self.inner.above[x];
        }
        UpperSet {
            poset: self.clone(),
            bits: m,
        }
    }

    /// Checks that a mask is up-closed.
    pub fn is_upper_mask(&self, mask: u64) -> bool {
        Bits(mask).all(|x| self.inner.above[x] & !mask == 0)
    }

    /// Wraps a mask known to be up-closed.
    pub(crate) fn upper_set_unchecked(&self, bits: u64) -> UpperSet {
        debug_assert!(self.is_upper_mask(bits));
        UpperSet {
            poset: self.clone(),
            bits,
        }
    }

    /// Wraps a mask as an [`UpperSet`], verifying up-closedness.
    pub fn upper_set(&self, mask: u64) -> Result<UpperSet, PosetError> {
        for x in Bits(mask) {
            if self.inner.above[x] & !mask != 0 {
                return Err(PosetError::NotAnUpperSet(self.label(x).to_owned()));
            }
        }
        Ok(UpperSet {
            poset: self.clone(),
            bits: mask,
        })
    }

    /// Connected components of the comparability graph induced on `mask`.
    ///
    /// Within an upper set, comparability connectivity agrees with
    /// connectivity along cover edges, so the walk uses covers only.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut seen = 0u64;
        let mut parts = Vec::new();
        for x in Bits(mask) {
            if seen & (1 << x) != 0 {
                continue;
            }
            let mut comp = 1u64 << x;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for y in Bits(frontier) {
                    next |= (self.inner.above[y] | self.inner.below[y]) & mask & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            parts.push(comp);
        }
        parts.sort_unstable_by_key(|&m| (m.count_ones(), m));
        parts
    }

    /// Components of the whole comparability graph.
    pub fn comparability_components(&self) -> Vec<u64> {
        self.components_within(self.full_mask())
    }

    /// Tests whether `s` is an irreducible upper set: nonempty and not a
    /// disjoint union of two upper sets (equivalently, connected under
    /// comparability).
    pub fn is_irreducible_upper_set(&self, s: &UpperSet) -> Result<bool, PosetError> {
        // Revalidate: callers may hold masks from elsewhere.
        self.upper_set(s.bits)?;
        Ok(s.bits != 0 && self.components_within(s.bits).len() == 1)
    }

    /// The unique partition of an upper set into irreducible upper sets,
    /// ordered by (cardinality, bitmask). Empty input gives an empty partition.
    pub fn decompose_upper_set(&self, u: &UpperSet) -> Result<Vec<UpperSet>, PosetError> {
        self.upper_set(u.bits)?;
        Ok(self
            .components_within(u.bits)
            .into_iter()
            .map(|m| UpperSet {
                poset: self.clone(),
                bits: m,
            })
            .collect())
    }

    /// All irreducible upper sets, ordered by (cardinality, bitmask).
    ///
    /// Materializes every set; intended for desk-scale posets. Counting
    /// without materializing lives in the counting engine, which is checked
    /// against this enumeration.
    pub fn enumerate_irreducible_upper_sets(&self) -> Vec<UpperSet> {
        let n = self.len();
        let mut found: Vec<u64> = Vec::new();
        if n == 0 {
            return Vec::new();
        }
        // Order elements top-down; an up-set listed in this order has all its
        // prefixes up-closed, so a gated subset recursion visits each up-set
        // exactly once.
        let order: Vec<usize> = self.inner.linear_extension.iter().rev().copied().collect();
        let covers_up = &self.inner.covers_up;
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((mask, pos)) = stack.pop() {
            if mask != 0 && self.components_within(mask).len() == 1 {
                found.push(mask);
            }
            for (i, &x) in order.iter().enumerate().skip(pos) {
                if covers_up[x] & !mask == 0 {
                    stack.push((mask | (1 << x), i + 1));
                }
            }
        }
        found.sort_unstable_by_key(|&m| (m.count_ones(), m));
        found
            .into_iter()
            .map(|m| UpperSet {
                poset: self.clone(),
                bits: m,
            })
            .collect()
    }

    /// Restricts the poset to `mask`, keeping label names and relative order.
    ///
    /// Returns the restricted poset together with the original index of each
    /// new element.
    pub fn induced(&self, mask: u64) -> (Poset, Vec<usize>) {
        let keep: Vec<usize> = Bits(mask).collect();
        let labels: Vec<&str> = keep.iter().map(|&x| self.label(x)).collect();
        let mut pairs = Vec::new();
        for &x in &keep {
            for y in Bits(self.inner.above[x] & mask) {
                pairs.push((self.label(x), self.label(y)));
            }
        }
        let sub = Poset::from_relations(&labels, &pairs).expect("restriction of a valid order");
        (sub, keep)
    }
}

/// An up-closed subset of a poset.
///
/// Ordering is by (cardinality, bitmask); this is the fixed total order used
/// everywhere generators must be arranged deterministically. Comparing upper
/// sets of different posets is a logic error.
#[derive(Clone, Debug)]
pub struct UpperSet {
    poset: Poset,
    bits: u64,
}

impl UpperSet {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits & (1 << x) != 0
    }

    /// Member labels in index order.
    pub fn member_labels(&self) -> Vec<&str> {
        Bits(self.bits).map(|x| self.poset.label(x)).collect()
    }

    /// Indicator values as a 0/1 vector over all elements.
    pub fn indicator(&self) -> Vec<u64> {
        (0..self.poset.len())
            .map(|x| u64::from(self.contains(x)))
            .collect()
    }
}

impl fmt::Display for UpperSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.member_labels().join(","))
    }
}

impl PartialEq for UpperSet {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.poset == other.poset, "upper sets from different posets");
        self.bits == other.bits
    }
}

impl Eq for UpperSet {}

impl std::hash::Hash for UpperSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for UpperSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UpperSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert!(self.poset == other.poset, "upper sets from different posets");
        (self.len(), self.bits).cmp(&(other.len(), other.bits))
    }
}

/// Iterator over the set bit indices of a mask, ascending.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let x = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(x)
        }
    }
}
