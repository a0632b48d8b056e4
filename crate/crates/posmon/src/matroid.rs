//! Matroids as rank tables, multiplicity functions and their axioms, and the
//! poset on subsets induced by the divisibility digraph.
//!
//! Ground sets are capped at six elements so the power set fits a 64-element
//! poset. A multiplicity function assigns a positive integer to every subset;
//! the divisibility axiom orients an edge between neighbouring subsets, the
//! molecule axiom imposes product identities, and the positivity axiom bounds
//! alternating sums. Slicing a multiplicity at a prime, exponent-wise, turns
//! the divisibility axiom into monotonicity on the induced poset.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::MatroidError;
use crate::poset::Poset;

/// Maximum ground-set size; 2^6 = 64 subsets is the poset cap.
pub const MAX_GROUND_SET: usize = 6;

/// Ground-set element names, fixed as the first lowercase letters.
pub fn element_label(e: usize) -> char {
    (b'a' + e as u8) as char
}

/// Renders a subset mask as concatenated sorted element letters; the empty
/// set renders as the empty string.
pub fn subset_label(mask: u32) -> String {
    (0..MAX_GROUND_SET)
        .filter(|&e| mask & (1 << e) != 0)
        .map(element_label)
        .collect()
}

/// A matroid given by its full rank table over the power set.
///
/// Construction does not enforce the rank axioms; [`Matroid::validate`]
/// reports violations so that arbitrary candidate tables can be screened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    ranks: Vec<u8>,
}

/// One failed rank axiom, reported with the witnessing subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankViolation {
    /// rk(X) > |X|.
    Cardinality { set: u32 },
    /// X subset of Y but rk(X) > rk(Y).
    Monotonicity { sub: u32, sup: u32 },
    /// rk(X u Y) + rk(X n Y) > rk(X) + rk(Y).
    Submodularity { x: u32, y: u32 },
}

impl fmt::Display for RankViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankViolation::Cardinality { set } => {
                write!(f, "rank exceeds cardinality at {{{}}}", subset_label(*set))
            }
            RankViolation::Monotonicity { sub, sup } => write!(
                f,
                "rank drops from {{{}}} to {{{}}}",
                subset_label(*sub),
                subset_label(*sup)
            ),
            RankViolation::Submodularity { x, y } => write!(
                f,
                "submodularity fails at {{{}}}, {{{}}}",
                subset_label(*x),
                subset_label(*y)
            ),
        }
    }
}

impl Matroid {
    /// The uniform matroid: rank of a subset is its size capped at `r`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SET || r > n {
            return Err(MatroidError::OutOfRange { r, n });
        }
        let ranks = (0u32..1 << n)
            .map(|mask| (mask.count_ones() as usize).min(r) as u8)
            .collect();
        Ok(Matroid { n, ranks })
    }

    /// Wraps an explicit rank table indexed by subset bitmask.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if ranks.len() != 1 << n {
            return Err(MatroidError::BadTableLength(ranks.len(), 1 << n));
        }
        Ok(Matroid { n, ranks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn rank(&self, subset: u32) -> u8 {
        self.ranks[subset as usize]
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    /// Checks R1 (rank bounded by cardinality), R2 (monotonicity) and R3
    /// (submodularity) exhaustively, collecting every violation.
    pub fn validate(&self) -> Vec<RankViolation> {
        let mut out = Vec::new();
        let full = self.full_mask();
        for x in 0..=full {
            if u32::from(self.rank(x)) > x.count_ones() {
                out.push(RankViolation::Cardinality { set: x });
            }
            for e in 0..self.n {
                let y = x | (1 << e);
                if y != x && self.rank(x) > self.rank(y) {
                    out.push(RankViolation::Monotonicity { sub: x, sup: y });
                }
            }
        }
        for x in 0..=full {
            for y in x..=full {
                if u32::from(self.rank(x | y)) + u32::from(self.rank(x & y))
                    > u32::from(self.rank(x)) + u32::from(self.rank(y))
                {
                    out.push(RankViolation::Submodularity { x, y });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn check_element(&self, e: usize) -> Result<(), MatroidError> {
        if e >= self.n {
            Err(MatroidError::UnknownElement(e))
        } else {
            Ok(())
        }
    }

    /// Restricts the rank table to subsets avoiding `e`.
    pub fn deletion(&self, e: usize) -> Result<Matroid, MatroidError> {
        self.check_element(e)?;
        Ok(Matroid {
            n: self.n - 1,
            ranks: (0u32..1 << (self.n - 1))
                .map(|small| self.rank(unsqueeze(small, e)))
                .collect(),
        })
    }

    /// Contracts `e`: the new rank of A is rk(A u {e}) - rk({e}).
    pub fn contraction(&self, e: usize) -> Result<Matroid, MatroidError> {
        self.check_element(e)?;
        let re = self.rank(1 << e);
        Ok(Matroid {
            n: self.n - 1,
            ranks: (0u32..1 << (self.n - 1))
                .map(|small| self.rank(unsqueeze(small, e) | (1 << e)) - re)
                .collect(),
        })
    }

    /// Maximal-rank subsets of rank-many elements.
    pub fn bases(&self) -> Vec<u32> {
        let r = self.rank(self.full_mask());
        (0..=self.full_mask())
            .filter(|&b| b.count_ones() == u32::from(r) && self.rank(b) == r)
            .collect()
    }

    /// Tests the molecule identity on a disjoint triple: every A between R
    /// and R u F u T has rk(A) = rk(R) + |A n F|.
    pub fn is_molecule(&self, r: u32, f: u32, t: u32) -> bool {
        if r & f != 0 || r & t != 0 || f & t != 0 {
            return false;
        }
        let free = f | t;
        let base = u32::from(self.rank(r));
        let mut s = 0u32;
        loop {
            let a = r | s;
            if u32::from(self.rank(a)) != base + (a & f).count_ones() {
                return false;
            }
            if s == free {
                return true;
            }
            s = (s.wrapping_sub(free)) & free;
        }
    }

    /// All molecules (R, F, T), in ascending (r, f, t) mask order, optionally
    /// restricted to nontrivial ones (both F and T nonempty).
    pub fn molecules(&self, nontrivial_only: bool) -> Vec<Molecule> {
        let full = self.full_mask();
        let mut out = Vec::new();
        for r in 0..=full {
            let rest = full & !r;
            let mut f = 0u32;
            loop {
                let rest2 = rest & !f;
                let mut t = 0u32;
                loop {
                    if (!nontrivial_only || (f != 0 && t != 0)) && self.is_molecule(r, f, t) {
                        out.push(Molecule { r, f, t });
                    }
                    if t == rest2 {
                        break;
                    }
                    t = (t.wrapping_sub(rest2)) & rest2;
                }
                if f == rest {
                    break;
                }
                f = (f.wrapping_sub(rest)) & rest;
            }
        }
        out
    }

    /// The directed graph on subsets: an edge points from A to A u {e} when
    /// the rank grows, and back down when it stays. Sinks are the bases.
    pub fn digraph(&self) -> MatroidDigraph {
        let full = self.full_mask();
        let mut edges = Vec::new();
        for a in 0..=full {
            for e in 0..self.n {
                if a & (1 << e) != 0 {
                    continue;
                }
                let b = a | (1 << e);
                if self.rank(b) > self.rank(a) {
                    edges.push((a, b));
                } else {
                    edges.push((b, a));
                }
            }
        }
        edges.sort_unstable();
        let vertex_count = (full + 1) as usize;
        let mut outdeg = vec![0usize; vertex_count];
        let mut indeg = vec![0usize; vertex_count];
        for &(t, h) in &edges {
            outdeg[t as usize] += 1;
            indeg[h as usize] += 1;
        }
        let sinks: Vec<u32> = (0..=full).filter(|&v| outdeg[v as usize] == 0).collect();
        // Kahn's algorithm, smallest mask first; completing it certifies
        // acyclicity.
        let mut remaining = indeg.clone();
        let mut topo = Vec::with_capacity(vertex_count);
        let mut placed = vec![false; vertex_count];
        while topo.len() < vertex_count {
            let v = (0..=full)
                .find(|&v| !placed[v as usize] && remaining[v as usize] == 0)
                .expect("rank digraphs are acyclic");
            placed[v as usize] = true;
            topo.push(v);
            for &(t, h) in &edges {
                if t == v {
                    remaining[h as usize] -= 1;
                }
            }
        }
        MatroidDigraph {
            n: self.n,
            edges,
            sinks,
            topo,
        }
    }

    /// The poset on subsets given by the reflexive-transitive closure of the
    /// digraph, tails below heads. Labels are sorted element lists.
    pub fn slice_poset(&self) -> Result<Poset, MatroidError> {
        if self.n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(self.n));
        }
        let labels: Vec<String> = (0..=self.full_mask()).map(subset_label).collect();
        let pairs: Vec<(String, String)> = self
            .digraph()
            .edges
            .iter()
            .map(|&(t, h)| (subset_label(t), subset_label(h)))
            .collect();
        Ok(Poset::from_relations(&labels, &pairs).expect("digraph is acyclic"))
    }
}

/// Puts the bits of `small` around a gap at position `e`.
fn unsqueeze(small: u32, e: usize) -> u32 {
    let low = small & ((1 << e) - 1);
    let high = (small >> e) << (e + 1);
    low | high
}

/// A disjoint triple (R, F, T) satisfying the molecule rank identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Molecule {
    pub r: u32,
    pub f: u32,
    pub t: u32,
}

impl Molecule {
    pub fn is_nontrivial(&self) -> bool {
        self.f != 0 && self.t != 0
    }
}

impl fmt::Display for Molecule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({{{}}},{{{}}},{{{}}})",
            subset_label(self.r),
            subset_label(self.f),
            subset_label(self.t)
        )
    }
}

/// The digraph on the power set recording the divisibility directions.
#[derive(Clone, Debug)]
pub struct MatroidDigraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    sinks: Vec<u32>,
    topo: Vec<u32>,
}

impl MatroidDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Directed edges (tail, head), sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn sinks(&self) -> &[u32] {
        &self.sinks
    }

    /// A topological order of all subsets; its existence certifies acyclicity.
    pub fn topological_order(&self) -> &[u32] {
        &self.topo
    }
}

/// A positive-integer function on the power set of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityFunction {
    n: usize,
    values: Vec<BigUint>,
}

impl MultiplicityFunction {
    pub fn new(n: usize, values: Vec<BigUint>) -> Result<Self, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if values.len() != 1 << n {
            return Err(MatroidError::BadTableLength(values.len(), 1 << n));
        }
        if let Some(bad) = values.iter().position(|v| v.is_zero()) {
            return Err(MatroidError::ZeroValue(bad as u32));
        }
        Ok(MultiplicityFunction { n, values })
    }

    pub fn from_u64(n: usize, values: &[u64]) -> Result<Self, MatroidError> {
        Self::new(n, values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// The unit multiplicity, identically one.
    pub fn ones(n: usize) -> Self {
        MultiplicityFunction {
            n,
            values: vec![BigUint::one(); 1 << n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, subset: u32) -> &BigUint {
        &self.values[subset as usize]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Pointwise product.
    pub fn multiply(&self, other: &Self) -> Result<Self, MatroidError> {
        if self.n != other.n {
            return Err(MatroidError::SizeMismatch(self.n, other.n));
        }
        Ok(MultiplicityFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// The exponent of the prime `p` in every value.
    pub fn p_slice(&self, p: u64) -> Result<SlicedMultiplicity, MatroidError> {
        if !is_prime_u64(p) {
            return Err(MatroidError::NotPrime(p));
        }
        let big_p = BigUint::from(p);
        let values = self
            .values
            .iter()
            .map(|v| {
                let mut v = v.clone();
                let mut e = 0u32;
                while (&v % &big_p).is_zero() {
                    v /= &big_p;
                    e += 1;
                }
                e
            })
            .collect();
        Ok(SlicedMultiplicity {
            n: self.n,
            p,
            values,
        })
    }

    /// All primes dividing some value, ascending.
    pub fn support_primes(&self) -> Vec<u64> {
        let mut residue: Vec<BigUint> = self.values.clone();
        let mut primes = Vec::new();
        let mut p = 2u64;
        while residue.iter().any(|v| !v.is_one()) {
            let big_p = BigUint::from(p);
            let mut seen = false;
            for v in residue.iter_mut() {
                while (&*v % &big_p).is_zero() {
                    *v /= &big_p;
                    seen = true;
                }
            }
            if seen {
                primes.push(p);
            }
            p += 1;
        }
        primes
    }

    /// Rebuilds a multiplicity from exponent slices at distinct primes.
    pub fn reconstruct(slices: &[SlicedMultiplicity]) -> Result<Self, MatroidError> {
        let n = slices.first().map_or(0, |s| s.n);
        let mut seen = Vec::new();
        let mut values = vec![BigUint::one(); 1 << n];
        for s in slices {
            if s.n != n {
                return Err(MatroidError::SizeMismatch(n, s.n));
            }
            if seen.contains(&s.p) {
                return Err(MatroidError::DuplicatePrime(s.p));
            }
            seen.push(s.p);
            let big_p = BigUint::from(s.p);
            for (acc, &e) in values.iter_mut().zip(&s.values) {
                *acc *= big_p.pow(e);
            }
        }
        MultiplicityFunction::new(n, values)
    }
}

/// The exponents of one prime across the power set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedMultiplicity {
    n: usize,
    p: u64,
    values: Vec<u32>,
}

impl SlicedMultiplicity {
    pub fn new(n: usize, p: u64, values: Vec<u32>) -> Result<Self, MatroidError> {
        if !is_prime_u64(p) {
            return Err(MatroidError::NotPrime(p));
        }
        if values.len() != 1 << n {
            return Err(MatroidError::BadTableLength(values.len(), 1 << n));
        }
        Ok(SlicedMultiplicity { n, p, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn value(&self, subset: u32) -> u32 {
        self.values[subset as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// Trial-division primality; values stay desk-scale.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Divisibility axiom: along every edge of the digraph the tail value divides
/// the head value.
pub fn check_a1(matroid: &Matroid, mult: &MultiplicityFunction) -> Result<bool, MatroidError> {
    if matroid.n != mult.n {
        return Err(MatroidError::SizeMismatch(matroid.n, mult.n));
    }
    let full = matroid.full_mask();
    for a in 0..=full {
        for e in 0..matroid.n {
            if a & (1 << e) != 0 {
                continue;
            }
            let b = a | (1 << e);
            let ok = if matroid.rank(b) > matroid.rank(a) {
                (mult.value(b) % mult.value(a)).is_zero()
            } else {
                (mult.value(a) % mult.value(b)).is_zero()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Molecule axiom: m(R) m(R u F u T) = m(R u F) m(R u T) on every molecule.
pub fn check_a2(matroid: &Matroid, mult: &MultiplicityFunction) -> Result<bool, MatroidError> {
    if matroid.n != mult.n {
        return Err(MatroidError::SizeMismatch(matroid.n, mult.n));
    }
    for mol in matroid.molecules(false) {
        let lhs = mult.value(mol.r) * mult.value(mol.r | mol.f | mol.t);
        let rhs = mult.value(mol.r | mol.f) * mult.value(mol.r | mol.t);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Positivity axiom: on every molecule the alternating sum of values over the
/// interval, weighted by (-1)^|T|, is nonnegative. Exact big-integer sums.
pub fn check_p(matroid: &Matroid, mult: &MultiplicityFunction) -> Result<bool, MatroidError> {
    if matroid.n != mult.n {
        return Err(MatroidError::SizeMismatch(matroid.n, mult.n));
    }
    for mol in matroid.molecules(false) {
        let free = mol.f | mol.t;
        let top_size = free.count_ones();
        let mut sum = BigInt::zero();
        let mut s = 0u32;
        loop {
            let term = BigInt::from_biguint(Sign::Plus, mult.value(mol.r | s).clone());
            if (top_size - s.count_ones()).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            if s == free {
                break;
            }
            s = (s.wrapping_sub(free)) & free;
        }
        if !mol.t.count_ones().is_multiple_of(2) {
            sum = -sum;
        }
        if sum.sign() == Sign::Minus {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Ground set {a, b} with a a coloop and b a loop.
    fn loop_coloop() -> Matroid {
        Matroid::from_rank_table(2, vec![0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn uniform_examples() {
        let m = Matroid::uniform(1, 2).unwrap();
        assert_eq!(m.ranks(), &[0, 1, 1, 1]);

        let m = Matroid::uniform(0, 3).unwrap();
        assert!(m.ranks().iter().all(|&r| r == 0));

        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m.ranks().len(), 16);
        for a in 0..16u32 {
            assert_eq!(u32::from(m.rank(a)), a.count_ones().min(2));
        }

        assert!(matches!(
            Matroid::uniform(3, 2),
            Err(MatroidError::OutOfRange { .. })
        ));
        assert!(matches!(
            Matroid::uniform(1, 7),
            Err(MatroidError::OutOfRange { .. })
        ));
    }

    #[test]
    fn validate_examples() {
        assert!(Matroid::uniform(2, 4).unwrap().validate().is_empty());

        let bad = Matroid::from_rank_table(1, vec![0, 2]).unwrap();
        assert!(bad
            .validate()
            .iter()
            .any(|v| matches!(v, RankViolation::Cardinality { set: 1 })));

        let bad = Matroid::from_rank_table(2, vec![0, 1, 1, 0]).unwrap();
        assert!(bad
            .validate()
            .iter()
            .any(|v| matches!(v, RankViolation::Monotonicity { .. })));
    }

    #[test]
    fn deletion_contraction_examples() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m.contraction(3).unwrap(), Matroid::uniform(1, 3).unwrap());
        assert_eq!(m.deletion(3).unwrap(), Matroid::uniform(2, 3).unwrap());
        assert_eq!(m.contraction(0).unwrap(), Matroid::uniform(1, 3).unwrap());

        let m = Matroid::uniform(0, 2).unwrap();
        assert_eq!(m.contraction(1).unwrap(), Matroid::uniform(0, 1).unwrap());

        assert!(matches!(
            Matroid::uniform(1, 2).unwrap().deletion(5),
            Err(MatroidError::UnknownElement(5))
        ));

        for e in 0..4 {
            assert!(m.is_valid() && Matroid::uniform(2, 4).unwrap().deletion(e).unwrap().is_valid());
        }
    }

    #[test]
    fn molecules_examples() {
        for n in 0..=5 {
            for r in 0..=n {
                let m = Matroid::uniform(r, n).unwrap();
                assert!(m.molecules(true).is_empty(), "U({r},{n}) has a nontrivial molecule");
            }
        }

        let m = loop_coloop();
        let mols = m.molecules(true);
        assert!(mols.contains(&Molecule { r: 0, f: 0b01, t: 0b10 }));

        // Trivial molecules with F = T = empty exist for every R.
        let all = m.molecules(false);
        for r in 0..=m.full_mask() {
            assert!(all.contains(&Molecule { r, f: 0, t: 0 }));
        }
    }

    #[test]
    fn axiom_checks() {
        let unit2 = MultiplicityFunction::ones(2);
        for m in [Matroid::uniform(1, 2).unwrap(), loop_coloop()] {
            assert!(check_a1(&m, &unit2).unwrap());
            assert!(check_a2(&m, &unit2).unwrap());
            assert!(check_p(&m, &unit2).unwrap());
        }

        let m = loop_coloop();
        let bad = MultiplicityFunction::from_u64(2, &[1, 2, 1, 3]).unwrap();
        assert!(!check_a2(&m, &bad).unwrap());

        let good = MultiplicityFunction::from_u64(2, &[2, 6, 2, 6]).unwrap();
        assert!(check_a1(&m, &good).unwrap());
        assert!(check_a2(&m, &good).unwrap());
    }

    #[test]
    fn multiply_unit() {
        let m = MultiplicityFunction::from_u64(2, &[1, 2, 1, 4]).unwrap();
        assert_eq!(m.multiply(&MultiplicityFunction::ones(2)).unwrap(), m);
        assert!(matches!(
            m.multiply(&MultiplicityFunction::ones(3)),
            Err(MatroidError::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn digraph_examples() {
        let m = Matroid::uniform(1, 2).unwrap();
        let g = m.digraph();
        assert_eq!(g.sinks(), &[0b01, 0b10]);
        assert_eq!(g.sinks(), m.bases().as_slice());

        let g = loop_coloop().digraph();
        assert_eq!(g.sinks(), &[0b01]);
        assert_eq!(
            g.edges(),
            &[(0b00, 0b01), (0b10, 0b00), (0b10, 0b11), (0b11, 0b01)]
        );
        assert_eq!(g.topological_order().len(), 4);
    }

    #[test]
    fn sinks_are_bases() {
        for n in 0..=4 {
            for r in 0..=n {
                let m = Matroid::uniform(r, n).unwrap();
                assert_eq!(m.digraph().sinks(), m.bases().as_slice());
            }
        }
        let m = loop_coloop();
        assert_eq!(m.digraph().sinks(), m.bases().as_slice());
    }

    #[test]
    fn slice_poset_u12_looks_like_two_minimal_two_maximal() {
        let p = Matroid::uniform(1, 2).unwrap().slice_poset().unwrap();
        assert_eq!(p.len(), 4);
        let empty = p.index_of("").unwrap();
        let ab = p.index_of("ab").unwrap();
        let a = p.index_of("a").unwrap();
        let b = p.index_of("b").unwrap();
        assert_eq!(p.minimals(), (1 << empty) | (1 << ab));
        assert_eq!(p.maximals(), (1 << a) | (1 << b));
        assert_eq!(p.enumerate_irreducible_upper_sets().len(), 5);
    }

    #[test]
    fn slice_poset_rank_zero_is_reverse_inclusion() {
        let p = Matroid::uniform(0, 1).unwrap().slice_poset().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.lt(p.index_of("a").unwrap(), p.index_of("").unwrap()));

        let p = Matroid::uniform(0, 3).unwrap().slice_poset().unwrap();
        for a in 0..8u32 {
            for b in 0..8u32 {
                let below = a != b && b & a == b;
                assert_eq!(
                    p.lt(
                        p.index_of(&subset_label(a)).unwrap(),
                        p.index_of(&subset_label(b)).unwrap()
                    ),
                    below,
                    "{a:03b} vs {b:03b}"
                );
            }
        }
    }

    #[test]
    fn slice_examples() {
        let one = MultiplicityFunction::ones(2);
        let s = one.p_slice(5).unwrap();
        assert!(s.values().iter().all(|&e| e == 0));

        let m = MultiplicityFunction::from_u64(1, &[1, 12]).unwrap();
        assert_eq!(m.p_slice(2).unwrap().values(), &[0, 2]);
        assert_eq!(m.p_slice(3).unwrap().values(), &[0, 1]);
        assert!(matches!(m.p_slice(4), Err(MatroidError::NotPrime(4))));
        assert_eq!(m.support_primes(), vec![2, 3]);
    }

    #[test]
    fn reconstruct_round_trip() {
        let m = MultiplicityFunction::from_u64(2, &[6, 12, 10, 360]).unwrap();
        let slices: Vec<SlicedMultiplicity> = m
            .support_primes()
            .into_iter()
            .map(|p| m.p_slice(p).unwrap())
            .collect();
        assert_eq!(MultiplicityFunction::reconstruct(&slices).unwrap(), m);

        let dup = vec![m.p_slice(2).unwrap(), m.p_slice(2).unwrap()];
        assert!(matches!(
            MultiplicityFunction::reconstruct(&dup),
            Err(MatroidError::DuplicatePrime(2))
        ));
    }

    #[test]
    fn unsqueeze_places_gap() {
        assert_eq!(unsqueeze(0b11, 0), 0b110);
        assert_eq!(unsqueeze(0b11, 1), 0b101);
        assert_eq!(unsqueeze(0b11, 2), 0b011);
    }
}
