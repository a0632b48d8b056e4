//! Cone geometry, the Gorenstein property, Cohen-Macaulay type, and prime
//! elements of the monoid of monotone functions.
//!
//! The rational monotone functions form a cone whose extremal rays are the
//! indicators of irreducible upper sets and whose facets come from minimal
//! elements and cover pairs. The monoid is Gorenstein exactly when the poset
//! is graded, and in general its Cohen-Macaulay type is the number of minimal
//! lattice points in the interior of the cone, minimality taken under monoid
//! divisibility.

use std::collections::HashSet;

use crate::error::StructureError;
use crate::monoid::MonotoneFunction;
use crate::poset::{Bits, Poset, UpperSet};

/// One supporting inequality of the cone of monotone functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Facet {
    /// f(x) >= 0 for a minimal element x.
    Nonneg { x: usize },
    /// f(y) - f(x) >= 0 for y covering x.
    Cover { x: usize, y: usize },
}

/// Extremal rays and facets of the cone of rational monotone functions.
#[derive(Clone, Debug)]
pub struct ConeDescription {
    poset: Poset,
    rays: Vec<UpperSet>,
    facets: Vec<Facet>,
}

impl ConeDescription {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Rays in the fixed (cardinality, bitmask) order; these coincide with the
    /// irreducible upper sets.
    pub fn rays(&self) -> &[UpperSet] {
        &self.rays
    }

    /// Nonnegativity facets first (by element index), then cover facets in
    /// cover order.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn ray_vectors(&self) -> Vec<Vec<u64>> {
        self.rays.iter().map(|r| r.indicator()).collect()
    }

    /// Evaluates one inequality on an integer vector.
    pub fn facet_holds(&self, facet: Facet, values: &[i64]) -> bool {
        match facet {
            Facet::Nonneg { x } => values[x] >= 0,
            Facet::Cover { x, y } => values[y] >= values[x],
        }
    }

    /// A vector violating exactly the given facet, witnessing that the facet
    /// cannot be dropped. For a cover (x, y) this is the indicator of the
    /// up-closure of x with y removed; for a minimal element it dips to -1
    /// there.
    pub fn facet_witness(&self, facet: Facet) -> Vec<i64> {
        let n = self.poset.len();
        let mut w = vec![0i64; n];
        match facet {
            Facet::Nonneg { x } => w[x] = -1,
            Facet::Cover { x, y } => {
                for z in Bits(self.poset.above(x) | (1 << x)) {
                    w[z] = 1;
                }
                w[y] = 0;
            }
        }
        w
    }
}

/// Rays and the minimal facet system of the cone of monotone functions.
pub fn cone_description(poset: &Poset) -> ConeDescription {
    let rays = poset.enumerate_irreducible_upper_sets();
    let mut facets = Vec::new();
    for x in Bits(poset.minimals()) {
        facets.push(Facet::Nonneg { x });
    }
    for &(x, y) in poset.covers() {
        facets.push(Facet::Cover { x, y });
    }
    ConeDescription {
        poset: poset.clone(),
        rays,
        facets,
    }
}

/// The level function of a graded poset: 1 on minimal elements, increasing by
/// exactly one along covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFunction {
    poset: Poset,
    values: Vec<u64>,
}

impl LevelFunction {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn as_monotone(&self) -> MonotoneFunction {
        MonotoneFunction::new(&self.poset, self.values.clone()).expect("level functions are monotone")
    }
}

/// The unique level function when the poset is graded, absence otherwise.
///
/// The only candidate assigns each element the length of the longest chain
/// ending there; the poset is graded iff that candidate gains exactly one
/// along every cover.
pub fn level_function(poset: &Poset) -> Option<LevelFunction> {
    let candidate: Vec<u64> = (0..poset.len()).map(|x| poset.chain_to(x) as u64).collect();
    for &(x, y) in poset.covers() {
        if candidate[y] != candidate[x] + 1 {
            return None;
        }
    }
    Some(LevelFunction {
        poset: poset.clone(),
        values: candidate,
    })
}

/// True when the function lies strictly inside the cone: positive on minimal
/// elements and strictly increasing along covers.
pub fn is_interior(f: &MonotoneFunction) -> bool {
    let p = f.poset();
    Bits(p.minimals()).all(|x| f.value(x) >= 1)
        && p.covers().iter().all(|&(x, y)| f.value(y) > f.value(x))
}

/// Decides whether some nonempty upper set can be subtracted from `f` while
/// staying interior. Subtracting any nonzero monoid element reduces to
/// subtracting a single irreducible, and an irreducible works iff it contains
/// no minimal element at value 1 and no cover with unit gap enters it.
fn has_subtractable_upper_set(f: &MonotoneFunction) -> bool {
    let p = f.poset();
    let n = p.len();
    if n == 0 {
        return false;
    }
    let mut excluded = 0u64;
    let mut queue: Vec<usize> = Vec::new();
    for x in Bits(p.minimals()) {
        if f.value(x) == 1 {
            excluded |= 1 << x;
            queue.push(x);
        }
    }
    // Exclusion travels downward (an upper set containing y contains all of
    // y's up-closure, so a blocked element blocks everything below it) and
    // upward across unit-gap covers.
    while let Some(x) = queue.pop() {
        let mut fresh = p.below(x) & !excluded;
        for y in Bits(p.covers_up(x)) {
            if f.value(y) == f.value(x) + 1 && excluded & (1 << y) == 0 {
                fresh |= 1 << y;
            }
        }
        for y in Bits(fresh) {
            excluded |= 1 << y;
            queue.push(y);
        }
    }
    excluded != p.full_mask()
}

/// True when `f` is interior and minimal under monoid divisibility among
/// interior lattice points.
pub fn is_minimal_interior_point(f: &MonotoneFunction) -> bool {
    is_interior(f) && !has_subtractable_upper_set(f)
}

/// The minimal generators of the interior ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorGenerators {
    poset: Poset,
    generators: Vec<MonotoneFunction>,
}

impl InteriorGenerators {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn generators(&self) -> &[MonotoneFunction] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Enumerates interior points whose value at x lies in
/// [forced minimum, bound - (longest chain above x)], calling `visit` on each.
/// Returns false if `point_cap` many points were visited without finishing.
fn walk_interior_points(
    poset: &Poset,
    bound: u32,
    point_cap: usize,
    visit: &mut dyn FnMut(&[u64]),
) -> bool {
    if poset.is_empty() {
        visit(&[]);
        return true;
    }
    let mut walker = InteriorWalker {
        poset,
        order: poset.linear_extension().to_vec(),
        bound,
        values: vec![0u64; poset.len()],
        seen: 0,
        point_cap,
    };
    walker.rec(0, visit)
}

struct InteriorWalker<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    bound: u32,
    values: Vec<u64>,
    seen: usize,
    point_cap: usize,
}

impl InteriorWalker<'_> {
    fn rec(&mut self, depth: usize, visit: &mut dyn FnMut(&[u64])) -> bool {
        if depth == self.order.len() {
            self.seen += 1;
            if self.seen > self.point_cap {
                return false;
            }
            visit(&self.values);
            return true;
        }
        let x = self.order[depth];
        let mut lo = 1u64;
        for y in Bits(self.poset.covers_dn(x)) {
            lo = lo.max(self.values[y] + 1);
        }
        let headroom = (self.poset.chain_above(x) as u64).min(self.bound as u64);
        let hi = self.bound as u64 - headroom;
        let mut v = lo;
        while v <= hi {
            self.values[x] = v;
            if !self.rec(depth + 1, visit) {
                return false;
            }
            v += 1;
        }
        self.values[x] = 0;
        true
    }
}

/// Checks that every interior point with coordinates at most `bound` is
/// divisible by one of `generators`. Returns `None` when the enumeration
/// exceeds `point_cap` points and the check is abandoned.
pub fn verify_interior_generation(
    poset: &Poset,
    generators: &[MonotoneFunction],
    bound: u32,
    point_cap: usize,
) -> Option<bool> {
    let mut all_covered = true;
    let finished = walk_interior_points(poset, bound, point_cap, &mut |values| {
        let f = MonotoneFunction::new(poset, values.to_vec()).expect("interior points are monotone");
        if !generators.iter().any(|g| g.divides(&f)) {
            all_covered = false;
        }
    });
    if finished {
        Some(all_covered)
    } else {
        None
    }
}

/// Cap on the completeness self-check enumeration; past this many points the
/// windowed search is trusted (the window already covers every divisibility-
/// minimal interior point, see `component_generators`).
const SELF_CHECK_POINT_CAP: usize = 200_000;

/// Minimal interior generators of one comparability component.
///
/// Any divisibility-minimal interior point f satisfies, at every x,
/// chain_to(x) <= f(x) <= L - chain_above(x) with L the longest chain length:
/// were some value larger, the upper set of all elements exceeding the upper
/// envelope could be subtracted. The window search is therefore complete; the
/// self-check below re-verifies generation up to twice the window and widens
/// it if that ever failed.
fn component_generators(poset: &Poset) -> Result<Vec<MonotoneFunction>, StructureError> {
    let l = poset.longest_chain().max(1);
    let mut retries = 0u32;
    let mut bound = l;
    loop {
        let mut generators: Vec<MonotoneFunction> = Vec::new();
        let finished = walk_interior_points(poset, bound, usize::MAX, &mut |values| {
            let f = MonotoneFunction::new(poset, values.to_vec()).expect("monotone by construction");
            if is_minimal_interior_point(&f) {
                generators.push(f);
            }
        });
        debug_assert!(finished);
        match verify_interior_generation(poset, &generators, 2 * bound, SELF_CHECK_POINT_CAP) {
            Some(true) | None => return Ok(generators),
            Some(false) => {
                retries += 1;
                if retries > 3 {
                    return Err(StructureError::SearchBoundExceeded { retries });
                }
                bound *= 2;
            }
        }
    }
}

/// The minimal elements, under monoid divisibility, of the set of interior
/// lattice points. Computed per comparability component and combined by
/// cartesian product.
pub fn interior_minimal_generators(poset: &Poset) -> Result<InteriorGenerators, StructureError> {
    if poset.is_empty() {
        return Ok(InteriorGenerators {
            poset: poset.clone(),
            generators: vec![MonotoneFunction::zero(poset)],
        });
    }
    let mut combined: Vec<Vec<u64>> = vec![vec![0; poset.len()]];
    for comp in poset.comparability_components() {
        let (sub, back) = poset.induced(comp);
        let gens = component_generators(&sub)?;
        let mut next = Vec::with_capacity(combined.len() * gens.len());
        for base in &combined {
            for g in &gens {
                let mut v = base.clone();
                for (i, &orig) in back.iter().enumerate() {
                    v[orig] = g.value(i);
                }
                next.push(v);
            }
        }
        combined = next;
    }
    combined.sort_unstable();
    let generators = combined
        .into_iter()
        .map(|v| MonotoneFunction::new(poset, v).expect("monotone per component"))
        .collect();
    Ok(InteriorGenerators {
        poset: poset.clone(),
        generators,
    })
}

/// The Cohen-Macaulay type: how many minimal generators the interior has.
/// Equals 1 exactly when the poset is graded.
pub fn cm_type(poset: &Poset) -> Result<u64, StructureError> {
    Ok(interior_minimal_generators(poset)?.len() as u64)
}

/// Combinatorial prime test for the indicator of an irreducible upper set:
/// the set must be the up-closure of a single element v, every outside element
/// looking into it must sit below v, and those outside elements must be empty
/// or have a maximum.
pub fn is_prime(poset: &Poset, set: &UpperSet) -> Result<bool, StructureError> {
    if !poset
        .is_irreducible_upper_set(set)
        .map_err(StructureError::Poset)?
    {
        return Err(StructureError::NotIrreducible);
    }
    let bits = set.bits();
    let v = match Bits(bits).find(|&v| poset.above(v) | (1 << v) == bits) {
        Some(v) => v,
        None => return Ok(false),
    };
    let mut boundary = 0u64;
    for x in Bits(poset.full_mask() & !bits) {
        if poset.above(x) & bits != 0 {
            boundary |= 1 << x;
        }
    }
    if boundary & !poset.below(v) != 0 {
        return Ok(false);
    }
    if boundary == 0 {
        return Ok(true);
    }
    Ok(Bits(boundary).any(|m| boundary & !(poset.below(m) | (1 << m)) == 0))
}

/// All irreducible upper sets whose indicators are prime elements. Primes are
/// principal, so only up-closures of single elements need testing.
pub fn primes(poset: &Poset) -> Vec<UpperSet> {
    let mut out: Vec<UpperSet> = (0..poset.len())
        .map(|v| poset.up_closure(1 << v))
        .filter(|u| is_prime(poset, u).expect("principal up-closures are irreducible"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// All distinct monoid elements expressible as a sum of at most `bound`
/// irreducible indicator functions, the zero function included.
pub fn bounded_monoid_elements(poset: &Poset, bound: u32) -> Vec<MonotoneFunction> {
    let irr = poset.enumerate_irreducible_upper_sets();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut frontier = vec![MonotoneFunction::zero(poset)];
    seen.insert(frontier[0].values().to_vec());
    let mut all = frontier.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for f in &frontier {
            for i in &irr {
                let g = f
                    .checked_add(&MonotoneFunction::indicator(i))
                    .expect("bounded sums stay small");
                if seen.insert(g.values().to_vec()) {
                    next.push(g);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// True when no pair (g, h) drawn from `elements` refutes primality of `f`:
/// whenever f divides g + h it divides g or h.
pub fn prime_implication_holds(f: &MonotoneFunction, elements: &[MonotoneFunction]) -> bool {
    for (i, g) in elements.iter().enumerate() {
        let f_div_g = f.divides(g);
        for h in &elements[i..] {
            if f_div_g || f.divides(h) {
                continue;
            }
            let sum = match g.checked_add(h) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if f.divides(&sum) {
                return false;
            }
        }
    }
    true
}

/// Brute-force prime check over all sums of at most `degree_bound`
/// irreducibles: a refutation is definitive, while a pass only confirms up to
/// the bound.
pub fn prime_oracle(
    poset: &Poset,
    set: &UpperSet,
    degree_bound: u32,
) -> Result<bool, StructureError> {
    if !poset
        .is_irreducible_upper_set(set)
        .map_err(StructureError::Poset)?
    {
        return Err(StructureError::NotIrreducible);
    }
    let elements = bounded_monoid_elements(poset, degree_bound);
    Ok(prime_implication_holds(
        &MonotoneFunction::indicator(set),
        &elements,
    ))
}
