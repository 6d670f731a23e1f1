//! The separating-polytope constructions and their verifiers.
//!
//! Three ways to carve a target set `A` out of the cube:
//! - [`hamming_separator`]: one half-space per cube point, cutting each
//!   `sigma` outside `A` off at Hamming distance one. `2^n` constraints.
//! - [`edge_polytope`]: for targets consisting of weight-2 points only,
//!   viewed as graph edges; `2n` inequalities and one equality.
//! - [`halfsquare_separator`]: an extended formulation of size
//!   `O(2^{n/2})`. Points are split across a coordinate partition, each
//!   restriction gets one slot per possible value, and the members of `A`
//!   become edges between the two slot blocks; the edge polytope of that
//!   graph, intersected with two convexity equalities, projects to a
//!   separator for `A`.
//!
//! Verification is dual-route everywhere: the fast canonical-lift test and
//! the Fourier–Motzkin oracle must agree, and the test suite enforces that.

use std::fmt;

use num_traits::Zero;

use crate::cube::{check_dim, BoolSet, CoordPartition, CubePoint};
use crate::error::{Error, Result};
use crate::graph::GraphSet;
use crate::poly::{
    AffineMap, Compiled, ExtendedFormulation, HPolytope, LinConstraint, Relation,
};
use crate::project;
use crate::rat::{rat, Rat};

/// Slot-count ceiling for the half-square lift; beyond this the dense
/// constraint matrix stops being reasonable to materialize.
pub const HALFSQUARE_MAX_SLOTS: usize = 2048;

// ---------------------------------------------------------------------------
// Separation reports
// ---------------------------------------------------------------------------

/// How a separation verdict was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMethod {
    CanonicalLift,
    FmOracle,
    Direct,
}

impl fmt::Display for VerifyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMethod::CanonicalLift => "CANONICAL_LIFT",
            VerifyMethod::FmOracle => "FM_ORACLE",
            VerifyMethod::Direct => "DIRECT",
        })
    }
}

/// Which side of the target a mismatched point was supposed to be on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    In,
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub point: CubePoint,
    pub expected: Expectation,
}

/// Outcome of checking `P cap {0,1}^n = A`. `passed`, `mismatches` empty,
/// and `computed == target` are three spellings of the same fact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub target: BoolSet,
    pub computed: BoolSet,
    pub mismatches: Vec<Mismatch>,
    pub method: VerifyMethod,
    pub passed: bool,
}

impl SeparationReport {
    /// Report for an externally computed verdict set.
    pub fn compare(target: BoolSet, computed: BoolSet, method: VerifyMethod) -> Result<Self> {
        Self::from_sets(target, computed, method)
    }

    fn from_sets(target: BoolSet, computed: BoolSet, method: VerifyMethod) -> Result<Self> {
        let diff = computed.symmetric_difference(&target)?;
        let mismatches = diff
            .iter()
            .map(|point| Mismatch {
                point,
                expected: if target.contains(point) {
                    Expectation::In
                } else {
                    Expectation::Out
                },
            })
            .collect::<Vec<_>>();
        let passed = mismatches.is_empty();
        Ok(SeparationReport {
            target,
            computed,
            mismatches,
            method,
            passed,
        })
    }
}

// ---------------------------------------------------------------------------
// Hamming separator
// ---------------------------------------------------------------------------

/// One constraint per cube point `sigma`: the Hamming distance from `x` to
/// `sigma`, as a linear form, is required to be at least 1 when `sigma` is
/// outside `A` and at least 0 (vacuous on the cube, but bounding) when
/// inside. Exactly `2^n` constraints, emitted in encoding order.
pub fn hamming_separator(a: &BoolSet) -> Result<HPolytope> {
    let n = a.dim();
    check_dim(n)?;
    let mut p = HPolytope::new(n, "hamming separator");
    for enc in 0..1u64 << n {
        let sigma = CubePoint::new(n, enc as u32)?;
        let coeffs = (0..n)
            .map(|i| if sigma.coord(i) { rat(-1) } else { rat(1) })
            .collect();
        let threshold = i64::from(!a.contains(sigma));
        let rhs = rat(threshold - i64::from(sigma.popcount()));
        p.push(LinConstraint::new(coeffs, Relation::Ge, rhs))?;
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Edge polytope
// ---------------------------------------------------------------------------

/// Core construction over an explicit edge list in `R^dim`: nonnegativity,
/// total sum 2, and per-coordinate neighbor domination
/// `x_i <= sum of x_j over neighbors j of i`.
fn edge_polytope_from_edges(
    dim: usize,
    edges: &[(usize, usize)],
    label: &str,
) -> Result<HPolytope> {
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for &(u, v) in edges {
        debug_assert!(u < v && v < dim);
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut p = HPolytope::new(dim, label);
    for i in 0..dim {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[i] = rat(1);
        p.push(LinConstraint::new(coeffs, Relation::Ge, rat(0)))?;
    }
    p.push(LinConstraint::new(vec![rat(1); dim], Relation::Eq, rat(2)))?;
    for i in 0..dim {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[i] = rat(1);
        for &j in &nbrs[i] {
            coeffs[j] -= rat(1);
        }
        p.push(LinConstraint::new(coeffs, Relation::Le, rat(0)))?;
    }
    Ok(p)
}

/// Separator for a set of weight-2 points, read as the edge set of a graph
/// on coordinates. `2n` inequalities plus one equality.
pub fn edge_polytope(h: &BoolSet) -> Result<HPolytope> {
    let n = h.dim();
    let mut edges = Vec::with_capacity(h.cardinality());
    for p in h.iter() {
        if p.popcount() != 2 {
            return Err(Error::invalid(format!(
                "edge polytope requires weight-2 points only, found {p}"
            )));
        }
        let enc = p.encoding();
        let u = enc.trailing_zeros() as usize;
        let v = (31 - (enc & (enc - 1)).leading_zeros()) as usize;
        edges.push((u, v));
    }
    edge_polytope_from_edges(n, &edges, "edge polytope")
}

// ---------------------------------------------------------------------------
// Half-square lift
// ---------------------------------------------------------------------------

/// Slot index of each restriction: block `F1` first, then `F2`, each block
/// ordered by restriction encoding.
fn lift_slots(part: &CoordPartition, sigma: CubePoint) -> Result<(usize, usize)> {
    let (s1, s2) = part.split_encodings(sigma)?;
    let n1 = part.x1().len();
    Ok((s1 as usize, (1usize << n1) + s2 as usize))
}

/// The unique lift of `sigma` with one unit in each slot block: indicator
/// ones at the slots of its two restrictions.
pub fn canonical_lift(sigma: CubePoint, part: &CoordPartition) -> Result<Vec<Rat>> {
    let (a, b) = lift_slots(part, sigma)?;
    let n1 = part.x1().len();
    let n2 = part.x2().len();
    let mut v = vec![Rat::zero(); (1 << n1) + (1 << n2)];
    v[a] = rat(1);
    v[b] = rat(1);
    Ok(v)
}

/// Extended formulation separating `A` with `2(N1 + N2)` inequalities,
/// `N1 = 2^{|X1|}`, `N2 = 2^{|X2|}`: the edge polytope of the slot graph of
/// `A`, one convexity equality per slot block, and the projection summing
/// each slot's restriction back into the cube.
pub fn halfsquare_separator(a: &BoolSet) -> Result<ExtendedFormulation> {
    let n = a.dim();
    let part = CoordPartition::canonical(n)?;
    let n1 = part.x1().len();
    let n2 = part.x2().len();
    let slots = (1usize << n1) + (1usize << n2);
    if slots > HALFSQUARE_MAX_SLOTS {
        return Err(Error::ResourceCap {
            limit: HALFSQUARE_MAX_SLOTS,
            reached: slots,
        });
    }
    let mut edges = Vec::with_capacity(a.cardinality());
    for sigma in a.iter() {
        edges.push(lift_slots(&part, sigma)?);
    }
    edges.sort_unstable();

    let mut q = edge_polytope_from_edges(slots, &edges, "halfsquare lift")?;
    let n1_slots = 1usize << n1;
    let mut block1 = vec![Rat::zero(); slots];
    for c in block1.iter_mut().take(n1_slots) {
        *c = rat(1);
    }
    q.push(LinConstraint::new(block1, Relation::Eq, rat(1)))?;
    let mut block2 = vec![Rat::zero(); slots];
    for c in block2.iter_mut().skip(n1_slots) {
        *c = rat(1);
    }
    q.push(LinConstraint::new(block2, Relation::Eq, rat(1)))?;

    // projection: slot for restriction value s contributes s's bits to the
    // coordinates of its block
    let mut matrix = vec![vec![Rat::zero(); slots]; n];
    for s in 0..n1_slots {
        for (k, &coord) in part.x1().iter().enumerate() {
            if s >> k & 1 == 1 {
                matrix[coord][s] = rat(1);
            }
        }
    }
    for s in 0..1usize << n2 {
        for (k, &coord) in part.x2().iter().enumerate() {
            if s >> k & 1 == 1 {
                matrix[coord][n1_slots + s] = rat(1);
            }
        }
    }
    let map = AffineMap::new(matrix, vec![Rat::zero(); n], slots)?;
    ExtendedFormulation::new(q, map, Some(part))
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

/// Checks `P cap {0,1}^n = A` by full enumeration.
pub fn verify_separation_direct(p: &HPolytope, a: &BoolSet) -> Result<SeparationReport> {
    verify_separation_direct_threads(p, a, 1)
}

pub fn verify_separation_direct_threads(
    p: &HPolytope,
    a: &BoolSet,
    threads: usize,
) -> Result<SeparationReport> {
    let n = a.dim();
    if p.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim(),
        });
    }
    check_dim(n)?;
    let compiled = Compiled::from_polytope(p);
    let computed = scan_cube(n, threads, &|enc| compiled.accepts_encoding(enc))?;
    SeparationReport::from_sets(a.clone(), computed, VerifyMethod::Direct)
}

/// Checks `pi(Q) cap {0,1}^n = A`. With a coordinate partition attached,
/// membership of each point reduces to feasibility of its canonical lift;
/// without one, the FM oracle computes the image polytope outright.
pub fn verify_separation_ef(ef: &ExtendedFormulation, a: &BoolSet) -> Result<SeparationReport> {
    verify_separation_ef_threads(ef, a, 1)
}

pub fn verify_separation_ef_threads(
    ef: &ExtendedFormulation,
    a: &BoolSet,
    threads: usize,
) -> Result<SeparationReport> {
    let n = a.dim();
    if ef.target_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ef.target_dim(),
        });
    }
    check_dim(n)?;
    let Some(part) = ef.partition() else {
        let computed = project::ef_boolean_points(ef)?;
        return SeparationReport::from_sets(a.clone(), computed, VerifyMethod::FmOracle);
    };
    let slots = (1usize << part.x1().len()) + (1usize << part.x2().len());
    if ef.polytope().dim() != slots {
        return Err(Error::invalid(format!(
            "partition implies {slots} slots but the lift polytope has dimension {}",
            ef.polytope().dim()
        )));
    }
    let compiled = Compiled::from_polytope(ef.polytope());
    let part = part.clone();
    let computed = scan_cube(n, threads, &move |enc| {
        let sigma = CubePoint::new(n, enc as u32).expect("encoding in range");
        let (a_slot, b_slot) = lift_slots(&part, sigma).expect("dimensions agree");
        compiled.accepts_ones(&[a_slot, b_slot])
    })?;
    SeparationReport::from_sets(a.clone(), computed, VerifyMethod::CanonicalLift)
}

/// Evaluates `member` on every encoding of the n-cube, splitting the range
/// across threads on word-aligned boundaries; the result is identical for
/// every thread count.
fn scan_cube(
    n: usize,
    threads: usize,
    member: &(dyn Fn(u64) -> bool + Sync),
) -> Result<BoolSet> {
    let mut out = BoolSet::empty(n)?;
    let total = 1u64 << n;
    let threads = threads.max(1).min(64);
    if threads == 1 || total <= 64 {
        for enc in 0..total {
            if member(enc) {
                out.insert_encoding(enc as u32);
            }
        }
        return Ok(out);
    }
    let n_words = (total as usize).div_ceil(64);
    let per = n_words.div_ceil(threads);
    let mut words = vec![0u64; n_words];
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (t, chunk) in words.chunks_mut(per).enumerate() {
            let start = (t * per * 64) as u64;
            handles.push(scope.spawn(move || {
                for (w, word) in chunk.iter_mut().enumerate() {
                    let base = start + (w as u64) * 64;
                    for b in 0..64u64 {
                        if base + b < total && member(base + b) {
                            *word |= 1 << b;
                        }
                    }
                }
            }));
        }
        for h in handles {
            h.join().expect("verification worker panicked");
        }
    });
    for (w, word) in words.into_iter().enumerate() {
        let mut m = word;
        while m != 0 {
            let b = m.trailing_zeros() as u64;
            m &= m - 1;
            out.insert_encoding((w as u64 * 64 + b) as u32);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Graph relaxations
// ---------------------------------------------------------------------------

/// All pairwise bounds `x_u + x_v <= 1` over non-adjacent pairs — an
/// unbounded polyhedron containing every edge indicator.
pub fn pairwise_polytope(g: &GraphSet) -> Result<HPolytope> {
    if g.nv() < 2 {
        return Err(Error::invalid("pairwise polytope requires at least 2 vertices"));
    }
    let mut p = HPolytope::new(g.nv(), "pairwise bound");
    for (u, v) in g.non_edges() {
        let mut coeffs = vec![Rat::zero(); g.nv()];
        coeffs[u] = rat(1);
        coeffs[v] = rat(1);
        p.push(LinConstraint::new(coeffs, Relation::Le, rat(1)))?;
    }
    Ok(p)
}

/// For a bipartite graph: nonnegativity, one unit of mass per side, and for
/// each left vertex a bound pairing it against its right non-neighbors.
/// `nv + |L|` inequalities and 2 equalities; sandwiched between the edge
/// hull and the pairwise polytope.
pub fn edge_hull_relaxation(g: &GraphSet) -> Result<HPolytope> {
    let k = g
        .left_size()
        .ok_or_else(|| Error::invalid("edge hull relaxation requires a bipartition"))?;
    let nv = g.nv();
    let mut p = HPolytope::new(nv, "bipartite edge relaxation");
    for i in 0..nv {
        let mut coeffs = vec![Rat::zero(); nv];
        coeffs[i] = rat(1);
        p.push(LinConstraint::new(coeffs, Relation::Ge, rat(0)))?;
    }
    let mut left = vec![Rat::zero(); nv];
    for c in left.iter_mut().take(k) {
        *c = rat(1);
    }
    p.push(LinConstraint::new(left, Relation::Eq, rat(1)))?;
    let mut right = vec![Rat::zero(); nv];
    for c in right.iter_mut().skip(k) {
        *c = rat(1);
    }
    p.push(LinConstraint::new(right, Relation::Eq, rat(1)))?;
    for i in 0..k {
        let mut coeffs = vec![Rat::zero(); nv];
        coeffs[i] = rat(1);
        for j in k..nv {
            if !g.has_edge(i, j) {
                coeffs[j] = rat(1);
            }
        }
        p.push(LinConstraint::new(coeffs, Relation::Le, rat(1)))?;
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Even points outside odd-covering half-spaces
// ---------------------------------------------------------------------------

/// For a half-space `a . x >= b` required to contain every odd-weight point:
/// returns the even-weight points it misses. The point of the exercise is
/// that there is never more than one; callers assert that.
///
/// A violating odd point aborts with [`Error::OddNotContained`], reporting
/// the first one in encoding order.
pub fn halfspace_even_outside(a: &[Rat], b: &Rat) -> Result<Vec<CubePoint>> {
    let n = a.len();
    if n == 0 {
        return Err(Error::invalid("half-space needs at least one coordinate"));
    }
    check_dim(n)?;
    let hs = HPolytope::with_constraints(
        n,
        vec![LinConstraint::new(a.to_vec(), Relation::Ge, b.clone())],
        "",
    )?;
    let compiled = Compiled::from_polytope(&hs);
    let mut outside = Vec::new();
    for enc in 0..1u64 << n {
        if compiled.accepts_encoding(enc) {
            continue;
        }
        let point = CubePoint::new(n, enc as u32)?;
        if point.popcount() % 2 == 1 {
            return Err(Error::OddNotContained { witness: point });
        }
        outside.push(point);
    }
    Ok(outside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{enum_cube, join_point, odd_set, weight2_set};
    use crate::poly::IntRow;
    use crate::rat::rat_frac;

    fn set_of(n: usize, encs: &[u32]) -> BoolSet {
        let mut s = BoolSet::empty(n).unwrap();
        for &e in encs {
            s.insert_encoding(e);
        }
        s
    }

    fn norm_rows(p: &HPolytope) -> Vec<IntRow> {
        let mut rows: Vec<IntRow> = p.constraints().iter().map(IntRow::from_constraint).collect();
        rows.sort();
        rows
    }

    #[test]
    fn hamming_origin_only() {
        let a = set_of(2, &[0]);
        let p = hamming_separator(&a).unwrap();
        assert_eq!(p.num_constraints(), 4);
        // equivalent to x1 >= x2, x2 >= x1, x1+x2 <= 1, x1+x2 >= 0
        let expected = HPolytope::with_constraints(
            2,
            vec![
                LinConstraint::new(vec![rat(1), rat(1)], Relation::Ge, rat(0)),
                LinConstraint::new(vec![rat(-1), rat(1)], Relation::Ge, rat(0)),
                LinConstraint::new(vec![rat(1), rat(-1)], Relation::Ge, rat(0)),
                LinConstraint::new(vec![rat(-1), rat(-1)], Relation::Ge, rat(-1)),
            ],
            "",
        )
        .unwrap();
        assert_eq!(norm_rows(&p), norm_rows(&expected));
        assert_eq!(p.boolean_points().unwrap(), a);
    }

    #[test]
    fn hamming_full_and_empty() {
        let full = BoolSet::full(3).unwrap();
        let p = hamming_separator(&full).unwrap();
        assert_eq!(p.num_constraints(), 8);
        assert_eq!(p.boolean_points().unwrap(), full);

        let none = BoolSet::empty(1).unwrap();
        let p = hamming_separator(&none).unwrap();
        assert_eq!(p.boolean_points().unwrap().cardinality(), 0);
        assert!(!project::is_feasible(&p).unwrap());
    }

    #[test]
    fn hamming_randomized_small() {
        let mut state = 0x6a09e667f3bcc909u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state
        };
        for n in 1..=6 {
            for _ in 0..20 {
                let mut a = BoolSet::empty(n).unwrap();
                for enc in 0..1u32 << n {
                    if next() & 1 == 1 {
                        a.insert_encoding(enc);
                    }
                }
                let p = hamming_separator(&a).unwrap();
                assert_eq!(p.num_constraints(), 1 << n);
                assert_eq!(p.boolean_points().unwrap(), a, "n={n}");
            }
        }
    }

    #[test]
    fn edge_polytope_forced_point() {
        let h = set_of(2, &[0b11]);
        let p = edge_polytope(&h).unwrap();
        assert_eq!(p.num_inequalities(), 4);
        assert_eq!(p.num_equalities(), 1);
        assert_eq!(p.boolean_points().unwrap(), h);
        assert!(p.contains_point(&[rat(1), rat(1)]).unwrap());
        assert!(!p.contains_point(&[rat(2), rat(0)]).unwrap());
    }

    #[test]
    fn edge_polytope_excludes_third_point() {
        // edges {1,2} and {1,3}: the pair {2,3} fails neighbor domination
        let h = set_of(3, &[0b011, 0b101]);
        let p = edge_polytope(&h).unwrap();
        assert_eq!(p.boolean_points().unwrap(), h);
    }

    #[test]
    fn edge_polytope_rejects_wrong_weight() {
        assert!(edge_polytope(&set_of(3, &[0b001])).is_err());
        assert!(edge_polytope(&set_of(3, &[0b111])).is_err());
    }

    #[test]
    fn edge_polytope_empty_input_is_empty() {
        let p = edge_polytope(&BoolSet::empty(3).unwrap()).unwrap();
        assert_eq!(p.boolean_points().unwrap().cardinality(), 0);
        assert!(!project::is_feasible(&p).unwrap());
    }

    #[test]
    fn edge_polytope_all_pairs() {
        let h = weight2_set(4).unwrap();
        let p = edge_polytope(&h).unwrap();
        assert_eq!(p.boolean_points().unwrap(), h);
    }

    #[test]
    fn canonical_lift_examples() {
        let part = CoordPartition::canonical(2).unwrap();
        assert_eq!(
            canonical_lift(CubePoint::new(2, 0b00).unwrap(), &part).unwrap(),
            vec![rat(1), rat(0), rat(1), rat(0)]
        );
        assert_eq!(
            canonical_lift(CubePoint::new(2, 0b11).unwrap(), &part).unwrap(),
            vec![rat(0), rat(1), rat(0), rat(1)]
        );
    }

    #[test]
    fn lift_then_project_is_identity() {
        for n in 1..=6 {
            let ef = halfsquare_separator(&BoolSet::full(n).unwrap()).unwrap();
            let part = ef.partition().unwrap();
            for sigma in enum_cube(n).unwrap() {
                let lift = canonical_lift(sigma, part).unwrap();
                assert_eq!(ef.map().apply(&lift).unwrap(), sigma.to_rat_vec());
            }
        }
    }

    #[test]
    fn halfsquare_single_point() {
        let a = set_of(2, &[0b01]); // the point (1,0)
        let ef = halfsquare_separator(&a).unwrap();
        assert_eq!(ef.polytope().num_inequalities(), 2 * 4);
        assert_eq!(ef.polytope().num_equalities(), 3);
        let report = verify_separation_ef(&ef, &a).unwrap();
        assert!(report.passed);
        assert_eq!(report.method, VerifyMethod::CanonicalLift);

        // the lift of (1,1) trips the neighbor constraint at its F1 slot:
        // slot 1 is matched only with slot 2 (encoding 0 of F2)
        let lift = canonical_lift(CubePoint::new(2, 0b11).unwrap(), ef.partition().unwrap())
            .unwrap();
        let violated: Vec<&LinConstraint> = ef
            .polytope()
            .constraints()
            .iter()
            .filter(|c| !c.eval(&lift).unwrap().satisfied)
            .collect();
        assert!(!violated.is_empty());
        let neighbor_row =
            LinConstraint::new(vec![rat(0), rat(1), rat(-1), rat(0)], Relation::Le, rat(0));
        assert!(violated.iter().any(|c| **c == neighbor_row));
    }

    #[test]
    fn halfsquare_degenerate_sets() {
        let empty = BoolSet::empty(2).unwrap();
        let ef = halfsquare_separator(&empty).unwrap();
        let report = verify_separation_ef(&ef, &empty).unwrap();
        assert!(report.passed);
        assert_eq!(report.computed.cardinality(), 0);

        let full = BoolSet::full(2).unwrap();
        let ef = halfsquare_separator(&full).unwrap();
        assert!(verify_separation_ef(&ef, &full).unwrap().passed);
    }

    #[test]
    fn halfsquare_one_dimensional() {
        // X2 is empty: the second block is a single slot pinned to 1
        for encs in [vec![], vec![0u32], vec![1], vec![0, 1]] {
            let a = set_of(1, &encs);
            let ef = halfsquare_separator(&a).unwrap();
            assert!(verify_separation_ef(&ef, &a).unwrap().passed, "A={encs:?}");
        }
    }

    #[test]
    fn halfsquare_matches_fm_oracle() {
        for n in 1..=3 {
            let mut state = 0x517cc1b727220a95u64 ^ n as u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..8 {
                let mut a = BoolSet::empty(n).unwrap();
                for enc in 0..1u32 << n {
                    if next() & 1 == 1 {
                        a.insert_encoding(enc);
                    }
                }
                let ef = halfsquare_separator(&a).unwrap();
                let fast = verify_separation_ef(&ef, &a).unwrap();
                let slow = project::ef_boolean_points(&ef).unwrap();
                assert_eq!(fast.computed, slow, "n={n} A={a:?}");
                assert!(fast.passed);
            }
        }
    }

    #[test]
    fn direct_verification_and_mismatches() {
        // unit box contains all of {0,1}^2; target misses two points
        let mut box2 = HPolytope::new(2, "");
        for i in 0..2 {
            let mut c = vec![Rat::zero(); 2];
            c[i] = rat(1);
            box2.push(LinConstraint::new(c.clone(), Relation::Ge, rat(0)))
                .unwrap();
            box2.push(LinConstraint::new(c, Relation::Le, rat(1))).unwrap();
        }
        let a = set_of(2, &[0b00, 0b11]);
        let report = verify_separation_direct(&box2, &a).unwrap();
        assert!(!report.passed);
        assert_eq!(report.mismatches.len(), 2);
        assert!(report
            .mismatches
            .iter()
            .all(|m| m.expected == Expectation::Out));
        assert_eq!(report.method, VerifyMethod::Direct);
    }

    #[test]
    fn direct_verification_empty_vs_empty() {
        let empty = HPolytope::with_constraints(
            1,
            vec![
                LinConstraint::new(vec![rat(1)], Relation::Ge, rat(1)),
                LinConstraint::new(vec![rat(1)], Relation::Le, rat(0)),
            ],
            "",
        )
        .unwrap();
        let report = verify_separation_direct(&empty, &BoolSet::empty(1).unwrap()).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn threaded_scan_matches_serial() {
        let a = odd_set(8).unwrap();
        let p = hamming_separator(&a).unwrap();
        let serial = verify_separation_direct(&p, &a).unwrap();
        for threads in [2, 3, 8] {
            let par = verify_separation_direct_threads(&p, &a, threads).unwrap();
            assert_eq!(par, serial);
        }
        let ef = halfsquare_separator(&a).unwrap();
        let serial = verify_separation_ef(&ef, &a).unwrap();
        for threads in [2, 5] {
            assert_eq!(verify_separation_ef_threads(&ef, &a, threads).unwrap(), serial);
        }
    }

    #[test]
    fn pairwise_polytope_counts() {
        let complete = GraphSet::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None)
            .unwrap();
        assert_eq!(pairwise_polytope(&complete).unwrap().num_constraints(), 0);

        let empty = GraphSet::new(3, &[], None).unwrap();
        let p = pairwise_polytope(&empty).unwrap();
        assert_eq!(p.num_constraints(), 3);
        assert!(p.contains_point(&[rat(1), rat(0), rat(0)]).unwrap());
        assert!(!p.contains_point(&[rat(1), rat(1), rat(0)]).unwrap());
    }

    #[test]
    fn relaxation_complete_bipartite() {
        let g = GraphSet::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], Some(2)).unwrap();
        let p = edge_hull_relaxation(&g).unwrap();
        assert_eq!(p.num_inequalities(), 4 + 2);
        assert_eq!(p.num_equalities(), 2);
        for (u, v) in g.edges() {
            let mut x = vec![Rat::zero(); 4];
            x[u] = rat(1);
            x[v] = rat(1);
            assert!(p.contains_point(&x).unwrap(), "edge ({u},{v})");
        }
        // mass split across one side violates the side equalities
        assert!(!p
            .contains_point(&[rat(1), rat(1), rat(0), rat(0)])
            .unwrap());
    }

    #[test]
    fn relaxation_single_edge_is_a_point() {
        let g = GraphSet::new(2, &[(0, 1)], Some(1)).unwrap();
        let p = edge_hull_relaxation(&g).unwrap();
        assert!(p.contains_point(&[rat(1), rat(1)]).unwrap());
        for c in [vec![rat(1), rat(0)], vec![rat(0), rat(1)]] {
            assert_eq!(
                project::maximize_linear(&p, &c).unwrap(),
                project::LinMax::Value(rat(1))
            );
            let neg: Vec<Rat> = c.iter().map(|v| -v).collect();
            assert_eq!(
                project::maximize_linear(&p, &neg).unwrap(),
                project::LinMax::Value(rat(-1))
            );
        }
    }

    #[test]
    fn relaxation_requires_bipartition() {
        let g = GraphSet::new(3, &[(0, 1)], None).unwrap();
        assert!(edge_hull_relaxation(&g).is_err());
    }

    #[test]
    fn relaxation_inside_pairwise() {
        let g = GraphSet::new(5, &[(0, 3), (1, 3), (1, 4), (2, 4)], Some(3)).unwrap();
        let r = edge_hull_relaxation(&g).unwrap();
        let q = pairwise_polytope(&g).unwrap();
        assert!(project::is_contained(&r, &q).unwrap());
    }

    #[test]
    fn halfspace_examples() {
        // sum >= 1 over three coordinates misses only the origin
        let out = halfspace_even_outside(&[rat(1), rat(1), rat(1)], &rat(1)).unwrap();
        assert_eq!(out, vec![CubePoint::new(3, 0).unwrap()]);

        // trivial half-space misses nothing
        let out = halfspace_even_outside(&[rat(0), rat(0)], &rat(0)).unwrap();
        assert!(out.is_empty());

        // (1,-1) . x >= 0 excludes the odd point (0,1)
        match halfspace_even_outside(&[rat(1), rat(-1)], &rat(0)) {
            Err(Error::OddNotContained { witness }) => {
                assert_eq!(witness, CubePoint::new(2, 0b10).unwrap());
            }
            other => panic!("expected odd-point rejection, got {other:?}"),
        }
    }

    #[test]
    fn halfspace_fractional_coefficients() {
        let out =
            halfspace_even_outside(&[rat_frac(1, 2), rat_frac(1, 3)], &rat_frac(1, 3)).unwrap();
        assert_eq!(out, vec![CubePoint::new(2, 0).unwrap()]);
    }

    #[test]
    fn join_point_round_trip_via_partition() {
        // split/join consistency feeds the lift machinery
        let part = CoordPartition::canonical(5).unwrap();
        for p in enum_cube(5).unwrap() {
            let (a, b) = crate::cube::split_point(p, &part).unwrap();
            assert_eq!(join_point(a, b, &part).unwrap(), p);
        }
    }
}
