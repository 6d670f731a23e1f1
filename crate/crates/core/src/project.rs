//! Exact Fourier–Motzkin elimination and the queries built on it:
//! orthogonal projection, linear maximization, constraint validity,
//! containment, and projection of extended formulations.
//!
//! This module is the slow, trustworthy oracle. It never approximates: every
//! step is a nonnegative combination of integer rows, so verdicts are exact.
//! The price is the usual FM blowup, guarded by a constraint-count cap that
//! surfaces as [`Error::ResourceCap`] rather than silent truncation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cube::BoolSet;
use crate::error::{Error, Result};
use crate::poly::{
    AffineMap, ExtendedFormulation, HPolytope, IntRow, LinConstraint, NormRel, Relation,
};
use crate::rat::{rat, Rat};

/// Default ceiling on intermediate constraint counts during elimination.
pub const DEFAULT_FM_CAP: usize = 20_000;

/// Result of exact linear maximization over an H-polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinMax {
    Value(Rat),
    Unbounded,
    Infeasible,
}

// ---------------------------------------------------------------------------
// Elimination engine
// ---------------------------------------------------------------------------

struct System {
    dim: usize,
    rows: Vec<IntRow>,
    cap: usize,
    /// Set once a row `0 <= negative` or `0 = nonzero` is derived; the system
    /// is then known empty and carries no other rows.
    infeasible: bool,
}

/// `am * a + bm * b` entrywise, with the given relation.
fn combine(am: &BigInt, a: &IntRow, bm: &BigInt, b: &IntRow, rel: NormRel) -> IntRow {
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| am * x + bm * y)
        .collect();
    let rhs = am * &a.rhs + bm * &b.rhs;
    IntRow { rel, coeffs, rhs }
}

impl System {
    fn from_polytope(p: &HPolytope, cap: usize) -> Result<System> {
        let mut sys = System {
            dim: p.dim(),
            rows: Vec::with_capacity(p.num_constraints()),
            cap,
            infeasible: false,
        };
        let rows = p
            .constraints()
            .iter()
            .map(IntRow::from_constraint)
            .collect();
        sys.absorb(rows)?;
        Ok(sys)
    }

    /// Filters zero rows, detects contradictions, sorts, deduplicates, and
    /// enforces the cap.
    fn absorb(&mut self, rows: Vec<IntRow>) -> Result<()> {
        let mut kept = Vec::with_capacity(rows.len());
        for r in rows {
            if r.is_zero_coeffs() {
                if !r.zero_row_satisfied() {
                    self.infeasible = true;
                    self.rows.clear();
                    return Ok(());
                }
            } else {
                kept.push(r);
            }
        }
        kept.sort();
        kept.dedup();
        if kept.len() > self.cap {
            return Err(Error::ResourceCap {
                limit: self.cap,
                reached: kept.len(),
            });
        }
        self.rows = kept;
        Ok(())
    }

    /// Eliminates the variable at (current) position `j`, reducing the
    /// dimension by one. Substitutes through an equality when one mentions
    /// the variable; otherwise forms all lower/upper pairs.
    fn eliminate_var(&mut self, j: usize) -> Result<()> {
        debug_assert!(j < self.dim);
        self.dim -= 1;
        if self.infeasible {
            return Ok(());
        }
        let pivot_idx = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.rel == NormRel::Eq && !r.coeffs[j].is_zero())
            .min_by_key(|(i, r)| (r.coeffs[j].abs(), *i))
            .map(|(i, _)| i);

        let mut out: Vec<IntRow> = Vec::new();
        if let Some(pi) = pivot_idx {
            let pivot = self.rows[pi].clone();
            let ej = &pivot.coeffs[j];
            let s = ej.abs();
            for (i, r) in self.rows.iter().enumerate() {
                if i == pi {
                    continue;
                }
                if r.coeffs[j].is_zero() {
                    out.push(r.clone());
                } else {
                    // s*r - t*pivot with t chosen to cancel coordinate j;
                    // s > 0 keeps inequality directions intact.
                    let t = if ej.is_negative() {
                        -&r.coeffs[j]
                    } else {
                        r.coeffs[j].clone()
                    };
                    out.push(combine(&s, r, &-t, &pivot, r.rel));
                }
            }
        } else {
            let mut lowers: Vec<&IntRow> = Vec::new();
            let mut uppers: Vec<&IntRow> = Vec::new();
            for r in &self.rows {
                let c = &r.coeffs[j];
                if c.is_zero() {
                    out.push(r.clone());
                } else if c.is_positive() {
                    uppers.push(r);
                } else {
                    lowers.push(r);
                }
            }
            let projected = out.len() + lowers.len() * uppers.len();
            if projected > self.cap {
                return Err(Error::ResourceCap {
                    limit: self.cap,
                    reached: projected,
                });
            }
            for l in &lowers {
                for u in &uppers {
                    // u_j * l + (-l_j) * u; both multipliers positive
                    out.push(combine(&u.coeffs[j], l, &-&l.coeffs[j], u, NormRel::Le));
                }
            }
        }
        for r in &mut out {
            r.coeffs.remove(j);
            r.reduce();
        }
        self.absorb(out)
    }

    fn into_polytope(self, label: String) -> HPolytope {
        let constraints = if self.infeasible {
            vec![LinConstraint::new(
                vec![Rat::zero(); self.dim],
                Relation::Le,
                rat(-1),
            )]
        } else {
            self.rows.iter().map(IntRow::to_constraint).collect()
        };
        HPolytope::with_constraints(self.dim, constraints, label)
            .expect("rows carry the system dimension")
    }
}

// ---------------------------------------------------------------------------
// Public queries
// ---------------------------------------------------------------------------

/// Orthogonal projection along coordinate `var` (0-based): eliminates the
/// variable, returning a polytope in dimension `d - 1` whose points are
/// exactly those obtainable by dropping coordinate `var` from points of `p`.
/// An empty input stays empty — the output then carries a `0 <= -1` row.
pub fn fm_eliminate(p: &HPolytope, var: usize) -> Result<HPolytope> {
    if var >= p.dim() {
        return Err(Error::invalid(format!(
            "variable index {var} out of range for dimension {}",
            p.dim()
        )));
    }
    let mut sys = System::from_polytope(p, DEFAULT_FM_CAP)?;
    sys.eliminate_var(var)?;
    Ok(sys.into_polytope(p.label().to_string()))
}

/// Projection onto the coordinate subset `coords` (0-based). Result
/// coordinates follow ascending original index, whatever the order given.
///
/// Elimination order: any variable appearing in an equality is substituted
/// away first; otherwise the variable with the fewest lower-times-upper
/// bound pairs goes next.
pub fn project_onto(p: &HPolytope, coords: &[usize]) -> Result<HPolytope> {
    project_onto_with(p, coords, DEFAULT_FM_CAP)
}

pub fn project_onto_with(p: &HPolytope, coords: &[usize], cap: usize) -> Result<HPolytope> {
    let keep: BTreeSet<usize> = coords.iter().copied().collect();
    if let Some(&bad) = keep.iter().find(|&&i| i >= p.dim()) {
        return Err(Error::invalid(format!(
            "coordinate {bad} out of range for dimension {}",
            p.dim()
        )));
    }
    let mut sys = System::from_polytope(p, cap)?;
    let mut orig: Vec<usize> = (0..p.dim()).collect();
    while !sys.infeasible {
        let Some(pos) = choose_victim(&sys, &orig, &keep) else {
            break;
        };
        sys.eliminate_var(pos)?;
        orig.remove(pos);
    }
    if sys.infeasible {
        sys.dim = keep.len();
        sys.rows.clear();
    }
    Ok(sys.into_polytope(p.label().to_string()))
}

/// Position of the next variable to eliminate, or `None` when only kept
/// coordinates remain.
fn choose_victim(sys: &System, orig: &[usize], keep: &BTreeSet<usize>) -> Option<usize> {
    let candidates: Vec<usize> = (0..orig.len())
        .filter(|&pos| !keep.contains(&orig[pos]))
        .collect();
    if candidates.is_empty() {
        return None;
    }
    // equality substitution is cheap and never grows the system
    for &pos in &candidates {
        if sys
            .rows
            .iter()
            .any(|r| r.rel == NormRel::Eq && !r.coeffs[pos].is_zero())
        {
            return Some(pos);
        }
    }
    candidates
        .into_iter()
        .min_by_key(|&pos| {
            let mut lo = 0usize;
            let mut hi = 0usize;
            for r in &sys.rows {
                let c = &r.coeffs[pos];
                if c.is_positive() {
                    hi += 1;
                } else if c.is_negative() {
                    lo += 1;
                }
            }
            (lo * hi, pos)
        })
}

/// Exact maximum of `c . x` over `p`, by introducing `t = c . x` and
/// eliminating every original variable.
pub fn maximize_linear(p: &HPolytope, c: &[Rat]) -> Result<LinMax> {
    maximize_linear_with(p, c, DEFAULT_FM_CAP)
}

pub fn maximize_linear_with(p: &HPolytope, c: &[Rat], cap: usize) -> Result<LinMax> {
    let d = p.dim();
    if c.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: c.len(),
        });
    }
    let mut ext = HPolytope::new(d + 1, "");
    for con in p.constraints() {
        let mut coeffs = con.coeffs.clone();
        coeffs.push(Rat::zero());
        ext.push(LinConstraint::new(coeffs, con.rel, con.rhs.clone()))?;
    }
    let mut tc = c.to_vec();
    tc.push(rat(-1));
    ext.push(LinConstraint::new(tc, Relation::Eq, Rat::zero()))?;

    let tp = project_onto_with(&ext, &[d], cap)?;
    let mut upper: Option<Rat> = None;
    let mut lower: Option<Rat> = None;
    let mut tighten = |bound: Rat, is_upper: bool| {
        let slot = if is_upper { &mut upper } else { &mut lower };
        let replace = match slot {
            Some(cur) => {
                if is_upper {
                    bound < *cur
                } else {
                    bound > *cur
                }
            }
            None => true,
        };
        if replace {
            *slot = Some(bound);
        }
    };
    for con in tp.constraints() {
        let a = &con.coeffs[0];
        if a.is_zero() {
            // only the infeasibility marker survives absorption with zero coeffs
            if !con.eval(&[Rat::zero()]).expect("dim 1").satisfied {
                return Ok(LinMax::Infeasible);
            }
            continue;
        }
        let bound = &con.rhs / a;
        match con.rel {
            Relation::Le => tighten(bound, a.is_positive()),
            Relation::Ge => tighten(bound, a.is_negative()),
            Relation::Eq => {
                tighten(bound.clone(), true);
                tighten(bound, false);
            }
        }
    }
    match (lower, upper) {
        (Some(lo), Some(up)) if lo > up => Ok(LinMax::Infeasible),
        (_, Some(up)) => Ok(LinMax::Value(up)),
        (_, None) => Ok(LinMax::Unbounded),
    }
}

/// Does `c` hold at every point of `p`? Vacuously true when `p` is empty.
pub fn is_valid(p: &HPolytope, c: &LinConstraint) -> Result<bool> {
    if c.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: c.dim(),
        });
    }
    let le_ok = |p: &HPolytope, coeffs: &[Rat], rhs: &Rat| -> Result<bool> {
        Ok(match maximize_linear(p, coeffs)? {
            LinMax::Value(v) => v <= *rhs,
            LinMax::Unbounded => false,
            LinMax::Infeasible => true,
        })
    };
    let neg: Vec<Rat> = c.coeffs.iter().map(|a| -a).collect();
    Ok(match c.rel {
        Relation::Le => le_ok(p, &c.coeffs, &c.rhs)?,
        Relation::Ge => le_ok(p, &neg, &-&c.rhs)?,
        Relation::Eq => le_ok(p, &c.coeffs, &c.rhs)? && le_ok(p, &neg, &-&c.rhs)?,
    })
}

/// `p` contained in `q`: every constraint of `q` valid over `p`.
pub fn is_contained(p: &HPolytope, q: &HPolytope) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    for c in q.constraints() {
        if !is_valid(p, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Emptiness test by eliminating every variable.
pub fn is_feasible(p: &HPolytope) -> Result<bool> {
    let proj = project_onto(p, &[])?;
    Ok(proj.num_constraints() == 0)
}

/// Boolean members of the image polytope `pi(Q)`, computed without the
/// canonical-lift shortcut: the graph system `{(x, y) : x in Q, y = pi(x)}`
/// is built explicitly and the source variables are eliminated.
pub fn ef_boolean_points(ef: &ExtendedFormulation) -> Result<BoolSet> {
    ef_boolean_points_with(ef, DEFAULT_FM_CAP)
}

pub fn ef_boolean_points_with(ef: &ExtendedFormulation, cap: usize) -> Result<BoolSet> {
    let q = ef.polytope();
    let map: &AffineMap = ef.map();
    let m = map.source_dim();
    let n = map.target_dim();
    if n == 0 {
        return Err(Error::invalid("image dimension must be at least 1"));
    }
    let mut sys = HPolytope::new(m + n, "");
    for con in q.constraints() {
        let mut coeffs = con.coeffs.clone();
        coeffs.extend(std::iter::repeat(Rat::zero()).take(n));
        sys.push(LinConstraint::new(coeffs, con.rel, con.rhs.clone()))?;
    }
    for i in 0..n {
        // row_i(M) . x - y_i = -b_i
        let mut coeffs = map.matrix()[i].clone();
        coeffs.extend((0..n).map(|k| if k == i { rat(-1) } else { Rat::zero() }));
        sys.push(LinConstraint::new(coeffs, Relation::Eq, -&map.offset()[i]))?;
    }
    let coords: Vec<usize> = (m..m + n).collect();
    let image = project_onto_with(&sys, &coords, cap)?;
    image.boolean_points()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntRow;
    use crate::rat::rat_frac;

    fn poly(dim: usize, rows: &[(&[i64], Relation, i64)]) -> HPolytope {
        let mut p = HPolytope::new(dim, "");
        for (coeffs, rel, rhs) in rows {
            p.push(LinConstraint::new(
                coeffs.iter().map(|&v| rat(v)).collect(),
                *rel,
                rat(*rhs),
            ))
            .unwrap();
        }
        p
    }

    fn unit_box(d: usize) -> HPolytope {
        let mut p = HPolytope::new(d, "");
        for i in 0..d {
            let mut row = vec![0i64; d];
            row[i] = -1;
            p.push(LinConstraint::new(
                row.iter().map(|&v| rat(v)).collect(),
                Relation::Le,
                rat(0),
            ))
            .unwrap();
            let mut row = vec![0i64; d];
            row[i] = 1;
            p.push(LinConstraint::new(
                row.iter().map(|&v| rat(v)).collect(),
                Relation::Le,
                rat(1),
            ))
            .unwrap();
        }
        p
    }

    fn norm_rows(p: &HPolytope) -> Vec<IntRow> {
        let mut rows: Vec<IntRow> = p.constraints().iter().map(IntRow::from_constraint).collect();
        rows.sort();
        rows
    }

    #[test]
    fn eliminate_by_substitution() {
        // {0 <= y <= 1, x = y} minus y is the segment [0, 1]
        let p = poly(
            2,
            &[
                (&[0, -1], Relation::Le, 0),
                (&[0, 1], Relation::Le, 1),
                (&[1, -1], Relation::Eq, 0),
            ],
        );
        let q = fm_eliminate(&p, 1).unwrap();
        assert_eq!(
            norm_rows(&q),
            norm_rows(&poly(1, &[(&[-1], Relation::Le, 0), (&[1], Relation::Le, 1)]))
        );
    }

    #[test]
    fn eliminate_by_pairing() {
        // {x + y <= 1, x - y <= 1} minus y leaves x <= 1
        let p = poly(2, &[(&[1, 1], Relation::Le, 1), (&[1, -1], Relation::Le, 1)]);
        let q = fm_eliminate(&p, 1).unwrap();
        assert_eq!(norm_rows(&q), norm_rows(&poly(1, &[(&[1], Relation::Le, 1)])));
    }

    #[test]
    fn eliminate_preserves_infeasibility() {
        // {y <= 0, y >= 1}, x free
        let p = poly(2, &[(&[0, 1], Relation::Le, 0), (&[0, 1], Relation::Ge, 1)]);
        let q = fm_eliminate(&p, 1).unwrap();
        assert_eq!(q.dim(), 1);
        // derived contradiction: 0 <= -1
        assert_eq!(q.num_constraints(), 1);
        let row = &q.constraints()[0];
        assert!(row.coeffs[0].is_zero());
        assert!(!row.eval(&[rat(0)]).unwrap().satisfied);
        assert!(!is_feasible(&p).unwrap());
    }

    #[test]
    fn box_projection() {
        let p = unit_box(3);
        let q = project_onto(&p, &[0, 1]).unwrap();
        assert_eq!(q.dim(), 2);
        // equal as sets, whatever the constraint presentation
        assert!(is_contained(&q, &unit_box(2)).unwrap());
        assert!(is_contained(&unit_box(2), &q).unwrap());
    }

    #[test]
    fn point_projection() {
        // {x = 1, y = 2} onto x
        let p = poly(2, &[(&[1, 0], Relation::Eq, 1), (&[0, 1], Relation::Eq, 2)]);
        let q = project_onto(&p, &[0]).unwrap();
        assert_eq!(norm_rows(&q), norm_rows(&poly(1, &[(&[1], Relation::Eq, 1)])));
    }

    #[test]
    fn projection_coordinate_order() {
        // x = 1, y = 2, z = 3; keeping {2, 0} returns (x, z) in ascending order
        let p = poly(
            3,
            &[
                (&[1, 0, 0], Relation::Eq, 1),
                (&[0, 1, 0], Relation::Eq, 2),
                (&[0, 0, 1], Relation::Eq, 3),
            ],
        );
        let q = project_onto(&p, &[2, 0]).unwrap();
        assert_eq!(
            norm_rows(&q),
            norm_rows(&poly(
                2,
                &[(&[1, 0], Relation::Eq, 1), (&[0, 1], Relation::Eq, 3)]
            ))
        );
    }

    #[test]
    fn maximize_over_boxes() {
        for d in 1..=6 {
            let ones = vec![rat(1); d];
            assert_eq!(
                maximize_linear(&unit_box(d), &ones).unwrap(),
                LinMax::Value(rat(d as i64))
            );
        }
    }

    #[test]
    fn maximize_unbounded_and_infeasible() {
        let ray = poly(1, &[(&[1], Relation::Ge, 0)]);
        assert_eq!(maximize_linear(&ray, &[rat(1)]).unwrap(), LinMax::Unbounded);
        // max of -x over x >= 0 is 0
        assert_eq!(
            maximize_linear(&ray, &[rat(-1)]).unwrap(),
            LinMax::Value(rat(0))
        );

        let empty = poly(1, &[(&[1], Relation::Le, 0), (&[1], Relation::Ge, 1)]);
        assert_eq!(
            maximize_linear(&empty, &[rat(1)]).unwrap(),
            LinMax::Infeasible
        );
    }

    #[test]
    fn maximize_with_fractional_objective() {
        let b = unit_box(2);
        let c = vec![rat_frac(1, 2), rat_frac(1, 3)];
        assert_eq!(maximize_linear(&b, &c).unwrap(), LinMax::Value(rat_frac(5, 6)));
    }

    #[test]
    fn validity_checks() {
        let b = unit_box(2);
        let loose = LinConstraint::new(vec![rat(1), rat(1)], Relation::Le, rat(2));
        let tight = LinConstraint::new(vec![rat(1), rat(1)], Relation::Le, rat(1));
        assert!(is_valid(&b, &loose).unwrap());
        assert!(!is_valid(&b, &tight).unwrap());

        // everything is valid over the empty set
        let empty = poly(2, &[(&[1, 0], Relation::Le, -1), (&[1, 0], Relation::Ge, 0)]);
        assert!(is_valid(&empty, &tight).unwrap());
    }

    #[test]
    fn containment_checks() {
        let small = unit_box(2);
        let mut big = poly(
            2,
            &[
                (&[-1, 0], Relation::Le, 0),
                (&[0, -1], Relation::Le, 0),
                (&[1, 0], Relation::Le, 2),
                (&[0, 1], Relation::Le, 2),
            ],
        );
        big.set_label("big box");
        assert!(is_contained(&small, &big).unwrap());
        assert!(!is_contained(&big, &small).unwrap());
    }

    #[test]
    fn identity_ef_projection() {
        let ef =
            ExtendedFormulation::new(unit_box(2), AffineMap::identity(2), None).unwrap();
        let pts = ef_boolean_points(&ef).unwrap();
        assert_eq!(pts, BoolSet::full(2).unwrap());
    }

    #[test]
    fn empty_ef_projection() {
        let empty = poly(2, &[(&[1, 0], Relation::Le, -1), (&[-1, 0], Relation::Le, 0)]);
        let ef = ExtendedFormulation::new(empty, AffineMap::identity(2), None).unwrap();
        assert_eq!(ef_boolean_points(&ef).unwrap().cardinality(), 0);
    }

    #[test]
    fn scaled_ef_projection() {
        // y = 2x over x in [0, 1/2]: Boolean members {0, 1}
        let seg = poly(1, &[(&[-2], Relation::Le, 0), (&[2], Relation::Le, 1)]);
        let map = AffineMap::new(vec![vec![rat(2)]], vec![rat(0)], 1).unwrap();
        let ef = ExtendedFormulation::new(seg, map, None).unwrap();
        assert_eq!(ef_boolean_points(&ef).unwrap(), BoolSet::full(1).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        // dense rows pair up quadratically; a tiny cap must trip
        let p = poly(
            3,
            &[
                (&[1, 2, 1], Relation::Le, 5),
                (&[2, 1, -1], Relation::Le, 5),
                (&[1, -1, 1], Relation::Le, 5),
                (&[-1, 1, 2], Relation::Le, 5),
                (&[-2, -1, 1], Relation::Le, 5),
                (&[1, 1, -2], Relation::Le, 5),
            ],
        );
        match project_onto_with(&p, &[0], 4) {
            Err(Error::ResourceCap { limit: 4, .. }) => {}
            other => panic!("expected resource cap, got {other:?}"),
        }
    }

    #[test]
    fn elimination_preserves_feasibility_randomized() {
        // LCG-driven systems: emptiness must be invariant under elimination
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let dim = 2 + (next() % 3) as usize;
            let m = 3 + (next() % 6) as usize;
            let mut p = HPolytope::new(dim, "");
            for _ in 0..m {
                let coeffs: Vec<Rat> =
                    (0..dim).map(|_| rat((next() % 7) as i64 - 3)).collect();
                let rel = if next() % 4 == 0 { Relation::Eq } else { Relation::Le };
                p.push(LinConstraint::new(coeffs, rel, rat((next() % 5) as i64 - 2)))
                    .unwrap();
            }
            let before = is_feasible(&p).unwrap();
            let var = (next() % dim as u64) as usize;
            let q = fm_eliminate(&p, var).unwrap();
            let after = is_feasible(&q).unwrap();
            assert_eq!(before, after, "feasibility changed for {p:?}");
        }
    }
}
