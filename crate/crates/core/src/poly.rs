//! Exact-rational linear constraints, H-polytopes, affine maps, and
//! extended formulations.
//!
//! An [`HPolytope`] is nothing more than a finite list of closed linear
//! constraints; it may be empty or unbounded (boundedness is a property one
//! checks with the projection oracle, not a type invariant). Strict
//! inequalities are not representable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cube::{check_dim, BoolSet, CoordPartition};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Constraint sense. `Ge` is accepted on input and rewritten to `Le`
/// internally wherever a normalized form is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

/// One linear constraint `coeffs . x REL rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinConstraint {
    pub coeffs: Vec<Rat>,
    pub rel: Relation,
    pub rhs: Rat,
}

/// Outcome of evaluating a constraint at a point. The slack is always
/// `coeffs . x - rhs`, whatever the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintEval {
    pub satisfied: bool,
    pub slack: Rat,
}

impl LinConstraint {
    pub fn new(coeffs: Vec<Rat>, rel: Relation, rhs: Rat) -> Self {
        LinConstraint { coeffs, rel, rhs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Exact slack and verdict at `x`.
    pub fn eval(&self, x: &[Rat]) -> Result<ConstraintEval> {
        if x.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                found: x.len(),
            });
        }
        let mut acc = Rat::zero();
        for (a, v) in self.coeffs.iter().zip(x) {
            if !a.is_zero() && !v.is_zero() {
                acc += a * v;
            }
        }
        let slack = acc - &self.rhs;
        let satisfied = match self.rel {
            Relation::Le => !slack.is_positive(),
            Relation::Eq => slack.is_zero(),
            Relation::Ge => !slack.is_negative(),
        };
        Ok(ConstraintEval { satisfied, slack })
    }
}

impl fmt::Display for LinConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " {} {}", self.rel, self.rhs)
    }
}

/// An intersection of closed linear constraints in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    constraints: Vec<LinConstraint>,
    label: String,
}

impl HPolytope {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        HPolytope {
            dim,
            constraints: Vec::new(),
            label: label.into(),
        }
    }

    pub fn with_constraints(
        dim: usize,
        constraints: Vec<LinConstraint>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let mut p = Self::new(dim, label);
        for c in constraints {
            p.push(c)?;
        }
        Ok(p)
    }

    pub fn push(&mut self, c: LinConstraint) -> Result<()> {
        if c.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: c.dim(),
            });
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[LinConstraint] {
        &self.constraints
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn num_inequalities(&self) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.rel != Relation::Eq)
            .count()
    }

    pub fn num_equalities(&self) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.rel == Relation::Eq)
            .count()
    }

    /// Closed membership: every constraint satisfied, evaluated in exact
    /// rational arithmetic.
    pub fn contains_point(&self, x: &[Rat]) -> Result<bool> {
        for c in &self.constraints {
            if !c.eval(x)?.satisfied {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The exact set of Boolean members, by enumeration of all `2^n` points.
    pub fn boolean_points(&self) -> Result<BoolSet> {
        if self.dim == 0 {
            return Err(Error::invalid("boolean_points requires dim >= 1"));
        }
        check_dim(self.dim)?;
        let compiled = Compiled::from_polytope(self);
        let mut out = BoolSet::empty(self.dim)?;
        for enc in 0..1u64 << self.dim {
            if compiled.accepts_encoding(enc) {
                out.insert_encoding(enc as u32);
            }
        }
        Ok(out)
    }
}

/// An affine map `x -> matrix * x + offset` from `R^source` to `R^target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    target: usize,
    source: usize,
    /// `target` rows of `source` entries.
    matrix: Vec<Vec<Rat>>,
    offset: Vec<Rat>,
}

impl AffineMap {
    pub fn new(matrix: Vec<Vec<Rat>>, offset: Vec<Rat>, source: usize) -> Result<Self> {
        let target = matrix.len();
        if offset.len() != target {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: offset.len(),
            });
        }
        for row in &matrix {
            if row.len() != source {
                return Err(Error::DimensionMismatch {
                    expected: source,
                    found: row.len(),
                });
            }
        }
        Ok(AffineMap {
            target,
            source,
            matrix,
            offset,
        })
    }

    pub fn identity(d: usize) -> Self {
        let matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        AffineMap {
            target: d,
            source: d,
            matrix,
            offset: vec![Rat::zero(); d],
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[Rat] {
        &self.offset
    }

    /// Exact `matrix . x + offset`.
    pub fn apply(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.source {
            return Err(Error::DimensionMismatch {
                expected: self.source,
                found: x.len(),
            });
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, b)| {
                let mut acc = b.clone();
                for (a, v) in row.iter().zip(x) {
                    if !a.is_zero() && !v.is_zero() {
                        acc += a * v;
                    }
                }
                acc
            })
            .collect())
    }
}

/// A polytope `Q` together with an affine map; represents `P = pi(Q)`.
///
/// The optional coordinate partition marks half-square-shaped formulations,
/// for which the canonical-lift membership test applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedFormulation {
    q: HPolytope,
    map: AffineMap,
    part: Option<CoordPartition>,
}

impl ExtendedFormulation {
    pub fn new(q: HPolytope, map: AffineMap, part: Option<CoordPartition>) -> Result<Self> {
        if map.source_dim() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: q.dim(),
                found: map.source_dim(),
            });
        }
        if let Some(p) = &part {
            if p.dim() != map.target_dim() {
                return Err(Error::DimensionMismatch {
                    expected: map.target_dim(),
                    found: p.dim(),
                });
            }
        }
        Ok(ExtendedFormulation { q, map, part })
    }

    pub fn polytope(&self) -> &HPolytope {
        &self.q
    }

    pub fn map(&self) -> &AffineMap {
        &self.map
    }

    pub fn partition(&self) -> Option<&CoordPartition> {
        self.part.as_ref()
    }

    pub fn target_dim(&self) -> usize {
        self.map.target_dim()
    }
}

// ---------------------------------------------------------------------------
// Normalized integer rows
// ---------------------------------------------------------------------------

/// Constraint sense after normalization; `Ge` has been negated away.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum NormRel {
    Le,
    Eq,
}

/// A constraint scaled to a primitive integer row: the gcd of all entries
/// (coefficients and right-hand side) is 1, `Ge` rewritten to `Le`, and
/// equalities sign-fixed so the first nonzero coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct IntRow {
    pub rel: NormRel,
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
}

impl IntRow {
    pub fn from_constraint(c: &LinConstraint) -> IntRow {
        let mut lcm = BigInt::one();
        for a in c.coeffs.iter().chain(std::iter::once(&c.rhs)) {
            lcm = lcm.lcm(a.denom());
        }
        let scale = |r: &Rat| -> BigInt { r.numer() * (&lcm / r.denom()) };
        let mut coeffs: Vec<BigInt> = c.coeffs.iter().map(scale).collect();
        let mut rhs = scale(&c.rhs);
        if c.rel == Relation::Ge {
            for a in &mut coeffs {
                *a = -&*a;
            }
            rhs = -rhs;
        }
        let rel = if c.rel == Relation::Eq {
            NormRel::Eq
        } else {
            NormRel::Le
        };
        let mut row = IntRow { rel, coeffs, rhs };
        row.reduce();
        row
    }

    /// Divides by the gcd of all entries and applies the equality sign
    /// convention.
    pub fn reduce(&mut self) {
        let mut g = self.rhs.abs();
        for a in &self.coeffs {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for a in &mut self.coeffs {
                *a = &*a / &g;
            }
            self.rhs = &self.rhs / &g;
        }
        if self.rel == NormRel::Eq {
            let flip = match self.coeffs.iter().find(|a| !a.is_zero()) {
                Some(first) => first.is_negative(),
                None => self.rhs.is_negative(),
            };
            if flip {
                for a in &mut self.coeffs {
                    *a = -&*a;
                }
                self.rhs = -&self.rhs;
            }
        }
    }

    pub fn is_zero_coeffs(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    /// For a row with all-zero coefficients: does the relation hold?
    pub fn zero_row_satisfied(&self) -> bool {
        match self.rel {
            NormRel::Le => !self.rhs.is_negative(),
            NormRel::Eq => self.rhs.is_zero(),
        }
    }

    pub fn to_constraint(&self) -> LinConstraint {
        LinConstraint::new(
            self.coeffs
                .iter()
                .map(|a| Rat::from_integer(a.clone()))
                .collect(),
            match self.rel {
                NormRel::Le => Relation::Le,
                NormRel::Eq => Relation::Eq,
            },
            Rat::from_integer(self.rhs.clone()),
        )
    }
}

// ---------------------------------------------------------------------------
// Compiled evaluator for 0/1 points
// ---------------------------------------------------------------------------

/// A constraint system pre-scaled to integers for fast, still exact,
/// membership tests of 0/1 vectors. Rows whose entries fit in `i64` use a
/// machine-integer path with `i128` accumulation (overflow-free for up to
/// 2^50 summands); anything else falls back to `BigInt`.
pub(crate) enum CompiledRow {
    Small { eq: bool, coeffs: Vec<i64>, rhs: i64 },
    Big { eq: bool, coeffs: Vec<BigInt>, rhs: BigInt },
}

pub(crate) struct Compiled {
    rows: Vec<CompiledRow>,
}

impl Compiled {
    pub fn from_polytope(p: &HPolytope) -> Compiled {
        let rows = p
            .constraints()
            .iter()
            .map(|c| {
                let row = IntRow::from_constraint(c);
                let eq = row.rel == NormRel::Eq;
                let small: Option<Vec<i64>> =
                    row.coeffs.iter().map(|a| i64::try_from(a).ok()).collect();
                match (small, i64::try_from(&row.rhs)) {
                    (Some(coeffs), Ok(rhs)) => CompiledRow::Small { eq, coeffs, rhs },
                    _ => CompiledRow::Big {
                        eq,
                        coeffs: row.coeffs,
                        rhs: row.rhs,
                    },
                }
            })
            .collect();
        Compiled { rows }
    }

    /// Membership of the 0/1 point given by its little-endian encoding.
    pub fn accepts_encoding(&self, enc: u64) -> bool {
        self.rows.iter().all(|row| match row {
            CompiledRow::Small { eq, coeffs, rhs } => {
                let mut sum: i128 = 0;
                let mut bits = enc;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sum += coeffs[i] as i128;
                }
                if *eq {
                    sum == *rhs as i128
                } else {
                    sum <= *rhs as i128
                }
            }
            CompiledRow::Big { eq, coeffs, rhs } => {
                let mut sum = BigInt::zero();
                let mut bits = enc;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sum += &coeffs[i];
                }
                if *eq {
                    sum == *rhs
                } else {
                    sum <= *rhs
                }
            }
        })
    }

    /// Membership of the 0/1 point whose one-coordinates are `ones`
    /// (for ambient dimensions past 64).
    pub fn accepts_ones(&self, ones: &[usize]) -> bool {
        self.rows.iter().all(|row| match row {
            CompiledRow::Small { eq, coeffs, rhs } => {
                let sum: i128 = ones.iter().map(|&i| coeffs[i] as i128).sum();
                if *eq {
                    sum == *rhs as i128
                } else {
                    sum <= *rhs as i128
                }
            }
            CompiledRow::Big { eq, coeffs, rhs } => {
                let mut sum = BigInt::zero();
                for &i in ones {
                    sum += &coeffs[i];
                }
                if *eq {
                    sum == *rhs
                } else {
                    sum <= *rhs
                }
            }
        })
    }
}
