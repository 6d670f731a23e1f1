//! Boolean cube points, explicit subsets, and coordinate partitions.
//!
//! Points of `{0,1}^n` are encoded little-endian: bit `i` of the integer
//! encoding is coordinate `i`. The encoding is fixed across all file formats
//! and reports, where a point prints as a 0/1 string with coordinate 1 first.
//!
//! Everything here is enumeration-backed: a subset is a `2^n`-bit bitmap and
//! all verification walks the full cube. The dimension cap keeps that honest.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default enumeration cap: `2^24` bits is a 2 MiB bitmap.
pub const DEFAULT_MAX_DIM: usize = 24;

/// Hard ceiling for the `SEPCUBE_MAX_N` override; beyond this the bitmaps
/// stop fitting comfortably in memory.
pub const HARD_MAX_DIM: usize = 30;

/// The active cube cap: `SEPCUBE_MAX_N` if set (clamped to the hard ceiling),
/// else 24. Read once per process.
pub fn max_dim() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("SEPCUBE_MAX_N")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .map(|v| v.min(HARD_MAX_DIM))
            .unwrap_or(DEFAULT_MAX_DIM)
    })
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    let cap = max_dim();
    if n > cap {
        Err(Error::DimensionCap { n, cap })
    } else {
        Ok(())
    }
}

/// A point of `{0,1}^n`, stored as its integer encoding.
///
/// `n = 0` is allowed and denotes the empty string; it arises as the
/// restriction of a point to an empty coordinate block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubePoint {
    n: usize,
    bits: u32,
}

impl CubePoint {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_dim(n)?;
        if n < 32 && bits >= (1u32 << n) {
            return Err(Error::invalid(format!(
                "encoding {bits} out of range for dimension {n}"
            )));
        }
        Ok(CubePoint { n, bits })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn encoding(&self) -> u32 {
        self.bits
    }

    /// Coordinate `i` (0-based).
    pub fn coord(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        self.bits >> i & 1 == 1
    }

    pub fn popcount(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinates as exact 0/1 rationals, for polytope membership tests.
    pub fn to_rat_vec(&self) -> Vec<crate::rat::Rat> {
        (0..self.n)
            .map(|i| crate::rat::rat(self.coord(i) as i64))
            .collect()
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// All `2^n` points in increasing integer encoding.
pub fn enum_cube(n: usize) -> Result<CubeIter> {
    if n == 0 {
        return Err(Error::invalid("enum_cube requires n >= 1"));
    }
    check_dim(n)?;
    Ok(CubeIter {
        n,
        next: 0,
        stop: 1u64 << n,
    })
}

#[derive(Debug, Clone)]
pub struct CubeIter {
    n: usize,
    next: u64,
    stop: u64,
}

impl Iterator for CubeIter {
    type Item = CubePoint;

    fn next(&mut self) -> Option<CubePoint> {
        if self.next >= self.stop {
            return None;
        }
        let p = CubePoint {
            n: self.n,
            bits: self.next as u32,
        };
        self.next += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.stop - self.next) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for CubeIter {}

/// A subset of `{0,1}^n` as an explicit `2^n`-bit membership map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolSet {
    n: usize,
    words: Vec<u64>,
}

impl BoolSet {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("BoolSet requires n >= 1"));
        }
        check_dim(n)?;
        let nbits = 1usize << n;
        Ok(BoolSet {
            n,
            words: vec![0; nbits.div_ceil(64)],
        })
    }

    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for w in &mut s.words {
            *w = u64::MAX;
        }
        s.mask_tail();
        Ok(s)
    }

    /// Zeroes the unused bits of the last word (dimension < 6).
    fn mask_tail(&mut self) {
        let nbits = 1usize << self.n;
        let rem = nbits % 64;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }

    pub fn from_points<I: IntoIterator<Item = CubePoint>>(n: usize, pts: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for p in pts {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.dim(),
                });
            }
            s.insert(p);
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn contains(&self, p: CubePoint) -> bool {
        debug_assert_eq!(p.dim(), self.n);
        self.contains_encoding(p.encoding())
    }

    pub fn contains_encoding(&self, enc: u32) -> bool {
        let i = enc as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, p: CubePoint) {
        debug_assert_eq!(p.dim(), self.n);
        self.insert_encoding(p.encoding());
    }

    pub fn insert_encoding(&mut self, enc: u32) {
        let i = enc as usize;
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, p: CubePoint) {
        debug_assert_eq!(p.dim(), self.n);
        let i = p.encoding() as usize;
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &BoolSet) -> Result<BoolSet> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &BoolSet) -> Result<BoolSet> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn symmetric_difference(&self, other: &BoolSet) -> Result<BoolSet> {
        self.zip_with(other, |a, b| a ^ b)
    }

    fn zip_with(&self, other: &BoolSet, f: impl Fn(u64, u64) -> u64) -> Result<BoolSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(BoolSet { n: self.n, words })
    }

    pub fn complement(&self) -> BoolSet {
        let mut s = BoolSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    /// Members in increasing encoding order.
    pub fn iter(&self) -> impl Iterator<Item = CubePoint> + '_ {
        let n = self.n;
        (0..1u64 << n)
            .filter(move |&i| self.contains_encoding(i as u32))
            .map(move |i| CubePoint { n, bits: i as u32 })
    }

    /// The membership bitmap as a `2^n`-character 0/1 string, index = encoding.
    pub fn to_bit_string(&self) -> String {
        (0..1u64 << self.n)
            .map(|i| {
                if self.contains_encoding(i as u32) {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

// Keeps Debug output short for large n.
impl fmt::Debug for BoolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 6 {
            write!(f, "BoolSet(n={}, {})", self.n, self.to_bit_string())
        } else {
            write!(f, "BoolSet(n={}, |A|={})", self.n, self.cardinality())
        }
    }
}

/// All points of odd Hamming weight; `2^{n-1}` members.
pub fn odd_set(n: usize) -> Result<BoolSet> {
    let mut s = BoolSet::empty(n)?;
    for p in enum_cube(n)? {
        if p.popcount() % 2 == 1 {
            s.insert(p);
        }
    }
    Ok(s)
}

/// All points of Hamming weight exactly two; `C(n,2)` members. Requires n >= 2.
pub fn weight2_set(n: usize) -> Result<BoolSet> {
    if n < 2 {
        return Err(Error::invalid("weight2_set requires n >= 2"));
    }
    let mut s = BoolSet::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            s.insert_encoding(1u32 << i | 1u32 << j);
        }
    }
    Ok(s)
}

/// A partition of the coordinates `[n]` into two blocks.
///
/// The canonical partition used by the half-square construction takes the
/// first `ceil(n/2)` coordinates as `X1`; odd `n` just gives unequal halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordPartition {
    n: usize,
    x1: Vec<usize>,
    x2: Vec<usize>,
}

impl CoordPartition {
    /// First `ceil(n/2)` coordinates vs the rest.
    pub fn canonical(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("partition requires n >= 1"));
        }
        check_dim(n)?;
        let k = n.div_ceil(2);
        Ok(CoordPartition {
            n,
            x1: (0..k).collect(),
            x2: (k..n).collect(),
        })
    }

    /// Builds from an explicit `X1`; must have exactly `ceil(n/2)` distinct
    /// in-range indices. `X2` is the complement.
    pub fn from_x1(n: usize, mut x1: Vec<usize>) -> Result<Self> {
        check_dim(n)?;
        x1.sort_unstable();
        if x1.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("X1 contains a duplicate index"));
        }
        if x1.len() != n.div_ceil(2) {
            return Err(Error::invalid(format!(
                "X1 must have ceil(n/2) = {} distinct indices, got {}",
                n.div_ceil(2),
                x1.len()
            )));
        }
        if x1.iter().any(|&i| i >= n) {
            return Err(Error::invalid("X1 index out of range"));
        }
        let x2 = (0..n).filter(|i| x1.binary_search(i).is_err()).collect();
        Ok(CoordPartition { n, x1, x2 })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Indices in `X1`, ascending (0-based).
    pub fn x1(&self) -> &[usize] {
        &self.x1
    }

    pub fn x2(&self) -> &[usize] {
        &self.x2
    }

    /// Restriction encodings `(s1, s2)` of a point: bit `k` of `s1` is the
    /// coordinate at the `k`-th smallest index of `X1`.
    pub fn split_encodings(&self, p: CubePoint) -> Result<(u32, u32)> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.dim(),
            });
        }
        Ok((restrict(p, &self.x1), restrict(p, &self.x2)))
    }
}

fn restrict(p: CubePoint, idx: &[usize]) -> u32 {
    let mut bits = 0u32;
    for (k, &i) in idx.iter().enumerate() {
        if p.coord(i) {
            bits |= 1 << k;
        }
    }
    bits
}

/// Restrictions of `p` to the two blocks. The second point has dimension 0
/// when `X2` is empty (n = 1).
pub fn split_point(p: CubePoint, part: &CoordPartition) -> Result<(CubePoint, CubePoint)> {
    let (s1, s2) = part.split_encodings(p)?;
    Ok((
        CubePoint {
            n: part.x1.len(),
            bits: s1,
        },
        CubePoint {
            n: part.x2.len(),
            bits: s2,
        },
    ))
}

/// Inverse of [`split_point`]: interleaves the restrictions back.
pub fn join_point(p1: CubePoint, p2: CubePoint, part: &CoordPartition) -> Result<CubePoint> {
    if p1.dim() != part.x1.len() || p2.dim() != part.x2.len() {
        return Err(Error::DimensionMismatch {
            expected: part.x1.len(),
            found: p1.dim(),
        });
    }
    let mut bits = 0u32;
    for (k, &i) in part.x1.iter().enumerate() {
        if p1.bits >> k & 1 == 1 {
            bits |= 1 << i;
        }
    }
    for (k, &i) in part.x2.iter().enumerate() {
        if p2.bits >> k & 1 == 1 {
            bits |= 1 << i;
        }
    }
    Ok(CubePoint { n: part.n, bits })
}
