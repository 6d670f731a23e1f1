//! Edge-versus-non-edge and edge-versus-independent-set disjointness
//! matrices, and their partitions into combinatorial rectangles.
//!
//! A rectangle is a product set of rows and columns; as a 0/1-matrix it has
//! rank one. [`ene_decompose_bipartite`] covers the 1-entries of the
//! edge/non-edge matrix of a bipartite graph with at most `2|L| + |R|`
//! rectangles; [`ene_decompose_general`] extends this to arbitrary graphs by
//! splitting the vertex set in half and recursing, at an extra log factor.
//! Neither construction is trusted: [`verify_decomposition`] checks
//! exactness entry by entry.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{pair_label, GraphSet};
use crate::io::Cursor;

/// Largest vertex count for exhaustive independent-set enumeration.
pub const EIS_DEFAULT_CAP: usize = 20;

/// A 0/1 matrix with edge rows and vertex-set columns. Rows are labeled by
/// vertex pairs, columns by vertex sets (bitmasks); for edge/non-edge
/// matrices every column mask has exactly two bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    row_labels: Vec<(usize, usize)>,
    col_labels: Vec<u64>,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl ZeroOneMatrix {
    pub fn new(row_labels: Vec<(usize, usize)>, col_labels: Vec<u64>) -> Result<Self> {
        let mut seen_rows = row_labels.clone();
        seen_rows.sort_unstable();
        if seen_rows.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate row label"));
        }
        let mut seen_cols = col_labels.clone();
        seen_cols.sort_unstable();
        if seen_cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate column label"));
        }
        let words_per_row = col_labels.len().div_ceil(64).max(1);
        let bits = vec![0u64; words_per_row * row_labels.len()];
        Ok(ZeroOneMatrix {
            row_labels,
            col_labels,
            words_per_row,
            bits,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[(usize, usize)] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[u64] {
        &self.col_labels
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words_per_row + c / 64] |= 1 << (c % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn row_label_string(&self, r: usize) -> String {
        let (u, v) = self.row_labels[r];
        pair_label(u, v)
    }

    pub fn col_label_string(&self, c: usize) -> String {
        set_label(self.col_labels[c])
    }
}

/// `{}` for the empty set, otherwise 1-based vertices joined by dashes.
pub fn set_label(mask: u64) -> String {
    if mask == 0 {
        return "{}".to_string();
    }
    let mut parts = Vec::new();
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        parts.push((v + 1).to_string());
    }
    parts.join("-")
}

fn parse_set_label(tok: &str, ln: usize) -> Result<u64> {
    if tok == "{}" {
        return Ok(0);
    }
    let mut mask = 0u64;
    for part in tok.split('-') {
        let v: usize = part
            .parse()
            .map_err(|_| Error::parse(ln, format!("malformed vertex `{part}` in `{tok}`")))?;
        if v == 0 || v > 64 {
            return Err(Error::parse(ln, format!("vertex {v} out of range in `{tok}`")));
        }
        if mask >> (v - 1) & 1 == 1 {
            return Err(Error::parse(ln, format!("repeated vertex in `{tok}`")));
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

fn parse_pair_label(tok: &str, ln: usize) -> Result<(usize, usize)> {
    let mask = parse_set_label(tok, ln)?;
    if mask.count_ones() != 2 {
        return Err(Error::parse(ln, format!("`{tok}` is not a vertex pair")));
    }
    let u = mask.trailing_zeros() as usize;
    let v = (63 - mask.leading_zeros()) as usize;
    Ok((u, v))
}

// ---------------------------------------------------------------------------
// Matrix constructors
// ---------------------------------------------------------------------------

fn pair_mask(u: usize, v: usize) -> u64 {
    1 << u | 1 << v
}

/// Rows: edges. Columns: non-adjacent pairs (same-side pairs included for
/// bipartite graphs). Entry 1 iff the pair of pairs shares no vertex.
pub fn ene_matrix(g: &GraphSet) -> Result<ZeroOneMatrix> {
    if g.nv() < 2 {
        return Err(Error::invalid("edge/non-edge matrix requires at least 2 vertices"));
    }
    let edges = g.edges();
    let non_edges = g.non_edges();
    let col_labels: Vec<u64> = non_edges.iter().map(|&(u, v)| pair_mask(u, v)).collect();
    let mut m = ZeroOneMatrix::new(edges.clone(), col_labels)?;
    for (r, &(u, v)) in edges.iter().enumerate() {
        let emask = pair_mask(u, v);
        for (c, &(a, b)) in non_edges.iter().enumerate() {
            if emask & pair_mask(a, b) == 0 {
                m.set(r, c);
            }
        }
    }
    Ok(m)
}

/// Rows: edges. Columns: every independent set (including the empty set and
/// singletons), in ascending mask order. Entry 1 iff edge and set are
/// vertex-disjoint. Exhaustive in `2^nv`, hence the cap.
pub fn eis_matrix(g: &GraphSet, max_vertices: usize) -> Result<ZeroOneMatrix> {
    let nv = g.nv();
    if nv > max_vertices {
        return Err(Error::ResourceCap {
            limit: max_vertices,
            reached: nv,
        });
    }
    let edges = g.edges();
    let mut col_labels = Vec::new();
    for mask in 0..1u64 << nv {
        let mut independent = true;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if g.neighbors(v) & mask != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            col_labels.push(mask);
        }
    }
    let mut m = ZeroOneMatrix::new(edges.clone(), col_labels.clone())?;
    for (r, &(u, v)) in edges.iter().enumerate() {
        let emask = pair_mask(u, v);
        for (c, &set) in col_labels.iter().enumerate() {
            if emask & set == 0 {
                m.set(r, c);
            }
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// Rectangles
// ---------------------------------------------------------------------------

/// A product block: the all-ones matrix on `rows x cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rectangle {
    pub rows: Vec<(usize, usize)>,
    pub cols: Vec<(usize, usize)>,
}

impl Rectangle {
    fn is_empty(&self) -> bool {
        self.rows.is_empty() || self.cols.is_empty()
    }
}

/// A list of rectangles claimed to partition the 1-entries of a target
/// matrix; the claim is checked by [`verify_decomposition`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RectDecomposition {
    pub rectangles: Vec<Rectangle>,
}

impl RectDecomposition {
    pub fn count(&self) -> usize {
        self.rectangles.len()
    }
}

/// For each left vertex `l`, right vertex `r`, left vertex again: the three
/// product families whose union hits every disjoint edge/non-edge pair of a
/// bipartite graph exactly once. Empty rectangles are dropped.
pub fn ene_decompose_bipartite(g: &GraphSet) -> Result<RectDecomposition> {
    let k = g
        .left_size()
        .ok_or_else(|| Error::invalid("bipartite decomposition requires a bipartition"))?;
    let nv = g.nv();
    let edges = g.edges();
    let non_edges = g.non_edges();
    let mut rects = Vec::new();
    let mut push = |rows: Vec<(usize, usize)>, cols: Vec<(usize, usize)>| {
        let rect = Rectangle { rows, cols };
        if !rect.is_empty() {
            rects.push(rect);
        }
    };
    // edges avoiding l whose right endpoint sees l, against l's right non-neighbors
    for l in 0..k {
        let rows = edges
            .iter()
            .copied()
            .filter(|&(u, v)| u != l && g.has_edge(l, v))
            .collect();
        let cols = non_edges
            .iter()
            .copied()
            .filter(|&(a, b)| a == l && b >= k)
            .collect();
        push(rows, cols);
    }
    // edges at r, against pairs inside R minus r and cross pairs blind to r
    for r in k..nv {
        let rows = edges.iter().copied().filter(|&(_, v)| v == r).collect();
        let cols = non_edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                let both_right = a >= k && a != r && b != r;
                let cross = a < k && !g.has_edge(a, r) && b >= k && b != r;
                both_right || cross
            })
            .collect();
        push(rows, cols);
    }
    // edges at l, against pairs inside L minus l
    for l in 0..k {
        let rows = edges.iter().copied().filter(|&(u, _)| u == l).collect();
        let cols = non_edges
            .iter()
            .copied()
            .filter(|&(a, b)| b < k && a != l && b != l)
            .collect();
        push(rows, cols);
    }
    Ok(RectDecomposition { rectangles: rects })
}

/// Arbitrary graphs: split the (sorted) vertex set into halves `S1`, `S2`.
/// Pairs whose edge crosses the cut get the bipartite-style families, with
/// columns widened to every non-edge location; pairs with the edge inside a
/// half and the non-edge elsewhere get one whole-product rectangle per
/// opposite half plus one rectangle per pivot vertex of a crossing
/// non-edge; pairs entirely inside a half recurse.
pub fn ene_decompose_general(g: &GraphSet) -> Result<RectDecomposition> {
    if g.nv() < 2 {
        return Err(Error::invalid("decomposition requires at least 2 vertices"));
    }
    let all: Vec<usize> = (0..g.nv()).collect();
    let mut rects = Vec::new();
    decompose_rec(g, &all, &mut rects);
    Ok(RectDecomposition { rectangles: rects })
}

fn decompose_rec(g: &GraphSet, s: &[usize], out: &mut Vec<Rectangle>) {
    if s.len() < 2 {
        return;
    }
    let half = s.len().div_ceil(2);
    let (s1, s2) = s.split_at(half);
    let m1: u64 = s1.iter().fold(0, |m, &v| m | 1 << v);
    let m2: u64 = s2.iter().fold(0, |m, &v| m | 1 << v);
    let side = |u: usize, v: usize| (m1 >> u & 1 == 1, m1 >> v & 1 == 1);

    let mut cross_e = Vec::new();
    let mut in1_e = Vec::new();
    let mut in2_e = Vec::new();
    for (u, v) in g.edges() {
        if 1 << u & (m1 | m2) == 0 || 1 << v & (m1 | m2) == 0 {
            continue;
        }
        match side(u, v) {
            (true, true) => in1_e.push((u, v)),
            (false, false) => in2_e.push((u, v)),
            // s is sorted with s1 first, so a crossing pair is (s1, s2)
            _ => cross_e.push((u, v)),
        }
    }
    let mut cross_n = Vec::new();
    let mut in1_n = Vec::new();
    let mut in2_n = Vec::new();
    for (a, b) in g.non_edges() {
        if 1 << a & (m1 | m2) == 0 || 1 << b & (m1 | m2) == 0 {
            continue;
        }
        match side(a, b) {
            (true, true) => in1_n.push((a, b)),
            (false, false) => in2_n.push((a, b)),
            _ => cross_n.push((a, b)),
        }
    }

    let mut push = |rows: Vec<(usize, usize)>, cols: Vec<(usize, usize)>| {
        let rect = Rectangle { rows, cols };
        if !rect.is_empty() {
            out.push(rect);
        }
    };

    // crossing edge, crossing non-edge at l with an adjacent far endpoint
    for &l in s1 {
        let rows = cross_e
            .iter()
            .copied()
            .filter(|&(u, v)| u != l && g.has_edge(l, v))
            .collect();
        let cols = cross_n.iter().copied().filter(|&(a, _)| a == l).collect();
        push(rows, cols);
    }
    // crossing edge at r, non-edge inside S2 minus r or crossing blind to r
    for &r in s2 {
        let rows = cross_e.iter().copied().filter(|&(_, v)| v == r).collect();
        let cols_in2 = in2_n.iter().copied().filter(|&(a, b)| a != r && b != r);
        let cols_cross = cross_n
            .iter()
            .copied()
            .filter(|&(a, b)| !g.has_edge(a, r) && b != r);
        let mut cols: Vec<_> = cols_in2.chain(cols_cross).collect();
        cols.sort_unstable();
        push(rows, cols);
    }
    // crossing edge at l, non-edge inside S1 minus l
    for &l in s1 {
        let rows = cross_e.iter().copied().filter(|&(u, _)| u == l).collect();
        let cols = in1_n.iter().copied().filter(|&(a, b)| a != l && b != l).collect();
        push(rows, cols);
    }
    // edge and non-edge in opposite halves: a single whole product each way
    push(in1_e.clone(), in2_n.clone());
    push(in2_e.clone(), in1_n.clone());
    // edge inside a half, non-edge crossing: pivot on its near endpoint
    for &p in s1 {
        let rows = in1_e
            .iter()
            .copied()
            .filter(|&(u, v)| u != p && v != p)
            .collect();
        let cols = cross_n.iter().copied().filter(|&(a, _)| a == p).collect();
        push(rows, cols);
    }
    for &p in s2 {
        let rows = in2_e
            .iter()
            .copied()
            .filter(|&(u, v)| u != p && v != p)
            .collect();
        let cols = cross_n.iter().copied().filter(|&(_, b)| b == p).collect();
        push(rows, cols);
    }

    decompose_rec(g, s1, out);
    decompose_rec(g, s2, out);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    DoubleCover,
    CoversZero,
    Uncovered,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::DoubleCover => "double-cover",
            ViolationKind::CoversZero => "covers-zero",
            ViolationKind::Uncovered => "uncovered",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: usize,
    pub col: usize,
    pub row_label: String,
    pub col_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompVerdict {
    pub passed: bool,
    pub violation: Option<Violation>,
    pub rectangle_count: usize,
}

/// PASS iff the rectangles cover each 1-entry of `m` exactly once and no
/// 0-entry at all. On failure reports the first offense, scanning
/// rectangles in order (rows in listed order, columns by index) and then
/// the uncovered entries row-major.
pub fn verify_decomposition(m: &ZeroOneMatrix, d: &RectDecomposition) -> Result<DecompVerdict> {
    let row_idx: HashMap<(usize, usize), usize> = m
        .row_labels
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let col_idx: HashMap<u64, usize> = m
        .col_labels
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let words = m.words_per_row;
    let mut cover = vec![0u64; words * m.rows().max(1)];
    let fail = |kind: ViolationKind, row: usize, col: usize| {
        Ok(DecompVerdict {
            passed: false,
            violation: Some(Violation {
                kind,
                row,
                col,
                row_label: m.row_label_string(row),
                col_label: m.col_label_string(col),
            }),
            rectangle_count: d.count(),
        })
    };

    for rect in &d.rectangles {
        let mut col_mask = vec![0u64; words];
        for &(a, b) in &rect.cols {
            let &c = col_idx.get(&pair_mask(a, b)).ok_or_else(|| {
                Error::invalid(format!("unknown column label {}", pair_label(a, b)))
            })?;
            col_mask[c / 64] |= 1 << (c % 64);
        }
        for &(u, v) in &rect.rows {
            let &r = row_idx.get(&(u, v)).ok_or_else(|| {
                Error::invalid(format!("unknown row label {}", pair_label(u, v)))
            })?;
            let mrow = m.row_words(r);
            let crow = &mut cover[r * words..(r + 1) * words];
            for w in 0..words {
                let zero_hit = col_mask[w] & !mrow[w];
                if zero_hit != 0 {
                    let col = w * 64 + zero_hit.trailing_zeros() as usize;
                    return fail(ViolationKind::CoversZero, r, col);
                }
                let double = col_mask[w] & crow[w];
                if double != 0 {
                    let col = w * 64 + double.trailing_zeros() as usize;
                    return fail(ViolationKind::DoubleCover, r, col);
                }
                crow[w] |= col_mask[w];
            }
        }
    }
    for r in 0..m.rows() {
        let mrow = m.row_words(r);
        for w in 0..words {
            let missing = mrow[w] & !cover[r * words + w];
            if missing != 0 {
                let col = w * 64 + missing.trailing_zeros() as usize;
                return fail(ViolationKind::Uncovered, r, col);
            }
        }
    }
    Ok(DecompVerdict {
        passed: true,
        violation: None,
        rectangle_count: d.count(),
    })
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    Dense,
    Sparse,
}

/// `MATRIX DENSE|SPARSE r c [nnz]`, `ROWS:`/`COLS:` label lines, then either
/// `r` lines of 0/1 entries or `nnz` lines of 1-based `row col` coordinates.
pub fn write_matrix(m: &ZeroOneMatrix, format: MatrixFormat) -> String {
    let mut out = String::new();
    match format {
        MatrixFormat::Dense => {
            out.push_str(&format!("MATRIX DENSE {} {}\n", m.rows(), m.cols()));
        }
        MatrixFormat::Sparse => {
            out.push_str(&format!(
                "MATRIX SPARSE {} {} {}\n",
                m.rows(),
                m.cols(),
                m.count_ones()
            ));
        }
    }
    out.push_str("ROWS:");
    for r in 0..m.rows() {
        out.push(' ');
        out.push_str(&m.row_label_string(r));
    }
    out.push('\n');
    out.push_str("COLS:");
    for c in 0..m.cols() {
        out.push(' ');
        out.push_str(&m.col_label_string(c));
    }
    out.push('\n');
    match format {
        MatrixFormat::Dense => {
            // a zero-column matrix would emit blank row lines, which readers skip
            if m.cols() > 0 {
                for r in 0..m.rows() {
                    let row: Vec<&str> = (0..m.cols())
                        .map(|c| if m.get(r, c) { "1" } else { "0" })
                        .collect();
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
            }
        }
        MatrixFormat::Sparse => {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if m.get(r, c) {
                        out.push_str(&format!("{} {}\n", r + 1, c + 1));
                    }
                }
            }
        }
    }
    out
}

pub fn read_matrix(text: &str) -> Result<ZeroOneMatrix> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.next_data_line("MATRIX header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 2 || toks[0] != "MATRIX" {
        return Err(Error::parse(ln, format!("expected `MATRIX DENSE|SPARSE ..`, got `{header}`")));
    }
    let parse_count = |tok: &str, what: &str| -> Result<usize> {
        tok.parse()
            .map_err(|_| Error::parse(ln, format!("malformed {what} `{tok}`")))
    };
    let (dense, nnz) = match toks[1] {
        "DENSE" if toks.len() == 4 => (true, 0),
        "SPARSE" if toks.len() == 5 => (false, parse_count(toks[4], "entry count")?),
        _ => {
            return Err(Error::parse(ln, format!("malformed matrix header `{header}`")));
        }
    };
    let r = parse_count(toks[2], "row count")?;
    let c = parse_count(toks[3], "column count")?;

    let (ln_rows, rows_line) = cur.next_data_line("ROWS line")?;
    let row_toks: Vec<&str> = rows_line
        .strip_prefix("ROWS:")
        .ok_or_else(|| Error::parse(ln_rows, "expected `ROWS:` line"))?
        .split_whitespace()
        .collect();
    if row_toks.len() != r {
        return Err(Error::parse(
            ln_rows,
            format!("expected {r} row labels, got {}", row_toks.len()),
        ));
    }
    let row_labels = row_toks
        .iter()
        .map(|t| parse_pair_label(t, ln_rows))
        .collect::<Result<Vec<_>>>()?;

    let (ln_cols, cols_line) = cur.next_data_line("COLS line")?;
    let col_toks: Vec<&str> = cols_line
        .strip_prefix("COLS:")
        .ok_or_else(|| Error::parse(ln_cols, "expected `COLS:` line"))?
        .split_whitespace()
        .collect();
    if col_toks.len() != c {
        return Err(Error::parse(
            ln_cols,
            format!("expected {c} column labels, got {}", col_toks.len()),
        ));
    }
    let col_labels = col_toks
        .iter()
        .map(|t| parse_set_label(t, ln_cols))
        .collect::<Result<Vec<_>>>()?;

    let mut m = ZeroOneMatrix::new(row_labels, col_labels)
        .map_err(|e| Error::parse(ln, e.to_string()))?;
    if dense {
        // zero-column matrices carry no row lines (they would be blank)
        let data_rows = if c > 0 { r } else { 0 };
        for row in 0..data_rows {
            let (ln, line) = cur.next_data_line("matrix row")?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != c {
                return Err(Error::parse(
                    ln,
                    format!("expected {c} entries, got {}", toks.len()),
                ));
            }
            for (col, t) in toks.iter().enumerate() {
                match *t {
                    "1" => m.set(row, col),
                    "0" => {}
                    other => {
                        return Err(Error::parse(ln, format!("entries must be 0/1, got `{other}`")))
                    }
                }
            }
        }
    } else {
        for _ in 0..nnz {
            let (ln, line) = cur.next_data_line("sparse entry")?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::parse(ln, format!("expected `row col`, got `{line}`")));
            }
            let row: usize = toks[0]
                .parse()
                .map_err(|_| Error::parse(ln, "malformed row index"))?;
            let col: usize = toks[1]
                .parse()
                .map_err(|_| Error::parse(ln, "malformed column index"))?;
            if row == 0 || row > r || col == 0 || col > c {
                return Err(Error::parse(ln, format!("entry ({row}, {col}) out of range")));
            }
            if m.get(row - 1, col - 1) {
                return Err(Error::parse(ln, format!("duplicate entry ({row}, {col})")));
            }
            m.set(row - 1, col - 1);
        }
    }
    cur.expect_end()?;
    Ok(m)
}

/// `RECT k`, then per rectangle a `ROWS: ..` and a `COLS: ..` line of pair
/// labels.
pub fn write_decomposition(d: &RectDecomposition) -> String {
    let mut out = format!("RECT {}\n", d.count());
    for rect in &d.rectangles {
        out.push_str("ROWS:");
        for &(u, v) in &rect.rows {
            out.push(' ');
            out.push_str(&pair_label(u, v));
        }
        out.push('\n');
        out.push_str("COLS:");
        for &(a, b) in &rect.cols {
            out.push(' ');
            out.push_str(&pair_label(a, b));
        }
        out.push('\n');
    }
    out
}

pub fn read_decomposition(text: &str) -> Result<RectDecomposition> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.next_data_line("RECT header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "RECT" {
        return Err(Error::parse(ln, format!("expected `RECT k`, got `{header}`")));
    }
    let k: usize = toks[1]
        .parse()
        .map_err(|_| Error::parse(ln, "malformed rectangle count"))?;
    let mut rectangles = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln_r, rows_line) = cur.next_data_line("ROWS line")?;
        let rows = rows_line
            .strip_prefix("ROWS:")
            .ok_or_else(|| Error::parse(ln_r, "expected `ROWS:` line"))?
            .split_whitespace()
            .map(|t| parse_pair_label(t, ln_r))
            .collect::<Result<Vec<_>>>()?;
        let (ln_c, cols_line) = cur.next_data_line("COLS line")?;
        let cols = cols_line
            .strip_prefix("COLS:")
            .ok_or_else(|| Error::parse(ln_c, "expected `COLS:` line"))?
            .split_whitespace()
            .map(|t| parse_pair_label(t, ln_c))
            .collect::<Result<Vec<_>>>()?;
        rectangles.push(Rectangle { rows, cols });
    }
    cur.expect_end()?;
    Ok(RectDecomposition { rectangles })
}

pub fn write_matrix_file(
    path: impl AsRef<Path>,
    m: &ZeroOneMatrix,
    format: MatrixFormat,
) -> Result<()> {
    Ok(fs::write(path, write_matrix(m, format))?)
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<ZeroOneMatrix> {
    read_matrix(&fs::read_to_string(path)?)
}

pub fn write_decomposition_file(path: impl AsRef<Path>, d: &RectDecomposition) -> Result<()> {
    Ok(fs::write(path, write_decomposition(d))?)
}

pub fn read_decomposition_file(path: impl AsRef<Path>) -> Result<RectDecomposition> {
    read_decomposition(&fs::read_to_string(path)?)
}
