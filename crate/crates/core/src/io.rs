//! Text formats.
//!
//! - `HPOLY d m` header, an optional `# label` comment, then one constraint
//!   per line: `a_1 .. a_d REL b` with `REL` in `{<=, =, >=}` and each number
//!   an integer or `p/q`.
//! - `AMAP n m` header, `n` rows of `m` matrix coefficients, then one row of
//!   `n` offsets.
//! - Extended formulation: an HPOLY block, an AMAP block, and an optional
//!   `PART k i1 .. ik` line giving the 1-based X1 indices.
//! - `SET n` header, then a `2^n`-character 0/1 line, index = encoding.
//! - `GRAPH nv ne [BIPART k]` header, then `ne` lines `u v`, 1-based;
//!   vertices `1..k` form the left part.
//!
//! All readers report errors with 1-based line numbers. Blank lines are
//! ignored everywhere; `#` lines are ignored inside HPOLY/AMAP blocks.

use std::fs;
use std::path::Path;

use crate::cube::{BoolSet, CoordPartition};
use crate::error::{Error, Result};
use crate::graph::GraphSet;
use crate::poly::{AffineMap, ExtendedFormulation, HPolytope, LinConstraint, Relation};
use crate::rat::{parse_rat, Rat};

/// Non-blank lines with their 1-based numbers.
pub(crate) struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Cursor { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.lines.last().map_or(0, |(n, _)| *n);
        let item = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| Error::parse(last + 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(item)
    }

    /// Next line that is not a `#` comment.
    pub(crate) fn next_data_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        loop {
            let (ln, l) = self.next_line(what)?;
            if !l.starts_with('#') {
                return Ok((ln, l));
            }
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        while let Some((ln, l)) = self.peek() {
            if l.starts_with('#') {
                self.pos += 1;
                continue;
            }
            return Err(Error::parse(ln, format!("trailing content `{l}`")));
        }
        Ok(())
    }
}

fn parse_usize(tok: &str, ln: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(ln, format!("malformed {what} `{tok}`")))
}

fn parse_rat_at(tok: &str, ln: usize) -> Result<Rat> {
    parse_rat(tok).map_err(|e| Error::parse(ln, e.to_string()))
}

fn parse_rat_row(line: &str, ln: usize, want: usize, what: &str) -> Result<Vec<Rat>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != want {
        return Err(Error::parse(
            ln,
            format!("expected {want} {what} entries, got {}", toks.len()),
        ));
    }
    toks.iter().map(|t| parse_rat_at(t, ln)).collect()
}

// ---------------------------------------------------------------------------
// HPOLY
// ---------------------------------------------------------------------------

pub fn write_hpolytope(p: &HPolytope) -> String {
    let mut out = format!("HPOLY {} {}\n", p.dim(), p.num_constraints());
    if !p.label().is_empty() {
        out.push_str(&format!("# {}\n", p.label()));
    }
    for c in p.constraints() {
        out.push_str(&format!("{c}\n"));
    }
    out
}

pub fn read_hpolytope(text: &str) -> Result<HPolytope> {
    let mut cur = Cursor::new(text);
    let p = read_hpolytope_block(&mut cur)?;
    cur.expect_end()?;
    Ok(p)
}

fn read_hpolytope_block(cur: &mut Cursor) -> Result<HPolytope> {
    let (ln, header) = cur.next_data_line("HPOLY header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "HPOLY" {
        return Err(Error::parse(ln, format!("expected `HPOLY d m`, got `{header}`")));
    }
    let dim = parse_usize(toks[1], ln, "dimension")?;
    let m = parse_usize(toks[2], ln, "constraint count")?;

    let mut label = String::new();
    if let Some((_, l)) = cur.peek() {
        if let Some(rest) = l.strip_prefix('#') {
            label = rest.trim().to_string();
            cur.pos += 1;
        }
    }

    let mut p = HPolytope::new(dim, label);
    for _ in 0..m {
        let (ln, line) = cur.next_data_line("constraint")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != dim + 2 {
            return Err(Error::parse(
                ln,
                format!("expected {} tokens (coeffs, relation, rhs), got {}", dim + 2, toks.len()),
            ));
        }
        let rel = match toks[dim] {
            "<=" => Relation::Le,
            "=" => Relation::Eq,
            ">=" => Relation::Ge,
            other => return Err(Error::parse(ln, format!("unknown relation `{other}`"))),
        };
        let coeffs = toks[..dim]
            .iter()
            .map(|t| parse_rat_at(t, ln))
            .collect::<Result<Vec<_>>>()?;
        let rhs = parse_rat_at(toks[dim + 1], ln)?;
        p.push(LinConstraint::new(coeffs, rel, rhs))
            .map_err(|e| Error::parse(ln, e.to_string()))?;
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// AMAP
// ---------------------------------------------------------------------------

pub fn write_affine_map(m: &AffineMap) -> String {
    let mut out = format!("AMAP {} {}\n", m.target_dim(), m.source_dim());
    for row in m.matrix() {
        let toks: Vec<String> = row.iter().map(|r| r.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    let toks: Vec<String> = m.offset().iter().map(|r| r.to_string()).collect();
    out.push_str(&toks.join(" "));
    out.push('\n');
    out
}

pub fn read_affine_map(text: &str) -> Result<AffineMap> {
    let mut cur = Cursor::new(text);
    let m = read_affine_map_block(&mut cur)?;
    cur.expect_end()?;
    Ok(m)
}

fn read_affine_map_block(cur: &mut Cursor) -> Result<AffineMap> {
    let (ln, header) = cur.next_data_line("AMAP header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "AMAP" {
        return Err(Error::parse(ln, format!("expected `AMAP n m`, got `{header}`")));
    }
    let target = parse_usize(toks[1], ln, "row count")?;
    let source = parse_usize(toks[2], ln, "column count")?;
    let mut matrix = Vec::with_capacity(target);
    for _ in 0..target {
        let (ln, line) = cur.next_data_line("matrix row")?;
        matrix.push(parse_rat_row(line, ln, source, "matrix")?);
    }
    let (ln, line) = cur.next_data_line("offset row")?;
    let offset = parse_rat_row(line, ln, target, "offset")?;
    AffineMap::new(matrix, offset, source).map_err(|e| Error::parse(ln, e.to_string()))
}

// ---------------------------------------------------------------------------
// Extended formulations
// ---------------------------------------------------------------------------

pub fn write_ef(ef: &ExtendedFormulation) -> String {
    let mut out = write_hpolytope(ef.polytope());
    out.push_str(&write_affine_map(ef.map()));
    if let Some(part) = ef.partition() {
        let idx: Vec<String> = part.x1().iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("PART {} {}\n", part.x1().len(), idx.join(" ")));
    }
    out
}

pub fn read_ef(text: &str) -> Result<ExtendedFormulation> {
    let mut cur = Cursor::new(text);
    let q = read_hpolytope_block(&mut cur)?;
    let map = read_affine_map_block(&mut cur)?;
    let mut part = None;
    if let Some((ln, l)) = cur.peek() {
        if l.starts_with("PART") {
            cur.pos += 1;
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() < 2 {
                return Err(Error::parse(ln, "expected `PART k i1 .. ik`"));
            }
            let k = parse_usize(toks[1], ln, "X1 size")?;
            if toks.len() != k + 2 {
                return Err(Error::parse(
                    ln,
                    format!("PART declares {k} indices but lists {}", toks.len() - 2),
                ));
            }
            let mut x1 = Vec::with_capacity(k);
            for t in &toks[2..] {
                let i = parse_usize(t, ln, "X1 index")?;
                if i == 0 {
                    return Err(Error::parse(ln, "X1 indices are 1-based"));
                }
                x1.push(i - 1);
            }
            part = Some(
                CoordPartition::from_x1(map.target_dim(), x1)
                    .map_err(|e| Error::parse(ln, e.to_string()))?,
            );
        }
    }
    cur.expect_end()?;
    ExtendedFormulation::new(q, map, part).map_err(|e| Error::invalid(e.to_string()))
}

// ---------------------------------------------------------------------------
// SET
// ---------------------------------------------------------------------------

pub fn write_bool_set(s: &BoolSet) -> String {
    format!("SET {}\n{}\n", s.dim(), s.to_bit_string())
}

pub fn read_bool_set(text: &str) -> Result<BoolSet> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.next_data_line("SET header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 || toks[0] != "SET" {
        return Err(Error::parse(ln, format!("expected `SET n`, got `{header}`")));
    }
    let n = parse_usize(toks[1], ln, "dimension")?;
    // keep cap errors distinguishable from malformed input
    let mut s = BoolSet::empty(n).map_err(|e| match e {
        Error::DimensionCap { .. } => e,
        other => Error::parse(ln, other.to_string()),
    })?;
    let (ln, line) = cur.next_data_line("membership string")?;
    let want = 1usize << n;
    if line.len() != want {
        return Err(Error::parse(
            ln,
            format!("membership string must have 2^{n} = {want} characters, got {}", line.len()),
        ));
    }
    for (i, ch) in line.bytes().enumerate() {
        match ch {
            b'1' => s.insert_encoding(i as u32),
            b'0' => {}
            other => {
                return Err(Error::parse(
                    ln,
                    format!("membership string must be 0/1, found `{}`", other as char),
                ))
            }
        }
    }
    cur.expect_end()?;
    Ok(s)
}

// ---------------------------------------------------------------------------
// GRAPH
// ---------------------------------------------------------------------------

pub fn write_graph(g: &GraphSet) -> String {
    let mut out = match g.left_size() {
        Some(k) => format!("GRAPH {} {} BIPART {}\n", g.nv(), g.ne(), k),
        None => format!("GRAPH {} {}\n", g.nv(), g.ne()),
    };
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_graph(text: &str) -> Result<GraphSet> {
    let mut cur = Cursor::new(text);
    let (ln, header) = cur.next_data_line("GRAPH header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let ok = (toks.len() == 3 || toks.len() == 5) && toks[0] == "GRAPH";
    if !ok || (toks.len() == 5 && toks[3] != "BIPART") {
        return Err(Error::parse(
            ln,
            format!("expected `GRAPH nv ne [BIPART k]`, got `{header}`"),
        ));
    }
    let nv = parse_usize(toks[1], ln, "vertex count")?;
    let ne = parse_usize(toks[2], ln, "edge count")?;
    let bipartition = if toks.len() == 5 {
        Some(parse_usize(toks[4], ln, "left part size")?)
    } else {
        None
    };
    let mut edges = Vec::with_capacity(ne);
    for _ in 0..ne {
        let (ln, line) = cur.next_data_line("edge")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(ln, format!("expected `u v`, got `{line}`")));
        }
        let u = parse_usize(toks[0], ln, "endpoint")?;
        let v = parse_usize(toks[1], ln, "endpoint")?;
        if u == 0 || v == 0 {
            return Err(Error::parse(ln, "vertices are 1-based"));
        }
        edges.push((u - 1, v - 1));
    }
    cur.expect_end()?;
    GraphSet::new(nv, &edges, bipartition)
}

// ---------------------------------------------------------------------------
// File wrappers
// ---------------------------------------------------------------------------

pub fn read_hpolytope_file(path: impl AsRef<Path>) -> Result<HPolytope> {
    read_hpolytope(&fs::read_to_string(path)?)
}

pub fn write_hpolytope_file(path: impl AsRef<Path>, p: &HPolytope) -> Result<()> {
    Ok(fs::write(path, write_hpolytope(p))?)
}

pub fn read_ef_file(path: impl AsRef<Path>) -> Result<ExtendedFormulation> {
    read_ef(&fs::read_to_string(path)?)
}

pub fn write_ef_file(path: impl AsRef<Path>, ef: &ExtendedFormulation) -> Result<()> {
    Ok(fs::write(path, write_ef(ef))?)
}

pub fn read_bool_set_file(path: impl AsRef<Path>) -> Result<BoolSet> {
    read_bool_set(&fs::read_to_string(path)?)
}

pub fn write_bool_set_file(path: impl AsRef<Path>, s: &BoolSet) -> Result<()> {
    Ok(fs::write(path, write_bool_set(s))?)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<GraphSet> {
    read_graph(&fs::read_to_string(path)?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &GraphSet) -> Result<()> {
    Ok(fs::write(path, write_graph(g))?)
}
