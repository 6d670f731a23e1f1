//! Small undirected graphs over vertex sets `{0, .., nv-1}`, stored as
//! per-vertex adjacency bitmasks. Vertices are 0-based in code and 1-based
//! in every text format and label.

use crate::error::{Error, Result};

/// Hard cap on vertex count: adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSet {
    nv: usize,
    adj: Vec<u64>,
    /// `Some(k)` marks a declared bipartition with left part `{0, .., k-1}`.
    bipartition: Option<usize>,
}

impl GraphSet {
    /// Builds a graph from an edge list (0-based endpoints). Rejects loops,
    /// duplicate edges, out-of-range endpoints, and — when a bipartition is
    /// declared — edges that do not cross it.
    pub fn new(nv: usize, edges: &[(usize, usize)], bipartition: Option<usize>) -> Result<Self> {
        if nv == 0 || nv > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {nv}"
            )));
        }
        if let Some(k) = bipartition {
            if k == 0 || k > nv {
                return Err(Error::invalid(format!(
                    "bipartition size {k} out of range for {nv} vertices"
                )));
            }
        }
        let mut adj = vec![0u64; nv];
        for &(u, v) in edges {
            if u >= nv || v >= nv {
                return Err(Error::invalid(format!(
                    "edge ({}, {}) out of range",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {}", u + 1)));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::invalid(format!(
                    "duplicate edge ({}, {})",
                    u.min(v) + 1,
                    u.max(v) + 1
                )));
            }
            if let Some(k) = bipartition {
                if (u < k) == (v < k) {
                    return Err(Error::invalid(format!(
                        "edge ({}, {}) does not cross the bipartition",
                        u.min(v) + 1,
                        u.max(v) + 1
                    )));
                }
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(GraphSet {
            nv,
            adj,
            bipartition,
        })
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn ne(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Left part size of a declared bipartition, if any.
    pub fn left_size(&self) -> Option<usize> {
        self.bipartition
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.nv && v < self.nv && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.nv {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// All non-adjacent unordered pairs `(u, v)` with `u < v`, sorted. For
    /// bipartite graphs this includes same-side pairs.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.nv {
            for v in u + 1..self.nv {
                if self.adj[u] >> v & 1 == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// `u-v` with 1-based endpoints, smaller first.
pub fn pair_label(u: usize, v: usize) -> String {
    format!("{}-{}", u.min(v) + 1, u.max(v) + 1)
}
