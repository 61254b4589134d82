//! Undirected simple graphs: construction, edge-list parsing and emission,
//! seeded random generation, and subset densities.
//!
//! Vertices are 0-based internally. The text format is 1-based: a header line
//! `n m_edges` followed by one `u v` line per edge; `#` starts a comment.

use crate::combin::choose;
use crate::error::{Error, ParseError, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORD_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted lexicographically, each pair with `u < v`.
    edges: Vec<(u32, u32)>,
    /// Per-vertex adjacency bitsets, `words` u64 blocks per row.
    adj: Vec<u64>,
    words: usize,
}

impl Graph {
    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph needs n >= 1".into()));
        }
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("loop edge at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a}, {b}) out of range for n = {n}"
                )));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u as u32, v as u32));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let words = n.div_ceil(WORD_BITS);
        let mut adj = vec![0u64; n * words];
        for &(u, v) in &edges {
            let (u, v) = (u as usize, v as usize);
            adj[u * words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
            adj[v * words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        }
        Graph {
            n,
            edges,
            adj,
            words,
        }
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Self::from_sorted(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, 0-based, `u < v`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Graph with exactly the non-edges of `self`.
    pub fn complement(&self) -> Self {
        let mut edges = Vec::new();
        for u in 0..self.n as u32 {
            for v in u + 1..self.n as u32 {
                if !self.has_edge(u as usize, v as usize) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// Relabels vertices by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length != n".into()));
        }
        Self::new(
            self.n,
            self.edges
                .iter()
                .map(|&(u, v)| (perm[u as usize], perm[v as usize])),
        )
    }

    /// Erdős–Rényi `G(n, p)` sample.
    ///
    /// Each pair `{i, j}` is drawn from its own generator keyed by
    /// `(seed, i, j)`, so the result does not depend on iteration order and
    /// identical inputs reproduce the identical graph.
    pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph needs n >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidArgument(format!(
                "edge probability p = {p} outside [0, 1]"
            )));
        }
        let mut edges = Vec::new();
        for i in 0..n as u64 {
            for j in i + 1..n as u64 {
                if pair_unit(seed, i, j) < p {
                    edges.push((i as u32, j as u32));
                }
            }
        }
        Ok(Self::from_sorted(n, edges))
    }

    /// Parses the edge-list text format (1-based vertex ids).
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if n.is_none() {
                // header: "n m_edges"
                if fields.len() != 2 {
                    return Err(ParseError::Malformed {
                        line: line_no,
                        content: raw.to_string(),
                    }
                    .into());
                }
                let nv: usize = fields[0].parse().map_err(|_| ParseError::Malformed {
                    line: line_no,
                    content: raw.to_string(),
                })?;
                let _declared_edges: usize =
                    fields[1].parse().map_err(|_| ParseError::Malformed {
                        line: line_no,
                        content: raw.to_string(),
                    })?;
                if nv == 0 {
                    return Err(ParseError::Malformed {
                        line: line_no,
                        content: raw.to_string(),
                    }
                    .into());
                }
                n = Some(nv);
                continue;
            }
            let nv = n.unwrap();
            if fields.len() != 2 {
                return Err(ParseError::Malformed {
                    line: line_no,
                    content: raw.to_string(),
                }
                .into());
            }
            let mut ids = [0i64; 2];
            for (slot, f) in ids.iter_mut().zip(&fields) {
                *slot = f.parse().map_err(|_| ParseError::Malformed {
                    line: line_no,
                    content: raw.to_string(),
                })?;
            }
            for &id in &ids {
                if id < 1 || id > nv as i64 {
                    return Err(ParseError::VertexOutOfRange {
                        line: line_no,
                        id,
                        n: nv,
                    }
                    .into());
                }
            }
            if ids[0] == ids[1] {
                return Err(ParseError::LoopEdge {
                    line: line_no,
                    v: ids[0] as usize,
                }
                .into());
            }
            let (u, v) = (ids[0] as u32 - 1, ids[1] as u32 - 1);
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if edges.contains(&(u, v)) {
                return Err(ParseError::DuplicateEdge {
                    line: line_no,
                    u: u as usize + 1,
                    v: v as usize + 1,
                }
                .into());
            }
            edges.push((u, v));
        }
        let n = n.ok_or(ParseError::MissingHeader)?;
        edges.sort_unstable();
        Ok(Self::from_sorted(n, edges))
    }

    /// Canonical edge-list text (1-based ids, edges sorted lexicographically).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Number of edges spanned by `subset` (assumed distinct, in range).
    pub fn spanned_edges(&self, subset: &[usize]) -> u64 {
        let mut count = 0u64;
        for (a, &u) in subset.iter().enumerate() {
            for &v in &subset[a + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Uniform value in `[0, 1)` from a generator keyed by `(seed, i, j)`.
fn pair_unit(seed: u64, i: u64, j: u64) -> f64 {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&i.to_le_bytes());
    key[16..24].copy_from_slice(&j.to_le_bytes());
    key[24..32].copy_from_slice(b"gnp-pair");
    let mut rng = ChaCha8Rng::from_seed(key);
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A vertex subset together with its exact density.
///
/// `sigma = spanned_edges / C(m, 2)` is kept as an integer ratio; the float
/// view is derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetDensity {
    subset: Vec<usize>,
    spanned_edges: u64,
    pair_count: u64,
}

impl SubsetDensity {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn spanned_edges(&self) -> u64 {
        self.spanned_edges
    }

    /// `C(m, 2)`, the denominator of the density.
    pub fn pair_count(&self) -> u64 {
        self.pair_count
    }

    pub fn sigma(&self) -> f64 {
        self.spanned_edges as f64 / self.pair_count as f64
    }
}

/// Exact density of a subset of `m >= 2` distinct vertices.
pub fn density(g: &Graph, subset: &[usize]) -> Result<SubsetDensity> {
    if subset.len() < 2 {
        return Err(Error::InvalidArgument(
            "density needs at least 2 vertices".into(),
        ));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(
            "duplicate vertex in density subset".into(),
        ));
    }
    if *sorted.last().unwrap() >= g.n() {
        return Err(Error::InvalidArgument(
            "density subset vertex out of range".into(),
        ));
    }
    let m = sorted.len();
    let spanned = g.spanned_edges(&sorted);
    Ok(SubsetDensity {
        subset: sorted,
        spanned_edges: spanned,
        pair_count: choose(m as u64, 2) as u64,
    })
}
