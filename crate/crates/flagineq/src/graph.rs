//! Undirected simple graphs on `{0..m-1}` with bitset adjacency, clique
//! counting, and the edge-list file format.
//!
//! Vertex sets are `u64` bitmasks, so graphs are capped at 64 vertices;
//! that is ample for the desk-scale corpora this crate targets.

use num_bigint::BigUint;
use thiserror::Error;

use crate::fvector::FVector;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph supports at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for {m} vertices")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An undirected simple graph; immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if m > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(m));
        }
        let mut g = Self { m, adj: vec![0; m] };
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(m: usize) -> Result<Self, GraphError> {
        Self::new(m, &[])
    }

    pub fn complete(m: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(m)?;
        for u in 0..m {
            for v in (u + 1)..m {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.m {
                return Err(GraphError::VertexOutOfRange { vertex: w, m: self.m });
            }
        }
        if self.has_edge(u, v) {
            let (u, v) = (u.min(v), u.max(v));
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.m {
            // neighbors above u only
            let mut rest = self.adj[u] & !(((1u128 << (u + 1)) - 1) as u64);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Builds a graph from an edge bitmask over the lexicographic pair order
    /// `(0,1), (0,2), ..., (0,m-1), (1,2), ...`. Requires `C(m,2) <= 64`.
    pub fn from_edge_mask(m: usize, mask: u64) -> Result<Self, GraphError> {
        assert!(m * m.saturating_sub(1) / 2 <= 64, "edge mask requires C(m,2) <= 64");
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..m {
            for v in (u + 1)..m {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::new(m, &edges)
    }

    /// The edge bitmask in the same lexicographic pair order, at any vertex
    /// count; used for canonical graph encodings in reports.
    pub fn edge_mask(&self) -> BigUint {
        let mut mask = BigUint::default();
        let mut bit = 0u64;
        for u in 0..self.m {
            for v in (u + 1)..self.m {
                if self.has_edge(u, v) {
                    mask.set_bit(bit, true);
                }
                bit += 1;
            }
        }
        mask
    }

    /// Compact re-parseable encoding: vertex count plus hex edge bitmask.
    pub fn encode(&self) -> String {
        format!("m={};mask=0x{}", self.m, self.edge_mask().to_str_radix(16))
    }

    /// Face counts of the clique complex: `counts[i]` is the number of
    /// `(i+1)`-cliques. Pivoted branch-and-bound over bitsets; when the pivot
    /// is adjacent to every other candidate the whole branch collapses to a
    /// doubling step, so dense graphs cost linear depth instead of one leaf
    /// per clique.
    pub fn clique_fvector(&self) -> FVector {
        let mut counts = vec![0u64; self.m + 1];
        let full: u64 = if self.m == 64 { !0 } else { (1u64 << self.m) - 1 };
        self.count_cliques(full, 0, &mut counts);
        let last_nonzero = counts.iter().rposition(|&c| c != 0).unwrap_or(0);
        FVector::from_u64s(&counts[1..=last_nonzero])
    }

    /// Adds, for every clique `C` inside `candidates` (the empty one
    /// included), one to `counts[depth + |C|]`.
    fn count_cliques(&self, candidates: u64, depth: usize, counts: &mut [u64]) {
        if candidates == 0 {
            counts[depth] += 1;
            return;
        }
        let pivot = self.max_degree_vertex(candidates, candidates);
        let without_pivot = candidates & !(1u64 << pivot);
        if self.adj[pivot] & candidates == without_pivot {
            // every clique in `without_pivot` appears once as-is and once
            // extended by the pivot
            let mut sub = vec![0u64; self.m + 1];
            self.count_cliques(without_pivot, 0, &mut sub);
            for (k, &c) in sub.iter().enumerate() {
                if c != 0 {
                    counts[depth + k] += c;
                    counts[depth + k + 1] += c;
                }
            }
        } else {
            self.count_cliques(without_pivot, depth, counts);
            self.count_cliques(self.adj[pivot] & candidates, depth + 1, counts);
        }
    }

    fn max_degree_vertex(&self, pool: u64, reference: u64) -> usize {
        let mut best = 0;
        let mut best_deg = -1i64;
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let deg = (self.adj[v] & reference).count_ones() as i64;
            if deg > best_deg {
                best_deg = deg;
                best = v;
            }
            rest &= rest - 1;
        }
        best
    }

    /// All maximal cliques as vertex bitmasks, via Bron–Kerbosch with
    /// pivoting. Exponential in the worst case; intended for small graphs.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        if self.m == 0 {
            return out;
        }
        let full: u64 = if self.m == 64 { !0 } else { (1u64 << self.m) - 1 };
        self.bron_kerbosch(0, full, 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = self.max_degree_vertex(p | x, p);
        let mut todo = p & !self.adj[pivot];
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            let vbit = 1u64 << v;
            self.bron_kerbosch(r | vbit, p & self.adj[v], x & self.adj[v], out);
            p &= !vbit;
            x |= vbit;
            todo &= !vbit;
        }
    }

    /// Parses the edge-list format: `#` comments and blank lines ignored;
    /// first data line is the vertex count, each following data line an edge
    /// `u v` with `0 <= u < v < m`. Duplicate edges are an error.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| GraphError::Parse { line: line_no, message };
            match graph.as_mut() {
                None => {
                    let m: usize = line
                        .parse()
                        .map_err(|_| err(format!("expected vertex count, got {line:?}")))?;
                    if m > MAX_VERTICES {
                        return Err(err(format!("vertex count {m} exceeds {MAX_VERTICES}")));
                    }
                    graph = Some(Graph::empty(m).expect("bound checked"));
                }
                Some(g) => {
                    let mut it = line.split_whitespace();
                    let (u, v) = match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => {
                            let u: usize =
                                a.parse().map_err(|_| err(format!("bad vertex {a:?}")))?;
                            let v: usize =
                                b.parse().map_err(|_| err(format!("bad vertex {b:?}")))?;
                            (u, v)
                        }
                        _ => return Err(err(format!("expected edge \"u v\", got {line:?}"))),
                    };
                    if u >= v {
                        return Err(err(format!("edge must satisfy u < v, got {u} {v}")));
                    }
                    g.insert_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        graph.ok_or(GraphError::Parse { line: 0, message: "missing vertex count".into() })
    }
}
