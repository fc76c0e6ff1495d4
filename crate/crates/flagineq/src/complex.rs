//! Simplicial complexes stored by their facets: f-vectors, flagness,
//! minimal non-faces, and the facet-list file format.

use std::collections::HashSet;

use thiserror::Error;

use crate::fvector::FVector;
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex supports at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for {m} vertices")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("facet {0:?} is not strictly increasing")]
    NotStrictlyIncreasing(Vec<usize>),
    #[error("facet {contained:?} is dominated by facet {container:?}")]
    DominatedFacet { contained: Vec<usize>, container: Vec<usize> },
    #[error("vertex {0} appears in no facet")]
    GhostVertex(usize),
    #[error("boundary of a simplex needs k >= 2, got {0}")]
    BoundaryTooSmall(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An abstract simplicial complex on vertices `{0..m-1}`, stored as its set
/// of maximal faces. Every vertex must occur in some facet, and no facet may
/// contain another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    m: usize,
    /// Facet bitmasks, sorted ascending for a canonical representation.
    facets: Vec<u64>,
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

impl Complex {
    pub fn new(m: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            if !facet.windows(2).all(|w| w[0] < w[1]) {
                return Err(ComplexError::NotStrictlyIncreasing(facet.clone()));
            }
            let mut mask = 0u64;
            for &v in facet {
                if v >= m {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, m });
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if i != j && a & b == a {
                    return Err(ComplexError::DominatedFacet {
                        contained: mask_to_vertices(a),
                        container: mask_to_vertices(b),
                    });
                }
            }
        }
        let covered = masks.iter().fold(0u64, |acc, &f| acc | f);
        for v in 0..m {
            if covered >> v & 1 == 0 {
                return Err(ComplexError::GhostVertex(v));
            }
        }
        masks.sort_unstable();
        Ok(Self { m, facets: masks })
    }

    /// The boundary of a `(k-1)`-simplex: all `(k-1)`-subsets of `k`
    /// vertices as facets. The canonical non-flag family for `k >= 3`.
    pub fn boundary_of_simplex(k: usize) -> Result<Self, ComplexError> {
        if k < 2 {
            return Err(ComplexError::BoundaryTooSmall(k));
        }
        let facets: Vec<Vec<usize>> =
            (0..k).map(|skip| (0..k).filter(|&v| v != skip).collect()).collect();
        Self::new(k, &facets)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_to_vertices(f)).collect()
    }

    /// Every face as a bitmask, the empty face included.
    fn face_set(&self) -> HashSet<u64> {
        let mut faces = HashSet::new();
        for &facet in &self.facets {
            // enumerate subsets of the facet mask
            let mut sub = facet;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        if self.facets.is_empty() {
            faces.insert(0);
        }
        faces
    }

    pub fn is_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    /// Counts faces of each dimension by enumerating distinct facet subsets.
    pub fn fvector(&self) -> FVector {
        let mut counts = vec![0u64; self.m + 1];
        for face in self.face_set() {
            counts[face.count_ones() as usize] += 1;
        }
        let last = counts.iter().rposition(|&c| c != 0).unwrap_or(0);
        FVector::from_u64s(&counts[1..=last])
    }

    /// The 1-skeleton as a graph.
    pub fn skeleton_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.m {
            for v in (u + 1)..self.m {
                if self.is_face(1 << u | 1 << v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.m, &edges).expect("skeleton of a valid complex is a valid graph")
    }

    /// All minimal non-faces with at most `max_size` vertices: subsets that
    /// are not faces but whose every proper subset is. Candidates are grown
    /// from faces one vertex at a time, so nothing larger than
    /// `max facet size + 1` is ever scanned.
    pub fn minimal_nonfaces(&self, max_size: usize) -> Vec<Vec<usize>> {
        assert!(max_size <= self.m, "max_size exceeds vertex count");
        let faces = self.face_set();
        let mut found: HashSet<u64> = HashSet::new();
        for &face in &faces {
            let size = face.count_ones() as usize + 1;
            if size > max_size {
                continue;
            }
            for v in 0..self.m {
                let vbit = 1u64 << v;
                if face & vbit != 0 {
                    continue;
                }
                let candidate = face | vbit;
                if faces.contains(&candidate) || found.contains(&candidate) {
                    continue;
                }
                let mut minimal = true;
                let mut rest = candidate;
                while rest != 0 {
                    let w = rest.trailing_zeros();
                    if !faces.contains(&(candidate & !(1u64 << w))) {
                        minimal = false;
                        break;
                    }
                    rest &= rest - 1;
                }
                if minimal {
                    found.insert(candidate);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.iter().map(|&f| mask_to_vertices(f)).collect();
        out.sort();
        out
    }

    /// Flagness test via both characterizations: every minimal non-face has
    /// two vertices, and the complex coincides with the clique complex of
    /// its 1-skeleton. The two must agree; a mismatch is a bug.
    pub fn is_flag(&self) -> bool {
        let max_facet = self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let by_nonfaces = self
            .minimal_nonfaces(self.m.min(max_facet + 1))
            .iter()
            .all(|nf| nf.len() == 2);

        let faces = self.face_set();
        let skeleton = self.skeleton_graph();
        let mut cliques = HashSet::new();
        for clique in skeleton.maximal_cliques() {
            let mut sub = clique;
            loop {
                cliques.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & clique;
            }
        }
        if cliques.is_empty() {
            cliques.insert(0);
        }
        let by_clique_complex = faces == cliques;

        assert_eq!(
            by_nonfaces, by_clique_complex,
            "flagness characterizations disagree on {self:?}"
        );
        by_nonfaces
    }

    /// The clique complex of a graph: maximal cliques become the facets.
    pub fn clique_complex(g: &Graph) -> Self {
        let facets: Vec<Vec<usize>> =
            g.maximal_cliques().into_iter().map(mask_to_vertices).collect();
        Self::new(g.vertex_count(), &facets)
            .expect("maximal cliques of a graph form a valid complex")
    }

    /// Parses the facet-list format: `#` comments and blank lines ignored;
    /// first data line is the vertex count, each following data line a
    /// strictly increasing facet. Dominated facets and uncovered vertices
    /// are errors.
    pub fn parse_facet_list(text: &str) -> Result<Self, ComplexError> {
        let mut m: Option<usize> = None;
        let mut facets: Vec<Vec<usize>> = Vec::new();
        let mut first_data_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| ComplexError::Parse { line: line_no, message };
            match m {
                None => {
                    let count: usize = line
                        .parse()
                        .map_err(|_| err(format!("expected vertex count, got {line:?}")))?;
                    if count > MAX_VERTICES {
                        return Err(err(format!("vertex count {count} exceeds {MAX_VERTICES}")));
                    }
                    m = Some(count);
                    first_data_line = line_no;
                }
                Some(count) => {
                    let mut facet = Vec::new();
                    for part in line.split_whitespace() {
                        let v: usize =
                            part.parse().map_err(|_| err(format!("bad vertex {part:?}")))?;
                        if v >= count {
                            return Err(err(format!(
                                "vertex {v} out of range for {count} vertices"
                            )));
                        }
                        if let Some(&prev) = facet.last() {
                            if v <= prev {
                                return Err(err(format!(
                                    "facet must be strictly increasing, got {line:?}"
                                )));
                            }
                        }
                        facet.push(v);
                    }
                    facets.push(facet);
                }
            }
        }
        let m = m.ok_or(ComplexError::Parse { line: 0, message: "missing vertex count".into() })?;
        Self::new(m, &facets).map_err(|e| match e {
            ComplexError::Parse { .. } => e,
            other => ComplexError::Parse { line: first_data_line, message: other.to_string() },
        })
    }
}
