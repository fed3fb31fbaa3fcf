//! Simple undirected graphs, the deletion–contraction chromatic engine and
//! explicit constructions of the graph families.

mod chromatic;
mod family;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use chromatic::{
    chromatic_polynomial, chromatic_polynomial_with_cap, cycle_polynomial, DEFAULT_VERTEX_CAP, MAX_VERTEX_CAP,
};
pub use family::FamilySpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, above the limit of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("invalid family: {0}")]
    InvalidSpec(String),
}

/// Undirected simple graph on vertices `0..n`. Edges are stored as
/// `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    /// Fails on loops, repeated edges (in either orientation) and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if !g.try_add_edge(u, v) {
                return Err(GraphError::InvalidEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.edges.insert((u, v));
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Adds a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Returns false (and leaves the graph unchanged) for loops, existing
    /// edges and out-of-range endpoints.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.edges.insert((u.min(v), u.max(v)))
    }

    /// Idempotent edge insertion; panics on loops or bad endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v}) in graph on {} vertices", self.n);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Disjoint union; vertices of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.n += other.n;
        g.edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        g
    }

    /// `G + K_n`: `n` new vertices adjacent to each other and to every
    /// existing vertex.
    pub fn join_complete(&self, n: usize) -> Graph {
        let mut g = self.clone();
        let old = g.n;
        g.n += n;
        for u in old..g.n {
            for v in 0..u {
                g.edges.insert((v, u));
            }
        }
        g
    }

    /// Remove edge `(u, v)` and insert a path of `k` new vertices between
    /// its endpoints.
    pub fn subdivide(&self, u: usize, v: usize, k: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&(u.min(v), u.max(v)));
        let mut prev = u;
        for _ in 0..k {
            let w = g.add_vertex();
            g.add_edge(prev, w);
            prev = w;
        }
        g.add_edge(prev, v);
        Ok(g)
    }

    /// Number of proper colourings with `q` colours by exhaustive search.
    /// Limited to `n <= 8`, `q <= 6`.
    pub fn count_colourings(&self, q: u32) -> Result<u64, GraphError> {
        if self.n > 8 || q > 6 {
            return Err(GraphError::TooLarge { n: self.n, cap: 8 });
        }
        if self.n == 0 {
            return Ok(1);
        }
        if q == 0 {
            return Ok(0);
        }
        let q = q as usize;
        let total = q.pow(self.n as u32);
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut colour = vec![0usize; self.n];
        let mut count = 0u64;
        for mut code in 0..total {
            for c in colour.iter_mut() {
                *c = code % q;
                code /= q;
            }
            if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Plain text form readable by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph with {} vertices and {} edges", self.n, self.edges.len())
    }
}

/// Parse the text format: first line the vertex count, then one `u v` edge
/// per line (0-based). Blank lines and `#` comments are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| GraphError::Parse { line: line_no, msg: msg.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match g.as_mut() {
            None => {
                if fields.len() != 1 {
                    return Err(err("expected the vertex count"));
                }
                let n = fields[0].parse::<usize>().map_err(|_| err("bad vertex count"))?;
                g = Some(Graph::empty(n));
            }
            Some(g) => {
                if fields.len() != 2 {
                    return Err(err("expected two endpoints"));
                }
                let u = fields[0].parse::<usize>().map_err(|_| err("bad vertex index"))?;
                let v = fields[1].parse::<usize>().map_err(|_| err("bad vertex index"))?;
                if u >= g.n || v >= g.n {
                    return Err(err("vertex index out of range"));
                }
                if u == v {
                    return Err(err("loops are not allowed"));
                }
                if !g.try_add_edge(u, v) {
                    return Err(err("duplicate edge"));
                }
            }
        }
    }
    g.ok_or(GraphError::Parse { line: 0, msg: "missing vertex count".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_graph("3\n0 1\n1 2").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = parse_graph("# two isolated vertices\n2\n").unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 2);
        assert!(matches!(parse_graph("3\n0 1\n1 0"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3\n0 3"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3\n1 1"), Err(GraphError::Parse { .. })));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::cycle(5).join_complete(2);
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(Graph::complete(3).count_colourings(3).unwrap(), 6);
        assert_eq!(Graph::complete(3).count_colourings(2).unwrap(), 0);
        assert_eq!(Graph::cycle(4).count_colourings(2).unwrap(), 2);
        assert!(Graph::empty(9).count_colourings(2).is_err());
    }

    #[test]
    fn join_and_subdivide() {
        assert_eq!(Graph::empty(1).join_complete(1), Graph::complete(2));
        assert_eq!(Graph::cycle(4).join_complete(0), Graph::cycle(4));
        let w = Graph::cycle(4).join_complete(1);
        assert_eq!((w.vertex_count(), w.edge_count()), (5, 8));
        let s = Graph::complete(6).subdivide(0, 1, 1).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (7, 16));
        assert!(!s.has_edge(0, 1));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::InvalidEdge(0, 0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(GraphError::InvalidEdge(1, 0)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::InvalidEdge(0, 2)));
    }
}
