//! Deletion–contraction on bitmask adjacency.
//!
//! Reductions applied before branching: connected components multiply,
//! simplicial vertices (neighbourhood a clique, which covers isolated
//! vertices, leaves, and complete graphs) peel off a linear factor, and
//! connected 2-regular graphs are cycles with a closed form. Sparse graphs
//! branch on an edge between a maximum-degree vertex and its maximum-degree
//! neighbour, `P(G) = P(G - e) - P(G / e)`; dense graphs branch on a non-edge
//! whose ends share the most neighbours, `P(G) = P(G + e) + P(G / e)`.
//! Subproblems are memoised on their degree-sorted adjacency.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{Graph, GraphError};
use crate::intpoly::IntPoly;

pub const DEFAULT_VERTEX_CAP: usize = 18;
pub const MAX_VERTEX_CAP: usize = 64;

/// Subproblems smaller than this are not worth a cache entry.
const MEMO_MIN_VERTICES: usize = 6;
const MEMO_MAX_ENTRIES: usize = 1 << 20;

pub fn chromatic_polynomial(g: &Graph) -> Result<IntPoly, GraphError> {
    chromatic_polynomial_with_cap(g, DEFAULT_VERTEX_CAP)
}

pub fn chromatic_polynomial_with_cap(g: &Graph, cap: usize) -> Result<IntPoly, GraphError> {
    let cap = cap.min(MAX_VERTEX_CAP);
    if g.vertex_count() > cap {
        return Err(GraphError::TooLarge { n: g.vertex_count(), cap });
    }
    let mut adj = vec![0u64; g.vertex_count()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(Engine::default().solve(adj))
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn component(adj: &[u64], active: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & active;
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

/// Subgraph induced on `keep`, with vertices listed in `order`.
fn induced(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let keep: u64 = order.iter().fold(0, |m, &v| m | 1 << v);
    order.iter().map(|&v| bits(adj[v] & keep).fold(0u64, |m, u| m | 1 << pos[u])).collect()
}

/// `(q - 1)^n + (-1)^n (q - 1)`.
pub fn cycle_polynomial(n: usize) -> IntPoly {
    let qm1 = IntPoly::linear_root(1);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    &qm1.pow(n as u32) + &qm1.scale(&BigInt::from(sign))
}

#[derive(Default)]
struct Engine {
    memo: HashMap<Vec<u64>, IntPoly>,
}

impl Engine {
    fn solve(&mut self, adj: Vec<u64>) -> IntPoly {
        let mut active = full(adj.len());
        let mut factor = IntPoly::one();
        loop {
            let mut peeled = false;
            for v in bits(active) {
                let nb = adj[v] & active;
                if bits(nb).all(|u| (adj[u] | (1 << u)) & nb == nb) {
                    factor = &factor * &IntPoly::linear_root(nb.count_ones());
                    active &= !(1 << v);
                    peeled = true;
                }
            }
            if !peeled || active == 0 {
                break;
            }
        }
        if active == 0 {
            return factor;
        }
        let mut rest = active;
        while rest != 0 {
            let comp = component(&adj, rest, rest.trailing_zeros() as usize);
            rest &= !comp;
            let mut order: Vec<usize> = bits(comp).collect();
            order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & comp).count_ones()));
            let p = self.connected(induced(&adj, &order));
            factor = &factor * &p;
        }
        factor
    }

    /// `adj` is connected, has no simplicial vertex, and is sorted by
    /// non-increasing degree.
    fn connected(&mut self, adj: Vec<u64>) -> IntPoly {
        let n = adj.len();
        if adj.iter().all(|a| a.count_ones() == 2) {
            return cycle_polynomial(n);
        }
        let memo = n >= MEMO_MIN_VERTICES;
        if memo {
            if let Some(p) = self.memo.get(&adj) {
                return p.clone();
            }
        }
        let twice_edges: u32 = adj.iter().map(|a| a.count_ones()).sum();
        let p = if 2 * twice_edges as usize > n * (n - 1) { self.add_non_edge(&adj) } else { self.delete_edge(&adj) };
        if memo && self.memo.len() < MEMO_MAX_ENTRIES {
            self.memo.insert(adj, p.clone());
        }
        p
    }

    fn delete_edge(&mut self, adj: &[u64]) -> IntPoly {
        // vertex 0 has maximum degree
        let u = 0;
        let v = bits(adj[u]).max_by_key(|&w| (adj[w].count_ones(), std::cmp::Reverse(w))).unwrap();
        let mut deleted = adj.to_vec();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        let contracted = contract(adj, u, v);
        &self.solve(deleted) - &self.solve(contracted)
    }

    fn add_non_edge(&mut self, adj: &[u64]) -> IntPoly {
        let n = adj.len();
        let all = full(n);
        let (u, v) = (0..n)
            .flat_map(|u| bits(all & !adj[u] & !((1u64 << (u + 1)) - 1)).map(move |v| (u, v)))
            .max_by_key(|&(u, v)| ((adj[u] & adj[v]).count_ones(), std::cmp::Reverse((u, v))))
            .expect("a graph with a non-simplicial vertex has a non-edge");
        let mut added = adj.to_vec();
        added[u] |= 1 << v;
        added[v] |= 1 << u;
        let contracted = contract(adj, u, v);
        &self.solve(added) + &self.solve(contracted)
    }
}

/// Merge `v` into `u` (edge or not) and drop `v`.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut g = adj.to_vec();
    let nv = g[v] & !(1 << u);
    g[u] = (g[u] | nv) & !(1 << v);
    for w in bits(nv) {
        g[w] |= 1 << u;
    }
    let order: Vec<usize> = (0..adj.len()).filter(|&w| w != v).collect();
    induced(&g, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn small_examples() {
        assert_eq!(chromatic_polynomial(&Graph::complete(2)).unwrap(), q(&[0, -1, 1]));
        assert_eq!(chromatic_polynomial(&Graph::cycle(4)).unwrap(), q(&[0, -3, 6, -4, 1]));
        assert_eq!(chromatic_polynomial(&Graph::empty(2)).unwrap(), q(&[0, 0, 1]));
        assert_eq!(chromatic_polynomial(&Graph::empty(0)).unwrap(), IntPoly::one());
        // paths are trees: q (q-1)^(n-1)
        let p5 = chromatic_polynomial(&Graph::path(5)).unwrap();
        assert_eq!(p5, &IntPoly::x() * &q(&[-1, 1]).pow(4));
    }

    #[test]
    fn subdivided_k6() {
        let g = Graph::complete(6).subdivide(0, 1, 1).unwrap();
        let expected = [0, 1, 2, 3, 3, 3, 4].iter().fold(IntPoly::one(), |acc, &a| &acc * &IntPoly::linear_root(a));
        assert_eq!(chromatic_polynomial(&g).unwrap(), expected);
    }

    #[test]
    fn wheel_is_join() {
        let w = chromatic_polynomial(&Graph::cycle(4).join_complete(1)).unwrap();
        let c = chromatic_polynomial(&Graph::cycle(4)).unwrap();
        assert_eq!(w, &IntPoly::x() * &c.shift_i64(-1));
    }

    #[test]
    fn cap() {
        assert!(matches!(chromatic_polynomial(&Graph::empty(19)), Err(GraphError::TooLarge { n: 19, cap: 18 })));
        assert_eq!(chromatic_polynomial_with_cap(&Graph::path(30), 40).unwrap().deg(), 30);
    }
}
