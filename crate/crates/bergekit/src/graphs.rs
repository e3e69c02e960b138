//! The row graph G(F) and its exact invariants.
//!
//! G(F) has one vertex per row of F and an edge {i,j} whenever some column
//! of F carries 1s in both rows. The classifier branches on exact values of
//! the clique, chromatic and independence numbers, so those are computed by
//! brute force and restricted to at most 12 vertices.

use crate::error::{Error, ParseError, Result};
use crate::matrix::{BitMatrix, MAX_ROWS};

/// Undirected loopless graph on at most 62 vertices, adjacency as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

/// Vertex limit for the exact invariant computations.
pub const EXACT_LIMIT: usize = 12;

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ROWS as usize {
            return Err(Error::BadParameter {
                op: "SimpleGraph::new",
                param: "n",
            });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "loopless simple graph");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Parses the CLI literal `"<n>;u-v,u-v,..."`, 0-based vertices.
    pub fn parse_literal(input: &str) -> std::result::Result<SimpleGraph, ParseError> {
        let input = input.trim();
        let (n, edges) = input.split_once(';').ok_or(ParseError::BadGraphShape)?;
        let n: usize = n.trim().parse().map_err(|_| ParseError::BadGraphShape)?;
        if n == 0 || n > MAX_ROWS as usize {
            return Err(ParseError::BadGraphShape);
        }
        let mut g = SimpleGraph { n, adj: vec![0; n] };
        let edges = edges.trim();
        if edges.is_empty() {
            return Ok(g);
        }
        for tok in edges.split(',') {
            let (u, v) = tok.split_once('-').ok_or(ParseError::BadGraphShape)?;
            let u: usize = u.trim().parse().map_err(|_| ParseError::BadGraphShape)?;
            let v: usize = v.trim().parse().map_err(|_| ParseError::BadGraphShape)?;
            if u >= n {
                return Err(ParseError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(ParseError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(ParseError::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn to_literal(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("{};{}", self.n, edges.join(","))
    }

    fn check_exact(&self) -> Result<()> {
        if self.n > EXACT_LIMIT {
            return Err(Error::GraphTooLarge(self.n));
        }
        Ok(())
    }

    /// Exact clique number by recursive extension.
    pub fn clique_number(&self) -> Result<usize> {
        self.check_exact()?;
        let mut best = 0;
        self.clique_rec(0, u64::MAX >> (64 - self.n), &mut best);
        Ok(best)
    }

    fn clique_rec(&self, size: usize, mut candidates: u64, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if size + 1 + candidates.count_ones() as usize <= *best {
                return;
            }
            self.clique_rec(size + 1, candidates & self.adj[v], best);
        }
        *best = (*best).max(size);
    }

    /// Exact chromatic number: try k-colorings upward from the clique bound.
    pub fn chromatic_number(&self) -> Result<usize> {
        self.check_exact()?;
        if self.edge_count() == 0 {
            return Ok(1);
        }
        let lower = self.clique_number()?;
        for k in lower..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.colorable(k, 0, 0, &mut colors) {
                return Ok(k);
            }
        }
        unreachable!("n colors always suffice")
    }

    fn colorable(&self, k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
        if v == self.n {
            return true;
        }
        // allow at most one brand-new color to break symmetry
        for c in 0..k.min(used + 1) {
            let mut ok = true;
            let mut nb = self.adj[v] & ((1 << v) - 1);
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colors[u] == c {
                    ok = false;
                    break;
                }
            }
            if ok {
                colors[v] = c;
                if self.colorable(k, v + 1, used.max(c + 1), colors) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }

    /// Exact independence number: clique number of the complement.
    pub fn independence_number(&self) -> Result<usize> {
        self.check_exact()?;
        let full = u64::MAX >> (64 - self.n);
        let comp = SimpleGraph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| !self.adj[v] & full & !(1 << v))
                .collect(),
        };
        comp.clique_number()
    }

    /// Vertex-edge incidence matrix: one column of sum 2 per edge, edges in
    /// lexicographic order.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let cols = self
            .edges()
            .iter()
            .map(|&(u, v)| 1u64 << u | 1 << v)
            .collect();
        BitMatrix::new(self.n, cols).expect("vertex range bounded by MAX_ROWS")
    }

    /// True iff the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen |= 1 << start;
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v] & !seen;
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    seen |= 1 << u;
                    stack.push(u);
                }
            }
        }
        count
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bipartite and containing at least one cycle.
    pub fn is_bipartite_with_cycle(&self) -> bool {
        self.is_bipartite() && !self.is_forest()
    }
}

/// G(F): vertices are rows of F, edge {i,j} iff some column has 1s in both.
pub fn graph_of(f: &BitMatrix) -> SimpleGraph {
    let n = f.rows() as usize;
    let mut g = SimpleGraph { n, adj: vec![0; n] };
    for &c in f.cols() {
        let mut a = c;
        while a != 0 {
            let i = a.trailing_zeros() as usize;
            a &= a - 1;
            let mut b = a;
            while b != 0 {
                let j = b.trailing_zeros() as usize;
                b &= b - 1;
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3);
    let mut g = SimpleGraph::new(n).unwrap();
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

/// The path on `n` vertices.
pub fn path(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).unwrap();
    for v in 0..n.saturating_sub(1) {
        g.add_edge(v, v + 1);
    }
    g
}

/// The complete bipartite graph with parts `a`, `b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(a + b).unwrap();
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn graph_of_examples() {
        let g = graph_of(&named::g2());
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.clique_number().unwrap(), 3);
        let empty = graph_of(&named::identity(3));
        assert_eq!(empty.edge_count(), 0);
        // G(1_1 x C_4) is the wheel over the 4-cycle
        let cone = named::ones(1, 0).product(&named::c4()).unwrap();
        let wheel = graph_of(&cone);
        assert_eq!(wheel.vertex_count(), 5);
        assert_eq!(wheel.clique_number().unwrap(), 3);
        assert_eq!(wheel.independence_number().unwrap(), 2);
        assert_eq!(wheel.chromatic_number().unwrap(), 3);
    }

    #[test]
    fn odd_cycle_invariants() {
        let c5 = cycle(5);
        assert_eq!(c5.clique_number().unwrap(), 2);
        assert_eq!(c5.chromatic_number().unwrap(), 3);
        assert_eq!(c5.independence_number().unwrap(), 2);
        let k3 = cycle(3);
        assert_eq!(k3.clique_number().unwrap(), 3);
        assert_eq!(k3.chromatic_number().unwrap(), 3);
        assert_eq!(k3.independence_number().unwrap(), 1);
    }

    #[test]
    fn incidence_examples() {
        let p3 = path(3);
        assert!(p3
            .incidence_matrix()
            .same_columns(&BitMatrix::parse_literal("110,011").unwrap()));
        let k22 = complete_bipartite(2, 2);
        assert!(k22.incidence_matrix().isomorphic_to(&named::c4()).unwrap());
        let star = complete_bipartite(1, 3);
        assert!(star.incidence_matrix().isomorphic_to(&named::h(2)).unwrap());
    }

    #[test]
    fn forest_and_bipartite_predicates() {
        assert!(path(4).is_forest());
        assert!(!cycle(4).is_forest());
        assert!(cycle(4).is_bipartite_with_cycle());
        assert!(!cycle(5).is_bipartite_with_cycle());
        assert!(!path(4).is_bipartite_with_cycle());
        let mut two_comp = SimpleGraph::new(6).unwrap();
        two_comp.add_edge(0, 1);
        two_comp.add_edge(2, 3);
        two_comp.add_edge(3, 4);
        two_comp.add_edge(4, 2);
        assert!(!two_comp.is_forest());
        assert!(!two_comp.is_bipartite());
    }

    #[test]
    fn exact_invariants_refuse_large_graphs() {
        let g = SimpleGraph::new(13).unwrap();
        assert!(g.clique_number().is_err());
        assert!(g.chromatic_number().is_err());
        assert!(g.independence_number().is_err());
    }

    #[test]
    fn literal_roundtrip() {
        let g = SimpleGraph::parse_literal("5;0-1,1-2").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(SimpleGraph::parse_literal(&g.to_literal()).unwrap(), g);
        assert!(SimpleGraph::parse_literal("4;").unwrap().edges().is_empty());
        assert!(SimpleGraph::parse_literal("4;0-4").is_err());
        assert!(SimpleGraph::parse_literal("4;1-1").is_err());
        assert!(SimpleGraph::parse_literal("nope").is_err());
    }

    #[test]
    fn incidence_graph_roundtrip() {
        for g in [path(5), cycle(6), complete_bipartite(2, 3)] {
            assert_eq!(graph_of(&g.incidence_matrix()), g);
        }
    }
}
