//! Undirected simple graphs as vertex-indexed adjacency sets, plus a small
//! 3-uniform hypergraph type, generators, and isomorphism testing for small
//! graphs.

use std::collections::BTreeSet;
use std::fmt;

mod generate;
mod iso;

pub use generate::{
    all_labeled_graphs, complete_graph, cycle_graph, labeled_graph_from_mask, random_chordal,
    random_gnp, sample_labeled_graphs, turan_graph, turan_hypergraph,
};
pub use iso::{isomorphic_small, MAX_ISO_VERTICES};

/// Undirected simple graph on dense 0-based vertex ids.
///
/// Invariants (maintained by every mutation):
/// * symmetric: `u ∈ adj[v] ⇔ v ∈ adj[u]`
/// * irreflexive: `v ∉ adj[v]`
/// * all stored ids are `< n`
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds the edge `{u, v}`. Panics on self-loops or out-of-range ids;
    /// adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(BTreeSet::is_empty)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    /// A vertex of minimum degree, ties broken by smallest id.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n()).min_by_key(|&v| self.degree(v))
    }

    /// True iff every pair of vertices in `verts` is adjacent.
    pub fn is_clique_set(&self, verts: &[usize]) -> bool {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Induced subgraph on the given vertices. Returns the new graph and the
    /// new→old id map (position `i` holds the original id of new vertex `i`;
    /// ids are taken in sorted order).
    pub fn induced_subgraph(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let new_to_old: Vec<usize> = verts.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        for &v in &new_to_old {
            assert!(v < self.n(), "vertex {v} out of range");
        }
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = Graph::new(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for &old_v in self.adj[old_u].range(old_u + 1..) {
                let new_v = old_to_new[old_v];
                if new_v != usize::MAX {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        (g, new_to_old)
    }

    /// Removes a vertex, renumbering the remainder densely. Returns the new
    /// graph and the old→new id map (`None` for the removed vertex).
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<Option<usize>>) {
        assert!(v < self.n(), "vertex {v} out of range");
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        let (g, _) = self.induced_subgraph(&keep);
        let map = (0..self.n())
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        (g, map)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut components = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// 3-uniform hypergraph: a vertex count and a set of sorted vertex triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    hyperedges: BTreeSet<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize) -> Self {
        Hypergraph3 {
            n,
            hyperedges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inserts a hyperedge; the three ids must be distinct and in range.
    /// Duplicate insertions are no-ops.
    pub fn add_hyperedge(&mut self, a: usize, b: usize, c: usize) {
        assert!(a != b && b != c && a != c, "degenerate hyperedge");
        assert!(a < self.n && b < self.n && c < self.n, "hyperedge out of range");
        let mut e = [a, b, c];
        e.sort_unstable();
        self.hyperedges.insert(e);
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> impl Iterator<Item = &[usize; 3]> {
        self.hyperedges.iter()
    }
}
