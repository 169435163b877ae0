//! Clique machinery: canonical clique values, weight maps, cover/packing
//! solutions, enumeration, feasibility checking, and the exact search
//! oracles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::Graph;
use crate::{Error, Result};

mod exact;

pub use exact::{
    exact_cover_number, exact_cover_number_with_limit, exact_packing_number,
    exact_packing_number_with_limit, verify_conjecture, MAX_CONJECTURE_VERTICES,
    MAX_EXACT_VERTICES,
};

/// A clique in canonical form: a strictly increasing vertex list.
///
/// The type itself only guarantees sortedness and distinctness; whether the
/// vertices induce a complete subgraph of a particular host is checked with
/// [`Clique::is_clique_of`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// Canonicalizes a vertex list. Panics on duplicate vertices.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        for pair in vertices.windows(2) {
            assert!(pair[0] != pair[1], "duplicate vertex {} in clique", pair[0]);
        }
        Clique(vertices)
    }

    pub fn empty() -> Self {
        Clique(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Superset test: does `self` contain every vertex of `other`?
    pub fn contains(&self, other: &Clique) -> bool {
        other.0.iter().all(|&v| self.contains_vertex(v))
    }

    pub fn with_vertex(&self, v: usize) -> Clique {
        let mut vs = self.0.clone();
        match vs.binary_search(&v) {
            Ok(_) => panic!("vertex {v} already in clique"),
            Err(pos) => vs.insert(pos, v),
        }
        Clique(vs)
    }

    pub fn without_vertex(&self, v: usize) -> Clique {
        Clique(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    /// Union as a vertex set (not necessarily a clique of any graph).
    pub fn union(&self, other: &Clique) -> Clique {
        let set: BTreeSet<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        Clique(set.into_iter().collect())
    }

    /// True iff all vertices are in range and pairwise adjacent in `g`.
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        self.0.iter().all(|&v| v < g.n()) && g.is_clique_set(&self.0)
    }

    /// Applies a monotone id translation (e.g. a subgraph's new→old map).
    pub fn map_ids(&self, new_to_old: &[usize]) -> Clique {
        Clique::new(self.0.iter().map(|&v| new_to_old[v]).collect())
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl From<Vec<usize>> for Clique {
    fn from(v: Vec<usize>) -> Self {
        Clique::new(v)
    }
}

/// Integer demands on the t-cliques of a host graph.
///
/// Unlisted t-cliques take the explicit `default` weight: 1 for unweighted
/// problems, 0 for residual subproblems where listed cliques carry the only
/// remaining demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    t: usize,
    default: usize,
    entries: BTreeMap<Clique, usize>,
}

impl WeightMap {
    pub fn new(t: usize, default: usize) -> Self {
        WeightMap {
            t,
            default,
            entries: BTreeMap::new(),
        }
    }

    /// All t-cliques demanded once: the unweighted problem.
    pub fn unit(t: usize) -> Self {
        WeightMap::new(t, 1)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn default_weight(&self) -> usize {
        self.default
    }

    /// Sets the weight of one t-clique. Panics if the clique size is not `t`.
    pub fn set(&mut self, clique: Clique, weight: usize) {
        assert_eq!(clique.len(), self.t, "weight key must be a {}-clique", self.t);
        self.entries.insert(clique, weight);
    }

    pub fn get(&self, clique: &Clique) -> usize {
        *self.entries.get(clique).unwrap_or(&self.default)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Clique, usize)> {
        self.entries.iter().map(|(k, &w)| (k, w))
    }

    /// Every listed key must be a t-clique of `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        for (k, _) in self.entries() {
            if !k.is_clique_of(g) {
                return Err(Error::ForeignWeightKey(format!("{k:?}"), self.t));
            }
        }
        Ok(())
    }
}

/// A multiset of cliques with positive multiplicities: the cover function
/// with finite support. Cost is the sum of multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverSolution {
    entries: BTreeMap<Clique, usize>,
}

impl CoverSolution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cliques<I: IntoIterator<Item = Clique>>(cliques: I) -> Self {
        let mut c = CoverSolution::new();
        for q in cliques {
            c.add(q, 1);
        }
        c
    }

    /// Adds `mult` copies of a clique, merging with any existing entry.
    /// Zero multiplicities are ignored.
    pub fn add(&mut self, clique: Clique, mult: usize) {
        if mult > 0 {
            *self.entries.entry(clique).or_insert(0) += mult;
        }
    }

    pub fn cost(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, clique: &Clique) -> usize {
        *self.entries.get(clique).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Clique, usize)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    /// Total multiplicity of members containing the given t-clique.
    pub fn coverage_of(&self, k: &Clique) -> usize {
        self.iter()
            .filter(|(q, _)| q.contains(k))
            .map(|(_, m)| m)
            .sum()
    }
}

/// A set of selected t-cliques (binary indicators).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PackingSolution {
    selected: BTreeSet<Clique>,
}

impl PackingSolution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cliques<I: IntoIterator<Item = Clique>>(cliques: I) -> Self {
        PackingSolution {
            selected: cliques.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, clique: Clique) {
        self.selected.insert(clique);
    }

    pub fn contains(&self, clique: &Clique) -> bool {
        self.selected.contains(clique)
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clique> {
        self.selected.iter()
    }

    pub fn value(&self, w: &WeightMap) -> usize {
        self.selected.iter().map(|k| w.get(k)).sum()
    }
}

/// All t-cliques of `g`, each exactly once, in lexicographic order.
pub fn enumerate_t_cliques(g: &Graph, t: usize) -> Vec<Clique> {
    assert!(t >= 1, "t-clique enumeration requires t >= 1");
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    let all: Vec<usize> = g.vertices().collect();
    extend_t_cliques(g, t, &mut current, &all, &mut out);
    out
}

fn extend_t_cliques(
    g: &Graph,
    t: usize,
    current: &mut Vec<usize>,
    candidates: &[usize],
    out: &mut Vec<Clique>,
) {
    if current.len() == t {
        out.push(Clique::new(current.clone()));
        return;
    }
    // Not enough candidates left to reach size t.
    if current.len() + candidates.len() < t {
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        current.push(v);
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        extend_t_cliques(g, t, current, &next, out);
        current.pop();
    }
}

/// Number of t-cliques in `g`.
pub fn count_kt(g: &Graph, t: usize) -> usize {
    enumerate_t_cliques(g, t).len()
}

/// Largest vertex count supported by the bitset clique routines.
pub const MAX_BITSET_VERTICES: usize = 64;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(
        g.n() <= MAX_BITSET_VERTICES,
        "clique search limited to {MAX_BITSET_VERTICES} vertices"
    );
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn mask_to_clique(mut mask: u64) -> Clique {
    let mut vs = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        vs.push(v);
        mask &= mask - 1;
    }
    Clique::new(vs)
}

/// All inclusion-maximal cliques, in lexicographic order (pivoting
/// branch-and-bound enumeration). The empty graph has none; isolated
/// vertices appear as singletons.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<Clique> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let adj = adjacency_masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut found = Vec::new();
    bron_kerbosch(&adj, 0, all, 0, &mut found);
    let mut cliques: Vec<Clique> = found.into_iter().map(mask_to_clique).collect();
    cliques.sort();
    cliques
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot: vertex of P ∪ X with the most neighbors in P.
    let mut pivot = usize::MAX;
    let mut best = -1i32;
    let mut scan = p | x;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let deg = (adj[v] & p).count_ones() as i32;
        if deg > best {
            best = deg;
            pivot = v;
        }
    }
    let mut todo = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        todo &= todo - 1;
        bron_kerbosch(adj, r | vbit, p & adj[v], x & adj[v], out);
        p &= !vbit;
        x |= vbit;
    }
}

/// A maximum-cardinality clique; ties broken by lexicographically smallest
/// vertex list. The empty graph yields the empty clique.
pub fn maximum_clique(g: &Graph) -> Clique {
    enumerate_maximal_cliques(g)
        .into_iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .unwrap_or_else(Clique::empty)
}

/// Diagnostics for cover feasibility; empty means feasible. Checks that all
/// members are cliques of `g` and that every t-clique meets its demand.
pub fn cover_violations(g: &Graph, t: usize, w: &WeightMap, f: &CoverSolution) -> Vec<String> {
    let mut problems = Vec::new();
    for (q, _) in f.iter() {
        if !q.is_clique_of(g) {
            problems.push(format!("member {q:?} is not a clique of the graph"));
        }
    }
    for k in enumerate_t_cliques(g, t) {
        let demand = w.get(&k);
        if demand == 0 {
            continue;
        }
        let got = f.coverage_of(&k);
        if got < demand {
            problems.push(format!("{t}-clique {k:?} covered {got} < demanded {demand}"));
        }
    }
    problems
}

pub fn is_cover_feasible(g: &Graph, t: usize, w: &WeightMap, f: &CoverSolution) -> bool {
    cover_violations(g, t, w, f).is_empty()
}

/// Diagnostics for packing feasibility; empty means feasible. A packing is
/// feasible iff every selected member is a t-clique of `g` and no clique of
/// `g` contains two selections; equivalently, the union of any two selected
/// t-cliques is not a clique.
pub fn packing_violations(g: &Graph, t: usize, y: &PackingSolution) -> Vec<String> {
    let mut problems = Vec::new();
    let selected: Vec<&Clique> = y.iter().collect();
    for k in &selected {
        if k.len() != t || !k.is_clique_of(g) {
            problems.push(format!("selection {k:?} is not a {t}-clique of the graph"));
        }
    }
    for (i, a) in selected.iter().enumerate() {
        for b in &selected[i + 1..] {
            let u = a.union(b);
            if u.is_clique_of(g) {
                problems.push(format!(
                    "selections {a:?} and {b:?} lie in the common clique {u:?}"
                ));
            }
        }
    }
    problems
}

pub fn is_packing_feasible(g: &Graph, t: usize, y: &PackingSolution) -> bool {
    packing_violations(g, t, y).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, turan_graph, Graph};

    #[test]
    fn k5_has_ten_triangles() {
        let triangles = enumerate_t_cliques(&complete_graph(5), 3);
        assert_eq!(triangles.len(), 10);
        // Lexicographic order.
        for pair in triangles.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn t53_has_four_triangles() {
        let g = turan_graph(5, 3).unwrap();
        assert_eq!(count_kt(&g, 3), 4);
    }

    #[test]
    fn edgeless_has_no_edges_to_enumerate() {
        assert!(enumerate_t_cliques(&Graph::new(4), 2).is_empty());
    }

    #[test]
    fn count_kt_spot_values() {
        assert_eq!(count_kt(&turan_graph(6, 3).unwrap(), 3), 8);
        assert_eq!(count_kt(&complete_graph(4), 4), 1);
        assert_eq!(count_kt(&cycle_graph(5).unwrap(), 3), 0);
    }

    #[test]
    fn maximal_cliques_of_c5_are_its_edges() {
        let g = cycle_graph(5).unwrap();
        let cliques = enumerate_maximal_cliques(&g);
        let edges: Vec<Clique> = g.edges().into_iter().map(|(u, v)| Clique::new(vec![u, v])).collect();
        assert_eq!(cliques, edges);
    }

    #[test]
    fn maximal_cliques_of_t63_are_its_triangles() {
        let g = turan_graph(6, 3).unwrap();
        let cliques = enumerate_maximal_cliques(&g);
        assert_eq!(cliques.len(), 8);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn maximal_cliques_of_k4() {
        let cliques = enumerate_maximal_cliques(&complete_graph(4));
        assert_eq!(cliques, vec![Clique::new(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn maximum_clique_ties_lexicographic() {
        assert_eq!(maximum_clique(&complete_graph(4)).vertices(), &[0, 1, 2, 3]);
        assert_eq!(maximum_clique(&cycle_graph(5).unwrap()).vertices(), &[0, 1]);
        assert_eq!(maximum_clique(&Graph::new(3)).vertices(), &[0]);
        assert!(maximum_clique(&Graph::new(0)).is_empty());
    }

    #[test]
    fn cover_feasibility_checks() {
        let k4 = complete_graph(4);
        // Empty cover against zero demand.
        assert!(is_cover_feasible(&k4, 3, &WeightMap::new(3, 0), &CoverSolution::new()));
        // The whole K4 once covers every triangle.
        let f = CoverSolution::from_cliques([Clique::new(vec![0, 1, 2, 3])]);
        assert!(is_cover_feasible(&k4, 3, &WeightMap::unit(3), &f));
        // Missing demand reported.
        let g = cycle_graph(4).unwrap();
        let partial = CoverSolution::from_cliques([Clique::new(vec![0, 1])]);
        let problems = cover_violations(&g, 2, &WeightMap::unit(2), &partial);
        assert_eq!(problems.len(), 3);
    }

    #[test]
    fn foreign_clique_is_diagnosed() {
        let g = cycle_graph(4).unwrap();
        let f = CoverSolution::from_cliques([Clique::new(vec![0, 2])]);
        let problems = cover_violations(&g, 2, &WeightMap::new(2, 0), &f);
        assert!(problems[0].contains("not a clique"));
    }

    #[test]
    fn packing_two_edges_of_triangle_infeasible() {
        let k3 = complete_graph(3);
        let y = PackingSolution::from_cliques([Clique::new(vec![0, 1]), Clique::new(vec![0, 2])]);
        assert!(!is_packing_feasible(&k3, 2, &y));
        let single = PackingSolution::from_cliques([Clique::new(vec![0, 1])]);
        assert!(is_packing_feasible(&k3, 2, &single));
    }

    #[test]
    fn weight_map_defaults_and_validation() {
        let g = cycle_graph(4).unwrap();
        let mut w = WeightMap::new(2, 1);
        w.set(Clique::new(vec![0, 1]), 5);
        assert_eq!(w.get(&Clique::new(vec![0, 1])), 5);
        assert_eq!(w.get(&Clique::new(vec![1, 2])), 1);
        assert!(w.validate_for(&g).is_ok());
        let mut bad = WeightMap::new(2, 0);
        bad.set(Clique::new(vec![0, 2]), 1);
        assert!(bad.validate_for(&g).is_err());
    }
}
