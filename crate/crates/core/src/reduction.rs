//! The universal-vertex gadget: augmenting a graph with `s = 1 + e` pairwise
//! nonadjacent vertices joined to every original vertex turns `K_{t-1}`
//! cover budgets into `K_t` cover budgets (`k ↦ s·k + e`), with cover
//! transformations in both directions.

use crate::cliques::{
    count_kt, enumerate_t_cliques, is_cover_feasible, CoverSolution, WeightMap,
};
use crate::graph::Graph;
use crate::{Error, Result};

/// An augmentation instance: the original graph, the clique size `t` being
/// reduced to, and the derived quantities.
#[derive(Clone, Debug)]
pub struct Gadget {
    original: Graph,
    augmented: Graph,
    t: usize,
    /// Number of t-cliques of the original graph.
    e: usize,
    /// Number of added vertices, `1 + e`.
    s: usize,
}

impl Gadget {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn augmented(&self) -> &Graph {
        &self.augmented
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Ids of the added vertices (appended after the original ids).
    pub fn new_vertices(&self) -> std::ops::Range<usize> {
        self.original.n()..self.augmented.n()
    }

    /// The budget map `k' = s·k + e`.
    pub fn budget(&self, k: usize) -> usize {
        self.s * k + self.e
    }
}

/// Builds the augmented graph for clique size `t ≥ 2`: `s = 1 + e` new
/// vertices, each adjacent to every original vertex and to no new vertex.
pub fn build_gadget(g: &Graph, t: usize) -> Result<Gadget> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "gadget construction requires t >= 2, got {t}"
        )));
    }
    let n = g.n();
    let e = count_kt(g, t);
    let s = 1 + e;
    let mut augmented = Graph::new(n + s);
    for (u, v) in g.edges() {
        augmented.add_edge(u, v);
    }
    for u in n..n + s {
        for v in 0..n {
            augmented.add_edge(u, v);
        }
    }
    debug_assert_eq!(augmented.edge_count(), g.edge_count() + s * n);
    Ok(Gadget {
        original: g.clone(),
        augmented,
        t,
        e,
        s,
    })
}

/// Lifts a feasible `K_{t-1}` cover of the original graph to a feasible
/// `K_t` cover of the augmented graph: every member is combined with every
/// new vertex, and each original t-clique left uncovered is added by itself.
/// The result has cost at most `s·k + e` for an input of cost `k`.
pub fn lift_cover(gadget: &Gadget, cover: &CoverSolution) -> Result<CoverSolution> {
    let t = gadget.t;
    if !is_cover_feasible(&gadget.original, t - 1, &WeightMap::unit(t - 1), cover) {
        return Err(Error::InfeasibleInput(format!(
            "not a {}-clique cover of the original graph",
            t - 1
        )));
    }
    let mut lifted = CoverSolution::new();
    for (member, mult) in cover.iter() {
        for u in gadget.new_vertices() {
            lifted.add(member.with_vertex(u), mult);
        }
    }
    for k in enumerate_t_cliques(&gadget.original, t) {
        if !cover.iter().any(|(member, _)| member.contains(&k)) {
            lifted.add(k, 1);
        }
    }
    debug_assert!(lifted.cost() <= gadget.s * cover.cost() + gadget.e);
    debug_assert!(is_cover_feasible(
        &gadget.augmented,
        t,
        &WeightMap::unit(t),
        &lifted
    ));
    Ok(lifted)
}

/// Projects a feasible `K_t` cover of the augmented graph down to a feasible
/// `K_{t-1}` cover of the original graph: pick the new vertex contained in
/// the fewest members (ties to the smallest id) and strip it from them.
/// Residues smaller than `t−1` cannot host a (t−1)-clique and are dropped.
/// By pigeonhole the result costs at most `⌊cost/s⌋`.
pub fn project_cover(gadget: &Gadget, cover: &CoverSolution) -> Result<CoverSolution> {
    let t = gadget.t;
    if !is_cover_feasible(&gadget.augmented, t, &WeightMap::unit(t), cover) {
        return Err(Error::InfeasibleInput(format!(
            "not a {t}-clique cover of the augmented graph"
        )));
    }
    // Members touching distinct new vertices are disjoint families: new
    // vertices are pairwise nonadjacent, so no clique holds two of them.
    for (member, _) in cover.iter() {
        let hits = gadget
            .new_vertices()
            .filter(|&u| member.contains_vertex(u))
            .count();
        assert!(hits <= 1, "cover member spans two added vertices");
    }
    let load = |u: usize| -> usize {
        cover
            .iter()
            .filter(|(member, _)| member.contains_vertex(u))
            .map(|(_, mult)| mult)
            .sum()
    };
    let u_min = gadget
        .new_vertices()
        .min_by_key(|&u| (load(u), u))
        .expect("gadget adds at least one vertex");
    debug_assert!(load(u_min) <= cover.cost() / gadget.s);

    let mut projected = CoverSolution::new();
    for (member, mult) in cover.iter() {
        if member.contains_vertex(u_min) {
            let residue = member.without_vertex(u_min);
            if residue.len() >= t - 1 {
                projected.add(residue, mult);
            }
        }
    }
    debug_assert!(is_cover_feasible(
        &gadget.original,
        t - 1,
        &WeightMap::unit(t - 1),
        &projected
    ));
    Ok(projected)
}

/// Limits for [`verify_reduction`]: the augmented graph must stay within the
/// exact oracle's reach.
pub const MAX_REDUCTION_VERTICES: usize = 5;
pub const MAX_REDUCTION_T: usize = 3;

/// Evaluates both sides of the budget biconditional with the exact oracles:
/// the original graph has a `K_{t-1}` cover of cost ≤ k iff the augmented
/// graph has a `K_t` cover of cost ≤ s·k + e.
pub fn verify_reduction(g: &Graph, t: usize, k: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "verify_reduction requires t >= 2, got {t}"
        )));
    }
    if g.n() > MAX_REDUCTION_VERTICES {
        return Err(Error::SizeGuard {
            what: "verify_reduction",
            limit: MAX_REDUCTION_VERTICES,
            actual: g.n(),
        });
    }
    if t > MAX_REDUCTION_T {
        return Err(Error::SizeGuard {
            what: "verify_reduction t",
            limit: MAX_REDUCTION_T,
            actual: t,
        });
    }
    let gadget = build_gadget(g, t)?;
    let theta_small = crate::cliques::exact_cover_number(g, t - 1, &WeightMap::unit(t - 1))?.0;
    let theta_big =
        crate::cliques::exact_cover_number(&gadget.augmented, t, &WeightMap::unit(t))?.0;
    Ok((theta_small <= k) == (theta_big <= gadget.budget(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::Clique;
    use crate::graph::{all_labeled_graphs, complete_graph, Graph};

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn gadget_shapes() {
        let g = path3();
        let gadget = build_gadget(&g, 2).unwrap();
        assert_eq!((gadget.e(), gadget.s()), (2, 3));
        assert_eq!(gadget.augmented().n(), 6);
        assert_eq!(gadget.augmented().edge_count(), 11);
        assert_eq!(gadget.budget(2), 8);

        let empty = Graph::new(3);
        let gadget = build_gadget(&empty, 2).unwrap();
        assert_eq!((gadget.e(), gadget.s()), (0, 1));
        assert_eq!(gadget.augmented().edge_count(), 3);

        let k3 = complete_graph(3);
        let gadget = build_gadget(&k3, 3).unwrap();
        assert_eq!((gadget.e(), gadget.s()), (1, 2));
        for u in gadget.new_vertices() {
            for v in gadget.new_vertices() {
                assert!(u == v || !gadget.augmented().has_edge(u, v));
            }
        }
        assert_eq!(gadget.budget(1), 3);

        assert!(build_gadget(&k3, 1).is_err());
    }

    #[test]
    fn lift_path3_vertex_cover() {
        let gadget = build_gadget(&path3(), 2).unwrap();
        let cover =
            CoverSolution::from_cliques([Clique::new(vec![0, 1]), Clique::new(vec![2])]);
        let lifted = lift_cover(&gadget, &cover).unwrap();
        // Six lifted members plus the uncovered edge {1,2}.
        assert_eq!(lifted.cost(), 7);
        assert!(lifted.cost() <= gadget.budget(cover.cost()));
        assert_eq!(lifted.multiplicity(&Clique::new(vec![1, 2])), 1);
    }

    #[test]
    fn lift_uses_no_extras_when_everything_is_covered() {
        let k3 = complete_graph(3);
        let gadget = build_gadget(&k3, 2).unwrap();
        // The whole triangle is a K1 cover; it already contains every edge.
        let cover = CoverSolution::from_cliques([Clique::new(vec![0, 1, 2])]);
        let lifted = lift_cover(&gadget, &cover).unwrap();
        assert_eq!(lifted.cost(), gadget.s() * cover.cost());
    }

    #[test]
    fn lift_k3_edge_cover_for_triangles() {
        let k3 = complete_graph(3);
        let gadget = build_gadget(&k3, 3).unwrap();
        let cover = CoverSolution::from_cliques([Clique::new(vec![0, 1, 2])]);
        let lifted = lift_cover(&gadget, &cover).unwrap();
        assert!(lifted.cost() <= gadget.budget(cover.cost()));
    }

    #[test]
    fn lift_rejects_infeasible_input() {
        let gadget = build_gadget(&path3(), 2).unwrap();
        let partial = CoverSolution::from_cliques([Clique::new(vec![0])]);
        assert!(matches!(
            lift_cover(&gadget, &partial),
            Err(Error::InfeasibleInput(_))
        ));
    }

    #[test]
    fn project_after_lift_round_trip() {
        let gadget = build_gadget(&path3(), 2).unwrap();
        let cover =
            CoverSolution::from_cliques([Clique::new(vec![0, 1]), Clique::new(vec![2])]);
        let lifted = lift_cover(&gadget, &cover).unwrap();
        let projected = project_cover(&gadget, &lifted).unwrap();
        assert!(projected.cost() <= cover.cost());
        assert!(is_cover_feasible(
            &gadget.original,
            1,
            &WeightMap::unit(1),
            &projected
        ));
    }

    #[test]
    fn project_optimal_cover_of_k3_gadget() {
        let k3 = complete_graph(3);
        let gadget = build_gadget(&k3, 3).unwrap();
        let (_, optimal) =
            crate::cliques::exact_cover_number(gadget.augmented(), 3, &WeightMap::unit(3))
                .unwrap();
        let projected = project_cover(&gadget, &optimal).unwrap();
        assert_eq!(projected.cost(), 1);
    }

    #[test]
    fn empty_projection_only_for_trivial_graphs() {
        // With no (t−1)-cliques demanded, an empty projection is feasible.
        let empty = Graph::new(2);
        let gadget = build_gadget(&empty, 2).unwrap();
        let (_, optimal) =
            crate::cliques::exact_cover_number(gadget.augmented(), 2, &WeightMap::unit(2))
                .unwrap();
        let projected = project_cover(&gadget, &optimal).unwrap();
        assert!(is_cover_feasible(&empty, 1, &WeightMap::unit(1), &projected));
    }

    #[test]
    fn biconditional_examples() {
        assert!(verify_reduction(&path3(), 2, 2).unwrap());
        assert!(verify_reduction(&complete_graph(3), 3, 1).unwrap());
        // Both sides false: two isolated vertices need two singleton cliques.
        let g = Graph::new(2);
        assert!(verify_reduction(&g, 2, 1).unwrap());
        assert!(matches!(
            verify_reduction(&Graph::new(6), 2, 1),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn biconditional_exhaustive_tiny() {
        for n in 1..=4usize {
            for g in all_labeled_graphs(n) {
                for t in [2usize, 3] {
                    for k in 0..=6 {
                        assert!(
                            verify_reduction(&g, t, k).unwrap(),
                            "failed on {g:?}, t={t}, k={k}"
                        );
                    }
                }
            }
        }
    }
}
