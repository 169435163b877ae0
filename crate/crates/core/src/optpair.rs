//! Recursive construction of a matching optimal cover/packing pair on graphs
//! with a cluster elimination ordering, with an equality certificate.

use std::collections::HashMap;

use itertools::Itertools;

use crate::cliques::{
    cover_violations, packing_violations, Clique, CoverSolution, PackingSolution, WeightMap,
};
use crate::elimination::{verify_p3_ordering, EliminationOrdering};
use crate::graph::Graph;
use crate::{Error, Result};

/// Per-component record at one recursion level.
#[derive(Clone, Debug)]
pub struct ComponentTrace {
    /// The cluster component `Q` of the processed vertex's neighborhood.
    pub component: Clique,
    /// `Q* = {v} ∪ Q`, the clique the cover may charge.
    pub starred: Clique,
    /// The chosen (t−1)-clique `Z` maximizing the demand through `v`.
    pub chosen: Clique,
    /// `t_i = w({v} ∪ Z)` under the residual weights at this level.
    pub demand: usize,
}

/// One recursion level: the eliminated vertex, its qualifying components,
/// and the residual weights written for the deeper levels.
#[derive(Clone, Debug)]
pub struct LevelTrace {
    pub vertex: usize,
    pub components: Vec<ComponentTrace>,
    /// Touched t-cliques with their new residual weights.
    pub residual_updates: Vec<(Clique, usize)>,
}

/// An optimal cover/packing pair with matching cost and value.
#[derive(Clone, Debug)]
pub struct OptpairResult {
    pub cover: CoverSolution,
    pub packing: PackingSolution,
    pub cost: usize,
    pub value: usize,
    pub trace: Vec<LevelTrace>,
}

/// Outcome of re-checking an [`OptpairResult`] against its instance.
#[derive(Clone, Debug)]
pub struct Certification {
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

/// Runs the recursive cover/packing construction along a verified cluster
/// elimination ordering.
///
/// Levels peel the first remaining vertex `v`: each cluster component `Q` of
/// its remaining neighborhood with at least `t−1` vertices contributes the
/// clique `Q* = {v} ∪ Q` with multiplicity `t_i`, the largest residual
/// demand among the t-cliques `{v} ∪ Z` with `Z` a (t−1)-subset of `Q`
/// (ties broken by lexicographically smallest `Z`). Demands inside `Q` are
/// reduced by `t_i` and the recursion continues on the rest; packing
/// indicators are set bottom-up so that each selected t-clique is blocked by
/// deeper selections inside its component.
///
/// `t = 1` is rejected: the empty base case cannot satisfy positive demand
/// on an isolated vertex, so the construction is defined for `t ≥ 2` only.
pub fn optpair(
    g: &Graph,
    t: usize,
    w: &WeightMap,
    ordering: &EliminationOrdering,
) -> Result<OptpairResult> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "optpair requires t >= 2, got {t}"
        )));
    }
    if w.t() != t {
        return Err(Error::InvalidParameter(format!(
            "weight map is for {}-cliques, expected {t}",
            w.t()
        )));
    }
    w.validate_for(g)?;
    if !verify_p3_ordering(g, ordering.order())? {
        return Err(Error::InvalidOrdering("cluster"));
    }

    let n = g.n();
    let order = ordering.order();
    let mut alive = vec![true; n];
    let mut overlay: HashMap<Clique, usize> = HashMap::new();
    let mut levels: Vec<LevelTrace> = Vec::new();

    for &v in order {
        if !has_alive_edge(g, &alive) {
            break;
        }
        let mut level = LevelTrace {
            vertex: v,
            components: Vec::new(),
            residual_updates: Vec::new(),
        };
        for comp in neighborhood_components(g, v, &alive) {
            assert!(
                g.is_clique_set(&comp),
                "ordering admitted a non-clique neighborhood component at vertex {v}"
            );
            if comp.len() < t - 1 {
                continue;
            }
            // Pick Z maximizing the residual demand of {v} ∪ Z; combinations
            // arrive in lexicographic order, so the first strict maximizer is
            // the lex-smallest one.
            let mut chosen: Option<(usize, Clique)> = None;
            for z in comp.iter().copied().combinations(t - 1) {
                let z = Clique::new(z);
                let demand = residual_weight(&overlay, w, &z.with_vertex(v));
                if chosen.as_ref().is_none_or(|(best, _)| demand > *best) {
                    chosen = Some((demand, z));
                }
            }
            let (demand, chosen_z) = chosen.expect("component has a (t-1)-subset");
            let starred = Clique::new(comp.clone()).with_vertex(v);

            // Reduce the demands inside Q by t_i.
            if demand > 0 {
                for k in comp.iter().copied().combinations(t) {
                    let k = Clique::new(k);
                    let cur = residual_weight(&overlay, w, &k);
                    let next = cur.saturating_sub(demand);
                    overlay.insert(k.clone(), next);
                    level.residual_updates.push((k, next));
                }
            }
            level.components.push(ComponentTrace {
                component: Clique::new(comp),
                starred,
                chosen: chosen_z,
                demand,
            });
        }
        levels.push(level);
        alive[v] = false;
    }

    // Assemble cover and packing bottom-up; at the time a level is handled,
    // `packing` holds exactly the deeper levels' selections.
    let mut cover = CoverSolution::new();
    let mut packing = PackingSolution::new();
    for level in levels.iter().rev() {
        for comp in &level.components {
            cover.add(comp.starred.clone(), comp.demand);
            if comp.demand == 0 {
                continue;
            }
            let blocked = comp
                .component
                .vertices()
                .iter()
                .copied()
                .combinations(t)
                .any(|k| packing.contains(&Clique::new(k)));
            if !blocked {
                packing.insert(comp.chosen.with_vertex(level.vertex));
            }
        }
    }

    let cost = cover.cost();
    let value = packing.value(w);
    let result = OptpairResult {
        cover,
        packing,
        cost,
        value,
        trace: levels,
    };
    debug_assert!(certify(&result, g, t, w).pass);
    Ok(result)
}

fn residual_weight(overlay: &HashMap<Clique, usize>, w: &WeightMap, k: &Clique) -> usize {
    overlay.get(k).copied().unwrap_or_else(|| w.get(k))
}

fn has_alive_edge(g: &Graph, alive: &[bool]) -> bool {
    g.vertices()
        .filter(|&u| alive[u])
        .any(|u| g.neighbors(u).any(|v| alive[v]))
}

/// Connected components of the subgraph induced by `N(v) ∩ alive`, as sorted
/// vertex lists ordered by smallest member.
fn neighborhood_components(g: &Graph, v: usize, alive: &[bool]) -> Vec<Vec<usize>> {
    let hood: Vec<usize> = g.neighbors(v).filter(|&u| alive[u]).collect();
    let in_hood = |u: usize| hood.binary_search(&u).is_ok();
    let mut seen: HashMap<usize, bool> = hood.iter().map(|&u| (u, false)).collect();
    let mut comps = Vec::new();
    for &start in &hood {
        if seen[&start] {
            continue;
        }
        let mut stack = vec![start];
        seen.insert(start, true);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for x in g.neighbors(u) {
                if alive[x] && in_hood(x) && !seen[&x] {
                    seen.insert(x, true);
                    stack.push(x);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Re-checks feasibility of both solutions, the support condition (a
/// selected t-clique must carry positive original weight), and the equality
/// of cost and value. Failures are described in the diagnostics.
pub fn certify(result: &OptpairResult, g: &Graph, t: usize, w: &WeightMap) -> Certification {
    let mut diagnostics = Vec::new();
    diagnostics.extend(cover_violations(g, t, w, &result.cover));
    diagnostics.extend(packing_violations(g, t, &result.packing));
    for k in result.packing.iter() {
        if w.get(k) == 0 {
            diagnostics.push(format!("selected {k:?} has zero weight"));
        }
    }
    if result.cover.cost() != result.cost {
        diagnostics.push(format!(
            "stated cost {} differs from cover cost {}",
            result.cost,
            result.cover.cost()
        ));
    }
    if result.packing.value(w) != result.value {
        diagnostics.push(format!(
            "stated value {} differs from packing value {}",
            result.value,
            result.packing.value(w)
        ));
    }
    if result.cost != result.value {
        diagnostics.push(format!(
            "cost {} does not equal value {}",
            result.cost, result.value
        ));
    }
    Certification {
        pass: diagnostics.is_empty(),
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{exact_cover_number, exact_packing_number, enumerate_t_cliques};
    use crate::elimination::{find_p3_elimination, EliminationFamily};
    use crate::graph::{complete_graph, cycle_graph, random_chordal, Graph};

    fn identity_ordering(g: &Graph) -> EliminationOrdering {
        EliminationOrdering::new(g.vertices().collect(), EliminationFamily::Cluster)
    }

    #[test]
    fn edgeless_graph_is_free() {
        let g = Graph::new(5);
        let r = optpair(&g, 2, &WeightMap::unit(2), &identity_ordering(&g)).unwrap();
        assert_eq!((r.cost, r.value), (0, 0));
        assert!(r.cover.is_empty() && r.packing.is_empty());
    }

    #[test]
    fn weighted_triangle_matches_hand_run() {
        // Edge weights 2, 3, 5 on a triangle, eliminating vertex 0 first:
        // the first level charges {0,1,2} three times and leaves demand 2 on
        // {1,2}, which the next level covers twice.
        let k3 = complete_graph(3);
        let mut w = WeightMap::new(2, 0);
        w.set(Clique::new(vec![0, 1]), 2);
        w.set(Clique::new(vec![0, 2]), 3);
        w.set(Clique::new(vec![1, 2]), 5);
        let r = optpair(&k3, 2, &w, &identity_ordering(&k3)).unwrap();
        assert_eq!((r.cost, r.value), (5, 5));
        assert_eq!(r.cover.multiplicity(&Clique::new(vec![0, 1, 2])), 3);
        assert_eq!(r.cover.multiplicity(&Clique::new(vec![1, 2])), 2);
        assert!(r.packing.contains(&Clique::new(vec![1, 2])));
        assert!(!r.packing.contains(&Clique::new(vec![0, 2])));
        let (opt, _) = exact_cover_number(&k3, 2, &w).unwrap();
        assert_eq!(r.cost, opt);
        // First level chose Z = {2} with demand 3 and wrote residual 2.
        assert_eq!(r.trace[0].vertex, 0);
        assert_eq!(r.trace[0].components[0].demand, 3);
        assert_eq!(
            r.trace[0].residual_updates,
            vec![(Clique::new(vec![1, 2]), 2)]
        );
    }

    #[test]
    fn k4_triangles_unweighted() {
        let k4 = complete_graph(4);
        let r = optpair(&k4, 3, &WeightMap::unit(3), &identity_ordering(&k4)).unwrap();
        assert_eq!((r.cost, r.value), (1, 1));
        assert_eq!(r.cover.multiplicity(&Clique::new(vec![0, 1, 2, 3])), 1);
        assert_eq!(r.packing.len(), 1);
        assert!(r.packing.contains(&Clique::new(vec![0, 1, 2])));
    }

    #[test]
    fn c4_edge_cover_costs_four() {
        let c4 = cycle_graph(4).unwrap();
        let ordering = find_p3_elimination(&c4).unwrap();
        let r = optpair(&c4, 2, &WeightMap::unit(2), &ordering).unwrap();
        assert_eq!((r.cost, r.value), (4, 4));
        let (opt, _) = exact_cover_number(&c4, 2, &WeightMap::unit(2)).unwrap();
        assert_eq!(r.cost, opt);
    }

    #[test]
    fn strong_duality_on_seeded_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for seed in 0..25 {
            let g = random_chordal(3 + (seed as usize % 7), 3, seed);
            let ordering = find_p3_elimination(&g).expect("chordal graphs qualify");
            for t in [2usize, 3] {
                let mut w = WeightMap::new(t, 0);
                for k in enumerate_t_cliques(&g, t) {
                    w.set(k, rng.gen_range(0..=5));
                }
                let r = optpair(&g, t, &w, &ordering).unwrap();
                let (cover_opt, _) = exact_cover_number(&g, t, &w).unwrap();
                let (packing_opt, _) = exact_packing_number(&g, t, &w).unwrap();
                assert_eq!(r.cost, r.value);
                assert_eq!(r.cost, cover_opt);
                assert_eq!(r.value, packing_opt);
                assert!(certify(&r, &g, t, &w).pass);
            }
        }
    }

    #[test]
    fn unweighted_cost_is_cover_number() {
        for seed in 0..10 {
            let g = random_chordal(8, 3, 100 + seed);
            let ordering = find_p3_elimination(&g).unwrap();
            for t in [2usize, 3] {
                let w = WeightMap::unit(t);
                let r = optpair(&g, t, &w, &ordering).unwrap();
                let (opt, _) = exact_cover_number(&g, t, &w).unwrap();
                assert_eq!(r.cost, opt, "t={t} seed={seed}");
            }
        }
    }

    #[test]
    fn optimum_is_order_robust() {
        let g = random_chordal(9, 3, 7);
        let o1 = find_p3_elimination(&g).unwrap();
        // A second valid ordering: reuse the simplicial one from chordality.
        let (ok, o2) = crate::elimination::is_chordal(&g);
        assert!(ok);
        let o2 = o2.unwrap();
        let w = WeightMap::unit(3);
        let r1 = optpair(&g, 3, &w, &o1).unwrap();
        let r2 = optpair(
            &g,
            3,
            &w,
            &EliminationOrdering::new(o2.order().to_vec(), EliminationFamily::Cluster),
        )
        .unwrap();
        assert_eq!(r1.cost, r2.cost);
    }

    #[test]
    fn rejects_bad_inputs() {
        let c4 = cycle_graph(4).unwrap();
        assert!(matches!(
            optpair(&c4, 1, &WeightMap::unit(1), &identity_ordering(&c4)),
            Err(Error::InvalidParameter(_))
        ));
        // Weight on a non-2-clique.
        let mut w = WeightMap::new(2, 0);
        w.set(Clique::new(vec![0, 2]), 1);
        assert!(matches!(
            optpair(&c4, 2, &w, &identity_ordering(&c4)),
            Err(Error::ForeignWeightKey(..))
        ));
        // An ordering that fails verification: any order on a 5-wheel.
        let mut w5 = Graph::new(6);
        for (u, v) in cycle_graph(5).unwrap().edges() {
            w5.add_edge(u, v);
        }
        for v in 0..5 {
            w5.add_edge(v, 5);
        }
        assert!(matches!(
            optpair(&w5, 2, &WeightMap::unit(2), &identity_ordering(&w5)),
            Err(Error::InvalidOrdering(_))
        ));
    }

    #[test]
    fn support_condition_holds() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
        for seed in 0..15 {
            let g = random_chordal(7, 2, 200 + seed);
            let ordering = find_p3_elimination(&g).unwrap();
            let mut w = WeightMap::new(2, 0);
            for k in enumerate_t_cliques(&g, 2) {
                w.set(k, rng.gen_range(0..=2));
            }
            let r = optpair(&g, 2, &w, &ordering).unwrap();
            for k in r.packing.iter() {
                assert!(w.get(k) > 0, "zero-weight selection {k:?}");
            }
        }
    }

    #[test]
    fn certify_catches_tampering() {
        let k4 = complete_graph(4);
        let w = WeightMap::unit(3);
        let r = optpair(&k4, 3, &w, &identity_ordering(&k4)).unwrap();
        assert!(certify(&r, &k4, 3, &w).pass);

        // Dropping a cover copy breaks feasibility or the cost equality.
        let mut broken = r.clone();
        broken.cover = CoverSolution::new();
        broken.cost = 0;
        let c = certify(&broken, &k4, 3, &w);
        assert!(!c.pass && !c.diagnostics.is_empty());

        // An extra packing selection inside a used clique violates packing
        // feasibility.
        let mut padded = r.clone();
        padded.packing.insert(Clique::new(vec![0, 1, 3]));
        padded.value = padded.packing.value(&w);
        assert!(!certify(&padded, &k4, 3, &w).pass);
    }
}
