//! Isomorphism testing for small graphs by pruned permutation search.

use super::Graph;
use crate::{Error, Result};

/// Hard vertex limit for [`isomorphic_small`].
pub const MAX_ISO_VERTICES: usize = 10;

/// Whether an adjacency-preserving bijection between the two graphs exists.
/// Both graphs must have at most [`MAX_ISO_VERTICES`] vertices.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.n();
    for g in [a, b] {
        if g.n() > MAX_ISO_VERTICES {
            return Err(Error::SizeGuard {
                what: "isomorphic_small",
                limit: MAX_ISO_VERTICES,
                actual: g.n(),
            });
        }
    }
    if b.n() != n || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &deg_a, &deg_b, &mut mapping, &mut used, 0))
}

fn extend(
    a: &Graph,
    b: &Graph,
    deg_a: &[usize],
    deg_b: &[usize],
    mapping: &mut [usize],
    used: &mut [bool],
    next: usize,
) -> bool {
    let n = a.n();
    if next == n {
        return true;
    }
    'candidates: for img in 0..n {
        if used[img] || deg_b[img] != deg_a[next] {
            continue;
        }
        for (prev, &img_prev) in mapping.iter().enumerate().take(next) {
            if a.has_edge(next, prev) != b.has_edge(img, img_prev) {
                continue 'candidates;
            }
        }
        mapping[next] = img;
        used[img] = true;
        if extend(a, b, deg_a, deg_b, mapping, used, next + 1) {
            return true;
        }
        mapping[next] = usize::MAX;
        used[img] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, turan_graph, Graph};

    #[test]
    fn c4_is_k22() {
        let c4 = cycle_graph(4).unwrap();
        let t42 = turan_graph(4, 2).unwrap();
        assert!(isomorphic_small(&c4, &t42).unwrap());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let c5 = cycle_graph(5).unwrap();
        let k5 = complete_graph(5);
        assert!(!isomorphic_small(&c5, &k5).unwrap());
        // K5 minus one edge is not 2-regular either.
        let mut k5m = complete_graph(5);
        k5m = {
            let edges: Vec<_> = k5m.edges().into_iter().filter(|&e| e != (0, 1)).collect();
            Graph::from_edges(5, &edges)
        };
        assert!(!isomorphic_small(&c5, &k5m).unwrap());
    }

    #[test]
    fn hand_built_tripartite_matches_turan() {
        let t63 = turan_graph(6, 3).unwrap();
        // Complete tripartite 2+2+2 with a different labeling.
        let parts = [[0, 3], [1, 4], [2, 5]];
        let mut g = Graph::new(6);
        for i in 0..3 {
            for j in i + 1..3 {
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        assert!(isomorphic_small(&t63, &g).unwrap());
    }

    #[test]
    fn size_guard_enforced() {
        let g = complete_graph(11);
        assert!(matches!(
            isomorphic_small(&g, &g),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn relabeled_random_graphs_match() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for seed in 0..30 {
            let g = crate::graph::random_gnp(8, 0.5, seed).unwrap();
            let mut perm: Vec<usize> = (0..8).collect();
            perm.shuffle(&mut rng);
            let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::from_edges(8, &edges);
            assert!(isomorphic_small(&g, &h).unwrap());
        }
    }
}
