//! Graph and hypergraph generators, plus labeled-graph enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Hypergraph3};
use crate::{Error, Result};

/// Part index of each vertex of the Turán graph `T(n, k)`: contiguous blocks,
/// larger parts first.
fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    let base = n / k;
    let big = n % k; // the first `big` parts have size base + 1
    let mut parts = Vec::with_capacity(n);
    for part in 0..k {
        let size = if part < big { base + 1 } else { base };
        parts.extend(std::iter::repeat_n(part, size));
    }
    parts
}

/// Turán graph `T(n, k)`: complete k-partite, part sizes differing by at most
/// one. Parts are contiguous id blocks with the larger parts on lower ids.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "turan_graph requires n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    let parts = turan_parts(n, k);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if parts[u] != parts[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Cycle `0–1–…–(n−1)–0`; requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle_graph requires n >= 3, got {n}"
        )));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// The 3-uniform Turán-style hypergraph on `n >= 3` vertices.
///
/// The vertex set splits into three contiguous parts `V1, V2, V3` of sizes
/// `⌊n/3⌋, ⌊(n+1)/3⌋, ⌊(n+2)/3⌋`. Hyperedges are all transversal triples
/// (one vertex per part) together with all `{u, v, w}` where `u, v` lie in
/// the same part and `w` lies in the cyclically next part.
pub fn turan_hypergraph(n: usize) -> Result<Hypergraph3> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "turan_hypergraph requires n >= 3, got {n}"
        )));
    }
    let sizes = [n, n + 1, n + 2].map(|x| x / 3);
    let mut parts: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut next_id = 0;
    for (i, &s) in sizes.iter().enumerate() {
        parts[i] = (next_id..next_id + s).collect();
        next_id += s;
    }
    debug_assert_eq!(next_id, n);

    let mut h = Hypergraph3::new(n);
    for &u in &parts[0] {
        for &v in &parts[1] {
            for &w in &parts[2] {
                h.add_hyperedge(u, v, w);
            }
        }
    }
    for i in 0..3 {
        let succ = &parts[(i + 1) % 3];
        for (a_idx, &u) in parts[i].iter().enumerate() {
            for &v in &parts[i][a_idx + 1..] {
                for &w in succ {
                    h.add_hyperedge(u, v, w);
                }
            }
        }
    }
    Ok(h)
}

/// Random chordal graph built by simplicial vertex addition: each new vertex
/// attaches to a random subset (of size at most `width`) of a previously
/// created clique, so the reverse insertion order is a simplicial elimination
/// ordering by construction.
pub fn random_chordal(n: usize, width: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    if n == 0 {
        return g;
    }
    // Cliques known so far; new attachments extend them.
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    for v in 1..n {
        let host = &cliques[rng.gen_range(0..cliques.len())];
        let take = rng.gen_range(0..=width.min(host.len()));
        let mut pool = host.clone();
        let mut attach = Vec::with_capacity(take);
        for _ in 0..take {
            let idx = rng.gen_range(0..pool.len());
            attach.push(pool.swap_remove(idx));
        }
        for &u in &attach {
            g.add_edge(u, v);
        }
        attach.push(v);
        attach.sort_unstable();
        cliques.push(attach);
    }
    g
}

/// Erdős–Rényi `G(n, p)`; rejects probabilities outside `[0, 1]`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Largest `n` for which labeled-graph enumeration by edge bitmask works.
pub const MAX_LABELED_VERTICES: usize = 11;

/// The graph on `n` vertices whose edge set is selected by `mask`, with bits
/// assigned to vertex pairs in lexicographic order.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    assert!(n <= MAX_LABELED_VERTICES, "labeled enumeration limited to n <= {MAX_LABELED_VERTICES}");
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1u64 << bit) != 0 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// All `2^C(n,2)` labeled graphs on `n` vertices, in mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= MAX_LABELED_VERTICES, "labeled enumeration limited to n <= {MAX_LABELED_VERTICES}");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..(1u64 << pairs)).map(move |mask| labeled_graph_from_mask(n, mask))
}

/// A seeded sample of `count` labeled graphs on `n` vertices.
pub fn sample_labeled_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    assert!(n <= MAX_LABELED_VERTICES, "labeled enumeration limited to n <= {MAX_LABELED_VERTICES}");
    let pairs = n * n.saturating_sub(1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mask = if pairs == 0 { 0 } else { rng.gen_range(0..(1u64 << pairs)) };
            labeled_graph_from_mask(n, mask)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_4_2_is_k22() {
        let g = turan_graph(4, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        // parts {0,1} and {2,3}
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3) && g.has_edge(1, 2) && g.has_edge(1, 3));
    }

    #[test]
    fn turan_7_3_has_16_edges() {
        // C(7,2) − (C(3,2) + C(2,2) + C(2,2)) = 21 − 5 = 16 non-edges within parts.
        let g = turan_graph(7, 3).unwrap();
        assert_eq!(g.edge_count(), 16);
    }

    #[test]
    fn turan_one_part_is_edgeless() {
        for n in 1..8 {
            assert!(turan_graph(n, 1).unwrap().is_edgeless());
        }
    }

    #[test]
    fn turan_part_sizes_balanced() {
        for n in 1..=20 {
            for k in 1..=20 {
                let parts = turan_parts(n, k);
                assert_eq!(parts.len(), n);
                let mut sizes = vec![0usize; k];
                for &p in &parts {
                    sizes[p] += 1;
                }
                let max = sizes.iter().max().unwrap();
                let min = sizes.iter().min().unwrap();
                assert!(max - min <= 1, "unbalanced parts for n={n}, k={k}");
                assert_eq!(sizes.iter().sum::<usize>(), n);
            }
        }
    }

    #[test]
    fn turan_rejects_zero() {
        assert!(turan_graph(0, 2).is_err());
        assert!(turan_graph(4, 0).is_err());
    }

    #[test]
    fn cycle_3_is_triangle() {
        let g = cycle_graph(3).unwrap();
        assert_eq!(g.edges(), complete_graph(3).edges());
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(0).n(), 0);
        assert_eq!(complete_graph(4).edge_count(), 6);
    }

    #[test]
    fn turan_hypergraph_counts() {
        assert_eq!(turan_hypergraph(3).unwrap().hyperedge_count(), 1);
        assert_eq!(turan_hypergraph(6).unwrap().hyperedge_count(), 14);
        // m(5m^2 + 2m − 1)/2 with m = 2.
        assert_eq!(turan_hypergraph(7).unwrap().hyperedge_count(), 23);
        assert!(turan_hypergraph(2).is_err());
    }

    #[test]
    fn gnp_extremes() {
        assert!(random_gnp(6, 0.0, 1).unwrap().is_edgeless());
        assert_eq!(random_gnp(6, 1.0, 1).unwrap().edge_count(), 15);
        assert!(random_gnp(6, 1.5, 1).is_err());
        assert!(random_gnp(6, f64::NAN, 1).is_err());
    }

    #[test]
    fn gnp_deterministic_for_seed() {
        let a = random_gnp(10, 0.4, 99).unwrap();
        let b = random_gnp(10, 0.4, 99).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn labeled_enumeration_count() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        let masks: Vec<_> = all_labeled_graphs(2).collect();
        assert_eq!(masks.len(), 2);
        assert!(masks[0].is_edgeless());
        assert_eq!(masks[1].edge_count(), 1);
    }
}
