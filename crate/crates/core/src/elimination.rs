//! Elimination-ordering recognition: simplicial orderings (chordal graphs),
//! cluster-neighborhood orderings (their superclass), cluster-graph checks,
//! and the 3-wheel sufficient condition.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::graph::Graph;
use crate::{Error, Result};

/// Which later-neighborhood condition an ordering certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationFamily {
    /// Later neighborhoods are cliques (chordal graphs).
    Simplicial,
    /// Later neighborhoods are cluster graphs, i.e. disjoint unions of
    /// cliques (the superclass of the chordal graphs).
    Cluster,
}

impl fmt::Display for EliminationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EliminationFamily::Simplicial => write!(f, "simplicial"),
            EliminationFamily::Cluster => write!(f, "cluster"),
        }
    }
}

/// A vertex ordering together with the family condition it certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    family: EliminationFamily,
}

impl EliminationOrdering {
    pub fn new(order: Vec<usize>, family: EliminationFamily) -> Self {
        EliminationOrdering { order, family }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn family(&self) -> EliminationFamily {
        self.family
    }
}

fn check_permutation(g: &Graph, order: &[usize]) -> Result<()> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation(format!(
            "length {} does not match vertex count {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation(format!("bad or repeated vertex {v}")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// True iff `g` is a disjoint union of complete graphs (equivalently, has no
/// induced path on three vertices).
pub fn is_cluster(g: &Graph) -> bool {
    g.connected_components()
        .iter()
        .all(|comp| comp.iter().all(|&v| g.degree(v) == comp.len() - 1))
}

/// Cluster test for the subgraph induced by `N(v) ∩ alive`: no member may
/// have two nonadjacent neighbors inside it (that would be an induced path
/// on three vertices centered there).
fn neighborhood_is_cluster(g: &Graph, v: usize, alive: &[bool]) -> bool {
    let hood: Vec<usize> = g.neighbors(v).filter(|&u| alive[u]).collect();
    for &y in &hood {
        let inner: Vec<usize> = g
            .neighbors(y)
            .filter(|&u| alive[u] && hood.binary_search(&u).is_ok())
            .collect();
        for (i, &x) in inner.iter().enumerate() {
            for &z in &inner[i + 1..] {
                if !g.has_edge(x, z) {
                    return false;
                }
            }
        }
    }
    true
}

fn alive_key(alive: &[bool]) -> u128 {
    alive
        .iter()
        .enumerate()
        .fold(0u128, |m, (v, &a)| if a { m | (1 << v) } else { m })
}

/// Finds an ordering whose later neighborhoods are all cluster graphs, or
/// `None` if no such ordering exists.
///
/// Strategy: greedily take the lowest-id vertex whose remaining neighborhood
/// is a cluster, with full backtracking over the alternatives. Whether the
/// greedy choice alone is always safe is unsettled, so backtracking stays;
/// failed residual vertex sets are memoized (for n ≤ 128) to tame the
/// exponential worst case at desk scale.
pub fn find_p3_elimination(g: &Graph) -> Option<EliminationOrdering> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut failed: HashSet<u128> = HashSet::new();
    if eliminate(g, &mut alive, n, &mut order, &mut failed) {
        let ordering = EliminationOrdering::new(order, EliminationFamily::Cluster);
        debug_assert_eq!(verify_p3_ordering(g, ordering.order()).ok(), Some(true));
        Some(ordering)
    } else {
        None
    }
}

fn eliminate(
    g: &Graph,
    alive: &mut [bool],
    left: usize,
    order: &mut Vec<usize>,
    failed: &mut HashSet<u128>,
) -> bool {
    if left == 0 {
        return true;
    }
    let use_memo = g.n() <= 128;
    let key = if use_memo { alive_key(alive) } else { 0 };
    if use_memo && failed.contains(&key) {
        return false;
    }
    for v in 0..g.n() {
        if !alive[v] || !neighborhood_is_cluster(g, v, alive) {
            continue;
        }
        alive[v] = false;
        order.push(v);
        if eliminate(g, alive, left - 1, order, failed) {
            return true;
        }
        order.pop();
        alive[v] = true;
    }
    if use_memo {
        failed.insert(key);
    }
    false
}

/// Checks the defining condition of a cluster elimination ordering literally;
/// rejects sequences that are not permutations of the vertex set.
pub fn verify_p3_ordering(g: &Graph, order: &[usize]) -> Result<bool> {
    check_permutation(g, order)?;
    let mut later = vec![true; g.n()];
    for &v in order {
        later[v] = false;
        if !neighborhood_is_cluster(g, v, &later) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive reference oracle: does any of the n! orderings satisfy the
/// cluster elimination condition? Early-exits on the first witness; intended
/// only for tiny graphs when cross-checking the search above.
pub fn brute_force_semichordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    (0..n)
        .permutations(n)
        .any(|order| verify_p3_ordering(g, &order).unwrap())
}

/// Chordality test by maximum cardinality search plus verification. Returns
/// the simplicial elimination ordering on success, making the answer
/// self-certifying.
pub fn is_chordal(g: &Graph) -> (bool, Option<EliminationOrdering>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .expect("unvisited vertex remains");
        visited[v] = true;
        visit_order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    visit_order.reverse();
    let order = visit_order;

    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later_hood: Vec<usize> = g.neighbors(v).filter(|&u| position[u] > i).collect();
        if !g.is_clique_set(&later_hood) {
            return (false, None);
        }
    }
    (
        true,
        Some(EliminationOrdering::new(order, EliminationFamily::Simplicial)),
    )
}

/// Vertex limit for the naive 3-wheel search.
pub const MAX_WHEEL_VERTICES: usize = 12;

/// Naive search for an induced 3-wheel: a vertex `c` and an induced cycle in
/// `G − c` such that `c` is adjacent to three consecutive rim vertices.
///
/// Rims of length 3 are included: whether a triangle rim qualifies is a
/// judgment call, and including it only narrows the wheel-free class, which
/// is the safe direction for the sufficiency condition this check feeds.
pub fn contains_induced_3wheel(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_WHEEL_VERTICES {
        return Err(Error::SizeGuard {
            what: "contains_induced_3wheel",
            limit: MAX_WHEEL_VERTICES,
            actual: n,
        });
    }
    for center in 0..n {
        if g.degree(center) < 3 {
            continue;
        }
        let others: Vec<usize> = (0..n).filter(|&v| v != center).collect();
        let m = others.len();
        for mask in 0u32..(1u32 << m) {
            if (mask.count_ones() as usize) < 3 {
                continue;
            }
            let rim: Vec<usize> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| others[i])
                .collect();
            if let Some(cycle) = induced_cycle_order(g, &rim) {
                let len = cycle.len();
                for s in 0..len {
                    let trio = [cycle[s], cycle[(s + 1) % len], cycle[(s + 2) % len]];
                    if trio.iter().all(|&x| g.has_edge(center, x)) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// If the set induces a cycle (2-regular and connected), returns its vertices
/// in rim order.
fn induced_cycle_order(g: &Graph, rim: &[usize]) -> Option<Vec<usize>> {
    let in_rim = |u: usize| rim.binary_search(&u).is_ok();
    let mut rim_neighbors: Vec<[usize; 2]> = Vec::with_capacity(rim.len());
    for &v in rim {
        let nb: Vec<usize> = g.neighbors(v).filter(|&u| in_rim(u)).collect();
        if nb.len() != 2 {
            return None;
        }
        rim_neighbors.push([nb[0], nb[1]]);
    }
    let index_of = |u: usize| rim.binary_search(&u).unwrap();
    let mut cycle = vec![rim[0]];
    let mut prev = rim[0];
    let mut cur = rim_neighbors[0][0];
    while cur != rim[0] {
        cycle.push(cur);
        let nb = rim_neighbors[index_of(cur)];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    // The walk closes; it visits the whole rim iff the rim is connected.
    if cycle.len() == rim.len() {
        Some(cycle)
    } else {
        None
    }
}
