//! Exact cover and packing oracles for small instances, via branch and bound
//! over maximal-clique multiplicities, plus the exhaustive extremal-graph
//! verifier built on top of them.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{
    enumerate_maximal_cliques, enumerate_t_cliques, Clique, CoverSolution, PackingSolution,
    WeightMap,
};
use crate::graph::{
    all_labeled_graphs, isomorphic_small, sample_labeled_graphs, turan_graph, Graph,
};
use crate::{Error, Result};

/// Vertex limit for the exact oracles. Intended scale is n ≤ 14 for t ≤ 3;
/// the two extra vertices of headroom accommodate small augmented instances.
pub const MAX_EXACT_VERTICES: usize = 16;

const MEMO_CAP: usize = 1 << 20;

/// Shared precomputation: the t-cliques, their demands, the maximal cliques
/// (the only covers worth considering: enlarging any member to a maximal
/// superset preserves feasibility at equal cost), containment lists, and the
/// pairwise union-is-clique relation used by packings.
struct Instance {
    tcliques: Vec<Clique>,
    demand: Vec<u32>,
    containers: Vec<Vec<u32>>,
    conflicts: Vec<Vec<u64>>,
    chunks: usize,
    cliques: Vec<Clique>,
    coverage: Vec<Vec<u32>>,
}

fn vertex_mask(c: &Clique) -> u64 {
    c.vertices().iter().fold(0u64, |m, &v| m | (1 << v))
}

impl Instance {
    fn build(g: &Graph, t: usize, w: &WeightMap) -> Instance {
        let tcliques = enumerate_t_cliques(g, t);
        let demand: Vec<u32> = tcliques
            .iter()
            .map(|k| u32::try_from(w.get(k)).expect("weight exceeds u32 range"))
            .collect();
        let cliques = enumerate_maximal_cliques(g);

        let tmasks: Vec<u64> = tcliques.iter().map(vertex_mask).collect();
        let cmasks: Vec<u64> = cliques.iter().map(vertex_mask).collect();

        let mut coverage = vec![Vec::new(); cliques.len()];
        let mut containers = vec![Vec::new(); tcliques.len()];
        for (j, &cm) in cmasks.iter().enumerate() {
            for (i, &tm) in tmasks.iter().enumerate() {
                if tm & cm == tm {
                    coverage[j].push(i as u32);
                    containers[i].push(j as u32);
                }
            }
        }

        let mut adj = vec![0u64; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let is_clique_mask = |mask: u64| -> bool {
            let mut scan = mask;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if mask & !adj[v] & !(1 << v) != 0 {
                    return false;
                }
            }
            true
        };

        let chunks = tcliques.len().div_ceil(64).max(1);
        let mut conflicts = vec![vec![0u64; chunks]; tcliques.len()];
        for i in 0..tcliques.len() {
            for j in i..tcliques.len() {
                if is_clique_mask(tmasks[i] | tmasks[j]) {
                    conflicts[i][j / 64] |= 1 << (j % 64);
                    conflicts[j][i / 64] |= 1 << (i % 64);
                }
            }
        }

        Instance {
            tcliques,
            demand,
            containers,
            conflicts,
            chunks,
            cliques,
            coverage,
        }
    }

    fn compatible(&self, i: usize, selected: &[u64]) -> bool {
        self.conflicts[i]
            .iter()
            .zip(selected)
            .all(|(&c, &s)| c & s == 0)
    }

    /// Greedy packing of the residual demands: any feasible packing value is
    /// a lower bound on the remaining cover cost.
    fn packing_lower_bound(&self, residual: &[u32]) -> usize {
        let mut order: Vec<usize> = (0..residual.len()).filter(|&i| residual[i] > 0).collect();
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let mut selected = vec![0u64; self.chunks];
        let mut bound = 0usize;
        for i in order {
            if self.compatible(i, &selected) {
                selected[i / 64] |= 1 << (i % 64);
                bound += residual[i] as usize;
            }
        }
        bound
    }
}

struct CoverSearch<'a> {
    inst: &'a Instance,
    best_cost: usize,
    best_mults: Vec<u32>,
    memo: HashMap<Box<[u32]>, usize>,
}

impl CoverSearch<'_> {
    fn search(&mut self, mut residual: Vec<u32>, mut mults: Vec<u32>, mut cost: usize) {
        // Unit propagation: a positive demand with a single containing clique
        // forces that clique up to the demanded multiplicity.
        loop {
            let mut changed = false;
            for i in 0..residual.len() {
                if residual[i] > 0 && self.inst.containers[i].len() == 1 {
                    let j = self.inst.containers[i][0] as usize;
                    let add = residual[i];
                    mults[j] += add;
                    cost += add as usize;
                    for &k in &self.inst.coverage[j] {
                        residual[k as usize] = residual[k as usize].saturating_sub(add);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        if cost >= self.best_cost {
            return;
        }
        if residual.iter().all(|&r| r == 0) {
            self.best_cost = cost;
            self.best_mults = mults;
            return;
        }
        if cost + self.inst.packing_lower_bound(&residual) >= self.best_cost {
            return;
        }
        // Transposition pruning on the residual vector.
        let memo_open = self.memo.len() < MEMO_CAP;
        match self.memo.entry(residual.clone().into_boxed_slice()) {
            Entry::Occupied(mut e) => {
                if *e.get() <= cost {
                    return;
                }
                e.insert(cost);
            }
            Entry::Vacant(e) => {
                if memo_open {
                    e.insert(cost);
                }
            }
        }

        // Branch on the most constrained uncovered t-clique.
        let pick = (0..residual.len())
            .filter(|&i| residual[i] > 0)
            .min_by_key(|&i| (self.inst.containers[i].len(), i))
            .expect("positive residual exists");
        debug_assert!(!self.inst.containers[pick].is_empty());

        let mut options: Vec<u32> = self.inst.containers[pick].clone();
        let useful = |j: u32| {
            self.inst.coverage[j as usize]
                .iter()
                .filter(|&&k| residual[k as usize] > 0)
                .count()
        };
        options.sort_by(|&a, &b| useful(b).cmp(&useful(a)).then(a.cmp(&b)));

        for j in options {
            let mut next_residual = residual.clone();
            let mut next_mults = mults.clone();
            for &k in &self.inst.coverage[j as usize] {
                next_residual[k as usize] = next_residual[k as usize].saturating_sub(1);
            }
            next_mults[j as usize] += 1;
            self.search(next_residual, next_mults, cost + 1);
        }
    }
}

fn greedy_cover(inst: &Instance) -> (usize, Vec<u32>) {
    let mut residual = inst.demand.clone();
    let mut mults = vec![0u32; inst.cliques.len()];
    let mut cost = 0usize;
    loop {
        if residual.iter().all(|&r| r == 0) {
            return (cost, mults);
        }
        let covered = |j: usize| {
            inst.coverage[j]
                .iter()
                .filter(|&&k| residual[k as usize] > 0)
                .count()
        };
        let j = (0..inst.cliques.len())
            .max_by_key(|&j| (covered(j), usize::MAX - j))
            .expect("a positive demand always has a containing maximal clique");
        debug_assert!(covered(j) > 0);
        mults[j] += 1;
        cost += 1;
        for &k in &inst.coverage[j] {
            residual[k as usize] = residual[k as usize].saturating_sub(1);
        }
    }
}

fn guard_size(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeGuard {
            what,
            limit,
            actual: g.n(),
        });
    }
    Ok(())
}

// The instance precomputation stores vertex sets in machine words, so even
// lifted limits cannot exceed the bitset width.
fn guard_bitset(g: &Graph) -> Result<()> {
    guard_size(g, "exact oracle bitsets", super::MAX_BITSET_VERTICES)
}

/// Minimum cost of a feasible weighted cover together with one witness.
///
/// Searches multiplicities of maximal cliques only; see [`Instance`] for the
/// dominance argument. Weight-map keys that are not t-cliques of `g` are
/// outside the problem domain and ignored.
pub fn exact_cover_number(g: &Graph, t: usize, w: &WeightMap) -> Result<(usize, CoverSolution)> {
    exact_cover_number_with_limit(g, t, w, MAX_EXACT_VERTICES)
}

/// [`exact_cover_number`] with an explicit vertex guard, for callers that
/// accept unbounded running times.
pub fn exact_cover_number_with_limit(
    g: &Graph,
    t: usize,
    w: &WeightMap,
    limit: usize,
) -> Result<(usize, CoverSolution)> {
    guard_size(g, "exact_cover_number", limit)?;
    guard_bitset(g)?;
    assert!(t >= 1, "cover demands are defined for t >= 1");
    let inst = Instance::build(g, t, w);
    if inst.demand.iter().all(|&d| d == 0) {
        return Ok((0, CoverSolution::new()));
    }
    let (greedy_cost, greedy_mults) = greedy_cover(&inst);
    let mut search = CoverSearch {
        inst: &inst,
        best_cost: greedy_cost,
        best_mults: greedy_mults,
        memo: HashMap::new(),
    };
    search.search(inst.demand.clone(), vec![0u32; inst.cliques.len()], 0);

    let mut solution = CoverSolution::new();
    for (j, &m) in search.best_mults.iter().enumerate() {
        if m > 0 {
            solution.add(inst.cliques[j].clone(), m as usize);
        }
    }
    debug_assert!(super::is_cover_feasible(g, t, w, &solution));
    debug_assert_eq!(solution.cost(), search.best_cost);
    Ok((search.best_cost, solution))
}

struct PackSearch<'a> {
    inst: &'a Instance,
    order: Vec<usize>,
    best_value: usize,
    best_selection: Vec<usize>,
    have_solution: bool,
}

impl PackSearch<'_> {
    fn search(&mut self, pos: usize, value: usize, selected: &mut Vec<u64>, chosen: &mut Vec<usize>) {
        let mut upper = value;
        for &i in &self.order[pos..] {
            if self.inst.compatible(i, selected) {
                upper += self.inst.demand[i] as usize;
            }
        }
        if self.have_solution && upper <= self.best_value {
            return;
        }
        if pos == self.order.len() {
            self.best_value = value;
            self.best_selection = chosen.clone();
            self.have_solution = true;
            return;
        }
        let i = self.order[pos];
        if self.inst.compatible(i, selected) {
            selected[i / 64] |= 1 << (i % 64);
            chosen.push(i);
            self.search(pos + 1, value + self.inst.demand[i] as usize, selected, chosen);
            chosen.pop();
            selected[i / 64] &= !(1 << (i % 64));
        }
        self.search(pos + 1, value, selected, chosen);
    }
}

/// Maximum value of a feasible weighted packing together with one witness.
/// The `K = k` constraint already forces indicators to be binary, so this is
/// a pruned subset search over the positive-weight t-cliques.
pub fn exact_packing_number(g: &Graph, t: usize, w: &WeightMap) -> Result<(usize, PackingSolution)> {
    exact_packing_number_with_limit(g, t, w, MAX_EXACT_VERTICES)
}

/// [`exact_packing_number`] with an explicit vertex guard.
pub fn exact_packing_number_with_limit(
    g: &Graph,
    t: usize,
    w: &WeightMap,
    limit: usize,
) -> Result<(usize, PackingSolution)> {
    guard_size(g, "exact_packing_number", limit)?;
    guard_bitset(g)?;
    assert!(t >= 1, "packings are defined for t >= 1");
    let inst = Instance::build(g, t, w);
    let mut order: Vec<usize> = (0..inst.demand.len()).filter(|&i| inst.demand[i] > 0).collect();
    order.sort_by(|&a, &b| inst.demand[b].cmp(&inst.demand[a]).then(a.cmp(&b)));
    let mut search = PackSearch {
        inst: &inst,
        order,
        best_value: 0,
        best_selection: Vec::new(),
        have_solution: true, // the empty packing is always feasible
    };
    let mut selected = vec![0u64; inst.chunks];
    let mut chosen = Vec::new();
    search.search(0, 0, &mut selected, &mut chosen);

    let solution = PackingSolution::from_cliques(
        search
            .best_selection
            .iter()
            .map(|&i| inst.tcliques[i].clone()),
    );
    debug_assert!(super::is_packing_feasible(g, t, &solution));
    debug_assert_eq!(solution.value(w), search.best_value);
    Ok((search.best_value, solution))
}

/// Vertex limit for [`verify_conjecture`]: exhaustive labeled enumeration up
/// to 6 vertices; 7 vertices are handled by a fixed-seed sample.
pub const MAX_CONJECTURE_VERTICES: usize = 7;

const CONJECTURE_SAMPLE: usize = 2000;
const CONJECTURE_SEED: u64 = 0x5eed;

/// Searches n-vertex graphs for violations of the extremal claim that the
/// unweighted t-cover number is at most that of the Turán graph `T(n, t)`,
/// with equality only on graphs isomorphic to `T(n, t)`. Returns all
/// counterexamples found (an empty list on success).
///
/// For `n < t` no graph has a t-clique, every cover number is 0, and the
/// uniqueness claim is vacuous; the equality check therefore only applies
/// when `n >= t`.
pub fn verify_conjecture(n: usize, t: usize) -> Result<Vec<Graph>> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "verify_conjecture requires n >= 1 and t >= 1, got n={n}, t={t}"
        )));
    }
    if n > MAX_CONJECTURE_VERTICES {
        return Err(Error::SizeGuard {
            what: "verify_conjecture",
            limit: MAX_CONJECTURE_VERTICES,
            actual: n,
        });
    }
    let unit = WeightMap::unit(t);
    let extremal = turan_graph(n, t)?;
    let bound = exact_cover_number(&extremal, t, &unit)?.0;

    let graphs: Vec<Graph> = if n <= 6 {
        all_labeled_graphs(n).collect()
    } else {
        sample_labeled_graphs(n, CONJECTURE_SAMPLE, CONJECTURE_SEED)
    };

    let mut counterexamples = Vec::new();
    for g in graphs {
        let theta = exact_cover_number(&g, t, &unit)?.0;
        if theta > bound || (n >= t && theta == bound && !isomorphic_small(&g, &extremal)?) {
            counterexamples.push(g);
        }
    }
    Ok(counterexamples)
}
