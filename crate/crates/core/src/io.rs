//! Text formats: edge lists (`p <n> <m>` header), 3-uniform hypergraphs
//! (`h3 <n> <m>` header), weight files (`w <t> <default>` header), vertex
//! orderings, and JSON wire forms of cover/packing solutions.

use serde::{Deserialize, Serialize};

use crate::cliques::{Clique, CoverSolution, PackingSolution, WeightMap};
use crate::graph::{Graph, Hypergraph3};
use crate::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields(line: &str, expected: usize, what: &str) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    if fields.len() != expected {
        return Err(Error::Parse(format!(
            "{what}: expected {expected} fields, got {} in {line:?}"
        , fields.len())));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::Parse(format!("{what}: bad integer {f:?} in {line:?}")))
        })
        .collect()
}

/// Parses the edge-list format: a `p <n> <m>` header followed by `m` lines
/// `<u> <v>` with 0-based ids. Blank lines and lines starting with `#` are
/// ignored. Duplicate edges, self-loops, out-of-range ids, and edge-count
/// mismatches are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph input".into()))?;
    let fields: Vec<&str> = header.split_ascii_whitespace().collect();
    if fields.len() != 3 || fields[0] != "p" {
        return Err(Error::Parse(format!("expected header 'p <n> <m>', got {header:?}")));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {:?}", fields[1])))?;
    let m: usize = fields[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad edge count {:?}", fields[2])))?;

    let mut g = Graph::new(n);
    let mut seen = 0usize;
    for line in lines {
        let uv = parse_fields(line, 2, "edge line")?;
        let (u, v) = (uv[0], uv[1]);
        if u == v {
            return Err(Error::Parse(format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::Parse(format!("edge ({u},{v}) out of range for n={n}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse(format!("duplicate edge ({u},{v})")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse(format!("header promised {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the hypergraph format: `h3 <n> <m>` then `m` lines `<u> <v> <w>`.
pub fn parse_hypergraph3(text: &str) -> Result<Hypergraph3> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty hypergraph input".into()))?;
    let fields: Vec<&str> = header.split_ascii_whitespace().collect();
    if fields.len() != 3 || fields[0] != "h3" {
        return Err(Error::Parse(format!("expected header 'h3 <n> <m>', got {header:?}")));
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {:?}", fields[1])))?;
    let m: usize = fields[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad hyperedge count {:?}", fields[2])))?;

    let mut h = Hypergraph3::new(n);
    let mut seen = 0usize;
    for line in lines {
        let t = parse_fields(line, 3, "hyperedge line")?;
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::Parse(format!("degenerate hyperedge {line:?}")));
        }
        if t.iter().any(|&v| v >= n) {
            return Err(Error::Parse(format!("hyperedge {line:?} out of range for n={n}")));
        }
        h.add_hyperedge(t[0], t[1], t[2]);
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse(format!("header promised {m} hyperedges, found {seen}")));
    }
    Ok(h)
}

pub fn write_hypergraph3(h: &Hypergraph3) -> String {
    let mut out = format!("h3 {} {}\n", h.n(), h.hyperedge_count());
    for e in h.hyperedges() {
        out.push_str(&format!("{} {} {}\n", e[0], e[1], e[2]));
    }
    out
}

/// Parses a weight file: header `w <t> <default>`, then lines
/// `<v1> … <vt> <weight>` with sorted ids.
pub fn parse_weights(text: &str) -> Result<WeightMap> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty weight input".into()))?;
    let fields: Vec<&str> = header.split_ascii_whitespace().collect();
    if fields.len() != 3 || fields[0] != "w" {
        return Err(Error::Parse(format!(
            "expected header 'w <t> <default>', got {header:?}"
        )));
    }
    let t: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad clique size {:?}", fields[1])))?;
    if t == 0 {
        return Err(Error::Parse("clique size t must be positive".into()));
    }
    let default: usize = fields[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad default weight {:?}", fields[2])))?;

    let mut w = WeightMap::new(t, default);
    for line in lines {
        let vals = parse_fields(line, t + 1, "weight line")?;
        let (vertices, weight) = vals.split_at(t);
        let clique = checked_clique(vertices.to_vec())?;
        w.set(clique, weight[0]);
    }
    Ok(w)
}

pub fn write_weights(w: &WeightMap) -> String {
    let mut out = format!("w {} {}\n", w.t(), w.default_weight());
    for (k, weight) in w.entries() {
        for v in k.vertices() {
            out.push_str(&format!("{v} "));
        }
        out.push_str(&format!("{weight}\n"));
    }
    out
}

/// Parses a whitespace-separated vertex id list (an ordering certificate).
pub fn parse_ordering(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex id {f:?} in ordering")))
        })
        .collect()
}

pub fn write_ordering(order: &[usize]) -> String {
    order
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn checked_clique(vertices: Vec<usize>) -> Result<Clique> {
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::Parse(format!("duplicate vertex {} in clique", pair[0])));
        }
    }
    Ok(Clique::new(vertices))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CliqueEntry {
    pub vertices: Vec<usize>,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverJson {
    pub cost: usize,
    pub cliques: Vec<CliqueEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PackingJson {
    pub value: usize,
    pub cliques: Vec<CliqueEntry>,
}

pub fn cover_to_json(f: &CoverSolution) -> CoverJson {
    CoverJson {
        cost: f.cost(),
        cliques: f
            .iter()
            .map(|(q, mult)| CliqueEntry {
                vertices: q.vertices().to_vec(),
                mult,
            })
            .collect(),
    }
}

pub fn cover_from_json(json: &CoverJson) -> Result<CoverSolution> {
    let mut f = CoverSolution::new();
    for entry in &json.cliques {
        if entry.mult == 0 {
            return Err(Error::Parse("cover multiplicities must be positive".into()));
        }
        f.add(checked_clique(entry.vertices.clone())?, entry.mult);
    }
    if f.cost() != json.cost {
        return Err(Error::Parse(format!(
            "stated cost {} does not match multiplicities summing to {}",
            json.cost,
            f.cost()
        )));
    }
    Ok(f)
}

/// Serializes a packing; the value is instance-dependent (it needs the
/// weight map), so the caller provides it.
pub fn packing_to_json(y: &PackingSolution, value: usize) -> PackingJson {
    PackingJson {
        value,
        cliques: y
            .iter()
            .map(|q| CliqueEntry {
                vertices: q.vertices().to_vec(),
                mult: 1,
            })
            .collect(),
    }
}

pub fn packing_from_json(json: &PackingJson) -> Result<PackingSolution> {
    let mut y = PackingSolution::new();
    for entry in &json.cliques {
        if entry.mult != 1 {
            return Err(Error::Parse("packing indicators must be 1".into()));
        }
        y.insert(checked_clique(entry.vertices.clone())?);
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_gnp, turan_hypergraph};

    #[test]
    fn graph_round_trip() {
        let g = random_gnp(9, 0.4, 4).unwrap();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn graph_parser_ignores_comments_and_blanks() {
        let g = parse_graph("# a comment\n\np 3 2\n0 1\n\n# another\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn graph_parser_rejects_malformed() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("q 3 0\n").is_err());
        assert!(parse_graph("p 3 1\n0 0\n").is_err());
        assert!(parse_graph("p 3 1\n0 7\n").is_err());
        assert!(parse_graph("p 3 2\n0 1\n").is_err());
        assert!(parse_graph("p 3 2\n0 1\n0 1\n").is_err());
        assert!(parse_graph("p 3 1\n0 1 2\n").is_err());
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = turan_hypergraph(7).unwrap();
        let text = write_hypergraph3(&h);
        assert_eq!(parse_hypergraph3(&text).unwrap(), h);
        assert!(parse_hypergraph3("h3 4 1\n0 0 1\n").is_err());
    }

    #[test]
    fn weight_round_trip() {
        let mut w = WeightMap::new(3, 0);
        w.set(Clique::new(vec![0, 1, 2]), 4);
        w.set(Clique::new(vec![1, 2, 5]), 1);
        let text = write_weights(&w);
        assert_eq!(parse_weights(&text).unwrap(), w);
        assert!(parse_weights("w 0 1\n").is_err());
        assert!(parse_weights("w 2 1\n0 0 3\n").is_err());
    }

    #[test]
    fn ordering_round_trip() {
        let order = vec![4, 2, 0, 1, 3];
        assert_eq!(parse_ordering(&write_ordering(&order)).unwrap(), order);
        assert!(parse_ordering("1 x 2").is_err());
    }

    #[test]
    fn cover_json_round_trip() {
        let mut f = CoverSolution::new();
        f.add(Clique::new(vec![0, 1, 2]), 3);
        f.add(Clique::new(vec![1, 3]), 1);
        let json = cover_to_json(&f);
        assert_eq!(json.cost, 4);
        let text = serde_json::to_string(&json).unwrap();
        let back: CoverJson = serde_json::from_str(&text).unwrap();
        assert_eq!(cover_from_json(&back).unwrap(), f);

        let bad = CoverJson {
            cost: 99,
            cliques: json.cliques.clone(),
        };
        assert!(cover_from_json(&bad).is_err());
    }

    #[test]
    fn packing_json_round_trip() {
        let y = PackingSolution::from_cliques([Clique::new(vec![0, 1]), Clique::new(vec![2, 3])]);
        let json = packing_to_json(&y, 2);
        let back = packing_from_json(&json).unwrap();
        assert_eq!(back, y);
    }
}
