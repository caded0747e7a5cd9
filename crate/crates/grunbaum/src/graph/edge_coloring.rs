//! Proper edge colorings: König's perfect-matching peeling for regular
//! bipartite graphs, and an exact backtracking solver for chromatic-index
//! questions (Tait colorings, snarks).

use std::collections::BTreeMap;

use super::{bipartition, max_bipartite_matching, GraphError, SimpleGraph};

/// A proper edge coloring with colors `0..k`. Properness means edges sharing
/// a vertex receive different colors; surjectivity onto the palette is not
/// required here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    color: BTreeMap<(usize, usize), usize>,
    k: usize,
}

impl EdgeColoring {
    pub fn new(color: BTreeMap<(usize, usize), usize>, k: usize) -> EdgeColoring {
        EdgeColoring { color, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, a: usize, b: usize) -> Option<usize> {
        self.color.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn colors(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.color
    }

    /// Edges of one color class, in canonical order.
    pub fn class(&self, c: usize) -> Vec<(usize, usize)> {
        self.color
            .iter()
            .filter(|(_, &col)| col == c)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        if self.color.len() != g.edge_count() {
            return false;
        }
        for (&(a, b), &c) in &self.color {
            if !g.has_edge(a, b) || c >= self.k {
                return false;
            }
        }
        for v in 0..g.vertex_count() {
            let mut seen = vec![false; self.k];
            for &w in g.neighbors(v) {
                let c = match self.color_of(v, w) {
                    Some(c) => c,
                    None => return false,
                };
                if seen[c] {
                    return false;
                }
                seen[c] = true;
            }
        }
        true
    }
}

/// Edge d-coloring of a d-regular bipartite graph by d rounds of
/// perfect-matching extraction; each round's matching exists by König's
/// theorem. Deterministic in canonical edge order.
pub fn regular_bipartite_edge_coloring(
    g: &SimpleGraph,
    d: usize,
) -> Result<EdgeColoring, GraphError> {
    if g.regular_degree() != Some(d) {
        return Err(GraphError::NotRegular { expected: d });
    }
    let b = bipartition(g)?;
    let mut color: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut remaining: Vec<(usize, usize)> = g.edges().to_vec();
    for round in 0..d {
        let sub = SimpleGraph::new(g.vertex_count(), remaining.iter().copied())
            .expect("subgraph of a simple graph is simple");
        let matching = max_bipartite_matching(&sub, &b)?;
        assert!(
            matching.len() * 2 == g.vertex_count(),
            "König guarantees a perfect matching in a regular bipartite graph"
        );
        for &e in matching.edges() {
            color.insert(e, round);
        }
        let in_matching: std::collections::BTreeSet<(usize, usize)> =
            matching.edges().iter().copied().collect();
        remaining.retain(|e| !in_matching.contains(e));
    }
    debug_assert!(remaining.is_empty());
    Ok(EdgeColoring { color, k: d })
}

/// Exact k-edge-colorability by backtracking: edges are chosen
/// most-constrained-first, and the colors on the first vertex's incident
/// edges are pinned to break color symmetry. Returns a proper coloring or
/// `None` when there is none.
pub fn exact_edge_coloring(g: &SimpleGraph, k: usize) -> Option<EdgeColoring> {
    assert!(k >= 1, "need at least one color");
    let m = g.edge_count();
    if m == 0 {
        return Some(EdgeColoring {
            color: BTreeMap::new(),
            k,
        });
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) > k) {
        return None;
    }

    // edges adjacent to each edge (sharing an endpoint)
    let mut edge_adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                edge_adj[e].push(f);
                edge_adj[f].push(e);
            }
        }
    }

    let mut colors: Vec<Option<usize>> = vec![None; m];
    // pin the first vertex's incident edges to colors 0, 1, ...: any proper
    // coloring can be permuted into this form
    let v0 = (0..g.vertex_count())
        .find(|&v| g.degree(v) > 0)
        .expect("graph has edges");
    for (c, &w) in g.neighbors(v0).iter().enumerate() {
        let e = g.edge_index(v0, w).expect("neighbor edge exists");
        colors[e] = Some(c);
    }

    if solve(&edge_adj, k, &mut colors) {
        let color = g
            .edges()
            .iter()
            .copied()
            .zip(colors.into_iter().map(|c| c.expect("solved")))
            .collect();
        Some(EdgeColoring { color, k })
    } else {
        None
    }
}

fn allowed_mask(edge_adj: &[Vec<usize>], colors: &[Option<usize>], k: usize, e: usize) -> u64 {
    let mut mask = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    for &f in &edge_adj[e] {
        if let Some(c) = colors[f] {
            mask &= !(1u64 << c);
        }
    }
    mask
}

fn solve(edge_adj: &[Vec<usize>], k: usize, colors: &mut Vec<Option<usize>>) -> bool {
    // most-constrained edge first, ties by index
    let mut best: Option<(u32, usize, u64)> = None;
    for e in 0..colors.len() {
        if colors[e].is_some() {
            continue;
        }
        let mask = allowed_mask(edge_adj, colors, k, e);
        let count = mask.count_ones();
        if count == 0 {
            return false;
        }
        match best {
            Some((c, _, _)) if c <= count => {}
            _ => best = Some((count, e, mask)),
        }
    }
    let Some((_, e, mask)) = best else {
        return true; // everything colored
    };
    for c in 0..k.min(64) {
        if mask & (1u64 << c) == 0 {
            continue;
        }
        colors[e] = Some(c);
        if solve(edge_adj, k, colors) {
            return true;
        }
        colors[e] = None;
    }
    false
}

/// A snark: connected, 3-regular, bridgeless, and not Tait colorable
/// (equivalently, chromatic index 4 by Vizing's theorem).
pub fn is_snark(g: &SimpleGraph) -> bool {
    g.vertex_count() > 0
        && g.regular_degree() == Some(3)
        && g.is_connected()
        && g.is_bridgeless()
        && exact_edge_coloring(g, 3).is_none()
}
