//! Simple graphs and the algorithms behind the coloring pipeline:
//! facet adjacency, bipartition, matchings, König edge coloring, exact
//! edge coloring and snark recognition.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{Simplex, Triangulation, VertexId};

mod edge_coloring;

pub use edge_coloring::{exact_edge_coloring, is_snark, regular_bipartite_edge_coloring, EdgeColoring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("graph is not {expected}-regular")]
    NotRegular { expected: usize },
    #[error("graph is not bipartite: odd cycle {odd_cycle:?}")]
    NotBipartite { odd_cycle: Vec<usize> },
    #[error("bipartition does not fit the graph")]
    InvalidBipartition,
}

/// Loop-free, multi-edge-free undirected graph on vertices `0..n`.
/// Edges are kept sorted as `(min, max)` pairs; neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<SimpleGraph, GraphError> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, count: n });
                }
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        es.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &es {
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(SimpleGraph { n, edges: es, adj })
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        SimpleGraph::new(n, edges).expect("complete graph is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        let edges = (0..a).flat_map(move |u| (0..b).map(move |v| (u, a + v)));
        SimpleGraph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        assert!(n >= 3, "cycles need at least three vertices");
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// All bridges, found by a depth-first low-link pass.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut bridges = Vec::new();
        let mut timer = 0usize;
        // iterative DFS; frames carry (vertex, parent edge index into adj list progress)
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while !stack.is_empty() {
                let top = stack.len() - 1;
                let (v, parent, next) = stack[top];
                if next < self.adj[v].len() {
                    stack[top].2 += 1;
                    let w = self.adj[v][next];
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] > disc[u] {
                            bridges.push((u.min(v), u.max(v)));
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<SimpleGraph, GraphError> {
        SimpleGraph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// First vertex bijection carrying this graph's edge set onto `other`'s,
    /// by pruned backtracking. `None` when the graphs are not isomorphic.
    pub fn find_isomorphism(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return None;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return None;
        }
        let mut assign: Vec<usize> = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        if self.extend_iso(other, &mut assign, &mut used) {
            Some(assign)
        } else {
            None
        }
    }

    fn extend_iso(&self, other: &SimpleGraph, assign: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = assign.len();
        if i == self.n {
            return true;
        }
        for cand in 0..self.n {
            if used[cand] || self.degree(i) != other.degree(cand) {
                continue;
            }
            if (0..i).any(|j| self.has_edge(i, j) != other.has_edge(cand, assign[j])) {
                continue;
            }
            assign.push(cand);
            used[cand] = true;
            if self.extend_iso(other, assign, used) {
                return true;
            }
            used[cand] = false;
            assign.pop();
        }
        false
    }

    pub fn is_isomorphic_to(&self, other: &SimpleGraph) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

/// A two-sided vertex partition with every edge crossing sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    pub fn side_vertices(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn is_valid_for(&self, g: &SimpleGraph) -> bool {
        self.side.len() == g.vertex_count()
            && g.edges().iter().all(|&(a, b)| self.side[a] != self.side[b])
    }
}

/// Breadth-first 2-coloring, per connected component. The error carries an
/// odd-cycle witness (a closed walk of odd length through existing edges).
pub fn bipartition(g: &SimpleGraph) -> Result<Bipartition, GraphError> {
    let n = g.vertex_count();
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut parent: Vec<usize> = vec![usize::MAX; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are colored");
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(1 - sv);
                        parent[w] = v;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => {
                        return Err(GraphError::NotBipartite {
                            odd_cycle: odd_cycle_witness(v, w, &parent),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: side.into_iter().map(|s| s.expect("all vertices visited")).collect(),
    })
}

/// Cycle through the conflict edge (v, w) and the BFS-tree paths to their
/// lowest common ancestor.
fn odd_cycle_witness(v: usize, w: usize, parent: &[usize]) -> Vec<usize> {
    let path_to_root = |mut x: usize| -> Vec<usize> {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    // trim the common suffix, keeping the meeting vertex once
    let mut iv = pv.len();
    let mut iw = pw.len();
    while iv > 0 && iw > 0 && pv[iv - 1] == pw[iw - 1] {
        iv -= 1;
        iw -= 1;
    }
    let mut cycle: Vec<usize> = pv[..=iv.min(pv.len() - 1)].to_vec();
    let tail: Vec<usize> = pw[..=iw.min(pw.len() - 1)].to_vec();
    cycle.extend(tail.into_iter().rev().skip(1));
    cycle
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid_for(&self, g: &SimpleGraph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for &(a, b) in &self.edges {
            if !g.has_edge(a, b) || seen[a] || seen[b] {
                return false;
            }
            seen[a] = true;
            seen[b] = true;
        }
        true
    }

    pub fn is_perfect_for(&self, g: &SimpleGraph) -> bool {
        self.is_valid_for(g) && self.edges.len() * 2 == g.vertex_count()
    }
}

/// Maximum-cardinality matching via augmenting paths (Kuhn's algorithm),
/// deterministic in canonical vertex and neighbor order.
pub fn max_bipartite_matching(g: &SimpleGraph, b: &Bipartition) -> Result<Matching, GraphError> {
    if !b.is_valid_for(g) {
        return Err(GraphError::InvalidBipartition);
    }
    let n = g.vertex_count();
    let mut matched: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        if b.side(v) != 0 || matched[v].is_some() {
            continue;
        }
        let mut visited = vec![false; n];
        try_augment(g, v, &mut visited, &mut matched);
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .filter(|&v| b.side(v) == 0)
        .filter_map(|v| matched[v].map(|w| (v.min(w), v.max(w))))
        .collect();
    edges.sort_unstable();
    Ok(Matching { edges })
}

fn try_augment(g: &SimpleGraph, v: usize, visited: &mut [bool], matched: &mut [Option<usize>]) -> bool {
    for &w in g.neighbors(v) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        let free = match matched[w] {
            None => true,
            Some(u) => try_augment(g, u, visited, matched),
        };
        if free {
            matched[w] = Some(v);
            matched[v] = Some(w);
            return true;
        }
    }
    false
}

/// The facet-adjacency graph of `t` together with the edge-to-face
/// correspondence: graph vertex `i` is `t.facets()[i]`, and edge `k`
/// (in `graph.edges()` order) crosses `shared_faces[k]`.
#[derive(Debug, Clone)]
pub struct FacetAdjacency {
    pub graph: SimpleGraph,
    pub shared_faces: Vec<Simplex>,
}

impl FacetAdjacency {
    pub fn shared_face(&self, a: usize, b: usize) -> Option<&Simplex> {
        self.graph.edge_index(a, b).map(|k| &self.shared_faces[k])
    }
}

/// One graph vertex per facet; an edge whenever two facets share an
/// (n-1)-face. Always (n+1)-regular for a valid triangulation.
pub fn facet_adjacency(t: &Triangulation) -> FacetAdjacency {
    let mut pairs: BTreeMap<(usize, usize), Simplex> = BTreeMap::new();
    for (face, ids) in t.ridge_incidence() {
        debug_assert_eq!(ids.len(), 2, "valid triangulations have incidence 2");
        let (a, b) = (ids[0].min(ids[1]), ids[0].max(ids[1]));
        pairs.insert((a, b), face);
    }
    let graph = SimpleGraph::new(t.facets().len(), pairs.keys().copied())
        .expect("facet adjacency is simple");
    let shared_faces = graph
        .edges()
        .iter()
        .map(|e| pairs[e].clone())
        .collect();
    FacetAdjacency { graph, shared_faces }
}

/// The 1-skeleton as a graph on vertex indices, with the index-to-label map.
pub fn skeleton(t: &Triangulation) -> (SimpleGraph, Vec<VertexId>) {
    let labels: Vec<VertexId> = t.vertices().to_vec();
    let index: BTreeMap<VertexId, usize> =
        labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges = t
        .faces(1)
        .expect("dim >= 1")
        .into_iter()
        .map(|e| (index[&e.vertices()[0]], index[&e.vertices()[1]]));
    let graph = SimpleGraph::new(labels.len(), edges).expect("skeleton is simple");
    (graph, labels)
}

#[cfg(test)]
mod tests;
