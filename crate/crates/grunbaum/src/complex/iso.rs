//! Backtracking search for face-preserving vertex bijections.

use std::collections::{BTreeMap, BTreeSet};

use super::{Simplex, Triangulation, VertexId};

/// A bijection on vertex identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: BTreeMap<VertexId, VertexId>,
}

impl Permutation {
    pub fn from_map(map: BTreeMap<VertexId, VertexId>) -> Option<Permutation> {
        let images: BTreeSet<VertexId> = map.values().copied().collect();
        if images.len() != map.len() {
            return None;
        }
        Some(Permutation { map })
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        *self.map.get(&v).unwrap_or(&v)
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.apply(v)).collect())
            .expect("bijection preserves distinctness")
    }

    pub fn map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }
}

struct SearchCtx<'a> {
    a_adj: Vec<Vec<bool>>,
    b_adj: Vec<Vec<bool>>,
    /// (skeleton degree, facet count) per vertex, used as a cheap invariant
    a_sig: Vec<(usize, usize)>,
    b_sig: Vec<(usize, usize)>,
    /// facets of `a` as index tuples, grouped by their maximum vertex index
    a_facets_by_max: Vec<Vec<Vec<usize>>>,
    b_facet_set: BTreeSet<Vec<usize>>,
    a_labels: &'a [VertexId],
    b_labels: &'a [VertexId],
    find_all: bool,
    found: Vec<Permutation>,
}

/// All isomorphisms from `a` onto `b` (or just the first when `find_all` is
/// false), ordered lexicographically by image sequence.
pub(super) fn isomorphisms(a: &Triangulation, b: &Triangulation, find_all: bool) -> Vec<Permutation> {
    if a.dimension() != b.dimension()
        || a.vertex_count() != b.vertex_count()
        || a.facets().len() != b.facets().len()
    {
        return Vec::new();
    }
    let nv = a.vertex_count();
    let index_of = |labels: &[VertexId]| -> BTreeMap<VertexId, usize> {
        labels.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    };
    let a_idx = index_of(a.vertices());
    let b_idx = index_of(b.vertices());

    let adjacency = |t: &Triangulation, idx: &BTreeMap<VertexId, usize>| -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; nv]; nv];
        for e in t.faces(1).expect("dim >= 1") {
            let (u, v) = (idx[&e.vertices()[0]], idx[&e.vertices()[1]]);
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    };
    let signature = |t: &Triangulation, idx: &BTreeMap<VertexId, usize>| -> Vec<(usize, usize)> {
        let mut sig = vec![(0usize, 0usize); nv];
        for (v, d) in t.skeleton_degrees() {
            sig[idx[&v]].0 = d;
        }
        for f in t.facets() {
            for v in f.vertices() {
                sig[idx[v]].1 += 1;
            }
        }
        sig
    };

    let a_sig = signature(a, &a_idx);
    let b_sig = signature(b, &b_idx);
    {
        let mut sa = a_sig.clone();
        let mut sb = b_sig.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Vec::new();
        }
    }

    let indexed_facets = |t: &Triangulation, idx: &BTreeMap<VertexId, usize>| -> Vec<Vec<usize>> {
        t.facets()
            .iter()
            .map(|f| {
                let mut vs: Vec<usize> = f.vertices().iter().map(|v| idx[v]).collect();
                vs.sort_unstable();
                vs
            })
            .collect()
    };
    let mut a_facets_by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); nv];
    for f in indexed_facets(a, &a_idx) {
        let max = *f.last().expect("facets are non-empty");
        a_facets_by_max[max].push(f);
    }
    let b_facet_set: BTreeSet<Vec<usize>> = indexed_facets(b, &b_idx).into_iter().collect();

    let mut ctx = SearchCtx {
        a_adj: adjacency(a, &a_idx),
        b_adj: adjacency(b, &b_idx),
        a_sig,
        b_sig,
        a_facets_by_max,
        b_facet_set,
        a_labels: a.vertices(),
        b_labels: b.vertices(),
        find_all,
        found: Vec::new(),
    };
    let mut assign: Vec<usize> = Vec::with_capacity(nv);
    let mut used = vec![false; nv];
    extend(&mut ctx, &mut assign, &mut used);
    ctx.found
}

fn extend(ctx: &mut SearchCtx, assign: &mut Vec<usize>, used: &mut Vec<bool>) {
    let nv = ctx.a_sig.len();
    let i = assign.len();
    if i == nv {
        let map: BTreeMap<VertexId, VertexId> = assign
            .iter()
            .enumerate()
            .map(|(k, &img)| (ctx.a_labels[k], ctx.b_labels[img]))
            .collect();
        ctx.found
            .push(Permutation::from_map(map).expect("search assigns distinct images"));
        return;
    }
    for cand in 0..nv {
        if used[cand] || ctx.a_sig[i] != ctx.b_sig[cand] {
            continue;
        }
        if (0..i).any(|j| ctx.a_adj[i][j] != ctx.b_adj[cand][assign[j]]) {
            continue;
        }
        assign.push(cand);
        used[cand] = true;
        // every facet of `a` whose vertices are now all assigned must land on a facet of `b`
        let facets_ok = ctx.a_facets_by_max[i].iter().all(|f| {
            let mut img: Vec<usize> = f.iter().map(|&v| assign[v]).collect();
            img.sort_unstable();
            ctx.b_facet_set.contains(&img)
        });
        if facets_ok {
            extend(ctx, assign, used);
        }
        used[cand] = false;
        assign.pop();
        if !ctx.find_all && !ctx.found.is_empty() {
            return;
        }
    }
}
