//! Exact backtracking searches: Grünbaum hyper-colorings over the
//! (n-1)-faces, proper surjective vertex colorings, and orbit counting of
//! colorings under complex automorphisms combined with color permutations.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::{skeleton_graph, ColoringError, GrunbaumColoring, VertexColoring};
use crate::complex::{Simplex, Triangulation};

/// Default (n-1)-face cap for the exact Grünbaum search.
pub const EXACT_RIDGE_BOUND: usize = 60;
/// (n-1)-face cap for exhaustive enumeration and orbit counting.
pub const COUNT_RIDGE_BOUND: usize = 20;

/// Incidence tables shared by the exact searches.
struct RidgeProblem {
    ridges: Vec<Simplex>,
    /// the two facets of each ridge
    ridge_facets: Vec<[usize; 2]>,
    /// the n+1 ridges of each facet
    facet_ridges: Vec<Vec<usize>>,
    palette: usize,
}

impl RidgeProblem {
    fn new(t: &Triangulation) -> RidgeProblem {
        let ridges = t.ridges();
        let index: BTreeMap<&Simplex, usize> =
            ridges.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut ridge_facets = vec![[usize::MAX; 2]; ridges.len()];
        let mut facet_ridges = vec![Vec::new(); t.facets().len()];
        for (face, ids) in t.ridge_incidence() {
            let r = index[&face];
            ridge_facets[r] = [ids[0], ids[1]];
            facet_ridges[ids[0]].push(r);
            facet_ridges[ids[1]].push(r);
        }
        for rs in &mut facet_ridges {
            rs.sort_unstable();
        }
        RidgeProblem {
            ridges,
            ridge_facets,
            facet_ridges,
            palette: t.dimension() + 1,
        }
    }

    /// Bitmask of colors not yet used by either incident facet.
    fn allowed(&self, used: &[u32], r: usize) -> u32 {
        let all = (1u32 << self.palette) - 1;
        let [a, b] = self.ridge_facets[r];
        all & !(used[a] | used[b])
    }

    /// Next ridge to color: an uncolored ridge of the most-constrained facet
    /// (most colors already used), ties toward lower facet then ridge index.
    fn pick(&self, colors: &[Option<usize>], used: &[u32]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None; // (free slots, ridge)
        for (f, rs) in self.facet_ridges.iter().enumerate() {
            let free = self.palette - used[f].count_ones() as usize;
            if free == 0 {
                continue;
            }
            if let Some(&r) = rs.iter().find(|&&r| colors[r].is_none()) {
                match best {
                    Some((bf, _)) if bf <= free => {}
                    _ => best = Some((free, r)),
                }
            }
        }
        best.map(|(_, r)| r)
    }
}

fn search(
    p: &RidgeProblem,
    colors: &mut Vec<Option<usize>>,
    used: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[Option<usize>]) -> bool,
) -> bool {
    let Some(r) = p.pick(colors, used) else {
        return emit(colors);
    };
    let allowed = p.allowed(used, r);
    if allowed == 0 {
        return false;
    }
    let [a, b] = p.ridge_facets[r];
    for c in 0..p.palette {
        if allowed & (1 << c) == 0 {
            continue;
        }
        colors[r] = Some(c);
        used[a] |= 1 << c;
        used[b] |= 1 << c;
        if search(p, colors, used, emit) {
            return true;
        }
        used[a] &= !(1 << c);
        used[b] &= !(1 << c);
        colors[r] = None;
    }
    false
}

/// Decides Grünbaum hyper-colorability exactly, up to [`EXACT_RIDGE_BOUND`]
/// (n-1)-faces. The returned coloring is canonicalized.
pub fn exact_grunbaum(t: &Triangulation) -> Result<Option<GrunbaumColoring>, ColoringError> {
    exact_grunbaum_bounded(t, EXACT_RIDGE_BOUND)
}

pub fn exact_grunbaum_bounded(
    t: &Triangulation,
    bound: usize,
) -> Result<Option<GrunbaumColoring>, ColoringError> {
    let p = RidgeProblem::new(t);
    if p.ridges.len() > bound {
        return Err(ColoringError::TooLarge {
            what: "(n-1)-faces",
            size: p.ridges.len(),
            bound,
        });
    }
    let mut colors = vec![None; p.ridges.len()];
    let mut used = vec![0u32; t.facets().len()];
    let mut solution: Option<Vec<usize>> = None;
    search(&p, &mut colors, &mut used, &mut |cs| {
        solution = Some(cs.iter().map(|c| c.expect("complete")).collect());
        true
    });
    Ok(solution.map(|sol| {
        GrunbaumColoring {
            color: p.ridges.iter().cloned().zip(sol).collect(),
        }
        .canonicalized()
    }))
}

/// All valid Grünbaum hyper-colorings (including color-permuted variants),
/// in canonical ridge order. Capped at [`COUNT_RIDGE_BOUND`] by default.
pub fn enumerate_grunbaum(t: &Triangulation) -> Result<Vec<GrunbaumColoring>, ColoringError> {
    enumerate_grunbaum_bounded(t, COUNT_RIDGE_BOUND)
}

pub fn enumerate_grunbaum_bounded(
    t: &Triangulation,
    bound: usize,
) -> Result<Vec<GrunbaumColoring>, ColoringError> {
    let p = RidgeProblem::new(t);
    if p.ridges.len() > bound {
        return Err(ColoringError::TooLarge {
            what: "(n-1)-faces",
            size: p.ridges.len(),
            bound,
        });
    }
    let mut colors = vec![None; p.ridges.len()];
    let mut used = vec![0u32; t.facets().len()];
    let mut all: Vec<Vec<usize>> = Vec::new();
    search(&p, &mut colors, &mut used, &mut |cs| {
        all.push(cs.iter().map(|c| c.expect("complete")).collect());
        false // keep searching
    });
    all.sort_unstable();
    Ok(all
        .into_iter()
        .map(|sol| GrunbaumColoring {
            color: p.ridges.iter().cloned().zip(sol).collect(),
        })
        .collect())
}

/// Number of Grünbaum hyper-colorings up to isomorphism: orbits of the
/// set of valid colorings under complex automorphisms combined with all
/// (n+1)! color permutations.
pub fn count_grunbaum_nonisomorphic(t: &Triangulation) -> Result<usize, ColoringError> {
    let p = RidgeProblem::new(t);
    if p.ridges.len() > COUNT_RIDGE_BOUND {
        return Err(ColoringError::TooLarge {
            what: "(n-1)-faces",
            size: p.ridges.len(),
            bound: COUNT_RIDGE_BOUND,
        });
    }
    let all = enumerate_grunbaum_bounded(t, COUNT_RIDGE_BOUND)?;
    let vectors: Vec<Vec<usize>> = all
        .iter()
        .map(|g| p.ridges.iter().map(|r| g.color_of(r).expect("total")).collect())
        .collect();

    let auts = t
        .automorphisms_bounded(t.vertex_count())
        .expect("bound equals vertex count");
    let ridge_index: BTreeMap<&Simplex, usize> =
        p.ridges.iter().enumerate().map(|(i, r)| (r, i)).collect();
    // each automorphism as a permutation of ridge indices
    let ridge_perms: Vec<Vec<usize>> = auts
        .iter()
        .map(|perm| {
            p.ridges
                .iter()
                .map(|r| ridge_index[&perm.apply_simplex(r)])
                .collect()
        })
        .collect();
    let color_perms: Vec<Vec<usize>> = (0..p.palette).permutations(p.palette).collect();

    Ok(count_orbits(&vectors, &ridge_perms, &color_perms))
}

pub(super) fn count_orbits(
    vectors: &[Vec<usize>],
    ridge_perms: &[Vec<usize>],
    color_perms: &[Vec<usize>],
) -> usize {
    let index: BTreeMap<&[usize], usize> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let mut seen = vec![false; vectors.len()];
    let mut orbits = 0usize;
    for start in 0..vectors.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for rp in ridge_perms {
                for cp in color_perms {
                    // image coloring: face r gets cp[color at preimage rp[r]]
                    let img: Vec<usize> = (0..vectors[i].len())
                        .map(|r| cp[vectors[i][rp[r]]])
                        .collect();
                    let j = *index
                        .get(img.as_slice())
                        .expect("group action preserves validity");
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
    }
    orbits
}

/// Exact proper vertex k-coloring of the 1-skeleton, surjective onto the
/// palette. Vertices are taken most-constrained-first with first-use color
/// symmetry breaking; the verdict is exact.
pub fn vertex_coloring_exact(t: &Triangulation, k: usize) -> Option<VertexColoring> {
    assert!(k >= 1, "need at least one color");
    let (g, labels) = skeleton_graph(t);
    let n = g.vertex_count();
    if k > n {
        return None; // surjectivity is impossible
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];

    fn extend(
        g: &crate::graph::SimpleGraph,
        k: usize,
        colors: &mut Vec<Option<usize>>,
        assigned: usize,
        max_used: usize,
    ) -> bool {
        let n = g.vertex_count();
        if assigned == n {
            return max_used == k; // surjective
        }
        // surjectivity prune: remaining vertices must cover unused colors
        if k - max_used > n - assigned {
            return false;
        }
        // most-constrained vertex: fewest allowed colors among 0..=max_used
        let mut best: Option<(usize, usize)> = None;
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut used_mask = 0u64;
            for &w in g.neighbors(v) {
                if let Some(c) = colors[w] {
                    used_mask |= 1 << c;
                }
            }
            let reachable = max_used.min(k - 1) + 1;
            let free = (0..reachable).filter(|&c| used_mask & (1 << c) == 0).count();
            match best {
                Some((bf, _)) if bf <= free => {}
                _ => best = Some((free, v)),
            }
        }
        let (_, v) = best.expect("some vertex is uncolored");
        let mut used_mask = 0u64;
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                used_mask |= 1 << c;
            }
        }
        // first-use symmetry breaking: colors 0..max_used, plus one fresh color
        let limit = (max_used + 1).min(k);
        for c in 0..limit {
            if used_mask & (1 << c) != 0 {
                continue;
            }
            colors[v] = Some(c);
            let new_max = max_used.max(c + 1);
            if extend(g, k, colors, assigned + 1, new_max) {
                return true;
            }
            colors[v] = None;
        }
        false
    }

    if extend(&g, k, &mut colors, 0, 0) {
        let map: BTreeMap<_, _> = labels
            .iter()
            .zip(colors)
            .map(|(&label, c)| (label, c.expect("complete")))
            .collect();
        Some(VertexColoring::new(map, k))
    } else {
        None
    }
}
