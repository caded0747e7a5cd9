//! The coloring constructions: facet 2-colorings, the König pipeline from
//! facet 2-colorability to Grünbaum hyper-colorings, the 4-class and
//! tripartite edge-coloring rules, exact searches, and counting up to
//! isomorphism.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{Simplex, Triangulation, VertexId};
use crate::graph::{bipartition, facet_adjacency, regular_bipartite_edge_coloring, skeleton};

mod applications;
mod search;

pub use applications::{
    quadrangulate, remove_color_class, scalene_labeling, CellDecomposition, CoherenceCheck,
    MergedCell, Quadrangulation, ScaleneLabeling,
};
pub use search::{
    count_grunbaum_nonisomorphic, enumerate_grunbaum, enumerate_grunbaum_bounded, exact_grunbaum,
    exact_grunbaum_bounded, vertex_coloring_exact, COUNT_RIDGE_BOUND, EXACT_RIDGE_BOUND,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ColoringError {
    #[error("facet 2-coloring is not valid for this triangulation")]
    InvalidTwoColoring,
    #[error("dimension {got} out of range ({expected})")]
    BadDimension { got: usize, expected: String },
    #[error("not a proper surjective 4-coloring of the vertices")]
    NotFourColoring,
    #[error("partition is not tripartite: edge {{{edge}}} lies inside one class")]
    NotTripartite { edge: Simplex },
    #[error("classes do not partition the vertex set")]
    BadPartition,
    #[error("coloring misses face {{{face}}}")]
    MissingFace { face: Simplex },
    #[error("coloring is not a valid Grünbaum hyper-coloring")]
    InvalidColoring,
    #[error("palette entries must be positive and pairwise distinct")]
    NotDistinct,
    #[error("palette violates the strict triangle inequality")]
    TriangleInequalityViolated,
    #[error("palette has {got} entries, expected {expected}")]
    BadPalette { got: usize, expected: usize },
    #[error("too large: {size} {what} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetColor {
    Black,
    White,
}

impl FacetColor {
    pub fn opposite(self) -> FacetColor {
        match self {
            FacetColor::Black => FacetColor::White,
            FacetColor::White => FacetColor::Black,
        }
    }
}

impl std::fmt::Display for FacetColor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FacetColor::Black => write!(f, "black"),
            FacetColor::White => write!(f, "white"),
        }
    }
}

/// Black/white coloring of facets; (n-1)-adjacent facets differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetTwoColoring {
    color: BTreeMap<Simplex, FacetColor>,
}

impl FacetTwoColoring {
    pub fn new(color: BTreeMap<Simplex, FacetColor>) -> FacetTwoColoring {
        FacetTwoColoring { color }
    }

    pub fn color_of(&self, facet: &Simplex) -> Option<FacetColor> {
        self.color.get(facet).copied()
    }

    pub fn colors(&self) -> &BTreeMap<Simplex, FacetColor> {
        &self.color
    }

    pub fn swapped(&self) -> FacetTwoColoring {
        FacetTwoColoring {
            color: self
                .color
                .iter()
                .map(|(f, c)| (f.clone(), c.opposite()))
                .collect(),
        }
    }

    /// Total on the facet set and proper across every shared (n-1)-face.
    pub fn is_valid_for(&self, t: &Triangulation) -> bool {
        if self.color.len() != t.facets().len()
            || !t.facets().iter().all(|f| self.color.contains_key(f))
        {
            return false;
        }
        t.ridge_incidence().values().all(|ids| {
            let (a, b) = (&t.facets()[ids[0]], &t.facets()[ids[1]]);
            self.color[a] != self.color[b]
        })
    }

    pub fn facets_of_color(&self, c: FacetColor) -> Vec<Simplex> {
        self.color
            .iter()
            .filter(|(_, &col)| col == c)
            .map(|(f, _)| f.clone())
            .collect()
    }
}

/// (n+1)-coloring of the (n-1)-faces such that every facet's boundary shows
/// all n+1 colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrunbaumColoring {
    color: BTreeMap<Simplex, usize>,
}

impl GrunbaumColoring {
    pub fn new(color: BTreeMap<Simplex, usize>) -> GrunbaumColoring {
        GrunbaumColoring { color }
    }

    pub fn color_of(&self, face: &Simplex) -> Option<usize> {
        self.color.get(face).copied()
    }

    pub fn colors(&self) -> &BTreeMap<Simplex, usize> {
        &self.color
    }

    /// Applies a palette permutation: color c becomes perm[c].
    pub fn permuted_colors(&self, perm: &[usize]) -> GrunbaumColoring {
        GrunbaumColoring {
            color: self
                .color
                .iter()
                .map(|(f, &c)| (f.clone(), perm[c]))
                .collect(),
        }
    }

    /// Renames colors by first occurrence in canonical face order: the
    /// lexicographically first face gets color 0, the next new color 1, ...
    pub fn canonicalized(&self) -> GrunbaumColoring {
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0usize;
        let mut color = BTreeMap::new();
        for (f, &c) in &self.color {
            let new = *rename.entry(c).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
            color.insert(f.clone(), new);
        }
        GrunbaumColoring { color }
    }
}

/// Proper vertex coloring surjective onto `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    color: BTreeMap<VertexId, usize>,
    k: usize,
}

impl VertexColoring {
    pub fn new(color: BTreeMap<VertexId, usize>, k: usize) -> VertexColoring {
        VertexColoring { color, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, v: VertexId) -> Option<usize> {
        self.color.get(&v).copied()
    }

    pub fn colors(&self) -> &BTreeMap<VertexId, usize> {
        &self.color
    }

    pub fn class(&self, c: usize) -> Vec<VertexId> {
        self.color
            .iter()
            .filter(|(_, &col)| col == c)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Proper on the 1-skeleton and surjective onto `0..k`.
    pub fn is_valid_for(&self, t: &Triangulation) -> bool {
        if self.color.len() != t.vertex_count()
            || !t.vertices().iter().all(|v| self.color.contains_key(v))
        {
            return false;
        }
        if self.color.values().any(|&c| c >= self.k) {
            return false;
        }
        let mut used = vec![false; self.k];
        for &c in self.color.values() {
            used[c] = true;
        }
        if !used.iter().all(|&u| u) {
            return false;
        }
        t.faces(1).expect("dim >= 1").iter().all(|e| {
            let vs = e.vertices();
            self.color[&vs[0]] != self.color[&vs[1]]
        })
    }
}

/// Black/white coloring of the facets via bipartition of the facet-adjacency
/// graph; the canonical first facet is black. `None` iff A(T) is not
/// bipartite.
pub fn facet_two_coloring(t: &Triangulation) -> Option<FacetTwoColoring> {
    let fa = facet_adjacency(t);
    let b = bipartition(&fa.graph).ok()?;
    let first = b.side(0);
    let color = t
        .facets()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let c = if b.side(i) == first {
                FacetColor::Black
            } else {
                FacetColor::White
            };
            (f.clone(), c)
        })
        .collect();
    Some(FacetTwoColoring { color })
}

/// The König pipeline: a facet 2-coloring makes A(T) an (n+1)-regular
/// bipartite graph; its edge (n+1)-coloring transports to the shared
/// (n-1)-faces and yields a Grünbaum hyper-coloring. The output is
/// canonicalized and always passes [`verify_grunbaum`].
pub fn grunbaum_from_two_coloring(
    t: &Triangulation,
    c: &FacetTwoColoring,
) -> Result<GrunbaumColoring, ColoringError> {
    if !c.is_valid_for(t) {
        return Err(ColoringError::InvalidTwoColoring);
    }
    let fa = facet_adjacency(t);
    let ec = regular_bipartite_edge_coloring(&fa.graph, t.dimension() + 1)
        .expect("A(T) of a 2-colorable triangulation is regular bipartite");
    let color: BTreeMap<Simplex, usize> = fa
        .graph
        .edges()
        .iter()
        .zip(&fa.shared_faces)
        .map(|(&(a, b), face)| {
            let col = ec.color_of(a, b).expect("every A(T) edge is colored");
            (face.clone(), col)
        })
        .collect();
    Ok(GrunbaumColoring { color }.canonicalized())
}

/// True iff `g` colors every (n-1)-face with a color in `0..=n` and each
/// facet sees all n+1 colors on its boundary.
pub fn verify_grunbaum(t: &Triangulation, g: &GrunbaumColoring) -> Result<bool, ColoringError> {
    let n = t.dimension();
    let ridges = t.ridges();
    for face in &ridges {
        if g.color_of(face).is_none() {
            return Err(ColoringError::MissingFace { face: face.clone() });
        }
    }
    if ridges.iter().any(|f| g.color_of(f).expect("checked") > n) {
        return Ok(false);
    }
    for facet in t.facets() {
        let mut seen = vec![false; n + 1];
        for face in facet.boundary() {
            let c = g.color_of(&face).expect("checked total");
            if seen[c] {
                return Ok(false);
            }
            seen[c] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The folklore 4-class rule for n = 2: with vertex classes A, B, C, D,
/// edges between A-B or C-D turn red (0), A-C or B-D blue (1), and A-D or
/// B-C green (2). Every triangle has three distinctly classed corners, so
/// its edges fall in three different pair classes.
pub fn grunbaum_from_vertex4(
    t: &Triangulation,
    v: &VertexColoring,
) -> Result<GrunbaumColoring, ColoringError> {
    if t.dimension() != 2 {
        return Err(ColoringError::BadDimension {
            got: t.dimension(),
            expected: "n = 2".into(),
        });
    }
    if v.k() != 4 || !v.is_valid_for(t) {
        return Err(ColoringError::NotFourColoring);
    }
    // pair classes {A,B}/{C,D} -> 0, {A,C}/{B,D} -> 1, {A,D}/{B,C} -> 2
    const PAIR_COLOR: [[usize; 4]; 4] = [
        [9, 0, 1, 2],
        [0, 9, 2, 1],
        [1, 2, 9, 0],
        [2, 1, 0, 9],
    ];
    let color = t
        .faces(1)
        .expect("n = 2")
        .into_iter()
        .map(|e| {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            let (ca, cb) = (
                v.color_of(a).expect("total coloring"),
                v.color_of(b).expect("total coloring"),
            );
            let col = PAIR_COLOR[ca][cb];
            (e, col)
        })
        .collect();
    Ok(GrunbaumColoring { color })
}

/// Archdeacon's rule for tripartite 2-manifold triangulations: edges
/// between A and B red (0), B and C blue (1), A and C green (2).
pub fn grunbaum_tripartite(
    t: &Triangulation,
    parts: &[Vec<VertexId>; 3],
) -> Result<GrunbaumColoring, ColoringError> {
    if t.dimension() != 2 {
        return Err(ColoringError::BadDimension {
            got: t.dimension(),
            expected: "n = 2".into(),
        });
    }
    let mut class: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if class.insert(v, i).is_some() {
                return Err(ColoringError::BadPartition);
            }
        }
    }
    if class.len() != t.vertex_count() || !t.vertices().iter().all(|v| class.contains_key(v)) {
        return Err(ColoringError::BadPartition);
    }
    // pair classes {A,B} -> 0, {B,C} -> 1, {A,C} -> 2
    const PAIR_COLOR: [[usize; 3]; 3] = [[9, 0, 2], [0, 9, 1], [2, 1, 9]];
    let mut color = BTreeMap::new();
    for e in t.faces(1).expect("n = 2") {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        let (ca, cb) = (class[&a], class[&b]);
        if ca == cb {
            return Err(ColoringError::NotTripartite { edge: e });
        }
        color.insert(e, PAIR_COLOR[ca][cb]);
    }
    Ok(GrunbaumColoring { color })
}

/// The tripartition found by an exact 3-coloring of the 1-skeleton, if any.
/// Convenience used by the CLI's tripartite method.
pub fn tripartition_by_exact_coloring(t: &Triangulation) -> Option<[Vec<VertexId>; 3]> {
    let v = vertex_coloring_exact(t, 3)?;
    Some([v.class(0), v.class(1), v.class(2)])
}

pub(crate) fn skeleton_graph(t: &Triangulation) -> (crate::graph::SimpleGraph, Vec<VertexId>) {
    skeleton(t)
}
