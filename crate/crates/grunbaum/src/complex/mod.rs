//! Simplicial complexes: facet lists, structural validation, invariants,
//! orientability and automorphisms.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

mod iso;

pub use iso::Permutation;

/// Vertex identifiers are plain non-negative integers. The library never
/// renumbers them behind your back; catalog complexes use 1-based labels
/// so they round-trip through the file format unchanged.
pub type VertexId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet #{index} has {got} vertices, expected {expected} distinct vertices")]
    BadArity {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("duplicate facet {{{facet}}}")]
    DuplicateFacet { facet: Simplex },
    #[error("not a closed pseudomanifold: face {{{face}}} lies in {count} facets, expected 2")]
    NotPseudomanifold { face: Simplex, count: usize },
    #[error("facet-adjacency graph is disconnected")]
    Disconnected,
    #[error("a triangulation needs at least one facet")]
    Empty,
    #[error("dimension {got} out of range ({expected})")]
    BadDimension { got: usize, expected: String },
    #[error("too large: {size} {what} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

/// A simplex in canonical form: strictly increasing vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Canonicalizes (sorts) the vertex list. Returns `None` when the list is
    /// empty or contains a repeated vertex.
    pub fn new(mut vertices: Vec<VertexId>) -> Option<Simplex> {
        if vertices.is_empty() {
            return None;
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Simplex { vertices })
    }

    /// `vertices` must already be strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Simplex {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in the canonical vertex sequence.
    pub fn position_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// The face obtained by dropping the vertex at `position`.
    pub fn opposite_face(&self, position: usize) -> Simplex {
        let mut vs = self.vertices.clone();
        vs.remove(position);
        Simplex { vertices: vs }
    }

    /// All codimension-1 faces, in order of the omitted position.
    pub fn boundary(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.vertices.len()).map(|i| self.opposite_face(i))
    }

    /// All k-dimensional subfaces.
    pub fn subfaces(&self, k: usize) -> Vec<Simplex> {
        self.vertices
            .iter()
            .copied()
            .combinations(k + 1)
            .map(Simplex::from_sorted)
            .collect()
    }

    /// Cone over this simplex: adds one vertex not already present.
    pub fn join(&self, apex: VertexId) -> Option<Simplex> {
        if self.contains(apex) {
            return None;
        }
        let mut vs = self.vertices.clone();
        vs.push(apex);
        vs.sort_unstable();
        Some(Simplex { vertices: vs })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Outcome of structural validation. `offending_faces` lists every
/// (n-1)-face whose facet incidence differs from 2, with its count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_closed_pseudomanifold: bool,
    pub is_connected: bool,
    pub offending_faces: Vec<(Simplex, usize)>,
    /// For n = 2 only: every vertex link is a single cycle. `None` otherwise.
    pub link_check_2d: Option<bool>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.is_closed_pseudomanifold && self.is_connected
    }
}

/// A triangulation of a closed n-manifold, stored as its facet list.
///
/// Construction via [`Triangulation::build`] enforces: canonical facets,
/// no duplicates, every (n-1)-face in exactly two facets, and a connected
/// facet-adjacency graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    dim: usize,
    facets: Vec<Simplex>,
    vertices: Vec<VertexId>,
}

/// Default cap for [`Triangulation::automorphisms`].
pub const AUTOMORPHISM_VERTEX_BOUND: usize = 16;

impl Triangulation {
    /// Validates and canonicalizes a facet list into a triangulation.
    pub fn build(dim: usize, facet_lists: &[Vec<VertexId>]) -> Result<Triangulation, ComplexError> {
        let report = validate(dim, facet_lists)?;
        if let Some((face, count)) = report.offending_faces.first().cloned() {
            return Err(ComplexError::NotPseudomanifold { face, count });
        }
        if !report.is_connected {
            return Err(ComplexError::Disconnected);
        }
        Ok(Self::canonicalize(dim, facet_lists).expect("validated above"))
    }

    pub fn from_simplices(dim: usize, facets: Vec<Simplex>) -> Result<Triangulation, ComplexError> {
        let lists: Vec<Vec<VertexId>> = facets.iter().map(|s| s.vertices().to_vec()).collect();
        Self::build(dim, &lists)
    }

    /// Arity/duplicate checks plus facet canonicalization, no incidence checks.
    fn canonicalize(dim: usize, facet_lists: &[Vec<VertexId>]) -> Result<Triangulation, ComplexError> {
        if dim < 1 {
            return Err(ComplexError::BadDimension {
                got: dim,
                expected: "n >= 1".into(),
            });
        }
        if facet_lists.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut facets = Vec::with_capacity(facet_lists.len());
        for (index, list) in facet_lists.iter().enumerate() {
            let simplex = Simplex::new(list.clone()).ok_or(ComplexError::BadArity {
                index,
                got: list.len(),
                expected: dim + 1,
            })?;
            if simplex.dimension() != dim {
                return Err(ComplexError::BadArity {
                    index,
                    got: list.len(),
                    expected: dim + 1,
                });
            }
            facets.push(simplex);
        }
        facets.sort();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFacet { facet: w[0].clone() });
        }
        let vertices: Vec<VertexId> = facets
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .sorted_unstable()
            .dedup()
            .collect();
        Ok(Triangulation {
            dim,
            facets,
            vertices,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// All k-dimensional faces, deduplicated, in canonical order.
    pub fn faces(&self, k: usize) -> Result<Vec<Simplex>, ComplexError> {
        if k > self.dim {
            return Err(ComplexError::BadDimension {
                got: k,
                expected: format!("0 <= k <= {}", self.dim),
            });
        }
        let set: std::collections::BTreeSet<Simplex> = self
            .facets
            .iter()
            .flat_map(|f| f.subfaces(k))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// The (n-1)-faces. Every one lies in exactly two facets.
    pub fn ridges(&self) -> Vec<Simplex> {
        self.faces(self.dim - 1).expect("n-1 is always in range")
    }

    /// Map from each (n-1)-face to the (two) facet indices containing it.
    pub(crate) fn ridge_incidence(&self) -> BTreeMap<Simplex, Vec<usize>> {
        ridge_incidence_of(&self.facets)
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for k in 0..=self.dim {
            let count = self.faces(k).expect("k in range").len() as i64;
            if k % 2 == 0 {
                chi += count;
            } else {
                chi -= count;
            }
        }
        chi
    }

    /// Degree of each vertex in the 1-skeleton, keyed by vertex id.
    pub fn skeleton_degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        if self.dim >= 1 {
            for e in self.faces(1).expect("dim >= 1") {
                for &v in e.vertices() {
                    *deg.get_mut(&v).expect("vertex present") += 1;
                }
            }
        }
        deg
    }

    /// True iff n = 2 and every vertex degree in the 1-skeleton is even.
    pub fn is_even(&self) -> Result<bool, ComplexError> {
        if self.dim != 2 {
            return Err(ComplexError::BadDimension {
                got: self.dim,
                expected: "n = 2".into(),
            });
        }
        Ok(self.skeleton_degrees().values().all(|d| d % 2 == 0))
    }

    /// Tries to orient all facets coherently: shared (n-1)-faces must receive
    /// opposite induced orientations. Returns `None` for non-orientable
    /// complexes.
    pub fn orientability(&self) -> Option<Orientation> {
        let incidence = self.ridge_incidence();
        let mut signs: Vec<Option<i8>> = vec![None; self.facets.len()];
        signs[0] = Some(1);
        let mut queue = VecDeque::from([0usize]);
        // neighbor lists with the relative sign each adjacency forces
        let mut forced: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.facets.len()];
        for (face, facet_ids) in &incidence {
            let (a, b) = (facet_ids[0], facet_ids[1]);
            let pa = omitted_position(&self.facets[a], face);
            let pb = omitted_position(&self.facets[b], face);
            // s_a * (-1)^pa = -s_b * (-1)^pb  =>  s_b = s_a * (-1)^(pa+pb+1)
            let rel: i8 = if (pa + pb) % 2 == 0 { -1 } else { 1 };
            forced[a].push((b, rel));
            forced[b].push((a, rel));
        }
        while let Some(i) = queue.pop_front() {
            let si = signs[i].expect("queued facets are signed");
            for &(j, rel) in &forced[i] {
                let expected = si * rel;
                match signs[j] {
                    None => {
                        signs[j] = Some(expected);
                        queue.push_back(j);
                    }
                    Some(s) if s != expected => return None,
                    Some(_) => {}
                }
            }
        }
        let map = self
            .facets
            .iter()
            .cloned()
            .zip(signs.into_iter().map(|s| s.expect("complex is connected")))
            .collect();
        Some(Orientation { signs: map })
    }

    /// All vertex permutations mapping the facet set onto itself, in
    /// lexicographic order of their image sequences. Bounded at
    /// [`AUTOMORPHISM_VERTEX_BOUND`] vertices.
    pub fn automorphisms(&self) -> Result<Vec<Permutation>, ComplexError> {
        self.automorphisms_bounded(AUTOMORPHISM_VERTEX_BOUND)
    }

    pub fn automorphisms_bounded(&self, bound: usize) -> Result<Vec<Permutation>, ComplexError> {
        if self.vertex_count() > bound {
            return Err(ComplexError::TooLarge {
                what: "vertices",
                size: self.vertex_count(),
                bound,
            });
        }
        Ok(iso::isomorphisms(self, self, true))
    }

    pub fn find_isomorphism(&self, other: &Triangulation) -> Option<Permutation> {
        iso::isomorphisms(self, other, false).into_iter().next()
    }

    pub fn is_isomorphic_to(&self, other: &Triangulation) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Applies a vertex relabeling. The map must be injective on the vertex
    /// set; the result is re-validated.
    pub fn relabeled(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Triangulation, ComplexError> {
        let lists: Vec<Vec<VertexId>> = self
            .facets
            .iter()
            .map(|s| s.vertices().iter().map(|v| *map.get(v).unwrap_or(v)).collect())
            .collect();
        Self::build(self.dim, &lists)
    }
}

/// Position of the vertex of `facet` that `face` omits.
pub(crate) fn omitted_position(facet: &Simplex, face: &Simplex) -> usize {
    for (i, v) in facet.vertices().iter().enumerate() {
        if !face.contains(*v) {
            return i;
        }
    }
    unreachable!("face must be a proper subface of facet");
}

fn ridge_incidence_of(facets: &[Simplex]) -> BTreeMap<Simplex, Vec<usize>> {
    let mut incidence: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, facet) in facets.iter().enumerate() {
        for face in facet.boundary() {
            incidence.entry(face).or_default().push(i);
        }
    }
    incidence
}

/// Structural validation without building. Arity and duplicate problems are
/// reported as errors; incidence, connectivity and the n=2 link condition
/// land in the report.
pub fn validate(dim: usize, facet_lists: &[Vec<VertexId>]) -> Result<ValidationReport, ComplexError> {
    let t = Triangulation::canonicalize(dim, facet_lists)?;
    let incidence = t.ridge_incidence();
    let offending: Vec<(Simplex, usize)> = incidence
        .iter()
        .filter(|(_, ids)| ids.len() != 2)
        .map(|(f, ids)| (f.clone(), ids.len()))
        .collect();
    let is_pseudo = offending.is_empty();

    // connectivity of the facet-adjacency graph
    let mut seen = vec![false; t.facets.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); t.facets.len()];
    for ids in incidence.values() {
        for (&a, &b) in ids.iter().tuple_combinations() {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let is_connected = seen.iter().all(|&s| s);

    let link_check_2d = if dim == 2 {
        Some(is_pseudo && links_are_cycles(&t))
    } else {
        None
    };

    Ok(ValidationReport {
        is_closed_pseudomanifold: is_pseudo,
        is_connected,
        offending_faces: offending,
        link_check_2d,
    })
}

/// n = 2: the link of every vertex must be a single cycle, i.e. the opposite
/// edges of its incident triangles form a connected 2-regular graph.
fn links_are_cycles(t: &Triangulation) -> bool {
    for &v in t.vertices() {
        let mut link_adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for facet in t.facets() {
            if facet.contains(v) {
                let rest: Vec<VertexId> =
                    facet.vertices().iter().copied().filter(|&u| u != v).collect();
                link_adj.entry(rest[0]).or_default().push(rest[1]);
                link_adj.entry(rest[1]).or_default().push(rest[0]);
            }
        }
        if link_adj.values().any(|ns| ns.len() != 2) {
            return false;
        }
        // connectivity of the link
        let start = *link_adj.keys().next().expect("vertex lies in some facet");
        let mut seen = std::collections::BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &link_adj[&u] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        if seen.len() != link_adj.len() {
            return false;
        }
    }
    true
}

/// A coherent orientation: a sign per facet such that the two induced
/// orientations on every shared (n-1)-face are opposite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    signs: BTreeMap<Simplex, i8>,
}

impl Orientation {
    pub fn sign(&self, facet: &Simplex) -> Option<i8> {
        self.signs.get(facet).copied()
    }

    pub fn signs(&self) -> &BTreeMap<Simplex, i8> {
        &self.signs
    }

    /// Re-checks coherence against `t` from the stored signs alone.
    pub fn verify(&self, t: &Triangulation) -> bool {
        if self.signs.len() != t.facets().len() {
            return false;
        }
        for (face, ids) in t.ridge_incidence() {
            if ids.len() != 2 {
                return false;
            }
            let (a, b) = (&t.facets()[ids[0]], &t.facets()[ids[1]]);
            let (Some(sa), Some(sb)) = (self.sign(a), self.sign(b)) else {
                return false;
            };
            let ia = omitted_position(a, &face);
            let ib = omitted_position(b, &face);
            let induced_a = sa as i32 * if ia % 2 == 0 { 1 } else { -1 };
            let induced_b = sb as i32 * if ib % 2 == 0 { 1 } else { -1 };
            if induced_a + induced_b != 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::catalog;

    fn octahedron() -> Triangulation {
        catalog::octahedron()
    }

    #[test]
    fn octahedron_builds_with_twelve_edges() {
        let t = octahedron();
        assert_eq!(t.dimension(), 2);
        assert_eq!(t.vertex_count(), 6);
        assert_eq!(t.facets().len(), 8);
        assert_eq!(t.faces(1).unwrap().len(), 12);
    }

    #[test]
    fn cycle_c3_is_a_valid_one_manifold() {
        let t = Triangulation::build(1, &[vec![1, 2], vec![2, 3], vec![3, 1]]).unwrap();
        assert_eq!(t.facets().len(), 3);
        assert_eq!(t.euler_characteristic(), 0);
    }

    #[test]
    fn single_triangle_is_not_a_pseudomanifold() {
        let err = Triangulation::build(2, &[vec![1, 2, 3]]).unwrap_err();
        assert!(matches!(err, ComplexError::NotPseudomanifold { count: 1, .. }));
    }

    #[test]
    fn arity_and_duplicates_are_rejected() {
        let err = Triangulation::build(2, &[vec![1, 2], vec![2, 3, 4]]).unwrap_err();
        assert!(matches!(err, ComplexError::BadArity { index: 0, .. }));
        let err = Triangulation::build(2, &[vec![1, 2, 2], vec![2, 3, 4]]).unwrap_err();
        assert!(matches!(err, ComplexError::BadArity { .. }));
        let err =
            Triangulation::build(1, &[vec![1, 2], vec![2, 1], vec![3, 1], vec![2, 3]]).unwrap_err();
        assert!(matches!(err, ComplexError::DuplicateFacet { .. }));
    }

    #[test]
    fn two_disjoint_cycles_are_disconnected() {
        let err = Triangulation::build(
            1,
            &[
                vec![1, 2],
                vec![2, 3],
                vec![3, 1],
                vec![4, 5],
                vec![5, 6],
                vec![6, 4],
            ],
        )
        .unwrap_err();
        assert!(matches!(err, ComplexError::Disconnected));
    }

    #[test]
    fn face_counts_octahedron_and_tetrahedron() {
        assert_eq!(octahedron().faces(1).unwrap().len(), 12);
        let tetra = catalog::tetrahedron();
        assert_eq!(tetra.faces(1).unwrap().len(), 6);
        assert!(tetra.faces(3).is_err());
    }

    #[test]
    fn sixteen_cell_has_32_triangles() {
        // independent route: count 3-subsets of the vertex set contained in a facet
        let (t, _) = crate::generators::cross_polytope(3);
        let mut count = 0usize;
        for triple in t.vertices().iter().copied().combinations(3) {
            let s = Simplex::new(triple).unwrap();
            if t.facets()
                .iter()
                .any(|f| s.vertices().iter().all(|&v| f.contains(v)))
            {
                count += 1;
            }
        }
        assert_eq!(count, 32);
        assert_eq!(t.faces(2).unwrap().len(), 32);
    }

    #[test]
    fn euler_characteristics_of_catalog_surfaces() {
        assert_eq!(octahedron().euler_characteristic(), 2);
        assert_eq!(catalog::k7_moebius_torus().euler_characteristic(), 0);
        assert_eq!(catalog::k6_projective_plane().euler_characteristic(), 1);
    }

    #[test]
    fn ridge_count_matches_facet_arity() {
        for t in [
            octahedron(),
            catalog::tetrahedron(),
            catalog::k7_moebius_torus(),
        ] {
            let n = t.dimension();
            assert_eq!(t.ridges().len(), (n + 1) * t.facets().len() / 2);
            assert_eq!(t.faces(n).unwrap(), t.facets().to_vec());
        }
    }

    #[test]
    fn orientability_verdicts() {
        let orient = octahedron().orientability().expect("sphere is orientable");
        assert!(orient.verify(&octahedron()));

        let torus = catalog::k7_moebius_torus();
        let o = torus.orientability().expect("torus is orientable");
        assert!(o.verify(&torus));
        assert_eq!(torus.euler_characteristic(), 0);

        assert!(catalog::k6_projective_plane().orientability().is_none());
    }

    #[test]
    fn evenness_of_platonic_triangulations() {
        assert!(octahedron().is_even().unwrap());
        assert!(!catalog::icosahedron().is_even().unwrap());
        assert!(!catalog::tetrahedron().is_even().unwrap());
        assert!(catalog::cycle(6).is_even().is_err());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(catalog::tetrahedron().automorphisms().unwrap().len(), 24);
        assert_eq!(catalog::cycle(6).automorphisms().unwrap().len(), 12);
        assert_eq!(octahedron().automorphisms().unwrap().len(), 48);
    }

    #[test]
    fn octahedron_automorphisms_match_naive_enumeration() {
        // oracle: scan all 720 permutations of the six vertices
        let t = octahedron();
        let vs: Vec<VertexId> = t.vertices().to_vec();
        let facet_set: std::collections::BTreeSet<Simplex> = t.facets().iter().cloned().collect();
        let mut count = 0usize;
        for perm in vs.iter().copied().permutations(vs.len()) {
            let map: BTreeMap<VertexId, VertexId> =
                vs.iter().copied().zip(perm.iter().copied()).collect();
            let ok = t.facets().iter().all(|f| {
                let img = Simplex::new(f.vertices().iter().map(|v| map[v]).collect()).unwrap();
                facet_set.contains(&img)
            });
            if ok {
                count += 1;
            }
        }
        assert_eq!(count, 48);
    }

    #[test]
    fn automorphism_bound_is_enforced() {
        let t = catalog::cycle(17);
        assert!(matches!(
            t.automorphisms(),
            Err(ComplexError::TooLarge { .. })
        ));
        assert_eq!(t.automorphisms_bounded(17).unwrap().len(), 34);
    }

    #[test]
    fn pinched_sphere_fails_the_link_check_but_validates() {
        // two cones over triangles, joined by a tube that avoids the pinch vertex
        let p = 1;
        let (a1, a2, a3, b1, b2, b3) = (2, 3, 4, 5, 6, 7);
        let facets = vec![
            vec![p, a1, a2],
            vec![p, a2, a3],
            vec![p, a1, a3],
            vec![p, b1, b2],
            vec![p, b2, b3],
            vec![p, b1, b3],
            vec![a1, a2, b1],
            vec![a2, b1, b2],
            vec![a2, a3, b2],
            vec![a3, b2, b3],
            vec![a3, a1, b3],
            vec![a1, b3, b1],
        ];
        let report = validate(2, &facets).unwrap();
        assert!(report.is_closed_pseudomanifold);
        assert!(report.is_connected);
        assert_eq!(report.link_check_2d, Some(false));
        let t = Triangulation::build(2, &facets).unwrap();
        assert_eq!(t.euler_characteristic(), 1);
    }

    #[test]
    fn link_check_passes_on_real_surfaces() {
        for t in [octahedron(), catalog::icosahedron(), catalog::k6_projective_plane()] {
            let lists: Vec<Vec<VertexId>> =
                t.facets().iter().map(|f| f.vertices().to_vec()).collect();
            let report = validate(2, &lists).unwrap();
            assert_eq!(report.link_check_2d, Some(true));
            assert!(t.euler_characteristic() <= 2);
        }
    }

    #[test]
    fn orientability_is_invariant_under_relabeling() {
        let relabel = |t: &Triangulation, shift: u32| {
            let map: BTreeMap<VertexId, VertexId> = t
                .vertices()
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, 1000 - 3 * i as u32 + shift))
                .collect();
            t.relabeled(&map).unwrap()
        };
        for (t, orientable) in [
            (octahedron(), true),
            (catalog::k6_projective_plane(), false),
            (catalog::k7_moebius_torus(), true),
        ] {
            for shift in 0..4 {
                let r = relabel(&t, shift);
                assert_eq!(r.orientability().is_some(), orientable);
                assert_eq!(r.euler_characteristic(), t.euler_characteristic());
            }
        }
    }
}
