//! What a Grünbaum hyper-coloring buys you: quadrangulations from dropped
//! edge classes (n = 2), bipyramid-style cell merges (n >= 3), and scalene
//! volume labelings.

use std::collections::BTreeMap;

use super::{verify_grunbaum, ColoringError, GrunbaumColoring};
use crate::complex::{Simplex, Triangulation, VertexId};

/// A 2-manifold quadrangulation: all original vertices, the surviving
/// edges, and quadrilateral faces given as 4-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadrangulation {
    vertices: Vec<VertexId>,
    edges: Vec<Simplex>,
    faces: Vec<[VertexId; 4]>,
}

impl Quadrangulation {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Simplex] {
        &self.edges
    }

    /// Faces as cycles: consecutive entries (wrapping) are edges.
    pub fn faces(&self) -> &[[VertexId; 4]] {
        &self.faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Every face is a 4-cycle over surviving edges and every edge lies in
    /// exactly two faces.
    pub fn is_valid(&self) -> bool {
        let mut incident: BTreeMap<Simplex, usize> =
            self.edges.iter().map(|e| (e.clone(), 0)).collect();
        for quad in &self.faces {
            if quad.iter().collect::<std::collections::BTreeSet<_>>().len() != 4 {
                return false;
            }
            for i in 0..4 {
                let e = Simplex::new(vec![quad[i], quad[(i + 1) % 4]]).expect("distinct corners");
                match incident.get_mut(&e) {
                    Some(count) => *count += 1,
                    None => return false,
                }
            }
        }
        incident.values().all(|&c| c == 2)
    }
}

/// Removes every edge of one color class from a Grünbaum-colored 2-manifold
/// triangulation; each dropped edge merges its two triangles into one
/// quadrilateral. Vertex set and Euler characteristic are preserved.
pub fn quadrangulate(
    t: &Triangulation,
    g: &GrunbaumColoring,
    drop: usize,
) -> Result<Quadrangulation, ColoringError> {
    if t.dimension() != 2 {
        return Err(ColoringError::BadDimension {
            got: t.dimension(),
            expected: "n = 2".into(),
        });
    }
    if drop > 2 || !verify_grunbaum(t, g)? {
        return Err(ColoringError::InvalidColoring);
    }
    let incidence = t.ridge_incidence();
    let mut faces = Vec::new();
    let mut edges = Vec::new();
    for (edge, ids) in &incidence {
        if g.color_of(edge).expect("verified total") != drop {
            edges.push(edge.clone());
            continue;
        }
        let (t1, t2) = (&t.facets()[ids[0]], &t.facets()[ids[1]]);
        let (a, b) = (edge.vertices()[0], edge.vertices()[1]);
        let third = |tri: &Simplex| {
            tri.vertices()
                .iter()
                .copied()
                .find(|&v| v != a && v != b)
                .expect("triangle has a third vertex")
        };
        let (c, d) = (third(t1), third(t2));
        faces.push(canonical_cycle([c, a, d, b]));
    }
    faces.sort_unstable();
    Ok(Quadrangulation {
        vertices: t.vertices().to_vec(),
        edges,
        faces,
    })
}

/// Canonical form of a 4-cycle: start at the smallest vertex, walk toward
/// its smaller neighbor.
fn canonical_cycle(cycle: [VertexId; 4]) -> [VertexId; 4] {
    let start = (0..4).min_by_key(|&i| cycle[i]).expect("nonempty");
    let fwd: [VertexId; 4] = std::array::from_fn(|i| cycle[(start + i) % 4]);
    let bwd: [VertexId; 4] = std::array::from_fn(|i| cycle[(start + 4 - i) % 4]);
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

/// Two facets merged across a dropped (n-1)-face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedCell {
    pub facets: (Simplex, Simplex),
    pub interface: Simplex,
}

/// The cell report for color-class removal in dimension n >= 3: facet pairs
/// only, no topological cell-type verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDecomposition {
    cells: Vec<MergedCell>,
}

impl CellDecomposition {
    pub fn cells(&self) -> &[MergedCell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

/// Removes all (n-1)-faces of one color from a Grünbaum-hyper-colored
/// triangulation of dimension n >= 3. Every facet has exactly one boundary
/// face of the dropped color, so the facets pair up into |facets|/2 cells.
pub fn remove_color_class(
    t: &Triangulation,
    g: &GrunbaumColoring,
    drop: usize,
) -> Result<CellDecomposition, ColoringError> {
    let n = t.dimension();
    if n < 3 {
        return Err(ColoringError::BadDimension {
            got: n,
            expected: "n >= 3".into(),
        });
    }
    if drop > n || !verify_grunbaum(t, g)? {
        return Err(ColoringError::InvalidColoring);
    }
    let mut cells = Vec::new();
    for (face, ids) in t.ridge_incidence() {
        if g.color_of(&face).expect("verified total") == drop {
            let (a, b) = (t.facets()[ids[0]].clone(), t.facets()[ids[1]].clone());
            cells.push(MergedCell {
                facets: (a, b),
                interface: face,
            });
        }
    }
    cells.sort_unstable_by(|x, y| x.facets.cmp(&y.facets));
    debug_assert_eq!(cells.len() * 2, t.facets().len());
    Ok(CellDecomposition { cells })
}

/// Whether the palette's geometric coherence was actually checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoherenceCheck {
    /// n = 2: the strict triangle inequality holds on the palette.
    TriangleInequality,
    /// n != 2: only distinctness was validated.
    Unchecked,
}

/// Prescribed (n-1)-volumes standing in for colors: constant on each color
/// class, pairwise different within every facet.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleneLabeling {
    value: BTreeMap<Simplex, f64>,
    palette: Vec<f64>,
    coherence: CoherenceCheck,
}

impl ScaleneLabeling {
    pub fn value_of(&self, face: &Simplex) -> Option<f64> {
        self.value.get(face).copied()
    }

    pub fn values(&self) -> &BTreeMap<Simplex, f64> {
        &self.value
    }

    pub fn palette(&self) -> &[f64] {
        &self.palette
    }

    pub fn coherence(&self) -> CoherenceCheck {
        self.coherence
    }

    /// The defining property: the n+1 boundary values of every facet are
    /// pairwise different.
    pub fn is_valid_for(&self, t: &Triangulation) -> bool {
        t.facets().iter().all(|facet| {
            let vals: Vec<f64> = facet
                .boundary()
                .map(|f| self.value_of(&f).unwrap_or(f64::NAN))
                .collect();
            vals.iter().all(|v| v.is_finite())
                && vals
                    .iter()
                    .enumerate()
                    .all(|(i, v)| vals[i + 1..].iter().all(|w| v != w))
        })
    }
}

/// Assigns palette[color] to every (n-1)-face of a Grünbaum-hyper-colored
/// triangulation. The palette must hold n+1 positive, pairwise distinct
/// reals; for n = 2 the strict triangle inequality is enforced, for other
/// dimensions geometric coherence is reported as unchecked.
pub fn scalene_labeling(
    t: &Triangulation,
    g: &GrunbaumColoring,
    palette: &[f64],
) -> Result<ScaleneLabeling, ColoringError> {
    let n = t.dimension();
    if palette.len() != n + 1 {
        return Err(ColoringError::BadPalette {
            got: palette.len(),
            expected: n + 1,
        });
    }
    if !verify_grunbaum(t, g)? {
        return Err(ColoringError::InvalidColoring);
    }
    if palette.iter().any(|&x| !(x > 0.0) || !x.is_finite()) {
        return Err(ColoringError::NotDistinct);
    }
    let mut sorted = palette.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ColoringError::NotDistinct);
    }
    let coherence = if n == 2 {
        if sorted[0] + sorted[1] <= sorted[2] {
            return Err(ColoringError::TriangleInequalityViolated);
        }
        CoherenceCheck::TriangleInequality
    } else {
        CoherenceCheck::Unchecked
    };
    let value = t
        .ridges()
        .into_iter()
        .map(|face| {
            let c = g.color_of(&face).expect("verified total");
            (face, palette[c])
        })
        .collect();
    Ok(ScaleneLabeling {
        value,
        palette: palette.to_vec(),
        coherence,
    })
}
