//! Operators producing new facet 2-colorable triangulations from old ones:
//! barycentric subdivision, bipyramidal crowning, the glue (connected-sum)
//! operator, cross-polytope boundaries, and the catalog of named complexes
//! and graphs.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::coloring::{facet_two_coloring, FacetColor, FacetTwoColoring};
use crate::complex::{ComplexError, Simplex, Triangulation, VertexId};

pub mod catalog;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("facet 2-coloring is not valid for this triangulation")]
    InvalidTwoColoring,
    #[error("facet {{{facet}}} does not have the required color ({expected})")]
    WrongColor {
        facet: Simplex,
        expected: FacetColor,
    },
    #[error("facet {{{facet}}} is not a facet of the triangulation")]
    NoSuchFacet { facet: Simplex },
    #[error("map is not a bijection between the two facets' vertex sets")]
    BadBijection,
    #[error("glued complex is invalid: {0}")]
    Invalid(#[from] ComplexError),
    #[error("unknown catalog name '{name}'")]
    UnknownName { name: String },
}

/// First barycentric subdivision: one new vertex per face of every
/// dimension, facets are the full flags of faces. New vertices are keyed by
/// the canonical face tuple and densely renumbered (1-based) in
/// lexicographic order. Multiplies the facet count by (n+1)!.
pub fn barycentric_subdivision(t: &Triangulation) -> Triangulation {
    let n = t.dimension();
    let mut face_id: BTreeMap<Simplex, VertexId> = BTreeMap::new();
    for k in 0..=n {
        for face in t.faces(k).expect("k in range") {
            face_id.insert(face, 0);
        }
    }
    // BTreeMap iterates lexicographically; assign dense 1-based ids
    let mut next: VertexId = 1;
    for id in face_id.values_mut() {
        *id = next;
        next += 1;
    }
    let mut new_facets: Vec<Vec<VertexId>> = Vec::with_capacity(t.facets().len() * (1..=n + 1).product::<usize>());
    for facet in t.facets() {
        for perm in facet.vertices().iter().copied().permutations(n + 1) {
            let flag: Vec<VertexId> = (0..=n)
                .map(|k| {
                    let face = Simplex::new(perm[..=k].to_vec()).expect("distinct prefix");
                    face_id[&face]
                })
                .collect();
            new_facets.push(flag);
        }
    }
    Triangulation::build(n, &new_facets).expect("subdivision of a valid complex is valid")
}

/// Bipyramidal crowning: new peaks N and S, northern cone facets keep the
/// base facet's color, southern cone facets take the opposite color. The
/// result is a facet 2-colored triangulation one dimension up, with twice
/// as many facets.
pub fn bipyramidal_crown(
    t: &Triangulation,
    c: &FacetTwoColoring,
) -> Result<(Triangulation, FacetTwoColoring), GeneratorError> {
    if !c.is_valid_for(t) {
        return Err(GeneratorError::InvalidTwoColoring);
    }
    let max = *t.vertices().last().expect("non-empty");
    let (north, south) = (max + 1, max + 2);
    let mut facets = Vec::with_capacity(2 * t.facets().len());
    let mut colors = BTreeMap::new();
    for f in t.facets() {
        let base_color = c.color_of(f).expect("valid coloring is total");
        for (apex, color) in [(north, base_color), (south, base_color.opposite())] {
            let cone = f.join(apex).expect("apex is fresh");
            facets.push(cone.vertices().to_vec());
            colors.insert(cone, color);
        }
    }
    let crowned = Triangulation::build(t.dimension() + 1, &facets)
        .expect("crown of a valid complex is valid");
    Ok((crowned, FacetTwoColoring::new(colors)))
}

/// The glue operator (connected sum): identifies a black facet of `t` with a
/// white facet of `r` along `bijection` (black-facet vertex -> white-facet
/// vertex), deletes both facets, and keeps one copy of the identified
/// boundary. Vertices of `r` outside the glued facet receive fresh labels.
pub fn glue(
    t: &Triangulation,
    ct: &FacetTwoColoring,
    r: &Triangulation,
    cr: &FacetTwoColoring,
    black_facet: &Simplex,
    white_facet: &Simplex,
    bijection: &BTreeMap<VertexId, VertexId>,
) -> Result<(Triangulation, FacetTwoColoring), GeneratorError> {
    if !ct.is_valid_for(t) || !cr.is_valid_for(r) {
        return Err(GeneratorError::InvalidTwoColoring);
    }
    for (complex, facet) in [(t, black_facet), (r, white_facet)] {
        if !complex.facets().contains(facet) {
            return Err(GeneratorError::NoSuchFacet {
                facet: facet.clone(),
            });
        }
    }
    if ct.color_of(black_facet) != Some(FacetColor::Black) {
        return Err(GeneratorError::WrongColor {
            facet: black_facet.clone(),
            expected: FacetColor::Black,
        });
    }
    if cr.color_of(white_facet) != Some(FacetColor::White) {
        return Err(GeneratorError::WrongColor {
            facet: white_facet.clone(),
            expected: FacetColor::White,
        });
    }
    // bijection must map the black facet's vertex set onto the white facet's
    let domain: Vec<VertexId> = bijection.keys().copied().collect();
    let image: std::collections::BTreeSet<VertexId> = bijection.values().copied().collect();
    if domain != black_facet.vertices()
        || image.len() != bijection.len()
        || !image.iter().eq(white_facet.vertices().iter())
    {
        return Err(GeneratorError::BadBijection);
    }
    let inverse: BTreeMap<VertexId, VertexId> =
        bijection.iter().map(|(&k, &v)| (v, k)).collect();

    // relabel r: glued vertices through the bijection, the rest fresh
    let mut fresh = *t.vertices().last().expect("non-empty") + 1;
    let mut relabel: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for &v in r.vertices() {
        if let Some(&w) = inverse.get(&v) {
            relabel.insert(v, w);
        } else {
            relabel.insert(v, fresh);
            fresh += 1;
        }
    }

    let mut facets: Vec<Vec<VertexId>> = Vec::new();
    let mut colors: BTreeMap<Simplex, FacetColor> = BTreeMap::new();
    for f in t.facets() {
        if f == black_facet {
            continue;
        }
        facets.push(f.vertices().to_vec());
        colors.insert(f.clone(), ct.color_of(f).expect("total"));
    }
    for f in r.facets() {
        if f == white_facet {
            continue;
        }
        let mapped: Vec<VertexId> = f.vertices().iter().map(|v| relabel[v]).collect();
        let simplex = Simplex::new(mapped.clone()).expect("relabeling is injective");
        facets.push(mapped);
        colors.insert(simplex, cr.color_of(f).expect("total"));
    }
    let glued = Triangulation::build(t.dimension(), &facets)?;
    Ok((glued, FacetTwoColoring::new(colors)))
}

/// Glue along the canonical choice: the first black facet of `t`, the first
/// white facet of `r`, and the order-preserving bijection between their
/// sorted vertex tuples.
pub fn glue_canonical(
    t: &Triangulation,
    ct: &FacetTwoColoring,
    r: &Triangulation,
    cr: &FacetTwoColoring,
) -> Result<(Triangulation, FacetTwoColoring), GeneratorError> {
    let black = t
        .facets()
        .iter()
        .find(|f| ct.color_of(f) == Some(FacetColor::Black))
        .ok_or(GeneratorError::InvalidTwoColoring)?;
    let white = r
        .facets()
        .iter()
        .find(|f| cr.color_of(f) == Some(FacetColor::White))
        .ok_or(GeneratorError::InvalidTwoColoring)?;
    let bijection: BTreeMap<VertexId, VertexId> = black
        .vertices()
        .iter()
        .copied()
        .zip(white.vertices().iter().copied())
        .collect();
    glue(t, ct, r, cr, black, white, &bijection)
}

/// Boundary complex of the (n+1)-cross-polytope: antipodal vertex pairs
/// (2i+1, 2i+2), one facet per sign pattern, colored by the parity of
/// negative choices. A facet 2-colored triangulation of the n-sphere with
/// 2^(n+1) facets.
pub fn cross_polytope(n: usize) -> (Triangulation, FacetTwoColoring) {
    assert!(n >= 1, "cross-polytope boundary needs n >= 1");
    let pairs = n + 1;
    let mut facets = Vec::with_capacity(1usize << pairs);
    let mut colors = BTreeMap::new();
    for pattern in 0u32..(1u32 << pairs) {
        let facet: Vec<VertexId> = (0..pairs)
            .map(|i| 2 * i as VertexId + 1 + ((pattern >> i) & 1))
            .collect();
        let color = if pattern.count_ones() % 2 == 0 {
            FacetColor::Black
        } else {
            FacetColor::White
        };
        let simplex = Simplex::new(facet.clone()).expect("one vertex per pair");
        facets.push(facet);
        colors.insert(simplex, color);
    }
    let t = Triangulation::build(n, &facets).expect("cross-polytope boundary is valid");
    (t, FacetTwoColoring::new(colors))
}

/// Facet 2-coloring of a subdivision obtained operationally, by running the
/// bipartition on the subdivided complex's facet-adjacency graph.
pub fn subdivision_two_coloring(subdivided: &Triangulation) -> Option<FacetTwoColoring> {
    facet_two_coloring(subdivided)
}
