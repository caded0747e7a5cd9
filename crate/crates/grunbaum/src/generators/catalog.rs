//! Named complexes and graphs used throughout: the equilateral Platonic
//! triangulations, the 6-vertex projective plane, the 7-vertex Möbius
//! torus, cycles, simplex boundaries, and the classic cubic graphs.

use std::collections::BTreeMap;

use super::GeneratorError;
use crate::complex::{Triangulation, VertexId};
use crate::graph::SimpleGraph;

/// A catalog lookup yields either a triangulation or a graph.
#[derive(Debug, Clone)]
pub enum CatalogEntry {
    Complex(Triangulation),
    Graph(SimpleGraph),
}

/// Looks up a named object. Parameterized names: `cycle(m)` and
/// `simplex_boundary(n)`.
pub fn catalog(name: &str) -> Result<CatalogEntry, GeneratorError> {
    let unknown = || GeneratorError::UnknownName {
        name: name.to_string(),
    };
    if let Some(arg) = parse_parameterized(name, "cycle") {
        let m = arg.map_err(|_| unknown())?;
        if m < 3 {
            return Err(unknown());
        }
        return Ok(CatalogEntry::Complex(cycle(m)));
    }
    if let Some(arg) = parse_parameterized(name, "simplex_boundary") {
        let n = arg.map_err(|_| unknown())?;
        if n < 1 {
            return Err(unknown());
        }
        return Ok(CatalogEntry::Complex(simplex_boundary(n)));
    }
    match name {
        "tetrahedron" => Ok(CatalogEntry::Complex(tetrahedron())),
        "octahedron" => Ok(CatalogEntry::Complex(octahedron())),
        "icosahedron" => Ok(CatalogEntry::Complex(icosahedron())),
        "k6_projective_plane" => Ok(CatalogEntry::Complex(k6_projective_plane())),
        "k7_moebius_torus" => Ok(CatalogEntry::Complex(k7_moebius_torus())),
        "triangular_torus_3x3" => Ok(CatalogEntry::Complex(triangular_torus_3x3())),
        "petersen" => Ok(CatalogEntry::Graph(petersen())),
        "cube_graph" => Ok(CatalogEntry::Graph(cube_graph())),
        "heawood" => Ok(CatalogEntry::Graph(heawood())),
        _ => Err(unknown()),
    }
}

/// All fixed (non-parameterized) catalog names, for listings.
pub const NAMES: [&str; 9] = [
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "k6_projective_plane",
    "k7_moebius_torus",
    "triangular_torus_3x3",
    "petersen",
    "cube_graph",
    "heawood",
];

fn parse_parameterized(name: &str, prefix: &str) -> Option<Result<usize, ()>> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.trim().parse::<usize>().map_err(|_| ()))
}

/// Boundary of the (n+1)-simplex: all (n+1)-subsets of n+2 vertices.
pub fn simplex_boundary(n: usize) -> Triangulation {
    assert!(n >= 1);
    use itertools::Itertools;
    let facets: Vec<Vec<VertexId>> = (1..=(n as VertexId + 2))
        .combinations(n + 1)
        .collect();
    Triangulation::build(n, &facets).expect("simplex boundary is valid")
}

/// The tetrahedron boundary: 4 triangles on vertices 1..=4.
pub fn tetrahedron() -> Triangulation {
    simplex_boundary(2)
}

/// The octahedron: antipodal pairs (1,4), (2,5), (3,6); facets take one
/// vertex from each pair, so {1,2,3} and {4,5,6} are opposite faces.
pub fn octahedron() -> Triangulation {
    let mut facets = Vec::with_capacity(8);
    for a in [1u32, 4] {
        for b in [2u32, 5] {
            for c in [3u32, 6] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    Triangulation::build(2, &facets).expect("octahedron is valid")
}

/// The icosahedron on vertices 1..=12: poles 1 and 12, upper pentagon
/// 2..=6, lower pentagon 7..=11.
pub fn icosahedron() -> Triangulation {
    Triangulation::build(2, &icosahedron_faces_1based()).expect("icosahedron is valid")
}

fn icosahedron_faces_1based() -> Vec<Vec<VertexId>> {
    // 0-based layout: pole 0, upper ring 1-5, lower ring 6-10, pole 11
    let faces0: [[u32; 3]; 20] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 7],
        [2, 3, 8],
        [3, 4, 9],
        [4, 5, 10],
        [1, 5, 6],
        [1, 6, 7],
        [2, 7, 8],
        [3, 8, 9],
        [4, 9, 10],
        [5, 6, 10],
        [6, 7, 11],
        [7, 8, 11],
        [8, 9, 11],
        [9, 10, 11],
        [6, 10, 11],
    ];
    faces0
        .iter()
        .map(|f| f.iter().map(|&v| v + 1).collect())
        .collect()
}

/// The 6-vertex triangulation of the projective plane: the antipodal
/// quotient of the icosahedron, with complete 1-skeleton K6.
pub fn k6_projective_plane() -> Triangulation {
    // antipodal pairs of the icosahedron above (0-based):
    // (0,11) (1,9) (2,10) (3,6) (4,7) (5,8)
    let class0: BTreeMap<u32, u32> = [
        (0, 0),
        (11, 0),
        (1, 1),
        (9, 1),
        (2, 2),
        (10, 2),
        (3, 3),
        (6, 3),
        (4, 4),
        (7, 4),
        (5, 5),
        (8, 5),
    ]
    .into_iter()
    .collect();
    let mut facets: Vec<Vec<VertexId>> = icosahedron_faces_1based()
        .into_iter()
        .map(|f| {
            let mut q: Vec<VertexId> = f.iter().map(|&v| class0[&(v - 1)] + 1).collect();
            q.sort_unstable();
            q
        })
        .collect();
    facets.sort();
    facets.dedup();
    debug_assert_eq!(facets.len(), 10);
    Triangulation::build(2, &facets).expect("quotient is valid")
}

/// The 7-vertex Möbius torus on vertices 1..=7: the two facet orbits
/// {i, i+1, i+3} and {i, i+2, i+3} (mod 7), 14 triangles in all.
pub fn k7_moebius_torus() -> Triangulation {
    let mut facets = Vec::with_capacity(14);
    for i in 0u32..7 {
        facets.push(vec![i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        facets.push(vec![i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    Triangulation::build(2, &facets).expect("Möbius torus is valid")
}

/// The 3x3 triangular grid torus: 9 vertices, 18 triangles, tripartite
/// 1-skeleton with classes of size 3.
pub fn triangular_torus_3x3() -> Triangulation {
    let label = |i: u32, j: u32| -> VertexId { 3 * (i % 3) + (j % 3) + 1 };
    let mut facets = Vec::with_capacity(18);
    for i in 0u32..3 {
        for j in 0u32..3 {
            facets.push(vec![label(i, j), label(i + 1, j), label(i, j + 1)]);
            facets.push(vec![label(i + 1, j), label(i, j + 1), label(i + 1, j + 1)]);
        }
    }
    Triangulation::build(2, &facets).expect("triangular torus is valid")
}

/// The m-cycle as a 1-dimensional triangulation on vertices 1..=m.
pub fn cycle(m: usize) -> Triangulation {
    assert!(m >= 3, "cycles need at least three vertices");
    let facets: Vec<Vec<VertexId>> = (0..m as VertexId)
        .map(|i| vec![i + 1, (i + 1) % m as VertexId + 1])
        .collect();
    Triangulation::build(1, &facets).expect("cycle is valid")
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    SimpleGraph::new(10, edges).expect("Petersen graph is simple")
}

/// The 3-cube graph on bit strings 0..8, edges between Hamming neighbors.
pub fn cube_graph() -> SimpleGraph {
    let edges = (0usize..8).flat_map(|v| {
        (0..3).filter_map(move |b| {
            let w = v ^ (1 << b);
            (v < w).then_some((v, w))
        })
    });
    SimpleGraph::new(8, edges).expect("cube graph is simple")
}

/// The Heawood graph, LCF notation [5, -5]^7: a 14-cycle plus chords
/// i -> i+5 from even vertices.
pub fn heawood() -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    SimpleGraph::new(14, edges).expect("Heawood graph is simple")
}
