//! Shared corpus of triangulations and graphs for the integration suites.

use grunbaum::coloring::{facet_two_coloring, FacetTwoColoring};
use grunbaum::complex::Triangulation;
use grunbaum::generators::{
    barycentric_subdivision, bipyramidal_crown, catalog, cross_polytope, glue_canonical,
};
use grunbaum::graph::{facet_adjacency, SimpleGraph};

pub struct CorpusItem {
    pub name: String,
    pub t: Triangulation,
    /// A valid facet 2-coloring when the complex has one.
    pub coloring: Option<FacetTwoColoring>,
}

impl CorpusItem {
    fn plain(name: impl Into<String>, t: Triangulation) -> CorpusItem {
        let coloring = facet_two_coloring(&t);
        CorpusItem {
            name: name.into(),
            t,
            coloring,
        }
    }

    fn colored(name: impl Into<String>, pair: (Triangulation, FacetTwoColoring)) -> CorpusItem {
        CorpusItem {
            name: name.into(),
            t: pair.0,
            coloring: Some(pair.1),
        }
    }
}

/// The full corpus: facet 2-colorable generators' outputs plus catalog
/// complexes (including non-2-colorable ones).
pub fn corpus() -> Vec<CorpusItem> {
    let mut items: Vec<CorpusItem> = Vec::new();

    // catalog surfaces and small spheres
    items.push(CorpusItem::plain("tetrahedron", catalog::tetrahedron()));
    items.push(CorpusItem::plain("octahedron", catalog::octahedron()));
    items.push(CorpusItem::plain("icosahedron", catalog::icosahedron()));
    items.push(CorpusItem::plain(
        "k6_projective_plane",
        catalog::k6_projective_plane(),
    ));
    items.push(CorpusItem::plain(
        "k7_moebius_torus",
        catalog::k7_moebius_torus(),
    ));
    items.push(CorpusItem::plain(
        "triangular_torus_3x3",
        catalog::triangular_torus_3x3(),
    ));
    for n in 2..=4 {
        items.push(CorpusItem::plain(
            format!("simplex_boundary({n})"),
            catalog::simplex_boundary(n),
        ));
    }

    // cycles, odd and even
    for m in 3..=41 {
        items.push(CorpusItem::plain(format!("cycle({m})"), catalog::cycle(m)));
    }

    // cross-polytope boundaries and crowning towers
    for n in 1..=4 {
        items.push(CorpusItem::colored(
            format!("cross_polytope({n})"),
            cross_polytope(n),
        ));
        let (t, c) = cross_polytope(n);
        items.push(CorpusItem::colored(
            format!("crown(cross_polytope({n}))"),
            bipyramidal_crown(&t, &c).expect("valid coloring"),
        ));
    }
    for m in (4..=30).step_by(2) {
        let base = catalog::cycle(m);
        let c = facet_two_coloring(&base).expect("even cycle");
        let crown = bipyramidal_crown(&base, &c).expect("valid coloring");
        items.push(CorpusItem::colored(format!("crown(cycle({m}))"), crown));
    }
    for m in (4..=12).step_by(2) {
        let base = catalog::cycle(m);
        let c = facet_two_coloring(&base).expect("even cycle");
        let (t1, c1) = bipyramidal_crown(&base, &c).expect("valid");
        let (t2, c2) = bipyramidal_crown(&t1, &c1).expect("valid");
        items.push(CorpusItem::colored(format!("crown2(cycle({m}))"), (t2.clone(), c2.clone())));
        if m <= 6 {
            items.push(CorpusItem::colored(
                format!("crown3(cycle({m}))"),
                bipyramidal_crown(&t2, &c2).expect("valid"),
            ));
        }
    }

    // barycentric subdivisions
    for (name, base) in [
        ("tetrahedron", catalog::tetrahedron()),
        ("octahedron", catalog::octahedron()),
        ("icosahedron", catalog::icosahedron()),
        ("k7_moebius_torus", catalog::k7_moebius_torus()),
        ("k6_projective_plane", catalog::k6_projective_plane()),
        ("triangular_torus_3x3", catalog::triangular_torus_3x3()),
        ("simplex_boundary(3)", catalog::simplex_boundary(3)),
        ("cross_polytope(3)", cross_polytope(3).0),
    ] {
        items.push(CorpusItem::plain(
            format!("subdivision({name})"),
            barycentric_subdivision(&base),
        ));
    }
    for m in 3..=16 {
        items.push(CorpusItem::plain(
            format!("subdivision(cycle({m}))"),
            barycentric_subdivision(&catalog::cycle(m)),
        ));
    }
    items.push(CorpusItem::plain(
        "subdivision2(tetrahedron)",
        barycentric_subdivision(&barycentric_subdivision(&catalog::tetrahedron())),
    ));

    // glue chains
    let oct = catalog::octahedron();
    let oct_c = facet_two_coloring(&oct).expect("octahedron is 2-colorable");
    let mut chain = (oct.clone(), oct_c.clone());
    for k in 2..=5 {
        chain = glue_canonical(&chain.0, &chain.1, &oct, &oct_c).expect("glue is valid");
        items.push(CorpusItem::colored(format!("octahedron_chain({k})"), chain.clone()));
    }
    let torus = catalog::k7_moebius_torus();
    let torus_c = facet_two_coloring(&torus).expect("Heawood dual is bipartite");
    items.push(CorpusItem::colored(
        "k7_torus#k7_torus",
        glue_canonical(&torus, &torus_c, &torus, &torus_c).expect("valid"),
    ));
    items.push(CorpusItem::colored(
        "k7_torus#octahedron",
        glue_canonical(&torus, &torus_c, &oct, &oct_c).expect("valid"),
    ));
    let bipyr6 = {
        let base = catalog::cycle(6);
        let c = facet_two_coloring(&base).expect("even cycle");
        bipyramidal_crown(&base, &c).expect("valid")
    };
    items.push(CorpusItem::colored(
        "bipyramid6#bipyramid6",
        glue_canonical(&bipyr6.0, &bipyr6.1, &bipyr6.0, &bipyr6.1).expect("valid"),
    ));
    items.push(CorpusItem::plain(
        "subdivision(octahedron#octahedron)",
        barycentric_subdivision(&glue_canonical(&oct, &oct_c, &oct, &oct_c).expect("valid").0),
    ));

    items
}

/// The facet-2-colorable part of the corpus, each with its coloring.
pub fn colorable_corpus() -> Vec<(String, Triangulation, FacetTwoColoring)> {
    corpus()
        .into_iter()
        .filter_map(|item| item.coloring.map(|c| (item.name, item.t, c)))
        .collect()
}

/// Graphs used by the oracle-equivalence suites: the catalog graphs, small
/// named graphs, and facet-adjacency graphs of small corpus members.
pub fn graph_corpus() -> Vec<(String, SimpleGraph)> {
    let mut graphs: Vec<(String, SimpleGraph)> = vec![
        ("petersen".into(), catalog::petersen()),
        ("cube_graph".into(), catalog::cube_graph()),
        ("heawood".into(), catalog::heawood()),
        ("k4".into(), SimpleGraph::complete(4)),
        ("k5".into(), SimpleGraph::complete(5)),
        ("k33".into(), SimpleGraph::complete_bipartite(3, 3)),
        ("k23".into(), SimpleGraph::complete_bipartite(2, 3)),
        ("star4".into(), SimpleGraph::complete_bipartite(1, 4)),
        ("c5".into(), SimpleGraph::cycle(5)),
        ("c6".into(), SimpleGraph::cycle(6)),
    ];
    for item in corpus() {
        if item.t.facets().len() <= 10 {
            graphs.push((
                format!("A({})", item.name),
                facet_adjacency(&item.t).graph,
            ));
        }
    }
    graphs
}

/// Advances a base-k odometer; false when it wraps to all zeros.
pub fn next_assignment(assignment: &mut [usize], k: usize) -> bool {
    for slot in assignment.iter_mut() {
        *slot += 1;
        if *slot < k {
            return true;
        }
        *slot = 0;
    }
    false
}
