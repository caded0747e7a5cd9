use super::*;
use crate::generators::catalog;

use proptest::prelude::*;

/// Oracle: does a proper k-edge-coloring exist? Scans all k^m assignments.
fn edge_colorable_bruteforce(g: &SimpleGraph, k: usize) -> bool {
    let m = g.edge_count();
    assert!(m <= 12, "oracle is exponential");
    let mut assignment = vec![0usize; m];
    loop {
        let proper = (0..g.vertex_count()).all(|v| {
            let mut seen = vec![false; k];
            g.neighbors(v).iter().all(|&w| {
                let c = assignment[g.edge_index(v, w).unwrap()];
                if seen[c] {
                    false
                } else {
                    seen[c] = true;
                    true
                }
            })
        });
        if proper {
            return true;
        }
        // next assignment in base k
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            assignment[i] += 1;
            if assignment[i] < k {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Oracle: exhaustive odd-cycle search by enumerating simple paths that close
/// into cycles, anchored at their minimum vertex.
fn has_odd_cycle_bruteforce(g: &SimpleGraph) -> bool {
    fn extend(g: &SimpleGraph, start: usize, path: &mut Vec<usize>, on_path: &mut Vec<bool>) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path.len() % 2 == 1 {
                return true;
            }
            if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                if extend(g, start, path, on_path) {
                    return true;
                }
                on_path[w] = false;
                path.pop();
            }
        }
        false
    }
    for start in 0..g.vertex_count() {
        let mut on_path = vec![false; g.vertex_count()];
        on_path[start] = true;
        if extend(g, start, &mut vec![start], &mut on_path) {
            return true;
        }
    }
    false
}

#[test]
fn facet_adjacency_of_octahedron_is_the_cube_graph() {
    let fa = facet_adjacency(&catalog::octahedron());
    assert_eq!(fa.graph.vertex_count(), 8);
    assert_eq!(fa.graph.regular_degree(), Some(3));
    assert!(fa.graph.is_isomorphic_to(&catalog::cube_graph()));
    // every edge corresponds to the face shared by its endpoints
    for (idx, &(a, b)) in fa.graph.edges().iter().enumerate() {
        let face = &fa.shared_faces[idx];
        let (fa_, fb_) = (
            &catalog::octahedron().facets()[a].clone(),
            &catalog::octahedron().facets()[b].clone(),
        );
        assert!(face.vertices().iter().all(|&v| fa_.contains(v) && fb_.contains(v)));
    }
}

#[test]
fn facet_adjacency_of_tetrahedron_is_k4() {
    let fa = facet_adjacency(&catalog::tetrahedron());
    assert!(fa.graph.is_isomorphic_to(&SimpleGraph::complete(4)));
}

#[test]
fn facet_adjacency_of_a_cycle_is_the_cycle_itself() {
    let fa = facet_adjacency(&catalog::cycle(6));
    assert!(fa.graph.is_isomorphic_to(&SimpleGraph::cycle(6)));
}

#[test]
fn facet_adjacency_of_k7_torus_is_heawood() {
    let fa = facet_adjacency(&catalog::k7_moebius_torus());
    assert_eq!(fa.graph.vertex_count(), 14);
    assert_eq!(fa.graph.regular_degree(), Some(3));
    assert!(fa.graph.is_isomorphic_to(&catalog::heawood()));
    let b = bipartition(&fa.graph).expect("Heawood graph is bipartite");
    assert_eq!(b.side_vertices(0).len(), 7);
    assert_eq!(b.side_vertices(1).len(), 7);
    // exhaustive edge check
    assert!(fa.graph.edges().iter().all(|&(x, y)| b.side(x) != b.side(y)));
}

#[test]
fn bipartition_of_cube_and_k4() {
    let b = bipartition(&catalog::cube_graph()).unwrap();
    assert_eq!(b.side_vertices(0).len(), 4);
    assert_eq!(b.side_vertices(1).len(), 4);

    let err = bipartition(&SimpleGraph::complete(4)).unwrap_err();
    let GraphError::NotBipartite { odd_cycle } = err else {
        panic!("expected NotBipartite");
    };
    assert_eq!(odd_cycle.len(), 3);
    // witness must be a real cycle
    let g = SimpleGraph::complete(4);
    for i in 0..odd_cycle.len() {
        assert!(g.has_edge(odd_cycle[i], odd_cycle[(i + 1) % odd_cycle.len()]));
    }
}

#[test]
fn matching_sizes() {
    let c6 = SimpleGraph::cycle(6);
    let m = max_bipartite_matching(&c6, &bipartition(&c6).unwrap()).unwrap();
    assert_eq!(m.len(), 3);
    assert!(m.is_perfect_for(&c6));

    let cube = catalog::cube_graph();
    let m = max_bipartite_matching(&cube, &bipartition(&cube).unwrap()).unwrap();
    assert_eq!(m.len(), 4);
    assert!(m.is_perfect_for(&cube));

    let star = SimpleGraph::complete_bipartite(1, 3);
    let m = max_bipartite_matching(&star, &bipartition(&star).unwrap()).unwrap();
    assert_eq!(m.len(), 1);
}

#[test]
fn invalid_bipartition_is_rejected() {
    let c6 = SimpleGraph::cycle(6);
    let bad = Bipartition { side: vec![0; 6] };
    assert!(matches!(
        max_bipartite_matching(&c6, &bad),
        Err(GraphError::InvalidBipartition)
    ));
}

#[test]
fn koenig_coloring_on_c6_cube_and_k33() {
    let c6 = SimpleGraph::cycle(6);
    let ec = regular_bipartite_edge_coloring(&c6, 2).unwrap();
    assert!(ec.is_proper_for(&c6));
    assert_eq!(ec.class(0).len(), 3);
    assert_eq!(ec.class(1).len(), 3);

    for (g, d) in [(catalog::cube_graph(), 3), (SimpleGraph::complete_bipartite(3, 3), 3)] {
        let ec = regular_bipartite_edge_coloring(&g, d).unwrap();
        assert!(ec.is_proper_for(&g));
        // the d classes partition the edges into perfect matchings
        let mut total = 0;
        for c in 0..d {
            let class = ec.class(c);
            total += class.len();
            let m = Matching { edges: class };
            assert!(m.is_perfect_for(&g));
        }
        assert_eq!(total, g.edge_count());
    }
}

#[test]
fn koenig_rejects_wrong_inputs() {
    assert!(matches!(
        regular_bipartite_edge_coloring(&SimpleGraph::cycle(6), 3),
        Err(GraphError::NotRegular { expected: 3 })
    ));
    assert!(matches!(
        regular_bipartite_edge_coloring(&SimpleGraph::cycle(5), 2),
        Err(GraphError::NotBipartite { .. })
    ));
}

#[test]
fn petersen_has_no_tait_coloring() {
    assert!(exact_edge_coloring(&catalog::petersen(), 3).is_none());
    assert!(exact_edge_coloring(&catalog::petersen(), 4).is_some());
}

#[test]
fn k4_and_cube_are_tait_colorable() {
    for g in [SimpleGraph::complete(4), catalog::cube_graph()] {
        let ec = exact_edge_coloring(&g, 3).expect("Tait coloring exists");
        assert!(ec.is_proper_for(&g));
    }
}

#[test]
fn exact_coloring_agrees_with_bruteforce_on_small_graphs() {
    let cases: Vec<SimpleGraph> = vec![
        SimpleGraph::complete(4),
        catalog::cube_graph(),
        SimpleGraph::cycle(5),
        SimpleGraph::cycle(6),
        SimpleGraph::complete_bipartite(3, 3),
        SimpleGraph::complete_bipartite(2, 3),
        SimpleGraph::complete(5), // 10 edges
    ];
    for g in cases {
        for k in 1..=4 {
            assert_eq!(
                exact_edge_coloring(&g, k).is_some(),
                edge_colorable_bruteforce(&g, k),
                "mismatch on k = {k}"
            );
        }
    }
}

#[test]
fn snark_verdicts() {
    assert!(is_snark(&catalog::petersen()));
    assert!(!is_snark(&SimpleGraph::complete(4)));
    assert!(!is_snark(&catalog::cube_graph()));
    assert!(!is_snark(&SimpleGraph::cycle(5))); // not cubic
}

/// Two K4's, each with one edge subdivided, joined at the subdivision
/// vertices: cubic, connected, chromatic index 4, but bridged — not a snark.
#[test]
fn bridged_cubic_graph_is_not_a_snark() {
    let mut edges = Vec::new();
    // K4 on 0..4 with edge (2,3) subdivided through 4
    edges.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]);
    // K4 on 5..9 with edge (7,8) subdivided through 9
    edges.extend([(5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 9), (8, 9)]);
    edges.push((4, 9)); // the bridge
    let g = SimpleGraph::new(10, edges).unwrap();
    assert_eq!(g.regular_degree(), Some(3));
    assert!(g.is_connected());
    assert_eq!(g.bridges(), vec![(4, 9)]);
    assert!(exact_edge_coloring(&g, 3).is_none());
    assert!(!is_snark(&g));
}

#[test]
fn bridges_of_paths_and_cycles() {
    let path = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(path.bridges(), vec![(0, 1), (1, 2), (2, 3)]);
    assert!(SimpleGraph::cycle(5).is_bridgeless());
    let lollipop = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    assert!(lollipop.is_bridgeless());
    let pendant = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
    assert_eq!(pendant.bridges(), vec![(2, 3)]);
}

#[test]
fn skeleton_of_octahedron() {
    let (g, labels) = skeleton(&catalog::octahedron());
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 12);
    assert_eq!(g.regular_degree(), Some(4));
    assert_eq!(labels, vec![1, 2, 3, 4, 5, 6]);
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let all_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let m = all_edges.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges = all_edges
                .iter()
                .copied()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e);
            SimpleGraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bipartition_matches_odd_cycle_oracle(g in arbitrary_graph(8)) {
        let verdict = bipartition(&g).is_ok();
        prop_assert_eq!(verdict, !has_odd_cycle_bruteforce(&g));
    }

    #[test]
    fn exact_edge_coloring_matches_bruteforce(g in arbitrary_graph(5), k in 1usize..4) {
        prop_assume!(g.edge_count() <= 10);
        let got = exact_edge_coloring(&g, k);
        if let Some(ec) = &got {
            prop_assert!(ec.is_proper_for(&g));
        }
        prop_assert_eq!(got.is_some(), edge_colorable_bruteforce(&g, k));
    }

    #[test]
    fn snark_verdict_is_relabeling_invariant(
        p10 in Just((0..10usize).collect::<Vec<_>>()).prop_shuffle(),
        p8 in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        prop_assert!(is_snark(&catalog::petersen().relabeled(&p10).unwrap()));
        prop_assert!(!is_snark(&catalog::cube_graph().relabeled(&p8).unwrap()));
    }
}
