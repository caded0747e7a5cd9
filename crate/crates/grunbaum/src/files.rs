//! The native text formats.
//!
//! Complex files: a header `dim <n> vertices <V>` followed by one facet per
//! line as n+1 space-separated 1-based vertex indices. Graph files: a header
//! `graph vertices <V> edges <E>` followed by one edge per line. Coloring
//! files: `kind <facet2|grunbaum|vertex|edge>` and `dim <n>` headers, then
//! one `<sorted item>: <color>` entry per line. `#` starts a comment
//! anywhere; blank lines are ignored.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::{FacetColor, FacetTwoColoring, GrunbaumColoring, VertexColoring};
use crate::complex::{ComplexError, Simplex, Triangulation, VertexId};
use crate::graph::{EdgeColoring, GraphError, SimpleGraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ComplexError),
    #[error(transparent)]
    InvalidGraph(#[from] GraphError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers, comments and blanks
/// stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_complex(text: &str) -> Result<Triangulation, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty file, expected 'dim <n> vertices <V>'"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (dim, declared) = match tokens.as_slice() {
        ["dim", n, "vertices", v] => {
            let dim: usize = n
                .parse()
                .map_err(|_| parse_err(hline, format!("bad dimension '{n}'")))?;
            let v: usize = v
                .parse()
                .map_err(|_| parse_err(hline, format!("bad vertex count '{v}'")))?;
            (dim, v)
        }
        _ => return Err(parse_err(hline, "expected header 'dim <n> vertices <V>'")),
    };
    let mut facets: Vec<Vec<VertexId>> = Vec::new();
    for (lno, line) in lines {
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            let v: u64 = tok
                .parse()
                .map_err(|_| parse_err(lno, format!("bad vertex index '{tok}'")))?;
            if v == 0 || v > declared as u64 {
                return Err(parse_err(
                    lno,
                    format!("vertex index {v} outside 1..={declared}"),
                ));
            }
            facet.push(v as VertexId);
        }
        facets.push(facet);
    }
    let t = Triangulation::build(dim, &facets)?;
    if t.vertex_count() != declared {
        return Err(parse_err(
            0,
            format!(
                "header declares {declared} vertices but {} appear in facets",
                t.vertex_count()
            ),
        ));
    }
    Ok(t)
}

/// Renders with vertices densely renumbered to 1..=V by rank. Catalog
/// complexes already use 1-based labels, so they render verbatim.
pub fn write_complex(t: &Triangulation) -> String {
    let rank: BTreeMap<VertexId, usize> = t
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i + 1))
        .collect();
    let mut out = format!("dim {} vertices {}\n", t.dimension(), t.vertex_count());
    for facet in t.facets() {
        let line = facet
            .vertices()
            .iter()
            .map(|v| rank[v].to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty file, expected 'graph vertices <V> edges <E>'"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (vcount, ecount) = match tokens.as_slice() {
        ["graph", "vertices", v, "edges", e] => {
            let v: usize = v
                .parse()
                .map_err(|_| parse_err(hline, format!("bad vertex count '{v}'")))?;
            let e: usize = e
                .parse()
                .map_err(|_| parse_err(hline, format!("bad edge count '{e}'")))?;
            (v, e)
        }
        _ => {
            return Err(parse_err(
                hline,
                "expected header 'graph vertices <V> edges <E>'",
            ))
        }
    };
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lno, "expected an edge '<u> <v>'"));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&toks) {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(lno, format!("bad vertex index '{tok}'")))?;
            if v == 0 || v > vcount {
                return Err(parse_err(lno, format!("vertex index {v} outside 1..={vcount}")));
            }
            *slot = v - 1;
        }
        edges.push((pair[0], pair[1]));
    }
    if edges.len() != ecount {
        return Err(parse_err(
            0,
            format!("header declares {ecount} edges but {} appear", edges.len()),
        ));
    }
    Ok(SimpleGraph::new(vcount, edges)?)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph vertices {} edges {}\n", g.vertex_count(), g.edge_count());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

/// Which coloring a file carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringKind {
    Facet2,
    Grunbaum,
    Vertex,
    Edge,
}

impl ColoringKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ColoringKind::Facet2 => "facet2",
            ColoringKind::Grunbaum => "grunbaum",
            ColoringKind::Vertex => "vertex",
            ColoringKind::Edge => "edge",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorValue {
    BlackWhite(FacetColor),
    Index(usize),
}

impl std::fmt::Display for ColorValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColorValue::BlackWhite(c) => write!(f, "{c}"),
            ColorValue::Index(i) => write!(f, "{i}"),
        }
    }
}

/// In-memory form of a coloring file: kind, dimension, and sorted items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringDoc {
    pub kind: ColoringKind,
    pub dim: usize,
    pub entries: BTreeMap<Vec<VertexId>, ColorValue>,
}

impl ColoringDoc {
    pub fn from_facet2(dim: usize, c: &FacetTwoColoring) -> ColoringDoc {
        ColoringDoc {
            kind: ColoringKind::Facet2,
            dim,
            entries: c
                .colors()
                .iter()
                .map(|(f, &col)| (f.vertices().to_vec(), ColorValue::BlackWhite(col)))
                .collect(),
        }
    }

    pub fn from_grunbaum(dim: usize, g: &GrunbaumColoring) -> ColoringDoc {
        ColoringDoc {
            kind: ColoringKind::Grunbaum,
            dim,
            entries: g
                .colors()
                .iter()
                .map(|(f, &c)| (f.vertices().to_vec(), ColorValue::Index(c)))
                .collect(),
        }
    }

    pub fn from_vertex(dim: usize, v: &VertexColoring) -> ColoringDoc {
        ColoringDoc {
            kind: ColoringKind::Vertex,
            dim,
            entries: v
                .colors()
                .iter()
                .map(|(&vert, &c)| (vec![vert], ColorValue::Index(c)))
                .collect(),
        }
    }

    /// Graph edge coloring, rendered with 1-based endpoints.
    pub fn from_edge(dim: usize, ec: &EdgeColoring) -> ColoringDoc {
        ColoringDoc {
            kind: ColoringKind::Edge,
            dim,
            entries: ec
                .colors()
                .iter()
                .map(|(&(a, b), &c)| {
                    (
                        vec![a as VertexId + 1, b as VertexId + 1],
                        ColorValue::Index(c),
                    )
                })
                .collect(),
        }
    }

    pub fn to_facet2(&self) -> Option<FacetTwoColoring> {
        if self.kind != ColoringKind::Facet2 {
            return None;
        }
        let mut map = BTreeMap::new();
        for (item, value) in &self.entries {
            let ColorValue::BlackWhite(c) = value else {
                return None;
            };
            map.insert(Simplex::new(item.clone())?, *c);
        }
        Some(FacetTwoColoring::new(map))
    }

    pub fn to_grunbaum(&self) -> Option<GrunbaumColoring> {
        if self.kind != ColoringKind::Grunbaum {
            return None;
        }
        let mut map = BTreeMap::new();
        for (item, value) in &self.entries {
            let ColorValue::Index(c) = value else {
                return None;
            };
            map.insert(Simplex::new(item.clone())?, *c);
        }
        Some(GrunbaumColoring::new(map))
    }

    pub fn to_vertex(&self) -> Option<VertexColoring> {
        if self.kind != ColoringKind::Vertex {
            return None;
        }
        let mut map = BTreeMap::new();
        let mut max_color = 0usize;
        for (item, value) in &self.entries {
            let (&[v], ColorValue::Index(c)) = (item.as_slice(), value) else {
                return None;
            };
            max_color = max_color.max(*c);
            map.insert(v, *c);
        }
        Some(VertexColoring::new(map, max_color + 1))
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringDoc, FormatError> {
    let mut lines = content_lines(text);
    let (kline, kind_line) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty file, expected 'kind <kind>'"))?;
    let kind = match kind_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["kind", "facet2"] => ColoringKind::Facet2,
        ["kind", "grunbaum"] => ColoringKind::Grunbaum,
        ["kind", "vertex"] => ColoringKind::Vertex,
        ["kind", "edge"] => ColoringKind::Edge,
        ["kind", other] => return Err(parse_err(kline, format!("unknown kind '{other}'"))),
        _ => return Err(parse_err(kline, "expected 'kind <facet2|grunbaum|vertex|edge>'")),
    };
    let (dline, dim_line) = lines.next().ok_or_else(|| parse_err(0, "missing 'dim <n>'"))?;
    let dim = match dim_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", n] => n
            .parse::<usize>()
            .map_err(|_| parse_err(dline, format!("bad dimension '{n}'")))?,
        _ => return Err(parse_err(dline, "expected 'dim <n>'")),
    };
    let mut entries = BTreeMap::new();
    for (lno, line) in lines {
        let (item_part, color_part) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lno, "expected '<item>: <color>'"))?;
        let mut item = Vec::new();
        for tok in item_part.split_whitespace() {
            let v: VertexId = tok
                .parse()
                .map_err(|_| parse_err(lno, format!("bad vertex index '{tok}'")))?;
            item.push(v);
        }
        if item.is_empty() {
            return Err(parse_err(lno, "empty item"));
        }
        let sorted = {
            let mut s = item.clone();
            s.sort_unstable();
            s.dedup();
            s
        };
        if sorted != item {
            return Err(parse_err(lno, "items must be sorted vertex tuples"));
        }
        let color_tok = color_part.trim();
        let value = match (kind, color_tok) {
            (ColoringKind::Facet2, "black") => ColorValue::BlackWhite(FacetColor::Black),
            (ColoringKind::Facet2, "white") => ColorValue::BlackWhite(FacetColor::White),
            (ColoringKind::Facet2, other) => {
                return Err(parse_err(lno, format!("expected black/white, got '{other}'")))
            }
            (_, tok) => ColorValue::Index(
                tok.parse::<usize>()
                    .map_err(|_| parse_err(lno, format!("bad color '{tok}'")))?,
            ),
        };
        if entries.insert(item, value).is_some() {
            return Err(parse_err(lno, "duplicate item"));
        }
    }
    Ok(ColoringDoc { kind, dim, entries })
}

pub fn write_coloring(doc: &ColoringDoc) -> String {
    let mut out = format!("kind {}\ndim {}\n", doc.kind.as_str(), doc.dim);
    for (item, value) in &doc.entries {
        let tuple = item
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("{tuple}: {value}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::facet_two_coloring;
    use crate::generators::catalog;

    use proptest::prelude::*;

    #[test]
    fn complex_round_trip() {
        for t in [
            catalog::octahedron(),
            catalog::k7_moebius_torus(),
            catalog::cycle(5),
            crate::generators::cross_polytope(3).0,
        ] {
            let text = write_complex(&t);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, t);
            assert_eq!(write_complex(&back), text);
        }
    }

    #[test]
    fn complex_parse_errors_carry_line_numbers() {
        let err = parse_complex("dim 2 vertices 3\n1 2 3\n1 2 x\n").unwrap_err();
        let FormatError::Parse { line, .. } = err else {
            panic!("expected parse error, got {err:?}");
        };
        assert_eq!(line, 3);

        let err = parse_complex("dim 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 1, .. }));

        // a structurally bad complex surfaces the complex error
        let err = parse_complex("dim 2 vertices 3\n1 2 3\n").unwrap_err();
        assert!(matches!(
            err,
            FormatError::Invalid(ComplexError::NotPseudomanifold { .. })
        ));
    }

    #[test]
    fn comments_and_blanks_are_ignored()  {
        let text = "# a complex\n\ndim 1 vertices 3 # header\n1 2\n2 3 # last\n\n1 3\n";
        let t = parse_complex(text).unwrap();
        assert_eq!(t.facets().len(), 3);
    }

    #[test]
    fn graph_round_trip() {
        for g in [catalog::petersen(), catalog::heawood(), catalog::cube_graph()] {
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn coloring_round_trip_through_text() {
        let oct = catalog::octahedron();
        let c = facet_two_coloring(&oct).unwrap();
        let doc = ColoringDoc::from_facet2(2, &c);
        let text = write_coloring(&doc);
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_facet2().unwrap(), c);
    }

    #[test]
    fn coloring_parse_rejects_unsorted_items_and_duplicates() {
        assert!(matches!(
            parse_coloring("kind grunbaum\ndim 2\n2 1: 0\n"),
            Err(FormatError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_coloring("kind grunbaum\ndim 2\n1 2: 0\n1 2: 1\n"),
            Err(FormatError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_coloring("kind facet2\ndim 2\n1 2 3: 7\n"),
            Err(FormatError::Parse { line: 3, .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn coloring_docs_round_trip(entries in proptest::collection::btree_map(
            proptest::collection::btree_set(1u32..40, 1..4),
            0usize..5,
            1..20,
        )) {
            let doc = ColoringDoc {
                kind: ColoringKind::Grunbaum,
                dim: 2,
                entries: entries
                    .into_iter()
                    .map(|(s, c)| (s.into_iter().collect::<Vec<_>>(), ColorValue::Index(c)))
                    .collect(),
            };
            let text = write_coloring(&doc);
            prop_assert_eq!(parse_coloring(&text).unwrap(), doc);
        }
    }
}
