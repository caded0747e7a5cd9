//! The `grunbaum` command line tool: validation, invariants, colorings,
//! counting, snark checks, and the generation operators, over the native
//! text formats.
//!
//! Exit codes: 0 on success, 1 for negative verdicts (NONE: a valid query
//! whose answer is "no such coloring"), 2 for malformed input, bad flags or
//! violated preconditions.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coloring::{
    count_grunbaum_nonisomorphic, enumerate_grunbaum, exact_grunbaum, facet_two_coloring,
    grunbaum_from_two_coloring, grunbaum_from_vertex4, grunbaum_tripartite, quadrangulate,
    tripartition_by_exact_coloring, vertex_coloring_exact, GrunbaumColoring,
};
use crate::complex::Triangulation;
use crate::files::{
    parse_complex, parse_graph, write_complex, write_coloring, write_graph, ColoringDoc,
};
use crate::generators::{
    barycentric_subdivision, bipyramidal_crown, catalog::catalog, catalog::CatalogEntry,
    cross_polytope, glue_canonical,
};
use crate::graph::{exact_edge_coloring, facet_adjacency, is_snark, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "grunbaum",
    version,
    about = "Triangulations of closed n-manifolds: validation, facet 2-colorings, Gr\u{fc}nbaum hyper-colorings, generators"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Recorded in output headers; reserved for future randomized features
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exact backtracking over the (n-1)-faces
    Exact,
    /// Facet 2-coloring, then König edge coloring of A(T)
    Theorem1,
    /// Vertex 4-coloring and the pair-class rule (n = 2)
    Lemma1,
    /// Vertex 3-coloring and the tripartite rule (n = 2)
    Tripartite,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural validation of a complex file
    Validate { input: String },
    /// Face counts, Euler characteristic, orientability, evenness
    Invariants { input: String },
    /// Facet 2-coloring, NONE if A(T) is not bipartite
    TwoColor { input: String },
    /// Grünbaum hyper-coloring by the chosen method
    Grunbaum {
        input: String,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
    },
    /// Number of Grünbaum hyper-colorings up to isomorphism
    CountColorings { input: String },
    /// Snark test for a graph (or the facet-adjacency graph of a complex)
    Snark {
        input: String,
        /// Write the Tait coloring here when one exists
        #[arg(long)]
        coloring_out: Option<String>,
    },
    /// First barycentric subdivision
    Subdivide { input: String },
    /// Bipyramidal crowning (needs a facet 2-colorable input)
    Crown {
        input: String,
        /// Write the crowned facet 2-coloring here
        #[arg(long)]
        coloring_out: Option<String>,
    },
    /// Glue (connected sum) along canonical black/white facets
    Glue {
        left: String,
        right: String,
        #[arg(long)]
        coloring_out: Option<String>,
    },
    /// Boundary complex of the (n+1)-cross-polytope
    CrossPolytope {
        n: usize,
        #[arg(long)]
        coloring_out: Option<String>,
    },
    /// Remove one color class from a Grünbaum-colored 2-manifold
    Quadrangulate {
        input: String,
        #[arg(long, value_enum, default_value = "theorem1")]
        method: Method,
        /// Color class to remove
        #[arg(long, default_value_t = 0)]
        drop: usize,
    },
    /// Emit a named complex or graph
    Catalog { name: String },
}

/// Runs the CLI against explicit streams; returns the exit code.
pub fn run_with_io(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    match dispatch(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

struct Ctx<'a> {
    json: bool,
    seed: Option<u64>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// Writes one result: text (with the seed header when given) or JSON
    /// (with a "seed" field when given).
    fn emit(&mut self, text: &str, mut value: Value) -> Result<(), String> {
        if self.json {
            if let (Some(seed), Some(obj)) = (self.seed, value.as_object_mut()) {
                obj.insert("seed".into(), json!(seed));
            }
            let rendered = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
            writeln!(self.out, "{rendered}")
        } else {
            if let Some(seed) = self.seed {
                writeln!(self.out, "# seed {seed}").map_err(|e| e.to_string())?;
            }
            write!(self.out, "{text}")
        }
        .map_err(|e| e.to_string())
    }

    fn none_verdict(&mut self, what: &str) -> Result<i32, String> {
        self.emit(
            "NONE\n",
            json!({"verdict": "none", "query": what}),
        )?;
        Ok(1)
    }
}

fn read_input(path: &str, stdin: &mut dyn BufRead) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_complex(path: &str, stdin: &mut dyn BufRead) -> Result<Triangulation, String> {
    parse_complex(&read_input(path, stdin)?).map_err(|e| e.to_string())
}

fn complex_value(t: &Triangulation) -> Value {
    json!({
        "dim": t.dimension(),
        "vertices": t.vertex_count(),
        "facets": t.facets().iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>(),
    })
}

fn coloring_doc_value(doc: &ColoringDoc) -> Value {
    json!({
        "kind": doc.kind.as_str(),
        "dim": doc.dim,
        "entries": doc
            .entries
            .iter()
            .map(|(item, color)| json!({"item": item, "color": color.to_string()}))
            .collect::<Vec<_>>(),
    })
}

fn write_side_coloring(path: &Option<String>, doc: &ColoringDoc) -> Result<(), String> {
    if let Some(path) = path {
        std::fs::write(path, write_coloring(doc)).map_err(|e| format!("writing {path}: {e}"))?;
    }
    Ok(())
}

fn grunbaum_by_method(
    t: &Triangulation,
    method: Method,
) -> Result<Option<GrunbaumColoring>, String> {
    match method {
        Method::Exact => exact_grunbaum(t).map_err(|e| e.to_string()),
        Method::Theorem1 => match facet_two_coloring(t) {
            None => Ok(None),
            Some(c) => grunbaum_from_two_coloring(t, &c)
                .map(Some)
                .map_err(|e| e.to_string()),
        },
        Method::Lemma1 => match vertex_coloring_exact(t, 4) {
            None => Ok(None),
            Some(v) => grunbaum_from_vertex4(t, &v)
                .map(Some)
                .map_err(|e| e.to_string()),
        },
        Method::Tripartite => match tripartition_by_exact_coloring(t) {
            None => Ok(None),
            Some(parts) => grunbaum_tripartite(t, &parts)
                .map(Some)
                .map_err(|e| e.to_string()),
        },
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, String> {
    let mut ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        out,
    };
    match &cli.cmd {
        Cmd::Validate { input } => {
            let t = load_complex(input, stdin)?;
            // re-run the report for the link flag
            let lists: Vec<Vec<u32>> = t.facets().iter().map(|f| f.vertices().to_vec()).collect();
            let report = crate::complex::validate(t.dimension(), &lists)
                .map_err(|e| e.to_string())?;
            let link = report
                .link_check_2d
                .map(|ok| ok.to_string())
                .unwrap_or_else(|| "n/a".into());
            let text = format!(
                "status valid\ndim {}\nvertices {}\nfacets {}\nlink_check_2d {}\n",
                t.dimension(),
                t.vertex_count(),
                t.facets().len(),
                link
            );
            let value = json!({
                "command": "validate",
                "status": "valid",
                "dim": t.dimension(),
                "vertices": t.vertex_count(),
                "facets": t.facets().len(),
                "link_check_2d": report.link_check_2d,
            });
            ctx.emit(&text, value)?;
            Ok(0)
        }
        Cmd::Invariants { input } => {
            let t = load_complex(input, stdin)?;
            let f_vector: Vec<usize> = (0..=t.dimension())
                .map(|k| t.faces(k).expect("in range").len())
                .collect();
            let orientable = t.orientability().is_some();
            let even = (t.dimension() == 2).then(|| t.is_even().expect("n = 2"));
            let degree = t.dimension() + 1;
            let mut text = format!(
                "dim {}\nvertices {}\nfacets {}\nf_vector {}\neuler_characteristic {}\norientable {}\n",
                t.dimension(),
                t.vertex_count(),
                t.facets().len(),
                f_vector
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                t.euler_characteristic(),
                orientable,
            );
            if let Some(even) = even {
                text.push_str(&format!("even {even}\n"));
            }
            text.push_str(&format!("facet_adjacency_regular {degree}\n"));
            let value = json!({
                "command": "invariants",
                "dim": t.dimension(),
                "vertices": t.vertex_count(),
                "facets": t.facets().len(),
                "f_vector": f_vector,
                "euler_characteristic": t.euler_characteristic(),
                "orientable": orientable,
                "even": even,
                "facet_adjacency_regular": degree,
            });
            ctx.emit(&text, value)?;
            Ok(0)
        }
        Cmd::TwoColor { input } => {
            let t = load_complex(input, stdin)?;
            match facet_two_coloring(&t) {
                None => ctx.none_verdict("facet 2-coloring"),
                Some(c) => {
                    let doc = ColoringDoc::from_facet2(t.dimension(), &c);
                    let mut value = coloring_doc_value(&doc);
                    value["command"] = json!("two-color");
                    ctx.emit(&write_coloring(&doc), value)?;
                    Ok(0)
                }
            }
        }
        Cmd::Grunbaum { input, method } => {
            let t = load_complex(input, stdin)?;
            match grunbaum_by_method(&t, *method)? {
                None => ctx.none_verdict("Grünbaum hyper-coloring"),
                Some(g) => {
                    let doc = ColoringDoc::from_grunbaum(t.dimension(), &g);
                    let mut value = coloring_doc_value(&doc);
                    value["command"] = json!("grunbaum");
                    ctx.emit(&write_coloring(&doc), value)?;
                    Ok(0)
                }
            }
        }
        Cmd::CountColorings { input } => {
            let t = load_complex(input, stdin)?;
            let total = enumerate_grunbaum(&t).map_err(|e| e.to_string())?.len();
            let classes = count_grunbaum_nonisomorphic(&t).map_err(|e| e.to_string())?;
            let text = format!("colorings {total}\nnonisomorphic {classes}\n");
            let value = json!({
                "command": "count-colorings",
                "colorings": total,
                "nonisomorphic": classes,
            });
            ctx.emit(&text, value)?;
            Ok(0)
        }
        Cmd::Snark {
            input,
            coloring_out,
        } => {
            let text_in = read_input(input, stdin)?;
            let first = text_in
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let g: SimpleGraph = if first.starts_with("graph") {
                parse_graph(&text_in).map_err(|e| e.to_string())?
            } else {
                let t = parse_complex(&text_in).map_err(|e| e.to_string())?;
                facet_adjacency(&t).graph
            };
            let cubic = g.regular_degree() == Some(3);
            let bridgeless = g.is_bridgeless();
            let connected = g.is_connected();
            let tait = exact_edge_coloring(&g, 3);
            let snark = is_snark(&g);
            if let Some(ec) = &tait {
                write_side_coloring(coloring_out, &ColoringDoc::from_edge(1, ec))?;
            }
            let text = format!(
                "cubic {cubic}\nconnected {connected}\nbridgeless {bridgeless}\ntait_colorable {}\nsnark {snark}\n",
                tait.is_some()
            );
            let value = json!({
                "command": "snark",
                "cubic": cubic,
                "connected": connected,
                "bridgeless": bridgeless,
                "tait_colorable": tait.is_some(),
                "snark": snark,
            });
            ctx.emit(&text, value)?;
            Ok(if snark { 0 } else { 1 })
        }
        Cmd::Subdivide { input } => {
            let t = load_complex(input, stdin)?;
            let sub = barycentric_subdivision(&t);
            let mut value = complex_value(&sub);
            value["command"] = json!("subdivide");
            ctx.emit(&write_complex(&sub), value)?;
            Ok(0)
        }
        Cmd::Crown {
            input,
            coloring_out,
        } => {
            let t = load_complex(input, stdin)?;
            match facet_two_coloring(&t) {
                None => ctx.none_verdict("facet 2-coloring of the base"),
                Some(c) => {
                    let (crowned, cc) = bipyramidal_crown(&t, &c).map_err(|e| e.to_string())?;
                    write_side_coloring(
                        coloring_out,
                        &ColoringDoc::from_facet2(crowned.dimension(), &cc),
                    )?;
                    let mut value = complex_value(&crowned);
                    value["command"] = json!("crown");
                    ctx.emit(&write_complex(&crowned), value)?;
                    Ok(0)
                }
            }
        }
        Cmd::Glue {
            left,
            right,
            coloring_out,
        } => {
            if left == "-" && right == "-" {
                return Err("at most one of the glue inputs may be stdin".into());
            }
            let lt = load_complex(left, stdin)?;
            let rt = load_complex(right, stdin)?;
            let (Some(lc), Some(rc)) = (facet_two_coloring(&lt), facet_two_coloring(&rt)) else {
                return ctx.none_verdict("facet 2-colorings of both pieces");
            };
            let (glued, gc) = glue_canonical(&lt, &lc, &rt, &rc).map_err(|e| e.to_string())?;
            write_side_coloring(coloring_out, &ColoringDoc::from_facet2(glued.dimension(), &gc))?;
            let mut value = complex_value(&glued);
            value["command"] = json!("glue");
            ctx.emit(&write_complex(&glued), value)?;
            Ok(0)
        }
        Cmd::CrossPolytope { n, coloring_out } => {
            if *n < 1 {
                return Err("cross-polytope needs n >= 1".into());
            }
            let (t, c) = cross_polytope(*n);
            write_side_coloring(coloring_out, &ColoringDoc::from_facet2(t.dimension(), &c))?;
            let mut value = complex_value(&t);
            value["command"] = json!("cross-polytope");
            ctx.emit(&write_complex(&t), value)?;
            Ok(0)
        }
        Cmd::Quadrangulate {
            input,
            method,
            drop,
        } => {
            let t = load_complex(input, stdin)?;
            match grunbaum_by_method(&t, *method)? {
                None => ctx.none_verdict("Grünbaum hyper-coloring"),
                Some(g) => {
                    let q = quadrangulate(&t, &g, *drop).map_err(|e| e.to_string())?;
                    let mut text = format!(
                        "quad vertices {} edges {} faces {}\n",
                        q.vertices().len(),
                        q.edges().len(),
                        q.faces().len()
                    );
                    for face in q.faces() {
                        text.push_str(&format!(
                            "{}\n",
                            face.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        ));
                    }
                    let value = json!({
                        "command": "quadrangulate",
                        "vertices": q.vertices(),
                        "edges": q.edges().iter().map(|e| e.vertices().to_vec()).collect::<Vec<_>>(),
                        "faces": q.faces(),
                        "euler_characteristic": q.euler_characteristic(),
                    });
                    ctx.emit(&text, value)?;
                    Ok(0)
                }
            }
        }
        Cmd::Catalog { name } => match catalog(name).map_err(|e| e.to_string())? {
            CatalogEntry::Complex(t) => {
                let mut value = complex_value(&t);
                value["command"] = json!("catalog");
                ctx.emit(&write_complex(&t), value)?;
                Ok(0)
            }
            CatalogEntry::Graph(g) => {
                let value = json!({
                    "command": "catalog",
                    "graph": true,
                    "vertices": g.vertex_count(),
                    "edges": g.edges().iter().map(|&(a, b)| vec![a + 1, b + 1]).collect::<Vec<_>>(),
                });
                ctx.emit(&write_graph(&g), value)?;
                Ok(0)
            }
        },
    }
}

/// Library-level entry point used by the binary.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_with_io(args, &mut stdin.lock(), &mut stdout, &mut stderr)
}
