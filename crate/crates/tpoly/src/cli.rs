//! Command-line definitions and command execution. Every command renders its
//! whole output to a string, which the binary writes in one go.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use tpoly_core::catalog::{Catalog, CatalogError};
use tpoly_core::classify::{classify_polygon, Classification, ClassifyBounds, ClassifyError};
use tpoly_core::laurent::{algebraic_mutation, mmlp, period_coefficients, LaurentError, MmlpError};
use tpoly_core::polygon::{mutation_graph, MutationData, PolygonError};
use tpoly_core::rootlattice::{classify_boundary, make_i1n, RootLatticeError};

use crate::catalog_file::{catalog_to_json, load_catalog, CatalogFileError, CATALOG_ENV};
use crate::corpus::{build_corpus, random_cycle_labels, reproduce, CorpusSpec, Origin, DEFAULT_SEED};
use crate::dot::graph_to_dot;
use crate::formats::{
    read_laurent, read_lattice_vectors, read_point, read_polygon, ClassJson, FingerprintJson, FormatError,
    LaurentJson, MutationJson, PathStepJson, PolygonJson,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    CatalogFile(#[from] CatalogFileError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Mmlp(#[from] MmlpError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Lattice(#[from] RootLatticeError),
    #[error("{0}")]
    Usage(&'static str),
    #[error("format {0:?} is not available for this command")]
    UnsupportedFormat(Format),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Read the input from a file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Give the input inline.
    #[arg(long)]
    pub expr: Option<String>,
}

impl Input {
    fn text(&self) -> Result<String, CliError> {
        match (&self.input, &self.expr) {
            (Some(path), _) => std::fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
            (None, Some(expr)) => Ok(expr.clone()),
            (None, None) => Err(CliError::Usage("one of --input or --expr is required")),
        }
    }
}

#[derive(Debug, Args)]
pub struct CatalogArg {
    /// Catalog JSON file; defaults to the builtin catalog.
    #[arg(long, env = CATALOG_ENV)]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Period coefficients compared against the catalog.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..))]
    pub horizon: u64,
    /// Mutation depth of the maximal-mutability constraints.
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Node bound of the witness search.
    #[arg(long, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_nodes: u64,
    /// Step bound of the witness search.
    #[arg(long, default_value_t = 6)]
    pub search_depth: usize,
}

impl SearchArgs {
    fn bounds(&self) -> ClassifyBounds {
        ClassifyBounds {
            horizon: self.horizon as usize,
            mmlp_depth: self.depth,
            max_nodes: self.max_nodes as usize,
            search_depth: self.search_depth,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tpoly", version, about = "Mutation classes of Fano polygons and Laurent polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a T-polygon against the catalog.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        catalog: CatalogArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Period coefficients c_0..c_horizon of a Laurent polynomial.
    Period {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Mutate a polygon (with --w and --k) or a Laurent polynomial (with --factor).
    Mutate {
        #[command(flatten)]
        input: Input,
        /// Covector v as "a,b".
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// Factor direction w as "c,d", for polygons.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "factor")]
        w: Option<String>,
        /// Factor size k, for polygons.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
        k: i64,
        /// Factor F supported on v-perp, for Laurent polynomials.
        #[arg(long)]
        factor: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The normalized maximally mutable Laurent polynomial of a T-polygon.
    Mmlp {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify a cycle of (-2)-classes in I_(1,9).
    LatticeClassify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the mutation graph of a polygon.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
        max_nodes: u64,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Re-derive every catalog entry and report discrepancies.
    ValidateCatalog {
        #[command(flatten)]
        catalog: CatalogArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the catalog as JSON.
    Catalog {
        #[command(flatten)]
        catalog: CatalogArg,
    },
    /// Classify a seeded corpus of T-polygons.
    Reproduce {
        /// Half-width of the coordinate box for normal forms.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        box_bound: i64,
        /// Number of random mutation walks from catalog representatives.
        #[arg(long, default_value_t = 100)]
        walks: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        catalog: CatalogArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify random cycles built from A_rank chains of E8 roots.
    LatticeSearch {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=8))]
        rank: u64,
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn text_or_json(format: Format, text: String, json: serde_json::Value) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(text),
        Format::Json => Ok(to_json(&json)),
        Format::Dot => Err(CliError::UnsupportedFormat(format)),
    }
}

fn catalog(arg: &CatalogArg) -> Result<Catalog, CliError> {
    Ok(load_catalog(arg.catalog.as_deref())?)
}

fn classification_json(c: &Classification) -> serde_json::Value {
    json!({
        "class_id": c.class_id,
        "invariants": {
            "t_cones": c.invariants.content.t_cones,
            "basket": c.invariants.content.basket.iter().map(|r| json!({"residue": r.residue, "height": r.height})).collect::<Vec<_>>(),
            "normal_index": c.invariants.normal_index,
            "boundary_points": c.invariants.boundary_points,
        },
        "mmlp": LaurentJson::from(&c.mmlp),
        "fingerprint": FingerprintJson::from(&c.fingerprint).coefficients,
        "witness": c.witness.as_ref().map(|w| w.iter().map(PathStepJson::from).collect::<Vec<_>>()),
        "witness_status": if c.witness.is_some() { "found" } else { "not found within bounds" },
    })
}

fn classification_text(c: &Classification) -> String {
    let mut s = String::new();
    writeln!(s, "class: {}", c.class_id).unwrap();
    match &c.witness {
        Some(steps) => {
            writeln!(s, "witness: {} steps", steps.len()).unwrap();
            for (i, step) in steps.iter().enumerate() {
                writeln!(s, "  {}. {} : {} -> {}", i + 1, step.mutation, step.source, step.target).unwrap();
            }
        }
        None => s.push_str("witness: not found within bounds\n"),
    }
    writeln!(s, "singularity content: {}", c.invariants.content).unwrap();
    writeln!(s, "normal vector index: {}", c.invariants.normal_index).unwrap();
    writeln!(s, "boundary points: {}", c.invariants.boundary_points).unwrap();
    writeln!(s, "mmlp: {}", c.mmlp).unwrap();
    writeln!(s, "period: {}", c.fingerprint).unwrap();
    s
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { input, search, catalog: cat, format } => {
            let p = read_polygon(&input.text()?)?;
            let c = classify_polygon(&p, &catalog(cat)?, &search.bounds())?;
            text_or_json(*format, classification_text(&c), classification_json(&c))
        }
        Command::Period { input, horizon, format } => {
            let f = read_laurent(&input.text()?)?;
            let fp = period_coefficients(&f, *horizon);
            text_or_json(*format, format!("{fp}\n"), json!(FingerprintJson::from(&fp)))
        }
        Command::Mutate { input, v, w, k, factor, format } => {
            let v = read_point(v)?;
            let text = input.text()?;
            match (factor, w) {
                (Some(factor), _) => {
                    let f = read_laurent(&text)?;
                    let g = algebraic_mutation(&f, v, &read_laurent(factor)?)?;
                    text_or_json(*format, format!("{g}\n"), json!(LaurentJson::from(&g)))
                }
                (None, Some(w)) => {
                    let p = read_polygon(&text)?;
                    let m = MutationData::new(v, read_point(w)?, *k)?;
                    let q = p.mutate(&m)?;
                    text_or_json(*format, format!("{q}\n"), json!(PolygonJson::from(&q)))
                }
                (None, None) => Err(CliError::Usage("mutate needs --w (polygon) or --factor (Laurent polynomial)")),
            }
        }
        Command::Mmlp { input, depth, format } => {
            let p = read_polygon(&input.text()?)?;
            // mmlp fails unless the solution is unique
            let f = mmlp(&p, *depth)?;
            let text = format!("{f}\nuniqueness dimension: 0\n");
            text_or_json(*format, text, json!({"terms": LaurentJson::from(&f).terms, "uniqueness_dimension": 0}))
        }
        Command::LatticeClassify { input, format } => {
            let components = read_lattice_vectors(&input.text()?)?;
            let c = classify_boundary(&components, &make_i1n(9))?;
            let text = format!("rank: {}\nprimitive: {}\nlabel: {}\n", c.rank, c.primitive, c.label);
            text_or_json(*format, text, json!(ClassJson::from(&c)))
        }
        Command::Graph { input, depth, max_nodes, format } => {
            let p = read_polygon(&input.text()?)?;
            let g = mutation_graph(&p, *max_nodes as usize, *depth);
            match format {
                Format::Dot => Ok(graph_to_dot(&g)),
                Format::Json => Ok(to_json(&json!({
                    "nodes": g.nodes.iter().map(PolygonJson::from).collect::<Vec<_>>(),
                    "depths": g.depths,
                    "edges": g.edges.iter().map(|e| json!({"from": e.from, "to": e.to, "mutation": MutationJson::from(&e.mutation)})).collect::<Vec<_>>(),
                    "truncated": g.truncated,
                }))),
                Format::Text => {
                    let mut s = String::new();
                    for (i, (n, d)) in g.nodes.iter().zip(&g.depths).enumerate() {
                        writeln!(s, "node {i} depth {d}: {n}").unwrap();
                    }
                    for e in &g.edges {
                        writeln!(s, "edge {} -- {}: {}", e.from, e.to, e.mutation).unwrap();
                    }
                    writeln!(s, "truncated: {}", g.truncated).unwrap();
                    Ok(s)
                }
            }
        }
        Command::ValidateCatalog { catalog: cat, format } => {
            let report = catalog(cat)?.validate();
            let mut text = String::new();
            for e in &report.entries {
                let status = if e.is_clean() { "ok".to_string() } else { format!("{} discrepancies", e.discrepancies.len()) };
                writeln!(text, "entry {}: {status}; period {}", e.id, e.oracle).unwrap();
                for d in &e.discrepancies {
                    writeln!(text, "  - {d}").unwrap();
                }
            }
            writeln!(text, "data consistent: {}", report.data_consistent()).unwrap();
            let json = json!({
                "data_consistent": report.data_consistent(),
                "entries": report.entries.iter().map(|e| json!({
                    "id": e.id,
                    "oracle": FingerprintJson::from(&e.oracle).coefficients,
                    "is_t_polygon": e.is_t_polygon,
                    "normal_index": e.invariants.normal_index,
                    "t_cones": e.invariants.content.t_cones,
                    "discrepancies": e.discrepancies.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            text_or_json(*format, text, json)
        }
        Command::Catalog { catalog: cat } => {
            let mut s = catalog_to_json(&catalog(cat)?);
            s.push('\n');
            Ok(s)
        }
        Command::Reproduce { box_bound, walks, max_steps, seed, search, catalog: cat, format } => {
            let cat = catalog(cat)?;
            let spec = CorpusSpec { box_bound: *box_bound, walks: *walks, max_steps: *max_steps as usize, seed: *seed };
            let corpus = build_corpus(&cat, &spec);
            let from_box = corpus.iter().filter(|i| i.origin == Origin::Box).count();
            let r = reproduce(&cat, corpus, &search.bounds());
            let sizes = r.class_sizes();
            let indices = r.normal_indices();
            let mut text = String::new();
            writeln!(text, "corpus: {} polygons ({from_box} from the box, {walks} walks)", r.results.len()).unwrap();
            writeln!(text, "classes: {}", sizes.len()).unwrap();
            let sizes_text: Vec<String> = sizes.iter().map(|(id, n)| format!("{id}:{n}")).collect();
            writeln!(text, "class sizes: {}", sizes_text.join(" ")).unwrap();
            for (id, idx) in &indices {
                writeln!(text, "normal indices of class {id}: {idx:?}").unwrap();
            }
            writeln!(text, "walks leaving their class: {}", r.walk_mismatches()).unwrap();
            writeln!(text, "errors: {}", r.errors()).unwrap();
            writeln!(text, "witnesses found: {}/{}", r.witnesses_found(), r.results.len()).unwrap();
            let json = json!({
                "corpus_size": r.results.len(),
                "from_box": from_box,
                "classes": sizes.len(),
                "class_sizes": sizes,
                "normal_indices": indices,
                "walk_mismatches": r.walk_mismatches(),
                "errors": r.errors(),
                "witnesses_found": r.witnesses_found(),
            });
            text_or_json(*format, text, json)
        }
        Command::LatticeSearch { rank, samples, seed, format } => {
            let counts = random_cycle_labels(*rank as usize, *samples as usize, *seed);
            let mut text = String::new();
            for (label, n) in &counts {
                writeln!(text, "{label}: {n}").unwrap();
            }
            let json = json!(counts.iter().map(|(l, n)| (l.to_string(), *n)).collect::<std::collections::BTreeMap<_, _>>());
            text_or_json(*format, text, json)
        }
    }
}
