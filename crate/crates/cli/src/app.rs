//! Argument parsing and command dispatch.
//!
//! Every command reads JSON (from a file, standard input via `-`, or a
//! `fixtures://` URI), computes with exact arithmetic, and prints one
//! compact JSON object. Exit codes: 0 on success, 1 on a domain error
//! (with a machine-readable error object on standard output), 2 on a
//! usage error (argument parsing, handled by clap).

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use balcox_core::budget::Budget;
use balcox_core::complex::Complex;
use balcox_core::cox::{clear_denominators, ga_expand, is_invariant, laurent_of};
use balcox_core::error::{Error, Result};
use balcox_core::field::FieldSpec;
use balcox_core::graphs::{classify_graph, enumerate_minimal_graphs, is_irreducible_degree_two};
use balcox_core::hypertree::{check_axioms, enumerate_hypertrees, AxiomCheck};
use balcox_core::json::{
    parse, ComplexJson, CurveClassJson, DivisorClassJson, HypertreeJson, ShapeJson,
    WeightedComplexJson,
};
use balcox_core::picard::{divisor_class_of, pair};
use balcox_core::solver::{decide_balanceable_with, is_minimal, nullspace_of};

use crate::fixtures;

#[derive(Parser)]
#[command(
    name = "balcox",
    about = "Exact decisions about balanced weighted complexes and their divisor classes",
    version
)]
pub struct Cli {
    /// Size of the worker thread pool (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct CharArg {
    /// Field characteristic: 0 for the rationals, a prime p for F_p.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide whether a complex admits a fully supported balanced weighting.
    Balance {
        #[command(flatten)]
        field: CharArg,
        /// Complex JSON: a file path, '-' for stdin, or fixtures://NAME.
        input: String,
    },
    /// Decide whether a complex is minimal (one-dimensional nullspace
    /// spanned by a nowhere-zero weighting).
    Minimal {
        #[command(flatten)]
        field: CharArg,
        input: String,
    },
    /// Classify a graph against the catalogue of minimal shapes.
    Classify {
        #[command(flatten)]
        field: CharArg,
        input: String,
    },
    /// Compute the divisor class of a complex.
    Class {
        /// Recompute with this marked-point count instead of the one in
        /// the input.
        #[arg(long)]
        n: Option<u32>,
        input: String,
    },
    /// Pair a curve class against a divisor class.
    Pair {
        curve: String,
        divisor: String,
    },
    /// Test a weighted complex for torus invariance of its Laurent
    /// element alongside the balancing condition.
    Invariance {
        input: String,
    },
    /// Clear denominators of the Laurent element of a weighted complex.
    Clear {
        input: String,
    },
    /// Axiom checks and degree computations for hypertrees.
    #[command(subcommand)]
    Hypertree(HypertreeCommand),
    /// List every hypertree isomorphism class on n vertices.
    EnumerateHypertrees {
        #[arg(long)]
        n: u32,
        /// Largest part size to search (defaults to n).
        #[arg(long = "max-part-size")]
        max_part_size: Option<u32>,
    },
    /// List every minimal graph on at most the given number of vertices.
    EnumerateMinimal {
        #[arg(long)]
        vertices: u32,
        #[command(flatten)]
        field: CharArg,
    },
    /// List fixture names, or print one fixture's JSON.
    Fixtures {
        name: Option<String>,
    },
    /// Aggregated runs: characteristic sweeps and the minimal-graph
    /// catalogue cross-check.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Subcommand)]
pub enum HypertreeCommand {
    /// Check the hypertree axioms, reporting the first violation.
    Check { input: String },
    /// Compute the divisor degree at a vertex (or the common outside
    /// degree when no vertex is given).
    Degree {
        #[arg(long)]
        vertex: Option<u32>,
        input: String,
    },
}

#[derive(Subcommand)]
pub enum ReportCommand {
    /// Balanceability of one complex across a list of characteristics.
    CharSweep {
        /// Comma-separated characteristics, e.g. 0,2,3,5.
        #[arg(long, default_value = "0,2,3,5")]
        chars: String,
        input: String,
    },
    /// Minimal-graph catalogue with a classifier cross-check.
    Catalogue {
        #[arg(long)]
        vertices: u32,
        #[command(flatten)]
        field: CharArg,
    },
}

/// Runs a parsed command line: prints one JSON object and returns the
/// process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool can only be set once.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match dispatch(cli.command) {
        Ok(value) => {
            println!("{value}");
            0
        }
        Err(e) => {
            println!("{}", json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } }));
            1
        }
    }
}

/// Stable machine-readable names for the error variants.
fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidCharacteristic(_) => "invalid-characteristic",
        Error::MismatchedFields { .. } => "mismatched-fields",
        Error::InvalidScalar(_) => "invalid-scalar",
        Error::InvalidComplex(_) => "invalid-complex",
        Error::InvalidWeighting(_) => "invalid-weighting",
        Error::NotBalanced => "not-balanced",
        Error::SearchBudgetExceeded { .. } => "search-budget-exceeded",
        Error::EnumerationBudgetExceeded { .. } => "enumeration-budget-exceeded",
        Error::OracleSizeExceeded { .. } => "oracle-size-exceeded",
        Error::InvalidClass(_) => "invalid-class",
        Error::MismatchedN { .. } => "mismatched-n",
        Error::LabelOutOfRange { .. } => "label-out-of-range",
        Error::InvalidElement(_) => "invalid-element",
        Error::InvalidHypertree(_) => "invalid-hypertree",
        Error::InvalidJson(_) => "invalid-json",
    }
}

/// Resolves an input argument to JSON text: `fixtures://NAME`, `-` for
/// standard input, or a file path.
fn resolve_input(arg: &str) -> Result<String> {
    if let Some(name) = arg.strip_prefix(fixtures::URI_PREFIX) {
        return fixtures::payload(name);
    }
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidJson(format!("reading standard input: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(arg)
        .map_err(|e| Error::InvalidJson(format!("reading {arg}: {e}")))
}

fn read_complex(arg: &str) -> Result<Complex> {
    parse::<ComplexJson>(&resolve_input(arg)?)?.into_complex()
}

fn field_of(arg: &CharArg) -> Result<FieldSpec> {
    FieldSpec::new(arg.characteristic)
}

fn scalars_json(scalars: &[balcox_core::field::Scalar]) -> Value {
    Value::Array(scalars.iter().map(|s| Value::String(s.to_string())).collect())
}

fn dispatch(command: Command) -> Result<Value> {
    let budget = Budget::from_env();
    match command {
        Command::Balance { field, input } => {
            let field = field_of(&field)?;
            let complex = read_complex(&input)?;
            let verdict = decide_balanceable_with(&complex, field, &budget)?;
            Ok(json!({
                "balanceable": verdict.balanceable,
                "witness": verdict.witness.as_deref().map(scalars_json),
                "dim": verdict.nullspace.dimension,
            }))
        }
        Command::Minimal { field, input } => {
            let field = field_of(&field)?;
            let complex = read_complex(&input)?;
            let nullspace = nullspace_of(&complex, field);
            let minimal = nullspace.dimension == 1
                && nullspace.basis[0].iter().all(|x| !x.is_zero());
            Ok(json!({
                "minimal": minimal,
                "dim": nullspace.dimension,
                "witness": if minimal { Some(scalars_json(&nullspace.basis[0])) } else { None },
            }))
        }
        Command::Classify { field, input } => {
            let field = field_of(&field)?;
            let complex = read_complex(&input)?;
            let shape = classify_graph(&complex, field)?;
            let witness = if shape.is_minimal_tag() {
                Some(scalars_json(&nullspace_of(&complex, field).basis[0]))
            } else {
                None
            };
            let irreducible = if complex.n() >= 6 {
                Some(is_irreducible_degree_two(&complex, field)?)
            } else {
                None
            };
            let mut out = serde_json::to_value(ShapeJson::from(shape))
                .expect("shapes serialize to plain objects");
            let object = out.as_object_mut().expect("shape JSON is an object");
            object.insert("minimal".into(), json!(shape.is_minimal_tag()));
            object.insert("witness".into(), witness.unwrap_or(Value::Null));
            object.insert("irreducibleDegreeTwo".into(), json!(irreducible));
            Ok(out)
        }
        Command::Class { n, input } => {
            let complex = read_complex(&input)?;
            let complex = match n {
                Some(n) => Complex::new(n, complex.simplices().to_vec())?,
                None => complex,
            };
            let class = divisor_class_of(&complex)?;
            Ok(serde_json::to_value(DivisorClassJson::of(&class))
                .expect("classes serialize to plain objects"))
        }
        Command::Pair { curve, divisor } => {
            let curve = parse::<CurveClassJson>(&resolve_input(&curve)?)?.into_curve()?;
            let divisor = parse::<DivisorClassJson>(&resolve_input(&divisor)?)?.into_class()?;
            Ok(json!({ "value": pair(&curve, &divisor)? }))
        }
        Command::Invariance { input } => {
            let weighted =
                parse::<WeightedComplexJson>(&resolve_input(&input)?)?.into_weighted()?;
            let element = laurent_of(&weighted);
            let invariant = is_invariant(&element);
            let layers = ga_expand(&element);
            let nonzero_layers: Vec<usize> = layers
                .iter()
                .enumerate()
                .filter(|(_, l)| !l.is_zero())
                .map(|(j, _)| j)
                .collect();
            Ok(json!({
                "invariant": invariant,
                "balanced": weighted.is_balanced(),
                "degree": element.degree(),
                "nonzeroLayers": nonzero_layers,
            }))
        }
        Command::Clear { input } => {
            let weighted =
                parse::<WeightedComplexJson>(&resolve_input(&input)?)?.into_weighted()?;
            let cleared = clear_denominators(&laurent_of(&weighted))?;
            let terms: Vec<Value> = cleared
                .terms()
                .iter()
                .map(|(m, c)| json!({ "monomial": m.to_string(), "coefficient": c.to_string() }))
                .collect();
            Ok(json!({
                "terms": terms,
                "class": serde_json::to_value(DivisorClassJson::of(cleared.pic_class()))
                    .expect("classes serialize to plain objects"),
                "fromInvariant": cleared.from_invariant(),
            }))
        }
        Command::Hypertree(HypertreeCommand::Check { input }) => {
            let dto = parse::<HypertreeJson>(&resolve_input(&input)?)?;
            match check_axioms(dto.n, &dto.parts)? {
                AxiomCheck::Satisfied => Ok(json!({ "satisfied": true, "violation": null })),
                AxiomCheck::Violated(v) => {
                    Ok(json!({ "satisfied": false, "violation": v.to_string() }))
                }
            }
        }
        Command::Hypertree(HypertreeCommand::Degree { vertex, input }) => {
            let tree = parse::<HypertreeJson>(&resolve_input(&input)?)?.into_hypertree()?;
            Ok(json!({ "degree": tree.degree_at(vertex)? }))
        }
        Command::EnumerateHypertrees { n, max_part_size } => {
            let trees = enumerate_hypertrees(n, max_part_size.unwrap_or(n), &budget)?;
            Ok(json!({
                "count": trees.len(),
                "hypertrees": trees
                    .iter()
                    .map(|t| serde_json::to_value(HypertreeJson::of(t))
                        .expect("hypertrees serialize to plain objects"))
                    .collect::<Vec<_>>(),
            }))
        }
        Command::EnumerateMinimal { vertices, field } => {
            let field = field_of(&field)?;
            let graphs = enumerate_minimal_graphs(vertices, field, &budget)?;
            Ok(json!({
                "count": graphs.len(),
                "graphs": graphs
                    .iter()
                    .map(|g| json!({
                        "complex": serde_json::to_value(ComplexJson::of(&g.complex))
                            .expect("complexes serialize to plain objects"),
                        "shape": serde_json::to_value(ShapeJson::from(g.shape))
                            .expect("shapes serialize to plain objects"),
                        "witness": scalars_json(&g.witness),
                    }))
                    .collect::<Vec<_>>(),
            }))
        }
        Command::Fixtures { name } => match name {
            Some(name) => {
                let raw = fixtures::payload(&name)?;
                serde_json::from_str(&raw)
                    .map_err(|e| Error::InvalidJson(format!("fixture {name}: {e}")))
            }
            None => Ok(json!({ "fixtures": fixtures::names() })),
        },
        Command::Report(ReportCommand::CharSweep { chars, input }) => {
            let complex = read_complex(&input)?;
            let mut verdicts = Vec::new();
            for part in chars.split(',') {
                let characteristic: u64 = part.trim().parse().map_err(|_| {
                    Error::InvalidJson(format!("characteristic list entry {part:?} is not a number"))
                })?;
                let field = FieldSpec::new(characteristic)?;
                let verdict = decide_balanceable_with(&complex, field, &budget)?;
                verdicts.push(json!({
                    "char": characteristic,
                    "balanceable": verdict.balanceable,
                    "dim": verdict.nullspace.dimension,
                }));
            }
            Ok(json!({
                "complex": serde_json::to_value(ComplexJson::of(&complex))
                    .expect("complexes serialize to plain objects"),
                "verdicts": verdicts,
            }))
        }
        Command::Report(ReportCommand::Catalogue { vertices, field }) => {
            let field = field_of(&field)?;
            let graphs = enumerate_minimal_graphs(vertices, field, &budget)?;
            let mut mismatches = 0usize;
            let mut rows = Vec::new();
            for g in &graphs {
                let verdict = is_minimal(&g.complex, field);
                if !g.shape.is_minimal_tag() || !verdict {
                    mismatches += 1;
                }
                rows.push(json!({
                    "complex": serde_json::to_value(ComplexJson::of(&g.complex))
                        .expect("complexes serialize to plain objects"),
                    "shape": serde_json::to_value(ShapeJson::from(g.shape))
                        .expect("shapes serialize to plain objects"),
                    "minimal": verdict,
                }));
            }
            Ok(json!({
                "count": graphs.len(),
                "mismatches": mismatches,
                "graphs": rows,
            }))
        }
    }
}
