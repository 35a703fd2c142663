//! `tangle` command line: generate, check and render drawings stored as
//! exact JSON.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tangle::arrangement::{build_arrangement, chessboard_coloring};
use tangle::classify::{
    find_disjoint_pair_k4, max_disjoint_set, simplicity, verify_flower, verify_type, SimplicityViolation,
    DEFAULT_BUDGET,
};
use tangle::generators::{
    gen_adjacent_crossing, gen_convex, gen_degenerate_fixture, gen_flower, gen_twisted, gen_type3_geometric,
    oracle_type, FixtureKind, FixtureParams, TypeKind,
};
use tangle::geometry::check_mild_assumptions;
use tangle::geometry::json::{from_json, to_json};
use tangle::sanitizer::{check_stroke_conditions, degeneracy_report, sanitize, SanitizeMode};
use tangle::structures::{
    embed_structure, extract_disjoint_edges, extract_from_drawing, verify_plane_embedding, Certificate, StructureGraph,
};
use tangle::{crossing_matrix, Drawing, Error, Mode};

use render::{render_arrangement, render_drawing, RenderStyle};

const EXIT_VERIFY: u8 = 2;
const EXIT_CONDITION: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "tangle", version, about = "Exact constructions and checks for drawings of complete graphs")]
struct Cli {
    /// Seed for any randomized choice. Every verb is currently deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a drawing from one of the constructive families.
    Generate(GenerateArgs),
    /// Check a property of a drawing; exit 2 with a witness when it fails.
    Verify(VerifyArgs),
    /// Print measurements of a drawing as JSON.
    Analyze(AnalyzeArgs),
    /// Vertex order that draws a structure without crossings in a type.
    Embed(EmbedArgs),
    /// Pairwise disjoint edges from a drawing or a type oracle.
    Extract(ExtractArgs),
    /// Turn a degenerate stroke family into a drawing meeting the mild assumptions.
    Sanitize(SanitizeArgs),
    /// Write an SVG picture of a drawing or its arrangement.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Convex,
    Twisted,
    Flower,
    Type3,
    AdjacentCrossing,
    Fixture,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count; for fixtures, the star size or bundle multiplicity.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Fixture kind: star-center, touching-pair, coincident-bundle or self-crossing.
    #[arg(long)]
    fixture: Option<String>,
    /// Fixture strokes share a vertex.
    #[arg(long)]
    adjacent: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Mild,
    AdjacentSimple,
    SeparateSimple,
    Simple,
    Flower,
    Type,
    DisjointPair,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: Check,
    #[arg(long = "in")]
    input: PathBuf,
    /// Type for `--check type`: I, II or III.
    #[arg(long)]
    kind: Option<String>,
    /// Comma-separated vertex order for `--check type`; identity by default.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Largest set of pairwise disjoint edges.
    #[arg(long)]
    max_disjoint: bool,
    /// Crossing count of every edge pair.
    #[arg(long)]
    matrix: bool,
    /// Touchings, shared pieces, self-crossings and vertex passes.
    #[arg(long)]
    degeneracies: bool,
    /// Stroke conditions A and S.
    #[arg(long)]
    conditions: bool,
}

#[derive(Args)]
struct EmbedArgs {
    /// Structure graph JSON: `{"n": .., "edges": [[u, v], ..]}`.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    kind: String,
    /// Also check the order against the type's oracle.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ExtractArgs {
    /// Drawing to extract from.
    #[arg(long = "in", conflicts_with = "oracle")]
    input: Option<PathBuf>,
    /// Extract from the oracle of this type instead.
    #[arg(long)]
    oracle: Option<String>,
    /// Oracle vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Spacing of the index family on the oracle.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Number of edges wanted.
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct SanitizeArgs {
    #[arg(long, value_parser = ["A", "S"])]
    mode: String,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the degeneracy report, conditions and certificate.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Draw the cells of the arrangement in chessboard colors.
    #[arg(long)]
    arrangement: bool,
    /// Mark crossing points.
    #[arg(long)]
    markers: bool,
    #[arg(long, default_value_t = 800.0)]
    width: f64,
    #[arg(long, default_value_t = 800.0)]
    height: f64,
}

/// Failure of a verb, already mapped to an exit code.
struct Fail {
    code: u8,
    message: String,
    witness: Option<Value>,
}

impl Fail {
    fn io(path: &Path, e: std::io::Error) -> Fail {
        Fail { code: EXIT_IO, message: format!("{}: {e}", path.display()), witness: None }
    }

    fn usage(message: impl Into<String>) -> Fail {
        Fail { code: EXIT_USAGE, message: message.into(), witness: None }
    }

    fn verify(message: impl Into<String>, witness: Value) -> Fail {
        Fail { code: EXIT_VERIFY, message: message.into(), witness: Some(witness) }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::VerificationFailed(_) => EXIT_VERIFY,
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            Error::Format(_) => EXIT_IO,
            _ => EXIT_CONDITION,
        };
        Fail { code, message: e.to_string(), witness: None }
    }
}

type Outcome = Result<(), Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::io(path, e))
}

fn read_drawing(path: &Path) -> Result<Drawing, Fail> {
    Ok(from_json(&read(path)?)?)
}

/// Writes through a temporary file in the same directory, or to stdout.
fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => {
            let tmp = path.with_extension("tmp~");
            fs::write(&tmp, text).map_err(|e| Fail::io(&tmp, e))?;
            fs::rename(&tmp, path).map_err(|e| Fail::io(path, e))
        }
        None => {
            let mut so = std::io::stdout().lock();
            writeln!(so, "{text}").map_err(|e| Fail::io(Path::new("<stdout>"), e))
        }
    }
}

fn budget() -> Result<u64, Fail> {
    match std::env::var("TANGLE_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Fail::usage(format!("TANGLE_BUDGET is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn type_kind(s: &str) -> Result<TypeKind, Fail> {
    s.parse().map_err(|_| Fail::usage(format!("unknown type {s:?}, expected I, II or III")))
}

fn generate(a: GenerateArgs) -> Outcome {
    let d = match a.family {
        Family::Convex => gen_convex(a.n),
        Family::Twisted => gen_twisted(a.n),
        Family::Flower => gen_flower(a.n)?,
        Family::Type3 => gen_type3_geometric(a.n)?,
        Family::AdjacentCrossing => gen_adjacent_crossing(&gen_convex(a.n))?,
        Family::Fixture => {
            let name = a.fixture.as_deref().ok_or_else(|| Fail::usage("--family fixture needs --fixture"))?;
            let kind = FixtureKind::parse(name).ok_or_else(|| Fail::usage(format!("unknown fixture {name:?}")))?;
            gen_degenerate_fixture(kind, FixtureParams { size: a.n, adjacent: a.adjacent })?
        }
    };
    emit(a.out.as_deref(), &to_json(&d))
}

fn verify(a: VerifyArgs) -> Outcome {
    let d = read_drawing(&a.input)?;
    let pair = |p: (tangle::EdgeKey, tangle::EdgeKey)| json!([p.0, p.1]);
    match a.check {
        Check::Mild => {
            let r = check_mild_assumptions(&d);
            if !r.passes() {
                return Err(Fail::verify("mild assumptions violated", json!(r.violations)));
            }
        }
        Check::AdjacentSimple | Check::SeparateSimple | Check::Simple => {
            let r = simplicity(&d)?;
            let ok = match a.check {
                Check::AdjacentSimple => r.adjacent_simple,
                Check::SeparateSimple => r.separate_simple,
                _ => r.simple,
            };
            if !ok {
                let keep = |v: SimplicityViolation| match a.check {
                    Check::AdjacentSimple => v == SimplicityViolation::AdjacentCross,
                    Check::SeparateSimple => v == SimplicityViolation::SeparateMultiCross,
                    _ => true,
                };
                let w: Vec<_> = r.witnesses.iter().filter(|w| keep(w.violation)).collect();
                return Err(Fail::verify("not simple", json!(w)));
            }
        }
        Check::Flower => {
            let r = verify_flower(&d)?;
            if let Some(w) = r.witness {
                return Err(Fail::verify("not a flower drawing", pair(w)));
            }
        }
        Check::Type => {
            let kind = type_kind(a.kind.as_deref().ok_or_else(|| Fail::usage("--check type needs --kind"))?)?;
            let order: Vec<usize> = match &a.order {
                Some(s) => s
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| Fail::usage(format!("bad order entry {t:?}"))))
                    .collect::<Result<_, _>>()?,
                None => (0..d.n()).collect(),
            };
            if order.iter().any(|&v| v >= d.n()) {
                return Err(Fail::usage("order names a vertex outside the drawing"));
            }
            let m = crossing_matrix(&d, Mode::Strict)?;
            let r = verify_type(&m, &order, kind);
            if let Some(w) = r.witness {
                return Err(Fail::verify(format!("not of type {kind}"), json!(w)));
            }
        }
        Check::DisjointPair => {
            let p = find_disjoint_pair_k4(&d)?;
            emit(None, &json!({ "pair": pair(p) }).to_string())?;
            return Ok(());
        }
    }
    emit(None, &json!({ "ok": true }).to_string())
}

fn analyze(a: AnalyzeArgs) -> Outcome {
    let d = read_drawing(&a.input)?;
    let mut out = serde_json::Map::new();
    out.insert("vertices".into(), json!(d.n()));
    out.insert("edges".into(), json!(d.edges.len()));
    let any = a.max_disjoint || a.matrix || a.degeneracies || a.conditions;
    if a.degeneracies || !any {
        out.insert("mild_violations".into(), json!(check_mild_assumptions(&d).violations.len()));
    }
    if a.degeneracies {
        out.insert("degeneracies".into(), json!(degeneracy_report(&d)));
    }
    if a.conditions {
        out.insert("conditions".into(), json!(check_stroke_conditions(&d)));
    }
    if a.max_disjoint || a.matrix || !any {
        let m = crossing_matrix(&d, Mode::Strict)?;
        if a.max_disjoint {
            let set = max_disjoint_set(&m, budget()?)?;
            out.insert("max_disjoint".into(), json!({ "size": set.len(), "edges": set }));
        }
        if a.matrix {
            let rows: Vec<Value> = m.iter().map(|(e, f, p)| json!([e, f, p.crossing_count])).collect();
            out.insert("crossings".into(), json!(rows));
        }
        if !any {
            out.insert("simplicity".into(), json!(tangle::classify::simplicity_of(&m)));
        }
    }
    emit(None, &Value::Object(out).to_string())
}

fn embed(a: EmbedArgs) -> Outcome {
    let g: StructureGraph =
        serde_json::from_str(&read(&a.input)?).map_err(|e| Fail::from(Error::Format(e.to_string())))?;
    let g = StructureGraph::new(g.n, g.edges.clone())?.with_labels(g.labels.unwrap_or_default());
    let kind = type_kind(&a.kind)?;
    let seq = embed_structure(&g, kind)?;
    if a.verify {
        let check = verify_plane_embedding(&g, &seq, &oracle_type(g.n, kind))?;
        if !check.ok {
            return Err(Fail::verify("embedding has a crossing", json!({ "sequence": seq, "pair": check.witness })));
        }
    }
    emit(None, &json!({ "sequence": seq }).to_string())
}

fn extract(a: ExtractArgs) -> Outcome {
    let edges = match (&a.input, &a.oracle) {
        (Some(path), None) => {
            let d = read_drawing(path)?;
            extract_from_drawing(&crossing_matrix(&d, Mode::Strict)?, a.m, budget()?)?
        }
        (None, Some(kind)) => {
            let n = a.n.ok_or_else(|| Fail::usage("--oracle needs --n"))?;
            let o = oracle_type(n, type_kind(kind)?);
            extract_disjoint_edges(&o, &Certificate::for_oracle(&o, a.r), a.m)?
        }
        _ => return Err(Fail::usage("give exactly one of --in and --oracle")),
    };
    emit(None, &json!({ "edges": edges }).to_string())
}

fn sanitize_verb(a: SanitizeArgs) -> Outcome {
    let d = read_drawing(&a.input)?;
    let mode = if a.mode == "A" { SanitizeMode::A } else { SanitizeMode::S };
    let before = degeneracy_report(&d);
    let conditions = check_stroke_conditions(&d);
    let result = sanitize(&d, mode);
    if let Some(path) = &a.report {
        let mut rep = json!({ "mode": a.mode, "degeneracies": before, "conditions": conditions });
        if let Ok(s) = &result {
            rep["kept_vertices"] = json!(s.kept_vertices);
            rep["certificate"] = json!(s.certificate);
        }
        emit(Some(path), &rep.to_string())?;
    }
    let s = result?;
    emit(a.out.as_deref(), &to_json(&s.drawing))
}

fn render_verb(a: RenderArgs) -> Outcome {
    let d = read_drawing(&a.input)?;
    let style = RenderStyle { width: a.width, height: a.height, markers: a.markers, ..RenderStyle::default() };
    style.validate().map_err(Fail::usage)?;
    let svg = if a.arrangement {
        let arr = chessboard_coloring(&build_arrangement(&d.edges)?)?;
        render_arrangement(&d, &arr, &style)
    } else {
        render_drawing(&d, &style)
    };
    emit(a.out.as_deref(), &svg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let _ = cli.seed;
    let outcome = match cli.verb {
        Verb::Generate(a) => generate(a),
        Verb::Verify(a) => verify(a),
        Verb::Analyze(a) => analyze(a),
        Verb::Embed(a) => embed(a),
        Verb::Extract(a) => extract(a),
        Verb::Sanitize(a) => sanitize_verb(a),
        Verb::Render(a) => render_verb(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(w) = f.witness {
                println!("{}", json!({ "ok": false, "witness": w }));
            }
            eprintln!("tangle: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
