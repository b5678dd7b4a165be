//! The `dncat` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
//! input data.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::arquiver::{phi, ArQuiver};
use crate::catalog::Catalog;
use crate::error::Error;
use crate::geometry::{Polygon, TaggedEdge, MAX_SUPPORTED_N};
use crate::quiver::{quiver_of, relations_of, Quiver};
use crate::triangulation::{check_bound, classes, enumerate_all, Triangulation, TriangulationType, DEFAULT_MAX_N};
use crate::verify::{Suite, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Environment variable naming the catalog root directory.
pub const CATALOG_ENV: &str = "DNCAT_DIR";
const DEFAULT_CATALOG_DIR: &str = "dncat-catalog";

#[derive(Parser, Debug)]
#[command(name = "dncat", version, about = "Triangulations of the punctured polygon and quivers of type D")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of boundary vertices.
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,
    /// Emit Graphviz DOT.
    #[arg(long, global = true)]
    dot: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    /// Raise the enumeration bound (default 9, at most 11).
    #[arg(long = "max-n", global = true, value_name = "N")]
    max_n: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the tagged edges of the polygon.
    Edges,
    /// Enumerate all triangulations.
    Enumerate {
        /// Print only the number of results.
        #[arg(long)]
        count: bool,
        /// Group into classes under rotation and tag swap.
        #[arg(long)]
        classes: bool,
        /// Keep only triangulations of type 1, 2, 3 or 4.
        #[arg(long = "type", value_name = "K", value_parser = clap::value_parser!(u8).range(1..=4))]
        kind: Option<u8>,
    },
    /// List the equivalence classes with orbit sizes and types.
    Classes {
        #[arg(long = "type", value_name = "K", value_parser = clap::value_parser!(u8).range(1..=4))]
        kind: Option<u8>,
    },
    /// Quiver of a triangulation.
    Quiver {
        /// Comma-separated edge tokens, e.g. `p:1-3,p:1-4,p:1-5,s:1:+,s:1:-`.
        #[arg(long, value_name = "SPEC")]
        edges: String,
        /// Also print the relations.
        #[arg(long)]
        relations: bool,
    },
    /// Relations of the cluster-tilted algebra of a triangulation.
    Relations {
        #[arg(long, value_name = "SPEC")]
        edges: String,
    },
    /// Flip one edge of a triangulation.
    Flip {
        #[arg(long, value_name = "SPEC")]
        edges: String,
        /// The edge to replace.
        #[arg(long, value_name = "EDGE")]
        at: String,
    },
    /// The Auslander-Reiten quiver and the edge correspondence.
    Ar {
        /// Draw each column `i` as one rank in DOT output.
        #[arg(long)]
        ranks: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
    },
    /// Build or inspect the on-disk catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Enumerate and write the catalog for `--n`.
    Build {
        /// Catalog root (default: $DNCAT_DIR, else ./dncat-catalog).
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
    /// Read, check and summarise the catalog for `--n`.
    Show {
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
}

/// Command failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedSize { .. } => EXIT_USAGE,
            Error::ModelInconsistency(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    global: &'a Global,
    out: String,
}

impl Ctx<'_> {
    fn polygon(&self) -> Result<Polygon, Failure> {
        let n = self.global.n.ok_or_else(|| usage("--n is required for this command"))?;
        Ok(check_bound(n, self.max_n())?)
    }

    fn max_n(&self) -> u32 {
        self.global.max_n.unwrap_or(DEFAULT_MAX_N)
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json(&mut self, v: &impl serde::Serialize) {
        let text = serde_json::to_string_pretty(v).expect("serializable");
        self.line(text);
    }

    fn triangulation(&self, spec: &str) -> Result<Triangulation, Failure> {
        Ok(Triangulation::parse(self.polygon()?, spec)?)
    }
}

/// Runs the command line with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line on explicit arguments (including the program name)
/// and output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(m) = cli.global.max_n {
        if m > MAX_SUPPORTED_N {
            let _ = writeln!(err, "error: --max-n {m} exceeds the supported maximum {MAX_SUPPORTED_N}");
            return EXIT_USAGE;
        }
        if m > DEFAULT_MAX_N {
            let _ = writeln!(err, "warning: --max-n {m} raises the default bound {DEFAULT_MAX_N}; enumeration grows exponentially in n");
        }
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx { global: &cli.global, out: String::new() };
    let result = pool.install(|| dispatch(&cli.command, &mut ctx));
    let (code, message) = match result {
        Ok(code) => (code, None),
        Err(f) => (f.code, Some(f.message)),
    };
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, &ctx.out) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
    } else {
        let _ = out.write_all(ctx.out.as_bytes());
    }
    if let Some(m) = message {
        let _ = writeln!(err, "error: {m}");
    }
    code
}

fn dispatch(command: &Command, ctx: &mut Ctx) -> Outcome {
    match command {
        Command::Edges => edges(ctx),
        Command::Enumerate { count, classes: false, kind } => enumerate(ctx, *count, *kind),
        Command::Enumerate { count, classes: true, kind } => list_classes(ctx, *count, *kind),
        Command::Classes { kind } => list_classes(ctx, false, *kind),
        Command::Quiver { edges, relations } => quiver(ctx, edges, *relations),
        Command::Relations { edges } => relations(ctx, edges),
        Command::Flip { edges, at } => flip(ctx, edges, at),
        Command::Ar { ranks } => ar(ctx, *ranks),
        Command::Verify { suite } => verify(ctx, suite),
        Command::Catalog { action } => catalog(ctx, action),
    }
}

fn no_dot(ctx: &Ctx, what: &str) -> Result<(), Failure> {
    if ctx.global.dot {
        return Err(usage(format!("--dot is not available for {what}")));
    }
    Ok(())
}

fn edges(ctx: &mut Ctx) -> Outcome {
    no_dot(ctx, "edges")?;
    let p = ctx.polygon()?;
    let rows: Vec<(TaggedEdge, u32, crate::geometry::EdgeClass)> =
        p.all_edges().into_iter().map(|e| (e, p.length(&e), p.classify(&e))).collect();
    if ctx.global.json {
        let v: Vec<_> = rows.iter().map(|(e, len, class)| json!({"edge": e.to_string(), "length": len, "class": class})).collect();
        ctx.json(&v);
    } else {
        for (e, len, class) in rows {
            let len = if e.is_spoke() { "-".to_string() } else { len.to_string() };
            ctx.line(format!("{e:<8} {len:>3}  {class:?}"));
        }
    }
    Ok(EXIT_OK)
}

fn type_filter(kind: Option<u8>) -> Option<TriangulationType> {
    kind.and_then(TriangulationType::from_number)
}

fn enumerate(ctx: &mut Ctx, count: bool, kind: Option<u8>) -> Outcome {
    no_dot(ctx, "enumerate")?;
    let p = ctx.polygon()?;
    let filter = type_filter(kind);
    let mut all = enumerate_all(p);
    if let Some(k) = filter {
        let types = all.iter().map(Triangulation::classify_type).collect::<Result<Vec<_>, _>>()?;
        all = all.into_iter().zip(types).filter(|(_, t)| *t == k).map(|(t, _)| t).collect();
    }
    match (count, ctx.global.json) {
        (true, false) => ctx.line(all.len().to_string()),
        (true, true) => ctx.line(json!({"n": p.n(), "count": all.len()}).to_string()),
        (false, false) => {
            for t in &all {
                ctx.line(t.to_string());
            }
        }
        (false, true) => {
            for t in &all {
                ctx.line(serde_json::to_string(t).expect("serializable"));
            }
        }
    }
    Ok(EXIT_OK)
}

fn list_classes(ctx: &mut Ctx, count: bool, kind: Option<u8>) -> Outcome {
    no_dot(ctx, "classes")?;
    let p = ctx.polygon()?;
    let all = enumerate_all(p);
    let mut found = classes(&all)?;
    let census: Vec<(TriangulationType, usize)> =
        TriangulationType::ALL.iter().map(|&k| (k, found.iter().filter(|c| c.kind == k).count())).collect();
    if let Some(k) = type_filter(kind) {
        found.retain(|c| c.kind == k);
    }
    if count {
        if ctx.global.json {
            ctx.line(json!({"n": p.n(), "count": found.len()}).to_string());
        } else {
            ctx.line(found.len().to_string());
        }
        return Ok(EXIT_OK);
    }
    if ctx.global.json {
        let list: Vec<_> =
            found.iter().map(|c| json!({"representative": c.representative, "orbitSize": c.orbit_size, "type": c.kind})).collect();
        let census: serde_json::Map<String, serde_json::Value> = census.iter().map(|(k, c)| (k.to_string(), json!(c))).collect();
        ctx.json(&json!({"n": p.n(), "classes": list, "census": census}));
    } else {
        for c in &found {
            ctx.line(format!("{}  orbit={}  {}", c.representative, c.orbit_size, c.kind));
        }
        let text: Vec<String> = census.iter().map(|(k, c)| format!("{k}: {c}")).collect();
        ctx.line(format!("# census {}", text.join(", ")));
    }
    Ok(EXIT_OK)
}

fn quiver_text(q: &Quiver<TaggedEdge>) -> String {
    let mut s = String::new();
    let vertices: Vec<String> = q.labels().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "vertices: {}", vertices.join(", "));
    for (i, j) in q.arrows() {
        let _ = writeln!(s, "{} -> {}", q.label(i), q.label(j));
    }
    s.pop();
    s
}

fn quiver(ctx: &mut Ctx, spec: &str, with_relations: bool) -> Outcome {
    let t = ctx.triangulation(spec)?;
    let q = quiver_of(&t)?;
    let rel = if with_relations { Some(relations_of(&t, &q)?) } else { None };
    if ctx.global.dot {
        let mut dot = q.to_dot(&format!("Q[{t}]"));
        if let Some(r) = &rel {
            dot.pop();
            dot.pop();
            for line in r.to_string().lines() {
                let _ = write!(dot, "\n  // {line}");
            }
            dot.push_str("\n}\n");
        }
        ctx.out.push_str(&dot);
    } else if ctx.global.json {
        match &rel {
            Some(r) => ctx.json(&json!({"triangulation": t, "quiver": q, "relations": r})),
            None => ctx.json(&q),
        }
    } else {
        ctx.line(format!("type: {}", t.classify_type()?));
        ctx.line(quiver_text(&q));
        if let Some(r) = rel {
            ctx.line("relations:");
            ctx.out.push_str(&r.to_string());
        }
    }
    Ok(EXIT_OK)
}

fn relations(ctx: &mut Ctx, spec: &str) -> Outcome {
    no_dot(ctx, "relations")?;
    let t = ctx.triangulation(spec)?;
    let r = relations_of(&t, &quiver_of(&t)?)?;
    if ctx.global.json {
        ctx.json(&r);
    } else if r.is_empty() {
        ctx.line("no relations");
    } else {
        ctx.out.push_str(&r.to_string());
    }
    Ok(EXIT_OK)
}

fn flip(ctx: &mut Ctx, spec: &str, at: &str) -> Outcome {
    no_dot(ctx, "flip")?;
    let t = ctx.triangulation(spec)?;
    let edge = ctx.polygon()?.parse_edge(at)?;
    let (next, added) = t.flip(&edge)?;
    if ctx.global.json {
        ctx.json(&json!({"triangulation": next, "removed": edge.to_string(), "added": added.to_string()}));
    } else {
        ctx.line(next.to_string());
        ctx.line(format!("# {edge} replaced by {added}"));
    }
    Ok(EXIT_OK)
}

fn ar(ctx: &mut Ctx, ranks: bool) -> Outcome {
    let p = ctx.polygon()?;
    let quiver = ArQuiver::build(p);
    let table = p.all_edges().into_iter().map(|e| Ok((e, phi(p, &e)?))).collect::<Result<Vec<_>, Error>>()?;
    if ctx.global.dot {
        ctx.out.push_str(&quiver.to_dot(ranks));
    } else if ctx.global.json {
        let vertices: Vec<String> = quiver.vertices().iter().map(ToString::to_string).collect();
        let arrows: Vec<[String; 2]> = quiver.arrows().iter().map(|(u, v)| [u.to_string(), v.to_string()]).collect();
        let phi: serde_json::Map<String, serde_json::Value> = table.iter().map(|(e, v)| (e.to_string(), json!(v.to_string()))).collect();
        ctx.json(&json!({"n": p.n(), "vertices": vertices, "arrows": arrows, "phi": phi}));
    } else {
        ctx.line(format!("# {} vertices, {} arrows", quiver.vertices().len(), quiver.arrows().len()));
        for (u, v) in quiver.arrows() {
            ctx.line(format!("{u} -> {v}"));
        }
        ctx.line("# phi");
        for (e, v) in table {
            ctx.line(format!("{e} {v}"));
        }
    }
    Ok(EXIT_OK)
}

fn verify(ctx: &mut Ctx, suite: &str) -> Outcome {
    no_dot(ctx, "verify")?;
    let suite: Suite = suite.parse().map_err(|e: Error| usage(e.to_string()))?;
    let polygon = match (suite, ctx.global.n) {
        (Suite::D4, None) => Polygon::new(4)?,
        _ => ctx.polygon()?,
    };
    let report = Verifier::new(polygon).run(suite);
    if ctx.global.json {
        ctx.json(&report);
    } else {
        ctx.line(report.to_string());
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY })
}

fn catalog_root(dir: &Option<PathBuf>) -> PathBuf {
    dir.clone().or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from)).unwrap_or_else(|| PathBuf::from(DEFAULT_CATALOG_DIR))
}

fn catalog(ctx: &mut Ctx, action: &CatalogAction) -> Outcome {
    no_dot(ctx, "catalog")?;
    let p = ctx.polygon()?;
    match action {
        CatalogAction::Build { dir } => {
            let catalog = Catalog::build(p)?;
            let path = catalog.write(&catalog_root(dir))?;
            if ctx.global.json {
                ctx.json(&json!({"path": path.display().to_string(), "meta": catalog.meta}));
            } else {
                ctx.line(format!(
                    "wrote {} ({} triangulations, {} classes)",
                    path.display(),
                    catalog.meta.triangulation_count,
                    catalog.meta.class_count
                ));
            }
        }
        CatalogAction::Show { dir } => {
            let catalog = Catalog::read(&catalog_root(dir), p.n())?;
            if ctx.global.json {
                ctx.json(&catalog.meta);
            } else {
                let m = &catalog.meta;
                ctx.line(format!("n = {}  (written by dncat {})", m.n, m.tool_version));
                ctx.line(format!("triangulations: {}", m.triangulation_count));
                ctx.line(format!("classes: {}", m.class_count));
                for (k, c) in &m.class_census {
                    ctx.line(format!("  {k}: {c} classes, {} triangulations", m.triangulation_census.get(k).copied().unwrap_or(0)));
                }
                for (file, sum) in &m.checksums {
                    ctx.line(format!("sha256 {sum}  {file}"));
                }
            }
        }
    }
    Ok(EXIT_OK)
}
