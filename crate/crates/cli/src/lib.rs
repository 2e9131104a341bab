//! Command line front end for web coordinates: file formats, subcommands and
//! JSON reports.

pub mod files;

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::thread;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use webcoord_core::cone::{decompose_global, in_global_cone, rhombus_vector};
use webcoord_core::glue::{GlobalWeb, TravelerKind};
use webcoord_core::oracle::{confluence_check, enumerate_cone_part, fellow_traveler_check, roundtrip_web};
use webcoord_core::{reconstruct, Error, GlobalConePoint, HoneycombDir, IdealTriangulation};

use files::{load_triangulation, load_web, WebDoc};

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Invalid,
    NotInCone,
    Elliptic,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn ok(payload: Value) -> Self {
        Self {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
        }
    }

    fn failed(status: Status, diagnostics: Vec<String>) -> Self {
        Self {
            status,
            payload: json!({}),
            diagnostics,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Exit code and report of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: u8,
    pub report: Report,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Self {
            code: 0,
            report: Report::ok(payload),
        }
    }

    fn from_error(e: CliError) -> Self {
        let (code, status) = match &e {
            CliError::Core(Error::NotInCone) => (2, Status::NotInCone),
            CliError::Core(Error::Elliptic) => (2, Status::Elliptic),
            CliError::Core(Error::Internal(_)) => (3, Status::Invalid),
            _ => (1, Status::Invalid),
        };
        Self {
            code,
            report: Report::failed(status, vec![e.to_string()]),
        }
    }

    fn internal(diagnostics: Vec<String>) -> Self {
        Self {
            code: 3,
            report: Report::failed(Status::Invalid, diagnostics),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "webcoord",
    version,
    about = "Coordinates of SL3 non-elliptic webs on punctured surfaces"
)]
struct Cli {
    /// Include the dot index legend in the payload.
    #[arg(long, global = true)]
    dots: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a triangulation file.
    Validate { tri: PathBuf },
    /// Coordinates of a web.
    Coords {
        web: PathBuf,
        /// Also print every triangle's rhombus numbers.
        #[arg(long)]
        rhombus: bool,
    },
    /// Cone membership and decomposition of a coordinate vector.
    ConeCheck { tri: PathBuf, vector: String },
    /// Non-elliptic web with the given coordinates.
    Reconstruct {
        tri: PathBuf,
        vector: String,
        /// Write the web document to this file.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Coordinates, reconstruction and fellow-traveler check of a web.
    Roundtrip { web: PathBuf },
    /// Cone points with every coordinate at most B.
    Enumerate {
        tri: PathBuf,
        #[arg(long = "max", value_name = "B")]
        max: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
    },
    /// Travelers and their routes.
    Trace { web: PathBuf },
    /// Square removal under every resolution order.
    Confluence { web: PathBuf },
}

/// Parses `argv` (program name first) and runs the subcommand. Help and
/// version requests come back as `Err(text)`.
pub fn dispatch<I, T>(argv: I) -> Result<Outcome, String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Err(e.to_string()),
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Ok(Outcome::from_error(
                    CliError::Invalid("missing subcommand".into()),
                )),
                _ => Ok(Outcome::from_error(CliError::Invalid(
                    e.render().to_string().trim_end().to_string(),
                ))),
            };
        }
    };
    Ok(run(cli).unwrap_or_else(Outcome::from_error))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let dots = cli.dots;
    let with_legend = |tri: &IdealTriangulation, mut payload: Value| {
        if dots {
            payload["dots"] = legend(tri);
        }
        payload
    };
    match cli.command {
        Command::Validate { tri } => {
            let t = load_triangulation(&tri)?;
            let payload = json!({
                "triangles": t.num_triangles(),
                "edges": t.num_edges(),
                "euler_characteristic": t.euler_characteristic(),
                "punctures": t.num_punctures(),
                "genus": t.genus(),
                "dimension": t.dot_indexing().len(),
            });
            Ok(Outcome::ok(with_legend(&t, payload)))
        }
        Command::Coords { web, rhombus } => {
            let loaded = load_web(&web)?;
            let w = GlobalWeb::new(&loaded.tri, loaded.webs)?;
            let c = w.global_coords()?;
            let mut payload = json!({
                "coordinates": c.0,
                "nonelliptic": w.is_nonelliptic()?,
            });
            if rhombus {
                payload["rhombus"] = rhombus_tables(&loaded.tri, &c)?;
            }
            Ok(Outcome::ok(with_legend(&loaded.tri, payload)))
        }
        Command::ConeCheck { tri, vector } => {
            let t = load_triangulation(&tri)?;
            let c = parse_vector(&vector)?;
            let idx = t.dot_indexing();
            if !in_global_cone(&c, &t, &idx)? {
                return Ok(not_in_cone(&t, &c));
            }
            let payload = json!({
                "in_cone": true,
                "decomposition": decomposition(&t, &c)?,
            });
            Ok(Outcome::ok(with_legend(&t, payload)))
        }
        Command::Reconstruct { tri, vector, out } => {
            let t = load_triangulation(&tri)?;
            let c = parse_vector(&vector)?;
            if !in_global_cone(&c, &t, &t.dot_indexing())? {
                return Ok(not_in_cone(&t, &c));
            }
            let w = reconstruct(&c, &t)?;
            let doc = WebDoc::new(&t, w.webs());
            if let Some(path) = out {
                write_json(&path, &doc)?;
            }
            let payload = json!({ "web": doc });
            Ok(Outcome::ok(with_legend(&t, payload)))
        }
        Command::Roundtrip { web } => {
            let loaded = load_web(&web)?;
            let w = GlobalWeb::new(&loaded.tri, loaded.webs)?;
            if !roundtrip_web(&w)? {
                return Ok(Outcome::internal(vec![
                    "reconstructed web does not fellow-travel with the input".into(),
                ]));
            }
            let c = w.global_coords()?;
            let back = reconstruct(&c, &loaded.tri)?;
            let corr = fellow_traveler_check(&w, &back)?;
            let payload = json!({
                "coordinates": c.0,
                "fellow_travelers": true,
                "correspondence": corr.pairs,
                "reconstructed": WebDoc::new(&loaded.tri, back.webs()),
            });
            Ok(Outcome::ok(with_legend(&loaded.tri, payload)))
        }
        Command::Enumerate { tri, max, jobs } => {
            let t = load_triangulation(&tri)?;
            let points = enumerate_parallel(&t, max, jobs as usize);
            let payload = json!({
                "max": max,
                "count": points.len(),
                "points": points.iter().map(|p| &p.0).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(with_legend(&t, payload)))
        }
        Command::Trace { web } => {
            let loaded = load_web(&web)?;
            let w = GlobalWeb::new(&loaded.tri, loaded.webs)?;
            let payload = json!({
                "travelers": travelers(&w)?,
                "crossings": w.crossing_count()?,
            });
            Ok(Outcome::ok(with_legend(&loaded.tri, payload)))
        }
        Command::Confluence { web } => {
            let loaded = load_web(&web)?;
            let w = GlobalWeb::new(&loaded.tri, loaded.webs)?;
            let r = confluence_check(&w)?;
            let summary = json!({
                "initial_squares": r.initial_squares,
                "orders": r.orders,
                "exhaustive": r.exhaustive,
                "terminals": r.terminals,
                "confluent": r.confluent,
            });
            if !r.confluent {
                return Ok(Outcome::internal(vec![format!(
                    "square removal is not confluent: {summary}"
                )]));
            }
            Ok(Outcome::ok(with_legend(&loaded.tri, summary)))
        }
    }
}

fn legend(tri: &IdealTriangulation) -> Value {
    let idx = tri.dot_indexing();
    (0..idx.len()).map(|i| Value::from(idx.label(tri, i))).collect()
}

/// Comma-separated integers in dot order.
fn parse_vector(text: &str) -> Result<GlobalConePoint, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| CliError::Invalid(format!("bad coordinate {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(GlobalConePoint)
}

fn rhombus_tables(tri: &IdealTriangulation, c: &GlobalConePoint) -> Result<Value, CliError> {
    let idx = tri.dot_indexing();
    let mut out = serde_json::Map::new();
    for (t, name) in tri.triangles().iter().enumerate() {
        let r = rhombus_vector(&c.local(tri, &idx, t))
            .as_integers()
            .ok_or_else(|| Error::Internal(format!("fractional rhombus numbers on {name}")))?;
        out.insert(name.clone(), json!(r));
    }
    Ok(Value::Object(out))
}

fn not_in_cone(tri: &IdealTriangulation, c: &GlobalConePoint) -> Outcome {
    let idx = tri.dot_indexing();
    let diagnostics = tri
        .triangles()
        .iter()
        .enumerate()
        .filter_map(|(t, name)| {
            let r = rhombus_vector(&c.local(tri, &idx, t));
            let bad: Vec<String> = (0..9)
                .filter(|&k| r.0[k].0 < 0 || r.0[k].0 % 3 != 0)
                .map(|k| format!("r{}{} = {}", k / 3 + 1, k % 3 + 1, r.0[k]))
                .collect();
            (!bad.is_empty()).then(|| format!("triangle {name}: {}", bad.join(", ")))
        })
        .collect();
    Outcome {
        code: 2,
        report: Report::failed(Status::NotInCone, diagnostics),
    }
}

/// Components of the unique decomposition, one record per nonzero count.
fn decomposition(tri: &IdealTriangulation, c: &GlobalConePoint) -> Result<Value, CliError> {
    let contents = decompose_global(c, tri, &tri.dot_indexing())?;
    let mut out = Vec::new();
    for (name, content) in tri.triangles().iter().zip(&contents) {
        for k in 0..3 {
            for (letter, count) in [("R", content.r[k]), ("L", content.l[k])] {
                if count > 0 {
                    out.push(json!({ "triangle": name, "component": format!("{letter}{}", k + 1), "count": count }));
                }
            }
        }
        if let Some(h) = content.honeycomb {
            let dir = if h.dir == HoneycombDir::In {
                "H_in"
            } else {
                "H_out"
            };
            out.push(json!({ "triangle": name, "component": dir, "count": h.n }));
        }
    }
    Ok(Value::Array(out))
}

fn travelers(w: &GlobalWeb<'_>) -> Result<Value, CliError> {
    let tri = w.triangulation();
    let list = w
        .trace_travelers()?
        .into_iter()
        .map(|t| {
            let route: Vec<Value> = t
                .route
                .iter()
                .map(|r| {
                    let edge = &tri.edges()[r.edge];
                    let side = edge.sides[r.side];
                    json!({
                        "edge": edge.id,
                        "triangle": tri.triangles()[side.tri],
                        "slot": side.slot + 1,
                        "position": r.position,
                    })
                })
                .collect();
            json!({
                "id": t.id,
                "kind": if t.kind == TravelerKind::Loop { "loop" } else { "arc" },
                "route": route,
            })
        })
        .collect();
    Ok(Value::Array(list))
}

/// Splits the enumeration over `jobs` threads and merges in sorted order.
fn enumerate_parallel(tri: &IdealTriangulation, max: u32, jobs: usize) -> Vec<GlobalConePoint> {
    let mut points: Vec<GlobalConePoint> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|part| s.spawn(move || enumerate_cone_part(tri, max, part, jobs)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    points.sort();
    points
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("documents serialize");
    std::fs::write(path, text + "\n").map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}
