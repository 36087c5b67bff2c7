//! `wpc`: Hom/Ext tables, twists, collections and thick subcategories on the
//! command line. Every subcommand prints plain text, or one JSON document
//! with `--json`.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wpc_core::lgroup::{self, Weights};
use wpc_core::serial::{self, Arc, SerialCat, ThickDesc};
use wpc_core::wpl::{self, Classification, SheafClass, WplData};
use wpc_core::Error;

#[derive(Parser)]
#[command(name = "wpc", version, about = "Hom/Ext computations for quivers, tubes and weighted projective lines")]
struct Cli {
    #[command(flatten)]
    model: ModelArgs,
    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// Weights of the weighted points, e.g. `2,3`.
    #[arg(long, global = true, value_name = "r1,r2,...", allow_hyphen_values = true)]
    weights: Option<String>,
    /// Labels of ordinary points that may carry torsion sheaves.
    #[arg(long, global = true, value_name = "y1,y2,...")]
    ordinary: Option<String>,
    /// JSON file `{"weights": [...], "ordinary": [...]}`.
    #[arg(long, global = true, value_name = "PATH", conflicts_with_all = ["weights", "ordinary"])]
    config: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// dim Hom and dim Ext^1 between two sheaves or two arcs.
    Hom { first: String, second: String },
    /// Euler form hom - ext1.
    Euler { first: String, second: String },
    /// Auslander-Reiten translation.
    Tau { object: String },
    /// Apply sigma_x or c_x at a point (`x1`, `1` or an ordinary label).
    Twist { kind: TwistKind, point: String, object: String },
    /// Length-m torsion quotient of O(lambda) at a point.
    Top {
        point: String,
        lambda: String,
        #[arg(long, default_value_t = 1)]
        len: usize,
    },
    /// Ext-quiver of a vertex-like family.
    Extquiver {
        #[arg(required = true)]
        objects: Vec<String>,
    },
    /// Test a property of an ordered family.
    Check {
        property: Property,
        #[arg(required = true)]
        objects: Vec<String>,
    },
    /// Right perpendicular category of an arc or an exceptional torsion sheaf.
    Perp { object: String },
    /// Thick subcategories of the tube U_n.
    Tube {
        #[command(subcommand)]
        action: Enumerate,
    },
    /// Thick subcategories of A_n.
    Line {
        #[command(subcommand)]
        action: Enumerate,
    },
    /// Number of big thick subcategories.
    CountBig,
    /// Sufficient criteria for the subcategory generated by a family.
    Classify {
        #[arg(required = true)]
        objects: Vec<String>,
    },
    /// The canonical exceptional collection of line bundles.
    Canonical,
    /// Star-shaped collections at heights `b1,b2,...` and their dual families.
    Star {
        #[arg(allow_hyphen_values = true)]
        heights: String,
    },
}

#[derive(Subcommand)]
enum Enumerate {
    Enumerate {
        n: usize,
        /// Print only the number of subcategories.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistKind {
    Sigma,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Exceptional,
    Vertexlike,
}

struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Output {
    Output { text: text.into(), json }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Parse { token: s.into(), message: format!("expected a {what}") })
        })
        .collect()
}

fn load_model(m: &ModelArgs) -> Result<WplData, Error> {
    if let Some(path) = &m.config {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse {
            token: path.clone(),
            message: format!("cannot read config: {e}"),
        })?;
        return WplData::from_json(&text);
    }
    let weights = match &m.weights {
        Some(w) => parse_list::<u32>(w, "natural number")?,
        None => Vec::new(),
    };
    let ordinary = match &m.ordinary {
        Some(o) => o.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect(),
        None => Vec::new(),
    };
    WplData::new(Weights::new(weights)?, ordinary)
}

enum Object {
    Arc(Arc),
    Sheaf(SheafClass),
}

fn parse_object(data: &WplData, text: &str) -> Result<Object, Error> {
    let t = text.trim_start();
    if t.starts_with("U(") || t.starts_with("A(") {
        Ok(Object::Arc(t.parse()?))
    } else {
        Ok(Object::Sheaf(data.parse_class(t)?))
    }
}

fn parse_sheaves(data: &WplData, items: &[String]) -> Result<Vec<SheafClass>, Error> {
    items.iter().map(|s| data.parse_class(s)).collect()
}

fn hom_pair(data: &WplData, a: &str, b: &str) -> Result<(u64, u64), Error> {
    match (parse_object(data, a)?, parse_object(data, b)?) {
        (Object::Arc(x), Object::Arc(y)) => serial::dims(&x, &y).map(|(h, e)| (h as u64, e as u64)),
        (Object::Sheaf(f), Object::Sheaf(g)) => wpl::hom_ext(data, &f, &g),
        _ => Err(Error::CategoryMismatch),
    }
}

fn shape_text(t: &ThickDesc) -> String {
    let mut parts: Vec<String> = t.shape.cycle.iter().map(|s| format!("U({s})")).collect();
    parts.extend(t.shape.lines.iter().map(|k| format!("A({k})")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" x ")
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn enumerate(cat: SerialCat, count: bool) -> Result<Output, Error> {
    let all = serial::enumerate_thick(cat)?;
    if count {
        return Ok(out(all.len().to_string(), json!({ "count": all.len() })));
    }
    let mut text = Vec::new();
    let mut docs = Vec::new();
    for t in &all {
        let simples = if t.simples.is_empty() { "none".into() } else { join(&t.simples) };
        text.push(format!("shape: {} | simples: {simples}", shape_text(t)));
        docs.push(json!({
            "shape": t.shape,
            "shape_text": shape_text(t),
            "simples": t.simples,
            "signature": t.signature,
            "left_generators": t.left_generators,
        }));
    }
    Ok(out(text.join("\n"), json!({ "category": cat, "count": all.len(), "subcategories": docs })))
}

fn classification_text(c: &Classification) -> String {
    match c {
        Classification::Big { bundle, witness } => format!("big: bundle {bundle}, witness {witness}"),
        Classification::QuiverLike(q) => format!("quiver-like\n{}", q.to_text().trim_end()),
        Classification::SplitThenQuiverLike { torsion, free, quiver } => format!(
            "split: torsion {} | free {}\n{}",
            join(torsion),
            join(free),
            quiver.to_text().trim_end()
        ),
        Classification::Undetermined => "undetermined".into(),
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let data = load_model(&cli.model)?;
    Ok(match &cli.command {
        Command::Hom { first, second } => {
            let (h, e) = hom_pair(&data, first, second)?;
            out(format!("hom={h} ext1={e}"), json!({ "hom": h, "ext1": e }))
        }
        Command::Euler { first, second } => {
            let (h, e) = hom_pair(&data, first, second)?;
            let v = h as i64 - e as i64;
            out(v.to_string(), json!({ "euler": v }))
        }
        Command::Tau { object } => {
            let s = match parse_object(&data, object)? {
                Object::Arc(a) => serial::tau(&a)?.to_string(),
                Object::Sheaf(f) => wpl::tau_sheaf(&data, &f)?.to_string(),
            };
            out(s.clone(), json!({ "object": s }))
        }
        Command::Twist { kind, point, object } => {
            let p = data.point(point)?;
            let f = data.parse_class(object)?;
            let g = match kind {
                TwistKind::Sigma => wpl::sigma_twist(&data, &p, &f)?,
                TwistKind::C => wpl::c_twist(&data, &p, &f)?,
            };
            out(g.to_string(), json!({ "object": g }))
        }
        Command::Top { point, lambda, len } => {
            let p = data.point(point)?;
            let l = lgroup::parse(data.weights(), lambda)?;
            let t = wpl::top_m(&data, &p, &l, *len)?;
            out(t.to_string(), json!({ "object": t }))
        }
        Command::Extquiver { objects } => {
            let family = parse_sheaves(&data, objects)?;
            let q = wpl::ext_quiver_of(&data, &family)?;
            out(q.to_text().trim_end(), json!(q.to_json()))
        }
        Command::Check { property, objects } => {
            let family = parse_sheaves(&data, objects)?;
            let (name, holds) = match property {
                Property::Exceptional => ("exceptional", wpl::is_exceptional_sequence(&data, &family)?),
                Property::Vertexlike => ("vertexlike", wpl::is_vertex_like(&data, &family)?),
            };
            out(holds.to_string(), json!({ "property": name, "holds": holds }))
        }
        Command::Perp { object } => match parse_object(&data, object)? {
            Object::Arc(a) => {
                let emb = serial::perp_arc(&a)?;
                let text: Vec<String> = emb
                    .factors
                    .iter()
                    .map(|f| format!("{}: {}", f.cat, join(&f.simples)))
                    .collect();
                out(text.join("\n"), json!(emb))
            }
            Object::Sheaf(f) => {
                let p = wpl::perp_exceptional_torsion(&data, &f)?;
                let text = format!(
                    "weights: {}\ntube: {}\nline: {}",
                    p.weights,
                    join(&p.tube_factor),
                    join(&p.line_factor)
                );
                out(text, json!(p))
            }
        },
        Command::Tube { action: Enumerate::Enumerate { n, count } } => enumerate(SerialCat::Cycle(*n), *count)?,
        Command::Line { action: Enumerate::Enumerate { n, count } } => enumerate(SerialCat::Line(*n), *count)?,
        Command::CountBig => {
            let n = wpl::count_big(data.weights());
            let v = match u64::try_from(&n) {
                Ok(small) => json!(small),
                Err(_) => json!(n.to_string()),
            };
            out(n.to_string(), json!({ "count": v }))
        }
        Command::Classify { objects } => {
            let family = parse_sheaves(&data, objects)?;
            let c = wpl::classify_generated(&data, &family)?;
            out(classification_text(&c), json!(c))
        }
        Command::Canonical => {
            let c = wpl::canonical_collection(data.weights());
            out(join(&c), json!({ "collection": c }))
        }
        Command::Star { heights } => {
            let b = parse_list::<u32>(heights, "natural number")?;
            let s = wpl::star_collection(&data, &b)?;
            let text = format!(
                "left: {}\nleft dual: {}\nright: {}\nright dual: {}",
                join(&s.left),
                join(&s.left_dual),
                join(&s.right),
                join(&s.right_dual)
            );
            out(text, json!(s))
        }
    })
}

fn error_json(code: &str, message: &str) -> String {
    json!({ "error": { "code": code, "message": message } }).to_string()
}

fn main() -> ExitCode {
    let json_requested = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) || !json_requested {
                e.exit();
            }
            let message = e.to_string();
            println!("{}", error_json("usage", message.lines().next().unwrap_or("").trim_start_matches("error: ")));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                println!("{}", o.json);
            } else {
                println!("{}", o.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                println!("{}", error_json(e.code(), &e.to_string()));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(if e.is_internal() { 1 } else { 2 })
        }
    }
}
