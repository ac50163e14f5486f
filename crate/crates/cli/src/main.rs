use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fuzzysoft_core::analysis::{analyze_sequence, image, preimage};
use fuzzysoft_core::classify::{is_concave, is_convex, is_fuzzy_soft_number, is_normalized};
use fuzzysoft_core::format::{
    arith_to_json, mapping_to_json, parse_mapping, parse_set, set_to_json, Precision, CLI_PRECISION,
};
use fuzzysoft_core::metric::{check_metric_axioms, closed_sphere, diameter, distance, open_sphere};
use fuzzysoft_core::{arith, fixtures, propcheck, ArithOp, FuzzySoftSet};
use serde_json::Value;

const SEED_VAR: &str = "FUZZYSOFT_SEED";

#[derive(Parser)]
#[command(
    name = "fuzzysoft",
    version,
    about = "Fuzzy soft sets and fuzzy soft numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convexity, concavity, normalization and number verdicts
    Classify { set: PathBuf },
    /// Cellwise arithmetic; undefined cells are written as null
    Arith {
        #[arg(long, value_enum)]
        op: Op,
        left: PathBuf,
        right: PathBuf,
    },
    /// Distance between two sets
    Dist { left: PathBuf, right: PathBuf },
    /// Diameter of a set
    Diam { set: PathBuf },
    /// Members of a directory collection inside a sphere around CENTER
    Sphere {
        #[arg(long)]
        center: PathBuf,
        #[arg(long)]
        radius: f64,
        /// Use `d <= r` instead of `d < r`
        #[arg(long)]
        closed: bool,
        dir: PathBuf,
    },
    /// Metric axioms over every set document in a directory
    Axioms { dir: PathBuf },
    /// Image or preimage under a mapping
    Map(MapArgs),
    /// Bounded, Cauchy and convergence verdicts for a finite prefix
    Seq {
        /// Directory of terms, ordered by file name
        #[arg(long)]
        prefix: PathBuf,
        #[arg(long)]
        limit: Option<PathBuf>,
        #[arg(long)]
        eps: f64,
    },
    /// Check the proposition catalog; exits 3 when an outcome differs from its label
    Propcheck {
        /// Defaults to $FUZZYSOFT_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = propcheck::DEFAULT_BUDGET)]
        budget: usize,
        /// Report path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the worked-example fixtures
    Fixtures { outdir: PathBuf },
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["image", "preimage"])))]
struct MapArgs {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    image: Option<PathBuf>,
    #[arg(long)]
    preimage: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl From<Op> for ArithOp {
    fn from(op: Op) -> Self {
        match op {
            Op::Add => ArithOp::Add,
            Op::Sub => ArithOp::Sub,
            Op::Mul => ArithOp::Mul,
            Op::Div => ArithOp::Div,
        }
    }
}

/// Problems with the invocation itself rather than the data.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())).into())
}

fn load(path: &Path) -> Result<FuzzySoftSet> {
    let text = read(path)?;
    parse_set(&text).with_context(|| format!("in {}", path.display()))
}

/// Set documents in `dir`, sorted by file name. Other JSON files are skipped.
fn load_dir(dir: &Path) -> Result<Vec<(String, FuzzySoftSet)>> {
    let entries =
        fs::read_dir(dir).map_err(|e| Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let text = read(&p)?;
        if let Ok(set) = parse_set(&text) {
            let stem = p
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            out.push((stem, set));
        }
    }
    if out.is_empty() {
        return Err(Usage(format!("no set documents in {}", dir.display())).into());
    }
    Ok(out)
}

fn num(v: f64) -> String {
    CLI_PRECISION.number(v)
}

/// Pretty JSON with every float at the CLI precision.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match v {
        Value::Number(n) if n.is_f64() => out.push_str(&num(n.as_f64().unwrap())),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items
                .iter()
                .map(|i| {
                    let mut s = String::new();
                    render(i, indent, &mut s);
                    s
                })
                .collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, i) in items.iter().enumerate() {
                out.push_str(&pad);
                render(i, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, i)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(key).unwrap());
                out.push_str(": ");
                render(i, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn print_json(v: impl serde::Serialize) -> Result<()> {
    let mut s = String::new();
    render(&serde_json::to_value(v)?, 0, &mut s);
    println!("{s}");
    Ok(())
}

fn classify(path: &Path) -> Result<()> {
    let set = load(path)?;
    let convex = is_convex(&set);
    let concave = is_concave(&set);
    let normalized = is_normalized(&set);
    let number = is_fuzzy_soft_number(&set);
    println!(
        "convex:{} concave:{} normalized:{} number:{}",
        convex.verdict, concave.verdict, normalized.verdict, number.verdict
    );
    for (name, w) in [
        ("convex", &convex.witness),
        ("concave", &concave.witness),
        ("normalized", &normalized.witness),
    ] {
        if let Some(w) = w {
            println!("not {name}: {w}");
        }
    }
    if number.verdict {
        let peak: Vec<&str> = number
            .peak
            .iter()
            .map(|&t| set.universe()[t].as_str())
            .collect();
        println!("peak: {}", peak.join(", "));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { set } => classify(&set)?,
        Command::Arith { op, left, right } => {
            let r = arith::apply(op.into(), &load(&left)?, &load(&right)?)?;
            print!("{}", arith_to_json(&r, CLI_PRECISION));
        }
        Command::Dist { left, right } => {
            println!("{}", num(distance(&load(&left)?, &load(&right)?)?.get()));
        }
        Command::Diam { set } => println!("{}", num(diameter(&load(&set)?).get())),
        Command::Sphere {
            center,
            radius,
            closed,
            dir,
        } => {
            let center = load(&center)?;
            let (names, sets): (Vec<_>, Vec<_>) = load_dir(&dir)?.into_iter().unzip();
            let members = if closed {
                closed_sphere(&center, radius, &sets)?
            } else {
                open_sphere(&center, radius, &sets)?
            };
            for k in members {
                println!("{}", names[k]);
            }
        }
        Command::Axioms { dir } => {
            let sets: Vec<_> = load_dir(&dir)?.into_iter().map(|(_, s)| s).collect();
            print_json(check_metric_axioms(&sets)?)?;
        }
        Command::Map(args) => {
            let spec = parse_mapping(&read(&args.spec)?)
                .with_context(|| format!("in {}", args.spec.display()))?;
            let out = match (args.image, args.preimage) {
                (Some(f), _) => image(&spec, &load(&f)?)?,
                (_, Some(g)) => preimage(&spec, &load(&g)?)?,
                _ => unreachable!("clap requires one direction"),
            };
            print!("{}", set_to_json(&out, CLI_PRECISION));
        }
        Command::Seq { prefix, limit, eps } => {
            let terms: Vec<_> = load_dir(&prefix)?.into_iter().map(|(_, s)| s).collect();
            let limit = limit.map(|l| load(&l)).transpose()?;
            print_json(analyze_sequence(&terms, limit.as_ref(), eps)?)?;
        }
        Command::Propcheck { seed, budget, out } => {
            if budget == 0 {
                return Err(Usage("--budget must be positive".into()).into());
            }
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var(SEED_VAR) {
                    Ok(v) => v
                        .parse()
                        .map_err(|_| Usage(format!("{SEED_VAR} is not an integer: {v}")))?,
                    Err(_) => 0,
                },
            };
            let report = propcheck::run_all(seed, budget);
            match out {
                Some(path) => fs::write(&path, report.to_json())
                    .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{}", report.to_json()),
            }
            let surprises = report.surprises();
            for e in &surprises {
                eprintln!(
                    "surprise: {} expected {}, got {}",
                    e.id, e.expected, e.outcome
                );
            }
            eprintln!(
                "{} entries, {} matched, seed {seed}, budget {budget}",
                report.entries.len(),
                report.entries.len() - surprises.len()
            );
            if !surprises.is_empty() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Fixtures { outdir } => {
            fs::create_dir_all(&outdir)
                .map_err(|e| Usage(format!("cannot create {}: {e}", outdir.display())))?;
            let write = |name: &str, text: String| -> Result<()> {
                let path = outdir.join(format!("{name}.json"));
                fs::write(&path, text)
                    .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())).into())
            };
            for (name, set) in fixtures::named_sets() {
                write(name, set_to_json(&set, Precision::Shortest))?;
            }
            for (name, map) in fixtures::named_mappings() {
                write(name, mapping_to_json(&map))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                eprintln!("run `fuzzysoft --help` for usage");
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
