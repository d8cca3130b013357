//! Command implementations behind the `t2weights` binary.
//!
//! Every command writes data to `out`, diagnostics to `err`, and returns the
//! process exit code:
//!
//! | code | meaning                                  |
//! |------|------------------------------------------|
//! | 0    | success, or an affirmative verdict       |
//! | 1    | a document could not be parsed or read   |
//! | 2    | a weight system is not legal             |
//! | 3    | negative verdict (`compare`)             |
//! | 4    | any other failure (solver bounds, overflow, bad parameters) |

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use t2weights::constructors::{enumerate_legal, suspension_of_lens, weighted_projective, EnumerationBounds};
use t2weights::document;
use t2weights::localmodels::space_of_directions;
use t2weights::surgery::{decompose, CircleSelection};
use t2weights::weights::classify_fixed_point;
use t2weights::{is_isomorphic, validate, EquivalenceMode, Error, Orientation, Pair, WeightSystem};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_ILLEGAL: u8 = 2;
pub const EXIT_NEGATIVE: u8 = 3;
pub const EXIT_FAILURE: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "t2weights", version, about = "Weight systems of T²-actions on Alexandrov 4-spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every legality rule and report violations.
    Validate {
        /// Document path, or `-` for standard input.
        file: String,
    },
    /// Decide whether two weight systems are isomorphic.
    Compare {
        first: String,
        second: String,
        #[arg(long, default_value_t = EquivalenceMode::Strict)]
        mode: EquivalenceMode,
    },
    /// List the space of directions at every fixed point.
    Localmodels { file: String },
    /// Split into a manifold part and simple pieces, written as documents.
    Decompose {
        file: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a member of one of the example families.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Stream every legal weight system within the bounds, one per line.
    Enumerate(BoundsArgs),
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Suspension of a lens space: a disk bounded by a two-point cycle.
    Suspension {
        /// First isotropy pair as `m,n`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        first: Pair,
        /// Second isotropy pair as `m,n`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        second: Pair,
        /// Orientation, `1` or `-1`.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        orientation: i64,
    },
    /// Weighted complex projective plane `CP²(r1, r2, r3)`.
    WeightedProjective {
        #[arg(allow_hyphen_values = true)]
        r1: i64,
        #[arg(allow_hyphen_values = true)]
        r2: i64,
        #[arg(allow_hyphen_values = true)]
        r3: i64,
    },
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 0)]
    pub max_genus: i64,
    #[arg(long, default_value_t = 0)]
    pub max_circles: usize,
    #[arg(long, default_value_t = 1)]
    pub max_cycles: usize,
    #[arg(long, default_value_t = 2)]
    pub max_cycle_length: usize,
    #[arg(long, default_value_t = 1)]
    pub max_weight_entry: i64,
    #[arg(long, default_value_t = 0)]
    pub max_exceptional: usize,
    #[arg(long, default_value_t = 2)]
    pub max_alpha: i64,
    #[arg(long)]
    pub max_fixed_points: Option<usize>,
}

impl From<&BoundsArgs> for EnumerationBounds {
    fn from(a: &BoundsArgs) -> Self {
        EnumerationBounds {
            max_genus: a.max_genus,
            max_circles: a.max_circles,
            max_cycles: a.max_cycles,
            max_cycle_length: a.max_cycle_length,
            max_weight_entry: a.max_weight_entry,
            max_exceptional: a.max_exceptional,
            max_alpha: a.max_alpha,
            max_fixed_points: a.max_fixed_points,
        }
    }
}

pub fn parse_pair(s: &str) -> Result<Pair, String> {
    let (m, n) = s
        .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
        .split_once(',')
        .ok_or_else(|| format!("expected `m,n`, got {s:?}"))?;
    let m = m.trim().parse::<i64>().map_err(|e| format!("{m:?}: {e}"))?;
    let n = n.trim().parse::<i64>().map_err(|e| format!("{n:?}: {e}"))?;
    Ok(Pair::new(m, n))
}

/// Runs a parsed command line against the given streams.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match &cli.command {
        Command::Validate { file } => with_input(file, err, |text, err| cmd_validate(text, out, err)),
        Command::Compare { first, second, mode } => {
            let a = match read_input(first) {
                Ok(t) => t,
                Err(e) => return report_io(first, &e, err),
            };
            with_input(second, err, |b, err| cmd_compare(&a, b, *mode, out, err))
        }
        Command::Localmodels { file } => with_input(file, err, |text, err| cmd_localmodels(text, out, err)),
        Command::Decompose { file, out: dir } => with_input(file, err, |text, err| cmd_decompose(text, dir, out, err)),
        Command::Generate { family } => cmd_generate(family, out, err),
        Command::Enumerate(bounds) => cmd_enumerate(&bounds.into(), out, err),
    }
}

/// Reads a path, with `-` meaning standard input.
pub fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn report_io(path: &str, e: &io::Error, err: &mut dyn Write) -> u8 {
    let _ = writeln!(err, "error: cannot read {path}: {e}");
    EXIT_PARSE
}

fn with_input(path: &str, err: &mut dyn Write, f: impl FnOnce(&str, &mut dyn Write) -> u8) -> u8 {
    match read_input(path) {
        Ok(text) => f(&text, err),
        Err(e) => report_io(path, &e, err),
    }
}

fn load(text: &str, label: &str, err: &mut dyn Write) -> Result<WeightSystem, u8> {
    document::parse(text).map_err(|e| {
        let _ = writeln!(err, "error: {label}: {e}");
        EXIT_PARSE
    })
}

fn load_legal(text: &str, label: &str, err: &mut dyn Write) -> Result<WeightSystem, u8> {
    let w = load(text, label, err)?;
    let report = validate(&w);
    if report.is_legal() {
        Ok(w)
    } else {
        let _ = writeln!(err, "error: {label} is not legal");
        let _ = writeln!(err, "{report}");
        Err(EXIT_ILLEGAL)
    }
}

fn report_error(e: &Error, err: &mut dyn Write) -> u8 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::IllegalWeightSystem(_) => EXIT_ILLEGAL,
        _ => EXIT_FAILURE,
    }
}

pub fn cmd_validate(text: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let w = match load(text, "input", err) {
        Ok(w) => w,
        Err(code) => return code,
    };
    let report = validate(&w);
    if report.is_legal() {
        let _ = writeln!(out, "legal");
        EXIT_OK
    } else {
        let _ = writeln!(out, "illegal");
        for v in &report.violations {
            let _ = writeln!(err, "rule {v}");
        }
        EXIT_ILLEGAL
    }
}

pub fn cmd_compare(first: &str, second: &str, mode: EquivalenceMode, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let a = match load_legal(first, "first document", err) {
        Ok(w) => w,
        Err(code) => return code,
    };
    let b = match load_legal(second, "second document", err) {
        Ok(w) => w,
        Err(code) => return code,
    };
    match is_isomorphic(&a, &b, mode) {
        Ok(v) if v.isomorphic => {
            let _ = writeln!(out, "isomorphic");
            if let Some(w) = v.witness {
                let _ = writeln!(out, "witness: {w}");
            }
            EXIT_OK
        }
        Ok(_) => {
            let _ = writeln!(out, "not isomorphic");
            EXIT_NEGATIVE
        }
        Err(e) => report_error(&e, err),
    }
}

pub fn cmd_localmodels(text: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let w = match load_legal(text, "input", err) {
        Ok(w) => w,
        Err(code) => return code,
    };
    for (c, cycle) in w.fixed_cycles.iter().enumerate() {
        let entries = cycle.entries();
        for (i, e) in entries.iter().enumerate() {
            let right = entries[(i + 1) % entries.len()].pair;
            let line = classify_fixed_point(e.f).and_then(|kind| {
                let lens = space_of_directions(e.pair, right)?;
                Ok(format!(
                    "cycle {c} point {i}: {} {} f={} {kind} {} (s={})",
                    e.pair,
                    right,
                    e.f,
                    lens.sign_representative(),
                    lens.s()
                ))
            });
            match line {
                Ok(line) => {
                    let _ = writeln!(out, "{line}");
                }
                Err(e) => return report_error(&e, err),
            }
        }
    }
    EXIT_OK
}

fn selection_json(sel: CircleSelection) -> serde_json::Value {
    match sel {
        CircleSelection::Circle(i) => json!({ "circle": i }),
        CircleSelection::Arc { cycle, arc } => json!({ "cycle": cycle, "arc": arc }),
    }
}

pub fn cmd_decompose(text: &str, dir: &Path, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let w = match load_legal(text, "input", err) {
        Ok(w) => w,
        Err(code) => return code,
    };
    let d = match decompose(&w) {
        Ok(d) => d,
        Err(e) => return report_error(&e, err),
    };
    let mut files = vec![("manifold.json".to_string(), document::to_pretty(&d.manifold_part))];
    let mut gluings = Vec::new();
    for (i, (piece, gluing)) in d.simple_pieces.iter().zip(&d.gluings).enumerate() {
        let name = format!("piece_{i}.json");
        let pair = match t2weights::surgery::selected_pair(&d.manifold_part, gluing.manifold) {
            Ok(p) => p,
            Err(e) => return report_error(&e, err),
        };
        gluings.push(json!({
            "piece": name,
            "manifold_selection": selection_json(gluing.manifold),
            "piece_selection": selection_json(gluing.piece),
            "isotropy": [pair.m, pair.n],
        }));
        files.push((name, document::to_pretty(piece)));
    }
    let manifest = json!({
        "schema_version": document::SCHEMA_VERSION,
        "manifold": "manifold.json",
        "gluings": gluings,
    });
    let manifest = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    files.push(("manifest.json".to_string(), manifest));

    if let Err(e) = fs::create_dir_all(dir) {
        let _ = writeln!(err, "error: cannot create {}: {e}", dir.display());
        return EXIT_FAILURE;
    }
    for (name, contents) in &files {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, contents) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_FAILURE;
        }
        let _ = writeln!(out, "{}", path.display());
    }
    EXIT_OK
}

pub fn cmd_generate(family: &Family, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let built = match *family {
        Family::Suspension { first, second, orientation } => match Orientation::try_from(orientation) {
            Ok(o) => suspension_of_lens(first, second, o),
            Err(v) => Err(Error::IllegalParameters(format!("orientation must be 1 or -1, got {v}"))),
        },
        Family::WeightedProjective { r1, r2, r3 } => weighted_projective(r1, r2, r3),
    };
    match built {
        Ok(w) => {
            let _ = out.write_all(document::to_pretty(&w).as_bytes());
            EXIT_OK
        }
        Err(e) => report_error(&e, err),
    }
}

pub fn cmd_enumerate(bounds: &EnumerationBounds, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let systems = match enumerate_legal(bounds) {
        Ok(it) => it,
        Err(e) => return report_error(&e, err),
    };
    let mut count = 0usize;
    for w in systems {
        if writeln!(out, "{}", document::to_line(&w)).is_err() {
            break;
        }
        count += 1;
    }
    let _ = writeln!(err, "{count} weight systems");
    EXIT_OK
}
