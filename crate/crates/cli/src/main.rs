//! `orbits`: enumerate orbit labels, export closure posets, compare orbits
//! and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error,
//! 3 label parse or canonicality error.

mod verify;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbits_core::group_spec::GroupSpec;
use orbits_core::matrix_model::MatrixModel;
use orbits_core::oracle::oracle_poset;
use orbits_core::{Error, GroupConfig, OrbitModel, SimpleSet};

#[derive(Parser)]
#[command(
    name = "orbits",
    version,
    about = "Orbit combinatorics of wonderful group compactifications"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Named type such as A2, B3, G2 or A1xA1.
    #[arg(long = "type", value_name = "TYPE")]
    type_name: Option<String>,
    /// Group description as inline JSON or a path to a JSON file.
    #[arg(long, value_name = "JSON|FILE")]
    group: Option<String>,
}

#[derive(Args, Clone)]
struct GroupArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Weight override for the W-orbit of a simple root, `INDEX=VALUE`.
    #[arg(long = "weight", value_name = "INDEX=VALUE")]
    weights: Vec<String>,
    /// Upper bound on the Weyl group order.
    #[arg(long, env = "ORBITS_CAP")]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq, Debug)]
enum Suite {
    All,
    Poset,
    Axioms,
    Rank1,
    Random,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// List orbit labels.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// Restrict to one stratum, e.g. `[1,3]` or `[]`.
        #[arg(long)]
        stratum: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the closure poset.
    Poset {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Build the poset from rank-one moves instead of the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare two orbits in the closure order.
    Compare {
        #[command(flatten)]
        group: GroupArgs,
        first: String,
        second: String,
    },
    /// Components of an orbit closure meeting a smaller stratum.
    Components {
        #[command(flatten)]
        group: GroupArgs,
        label: String,
        #[arg(long)]
        stratum: String,
    },
    /// Run verification suites; prints PASS or FAIL and a JSON report.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Seed for the randomized suite.
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        /// Number of random samples.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        /// Drop one covering relation before comparing posets.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Brute-force orbit partition of the PGL_n compactification over F_q.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        /// Write every orbit's label, size and representative as JSON.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
}

pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn label(e: Error) -> Self {
        let message = match &e {
            Error::NonCanonicalLabel { given, canonical } => {
                format!("label `{given}` is not canonical; did you mean `{canonical}`?")
            }
            other => other.to_string(),
        };
        Failure { code: 3, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::config(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // downstream closed early, e.g. piped into `head`
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        Failure::config(e.to_string())
    }
}

fn build_model(args: &GroupArgs) -> Result<OrbitModel, Failure> {
    let mut spec = match (&args.source.type_name, &args.source.group) {
        (Some(t), None) => GroupSpec::from_type(t),
        (None, Some(g)) => {
            let text = if g.trim_start().starts_with('{') {
                g.clone()
            } else {
                fs::read_to_string(g).map_err(|e| Failure::config(format!("{g}: {e}")))?
            };
            GroupSpec::from_json(&text)?
        }
        _ => return Err(Failure::config("give exactly one of --type or --group")),
    };
    for w in &args.weights {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Failure::config(format!("weight `{w}` is not INDEX=VALUE")))?;
        let v: u32 = v
            .trim()
            .parse()
            .map_err(|_| Failure::config(format!("weight `{w}` has a bad value")))?;
        spec.weights.insert(k.trim().to_string(), v);
    }
    let mut config = GroupConfig::default();
    if let Some(cap) = args.cap {
        if cap == 0 {
            return Err(Failure::config("cap must be positive"));
        }
        config.cap = cap;
    }
    Ok(spec.build(config)?)
}

fn parse_stratum(m: &OrbitModel, s: &str) -> Result<SimpleSet, Failure> {
    match s.trim() {
        "all" | "Δ" | "full" => Ok(m.full()),
        other => SimpleSet::parse(other, m.rank()).map_err(Failure::from),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Enumerate {
            group,
            stratum,
            format,
        } => {
            let m = build_model(&group)?;
            let j = stratum.map(|s| parse_stratum(&m, &s)).transpose()?;
            let names: Vec<String> = m
                .enumerate_orbits(j)
                .iter()
                .map(|o| m.format_label(o))
                .collect();
            match format {
                Format::Text => {
                    for n in names {
                        writeln!(out, "{n}")?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&names).unwrap())?,
                _ => return Err(Failure::config("enumerate supports --format text|json")),
            }
            Ok(0)
        }
        Command::Poset {
            group,
            format,
            oracle,
        } => {
            let m = build_model(&group)?;
            let p = if oracle {
                oracle_poset(&m)
            } else {
                m.closure_poset()
            };
            let text = match format {
                Format::Json => p.to_json(),
                Format::Dot => p.to_dot(),
                Format::Csv => p.to_csv(),
                Format::Text => p
                    .hasse()
                    .iter()
                    .map(|&(i, j)| format!("{} < {}\n", p.names()[i], p.names()[j]))
                    .collect(),
            };
            write!(out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(out)?;
            }
            Ok(0)
        }
        Command::Compare {
            group,
            first,
            second,
        } => {
            let m = build_model(&group)?;
            let a = m.parse_label(&first).map_err(Failure::label)?;
            let b = m.parse_label(&second).map_err(Failure::label)?;
            let g = m.group();
            if a == b {
                writeln!(out, "EQUAL")?;
            } else if let Some((u, v)) = m.closure_witness(&a, &b)? {
                writeln!(out, "LEQ u={} v={}", g.word_string(u), g.word_string(v))?;
            } else if let Some((u, v)) = m.closure_witness(&b, &a)? {
                writeln!(out, "GEQ u={} v={}", g.word_string(u), g.word_string(v))?;
            } else {
                writeln!(out, "INCOMPARABLE")?;
            }
            Ok(0)
        }
        Command::Components {
            group,
            label,
            stratum,
        } => {
            let m = build_model(&group)?;
            let o = m.parse_label(&label).map_err(Failure::label)?;
            let i = parse_stratum(&m, &stratum)?;
            for l in m.intersection_components(&o, i) {
                writeln!(out, "{}", m.format_label(&l))?;
            }
            Ok(0)
        }
        Command::Verify {
            group,
            suite,
            seed,
            samples,
            inject_fault,
        } => {
            let m = build_model(&group)?;
            let report = verify::run(&m, suite, seed, samples, inject_fault);
            let pass = report.iter().all(|s| s.pass);
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
            let doc = serde_json::json!({
                "pass": pass,
                "seed": seed,
                "suites": report.iter().map(verify::SuiteReport::to_json).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Matrix { n, q, dump } => {
            let mm = MatrixModel::new(n, q)?;
            let points = mm.compactification_points().len();
            let matching = mm.label_matching();
            let (orbits, ok) = match &matching {
                Ok(mt) => {
                    let sizes_ok = mt.assignment.iter().all(|(o, k)| {
                        let want = mm.orbit_model().point_count_poly(o).unwrap().eval(q as i64);
                        mt.orbits[*k].len() as i64 == want
                    });
                    (mt.orbits.len(), sizes_ok)
                }
                Err(_) => (mm.orbit_partition().len(), false),
            };
            let labels = mm.orbit_model().enumerate_orbits(None).len();
            let cells = mm.verify_group_cells();
            let summary = BTreeMap::from([
                ("n", serde_json::json!(n)),
                ("q", serde_json::json!(q)),
                ("points", serde_json::json!(points)),
                (
                    "projective_space_points",
                    serde_json::json!(mm.projective_space_size()),
                ),
                ("orbits", serde_json::json!(orbits)),
                ("labels", serde_json::json!(labels)),
                ("bijection", serde_json::json!(matching.is_ok())),
                ("sizes_match", serde_json::json!(ok)),
                ("group_cells_match", serde_json::json!(cells.ok())),
            ]);
            writeln!(out, "{}", serde_json::to_string_pretty(&summary).unwrap())?;
            if let Err(e) = &matching {
                writeln!(out, "{e}")?;
            }
            if let (Some(path), Ok(mt)) = (dump, &matching) {
                fs::write(&path, mm.dump_json(mt))?;
            }
            Ok(if ok && cells.ok() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
