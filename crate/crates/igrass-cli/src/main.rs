//! `igrass` — exact classification toolkit for smooth (Fano) intrinsic
//! Grassmannians of type (2,n) with Picard number two.
//!
//! Exit codes: 0 on success, 2 on validation failure (JSON diagnostics on
//! stderr), 64 on usage errors.

mod render;
mod rows;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use igrass::classify::{
    count_fano_formula, count_fano_oracle, enumerate_smooth_fano_full,
    enumerate_smooth_full_bounded, enumerate_truly_almost_fano_full, TypedVariety,
};
use igrass::faces;
use igrass::geometry::geometry_report;
use igrass::grading::{
    effective_cone, is_almost_free, is_homogeneous, is_pointed, moving_cone, Cone2, GradingData,
    Weight,
};
use igrass::hilbert::{graded_dim, graded_dim_oracle_with_bound, DEFAULT_ORACLE_BOUND};
use igrass::plucker::relations;
use igrass::{Error, Result};

use render::TableFormat;

#[derive(Parser)]
#[command(name = "igrass", version, about = "Exact toolkit for intrinsic Grassmannians of type (2,n) with Picard number two")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum TextFormat {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the three-term relations g_I generating the Plücker ideal
    Relations {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TextFormat,
    },
    /// Check the validity predicates of a grading and print its cones
    Validate {
        /// Grading JSON: {"n":..,"m":..,"t_weights":[[x,y],..],"s_weights":[..]}
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Positivity and smoothness analysis of a grading with an ample class
    Analyze {
        #[arg(long)]
        matrix: PathBuf,
        /// Ample class "x,y"
        #[arg(long)]
        ample: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate smooth full intrinsic Grassmannians of type (2,n)
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Only the Fano members (finite family)
        #[arg(long)]
        fano: bool,
        /// Only the truly almost Fano members (finite family)
        #[arg(long)]
        almost_fano: bool,
        /// All smooth members with alpha_n at most this cap
        #[arg(long)]
        max_alpha: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// Skip the h^0(-K_X) column
        #[arg(long)]
        no_h0: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Count smooth Fano full intrinsic Grassmannians per n
    Count {
        #[arg(long)]
        n: Option<u32>,
        /// Inclusive range "A..B"
        #[arg(long)]
        range: Option<String>,
        /// Use the brute-force enumeration instead of the closed formula
        #[arg(long)]
        oracle: bool,
    },
    /// Dimension of one graded component of the Cox ring
    Hilbert {
        #[arg(long)]
        matrix: PathBuf,
        /// Target degree "x,y"
        #[arg(long)]
        degree: String,
        /// Also run the dense straightening oracle and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Reproduce the smooth-Fano classification table for a range of n
    Table {
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// Skip the h^0(-K_X) column
        #[arg(long)]
        no_h0: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Geometry report of a classified variety
    Geometry {
        /// Variety JSON: {"type":1..6,"n":..,"m":..,"params":{..}}
        #[arg(long)]
        variety: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn parse_weight(text: &str) -> Result<Weight> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!(
            "expected \"x,y\", got {text:?}"
        )));
    }
    let x = parts[0]
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad x coordinate in {text:?}: {e}")))?;
    let y = parts[1]
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad y coordinate in {text:?}: {e}")))?;
    Ok(Weight::new(x, y))
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let parts: Vec<&str> = text.split("..").collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected \"A..B\", got {text:?}")));
    }
    let a = parts[0]
        .parse()
        .map_err(|e| Error::Parse(format!("bad range start in {text:?}: {e}")))?;
    let b = parts[1]
        .parse()
        .map_err(|e| Error::Parse(format!("bad range end in {text:?}: {e}")))?;
    if a > b {
        return Err(Error::Parse(format!("empty range {text:?}")));
    }
    Ok((a, b))
}

fn oracle_bound() -> i64 {
    std::env::var("GRASS_ORACLE_BOUND")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

fn cone_json(c: &Cone2) -> serde_json::Value {
    match c {
        Cone2::Zero => json!({"kind": "zero"}),
        Cone2::Ray(r) => json!({"kind": "ray", "rays": [[r.x, r.y]]}),
        Cone2::Salient(a, b) => json!({"kind": "salient", "rays": [[a.x, a.y], [b.x, b.y]]}),
        Cone2::Line(l) => json!({"kind": "line", "rays": [[l.x, l.y]]}),
        Cone2::HalfPlane(d) => json!({"kind": "halfplane", "rays": [[d.x, d.y]]}),
        Cone2::Full => json!({"kind": "full"}),
    }
}

fn cmd_relations(n: u32, format: TextFormat) -> Result<()> {
    let rels = relations(n)?;
    match format {
        TextFormat::Text => {
            for r in &rels {
                println!("{r}");
            }
        }
        TextFormat::Json => {
            let docs: Vec<serde_json::Value> = rels
                .iter()
                .map(|r| {
                    let terms: Vec<serde_json::Value> = r
                        .terms()
                        .iter()
                        .map(|(s, p, q)| {
                            json!([*s as i64, [p.i(), p.j()], [q.i(), q.j()]])
                        })
                        .collect();
                    json!({"quad": r.quad(), "terms": terms})
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"n": n, "relations": docs}))
                    .expect("serializes")
            );
        }
    }
    Ok(())
}

fn cmd_validate(matrix: &Path) -> Result<()> {
    let g = GradingData::from_json(&read_to_string(matrix)?)?;
    println!("homogeneous: {}", is_homogeneous(&g));
    println!("pointed: {}", is_pointed(&g));
    println!("almost_free: {}", is_almost_free(&g));
    match moving_cone(&g) {
        Ok(mov) => {
            println!(
                "moving_cone_full_dimensional: {}",
                mov.is_full_dimensional()
            );
            println!(
                "effective_cone: {}",
                effective_cone(&g).expect("pointed checked")
            );
            println!("moving_cone: {mov}");
        }
        Err(e) => {
            println!("moving_cone_full_dimensional: false");
            println!("effective_cone: error: {e}");
            println!("moving_cone: error: {e}");
        }
    }
    Ok(())
}

fn cmd_analyze(matrix: &Path, ample: &str, as_json: bool) -> Result<()> {
    let g = GradingData::from_json(&read_to_string(matrix)?)?;
    let u = parse_weight(ample)?;
    let homogeneous = is_homogeneous(&g);
    let pointed = is_pointed(&g);
    let almost_free = is_almost_free(&g);
    let eff = effective_cone(&g);
    let mov = moving_cone(&g);
    let split = faces::tau_split(&g, u);
    let samp = faces::semiample_cone(&g, u);
    let verdict = faces::verify_smooth(&g, u);
    let pic = faces::picard_subgroup_is_full(&g, u);
    let bpf = if verdict.is_smooth() {
        faces::bpf_saturated(&g, u).ok()
    } else {
        None
    };
    if as_json {
        let doc = json!({
            "homogeneous": homogeneous,
            "pointed": pointed,
            "almost_free": almost_free,
            "moving_cone_full_dimensional": mov.as_ref().map(|c| c.is_full_dimensional()).unwrap_or(false),
            "effective_cone": eff.as_ref().map(cone_json).unwrap_or(json!(null)),
            "moving_cone": mov.as_ref().map(cone_json).unwrap_or(json!(null)),
            "semiample_cone": samp.as_ref().map(cone_json).unwrap_or(json!(null)),
            "tau_plus": split.as_ref().map(|s| s.plus.len()).unwrap_or(0),
            "tau_minus": split.as_ref().map(|s| s.minus.len()).unwrap_or(0),
            "smoothness": verdict.to_string(),
            "picard_group_full": pic.as_ref().ok(),
            "bpf_saturated": bpf,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        return Ok(());
    }
    println!("homogeneous: {homogeneous}");
    println!("pointed: {pointed}");
    println!("almost_free: {almost_free}");
    match &mov {
        Ok(c) => println!("moving_cone_full_dimensional: {}", c.is_full_dimensional()),
        Err(e) => println!("moving_cone_full_dimensional: error: {e}"),
    }
    match &eff {
        Ok(c) => println!("effective_cone: {c}"),
        Err(e) => println!("effective_cone: error: {e}"),
    }
    match &mov {
        Ok(c) => println!("moving_cone: {c}"),
        Err(e) => println!("moving_cone: error: {e}"),
    }
    match &samp {
        Ok(c) => {
            println!("semiample_cone: {c}");
            println!("ample_cone: interior of {c}");
        }
        Err(e) => {
            println!("semiample_cone: error: {e}");
            println!("ample_cone: error: {e}");
        }
    }
    match &split {
        Ok(s) => {
            println!("tau_plus: {}", s.plus.len());
            println!("tau_minus: {}", s.minus.len());
        }
        Err(e) => {
            println!("tau_plus: error: {e}");
            println!("tau_minus: error: {e}");
        }
    }
    println!("smoothness: {verdict}");
    match &pic {
        Ok(b) => println!("picard_group_full: {b}"),
        Err(e) => println!("picard_group_full: error: {e}"),
    }
    match bpf {
        Some(b) => println!("bpf_saturated: {b}"),
        None => println!("bpf_saturated: not applicable"),
    }
    Ok(())
}

fn cmd_enumerate(
    n: u32,
    fano: bool,
    almost_fano: bool,
    max_alpha: Option<i64>,
    format: TableFormat,
    no_h0: bool,
    jobs: Option<usize>,
) -> Result<()> {
    let modes = usize::from(fano) + usize::from(almost_fano) + usize::from(max_alpha.is_some());
    if modes != 1 {
        return Err(Error::InvalidParameter(
            "pass exactly one of --fano, --almost-fano, --max-alpha \
             (the unrestricted smooth family is infinite)"
                .into(),
        ));
    }
    let varieties: Vec<TypedVariety> = if fano {
        enumerate_smooth_fano_full(n)?
    } else if almost_fano {
        enumerate_truly_almost_fano_full(n)?
    } else {
        enumerate_smooth_full_bounded(n, max_alpha.unwrap())?
    };
    let rows = rows::build_rows(varieties, !no_h0, jobs)?;
    print!("{}", render::render(&rows, format));
    Ok(())
}

fn cmd_count(n: Option<u32>, range: Option<String>, oracle: bool) -> Result<()> {
    let count = |n: u32| -> Result<String> {
        let c = if oracle {
            count_fano_oracle(n)?
        } else {
            count_fano_formula(n)?
        };
        Ok(c.to_string())
    };
    match (n, range) {
        (Some(n), None) => println!("{}", count(n)?),
        (None, Some(r)) => {
            let (a, b) = parse_range(&r)?;
            let counts: Vec<String> = (a..=b).map(count).collect::<Result<_>>()?;
            println!("{}", counts.join(","));
        }
        _ => {
            return Err(Error::InvalidParameter(
                "pass exactly one of --n or --range".into(),
            ))
        }
    }
    Ok(())
}

fn cmd_hilbert(matrix: &Path, degree: &str, oracle: bool) -> Result<()> {
    let g = GradingData::from_json(&read_to_string(matrix)?)?;
    let target = parse_weight(degree)?;
    let dim = graded_dim(&g, target)?;
    println!("{dim}");
    if oracle {
        let check = graded_dim_oracle_with_bound(&g, target, oracle_bound())?;
        println!("oracle: {check}");
        if check != dim {
            return Err(Error::Constraint(format!(
                "oracle disagrees: dp = {dim}, oracle = {check}"
            )));
        }
    }
    Ok(())
}

fn cmd_table(
    n_from: u32,
    n_to: u32,
    format: TableFormat,
    no_h0: bool,
    jobs: Option<usize>,
) -> Result<()> {
    if n_from > n_to {
        return Err(Error::InvalidParameter(format!(
            "empty range {n_from}..{n_to}"
        )));
    }
    let mut varieties = Vec::new();
    for n in n_from..=n_to {
        varieties.extend(enumerate_smooth_fano_full(n)?);
    }
    let rows = rows::build_rows(varieties, !no_h0, jobs)?;
    print!("{}", render::render(&rows, format));
    Ok(())
}

fn cmd_geometry(variety: &Path, as_json: bool) -> Result<()> {
    let v: TypedVariety = serde_json::from_str(&read_to_string(variety)?)
        .map_err(|e| Error::Parse(format!("bad variety document: {e}")))?;
    let report = geometry_report(&v)?;
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
        return Ok(());
    }
    println!("type: {}", v.type_tag());
    println!("n: {}", v.n());
    println!("m: {}", v.m());
    println!("dim: {}", report.dim_x);
    for c in &report.contractions {
        println!("contraction at {}: {}", c.class, c.kind);
    }
    for s in &report.structures {
        println!("structure: {s}");
    }
    if let Some(b) = &report.bundle {
        let twists: Vec<String> = b.twists.iter().map(|t| t.to_string()).collect();
        println!(
            "bundle: s={} t1={} t2={} twists=[{}]",
            b.s,
            b.t1,
            b.t2,
            twists.join(",")
        );
    }
    println!("fujita_freeness: {}", report.fujita);
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Relations { n, format } => cmd_relations(n, format),
        Command::Validate { matrix } => cmd_validate(&matrix),
        Command::Analyze {
            matrix,
            ample,
            json,
        } => cmd_analyze(&matrix, &ample, json),
        Command::Enumerate {
            n,
            fano,
            almost_fano,
            max_alpha,
            format,
            no_h0,
            jobs,
        } => cmd_enumerate(n, fano, almost_fano, max_alpha, format, no_h0, jobs),
        Command::Count { n, range, oracle } => cmd_count(n, range, oracle),
        Command::Hilbert {
            matrix,
            degree,
            oracle,
        } => cmd_hilbert(&matrix, &degree, oracle),
        Command::Table {
            n_from,
            n_to,
            format,
            no_h0,
            jobs,
        } => cmd_table(n_from, n_to, format, no_h0, jobs),
        Command::Geometry { variety, json } => cmd_geometry(&variety, json),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter(_) => "invalid_parameter",
        Error::Constraint(_) => "constraint",
        Error::NotPointed => "not_pointed",
        Error::ChamberDegenerate(_) => "chamber_degenerate",
        Error::UnknownStructure(_) => "unknown_structure",
        Error::NonIntegralClass(..) => "non_integral_class",
        Error::NoCertificate => "no_certificate",
        Error::OracleTooLarge { .. } => "oracle_too_large",
        Error::NeedsPermutation(_) => "needs_permutation",
        Error::NoContraction => "no_contraction",
        Error::NotApplicable(_) => "not_applicable",
        Error::Precondition(_) => "precondition",
        Error::Parse(_) => "parse",
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(64);
                }
            }
        }
    };
    if let Err(e) = run(cli) {
        eprintln!(
            "{}",
            json!({"error": e.to_string(), "kind": error_kind(&e)})
        );
        std::process::exit(2);
    }
}
