use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hereditary::dvr::{compare_closed_forms, radical_power_check, BlockOrder};
use hereditary::k0::{classify, k0_rank, verify_tilting, CategoryDescriptor};
use hereditary::linalg::{PrimeField, DEFAULT_PRIME};
use hereditary::p1::{
    cartan_matrix, default_points, hom_ext_table, Point, SheafOrderJson, SheafOrderSpec,
    TiltingSummand,
};
use hereditary::wpl::{
    lambda_from_points, parse_rational, random_lambda, seeded_rng, verify_hilbert_match,
    GradedRingSpec,
};

/// Hereditary orders, tilting objects and weighted projective lines.
#[derive(Parser)]
#[command(name = "hered", version)]
struct Cli {
    /// Prime used by the rank-based oracles.
    #[arg(long, global = true, env = "HERED_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the Grothendieck group.
    K0(SpecArgs),
    /// Hom and Ext¹ between the summands of the tilting object.
    TiltingTable {
        #[command(flatten)]
        spec: SpecArgs,
        /// Exit 1 unless the summands form a tilting object.
        #[arg(long)]
        verify: bool,
        /// Remove a summand before verifying (`E`, `E-1`, `S2,3`).
        #[arg(long, allow_hyphen_values = true)]
        drop: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Hilbert function of the weighted projective line over `H`.
    Hilbert(HilbertArgs),
    /// Compare the weighted-projective-line and order-side Hilbert functions.
    VerifyHilbert {
        #[command(flatten)]
        args: HilbertArgs,
        /// Draw random admissible parameters from this seed instead.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Closed forms against the finite-dimensional oracle for a block order.
    Dvr {
        #[arg(long, allow_hyphen_values = true)]
        blocks: String,
        #[arg(long = "N", default_value_t = 3)]
        level: usize,
        #[arg(long)]
        radical_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify a category descriptor given as JSON or a path to a JSON file.
    Classify { descriptor: String },
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// JSON spec file: {"points": [...], "e": [...], "n": ...}.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Ramification indices, e.g. `2,3,7`; empty for none.
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    /// Ramification points, e.g. `inf,0,1,5`.
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// Rank of the ambient matrix algebra.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Clone)]
struct HilbertArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Parameters `λ_3, ...`, overriding the ones read off the points.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, default_value_t = 12)]
    max_phi: i64,
    /// Also compute the rank-based oracle dimension.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

enum Failure {
    Mismatch,
    Invalid(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let field = PrimeField::new(cli.prime)?;
    match cli.command {
        Command::K0(args) => {
            let spec = load_spec(&args)?;
            print_json(&k0_rank(&spec))
        }
        Command::TiltingTable {
            spec,
            verify,
            drop,
            format,
        } => cmd_tilting_table(&spec, verify, &drop, format),
        Command::Hilbert(args) => cmd_hilbert(&args, None, field, false),
        Command::VerifyHilbert { args, seed } => cmd_hilbert(&args, seed, field, true),
        Command::Dvr {
            blocks,
            level,
            radical_check,
            format,
        } => cmd_dvr(&blocks, level, radical_check, format, field),
        Command::Classify { descriptor } => {
            let text = match fs::read_to_string(&descriptor) {
                Ok(t) => t,
                Err(_) => descriptor,
            };
            let d: CategoryDescriptor = serde_json::from_str(&text)?;
            print_json(&classify(&d)?)
        }
    }
}

fn print_json<T: Serialize>(x: &T) -> Outcome {
    // round-trip through Value so object keys come out sorted
    let v: Value = serde_json::to_value(x)?;
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(())
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> Result<T, Failure>) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(f)
        .collect()
}

fn parse_int(s: &str) -> Result<i64, Failure> {
    s.parse()
        .map_err(|_| Failure::Invalid(format!("not an integer: {s:?}")))
}

fn load_spec(args: &SpecArgs) -> Result<SheafOrderSpec, Failure> {
    let mut j: SheafOrderJson = match &args.spec {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)?
        }
        None => SheafOrderJson::default(),
    };
    match &args.e {
        Some(e) => j.e = parse_list(e, parse_int)?,
        None if args.spec.is_none() => {
            return Err(Failure::Invalid("either --spec or --e is required".into()))
        }
        None => {}
    }
    if let Some(p) = &args.points {
        j.points = Some(parse_list(p, |x| Ok(x.to_string()))?);
    }
    if args.n.is_some() {
        j.n = args.n;
    }
    Ok(SheafOrderSpec::from_json(&j)?)
}

fn cmd_tilting_table(args: &SpecArgs, verify: bool, drop: &[String], format: Format) -> Outcome {
    let spec = load_spec(args)?;
    let mut table = hom_ext_table(&spec)?;
    for d in drop {
        let s: TiltingSummand = d.parse()?;
        table = table.without(s)?;
    }
    let verdict = verify_tilting(&table, &spec);
    match format {
        Format::Json => {
            let cartan = cartan_matrix(&table).to_i64_rows();
            let mut out = json!({
                "summands": table.summands(),
                "hom": table.hom_matrix(),
                "ext1": table.ext1_matrix(),
                "cartan": cartan,
            });
            if verify {
                out["verdict"] = serde_json::to_value(&verdict)?;
            }
            print_json(&out)?;
        }
        Format::Table => {
            print!("{}", table.to_text());
            if verify {
                match &verdict.reason {
                    None => println!(
                        "tilting: yes ({} summands, rank {})",
                        verdict.summands, verdict.rank
                    ),
                    Some(r) => println!("tilting: no ({r})"),
                }
            }
        }
    }
    if verify && !verdict.tilting {
        eprintln!("not tilting: {}", verdict.reason.unwrap_or_default());
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn cmd_hilbert(args: &HilbertArgs, seed: Option<u64>, field: PrimeField, verify: bool) -> Outcome {
    let spec = load_spec(&args.spec)?;
    let weights = spec.weights_i64();
    let (lambda, transform) = match (&args.lambda, seed) {
        (Some(l), _) => (parse_list(l, |x| Ok(parse_rational(x)?))?, None),
        (None, Some(seed)) => (random_lambda(weights.len(), &mut seeded_rng(seed)), None),
        (None, None) => {
            let points: Vec<Point> = if args.spec.points.is_some() || args.spec.spec.is_some() {
                spec.points().to_vec()
            } else {
                default_points(weights.len())
            };
            let l = lambda_from_points(&points)?;
            (l.lambda.clone(), Some(l))
        }
    };
    let ring = GradedRingSpec::new(&weights, lambda)?;
    let report = verify_hilbert_match(&ring, args.max_phi, args.oracle.then_some(field))?;
    match args.format {
        Format::Json if verify => {
            let mut v = serde_json::to_value(&report)?;
            if let Some(t) = transform {
                v["normalization"] = serde_json::to_value(t)?;
            }
            v["structure"] = json!(ring.group().structure_label());
            print_json(&v)?;
        }
        Format::Json => print_json(&report.rows)?,
        Format::Table => {
            println!("H = {}", ring.group().structure_label());
            println!(
                "{:>16} {:>5} {:>7} {:>9} {:>6}",
                "degree", "phi", "dim_wpl", "dim_order", "match"
            );
            for r in &report.rows {
                let deg = format!("{:?}", r.degree);
                println!(
                    "{deg:>16} {:>5} {:>7} {:>9} {:>6}",
                    r.phi, r.dim_wpl, r.dim_order, r.matches
                );
            }
        }
    }
    if verify {
        if let Some(m) = &report.first_mismatch {
            eprintln!(
                "mismatch at degree {:?} (phi {}): wpl {}, order side {}, oracle {:?}",
                m.degree, m.phi, m.dim_wpl, m.dim_order, m.dim_oracle
            );
            return Err(Failure::Mismatch);
        }
    }
    Ok(())
}

fn cmd_dvr(
    blocks: &str,
    level: usize,
    radical: bool,
    format: Format,
    field: PrimeField,
) -> Outcome {
    let blocks: Vec<usize> = parse_list(blocks, |x| {
        x.parse()
            .map_err(|_| Failure::Invalid(format!("not a block size: {x:?}")))
    })?;
    let order = BlockOrder::new(&blocks)?;
    if level < 2 {
        return Err(Failure::Invalid(format!(
            "truncation level must be at least 2, got {level}"
        )));
    }
    let rows = compare_closed_forms(&order, level, field)?;
    let check = if radical {
        Some(radical_power_check(&order, level)?)
    } else {
        None
    };
    let agree = rows.iter().all(|r| r.agree);
    let verified = check.as_ref().is_none_or(|c| c.verified);
    let maximal = order.is_maximal();
    match format {
        Format::Json => {
            let mut out = json!({
                "blocks": order.blocks(),
                "N": level,
                "rows": rows,
                "agree": agree,
                "maximal": maximal,
            });
            if let Some(c) = &check {
                out["radical"] = serde_json::to_value(c)?;
            }
            print_json(&out)?;
        }
        Format::Table => {
            if maximal {
                println!("maximal order, no simples");
            }
            println!(
                "{:>6} {:>6} {:>12} {:>12} {:>6}",
                "from", "to", "closed", "oracle", "agree"
            );
            for r in &rows {
                println!(
                    "{:>6} {:>6} {:>12} {:>12} {:>6}",
                    r.source,
                    r.target,
                    format!("{:?}", r.closed_form),
                    format!("{:?}", r.oracle),
                    r.agree
                );
            }
            if let Some(c) = &check {
                let e = c.ramification_index;
                if c.verified {
                    println!("I^{e} = mΔ verified at N = {level}");
                } else {
                    println!("I^{e} ≠ mΔ at N = {level}: {:?}", c.mismatch);
                }
            }
        }
    }
    if maximal && format == Format::Json {
        eprintln!("maximal order, no simples");
    }
    if !agree {
        let r = rows.iter().find(|r| !r.agree).expect("some row disagrees");
        eprintln!(
            "disagreement at ({}, {}): closed {:?}, oracle {:?}",
            r.source, r.target, r.closed_form, r.oracle
        );
        return Err(Failure::Mismatch);
    }
    if !verified {
        eprintln!(
            "radical power check failed: {:?}",
            check.and_then(|c| c.mismatch)
        );
        return Err(Failure::Mismatch);
    }
    Ok(())
}
