//! Command-line front end: Jaco graph tables, index computation,
//! Khazamula irregularity, claim verification, and the directed join.
//!
//! Exit codes: 0 success (or all verification verdicts as documented),
//! 1 unexpected verification outcome, 2 usage or parse error, 3 I/O
//! error.

use clap::{Parser, Subcommand, ValueEnum};
use khazamula::fib::weight_vector;
use khazamula::graph::Digraph;
use khazamula::indices::{f_zagreb, zagreb};
use khazamula::irregularity::{
    irr_k, irr_k_terms, irr_kc_report, Convention, IrregularityError, LinearParams,
};
use khazamula::jaco;
use khazamula::verify::{
    all_expected, directed_join_rhs, run_suite, ClaimId, SuiteOptions, Verdict,
};
use khazamula_cli::arclist;
use khazamula_cli::output::{
    bigint_json, float_cell, markdown_header, markdown_row, parse_rational, record_json,
    record_markdown, RECORD_COLUMNS,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "khazamula",
    version,
    about = "Jaco graphs, Zagreb-style indices, and Khazamula irregularity measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Md,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Zagreb,
    Fzagreb,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    PerTerm,
    Aggregate,
}

impl From<ConventionArg> for Convention {
    fn from(arg: ConventionArg) -> Convention {
        match arg {
            ConventionArg::PerTerm => Convention::PerTerm,
            ConventionArg::Aggregate => Convention::Aggregate,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Degree/weight rows, Jaconian set, and arc list of J_n(1)
    Jaco {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
    /// Index families on the undirected view of an arc-list file
    Indices {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FamilyArg::Both)]
        family: FamilyArg,
    },
    /// Linear Khazamula irregularity of an arc-list file
    Irrk {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        slope: String,
        #[arg(long)]
        intercept: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::PerTerm)]
        convention: ConventionArg,
    },
    /// Circular Khazamula irregularity of an arc-list file
    Irrkc {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::PerTerm)]
        convention: ConventionArg,
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Run the claim-verification suite
    Verify {
        /// Comma-separated claim ids (default: all), e.g. table1,prop3.5
        #[arg(long)]
        claims: Option<String>,
        #[arg(long = "max-n")]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Md)]
        format: ReportFormat,
    },
    /// Directed join of two arc-list files and both sides of the join identity
    Join {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        slope: String,
        #[arg(long)]
        intercept: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    arclist::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn params_from(slope: &str, intercept: &str) -> Result<LinearParams, Failure> {
    Ok(LinearParams::new(
        parse_rational(slope).map_err(Failure::usage)?,
        parse_rational(intercept).map_err(Failure::usage)?,
    ))
}

fn run_jaco(n: u32, format: TableFormat) -> Result<u8, Failure> {
    if n < 1 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let rows = jaco::degree_sequence(n).expect("n >= 1");
    let jaconian = jaco::jaconian_vertices(n).expect("n >= 1");
    let graph = jaco::build_jaco(n).expect("n >= 1");
    let delta = graph.degree_profile().max_total();
    match format {
        TableFormat::Md => {
            println!("{}", markdown_header(&["i", "d_in", "d_out", "degree", "weight"]));
            for r in &rows {
                println!(
                    "{}",
                    markdown_row(&[
                        r.index.to_string(),
                        r.in_degree.to_string(),
                        r.out_degree_infinite.to_string(),
                        r.degree.to_string(),
                        r.weight.to_string(),
                    ])
                );
            }
            println!();
            let set: Vec<String> = jaconian.iter().map(|v| format!("v{v}")).collect();
            println!("Jaconian set: {{{}}} (delta = {delta})", set.join(", "));
            println!();
            println!("Arcs:");
            for &(t, h) in graph.arcs() {
                println!("{t} {h}");
            }
        }
        TableFormat::Csv => {
            println!("i,d_in,d_out,degree,weight");
            for r in &rows {
                println!(
                    "{},{},{},{},{}",
                    r.index, r.in_degree, r.out_degree_infinite, r.degree, r.weight
                );
            }
            println!("# delta,{delta}");
            for v in &jaconian {
                println!("# jaconian,{v}");
            }
            for &(t, h) in graph.arcs() {
                println!("# arc,{t},{h}");
            }
        }
        TableFormat::Json => {
            let value = json!({
                "n": n,
                "delta": delta,
                "jaconian": jaconian,
                "rows": rows.iter().map(|r| json!({
                    "i": r.index,
                    "d_in": r.in_degree,
                    "d_out": r.out_degree_infinite,
                    "degree": r.degree,
                    "weight": bigint_json(&r.weight),
                })).collect::<Vec<_>>(),
                "arcs": graph.arcs().iter().map(|&(t, h)| json!([t, h])).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
        }
    }
    Ok(0)
}

fn run_indices(input: &Path, family: FamilyArg) -> Result<u8, Failure> {
    let g = read_digraph(input)?;
    let view = g.underlying_simple_graph();
    let zagreb_json = || {
        let m = zagreb(&view);
        json!({
            "m1": bigint_json(&m.m1),
            "m2": bigint_json(&m.m2),
            "m3": bigint_json(&m.m3),
            "m4": bigint_json(&m.m4),
        })
    };
    let fzagreb_json = || {
        let z = f_zagreb(&view, &weight_vector(&g)).expect("weights cover every vertex");
        json!({
            "z1": bigint_json(&z.z1),
            "z2": bigint_json(&z.z2),
            "z3": bigint_json(&z.z3),
            "z4": bigint_json(&z.z4),
        })
    };
    let value: Value = match family {
        FamilyArg::Zagreb => zagreb_json(),
        FamilyArg::Fzagreb => fzagreb_json(),
        FamilyArg::Both => json!({ "zagreb": zagreb_json(), "fzagreb": fzagreb_json() }),
    };
    println!("{}", serde_json::to_string(&value).expect("valid json"));
    Ok(0)
}

fn run_irrk(
    input: &Path,
    slope: &str,
    intercept: &str,
    convention: ConventionArg,
) -> Result<u8, Failure> {
    let g = read_digraph(input)?;
    let params = params_from(slope, intercept)?;
    let total = irr_k(&g, &params, convention.into());
    println!("{total}");
    println!("vertex lower upper A B value");
    for (bound, form) in irr_k_terms(&g) {
        let upper = bound.upper.map_or("-".to_string(), |u| u.to_string());
        println!(
            "{} {} {} {} {} {}",
            bound.vertex,
            bound.lower,
            upper,
            form.slope_coeff,
            form.intercept_coeff,
            form.evaluate(&params)
        );
    }
    Ok(0)
}

fn run_irrkc(input: &Path, convention: ConventionArg, radius: Option<f64>) -> Result<u8, Failure> {
    let g = read_digraph(input)?;
    let report = irr_kc_report(&g, radius).map_err(|e| match e {
        IrregularityError::ArclessGraph => {
            Failure::usage("arcless graph: supply --radius to fix the integrand")
        }
        other => Failure::usage(other.to_string()),
    })?;
    println!("{}", float_cell(report.total(convention.into())));
    println!("r = {}", report.radius);
    println!("vertex lower upper value");
    for term in &report.terms {
        let upper = term.upper.map_or("-".to_string(), |u| u.to_string());
        println!(
            "{} {} {} {}",
            term.vertex,
            term.lower,
            upper,
            float_cell(term.value)
        );
    }
    Ok(0)
}

fn run_verify(
    claims: Option<&str>,
    max_n: Option<u32>,
    format: ReportFormat,
) -> Result<u8, Failure> {
    let claims = match claims {
        None => ClaimId::ALL.to_vec(),
        Some(list) => list
            .split(',')
            .filter(|part| !part.trim().is_empty())
            .map(|part| ClaimId::parse(part).map_err(|e| Failure::usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?,
    };
    if claims.is_empty() {
        return Err(Failure::usage("no claims selected"));
    }
    if max_n == Some(0) {
        return Err(Failure::usage("--max-n must be at least 1"));
    }
    let records = run_suite(&SuiteOptions { claims, max_n });
    let ok = all_expected(&records);
    match format {
        ReportFormat::Md => {
            println!("{}", markdown_header(&RECORD_COLUMNS));
            for record in &records {
                println!("{}", record_markdown(record));
            }
            let mismatches = records
                .iter()
                .filter(|r| r.verdict == Verdict::Mismatch)
                .count();
            println!();
            println!(
                "{} records, {} documented mismatches, {}",
                records.len(),
                mismatches,
                if ok {
                    "all verdicts as documented"
                } else {
                    "VERDICTS DEVIATE FROM DOCUMENTATION"
                }
            );
        }
        ReportFormat::Json => {
            let value = json!({
                "records": records.iter().map(record_json).collect::<Vec<_>>(),
                "all_expected": ok,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn run_join(left: &Path, right: &Path, slope: &str, intercept: &str) -> Result<u8, Failure> {
    let g = read_digraph(left)?;
    let h = read_digraph(right)?;
    let params = params_from(slope, intercept)?;
    let join = khazamula::graph::directed_join(&g, &h);
    print!("{}", arclist::emit(&join));
    let per_term = irr_k(&join, &params, Convention::PerTerm);
    let aggregate = irr_k(&join, &params, Convention::Aggregate);
    let rhs = directed_join_rhs(&g, &h, &params);
    println!("per-term = {per_term}");
    println!("aggregate = {aggregate}");
    println!("rhs = {rhs}");
    println!(
        "verdict: {}",
        if aggregate == rhs { "match" } else { "mismatch" }
    );
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Jaco { n, format } => run_jaco(n, format),
        Command::Indices { input, family } => run_indices(&input, family),
        Command::Irrk { input, slope, intercept, convention } => {
            run_irrk(&input, &slope, &intercept, convention)
        }
        Command::Irrkc { input, convention, radius } => run_irrkc(&input, convention, radius),
        Command::Verify { claims, max_n, format } => run_verify(claims.as_deref(), max_n, format),
        Command::Join { left, right, slope, intercept } => {
            run_join(&left, &right, &slope, &intercept)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
