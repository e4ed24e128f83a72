//! `ek`: exact invariants of sphere bundles over spheres and their
//! involution quotients, from the command line.
//!
//! Every number is printed as an exact fraction string; `--decimal` appends
//! approximations explicitly marked with `≈`. Output is deterministic:
//! identical arguments produce byte-identical stdout. Exit codes: 0 for
//! success or a positive verdict, 1 for a negative verdict, 2 for usage or
//! domain errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ek_core::{
    count_distinct, count_distinct_with_replica, ek_quotient, ek_sphere, enumerate_quotient_types,
    enumerate_types, evaluate_genus, is_diffeomorphic, is_diffeomorphic_any_orientation,
    multiplicative_sequence, separation_certificate, BundleId, DiffeoVerdict, Partition,
    QuotientId, Rat, SeriesKind,
};

mod report;

#[derive(Parser)]
#[command(
    name = "ek",
    version,
    about = "Exact diffeomorphism invariants of sphere bundles over spheres",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Append decimal approximations, marked with a leading `≈`.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant of a bundle total space, or the pair of an involution
    /// quotient (`--quotient`, defined for l = 1).
    Mu(MuArgs),
    /// Decide orientation-preserving diffeomorphism of two total spaces.
    Classify(ClassifyArgs),
    /// Enumerate diffeomorphism types within a family.
    Enumerate(EnumerateArgs),
    /// Count distinct invariants over one full period (l = 1).
    Count(CountArgs),
    /// Emit a moduli separation certificate for two bundles.
    Certify(CertifyArgs),
    /// Print or evaluate a multiplicative-sequence polynomial.
    Genus(GenusArgs),
    /// Regenerate every reproducibility claim and report matches.
    Report(ReportArgs),
}

#[derive(Args)]
struct MuArgs {
    /// Family selector: 1 (dimension 7) or 2 (dimension 15).
    #[arg(long)]
    n: u8,
    /// Clutching parameter.
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Euler number of the underlying vector bundle.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    l: i64,
    /// Compute the invariant pair of the involution quotient instead.
    #[arg(long)]
    quotient: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: u8,
    /// Euler number shared by both bundles.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    l: i64,
    /// Clutching parameter of the first bundle.
    #[arg(long, allow_hyphen_values = true)]
    k1: i64,
    /// Clutching parameter of the second bundle.
    #[arg(long, allow_hyphen_values = true)]
    k2: i64,
    /// Also try the orientation-reversed comparison and report both branches.
    #[arg(long)]
    any_orientation: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: u8,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    l: i64,
    /// Enumerate quotient types instead (defined for l = 1).
    #[arg(long)]
    quotient: bool,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: u8,
    /// Also run the quadratic reference loop (n = 2 only).
    #[arg(long)]
    replica: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    n: u8,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    l: i64,
    /// Clutching parameter of the first bundle.
    #[arg(long, allow_hyphen_values = true)]
    k0: i64,
    /// Clutching parameter of the second bundle.
    #[arg(long, allow_hyphen_values = true)]
    k1: i64,
}

#[derive(Args)]
struct GenusArgs {
    /// Which multiplicative sequence.
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Homogeneous degree of the member polynomial.
    #[arg(long)]
    degree: u32,
    /// Evaluate instead of printing: repeatable `monomial=value` pairs,
    /// e.g. `--eval p1^2=5760/7 --eval p2=0`. Missing monomials read as 0.
    #[arg(long = "eval", value_name = "MONOMIAL=VALUE")]
    eval: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "AHAT", alias = "ahat")]
    Ahat,
    #[value(name = "L", alias = "l")]
    L,
}

impl From<KindArg> for SeriesKind {
    fn from(kind: KindArg) -> SeriesKind {
        match kind {
            KindArg::Ahat => SeriesKind::Ahat,
            KindArg::L => SeriesKind::L,
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

/// Largest genus degree the CLI computes; the library handles any degree,
/// but partition counts grow quickly and the CLI bounds its own latency.
const GENUS_DEGREE_LIMIT: u32 = 16;

struct CmdOut {
    json: Value,
    tsv: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            ExitCode::from(code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(String, u8), String> {
    let out = match cli.command {
        Cmd::Mu(args) => cmd_mu(&args, cli.decimal)?,
        Cmd::Classify(args) => cmd_classify(&args)?,
        Cmd::Enumerate(args) => cmd_enumerate(&args)?,
        Cmd::Count(args) => cmd_count(&args)?,
        Cmd::Certify(args) => cmd_certify(&args, cli.decimal)?,
        Cmd::Genus(args) => cmd_genus(&args, cli.decimal)?,
        Cmd::Report(args) => return cmd_report(&args),
    };
    let rendered = match cli.format {
        Format::Json => render_json(&out.json),
        Format::Tsv => out.tsv,
    };
    Ok((rendered, out.exit))
}

fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}

fn approx(r: &Rat) -> String {
    format!("≈{}", r.to_f64())
}

fn cmd_mu(args: &MuArgs, decimal: bool) -> Result<CmdOut, String> {
    if args.quotient {
        if args.l != 1 {
            return Err("the quotient family is defined for l = 1".to_string());
        }
        let q = QuotientId::new(args.n, args.k).map_err(|e| e.to_string())?;
        let pair = ek_quotient(&q);
        let mut json = json!({
            "n": args.n,
            "k": args.k,
            "pair": [pair.low().to_string(), pair.high().to_string()],
        });
        let mut tsv = format!(
            "n\tk\tlow\thigh{}\n{}\t{}\t{}\t{}",
            if decimal { "\tlow_decimal\thigh_decimal" } else { "" },
            args.n,
            args.k,
            pair.low(),
            pair.high(),
        );
        if decimal {
            let (lo, hi) = (approx(pair.low().value()), approx(pair.high().value()));
            json["decimal"] = json!([lo, hi]);
            tsv.push_str(&format!("\t{lo}\t{hi}"));
        }
        tsv.push('\n');
        return Ok(CmdOut { json, tsv, exit: 0 });
    }

    let b = BundleId::new(args.n, args.k, args.l).map_err(|e| e.to_string())?;
    let value = ek_sphere(&b);
    let mut json = serde_json::to_value(&value).expect("serializable value");
    let mut tsv = format!(
        "n\tk\tl\tmu{}\n{}\t{}\t{}\t{}",
        if decimal { "\tdecimal" } else { "" },
        value.n,
        value.k,
        value.l,
        value.value,
    );
    if decimal {
        let a = approx(value.value.value());
        json["decimal"] = json!(a);
        tsv.push_str(&format!("\t{a}"));
    }
    tsv.push('\n');
    Ok(CmdOut { json, tsv, exit: 0 })
}

fn verdict_tsv_row(label: &str, v: &DiffeoVerdict) -> String {
    let reason = serde_json::to_value(v.reason).expect("serializable reason");
    format!(
        "{label}{}{}\t{}\t{}\t{}\t{}",
        if label.is_empty() { "" } else { "\t" },
        v.diffeomorphic,
        v.mu_left,
        v.mu_right,
        v.gamma_witness.map_or_else(|| "-".to_string(), |g| g.to_string()),
        reason.as_str().expect("string enum"),
    )
}

fn cmd_classify(args: &ClassifyArgs) -> Result<CmdOut, String> {
    let b1 = BundleId::new(args.n, args.k1, args.l).map_err(|e| e.to_string())?;
    let b2 = BundleId::new(args.n, args.k2, args.l).map_err(|e| e.to_string())?;
    if args.any_orientation {
        let verdicts = is_diffeomorphic_any_orientation(&b1, &b2).map_err(|e| e.to_string())?;
        let json = serde_json::to_value(&verdicts).expect("serializable verdicts");
        let tsv = format!(
            "branch\tdiffeomorphic\tmu_left\tmu_right\tgamma\treason\n{}\n{}\n",
            verdict_tsv_row("preserving", &verdicts.preserving),
            verdict_tsv_row("reversing", &verdicts.reversing),
        );
        let exit = u8::from(!verdicts.diffeomorphic);
        return Ok(CmdOut { json, tsv, exit });
    }
    let verdict = is_diffeomorphic(&b1, &b2).map_err(|e| e.to_string())?;
    let json = serde_json::to_value(&verdict).expect("serializable verdict");
    let tsv = format!(
        "diffeomorphic\tmu_left\tmu_right\tgamma\treason\n{}\n",
        verdict_tsv_row("", &verdict),
    );
    let exit = u8::from(!verdict.diffeomorphic);
    Ok(CmdOut { json, tsv, exit })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<CmdOut, String> {
    if args.quotient {
        if args.l != 1 {
            return Err("the quotient family is defined for l = 1".to_string());
        }
        let enumeration = enumerate_quotient_types(args.n).map_err(|e| e.to_string())?;
        let json = serde_json::to_value(&enumeration).expect("serializable enumeration");
        let tsv = format!(
            "n\tcount\texact\n{}\t{}\t{}\n",
            enumeration.n, enumeration.count, enumeration.exact
        );
        return Ok(CmdOut { json, tsv, exit: 0 });
    }
    let enumeration = enumerate_types(args.n, args.l).map_err(|e| e.to_string())?;
    let reps: Vec<String> = enumeration.representatives.iter().map(i64::to_string).collect();
    let json = serde_json::to_value(&enumeration).expect("serializable enumeration");
    let tsv = format!(
        "n\tl\tcount\trepresentatives\n{}\t{}\t{}\t{}\n",
        enumeration.n,
        enumeration.l,
        enumeration.count,
        reps.join(",")
    );
    Ok(CmdOut { json, tsv, exit: 0 })
}

fn cmd_count(args: &CountArgs) -> Result<CmdOut, String> {
    let report = if args.replica {
        count_distinct_with_replica(args.n).map_err(|e| e.to_string())?
    } else {
        count_distinct(args.n).map_err(|e| e.to_string())?
    };
    let json = serde_json::to_value(&report).expect("serializable counts");
    let (countermu, countermuquo) = report.replica.map_or_else(
        || ("-".to_string(), "-".to_string()),
        |r| (r.countermu.to_string(), r.countermuquo.to_string()),
    );
    let tsv = format!(
        "n\tsphere_values\tquotient_pairs\tcountermu\tcountermuquo\n{}\t{}\t{}\t{}\t{}\n",
        report.n, report.sphere_values, report.quotient_pairs, countermu, countermuquo
    );
    Ok(CmdOut { json, tsv, exit: 0 })
}

fn cmd_certify(args: &CertifyArgs, decimal: bool) -> Result<CmdOut, String> {
    let cert =
        separation_certificate(args.n, args.l, args.k0, args.k1).map_err(|e| e.to_string())?;
    let mut json = serde_json::to_value(&cert).expect("serializable certificate");
    let mut tsv = format!(
        "n\tl\tk0\tk1\tdelta\tseparated{}\n{}\t{}\t{}\t{}\t{}\t{}",
        if decimal { "\tdelta_decimal" } else { "" },
        cert.n,
        cert.l,
        cert.k0,
        cert.k1,
        cert.delta,
        cert.separated,
    );
    if decimal {
        let a = approx(&cert.delta);
        json["decimal"] = json!(a);
        tsv.push_str(&format!("\t{a}"));
    }
    tsv.push('\n');
    let exit = u8::from(!cert.separated);
    Ok(CmdOut { json, tsv, exit })
}

fn cmd_genus(args: &GenusArgs, decimal: bool) -> Result<CmdOut, String> {
    if args.degree > GENUS_DEGREE_LIMIT {
        return Err(format!(
            "degree {} exceeds the supported limit {}",
            args.degree, GENUS_DEGREE_LIMIT
        ));
    }
    let kind = SeriesKind::from(args.kind);
    let poly = multiplicative_sequence(kind, args.degree);
    if args.eval.is_empty() {
        let json = json!({
            "kind": kind,
            "degree": args.degree,
            "polynomial": poly.to_string(),
        });
        let tsv = format!("kind\tdegree\tpolynomial\n{kind}\t{}\t{poly}\n", args.degree);
        return Ok(CmdOut { json, tsv, exit: 0 });
    }

    let mut numbers: BTreeMap<Partition, Rat> = BTreeMap::new();
    for entry in &args.eval {
        let (monomial, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("--eval expects MONOMIAL=VALUE, got {entry:?}"))?;
        let partition = Partition::parse_monomial(monomial).map_err(|e| e.to_string())?;
        let value: Rat = value.trim().parse().map_err(|e: ek_core::CoreError| e.to_string())?;
        numbers.insert(partition, value);
    }
    let value = evaluate_genus(&poly, &numbers);
    let mut json = json!({
        "kind": kind,
        "degree": args.degree,
        "value": value.to_string(),
    });
    let mut tsv = format!(
        "kind\tdegree\tvalue{}\n{kind}\t{}\t{value}",
        if decimal { "\tdecimal" } else { "" },
        args.degree,
    );
    if decimal {
        let a = approx(&value);
        json["decimal"] = json!(a);
        tsv.push_str(&format!("\t{a}"));
    }
    tsv.push('\n');
    Ok(CmdOut { json, tsv, exit: 0 })
}

fn cmd_report(args: &ReportArgs) -> Result<(String, u8), String> {
    let report = report::build_report();
    let rendered = render_json(&serde_json::to_value(&report).expect("serializable report"));
    let exit = u8::from(!report.all_match);
    match &args.out {
        Some(path) => {
            std::fs::write(path, rendered)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok((String::new(), exit))
        }
        None => Ok((rendered, exit)),
    }
}
