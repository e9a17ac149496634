use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use optbch::analysis::{extend_parameters, min_distance, AnalysisBudget, DistanceInfo};
use optbch::bounds::{certify, table1};
use optbch::certificate::{CertificateFile, CodeDescriptor};
use optbch::cyclotomy::{self, Coset};
use optbch::families::{verify_instance, FamilyKind, FamilySpec, Variant};
use optbch::fixtures::reproduction_matrix;
use optbch::{BchDesign, CyclicCode, Error, FieldSpec};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(name = "optbch", version, about = "Binary BCH code families and sphere-packing certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the descriptor of a code.
    Construct(CodeArgs),
    /// Minimum distance and weight distribution.
    Analyze(AnalyzeArgs),
    /// Emit a certificate file.
    Certify(AnalyzeArgs),
    /// Compare a family instance against its predicted parameters.
    Verify(VerifyArgs),
    /// Threshold table for a fixed lambda.
    Table1(Table1Args),
    /// Run the fixed reproduction checks and print a pass/fail matrix.
    ReproducePaper(ReproduceArgs),
    /// Cyclotomic cosets modulo n.
    Cosets(CosetArgs),
}

#[derive(Args, Clone)]
struct CodeArgs {
    /// Code length (odd).
    #[arg(long, conflicts_with = "family")]
    n: Option<usize>,
    /// Designed distance.
    #[arg(long, requires = "n")]
    delta: Option<usize>,
    /// First exponent of the consecutive run.
    #[arg(long, default_value_t = 1, requires = "n")]
    b: u64,
    /// type1 | type2 | type3 | lambda
    #[arg(long, requires_all = ["s", "variant"])]
    family: Option<FamilyKind>,
    #[arg(long)]
    s: Option<u32>,
    /// Divisor of 2^s - 1 for the lambda family.
    #[arg(long, default_value_t = 1)]
    lambda: u64,
    /// d<delta>b<b>, e.g. d3b1.
    #[arg(long)]
    variant: Option<Variant>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Largest dimension enumerated exhaustively.
    #[arg(long, default_value_t = 26)]
    max_enum_dim: u32,
    /// Largest C(n, w) for a low-weight support search.
    #[arg(long, default_value_t = 10_000_000_000)]
    budget: u64,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    workers: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> AnalysisBudget {
        let mut b = AnalysisBudget {
            max_enum_dim: self.max_enum_dim,
            support_budget: self.budget,
            ..AnalysisBudget::default()
        };
        if let Some(w) = self.workers {
            b.workers = w.max(1);
        }
        b
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Analyse the code with an overall parity bit appended.
    #[arg(long)]
    extended: bool,
    /// Accept a distance interval when the caps do not pin it down.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    family: FamilyKind,
    #[arg(long)]
    s: u32,
    #[arg(long, default_value_t = 1)]
    lambda: u64,
    #[arg(long)]
    variant: Variant,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, default_value_t = 1)]
    lambda: u64,
    #[arg(long, default_value_t = 10)]
    ell_max: u32,
    #[arg(long, default_value_t = 30)]
    horizon: u32,
    /// One JSON object per row.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// One JSON object per row.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct CosetArgs {
    #[arg(long, conflicts_with = "family")]
    n: Option<u64>,
    #[arg(long, requires = "s")]
    family: Option<FamilyKind>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, default_value_t = 1)]
    lambda: u64,
    #[arg(long)]
    json: bool,
    /// Allow tables above the size limit.
    #[arg(long)]
    force: bool,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ExceedsCap { .. } | Error::TooLarge(_) => EXIT_INFEASIBLE,
            Error::DegreeOutOfRange(_)
            | Error::NotADivisor { .. }
            | Error::EvenLength(_)
            | Error::DesignOutOfRange { .. }
            | Error::ResidueOutOfRange { .. }
            | Error::HorizonBelowS2 { .. }
            | Error::NoPrediction(_)
            | Error::ZeroCode
            | Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn print_json_line<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn family_spec(kind: FamilyKind, s: u32, lambda: u64, variant: Variant) -> FamilySpec {
    FamilySpec {
        kind,
        s,
        lambda: if kind == FamilyKind::GeneralLambda { lambda } else { 1 },
        variant,
    }
}

fn build_code(args: &CodeArgs) -> Result<CyclicCode, Failure> {
    if let Some(kind) = args.family {
        let (Some(s), Some(variant)) = (args.s, args.variant) else {
            return Err(usage("--family needs --s and --variant"));
        };
        let spec = family_spec(kind, s, args.lambda, variant);
        let n = spec.length()?;
        let m = cyclotomy::ord_mod(n)?;
        let field = Arc::new(FieldSpec::new(m.max(2))?);
        return Ok(CyclicCode::bch_in(spec.design()?, field)?);
    }
    let (Some(n), Some(delta)) = (args.n, args.delta) else {
        return Err(usage("give either --n and --delta, or --family, --s and --variant"));
    };
    Ok(CyclicCode::bch(BchDesign::new(n, delta, args.b))?)
}

fn construct(args: &CodeArgs) -> Outcome {
    let code = build_code(args)?;
    let d = CodeDescriptor::of(&code);
    if args.json {
        print_json(&d);
    } else {
        println!("n = {}, k = {}", d.n, d.dimension);
        println!("field GF(2^{}), modulus {}, beta = alpha^{}", d.m, d.modulus, d.beta_exp);
        println!(
            "defining set: {} residues, coset leaders {:?}",
            d.defining_set_size, d.defining_set_leaders
        );
        println!("bch bound {}", code.bch_bound());
        println!("g(x) = {}", d.generator);
    }
    Ok(0)
}

fn analysed(args: &AnalyzeArgs) -> Result<(CyclicCode, DistanceInfo, f64), Failure> {
    let code = build_code(&args.code)?;
    let start = Instant::now();
    let info = min_distance(&code, &args.budget.budget())?;
    let info = if args.extended {
        extend_parameters(&info)
    } else {
        info
    };
    let secs = start.elapsed().as_secs_f64();
    if !info.is_exact() && !args.force {
        return Err(Failure {
            code: EXIT_INFEASIBLE,
            message: format!(
                "distance of [{}, {}] only known to lie in {}..={} within the caps; \
                 raise --max-enum-dim or --budget, or pass --force to accept the interval",
                info.n, info.k, info.lower.value, info.upper.value
            ),
        });
    }
    Ok((code, info, secs))
}

#[derive(Serialize)]
struct AnalysisOutput<'a> {
    n: usize,
    k: usize,
    d_lower: optbch::analysis::DistanceBound,
    d_upper: optbch::analysis::DistanceBound,
    exact: bool,
    optimal: bool,
    perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight_distribution: Option<&'a optbch::WeightDistribution>,
}

fn analyze(args: &AnalyzeArgs) -> Outcome {
    let (_, info, _) = analysed(args)?;
    let cert = certify(&info)?;
    if args.code.json {
        print_json(&AnalysisOutput {
            n: info.n,
            k: info.k,
            d_lower: info.lower,
            d_upper: info.upper,
            exact: info.is_exact(),
            optimal: cert.optimal,
            perfect: cert.perfect,
            weight_distribution: info.distribution.as_ref(),
        });
        return Ok(0);
    }
    let d = if info.is_exact() {
        info.lower.value.to_string()
    } else {
        format!("{}..={}", info.lower.value, info.upper.value)
    };
    println!("[{}, {}, {}]", info.n, info.k, d);
    println!(
        "lower bound from {:?}, upper bound from {:?}",
        info.lower.provenance, info.upper.provenance
    );
    let mut verdicts = Vec::new();
    if cert.perfect {
        verdicts.push("perfect");
    }
    if cert.optimal {
        verdicts.push("distance-optimal (sphere packing)");
    }
    if !verdicts.is_empty() {
        println!("{}", verdicts.join(", "));
    }
    if let Some(wd) = &info.distribution {
        println!("weight enumerator: {wd}");
    }
    Ok(0)
}

fn certify_cmd(args: &AnalyzeArgs) -> Outcome {
    let (code, info, secs) = analysed(args)?;
    let cert = CertificateFile::build(&code, &info, args.extended, secs)?;
    print_json(&cert);
    Ok(0)
}

fn verify(args: &VerifyArgs) -> Outcome {
    let spec = family_spec(args.family, args.s, args.lambda, args.variant);
    let report = verify_instance(&spec, &args.budget.budget())?;
    if args.json {
        print_json(&report);
    } else {
        println!("{spec}: n = {}", report.n);
        for item in &report.items {
            println!(
                "  {:<34} {:<20} predicted {:<28} measured {}",
                item.name,
                item.status.to_string(),
                item.predicted.as_deref().unwrap_or("-"),
                item.measured.as_deref().unwrap_or("-"),
            );
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    Ok(if report.pass() { 0 } else { EXIT_MISMATCH })
}

fn table1_cmd(args: &Table1Args) -> Outcome {
    let rows = table1(args.lambda, args.ell_max, args.horizon)?;
    if args.json {
        for r in &rows {
            print_json_line(r);
        }
        return Ok(0);
    }
    println!("lambda = {}, horizon = {}", args.lambda, args.horizon);
    println!("{:>4} {:>4} {:>4} {:>10} {:>12}", "ell", "s1", "s2", "s_theorem", "s_empirical");
    for r in &rows {
        let emp = r.s_empirical.map_or("-".to_string(), |s| s.to_string());
        println!("{:>4} {:>4} {:>4} {:>10} {:>12}", r.ell, r.s1, r.s2, r.s_theorem, emp);
    }
    Ok(0)
}

fn reproduce(args: &ReproduceArgs) -> Outcome {
    let rows = reproduction_matrix(&args.budget.budget())?;
    for r in &rows {
        if args.json {
            print_json_line(r);
        } else {
            println!("{} {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.detail);
        }
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    if !args.json {
        println!("{} of {} checks passed", rows.len() - failed, rows.len());
    }
    Ok(if failed == 0 { 0 } else { EXIT_MISMATCH })
}

fn cache_path(n: u64) -> Option<PathBuf> {
    let dir = std::env::var_os("OPTBCH_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("cosets-{n}.json")))
}

/// Full coset table, read from or written to the cache directory if set.
fn coset_table(n: u64) -> Result<Vec<Coset>, Failure> {
    let path = cache_path(n);
    if let Some(p) = &path {
        if let Ok(text) = std::fs::read_to_string(p) {
            if let Ok(cosets) = serde_json::from_str::<Vec<Coset>>(&text) {
                return Ok(cosets);
            }
        }
    }
    let cosets = cyclotomy::all_cosets(n)?.cosets().to_vec();
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        // The cache is best effort; a failed write only costs a recomputation.
        let _ = std::fs::write(p, serde_json::to_string(&cosets).expect("serializable"));
    }
    Ok(cosets)
}

#[derive(Serialize)]
struct CosetOutput {
    n: u64,
    ord: u32,
    count: usize,
    cosets: Vec<Coset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leader_check: Option<cyclotomy::LeaderRangeReport>,
}

/// Largest modulus listed without `--force`.
const COSET_LIST_LIMIT: u64 = 1 << 20;

fn cosets(args: &CosetArgs) -> Outcome {
    let (n, spec) = match (args.n, args.family) {
        (Some(n), None) => (n, None),
        (None, Some(kind)) => {
            let s = args.s.ok_or_else(|| usage("--family needs --s"))?;
            let spec = family_spec(kind, s, args.lambda, Variant::new(3, 1));
            (spec.length()?, Some(spec))
        }
        _ => return Err(usage("give --n or --family with --s")),
    };
    if n > COSET_LIST_LIMIT && !args.force {
        return Err(Failure {
            code: EXIT_INFEASIBLE,
            message: format!("listing all cosets of {n} exceeds {COSET_LIST_LIMIT}; pass --force"),
        });
    }
    let ord = cyclotomy::ord_mod(n)?;
    // The leader check only counts as a failure where it is claimed to hold.
    let mut claimed = false;
    let leader_check = match spec {
        Some(spec) => {
            let (bound, size, from) = spec.coset_lemma();
            claimed = spec.s >= from;
            Some(cyclotomy::check_leader_range(n, bound, size)?)
        }
        None => None,
    };
    let cosets = coset_table(n)?;
    let out = CosetOutput {
        n,
        ord,
        count: cosets.len(),
        cosets,
        leader_check,
    };
    if args.json {
        print_json(&out);
    } else {
        println!("n = {n}, ord_n(2) = {ord}, {} cosets", out.count);
        for c in &out.cosets {
            println!("  C_{} (size {}): {:?}", c.leader, c.size(), c.members);
        }
        if let Some(r) = &out.leader_check {
            println!(
                "odd i <= {} lead cosets of size {}: {}",
                r.bound,
                r.expected_size,
                if r.pass { "yes" } else { "no" }
            );
        }
    }
    Ok(match &out.leader_check {
        Some(r) if claimed && !r.pass => EXIT_MISMATCH,
        _ => 0,
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Certify(a) => certify_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Table1(a) => table1_cmd(a),
        Command::ReproducePaper(a) => reproduce(a),
        Command::Cosets(a) => cosets(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
