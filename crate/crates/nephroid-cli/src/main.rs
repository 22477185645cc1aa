//! `nephroid` CLI: bound tables, containment verification, curve export,
//! and point evaluation.
//!
//! Exit codes are a stable contract: 0 success/contained, 1 violated,
//! 2 usage error, 3 I/O failure.

mod format;
mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nephroid::bounds::{
    all_sharp_bounds, beta_l, corollary_disk_threshold, hg_linear_beta, janowski_beta, BetaBound,
};
use nephroid::dominants::{eval_dominant, DominantCase, DominantSpec, Family};
use nephroid::numerics::{hyp2f1, Hyp2F1Params};
use nephroid::targets::{angular_distance, boundary_point, eval_target, TargetFunction};
use nephroid::verifier::{range_of_tau_delta, verify_containment, ContainmentVerdict};
use nephroid::ComplexValue;
use std::io::Write;
use std::process::ExitCode;

use format::fmt_g15;

#[derive(Parser)]
#[command(
    name = "nephroid",
    version,
    about = "Sharp subordination bounds for the nephroid domain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of sharp beta thresholds.
    Bounds(BoundsArgs),
    /// Verify containment of a dominant's image in the nephroid region.
    Verify(VerifyArgs),
    /// Export a curve (target boundary, dominant boundary image, or tau/delta table).
    Curve(CurveArgs),
    /// Evaluate a target, dominant, or 2F1 at one point.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilySlug {
    /// The nephroid map itself (target only).
    Nephroid,
    Lemb,
    #[value(name = "shifted-lemb")]
    ShiftedLemb,
    Sigmoid,
    Exp,
    Crescent,
    Cardioid,
    Rational,
    Sine,
    Janowski,
    #[value(name = "hg-lem")]
    HgLem,
    #[value(name = "hg-linear")]
    HgLinear,
}

impl FamilySlug {
    fn name(self) -> &'static str {
        match self {
            FamilySlug::Nephroid => "nephroid",
            FamilySlug::Lemb => "lemb",
            FamilySlug::ShiftedLemb => "shifted-lemb",
            FamilySlug::Sigmoid => "sigmoid",
            FamilySlug::Exp => "exp",
            FamilySlug::Crescent => "crescent",
            FamilySlug::Cardioid => "cardioid",
            FamilySlug::Rational => "rational",
            FamilySlug::Sine => "sine",
            FamilySlug::Janowski => "janowski",
            FamilySlug::HgLem => "hg-lem",
            FamilySlug::HgLinear => "hg-linear",
        }
    }

    fn family(self, a: Option<f64>, b: Option<f64>) -> Result<Family, String> {
        Ok(match self {
            FamilySlug::Nephroid => {
                return Err("nephroid is the region itself, not a dominant family".into())
            }
            FamilySlug::Lemb => Family::LemB,
            FamilySlug::ShiftedLemb => Family::ShiftedLemB,
            FamilySlug::Sigmoid => Family::Sigmoid,
            FamilySlug::Exp => Family::Exponential,
            FamilySlug::Crescent => Family::Crescent,
            FamilySlug::Cardioid => Family::Cardioid,
            FamilySlug::Rational => Family::RationalK,
            FamilySlug::Sine => Family::Sine,
            FamilySlug::Janowski => {
                let (a, b) = match (a, b) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err("family janowski requires --A and --B".into()),
                };
                Family::Janowski { a, b }
            }
            FamilySlug::HgLem => Family::HgLemniscate,
            FamilySlug::HgLinear => Family::HgLinear,
        })
    }

    fn target(self, a: Option<f64>, b: Option<f64>) -> Result<TargetFunction, String> {
        if self == FamilySlug::Nephroid {
            return Ok(TargetFunction::Nephroid);
        }
        self.family(a, b)?
            .target()
            .ok_or_else(|| "hg-linear has no target curve".into())
    }
}

fn slug_of_family(f: Family) -> &'static str {
    match f {
        Family::LemB => "lemb",
        Family::ShiftedLemB => "shifted-lemb",
        Family::Sigmoid => "sigmoid",
        Family::Exponential => "exp",
        Family::Crescent => "crescent",
        Family::Cardioid => "cardioid",
        Family::RationalK => "rational",
        Family::Sine => "sine",
        Family::Janowski { .. } => "janowski",
        Family::HgLemniscate => "hg-lem",
        Family::HgLinear => "hg-linear",
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseSlug {
    J0,
    J1,
    J2,
    Linear,
}

impl CaseSlug {
    fn case(self) -> DominantCase {
        match self {
            CaseSlug::J0 => DominantCase::J0,
            CaseSlug::J1 => DominantCase::J1,
            CaseSlug::J2 => DominantCase::J2,
            CaseSlug::Linear => DominantCase::Linear,
        }
    }
}

fn case_name(c: DominantCase) -> &'static str {
    match c {
        DominantCase::J0 => "j0",
        DominantCase::J1 => "j1",
        DominantCase::J2 => "j2",
        DominantCase::Linear => "linear",
    }
}

#[derive(Args)]
struct BoundsArgs {
    /// Restrict the table to one family.
    #[arg(long)]
    family: Option<FamilySlug>,
    /// Janowski parameter A.
    #[arg(long = "A", allow_hyphen_values = true)]
    cap_a: Option<f64>,
    /// Janowski parameter B.
    #[arg(long = "B", allow_hyphen_values = true)]
    cap_b: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    family: FamilySlug,
    /// Case j0/j1/j2 (linear families take it implicitly).
    #[arg(long)]
    case: Option<CaseSlug>,
    #[arg(long)]
    beta: f64,
    /// Boundary sample count.
    #[arg(long, default_value_t = 8192)]
    n: usize,
    /// Implicit-value tolerance for tangency/violation classification.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Janowski parameter A.
    #[arg(long = "A", allow_hyphen_values = true)]
    cap_a: Option<f64>,
    /// Janowski parameter B.
    #[arg(long = "B", allow_hyphen_values = true)]
    cap_b: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveKind {
    Target,
    Dominant,
    #[value(name = "tau-delta")]
    TauDelta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Svg,
}

#[derive(Args)]
struct CurveArgs {
    /// What to export.
    #[arg(long)]
    what: CurveKind,
    #[arg(long)]
    family: Option<FamilySlug>,
    #[arg(long)]
    case: Option<CaseSlug>,
    #[arg(long)]
    beta: Option<f64>,
    /// Sample count.
    #[arg(long, default_value_t = 1024)]
    n: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Janowski parameter A.
    #[arg(long = "A", allow_hyphen_values = true)]
    cap_a: Option<f64>,
    /// Janowski parameter B.
    #[arg(long = "B", allow_hyphen_values = true)]
    cap_b: Option<f64>,
}

#[derive(Args)]
struct EvalArgs {
    /// Evaluate a Carathéodory target.
    #[arg(long)]
    target: Option<FamilySlug>,
    /// Evaluate a dominant (requires --case and --beta).
    #[arg(long)]
    dominant: Option<FamilySlug>,
    /// Evaluate 2F1 (requires --a, --b, --c).
    #[arg(long, default_value_t = false)]
    hyp2f1: bool,
    #[arg(long)]
    case: Option<CaseSlug>,
    #[arg(long)]
    beta: Option<f64>,
    /// 2F1 parameter a.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// 2F1 parameter b.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// 2F1 parameter c.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    /// Janowski parameter A.
    #[arg(long = "A", allow_hyphen_values = true)]
    cap_a: Option<f64>,
    /// Janowski parameter B.
    #[arg(long = "B", allow_hyphen_values = true)]
    cap_b: Option<f64>,
    /// Point as `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Curve(args) => cmd_curve(args),
        Command::Eval(args) => cmd_eval(args),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_bound_row(bound: &BetaBound) {
    println!(
        "{:<13} {:<7} {:>16} {:>16} {:>16}  {}",
        slug_of_family(bound.family),
        case_name(bound.case),
        fmt_g15(bound.beta1),
        fmt_g15(bound.beta2),
        fmt_g15(bound.value),
        bound.formula
    );
}

fn cmd_bounds(args: BoundsArgs) -> ExitCode {
    if args.family == Some(FamilySlug::Nephroid) {
        return usage_error("the nephroid is the containing region; it has no beta bound");
    }
    let janowski_requested = args.family == Some(FamilySlug::Janowski);
    let janowski_params = match (args.cap_a, args.cap_b) {
        (Some(a), Some(b)) => Some((a, b)),
        (None, None) => None,
        _ => return usage_error("janowski bounds need both --a and --b"),
    };
    if janowski_requested && janowski_params.is_none() {
        return usage_error("family janowski requires --A and --B");
    }

    println!(
        "{:<13} {:<7} {:>16} {:>16} {:>16}  formula",
        "family", "case", "beta1", "beta2", "sharp beta"
    );

    let closed_form = match all_sharp_bounds() {
        Ok(rows) => rows,
        Err(e) => return usage_error(&e.to_string()),
    };
    let keep = |slug: &'static str| match args.family {
        None => true,
        Some(f) => f.name() == slug,
    };
    for bound in &closed_form {
        if keep(slug_of_family(bound.family)) {
            print_bound_row(bound);
        }
    }
    if let Some((a, b)) = janowski_params {
        if keep("janowski") {
            for case in [DominantCase::J0, DominantCase::J1, DominantCase::J2] {
                match janowski_beta(a, b, case) {
                    Ok(bound) => print_bound_row(&bound),
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
        }
    }
    if keep("hg-lem") {
        match beta_l(1e-9) {
            Ok(bl) => println!(
                "{:<13} {:<7} {:>16} {:>16} {:>16}  unique root of tau(beta)",
                "hg-lem",
                "linear",
                "-",
                "-",
                fmt_g15(bl)
            ),
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    if keep("hg-linear") {
        println!(
            "{:<13} {:<7} {:>16} {:>16} {:>16}  1/2",
            "hg-linear",
            "linear",
            "-",
            "-",
            fmt_g15(hg_linear_beta())
        );
    }
    if let Some(FamilySlug::Rational) = args.family {
        for case in [DominantCase::J0, DominantCase::J1, DominantCase::J2] {
            if let Ok(c) = corollary_disk_threshold(Family::RationalK, case) {
                println!(
                    "# disk-radius corollary {}: {}",
                    case_name(case),
                    fmt_g15(c)
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let family = match args.family.family(args.cap_a, args.cap_b) {
        Ok(f) => f,
        Err(msg) => return usage_error(&msg),
    };
    let case = match (args.family, args.case) {
        (FamilySlug::HgLem | FamilySlug::HgLinear, None) => DominantCase::Linear,
        (FamilySlug::HgLem | FamilySlug::HgLinear, Some(CaseSlug::Linear)) => DominantCase::Linear,
        (FamilySlug::HgLem | FamilySlug::HgLinear, Some(_)) => {
            return usage_error("hypergeometric families only take the linear case")
        }
        (_, Some(c)) => c.case(),
        (_, None) => return usage_error("--case is required for this family"),
    };
    let spec = match DominantSpec::new(family, case, args.beta) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let report = match verify_containment(spec, args.n, args.tol) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    let verdict = match report.verdict {
        ContainmentVerdict::ContainedStrict => "ContainedStrict",
        ContainmentVerdict::ContainedTangent => "ContainedTangent",
        ContainmentVerdict::Violated => "Violated",
    };
    println!(
        "family={} case={} beta={}",
        slug_of_family(family),
        case_name(case),
        fmt_g15(args.beta)
    );
    println!("samples={} skipped={}", report.samples, report.skipped);
    println!(
        "worst implicit value {} at angle {}",
        fmt_g15(report.worst_value),
        fmt_g15(report.worst_angle)
    );
    if !report.tangency_points.is_empty() {
        let pts: Vec<String> = report.tangency_points.iter().map(|t| fmt_g15(*t)).collect();
        println!("tangency angles: {}", pts.join(" "));
    }
    println!("verdict: {verdict}");
    match report.verdict {
        ContainmentVerdict::Violated => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

struct Rows {
    header: &'static str,
    rows: Vec<(f64, f64, f64)>,
}

fn curve_rows(args: &CurveArgs) -> Result<Rows, String> {
    let n = args.n;
    if n == 0 {
        return Err("sample count must be positive".into());
    }
    match args.what {
        CurveKind::Target => {
            let slug = args.family.ok_or("curve --what target needs --family")?;
            let target = slug.target(args.cap_a, args.cap_b)?;
            let mut rows = Vec::with_capacity(n);
            for k in 0..n {
                // n angles spanning (-pi, pi]; hits t = 0 exactly for even n
                let t = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * (k as f64 + 1.0) / n as f64;
                let w = boundary_point(target, t).map_err(|e| e.to_string())?;
                rows.push((t, w.re, w.im));
            }
            Ok(Rows {
                header: "t,u,v",
                rows,
            })
        }
        CurveKind::Dominant => {
            let slug = args.family.ok_or("curve --what dominant needs --family")?;
            let family = slug.family(args.cap_a, args.cap_b)?;
            let beta = args.beta.ok_or("curve --what dominant needs --beta")?;
            let case = match (slug, args.case) {
                (FamilySlug::HgLem | FamilySlug::HgLinear, _) => DominantCase::Linear,
                (_, Some(c)) => c.case(),
                (_, None) => return Err("--case is required for this family".into()),
            };
            let spec = DominantSpec::new(family, case, beta).map_err(|e| e.to_string())?;
            let skips = family.branch_point_angles();
            let mut rows = Vec::with_capacity(n);
            for k in 0..n {
                let t = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * (k as f64 + 1.0) / n as f64;
                if skips.iter().any(|&s| angular_distance(t, s) < 1e-6) {
                    continue;
                }
                let z = ComplexValue::new(t.cos(), t.sin());
                let w = eval_dominant(spec, z).map_err(|e| e.to_string())?;
                rows.push((t, w.re, w.im));
            }
            Ok(Rows {
                header: "t,u,v",
                rows,
            })
        }
        CurveKind::TauDelta => {
            let grid: Vec<f64> = (0..n).map(|k| 50.0 * (k as f64 + 1.0) / n as f64).collect();
            let table = range_of_tau_delta(&grid).map_err(|e| e.to_string())?;
            Ok(Rows {
                header: "beta,tau,delta",
                rows: table
                    .into_iter()
                    .map(|r| (r.beta, r.tau, r.delta))
                    .collect(),
            })
        }
    }
}

fn cmd_curve(args: CurveArgs) -> ExitCode {
    let rows = match curve_rows(&args) {
        Ok(r) => r,
        Err(msg) => return usage_error(&msg),
    };
    let payload = match args.format {
        OutputFormat::Csv => {
            let mut s = String::with_capacity(rows.rows.len() * 48);
            s.push_str(rows.header);
            s.push('\n');
            for (t, u, v) in &rows.rows {
                s.push_str(&fmt_g15(*t));
                s.push(',');
                s.push_str(&fmt_g15(*u));
                s.push(',');
                s.push_str(&fmt_g15(*v));
                s.push('\n');
            }
            s
        }
        OutputFormat::Svg => {
            let points: Vec<(f64, f64)> = rows.rows.iter().map(|(_, u, v)| (*u, *v)).collect();
            svg::polyline_svg(&points)
        }
    };
    match args.out {
        None => {
            if std::io::stdout().write_all(payload.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(&path, payload) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(3)
            }
        },
    }
}

fn parse_point(s: &str) -> Result<ComplexValue, String> {
    let (re, im) = s.split_once(',').ok_or("point must be re,im")?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("bad real part {re:?}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("bad imaginary part {im:?}"))?;
    Ok(ComplexValue::new(re, im))
}

fn cmd_eval(args: EvalArgs) -> ExitCode {
    let z = match parse_point(&args.z) {
        Ok(z) => z,
        Err(msg) => return usage_error(&msg),
    };
    let modes = args.target.is_some() as u8 + args.dominant.is_some() as u8 + args.hyp2f1 as u8;
    if modes != 1 {
        return usage_error("pick exactly one of --target, --dominant, --hyp2f1");
    }
    let value = if let Some(slug) = args.target {
        let target = match slug.target(args.cap_a, args.cap_b) {
            Ok(t) => t,
            Err(msg) => return usage_error(&msg),
        };
        eval_target(target, z)
    } else if let Some(slug) = args.dominant {
        let family = match slug.family(args.cap_a, args.cap_b) {
            Ok(f) => f,
            Err(msg) => return usage_error(&msg),
        };
        let beta = match args.beta {
            Some(b) => b,
            None => return usage_error("--dominant needs --beta"),
        };
        let case = match (slug, args.case) {
            (FamilySlug::HgLem | FamilySlug::HgLinear, _) => DominantCase::Linear,
            (_, Some(c)) => c.case(),
            (_, None) => return usage_error("--dominant needs --case"),
        };
        DominantSpec::new(family, case, beta).and_then(|spec| eval_dominant(spec, z))
    } else {
        let (a, b, c) = match (args.a, args.b, args.c) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => return usage_error("--hyp2f1 needs --a, --b, --c"),
        };
        Hyp2F1Params::new(a, b, c).and_then(|p| hyp2f1(p, z, 1e-12))
    };
    match value {
        Ok(w) => {
            println!("{} {}", fmt_g15(w.re), fmt_g15(w.im));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}
