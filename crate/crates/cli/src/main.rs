//! `degherm`: evaluate, dump and verify bivariate degenerate Hermite
//! polynomials from the command line.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degherm::numeric::{
    dhp_norm, eval_bvdhp, even_gf, nodhf, ortho_dhp, partial_norm, partial_ortho, GFPoint, Integral, NodhfKernel,
    QuadratureConfig,
};
use degherm::verify::{
    corrected_all_pass, heat_fd_check, reports_to_json, CheckReport, HeatGrid, Overrides, Registry, VariantPolicy,
};
use degherm::{bvdhp, make_param, Error, HermiteIndex, Variant};
use serde_json::json;

use output::sig15;

/// Off-diagonal and diagonal tolerance for `ortho`.
const ORTHO_TOL: f64 = 1e-8;
/// Agreement required between closed form and series in `gf-even`.
const GF_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(name = "degherm", version, about = "Bivariate degenerate Hermite polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate H_n(x, y | λ) by recurrence.
    Eval(EvalArgs),
    /// Print the exact coefficients of H_n(x, y | λ).
    Coeffs(CoeffsArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Orthogonality integral of H_n(x|λ), or of H_n(x,y|λ) at fixed y < 0.
    Ortho(OrthoArgs),
    /// Even-index generating function: closed form against series.
    #[command(name = "gf-even")]
    GfEven(GfEvenArgs),
    /// Negative-order function by Laplace integral.
    Nodhf(NodhfArgs),
    /// Finite-difference heat-equation check.
    Heat(HeatArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Paper,
    Corrected,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Paper => Variant::Paper,
            VariantArg::Corrected => Variant::Corrected,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Paper,
    Corrected,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    LConsistent,
    Paper,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    x: f64,
    #[arg(long)]
    y: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CoeffsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: CoeffFormat,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    /// Run a single check instead of the whole registry.
    #[arg(long)]
    check: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    variant: PolicyArg,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Pin a grid parameter, e.g. `--set n=3`. Requires `--check`.
    #[arg(long = "set", value_name = "KEY=VALUE", value_parser = parse_override)]
    set: Vec<(String, f64)>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct OrthoArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    lambda: f64,
    /// Fixed y < 0 for the partial orthogonality of H_n(x, y | λ).
    #[arg(long)]
    y: Option<f64>,
    #[arg(long, value_enum, default_value = "corrected")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct GfEvenArgs {
    #[arg(long)]
    t: f64,
    #[arg(long)]
    x: f64,
    #[arg(long)]
    y: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long, value_enum, default_value = "corrected")]
    variant: VariantArg,
    #[arg(long, default_value_t = 30)]
    terms: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct NodhfArgs {
    #[arg(long)]
    mu: f64,
    #[arg(long)]
    x: f64,
    #[arg(long)]
    y: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long, value_enum, default_value = "l-consistent")]
    kernel: KernelArg,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct HeatArgs {
    #[arg(long, default_value_t = 4)]
    n: u32,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, default_value_t = -5.0)]
    x_min: f64,
    #[arg(long, default_value_t = 5.0)]
    x_max: f64,
    #[arg(long, default_value_t = 0.01)]
    dx: f64,
    #[arg(long, default_value_t = 0.1)]
    y_max: f64,
    /// Step in y; defaults to 90% of the stability bound L·dx²/2.
    #[arg(long)]
    dy: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    format: TextOrJson,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v: f64 = v.trim().parse().map_err(|_| format!("`{v}` is not a number"))?;
    Ok((k.trim().to_string(), v))
}

/// Outcome of a subcommand: exit code 0 or 1. Errors map to 2 or 1 in `main`.
type CmdResult = Result<u8, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a),
        Command::Coeffs(a) => cmd_coeffs(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Ortho(a) => cmd_ortho(&a),
        Command::GfEven(a) => cmd_gf_even(&a),
        Command::Nodhf(a) => cmd_nodhf(&a),
        Command::Heat(a) => cmd_heat(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Quadrature { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn cmd_eval(a: &EvalArgs) -> CmdResult {
    HermiteIndex::new(a.n)?;
    let p = make_param(a.lambda)?;
    let value = eval_bvdhp(a.n, a.x, a.y, &p)?;
    match a.format {
        TextOrJson::Text => println!("{}", sig15(value)),
        TextOrJson::Json => print_json(&json!({
            "n": a.n, "x": a.x, "y": a.y, "lambda": a.lambda, "value": value,
        })),
    }
    Ok(0)
}

fn cmd_coeffs(a: &CoeffsArgs) -> CmdResult {
    HermiteIndex::new(a.n)?;
    let poly = bvdhp(a.n);
    match a.format {
        CoeffFormat::Json => println!("{}", poly.to_json()),
        CoeffFormat::Csv => {
            println!("ex,ey,eL,num,den");
            for r in poly.to_records() {
                println!("{},{},{},{},{}", r.ex, r.ey, r.el, r.num, r.den);
            }
        }
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let registry = Registry::standard();
    let policy = match a.variant {
        PolicyArg::Paper => VariantPolicy::Paper,
        PolicyArg::Corrected => VariantPolicy::Corrected,
        PolicyArg::Both => VariantPolicy::Both,
    };
    let overrides: Overrides = a.set.iter().cloned().collect();
    let reports = match &a.check {
        Some(name) => registry.run_check_policy(name, policy, &overrides)?,
        None if !overrides.is_empty() => {
            return Err(Error::Override("`--set` requires `--check`".into()));
        }
        None => registry.run_all(policy)?,
    };
    let text = reports_to_json(&reports);
    if let Some(path) = &a.json {
        fs::write(path, &text).map_err(|e| Error::Representation(format!("{}: {e}", path.display())))?;
    }
    match a.format {
        TextOrJson::Json => print!("{text}"),
        TextOrJson::Text => print_table(&reports),
    }
    Ok(if corrected_all_pass(&reports) { 0 } else { 1 })
}

fn print_table(reports: &[CheckReport]) {
    println!("{:<24} {:<10} {:<12} {:>22} {:>10}", "check", "variant", "status", "residual", "tolerance");
    for r in reports {
        let residual = r.residual.map_or_else(|| "-".to_string(), sig15);
        println!(
            "{:<24} {:<10} {:<12} {:>22} {:>10}",
            r.check_name,
            r.variant.to_string(),
            r.status.to_string(),
            residual,
            sig15(r.tolerance)
        );
    }
}

fn cmd_ortho(a: &OrthoArgs) -> CmdResult {
    HermiteIndex::new(a.n)?;
    HermiteIndex::new(a.m)?;
    let p = make_param(a.lambda)?;
    let cfg = QuadratureConfig::default();
    let (integral, norm) = match a.y {
        None => (Integral::Converged(ortho_dhp(a.n, a.m, &p, &cfg)?), dhp_norm(a.n, &p)),
        Some(y) => (
            partial_ortho(a.n, a.m, y, &p, a.variant.into(), &cfg)?,
            partial_norm(a.n, y, &p),
        ),
    };
    let norm_m = match a.y {
        None => dhp_norm(a.m, &p),
        Some(y) => partial_norm(a.m, y, &p),
    };
    let (value, abs_error, status) = match integral {
        Integral::Converged(q) => {
            let ok = if a.n == a.m {
                ((q.value - norm) / norm).abs() <= ORTHO_TOL
            } else {
                q.value.abs() <= ORTHO_TOL * (norm * norm_m).sqrt()
            };
            (Some(q.value), Some(q.abs_error), if ok { "PASS" } else { "FAIL" })
        }
        Integral::Divergent { .. } => (None, None, "DIVERGENT"),
    };
    let expected = if a.n == a.m { norm } else { 0.0 };
    match a.format {
        TextOrJson::Text => match value {
            Some(v) => println!("{}", sig15(v)),
            None => println!("DIVERGENT"),
        },
        TextOrJson::Json => print_json(&json!({
            "n": a.n, "m": a.m, "lambda": a.lambda, "y": a.y,
            "variant": if a.y.is_some() { Some(variant_name(a.variant.into())) } else { None },
            "value": value, "abs_error": abs_error, "expected": expected, "status": status,
        })),
    }
    Ok(if status == "PASS" { 0 } else { 1 })
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Paper => "paper",
        Variant::Corrected => "corrected",
    }
}

fn cmd_gf_even(a: &GfEvenArgs) -> CmdResult {
    let p = make_param(a.lambda)?;
    let pt = GFPoint::new(a.t, a.x, a.y, p);
    let variant: Variant = a.variant.into();
    let (closed, series) = even_gf(&pt, variant, a.terms)?;
    let residual = (closed - series).abs();
    let pass = residual <= GF_TOL;
    match a.format {
        TextOrJson::Text => {
            println!("closed   {}", sig15(closed));
            println!("series   {}", sig15(series));
            println!("residual {}", sig15(residual));
        }
        TextOrJson::Json => print_json(&json!({
            "t": a.t, "x": a.x, "y": a.y, "lambda": a.lambda, "variant": variant_name(variant),
            "terms": a.terms, "closed": closed, "series": series, "residual": residual,
            "status": if pass { "PASS" } else { "FAIL" },
        })),
    }
    Ok(if pass { 0 } else { 1 })
}

fn cmd_nodhf(a: &NodhfArgs) -> CmdResult {
    let p = make_param(a.lambda)?;
    let kernel = match a.kernel {
        KernelArg::LConsistent => NodhfKernel::LConsistent,
        KernelArg::Paper => NodhfKernel::Paper,
    };
    let value = nodhf(a.mu, a.x, a.y, &p, kernel, &QuadratureConfig::default())?;
    match a.format {
        TextOrJson::Text => println!("{}", sig15(value)),
        TextOrJson::Json => print_json(&json!({
            "mu": a.mu, "x": a.x, "y": a.y, "lambda": a.lambda, "kernel": kernel, "value": value,
        })),
    }
    Ok(0)
}

fn cmd_heat(a: &HeatArgs) -> CmdResult {
    HermiteIndex::new(a.n)?;
    let p = make_param(a.lambda)?;
    let mut grid = HeatGrid::stable(a.x_min, a.x_max, a.dx, a.y_max, &p);
    if let Some(dy) = a.dy {
        grid.dy = dy;
    }
    let report = heat_fd_check(a.n, &p, &grid)?;
    match a.format {
        TextOrJson::Text => {
            let residual = report.residual.map_or_else(|| "-".to_string(), sig15);
            println!("{} residual {residual} (tolerance {})", report.status, sig15(report.tolerance));
        }
        TextOrJson::Json => print!("{}", reports_to_json(std::slice::from_ref(&report))),
    }
    Ok(if report.passed() { 0 } else { 1 })
}
