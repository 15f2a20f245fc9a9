//! Command-line front end: every route the library computes, as a
//! subcommand with a deterministic JSON (or CSV) report.
//!
//! Exit codes: `0` on success, `1` when a checked identity or tolerance
//! fails, `2` for unusable arguments.

use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use boe_core::band::{BandMatrix, Extent, GrowthProfile};
use boe_core::chebyshev::{basis_report, build_basis};
use boe_core::combinatorics::{
    binomial_identity_check, dhk_both_sides, mcl_symmetrized, mobius_identity, rs_both_sides,
    spitzer_check,
};
use boe_core::cumulants::{
    cumulant_bound, cumulant_report, laurent_varpi_via_g, path_cumulant, trace_cumulant, varpi,
};
use boe_core::ginibre::{convergence_rates, limit_symbol, mop_variance, recurrence_matrix_f64};
use boe_core::laurent::{sigma_chebyshev, variance_fourier, variance_report, LaurentPoly};
use boe_core::poly::RealPoly;
use boe_core::right_limit::{
    detect_right_limit, free_jacobi, hermite_jacobi, period_two_jacobi, DetectOutcome,
};
use boe_core::scalar::{rat, Coeff};
use boe_core::szego::szego_limit_check;

use boe_fluct::acceptance;
use boe_fluct::ensemble::{
    clt_experiment, poly_to_f64, symbol_to_f64, CltConfig, EnsembleKind, SimSummary, Statistic,
};
use boe_fluct::parse::{
    parse_integer_list, parse_polynomial, parse_rational, parse_rational_list, parse_symbol,
    print_polynomial, print_symbol, rational_string,
};
use boe_fluct::report::{render, Certificate, CertificateBatch, ExactValue};

#[derive(Parser)]
#[command(
    name = "boe-fluct",
    version,
    about = "Cumulants and Gaussian fluctuations of band-matrix linear statistics"
)]
struct Cli {
    /// Emit CSV where a tabular form exists (JSON otherwise).
    #[arg(long, global = true)]
    csv: bool,
    /// Force JSON output (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Seed for the randomized subcommands.
    #[arg(long, global = true, env = "BOE_FLUCT_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-threshold cumulants of a polynomial statistic, by both routes.
    Cumulant(CumulantArgs),
    /// Limit functional of a bi-infinite matrix.
    Varpi(VarpiArgs),
    /// Certificates for the symmetrized prefix cancellation.
    Mcl(MclArgs),
    /// Certificates for the five closed-form identities.
    Identities(IdentitiesArgs),
    /// Limit variance of a polynomial statistic, by every applicable route.
    Variance(VarianceArgs),
    /// Track windows of a matrix family and classify the right limit.
    RightLimit(RightLimitArgs),
    /// Product-ensemble recurrence data: limit symbol, variance, rates.
    #[command(subcommand)]
    Ginibre(GinibreCommand),
    /// Monte Carlo linear statistics with limit-law overlays.
    Simulate(SimulateArgs),
    /// Toeplitz log-determinants against the two-term limit formula.
    Szego(SzegoArgs),
    /// Rescaled Chebyshev basis and its exact identity suite.
    ChebyshevBasis(ChebyshevArgs),
    /// Run the ten-criterion release gate.
    Acceptance(AcceptanceArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Print a report to stdout; exit quietly when the reader has gone away
/// (`boe-fluct ... | head`).
fn emit(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let outcome = writeln!(out, "{text}").and_then(|()| out.flush());
    if let Err(e) = outcome {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        return Err(e.into());
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Cumulant(args) => run_cumulant(args),
        Command::Varpi(args) => run_varpi(args),
        Command::Mcl(args) => run_mcl(args, cli.seed),
        Command::Identities(args) => run_identities(args, cli.seed),
        Command::Variance(args) => run_variance(args),
        Command::RightLimit(args) => run_right_limit(args, cli.csv),
        Command::Ginibre(cmd) => run_ginibre(cmd, cli.csv),
        Command::Simulate(args) => run_simulate(args, cli.seed, cli.csv),
        Command::Szego(args) => run_szego(args),
        Command::ChebyshevBasis(args) => run_chebyshev_basis(args),
        Command::Acceptance(args) => run_acceptance(args),
    }
}

// ---------------------------------------------------------------- cumulant

#[derive(Args)]
struct CumulantArgs {
    /// Matrix family: free | period2:A:B[:bi] | symbol:{...} | hermite:N |
    /// random:W:SEED
    #[arg(long)]
    jacobi: String,
    /// Polynomial statistic, e.g. "x^2 - 1/2" or "T3".
    #[arg(long)]
    poly: String,
    /// Cumulant order (1 = mean, 2 = variance, ...).
    #[arg(long)]
    order: usize,
    /// Threshold anchoring the statistic; bi-infinite matrices accept 0.
    #[arg(long, default_value_t = 0)]
    size: i64,
    /// Entry growth profile "C,ALPHA" switching on the a priori envelope.
    #[arg(long)]
    growth: Option<String>,
}

enum JacobiSpec {
    Exact(BandMatrix<BigRational>),
    Float(BandMatrix<f64>),
}

fn parse_jacobi(text: &str) -> Result<JacobiSpec> {
    if text == "free" {
        return Ok(JacobiSpec::Exact(free_jacobi()));
    }
    if let Some(rest) = text.strip_prefix("period2:") {
        let parts: Vec<&str> = rest.split(':').collect();
        ensure!(
            parts.len() == 2 || (parts.len() == 3 && parts[2] == "bi"),
            "period2 takes period2:EVEN:ODD or period2:EVEN:ODD:bi, got {text:?}"
        );
        let extent = if parts.len() == 3 { Extent::BiInfinite } else { Extent::SemiInfinite };
        let even = parse_rational(parts[0])?;
        let odd = parse_rational(parts[1])?;
        return Ok(JacobiSpec::Exact(period_two_jacobi(extent, even, odd)));
    }
    if let Some(rest) = text.strip_prefix("symbol:") {
        return Ok(JacobiSpec::Exact(parse_symbol(rest)?.laurent_matrix()));
    }
    if let Some(rest) = text.strip_prefix("hermite:") {
        let scale: i64 = rest.parse().with_context(|| format!("bad scale {rest:?}"))?;
        ensure!(scale >= 1, "hermite scale must be positive");
        return Ok(JacobiSpec::Float(hermite_jacobi(scale)));
    }
    if let Some(rest) = text.strip_prefix("random:") {
        let (w, seed) = rest
            .split_once(':')
            .with_context(|| format!("random takes random:W:SEED, got {text:?}"))?;
        let bandwidth: usize = w.parse().with_context(|| format!("bad bandwidth {w:?}"))?;
        ensure!(bandwidth >= 1, "bandwidth must be positive");
        let seed: u64 = seed.parse().with_context(|| format!("bad seed {seed:?}"))?;
        return Ok(JacobiSpec::Float(BandMatrix::<f64>::random_uniform(
            Extent::SemiInfinite,
            bandwidth,
            seed,
        )));
    }
    bail!(
        "unknown matrix family {text:?}; expected free, period2:A:B[:bi], \
         symbol:{{...}}, hermite:N, or random:W:SEED"
    )
}

fn parse_growth(text: &str) -> Result<GrowthProfile> {
    let (c, alpha) = text.split_once(',').context("growth takes \"C,ALPHA\"")?;
    let c: f64 = c.trim().parse().context("bad growth constant")?;
    let alpha: f64 = alpha.trim().parse().context("bad growth rate")?;
    Ok(GrowthProfile::new(c, alpha)?)
}

#[derive(Serialize)]
struct CumulantBody {
    matrix: String,
    statistic: String,
    order: usize,
    threshold: i64,
    path_value: ExactValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_value: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<f64>,
}

fn run_cumulant(args: &CumulantArgs) -> Result<u8> {
    let f = parse_polynomial(&args.poly)?;
    let profile = args.growth.as_deref().map(parse_growth).transpose()?;
    let body = match parse_jacobi(&args.jacobi)? {
        JacobiSpec::Exact(matrix) => {
            let path = path_cumulant(&matrix, &f, args.order, args.size)?;
            let trace = match matrix.extent() {
                Extent::SemiInfinite => {
                    Some(trace_cumulant(&matrix, &f, args.order, args.size)?)
                }
                Extent::BiInfinite => None,
            };
            let gap = trace
                .as_ref()
                .map(|t| (Coeff::to_f64(&path) - Coeff::to_f64(t)).abs());
            let bound = profile
                .as_ref()
                .filter(|_| f.degree() >= 1)
                .map(|p| cumulant_bound(&poly_to_f64(&f), matrix.bandwidth(), p, args.order))
                .transpose()?;
            CumulantBody {
                matrix: args.jacobi.clone(),
                statistic: print_polynomial(&f),
                order: args.order,
                threshold: args.size,
                path_value: ExactValue::from_rational(&path),
                trace_value: trace.as_ref().map(ExactValue::from_rational),
                gap,
                bound,
            }
        }
        JacobiSpec::Float(matrix) => {
            let report =
                cumulant_report(&matrix, &poly_to_f64(&f), args.order, args.size, profile.as_ref())?;
            CumulantBody {
                matrix: args.jacobi.clone(),
                statistic: print_polynomial(&f),
                order: report.order,
                threshold: report.threshold,
                path_value: ExactValue::from_f64(report.path_value),
                trace_value: report.trace_value.map(ExactValue::from_f64),
                gap: report.gap,
                bound: report.bound,
            }
        }
    };
    emit(&render("cumulant", body)?)?;
    Ok(0)
}

// ------------------------------------------------------------------- varpi

#[derive(Args)]
struct VarpiArgs {
    /// Bi-infinite matrix as a Laurent symbol "{...}".
    #[arg(long, conflicts_with = "period2")]
    symbol: Option<String>,
    /// Bi-infinite period-two matrix "EVEN,ODD".
    #[arg(long)]
    period2: Option<String>,
    /// Polynomial statistic.
    #[arg(long)]
    poly: String,
    /// Functional order.
    #[arg(long)]
    order: usize,
}

#[derive(Serialize)]
struct VarpiBody {
    matrix: String,
    statistic: String,
    order: usize,
    value: ExactValue,
    /// Frequency-space route; only symbols have one.
    #[serde(skip_serializing_if = "Option::is_none")]
    g_route_value: Option<ExactValue>,
    routes_agree: bool,
}

fn run_varpi(args: &VarpiArgs) -> Result<u8> {
    let f = parse_polynomial(&args.poly)?;
    let body = match (&args.symbol, &args.period2) {
        (Some(text), None) => {
            let s = parse_symbol(text)?;
            let value = varpi(&s.laurent_matrix(), &f, args.order)?;
            let g_value = laurent_varpi_via_g(&s, &f, args.order);
            let agree = value == g_value;
            VarpiBody {
                matrix: format!("symbol:{}", print_symbol(&s)),
                statistic: print_polynomial(&f),
                order: args.order,
                value: ExactValue::from_rational(&value),
                g_route_value: Some(ExactValue::from_rational(&g_value)),
                routes_agree: agree,
            }
        }
        (None, Some(text)) => {
            let coeffs = parse_rational_list(text)?;
            ensure!(coeffs.len() == 2, "--period2 takes \"EVEN,ODD\"");
            let matrix =
                period_two_jacobi(Extent::BiInfinite, coeffs[0].clone(), coeffs[1].clone());
            let value = varpi(&matrix, &f, args.order)?;
            VarpiBody {
                matrix: format!("period2:{}:{}", rational_string(&coeffs[0]), rational_string(&coeffs[1])),
                statistic: print_polynomial(&f),
                order: args.order,
                value: ExactValue::from_rational(&value),
                g_route_value: None,
                routes_agree: true,
            }
        }
        _ => bail!("exactly one of --symbol or --period2 is required"),
    };
    let agree = body.routes_agree;
    emit(&render("varpi", body)?)?;
    Ok(if agree { 0 } else { 1 })
}

// --------------------------------------------------------------------- mcl

#[derive(Args)]
struct MclArgs {
    /// Tuple length.
    #[arg(long)]
    n: usize,
    /// Number of random zero-sum integer tuples to certify.
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

fn run_mcl(args: &MclArgs, seed: u64) -> Result<u8> {
    ensure!(args.n >= 2, "tuple length must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut certificates = Vec::with_capacity(args.trials);
    for _ in 0..args.trials {
        let mut x: Vec<BigRational> =
            (0..args.n - 1).map(|_| rat(rng.random_range(-9i64..=9), 1)).collect();
        let sum = x.iter().fold(BigRational::zero(), |a, v| a + v.clone());
        x.push(-sum);
        let lhs = mcl_symmetrized(&x)?;
        let rhs = if args.n == 2 { Signed::abs(&x[0]) } else { BigRational::zero() };
        certificates.push(Certificate {
            identity: "mcl",
            n: args.n,
            input: serde_json::Value::Array(
                x.iter().map(|v| serde_json::Value::String(rational_string(v))).collect(),
            ),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });
    }
    let batch = CertificateBatch::new(certificates);
    let ok = batch.all_equal;
    emit(&render("mcl", batch)?)?;
    Ok(if ok { 0 } else { 1 })
}

// -------------------------------------------------------------- identities

#[derive(Args)]
struct IdentitiesArgs {
    /// Random inputs per identity family.
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Largest order exercised.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
}

fn rational_json(values: &[BigRational]) -> serde_json::Value {
    serde_json::Value::Array(
        values.iter().map(|v| serde_json::Value::String(rational_string(v))).collect(),
    )
}

fn run_identities(args: &IdentitiesArgs, seed: u64) -> Result<u8> {
    ensure!((1..=8).contains(&args.max_n), "max order must lie in 1..=8");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_rational =
        |rng: &mut ChaCha8Rng| rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=4));
    let mut certificates = Vec::new();
    for trial in 0..args.trials {
        let n = trial % args.max_n + 1;

        let x: Vec<BigRational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let (lhs, rhs) = dhk_both_sides(&x)?;
        certificates.push(Certificate {
            identity: "dhk",
            n,
            input: rational_json(&x),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });

        let m = n.max(2);
        let mut z: Vec<BigRational> = (0..m - 1).map(|_| random_rational(&mut rng)).collect();
        let sum = z.iter().fold(BigRational::zero(), |a, v| a + v.clone());
        z.push(-sum);
        let (lhs, rhs) = rs_both_sides(&z)?;
        certificates.push(Certificate {
            identity: "rudnick-sarnak",
            n: m,
            input: rational_json(&z),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });

        let outcomes = rng.random_range(2usize..=3);
        let weights: Vec<i64> = (0..outcomes).map(|_| rng.random_range(1i64..=5)).collect();
        let total: i64 = weights.iter().sum();
        let distribution: Vec<(BigRational, BigRational)> =
            weights.iter().map(|w| (random_rational(&mut rng), rat(*w, total))).collect();
        let (lhs, rhs) = spitzer_check(&distribution, n)?;
        certificates.push(Certificate {
            identity: "spitzer",
            n,
            input: serde_json::json!({
                "values": distribution.iter().map(|(v, _)| rational_string(v)).collect::<Vec<_>>(),
                "probabilities":
                    distribution.iter().map(|(_, p)| rational_string(p)).collect::<Vec<_>>(),
            }),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });

        let lhs = mobius_identity(n);
        let rhs = if n == 1 { rat(1, 1) } else { BigRational::zero() };
        certificates.push(Certificate {
            identity: "mobius",
            n,
            input: serde_json::json!(n),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });

        let degree = rng.random_range(0usize..=n);
        let r = RealPoly::new((0..=degree).map(|_| random_rational(&mut rng)).collect());
        let (lhs, rhs) = binomial_identity_check(&r, n)?;
        certificates.push(Certificate {
            identity: "binomial",
            n,
            input: serde_json::json!({
                "coefficients": r.coeffs().iter().map(rational_string).collect::<Vec<_>>(),
            }),
            lhs: rational_string(&lhs),
            rhs: rational_string(&rhs),
            equal: lhs == rhs,
        });
    }
    let batch = CertificateBatch::new(certificates);
    let ok = batch.all_equal;
    emit(&render("identities", batch)?)?;
    Ok(if ok { 0 } else { 1 })
}

// ---------------------------------------------------------------- variance

#[derive(Args)]
struct VarianceArgs {
    /// Polynomial statistic.
    #[arg(long)]
    poly: String,
    /// Laurent symbol of the limit; default is the arcsine symbol.
    #[arg(long, default_value = "{-1: 1/2, 1: 1/2}")]
    symbol: String,
    /// Contour grid for the integral route.
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Quadrature grid for the weighted-square route.
    #[arg(long, default_value_t = 256)]
    h12_grid: usize,
}

#[derive(Serialize)]
struct VarianceBody {
    statistic: String,
    symbol: String,
    fourier: ExactValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    chebyshev: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    devinatz: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h12: Option<f64>,
    max_pairwise_gap: f64,
}

fn run_variance(args: &VarianceArgs) -> Result<u8> {
    let f = parse_polynomial(&args.poly)?;
    let s = parse_symbol(&args.symbol)?;
    let exact = variance_fourier(&f, &s);
    let chebyshev = (s == LaurentPoly::arcsine()).then(|| sigma_chebyshev(&f));
    let report = variance_report(&poly_to_f64(&f), &symbol_to_f64(&s), args.grid, args.h12_grid)?;
    let body = VarianceBody {
        statistic: print_polynomial(&f),
        symbol: print_symbol(&s),
        fourier: ExactValue::from_rational(&exact),
        chebyshev: chebyshev.as_ref().map(ExactValue::from_rational),
        devinatz: report.devinatz_value,
        h12: report.h12_value,
        max_pairwise_gap: report.max_pairwise_gap,
    };
    emit(&render("variance", body)?)?;
    Ok(0)
}

// ------------------------------------------------------------- right-limit

#[derive(Args)]
struct RightLimitArgs {
    /// Family: hermite | ginibre:ETA,... | period2:A:B
    #[arg(long)]
    family: String,
    /// Window centers, ascending.
    #[arg(long, default_value = "100,200,400")]
    centers: String,
    /// Window radius.
    #[arg(long, default_value_t = 2)]
    radius: i64,
    /// Convergence tolerance.
    #[arg(long, default_value_t = 1e-2)]
    tol: f64,
}

#[derive(Serialize)]
struct RightLimitBody {
    family: String,
    centers: Vec<i64>,
    radius: i64,
    tol: f64,
    /// Window distance between consecutive centers.
    deltas: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rate_exponent: Option<f64>,
    outcome: String,
    /// Symbol of the limit when the diagonals are constant.
    #[serde(skip_serializing_if = "Option::is_none")]
    limit_symbol: Option<Vec<(i64, f64)>>,
}

fn run_right_limit(args: &RightLimitArgs, csv: bool) -> Result<u8> {
    let centers = parse_integer_list(&args.centers)?;
    let report = if args.family == "hermite" {
        detect_right_limit(hermite_jacobi, &centers, args.radius, args.tol)?
    } else if let Some(rest) = args.family.strip_prefix("ginibre:") {
        let eta = parse_integer_list(rest)?;
        recurrence_matrix_f64(centers.first().copied().unwrap_or(1).max(1), &eta)?;
        detect_right_limit(
            |n| recurrence_matrix_f64(n, &eta).expect("offsets validated above"),
            &centers,
            args.radius,
            args.tol,
        )?
    } else if let Some(rest) = args.family.strip_prefix("period2:") {
        let (even, odd) = rest.split_once(':').context("period2 takes period2:EVEN:ODD")?;
        let even = Coeff::to_f64(&parse_rational(even)?);
        let odd = Coeff::to_f64(&parse_rational(odd)?);
        detect_right_limit(
            move |_| period_two_jacobi(Extent::BiInfinite, even, odd),
            &centers,
            args.radius,
            args.tol,
        )?
    } else {
        bail!("unknown family {:?}; expected hermite, ginibre:ETA,..., or period2:A:B", args.family)
    };

    if csv {
        let mut table = String::from("center,delta");
        for (center, delta) in report.centers[1..].iter().zip(&report.deltas) {
            table.push_str(&format!("\n{center},{delta}"));
        }
        emit(&table)?;
        let converged = !matches!(report.outcome, DetectOutcome::NotConverged);
        return Ok(if converged { 0 } else { 1 });
    }
    let (outcome, limit) = match &report.outcome {
        DetectOutcome::LaurentLimit(s) => (
            "laurent-limit",
            Some(s.support().map(|(k, c)| (k, *c)).collect::<Vec<_>>()),
        ),
        DetectOutcome::StructuredLimit => ("structured-limit", None),
        DetectOutcome::NotConverged => ("not-converged", None),
    };
    let converged = !matches!(report.outcome, DetectOutcome::NotConverged);
    let body = RightLimitBody {
        family: args.family.clone(),
        centers: report.centers.clone(),
        radius: report.radius,
        tol: args.tol,
        deltas: report.deltas.clone(),
        rate_exponent: report.rate_exponent,
        outcome: outcome.into(),
        limit_symbol: limit,
    };
    emit(&render("right-limit", body)?)?;
    Ok(if converged { 0 } else { 1 })
}

// ----------------------------------------------------------------- ginibre

#[derive(Subcommand)]
enum GinibreCommand {
    /// Limit symbol of the recurrence matrix for parameters theta.
    Symbol(GinibreSymbolArgs),
    /// Limit variance of a polynomial statistic of the squared singular
    /// values.
    Variance(GinibreVarianceArgs),
    /// Exact per-diagonal convergence rates toward the right limit.
    Rates(GinibreRatesArgs),
}

#[derive(Args)]
struct GinibreSymbolArgs {
    /// Limit parameters, e.g. "1,1,1" for a two-factor square product.
    #[arg(long)]
    theta: String,
    /// Expected factor count; checked against theta when given.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Serialize)]
struct GinibreSymbolBody {
    theta: Vec<String>,
    factors: usize,
    symbol: String,
}

#[derive(Args)]
struct GinibreVarianceArgs {
    /// Polynomial statistic.
    #[arg(long)]
    poly: String,
    /// Limit parameters.
    #[arg(long)]
    theta: String,
}

#[derive(Serialize)]
struct GinibreVarianceBody {
    statistic: String,
    theta: Vec<String>,
    value: ExactValue,
}

#[derive(Args)]
struct GinibreRatesArgs {
    /// Dimension offsets "0,ETA_1,...,ETA_M" (the first entry must be 0).
    #[arg(long, default_value = "0,0")]
    eta: String,
    /// Dimensions to sample, ascending.
    #[arg(long, default_value = "200,400,800")]
    dims: String,
}

#[derive(Serialize)]
struct DiagonalRateBody {
    k: i64,
    deviations: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<f64>,
}

#[derive(Serialize)]
struct GinibreRatesBody {
    eta: Vec<i64>,
    dims: Vec<i64>,
    diagonals: Vec<DiagonalRateBody>,
}

fn run_ginibre(cmd: &GinibreCommand, csv: bool) -> Result<u8> {
    match cmd {
        GinibreCommand::Symbol(args) => {
            let theta = parse_rational_list(&args.theta)?;
            if let Some(m) = args.m {
                ensure!(
                    theta.len() == m + 1,
                    "{} factors need {} limit parameters, got {}",
                    m,
                    m + 1,
                    theta.len()
                );
            }
            let symbol = limit_symbol(&theta)?;
            let body = GinibreSymbolBody {
                theta: theta.iter().map(rational_string).collect(),
                factors: theta.len() - 1,
                symbol: print_symbol(&symbol),
            };
            emit(&render("ginibre-symbol", body)?)?;
            Ok(0)
        }
        GinibreCommand::Variance(args) => {
            let f = parse_polynomial(&args.poly)?;
            let theta = parse_rational_list(&args.theta)?;
            let value = mop_variance(&f, &theta)?;
            let body = GinibreVarianceBody {
                statistic: print_polynomial(&f),
                theta: theta.iter().map(rational_string).collect(),
                value: ExactValue::from_rational(&value),
            };
            emit(&render("ginibre-variance", body)?)?;
            Ok(0)
        }
        GinibreCommand::Rates(args) => {
            let eta = parse_integer_list(&args.eta)?;
            let dims = parse_integer_list(&args.dims)?;
            let report = convergence_rates(&eta, &dims)?;
            if csv {
                let mut table = String::from("k,dim,deviation");
                for diag in &report.diagonals {
                    for (dim, dev) in report.dims.iter().zip(&diag.deviations) {
                        table.push_str(&format!("\n{},{dim},{dev}", diag.k));
                    }
                }
                emit(&table)?;
                return Ok(0);
            }
            let body = GinibreRatesBody {
                eta,
                dims: report.dims.clone(),
                diagonals: report
                    .diagonals
                    .iter()
                    .map(|d| DiagonalRateBody {
                        k: d.k,
                        deviations: d.deviations.clone(),
                        exponent: d.exponent,
                    })
                    .collect(),
            };
            emit(&render("ginibre-rates", body)?)?;
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------- simulate

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Gue,
    Cue,
    Ginibre,
}

#[derive(Args)]
struct SimulateArgs {
    /// Matrix ensemble to draw from.
    #[arg(long, value_enum)]
    ensemble: EnsembleArg,
    /// Matrix dimension.
    #[arg(long)]
    n: usize,
    /// Number of independent draws.
    #[arg(long)]
    samples: usize,
    /// Polynomial statistic (gue, ginibre).
    #[arg(long)]
    poly: Option<String>,
    /// Symbol statistic on the unit circle (cue), e.g. "{-1: 1, 1: 1}".
    #[arg(long, alias = "function", conflicts_with = "poly")]
    symbol: Option<String>,
    /// Dimension offsets for the product ensemble.
    #[arg(long, default_value = "0,0")]
    eta: String,
    /// Limit parameters overriding the default (all ones) overlay.
    #[arg(long)]
    theta: Option<String>,
    /// Rescale gue eigenvalues to the symmetric unit support.
    #[arg(long)]
    support_pm1: bool,
}

#[derive(Serialize)]
struct SimulateBody {
    ensemble: String,
    size: usize,
    samples: usize,
    seed: u64,
    statistic: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<Vec<i64>>,
    summary: SimSummary,
}

fn run_simulate(args: &SimulateArgs, seed: u64, csv: bool) -> Result<u8> {
    let statistic = match (&args.poly, &args.symbol) {
        (Some(text), None) => Statistic::Polynomial(parse_polynomial(text)?),
        (None, Some(text)) => Statistic::Symbol(parse_symbol(text)?),
        _ => bail!("exactly one of --poly or --symbol is required"),
    };
    let (kind, eta_echo) = match args.ensemble {
        EnsembleArg::Gue => (EnsembleKind::Gue { rescaled: args.support_pm1 }, None),
        EnsembleArg::Cue => (EnsembleKind::Cue, None),
        EnsembleArg::Ginibre => {
            let eta = parse_integer_list(&args.eta)?;
            let theta = args.theta.as_deref().map(parse_rational_list).transpose()?;
            (EnsembleKind::GinibreProduct { eta: eta.clone(), theta }, Some(eta))
        }
    };
    let statistic_text = match &statistic {
        Statistic::Polynomial(f) => print_polynomial(f),
        Statistic::Symbol(s) => print_symbol(s),
    };
    let config = CltConfig {
        kind,
        size: args.n,
        samples: args.samples,
        seed,
        statistic,
    };
    let (values, summary) = clt_experiment(&config)?;
    if csv {
        let mut table = String::from("sample_index,statistic_value");
        for (index, value) in values.iter().enumerate() {
            table.push_str(&format!("\n{index},{value}"));
        }
        emit(&table)?;
        return Ok(0);
    }
    let ensemble = match args.ensemble {
        EnsembleArg::Gue if args.support_pm1 => "gue(support-pm1)".to_string(),
        EnsembleArg::Gue => "gue".to_string(),
        EnsembleArg::Cue => "cue".to_string(),
        EnsembleArg::Ginibre => "ginibre-product".to_string(),
    };
    let body = SimulateBody {
        ensemble,
        size: args.n,
        samples: args.samples,
        seed,
        statistic: statistic_text,
        eta: eta_echo,
        summary,
    };
    emit(&render("simulate", body)?)?;
    Ok(0)
}

// ------------------------------------------------------------------- szego

#[derive(Args)]
struct SzegoArgs {
    /// Symbol f of the exponential weight exp(lambda f).
    #[arg(long, default_value = "{-1: 1, 1: 1}")]
    symbol: String,
    /// Coupling strength.
    #[arg(long, default_value_t = 0.3)]
    lambda: f64,
    /// Determinant dimensions, ascending.
    #[arg(long, default_value = "40")]
    sizes: String,
    /// Fourier modes resolving the weight.
    #[arg(long, default_value_t = 1024)]
    modes: usize,
    /// Fail (exit 1) when any deviation exceeds this.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Serialize)]
struct SzegoEntry {
    dim: usize,
    log_det: f64,
    mean_term: f64,
    fluctuation_term: f64,
    deviation: f64,
}

#[derive(Serialize)]
struct SzegoBody {
    symbol: String,
    lambda: f64,
    modes: usize,
    reports: Vec<SzegoEntry>,
    max_deviation: f64,
}

fn run_szego(args: &SzegoArgs) -> Result<u8> {
    let s = parse_symbol(&args.symbol)?;
    let s_f64 = symbol_to_f64(&s);
    let sizes = parse_integer_list(&args.sizes)?;
    ensure!(!sizes.is_empty(), "at least one dimension is required");
    let mut reports = Vec::new();
    let mut max_deviation = 0.0f64;
    for &dim in &sizes {
        ensure!(dim >= 1, "dimensions must be positive");
        let r = szego_limit_check(&s_f64, args.lambda, dim as usize, args.modes)?;
        max_deviation = max_deviation.max(r.deviation);
        reports.push(SzegoEntry {
            dim: r.dim,
            log_det: r.log_det,
            mean_term: r.mean_term,
            fluctuation_term: r.fluctuation_term,
            deviation: r.deviation,
        });
    }
    let body = SzegoBody {
        symbol: print_symbol(&s),
        lambda: args.lambda,
        modes: args.modes,
        reports,
        max_deviation,
    };
    let ok = args.tol.is_none_or(|t| max_deviation <= t);
    emit(&render("szego", body)?)?;
    Ok(if ok { 0 } else { 1 })
}

// --------------------------------------------------------- chebyshev-basis

#[derive(Args)]
struct ChebyshevArgs {
    /// Largest basis order.
    #[arg(long, default_value_t = 8)]
    order: usize,
}

#[derive(Serialize)]
struct ChebyshevBody {
    order: usize,
    /// Lower-triangular coefficient matrix, rows as exact rationals.
    matrix: Vec<Vec<String>>,
    /// Centering constants (the arcsine means of the monomials).
    centering: Vec<String>,
    /// The basis polynomials themselves.
    basis: Vec<String>,
    basis_is_doubled_chebyshev: bool,
    monomial_identity: bool,
    covariance_matches_polarization: bool,
    gram_is_doubled_identity: bool,
    conjugation_recovers_diagonal: bool,
    all_hold: bool,
}

fn run_chebyshev_basis(args: &ChebyshevArgs) -> Result<u8> {
    let report = basis_report(args.order)?;
    let basis = build_basis(args.order);
    let body = ChebyshevBody {
        order: args.order,
        matrix: basis
            .matrix()
            .iter()
            .map(|row| row.iter().map(rational_string).collect())
            .collect(),
        centering: (0..=args.order).map(|n| rational_string(basis.centering(n))).collect(),
        basis: (1..=args.order)
            .map(|k| print_polynomial(basis.basis_polynomial(k)))
            .collect(),
        basis_is_doubled_chebyshev: report.basis_is_doubled_chebyshev,
        monomial_identity: report.monomial_identity,
        covariance_matches_polarization: report.covariance_matches_polarization,
        gram_is_doubled_identity: report.gram_is_doubled_identity,
        conjugation_recovers_diagonal: report.conjugation_recovers_diagonal,
        all_hold: report.all_hold(),
    };
    let ok = report.all_hold();
    emit(&render("chebyshev-basis", body)?)?;
    Ok(if ok { 0 } else { 1 })
}

// -------------------------------------------------------------- acceptance

#[derive(Args)]
struct AcceptanceArgs {
    /// Run only these comma-separated criterion ids (e.g. "AC1,AC4").
    #[arg(long)]
    only: Option<String>,
}

#[derive(Serialize)]
struct AcceptanceBody {
    suite: &'static str,
    passed: bool,
    criteria: Vec<acceptance::CriterionResult>,
}

fn run_acceptance(args: &AcceptanceArgs) -> Result<u8> {
    let wanted: Option<Vec<String>> = args
        .only
        .as_deref()
        .map(|text| text.split(',').map(|s| s.trim().to_ascii_uppercase()).collect());
    let runners: Vec<(&str, fn() -> acceptance::CriterionResult)> = vec![
        ("AC1", acceptance::criterion_1),
        ("AC2", acceptance::criterion_2),
        ("AC3", acceptance::criterion_3),
        ("AC4", acceptance::criterion_4),
        ("AC5", acceptance::criterion_5),
        ("AC6", acceptance::criterion_6),
        ("AC7", acceptance::criterion_7),
        ("AC8", acceptance::criterion_8),
        ("AC9", acceptance::criterion_9),
        ("AC10", acceptance::criterion_10),
    ];
    let mut criteria = Vec::new();
    for (id, runner) in runners {
        if let Some(wanted) = &wanted {
            if !wanted.iter().any(|w| w == id) {
                continue;
            }
        }
        let result = runner();
        eprintln!("{}", acceptance::render_line(&result));
        criteria.push(result);
    }
    ensure!(!criteria.is_empty(), "no criteria selected");
    let passed = criteria.iter().all(|c| c.passed);
    let body = AcceptanceBody { suite: "primary", passed, criteria };
    emit(&render("acceptance", body)?)?;
    Ok(if passed { 0 } else { 1 })
}
