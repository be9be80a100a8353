//! Command-line interface: forge, verify, recognize, units, model-check.
//!
//! Exit status: 0 when everything passes, 1 when a check fails or a
//! computation cannot complete, 2 on usage errors.

mod render;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use symforge_core::finmodel::{self, CheckMode, CheckReport, NaturalityReport};
use symforge_core::format::{CertificateFile, MatrixFile};
use symforge_core::{
    forge, fundamental_unit_quadratic, is_natural_form, recognize_symmetric_form, search_unit,
    verify_certificate, AutomorphismCertificate, Error, FiniteModel, ForgeOptions, Order,
    OrderMatrix, Permutation, UnitCertificate,
};

#[derive(Parser)]
#[command(
    name = "symforge",
    about = "Exact construction and verification of symmetric-condition automorphisms \
             over orders of totally real number fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an automorphism certificate and optionally write it as JSON
    Forge(ForgeArgs),
    /// Recompute every claim of a certificate file, optionally with finite-model suites
    Verify(VerifyArgs),
    /// Decompose a matrix into (sigma, f, g) and report naturality
    Recognize(RecognizeArgs),
    /// Find and print a unit certificate for an order
    Units(UnitsArgs),
    /// Run descent, diagonal, bijectivity, and naturality checks on a finite model
    ModelCheck(ModelCheckArgs),
}

/// Exactly one way to name the order.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct OrderSpec {
    /// Work in the power-basis order of x² − D
    #[arg(long, value_name = "D")]
    disc: Option<i64>,
    /// Monic minimal polynomial, comma-separated, constant term first
    #[arg(long, value_name = "C0,C1,...,1", allow_hyphen_values = true)]
    minpoly: Option<String>,
}

#[derive(Args)]
struct ForgeArgs {
    #[command(flatten)]
    order: OrderSpec,
    /// Number of factors n of the product
    #[arg(long)]
    n: usize,
    /// Row permutation as a 1-indexed image list, e.g. 2,1
    #[arg(long, value_name = "IMAGES")]
    sigma: Option<String>,
    /// Use this unit (comma-separated coefficients) instead of searching
    #[arg(long, value_name = "COEFFS", allow_hyphen_values = true)]
    unit: Option<String>,
    /// Coefficient height bound for the unit search
    #[arg(long, default_value_t = 10)]
    bound: u32,
    /// Exponent bound for the power step into a suborder
    #[arg(long, default_value_t = 64)]
    max_exp: u32,
    /// Write the certificate to this path
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate file produced by forge
    certificate: PathBuf,
    /// Also run finite-model checks at these moduli, e.g. 2,3,5
    #[arg(long, value_name = "M,M,...")]
    torsion: Option<String>,
    /// Force exhaustive enumeration in the model checks
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Sample this many tuples instead of enumerating
    #[arg(long, value_name = "COUNT")]
    samples: Option<u64>,
    /// Seed for sampling modes
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Matrix file, or a certificate file whose matrix is taken
    matrix: PathBuf,
}

#[derive(Args)]
struct UnitsArgs {
    #[command(flatten)]
    order: OrderSpec,
    /// Coefficient height bound for the search (non-quadratic orders)
    #[arg(long, default_value_t = 10)]
    bound: u32,
}

#[derive(Args)]
struct ModelCheckArgs {
    /// Matrix file, or a certificate file whose matrix is taken
    matrix: PathBuf,
    /// Moduli of the finite models, e.g. 5 or 2,3,5
    #[arg(long = "m", value_name = "M,M,...")]
    moduli: String,
    /// Force exhaustive enumeration
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Sample this many tuples instead of enumerating
    #[arg(long, value_name = "COUNT")]
    samples: Option<u64>,
    /// Seed for sampling modes
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the reports as a JSON array to this path
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Forge(args) => run_forge(args),
        Command::Verify(args) => run_verify(args),
        Command::Recognize(args) => run_recognize(args),
        Command::Units(args) => run_units(args),
        Command::ModelCheck(args) => run_model_check(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

impl OrderSpec {
    fn build(&self) -> Result<Order, CliError> {
        let order = match (&self.disc, &self.minpoly) {
            (Some(d), None) => Order::quadratic(*d),
            (None, Some(list)) => Order::new(parse_bigint_list(list)?),
            _ => unreachable!("clap enforces exactly one of --disc/--minpoly"),
        };
        order.map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn run_forge(args: ForgeArgs) -> Result<bool, CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let order = args.order.build()?;
    let sigma = args
        .sigma
        .as_deref()
        .map(|list| -> Result<Permutation, CliError> {
            let images = parse_usize_list(list)?;
            Permutation::from_one_indexed(&images).map_err(|e| CliError::Usage(e.to_string()))
        })
        .transpose()?;
    let unit = args
        .unit
        .as_deref()
        .map(|list| -> Result<_, CliError> {
            order
                .try_element(parse_bigint_list(list)?)
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .transpose()?;

    let options = ForgeOptions {
        unit,
        height_bound: args.bound,
        sigma,
        suborder: None,
        max_exp: args.max_exp,
    };
    let cert = forge(&order, args.n, &options)?;
    print!("{}", forge_summary(&cert));

    if let Some(path) = &args.output {
        let file = CertificateFile::from_certificate(&cert);
        fs::write(path, file.to_json()).map_err(Error::from)?;
        println!("certificate written to {}", path.display());
    }
    Ok(true)
}

fn forge_summary(cert: &AutomorphismCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "order: {}, degree {}",
        render::order_name(&cert.order),
        cert.order.degree()
    );
    let _ = writeln!(out, "n = {}, sigma = {}", cert.n, cert.sigma);
    let _ = writeln!(
        out,
        "alpha = {}, inverse = {}",
        render::element(cert.alpha.element()),
        render::element(cert.alpha.inverse())
    );
    let _ = writeln!(out, "exponents: i = {}, j = {}", cert.i, cert.j);
    let _ = writeln!(out, "f = {}", render::element(&cert.f));
    let _ = writeln!(out, "g = {}", render::element(&cert.g));
    let _ = writeln!(
        out,
        "det = {}, inverse = {}, norm {}",
        render::element(&cert.det_value),
        render::element(&cert.det_inverse),
        cert.det_value.norm()
    );
    let passed = cert.flags.values().filter(|&&ok| ok).count();
    let _ = writeln!(out, "checks: {passed}/{} pass", cert.flags.len());
    for assumption in &cert.unverified_assumptions {
        let _ = writeln!(out, "unverified assumption: {assumption}");
    }
    out
}

fn run_verify(args: VerifyArgs) -> Result<bool, CliError> {
    let text = fs::read_to_string(&args.certificate).map_err(Error::from)?;
    let cert = CertificateFile::from_json(&text)?.to_certificate()?;

    let report = verify_certificate(&cert);
    println!("{report}");
    let mut all_passed = report.passed();
    if let Some(name) = report.first_failure() {
        println!("failed check: {name}");
    }

    if let Some(torsion) = &args.torsion {
        for m in parse_u64_list(torsion)? {
            let model = FiniteModel::new(&cert.order, m).map_err(CliError::from)?;
            all_passed &= run_model_suite(
                &model,
                &cert.matrix,
                args.exhaustive,
                args.samples,
                args.seed,
                None,
            )?;
        }
    }

    println!("overall: {}", if all_passed { "pass" } else { "FAIL" });
    Ok(all_passed)
}

fn run_recognize(args: RecognizeArgs) -> Result<bool, CliError> {
    let matrix = load_matrix(&args.matrix)?;
    match recognize_symmetric_form(&matrix) {
        Some(form) => {
            println!("symmetric form: yes");
            println!("sigma = {}", form.sigma);
            println!("f = {}", render::element(&form.f));
            println!("g = {}", render::element(&form.g));
        }
        None => println!("not of symmetric form"),
    }
    println!(
        "nonnatural: {}",
        if is_natural_form(&matrix) {
            "no"
        } else {
            "yes"
        }
    );
    Ok(true)
}

fn run_units(args: UnitsArgs) -> Result<bool, CliError> {
    let certificate = match args.order.disc {
        Some(d) => fundamental_unit_quadratic(d).map_err(CliError::from)?,
        None => {
            let order = args.order.build()?;
            search_unit(&order, args.bound).ok_or(Error::UnitNotFound {
                height_bound: args.bound,
            })?
        }
    };
    print_unit(&certificate);
    Ok(true)
}

fn print_unit(cert: &UnitCertificate) {
    println!("unit = {}", render::element(cert.element()));
    println!("inverse = {}", render::element(cert.inverse()));
    println!("charpoly constant = {}", cert.charpoly_constant());
    println!("norm = {}", cert.element().norm());
}

fn run_model_check(args: ModelCheckArgs) -> Result<bool, CliError> {
    let matrix = load_matrix(&args.matrix)?;
    let mut all_passed = true;
    let mut json_reports = Vec::new();
    for m in parse_u64_list(&args.moduli)? {
        let model = FiniteModel::new(matrix.order(), m).map_err(CliError::from)?;
        all_passed &= run_model_suite(
            &model,
            &matrix,
            args.exhaustive,
            args.samples,
            args.seed,
            Some(&mut json_reports),
        )?;
    }
    if let Some(path) = &args.json {
        let mut text =
            serde_json::to_string_pretty(&json_reports).expect("report serialization cannot fail");
        text.push('\n');
        fs::write(path, text).map_err(Error::from)?;
        println!("reports written to {}", path.display());
    }
    println!("overall: {}", if all_passed { "pass" } else { "FAIL" });
    Ok(all_passed)
}

/// Runs bijectivity, descent, diagonal, and naturality checks on one
/// model; prints each verdict and collects JSON-ready reports.
fn run_model_suite(
    model: &FiniteModel,
    matrix: &OrderMatrix,
    exhaustive: bool,
    samples: Option<u64>,
    seed: u64,
    json_out: Option<&mut Vec<serde_json::Value>>,
) -> Result<bool, CliError> {
    let m = model.modulus();
    let n = matrix.size();
    let mut all_passed = true;
    let mut reports: Vec<serde_json::Value> = Vec::new();

    let bijective = model.check_bijective(matrix);
    println!(
        "bijective (m = {m}): {}",
        if bijective { "pass" } else { "fail" }
    );
    reports.push(serde_json::json!({
        "check": "bijective",
        "modulus": m,
        "n": n,
        "verdict": if bijective { "pass" } else { "fail" },
    }));
    all_passed &= bijective;

    let factorial: u128 = (1..=n as u128).product();
    let descent_mode = choose_mode(model, n, factorial, exhaustive, samples, seed)?;
    let report = model.check_descent(matrix, descent_mode)?;
    all_passed &= print_check(&report, &mut reports);

    let tuple_mode = choose_mode(model, n, 1, exhaustive, samples, seed)?;
    let report = model.check_big_diagonal(matrix, tuple_mode)?;
    all_passed &= print_check(&report, &mut reports);

    if n >= 3 {
        let report = model.check_delta_prime(matrix, tuple_mode)?;
        all_passed &= print_check(&report, &mut reports);
    }

    let probe = model.naturality_probe(matrix, finmodel::DEFAULT_BUDGET)?;
    print_probe(&probe, &mut reports);

    if let Some(out) = json_out {
        out.extend(reports);
    }
    Ok(all_passed)
}

fn print_check(report: &CheckReport, reports: &mut Vec<serde_json::Value>) -> bool {
    println!("{report}");
    reports.push(serde_json::to_value(report).expect("report serialization cannot fail"));
    report.passed()
}

fn print_probe(report: &NaturalityReport, reports: &mut Vec<serde_json::Value>) {
    println!("{report}");
    reports.push(serde_json::to_value(report).expect("report serialization cannot fail"));
}

/// Exhaustive when affordable or forced; sampling otherwise.
fn choose_mode(
    model: &FiniteModel,
    n: usize,
    per_tuple: u128,
    exhaustive: bool,
    samples: Option<u64>,
    seed: u64,
) -> Result<CheckMode, CliError> {
    if let Some(count) = samples {
        return Ok(CheckMode::Sample { count, seed });
    }
    if exhaustive {
        return Ok(CheckMode::exhaustive());
    }
    let affordable = model
        .tuple_space(n)
        .map(|t| t.saturating_mul(per_tuple) <= finmodel::DEFAULT_BUDGET as u128)
        .unwrap_or(false);
    if affordable {
        Ok(CheckMode::exhaustive())
    } else {
        Ok(CheckMode::Sample {
            count: 100_000,
            seed,
        })
    }
}

/// Accepts either a matrix file or a certificate file.
fn load_matrix(path: &PathBuf) -> Result<OrderMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(Error::from)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(Error::from)?;
    let matrix = if value.get("entries").is_some() {
        MatrixFile::from_json(&text)?.to_matrix()?
    } else if value.get("matrix").is_some() {
        CertificateFile::from_json(&text)?.to_certificate()?.matrix
    } else {
        return Err(CliError::Usage(format!(
            "{} is neither a matrix file nor a certificate file",
            path.display()
        )));
    };
    Ok(matrix)
}

fn parse_bigint_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::Usage(format!("invalid integer {:?}", part.trim())))
        })
        .collect()
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("invalid integer {:?}", part.trim())))
        })
        .collect()
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid integer {:?}", part.trim())))
        })
        .collect()
}
