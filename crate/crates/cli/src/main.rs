use bezout::debranges::{corona_polynomial_data, hb_decompose, hb_norm, pythagorean_mate};
use bezout::estimates::{estimate_report, sharpness_sweep, Family, SweepResult};
use bezout::json::{self, real, InstanceKind};
use bezout::multi::solve_multi_bezout;
use bezout::sylvester::{build_sylvester, resultant, solve_minimal_bezout, Method};
use bezout::{Complex64, Error, ExactPoly, GaussianRational, Poly, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Minimal Bezout solutions and related computations.
///
/// Polynomial arguments are ascending-degree JSON: an array of reals or
/// `[re, im]` pairs, or `{"re": [...], "im": [...]}`. Any JSON argument may be
/// given inline, as `@path`, or as the path of an existing file.
#[derive(Parser, Debug)]
#[command(name = "bezout", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal solution of R A + S B = 1.
    Solve(SolveArgs),
    /// Solution of R A + S_1 B_1 + ... + S_L B_L = 1 through a plank vector.
    SolveMulti(MultiArgs),
    /// Determinant of the Sylvester matrix.
    Resultant(PairArgs),
    /// Growth of the solution norm along a family as delta shrinks.
    EstimateSweep(SweepArgs),
    /// Pythagorean mate and boundary zeros of a rational b.
    Mate(MateArgs),
    /// Norm of a polynomial in H(b).
    HbNorm(HbArgs),
    /// Polynomial corona data for the boundary zeros of the mate of b.
    CoronaPoly(CoronaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Sylvester,
    #[value(alias = "interpolation")]
    Interp,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Sylvester => Method::Sylvester,
            MethodArg::Interp => Method::Interpolation,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Approx,
    Exact,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the report to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    /// Instance file (kind "bezout") or a bare {"A": ..., "B": ...} object.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum, default_value = "approx")]
    mode: ModeArg,
    /// Include the Sylvester matrix in the report.
    #[arg(long)]
    emit_matrix: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum, default_value = "sylvester")]
    method: MethodArg,
}

#[derive(Args, Debug)]
struct MultiArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<String>,
    /// Repeat for each B_j.
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Vec<String>,
    /// Lower bound for (sum_j |B_j|^2)^{1/2} at the roots of A; measured when omitted.
    #[arg(long)]
    delta: Option<f64>,
    /// Instance file (kind "multi") or a bare {"A": ..., "B": [...], "delta": ...} object.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "sylvester")]
    method: MethodArg,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// example12 (A = z^n, B = z - delta), example24 or double-root.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated values in (0, 1).
    #[arg(long, value_delimiter = ',', required = true)]
    deltas: Vec<f64>,
    #[arg(long, value_enum, default_value = "sylvester")]
    method: MethodArg,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// `csv` or `json` selects the format on standard output; anything else
    /// is a path (`.csv` files get CSV).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct MateArgs {
    /// {"num": poly, "den": poly} or a polynomial.
    #[arg(long)]
    b: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct HbArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long)]
    b: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CoronaArgs {
    #[arg(long)]
    b: String,
    /// The polynomials p_j, each of degree below N.
    #[arg(long, num_args = 1.., required = true)]
    p: Vec<String>,
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

struct Report {
    inputs: Value,
    outputs: Value,
    diagnostics: Value,
}

enum Emit {
    Json(Report),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let (result, out) = match cli.command {
        Command::Solve(a) => {
            let out = a.pair.output.out.clone();
            (solve(a), out)
        }
        Command::SolveMulti(a) => {
            let out = a.output.out.clone();
            (solve_multi(a), out)
        }
        Command::Resultant(a) => {
            let out = a.output.out.clone();
            (resultant_cmd(a), out)
        }
        Command::EstimateSweep(a) => match sweep(a) {
            Ok((emit, out)) => (Ok(emit), out),
            Err(e) => (Err(e), None),
        },
        Command::Mate(a) => {
            let out = a.output.out.clone();
            (mate(a), out)
        }
        Command::HbNorm(a) => {
            let out = a.output.out.clone();
            (hb(a), out)
        }
        Command::CoronaPoly(a) => {
            let out = a.output.out.clone();
            (corona(a), out)
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;

    let (text, code) = match result {
        Ok(Emit::Text(t)) => (t, ExitCode::SUCCESS),
        Ok(Emit::Json(r)) => {
            if !json::all_finite(&r.outputs) || !json::all_finite(&r.diagnostics) {
                let e = Error::RootFindingFailed("non-finite value in the result".into());
                (render(&error_report(name, &e)), ExitCode::from(1))
            } else {
                let v = json!({
                    "command": name,
                    "inputs": r.inputs,
                    "outputs": r.outputs,
                    "diagnostics": r.diagnostics,
                    "timing_ms": real(elapsed),
                });
                (render(&v), ExitCode::SUCCESS)
            }
        }
        Err(e) => {
            let code = if e.is_hypothesis() { 2 } else { 1 };
            (render(&error_report(name, &e)), ExitCode::from(code))
        }
    };
    match out {
        Some(path) if code == ExitCode::SUCCESS => {
            if let Err(e) = std::fs::write(&path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        _ => print!("{text}"),
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve(_) => "solve",
        Command::SolveMulti(_) => "solve-multi",
        Command::Resultant(_) => "resultant",
        Command::EstimateSweep(_) => "estimate-sweep",
        Command::Mate(_) => "mate",
        Command::HbNorm(_) => "hb-norm",
        Command::CoronaPoly(_) => "corona-poly",
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn error_report(name: &str, e: &Error) -> Value {
    json!({ "command": name, "error": { "kind": e.kind(), "message": e.to_string() } })
}

/// Inline JSON, `@path`, or the path of an existing file.
fn load(arg: &str) -> Result<Value, Error> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))
    };
    let text = if let Some(path) = arg.strip_prefix('@') {
        read(Path::new(path))?
    } else {
        match serde_json::from_str::<Value>(arg) {
            Ok(v) => return Ok(v),
            Err(_) if Path::new(arg).is_file() => read(Path::new(arg))?,
            Err(e) => return Err(Error::InvalidInput(format!("invalid JSON {arg:?}: {e}"))),
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("invalid JSON in {arg:?}: {e}")))
}

/// Unwraps an instance file of the expected kind; bare payloads pass through.
fn payload(v: Value, kind: InstanceKind) -> Result<Value, Error> {
    if v.get("schema_version").is_none() {
        return Ok(v);
    }
    let file = json::parse_instance_file(&v)?;
    if file.kind != kind {
        return Err(Error::InvalidInput(format!(
            "instance file has kind {:?}, expected {kind:?}",
            file.kind
        )));
    }
    Ok(file.payload)
}

fn missing(what: &str) -> Error {
    Error::InvalidInput(format!("missing {what}"))
}

/// Raw JSON for A and B from either the flags or an instance.
fn pair_values(p: &PairArgs) -> Result<(Value, Value), Error> {
    if let Some(input) = &p.input {
        let v = payload(load(input)?, InstanceKind::Bezout)?;
        let get = |k: &str| {
            v.get(k)
                .or_else(|| v.get(k.to_lowercase()))
                .cloned()
                .ok_or_else(|| missing(&format!("\"{k}\" in the instance")))
        };
        return Ok((get("A")?, get("B")?));
    }
    let a = load(p.a.as_deref().ok_or_else(|| missing("--A"))?)?;
    let b = load(p.b.as_deref().ok_or_else(|| missing("--B"))?)?;
    Ok((a, b))
}

fn exact_pair(a: &Value, b: &Value) -> Result<(ExactPoly, ExactPoly), Error> {
    let not_rational = |e: Error| match e {
        Error::InvalidInput(m) => Error::InvalidInput(format!("exact mode needs Gaussian-rational input: {m}")),
        other => other,
    };
    Ok((
        json::parse_exact_poly(a).map_err(not_rational)?,
        json::parse_exact_poly(b).map_err(not_rational)?,
    ))
}

fn solve(args: SolveArgs) -> Result<Emit, Error> {
    let (av, bv) = pair_values(&args.pair)?;
    let method = Method::from(args.method);
    let mut outputs = Map::new();
    let (inputs, diagnostics) = match args.pair.mode {
        ModeArg::Exact => {
            if method != Method::Sylvester {
                return Err(Error::InvalidInput("exact mode supports the sylvester method only".into()));
            }
            let (a, b) = exact_pair(&av, &bv)?;
            let sol = solve_minimal_bezout(&a, &b)?;
            if let Value::Object(m) = json::exact_bezout_solution_to_json(&sol) {
                outputs.extend(m);
            }
            if args.pair.emit_matrix && !(a.is_constant() && b.is_constant()) {
                outputs.insert("matrix".into(), json::matrix_to_json(&build_sylvester(&a, &b)?));
            }
            let inputs = json!({ "A": json::exact_poly_to_json(&a), "B": json::exact_poly_to_json(&b) });
            (inputs, json::bezout_diagnostics(&sol))
        }
        ModeArg::Approx => {
            let (a, b) = (json::parse_poly(&av)?, json::parse_poly(&bv)?);
            let sol = match method {
                Method::Sylvester => solve_minimal_bezout(&a, &b)?,
                Method::Interpolation => bezout::interpolation::bezout_by_interpolation(&a, &b)?,
            };
            if let Value::Object(m) = json::bezout_solution_to_json(&sol) {
                outputs.extend(m);
            }
            if !a.is_constant() {
                let (report, _) = estimate_report(&a, &b, method)?;
                outputs.insert("estimate".into(), serde_json::to_value(report).expect("plain struct"));
            }
            if args.pair.emit_matrix && !(a.is_constant() && b.is_constant()) {
                outputs.insert("matrix".into(), json::matrix_to_json(&build_sylvester(&a, &b)?));
            }
            let inputs = json!({ "A": json::poly_to_json(&a), "B": json::poly_to_json(&b) });
            (inputs, json::bezout_diagnostics(&sol))
        }
    };
    Ok(Emit::Json(Report {
        inputs,
        outputs: Value::Object(outputs),
        diagnostics,
    }))
}

fn solve_multi(args: MultiArgs) -> Result<Emit, Error> {
    let inst = match &args.input {
        Some(input) => json::parse_instance(&payload(load(input)?, InstanceKind::Multi)?)?,
        None => {
            let a = json::parse_poly(&load(args.a.as_deref().ok_or_else(|| missing("--A"))?)?)?;
            if args.b.is_empty() {
                return Err(missing("--B"));
            }
            let b = args.b.iter().map(|s| json::parse_poly(&load(s)?)).collect::<Result<Vec<_>, _>>()?;
            json::Instance { a, b, delta: None }
        }
    };
    let delta = match args.delta.or(inst.delta) {
        Some(d) => d,
        None => {
            if inst.a.is_constant() {
                return Err(Error::ConstantPolynomial);
            }
            let roots = inst.a.roots()?;
            roots
                .values()
                .map(|al| inst.b.iter().map(|b| b.eval(al).norm_sqr()).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        }
    };
    let sol = solve_multi_bezout(&inst.a, &inst.b, delta, args.method.into(), args.seed)?;
    let mut diagnostics = json::bezout_diagnostics(&sol.single);
    if let Value::Object(m) = &mut diagnostics {
        m.insert("residual".into(), real(sol.residual));
        m.insert("single_residual".into(), real(sol.single.residual));
        m.insert("measured_delta".into(), real(sol.measured_delta));
        m.insert("seed".into(), json!(args.seed));
    }
    let inputs = json::instance_to_json(&json::Instance { delta: Some(delta), ..inst });
    Ok(Emit::Json(Report {
        inputs,
        outputs: json::multi_solution_to_json(&sol),
        diagnostics,
    }))
}

fn resultant_cmd(args: PairArgs) -> Result<Emit, Error> {
    let (av, bv) = pair_values(&args)?;
    let mut outputs = Map::new();
    let inputs = match args.mode {
        ModeArg::Exact => {
            let (a, b) = exact_pair(&av, &bv)?;
            let r: GaussianRational = resultant(&a, &b)?;
            let c = r.to_complex();
            outputs.insert("resultant".into(), json::complex_to_json(&c));
            outputs.insert("resultant_exact".into(), json::exact_poly_to_json(&ExactPoly::new(vec![r])));
            outputs.insert("modulus".into(), real(c.norm()));
            if args.emit_matrix {
                outputs.insert("matrix".into(), json::matrix_to_json(&build_sylvester(&a, &b)?));
            }
            json!({ "A": json::exact_poly_to_json(&a), "B": json::exact_poly_to_json(&b) })
        }
        ModeArg::Approx => {
            let (a, b) = (json::parse_poly(&av)?, json::parse_poly(&bv)?);
            let r: Complex64 = resultant(&a, &b)?;
            outputs.insert("resultant".into(), json::complex_to_json(&r));
            outputs.insert("modulus".into(), real(r.norm()));
            if args.emit_matrix {
                outputs.insert("matrix".into(), json::matrix_to_json(&build_sylvester(&a, &b)?));
            }
            json!({ "A": json::poly_to_json(&a), "B": json::poly_to_json(&b) })
        }
    };
    let mode = match args.mode {
        ModeArg::Exact => "exact",
        ModeArg::Approx => "approximate",
    };
    Ok(Emit::Json(Report {
        inputs,
        outputs: Value::Object(outputs),
        diagnostics: json!({ "mode": mode }),
    }))
}

fn sweep(args: SweepArgs) -> Result<(Emit, Option<PathBuf>), Error> {
    let (format, path) = match args.out.as_deref() {
        Some("csv") => (Format::Csv, None),
        Some("json") => (Format::Json, None),
        Some(p) => {
            let path = PathBuf::from(p);
            let by_ext = if path.extension().is_some_and(|e| e == "csv") {
                Format::Csv
            } else {
                Format::Json
            };
            (args.format.unwrap_or(by_ext), Some(path))
        }
        None => (args.format.unwrap_or(Format::Json), None),
    };
    let family = Family::parse(&args.family, args.n)?;
    let result = sharpness_sweep(family, &args.deltas, args.method.into(), args.jobs.max(1))?;
    let emit = match format {
        Format::Csv => {
            eprintln!("fitted_slope={:.4}", result.fitted_slope);
            Emit::Text(sweep_csv(&result))
        }
        Format::Json => Emit::Json(Report {
            inputs: json!({
                "family": args.family,
                "n": args.n,
                "deltas": args.deltas.iter().map(|d| real(*d)).collect::<Vec<_>>(),
                "method": Method::from(args.method),
            }),
            outputs: serde_json::to_value(&result).expect("plain struct"),
            diagnostics: json!({ "jobs": args.jobs.max(1), "empirical_constant": real(result.empirical_constant()) }),
        }),
    };
    Ok((emit, path))
}

fn sweep_csv(r: &SweepResult) -> String {
    let mut s = String::from("delta,joint_norm,sharp_ratio,residual\r\n");
    for p in &r.points {
        s.push_str(&format!("{},{},{},{}\r\n", p.delta, p.joint_norm, p.sharp_ratio, p.residual));
    }
    s
}

fn mate(args: MateArgs) -> Result<Emit, Error> {
    let b = json::parse_rational_function(&load(&args.b)?)?;
    let m = pythagorean_mate(&b)?;
    Ok(Emit::Json(Report {
        inputs: json!({ "b": json::rational_function_to_json(&b) }),
        outputs: json::mate_to_json(&m),
        diagnostics: json!({ "identity_error": real(m.identity_error) }),
    }))
}

fn hb(args: HbArgs) -> Result<Emit, Error> {
    let f = json::parse_poly(&load(&args.f)?)?;
    let b = json::parse_rational_function(&load(&args.b)?)?;
    let m = pythagorean_mate(&b)?;
    let e = hb_decompose(&f, &m.a1)?;
    let norm = hb_norm(&f, &m.a1)?;
    let recon = &(&m.a1 * &e.f_tilde) + &e.p;
    let recon_err = (&recon - &f).norm_coeff() / f.norm_coeff().max(f64::MIN_POSITIVE);
    Ok(Emit::Json(Report {
        inputs: json!({ "f": json::poly_to_json(&f), "b": json::rational_function_to_json(&b) }),
        outputs: json!({
            "norm": real(norm),
            "decomposition": json::hb_element_to_json(&e),
            "a1": json::poly_to_json(&m.a1),
        }),
        diagnostics: json!({ "reconstruction_error": real(recon_err), "identity_error": real(m.identity_error) }),
    }))
}

fn corona(args: CoronaArgs) -> Result<Emit, Error> {
    let b = json::parse_rational_function(&load(&args.b)?)?;
    let ps: Vec<Poly> = args.p.iter().map(|s| json::parse_poly(&load(s)?)).collect::<Result<_, _>>()?;
    let m = pythagorean_mate(&b)?;
    let sol = corona_polynomial_data(&m.a1, &m.boundary_roots, &ps, args.delta, args.seed)?;
    Ok(Emit::Json(Report {
        inputs: json!({
            "b": json::rational_function_to_json(&b),
            "p": json::polys_to_json(&ps),
            "delta": real(args.delta),
        }),
        outputs: json!({
            "a1": json::poly_to_json(&m.a1),
            "q": json::poly_to_json(&sol.r),
            "q_list": json::polys_to_json(&sol.s_list),
            "y": json::plank_to_json(&sol.y),
        }),
        diagnostics: json!({
            "residual": real(sol.residual),
            "measured_delta": real(sol.measured_delta),
            "seed": args.seed,
        }),
    }))
}
