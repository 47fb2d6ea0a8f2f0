//! JSON encodings of polynomials, instances and results.
//!
//! A polynomial is written as `{"re": [...], "im": [...]}` in ascending
//! degree. On input it may also be a plain array whose entries are numbers,
//! `"p/q"` strings or `[re, im]` pairs. Exact polynomials carry the integer
//! arrays `num_re`, `den_re`, `num_im`, `den_im` next to the rounded `re` and
//! `im`; when those are absent the decimal text of the numbers is read
//! exactly.

use crate::debranges::{BoundaryCheck, HbElement, PythagoreanMate, RationalFunction};
use crate::error::{Error, Result};
use crate::interpolation::HermiteData;
use crate::multi::{MultiBezoutSolution, PlankCertificate};
use crate::poly::RootSet;
use crate::scalar::{gaussian, rational_to_f64};
use crate::sylvester::{BezoutSolution, SylvesterMatrix};
use crate::{ExactPoly, GaussianRational, Poly, Real, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Map, Number, Value};

pub const SCHEMA_VERSION: u64 = 1;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// A JSON number, or `null` when `x` is not finite.
pub fn real(x: f64) -> Value {
    // -0.0 prints as 0.0
    Number::from_f64(x + 0.0).map_or(Value::Null, Value::Number)
}

fn integer(n: &BigInt) -> Value {
    serde_json::from_str::<Number>(&n.to_string()).map_or(Value::Null, Value::Number)
}

pub fn complex_to_json(z: &Complex64) -> Value {
    json!([real(z.re), real(z.im)])
}

pub fn poly_to_json(p: &Poly) -> Value {
    let re: Vec<Value> = p.coeffs().iter().map(|c| real(c.re)).collect();
    let im: Vec<Value> = p.coeffs().iter().map(|c| real(c.im)).collect();
    json!({ "re": re, "im": im })
}

pub fn exact_poly_to_json(p: &ExactPoly) -> Value {
    let c = p.coeffs();
    let part = |f: &dyn Fn(&GaussianRational) -> &BigRational| -> (Vec<Value>, Vec<Value>, Vec<Value>) {
        let approx = c.iter().map(|z| real(rational_to_f64(f(z)))).collect();
        let num = c.iter().map(|z| integer(f(z).numer())).collect();
        let den = c.iter().map(|z| integer(f(z).denom())).collect();
        (approx, num, den)
    };
    let (re, num_re, den_re) = part(&|z| &z.re);
    let (im, num_im, den_im) = part(&|z| &z.im);
    json!({
        "re": re, "im": im,
        "num_re": num_re, "den_re": den_re,
        "num_im": num_im, "den_im": den_im,
    })
}

/// Reads decimal text (`-1.25e-3`) or a fraction (`7/3`) exactly.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let (n, d) = (parse_rational(n)?, parse_rational(d)?);
        return (!d.is_zero()).then(|| n / d);
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return None;
    }
    let all: BigInt = format!("0{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i64;
    let ten = BigInt::from(10u32);
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    let mut q = if shift >= 0 {
        BigRational::from_integer(all * scale)
    } else {
        BigRational::new(all, scale)
    };
    if neg {
        q = -q;
    }
    Some(q)
}

fn exact_real(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()).ok_or_else(|| bad(format!("not a rational number: {n}"))),
        Value::String(s) => parse_rational(s).ok_or_else(|| bad(format!("not a rational number: {s:?}"))),
        other => Err(bad(format!("expected a number, got {other}"))),
    }
}

fn approx_real(v: &Value) -> Result<f64> {
    let x = match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| bad(format!("not a number: {n}")))?,
        Value::String(s) => rational_to_f64(&parse_rational(s).ok_or_else(|| bad(format!("not a number: {s:?}")))?),
        other => return Err(bad(format!("expected a number, got {other}"))),
    };
    if !x.is_finite() {
        return Err(bad(format!("non-finite value {v}")));
    }
    Ok(x)
}

/// A number, a `"p/q"` string or an `[re, im]` pair.
pub fn parse_complex(v: &Value) -> Result<Complex64> {
    match v {
        Value::Array(pair) if pair.len() == 2 => Ok(Complex64::new(approx_real(&pair[0])?, approx_real(&pair[1])?)),
        Value::Array(_) => Err(bad(format!("complex pair must have two entries: {v}"))),
        _ => Ok(Complex64::new(approx_real(v)?, 0.0)),
    }
}

pub fn parse_exact_complex(v: &Value) -> Result<GaussianRational> {
    match v {
        Value::Array(pair) if pair.len() == 2 => Ok(gaussian(exact_real(&pair[0])?, exact_real(&pair[1])?)),
        Value::Array(_) => Err(bad(format!("complex pair must have two entries: {v}"))),
        _ => Ok(gaussian(exact_real(v)?, BigRational::zero())),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn split_parts<T: Clone + Zero>(
    obj: &Map<String, Value>,
    read: impl Fn(&Value) -> Result<T>,
) -> Result<(Vec<T>, Vec<T>)> {
    let re: Vec<T> = match obj.get("re") {
        Some(v) => array(v, "re")?.iter().map(&read).collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let im: Vec<T> = match obj.get("im") {
        Some(v) => array(v, "im")?.iter().map(&read).collect::<Result<_>>()?,
        None => Vec::new(),
    };
    if obj.get("re").is_none() && obj.get("im").is_none() {
        return Err(bad("polynomial object needs \"re\" and/or \"im\""));
    }
    if !im.is_empty() && !re.is_empty() && im.len() != re.len() {
        return Err(bad("\"re\" and \"im\" differ in length"));
    }
    let n = re.len().max(im.len());
    let pad = |mut v: Vec<T>| {
        v.resize(n, T::zero());
        v
    };
    Ok((pad(re), pad(im)))
}

pub fn parse_poly(v: &Value) -> Result<Poly> {
    match v {
        Value::Array(items) => Ok(Poly::new(items.iter().map(parse_complex).collect::<Result<_>>()?)),
        Value::Object(obj) => {
            if obj.contains_key("num_re") || obj.contains_key("num_im") {
                return Ok(parse_exact_poly(v)?.map(Complex64::from_exact));
            }
            let (re, im) = split_parts(obj, approx_real)?;
            Ok(Poly::new(re.into_iter().zip(im).map(|(r, i)| Complex64::new(r, i)).collect()))
        }
        Value::Number(_) | Value::String(_) => Ok(Poly::constant(parse_complex(v)?)),
        other => Err(bad(format!("cannot read a polynomial from {other}"))),
    }
}

/// Reads a polynomial with Gaussian-rational coefficients; fails with
/// `InvalidInput` when a coefficient is not a rational.
pub fn parse_exact_poly(v: &Value) -> Result<ExactPoly> {
    match v {
        Value::Array(items) => Ok(ExactPoly::new(items.iter().map(parse_exact_complex).collect::<Result<_>>()?)),
        Value::Object(obj) if obj.contains_key("num_re") || obj.contains_key("num_im") => {
            let ints = |key: &str| -> Result<Vec<BigInt>> {
                match obj.get(key) {
                    None => Ok(Vec::new()),
                    Some(v) => array(v, key)?
                        .iter()
                        .map(|x| {
                            let q = exact_real(x)?;
                            q.is_integer()
                                .then(|| q.to_integer())
                                .ok_or_else(|| bad(format!("{key} entries must be integers")))
                        })
                        .collect(),
                }
            };
            let part = |num: &str, den: &str| -> Result<Vec<BigRational>> {
                let (n, d) = (ints(num)?, ints(den)?);
                if d.is_empty() {
                    return Ok(n.into_iter().map(BigRational::from_integer).collect());
                }
                if d.len() != n.len() {
                    return Err(bad(format!("{num} and {den} differ in length")));
                }
                n.into_iter()
                    .zip(d)
                    .map(|(n, d)| {
                        if d.is_zero() {
                            Err(bad(format!("zero entry in {den}")))
                        } else {
                            Ok(BigRational::new(n, d))
                        }
                    })
                    .collect()
            };
            let (mut re, mut im) = (part("num_re", "den_re")?, part("num_im", "den_im")?);
            let n = re.len().max(im.len());
            re.resize(n, BigRational::zero());
            im.resize(n, BigRational::zero());
            Ok(ExactPoly::new(re.into_iter().zip(im).map(|(r, i)| gaussian(r, i)).collect()))
        }
        Value::Object(obj) => {
            let (re, im) = split_parts(obj, exact_real)?;
            Ok(ExactPoly::new(re.into_iter().zip(im).map(|(r, i)| gaussian(r, i)).collect()))
        }
        Value::Number(_) | Value::String(_) => Ok(ExactPoly::constant(parse_exact_complex(v)?)),
        other => Err(bad(format!("cannot read a polynomial from {other}"))),
    }
}

pub fn polys_to_json(ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(poly_to_json).collect())
}

/// `{"num": ..., "den": ...}`; a bare polynomial is read with `den = 1`.
pub fn parse_rational_function(v: &Value) -> Result<RationalFunction> {
    match v.as_object() {
        Some(obj) if obj.contains_key("num") => {
            let num = parse_poly(&obj["num"])?;
            let den = match obj.get("den") {
                Some(d) => parse_poly(d)?,
                None => Poly::one(),
            };
            RationalFunction::new(num, den)
        }
        _ => Ok(RationalFunction::polynomial(parse_poly(v)?)),
    }
}

pub fn rational_function_to_json(r: &RationalFunction) -> Value {
    json!({ "num": poly_to_json(&r.num), "den": poly_to_json(&r.den) })
}

/// `{"nodes": [...], "orders": [...], "targets": [[...], ...]}`
pub fn parse_hermite(v: &Value) -> Result<HermiteData<Complex64>> {
    let obj = v.as_object().ok_or_else(|| bad("Hermite data must be an object"))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| bad(format!("Hermite data lacks {k:?}")));
    let nodes = array(field("nodes")?, "nodes")?.iter().map(parse_complex).collect::<Result<_>>()?;
    let orders = array(field("orders")?, "orders")?
        .iter()
        .map(|o| o.as_u64().map(|o| o as usize).ok_or_else(|| bad("orders must be nonnegative integers")))
        .collect::<Result<_>>()?;
    let targets = array(field("targets")?, "targets")?
        .iter()
        .map(|row| array(row, "targets row")?.iter().map(parse_complex).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let data = HermiteData { nodes, orders, targets };
    data.validate()?;
    Ok(data)
}

pub fn hermite_to_json(h: &HermiteData<Complex64>) -> Value {
    json!({
        "nodes": h.nodes.iter().map(complex_to_json).collect::<Vec<_>>(),
        "orders": h.orders,
        "targets": h.targets.iter().map(|row| row.iter().map(complex_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// `A` with one or several `B` and an optional `delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub a: Poly,
    pub b: Vec<Poly>,
    pub delta: Option<f64>,
}

/// `{"A": poly, "B": poly | [poly, ...], "delta": x}`
pub fn parse_instance(v: &Value) -> Result<Instance> {
    let obj = v.as_object().ok_or_else(|| bad("instance must be an object"))?;
    let get = |k: &str| obj.get(k).or_else(|| obj.get(&k.to_lowercase()));
    let a = parse_poly(get("A").ok_or_else(|| bad("instance lacks \"A\""))?)?;
    let b_val = get("B").ok_or_else(|| bad("instance lacks \"B\""))?;
    let b = match b_val {
        Value::Array(items) if items.iter().all(|x| x.is_object() || x.is_array()) && !items.is_empty() && !is_pair_list(items) => {
            items.iter().map(parse_poly).collect::<Result<_>>()?
        }
        other => vec![parse_poly(other)?],
    };
    let delta = get("delta").map(approx_real).transpose()?;
    Ok(Instance { a, b, delta })
}

// `[[1, 0], [0, 1]]` is one polynomial with complex coefficients, while
// `[[1, 0], [0, 1, 2]]` and `[{...}]` are lists of polynomials.
fn is_pair_list(items: &[Value]) -> bool {
    items.iter().all(|x| x.as_array().is_some_and(|p| p.len() == 2 && p.iter().all(|e| !e.is_array())))
}

pub fn instance_to_json(inst: &Instance) -> Value {
    let mut m = Map::new();
    m.insert("A".into(), poly_to_json(&inst.a));
    m.insert("B".into(), polys_to_json(&inst.b));
    if let Some(d) = inst.delta {
        m.insert("delta".into(), real(d));
    }
    Value::Object(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Bezout,
    Multi,
    Sweep,
    Mate,
    Corona,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct InstanceFile {
    pub schema_version: u64,
    pub kind: InstanceKind,
    pub payload: Value,
}

/// Reads an instance file and checks its schema version.
pub fn parse_instance_file(v: &Value) -> Result<InstanceFile> {
    let file: InstanceFile = serde_json::from_value(v.clone()).map_err(|e| bad(format!("instance file: {e}")))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(bad(format!(
            "unsupported schema_version {} (expected {SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    Ok(file)
}

pub fn roots_to_json(roots: &RootSet<Complex64>) -> Value {
    Value::Array(
        roots
            .iter()
            .map(|r| json!({ "value": complex_to_json(&r.value), "multiplicity": r.multiplicity }))
            .collect(),
    )
}

pub fn plank_to_json(c: &PlankCertificate) -> Value {
    json!({
        "y": c.y.iter().map(complex_to_json).collect::<Vec<_>>(),
        "achieved": real(c.achieved),
        "bound": real(c.bound),
    })
}

fn insert_opt(m: &mut Map<String, Value>, key: &str, v: Option<f64>) {
    if let Some(x) = v {
        m.insert(key.into(), real(x));
    }
}

/// Solution polynomials and norms of a single solve.
pub fn bezout_solution_to_json(s: &BezoutSolution<Complex64>) -> Value {
    json!({
        "R": poly_to_json(&s.r),
        "S": poly_to_json(&s.s),
        "joint_norm": real(s.joint_norm()),
    })
}

pub fn exact_bezout_solution_to_json(s: &BezoutSolution<GaussianRational>) -> Value {
    let approx = |p: &ExactPoly| p.map(Complex64::from_exact);
    let (r, s_) = (approx(&s.r), approx(&s.s));
    let joint = r.norm_coeff().hypot(s_.norm_coeff());
    json!({
        "R": exact_poly_to_json(&s.r),
        "S": exact_poly_to_json(&s.s),
        "joint_norm": real(joint),
    })
}

/// Residual, method, mode and condition estimate of a single solve.
pub fn bezout_diagnostics<T>(s: &BezoutSolution<T>) -> Value {
    let mut m = Map::new();
    m.insert("residual".into(), real(s.residual));
    m.insert("method".into(), serde_json::to_value(s.method).expect("plain enum"));
    m.insert("mode".into(), serde_json::to_value(s.mode).expect("plain enum"));
    insert_opt(&mut m, "rcond", s.rcond);
    Value::Object(m)
}

pub fn matrix_to_json<T: Scalar>(m: &SylvesterMatrix<T>) -> Value {
    let rows: Vec<Value> = m
        .entries
        .to_rows()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|z| {
                        let c = z.to_complex();
                        json!([real(c.re.as_f64()), real(c.im.as_f64())])
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "n_a": m.n_a, "n_b": m.n_b, "rows": rows })
}

pub fn multi_solution_to_json(s: &MultiBezoutSolution<Complex64>) -> Value {
    json!({
        "R": poly_to_json(&s.r),
        "S_list": polys_to_json(&s.s_list),
        "S": poly_to_json(&s.s),
        "combined_B": poly_to_json(&s.combined_b),
        "y": plank_to_json(&s.y),
        "joint_norm": real(s.joint_norm()),
    })
}

pub fn mate_to_json(m: &PythagoreanMate) -> Value {
    json!({
        "a": rational_function_to_json(&m.a),
        "a1": poly_to_json(&m.a1),
        "boundary_roots": roots_to_json(&m.boundary_roots),
        "n_total": m.n_total,
        "identity_error": real(m.identity_error),
    })
}

pub fn hb_element_to_json(e: &HbElement) -> Value {
    json!({ "f_tilde": poly_to_json(&e.f_tilde), "p": poly_to_json(&e.p) })
}

pub fn boundary_check_to_json(c: &BoundaryCheck) -> Value {
    json!({
        "xi": complex_to_json(&c.constant.xi),
        "c_k": real(c.constant.c_k),
        "c_tilde": real(c.constant.c_tilde),
        "a_sharp_sup_sq": real(c.constant.a_sharp_sup_sq),
        "eta": real(c.eta),
        "hb_norm": real(c.hb_norm),
        "max_violation": real(c.max_violation),
        "worst": complex_to_json(&c.worst),
    })
}

/// `true` when `v` holds no `null`, which is how non-finite numbers encode.
pub fn all_finite(v: &Value) -> bool {
    match v {
        Value::Null => false,
        Value::Array(items) => items.iter().all(all_finite),
        Value::Object(obj) => obj.values().all(all_finite),
        _ => true,
    }
}
