//! Problem files: a versioned TOML schema, validated field by field before
//! any computation. Errors carry the field path and source line.

use std::fmt;
use std::ops::Range;

use serde::Deserialize;
use skew_core::interp::ConstraintSpec;
use skew_core::ring::{Automorphism, Delta, DivisionRing, GaloisField, Twist, TwistConfig};
use skew_core::skewpoly::{SkewPoly, Word};
use skew_core::{Error, Side};
use toml::{Spanned, Value};

use crate::report::CliError;

pub const FORMAT_VERSION: i64 = 1;

type List<T> = Spanned<Vec<Spanned<T>>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub format: Spanned<i64>,
    pub ring: Spanned<String>,
    pub n: Spanned<i64>,
    pub sigma: Option<List<String>>,
    pub delta: Option<Spanned<String>>,
    /// Rows `δ(b)` for each prime-field basis element `b`, used with
    /// `delta = "table"`.
    pub delta_table: Option<List<Vec<Spanned<Value>>>>,
    pub side: Option<Spanned<String>>,
    pub task: Option<Spanned<String>>,
    pub points: Option<List<Value>>,
    pub chains: Option<List<String>>,
    pub targets: Option<List<Value>>,
    pub polynomial: Option<Spanned<String>>,
    /// Order of the Vandermonde matrix; defaults to `N`.
    pub order: Option<Spanned<i64>>,
}

/// A validation failure located in the problem file.
#[derive(Debug)]
pub struct FieldError {
    pub path: String,
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{} (line {line}): {}", self.path, self.message),
            None => write!(f, "{}: {}", self.path, self.message),
        }
    }
}

/// Source text used to turn byte spans into line numbers.
#[derive(Clone, Copy)]
pub struct Source<'a>(pub &'a str);

impl Source<'_> {
    pub fn line(&self, span: Range<usize>) -> usize {
        let end = span.start.min(self.0.len());
        self.0[..end].matches('\n').count() + 1
    }

    pub fn error(&self, path: impl Into<String>, span: Range<usize>, message: impl Into<String>) -> FieldError {
        FieldError {
            path: path.into(),
            line: Some(self.line(span)),
            message: message.into(),
        }
    }
}

pub fn missing(path: &str, task: &str) -> FieldError {
    FieldError {
        path: path.into(),
        line: None,
        message: format!("required by `{task}`"),
    }
}

pub fn parse(src: &str) -> Result<ProblemFile, FieldError> {
    let file: ProblemFile = toml::from_str(src).map_err(|e| {
        let line = e.span().map(|s| Source(src).line(s));
        FieldError {
            path: "file".into(),
            line,
            message: e.message().to_string(),
        }
    })?;
    if *file.format.get_ref() != FORMAT_VERSION {
        return Err(Source(src).error(
            "format",
            file.format.span(),
            format!(
                "unsupported format {}, expected {FORMAT_VERSION}",
                file.format.get_ref()
            ),
        ));
    }
    Ok(file)
}

/// The ring named by the `ring` key.
pub enum RingSpec {
    Rationals,
    GaussianRationals,
    Quaternions,
    Gf(GaloisField),
}

pub fn ring_spec(file: &ProblemFile, src: Source) -> Result<RingSpec, FieldError> {
    let raw: String = file.ring.get_ref().chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: String| src.error("ring", file.ring.span(), msg);
    match raw.as_str() {
        "rationals" => return Ok(RingSpec::Rationals),
        "gaussian_rationals" => return Ok(RingSpec::GaussianRationals),
        "quaternions" => return Ok(RingSpec::Quaternions),
        _ => {}
    }
    let Some(args) = raw.strip_prefix("gf(").and_then(|s| s.strip_suffix(')')) else {
        return Err(err(format!(
            "unknown ring `{raw}`; expected rationals, gaussian_rationals, quaternions or gf(p,m[,modulus])"
        )));
    };
    let (head, modulus) = match args.split_once(",[") {
        Some((h, m)) => (
            h,
            Some(m.strip_suffix(']').ok_or_else(|| err("unclosed modulus list".into()))?),
        ),
        None => (args, None),
    };
    let nums: Vec<u32> = head
        .split(',')
        .map(|t| t.parse().map_err(|_| err(format!("bad field parameter `{t}`"))))
        .collect::<Result<_, _>>()?;
    let [p, m] = nums[..] else {
        return Err(err("gf needs a characteristic p and a degree m".into()));
    };
    let field = match modulus {
        None => GaloisField::new(p, m),
        Some(list) => {
            let coeffs: Vec<u32> = list
                .split(',')
                .map(|t| t.parse().map_err(|_| err(format!("bad modulus coefficient `{t}`"))))
                .collect::<Result<_, _>>()?;
            GaloisField::with_modulus(p, m, coeffs)
        }
    };
    field.map(RingSpec::Gf).map_err(|e| err(e.to_string()))
}

/// Splits at commas outside parentheses and brackets.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn call<'s>(s: &'s str, name: &str) -> Option<&'s str> {
    s.trim().strip_prefix(name)?.trim().strip_prefix('(')?.strip_suffix(')')
}

fn elem_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Integer(i) => Some(i.to_string()),
        _ => None,
    }
}

fn elem<R: DivisionRing>(ring: &R, src: Source, path: &str, v: &Spanned<Value>) -> Result<R::Elem, FieldError> {
    let text = elem_text(v.get_ref())
        .ok_or_else(|| src.error(path, v.span(), "expected a scalar written as a string or integer"))?;
    ring.parse_elem(&text)
        .map_err(|e| src.error(path, v.span(), e.to_string()))
}

/// A scalar or an array of scalars; a bare scalar counts as a 1-vector.
fn elem_vector<R: DivisionRing>(
    ring: &R,
    src: Source,
    path: &str,
    v: &Spanned<Value>,
) -> Result<Vec<R::Elem>, FieldError> {
    let span = v.span();
    match v.get_ref() {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(k, item)| {
                let item = Spanned::new(span.clone(), item.clone());
                elem(ring, src, &format!("{path}[{k}]"), &item)
            })
            .collect(),
        _ => Ok(vec![elem(ring, src, path, v)?]),
    }
}

fn automorphism<R: DivisionRing>(ring: &R, s: &str) -> Result<Automorphism<R::Elem>, String> {
    let t = s.trim();
    match t {
        "identity" | "id" => return Ok(Automorphism::Identity),
        "conj" | "conjugation" => return Ok(Automorphism::Conjugation),
        "frobenius" => return Ok(Automorphism::Frobenius(1)),
        _ => {}
    }
    if let Some(k) = call(t, "frobenius") {
        return k
            .trim()
            .parse()
            .map(Automorphism::Frobenius)
            .map_err(|_| format!("bad Frobenius power `{k}`"));
    }
    if let Some(c) = call(t, "inner") {
        let unit = ring.parse_elem(c).map_err(|e| e.to_string())?;
        return Automorphism::inner(ring, unit).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown automorphism `{t}`; expected identity, conj, frobenius(k) or inner(c)"
    ))
}

pub fn twist<R: DivisionRing>(ring: R, file: &ProblemFile, src: Source) -> Result<Twist<R>, FieldError> {
    let n = *file.n.get_ref();
    if n < 1 {
        return Err(src.error("n", file.n.span(), "at least one variable is required"));
    }
    let n = n as usize;
    let autos = match &file.sigma {
        None => vec![Automorphism::Identity; n],
        Some(list) => {
            if list.get_ref().len() != n {
                return Err(src.error(
                    "sigma",
                    list.span(),
                    format!("expected {n} automorphisms, got {}", list.get_ref().len()),
                ));
            }
            let mut out = Vec::with_capacity(n);
            for (k, s) in list.get_ref().iter().enumerate() {
                let path = format!("sigma[{k}]");
                let a = automorphism(&ring, s.get_ref()).map_err(|m| src.error(&path, s.span(), m))?;
                a.check(&ring).map_err(|e| src.error(&path, s.span(), e.to_string()))?;
                out.push(a);
            }
            out
        }
    };
    let delta = delta(&ring, file, src, n)?;
    TwistConfig::diagonal(ring, autos, delta).map_err(|e| FieldError {
        path: "sigma".into(),
        line: None,
        message: e.to_string(),
    })
}

fn delta<R: DivisionRing>(ring: &R, file: &ProblemFile, src: Source, n: usize) -> Result<Delta<R::Elem>, FieldError> {
    let name = file.delta.as_ref().map(|d| (d.get_ref().trim().to_string(), d.span()));
    if let (Some(table), false) = (&file.delta_table, name.as_ref().is_some_and(|(s, _)| s == "table")) {
        return Err(src.error("delta_table", table.span(), "only allowed with delta = \"table\""));
    }
    let Some((name, span)) = name else {
        return Ok(Delta::Zero);
    };
    if name == "zero" {
        return Ok(Delta::Zero);
    }
    if let Some(args) = call(&name, "inner") {
        let parts = split_args(args);
        if parts.len() != n {
            return Err(src.error(
                "delta",
                span,
                format!("inner derivation needs {n} entries, got {}", parts.len()),
            ));
        }
        let v = parts
            .iter()
            .map(|p| {
                ring.parse_elem(p)
                    .map_err(|e| src.error("delta", span.clone(), e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        return Ok(Delta::Inner(v));
    }
    if name == "table" {
        let table = file
            .delta_table
            .as_ref()
            .ok_or_else(|| src.error("delta_table", span, "required by delta = \"table\""))?;
        let basis = ring.prime_basis().len();
        if table.get_ref().len() != basis {
            return Err(src.error(
                "delta_table",
                table.span(),
                format!(
                    "expected {basis} rows (one per prime-field basis element), got {}",
                    table.get_ref().len()
                ),
            ));
        }
        let mut rows = Vec::with_capacity(basis);
        for (b, row) in table.get_ref().iter().enumerate() {
            let path = format!("delta_table[{b}]");
            if row.get_ref().len() != n {
                return Err(src.error(
                    &path,
                    row.span(),
                    format!("expected {n} entries, got {}", row.get_ref().len()),
                ));
            }
            let r = row
                .get_ref()
                .iter()
                .enumerate()
                .map(|(i, v)| elem(ring, src, &format!("{path}[{i}]"), v))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(r);
        }
        return TwistConfig::delta_from_basis_table(ring, rows)
            .map_err(|e| src.error("delta_table", table.span(), e.to_string()));
    }
    Err(src.error(
        "delta",
        span,
        format!("unknown derivation `{name}`; expected zero, inner(v1, …, vn) or table"),
    ))
}

pub fn side(file: &ProblemFile, src: Source, flag: Option<Side>) -> Result<Side, FieldError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match &file.side {
        None => Ok(Side::Right),
        Some(s) => s
            .get_ref()
            .parse()
            .map_err(|e: Error| src.error("side", s.span(), e.to_string())),
    }
}

/// Fields resolved against a twist; each is present only if the file
/// declares it.
pub struct Resolved<R: DivisionRing> {
    pub twist: Twist<R>,
    pub side: Side,
    pub points: Option<Vec<Vec<R::Elem>>>,
    pub chains: Option<Vec<Word>>,
    pub targets: Option<Vec<Vec<R::Elem>>>,
    pub polynomial: Option<SkewPoly<R>>,
    pub order: Option<usize>,
}

pub fn resolve<R: DivisionRing>(
    twist: Twist<R>,
    side: Side,
    file: &ProblemFile,
    src: Source,
) -> Result<Resolved<R>, FieldError> {
    let r = twist.ring().clone();
    let n = twist.n();
    let points = match &file.points {
        None => None,
        Some(list) => {
            let mut out: Vec<Vec<R::Elem>> = Vec::new();
            for (j, v) in list.get_ref().iter().enumerate() {
                let path = format!("points[{j}]");
                let p = elem_vector(&r, src, &path, v)?;
                if p.len() != n {
                    return Err(src.error(&path, v.span(), format!("expected {n} coordinates, got {}", p.len())));
                }
                if let Some(k) = out.iter().position(|q| *q == p) {
                    return Err(src.error(&path, v.span(), format!("repeats points[{k}]")));
                }
                out.push(p);
            }
            Some(out)
        }
    };
    let chains = match &file.chains {
        None => None,
        Some(list) => {
            if let Some(p) = &points {
                if p.len() != list.get_ref().len() {
                    return Err(src.error(
                        "chains",
                        list.span(),
                        format!(
                            "expected one chain per point ({}), got {}",
                            p.len(),
                            list.get_ref().len()
                        ),
                    ));
                }
            }
            let words = list
                .get_ref()
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    Word::parse(s.get_ref(), n).map_err(|e| src.error(format!("chains[{j}]"), s.span(), e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Some(words)
        }
    };
    let targets = match &file.targets {
        None => None,
        Some(list) => {
            let k = points.as_ref().map_or(list.get_ref().len(), Vec::len);
            if list.get_ref().len() != k {
                return Err(src.error(
                    "targets",
                    list.span(),
                    format!("expected one target list per point ({k}), got {}", list.get_ref().len()),
                ));
            }
            let mut out = Vec::with_capacity(k);
            for (j, v) in list.get_ref().iter().enumerate() {
                let path = format!("targets[{j}]");
                let t = elem_vector(&r, src, &path, v)?;
                let want = chains.as_ref().map_or(1, |c| c[j].deg() + 1);
                if t.len() != want {
                    let chain = chains.as_ref().map_or("o".to_string(), |c| c[j].to_string());
                    return Err(src.error(
                        &path,
                        v.span(),
                        format!("chain `{chain}` constrains {want} values, got {} targets", t.len()),
                    ));
                }
                out.push(t);
            }
            Some(out)
        }
    };
    let polynomial = match &file.polynomial {
        None => None,
        Some(s) => {
            Some(SkewPoly::parse(&twist, s.get_ref()).map_err(|e| src.error("polynomial", s.span(), e.to_string()))?)
        }
    };
    let order = match &file.order {
        None => None,
        Some(o) if *o.get_ref() < 0 => return Err(src.error("order", o.span(), "must be non-negative")),
        Some(o) => Some(*o.get_ref() as usize),
    };
    Ok(Resolved {
        twist,
        side,
        points,
        chains,
        targets,
        polynomial,
        order,
    })
}

impl<R: DivisionRing> Resolved<R> {
    pub fn points(&self, task: &str) -> Result<&[Vec<R::Elem>], FieldError> {
        self.points.as_deref().ok_or_else(|| missing("points", task))
    }

    pub fn polynomial(&self, task: &str) -> Result<&SkewPoly<R>, FieldError> {
        self.polynomial.as_ref().ok_or_else(|| missing("polynomial", task))
    }

    pub fn targets(&self, task: &str) -> Result<&[Vec<R::Elem>], FieldError> {
        self.targets.as_deref().ok_or_else(|| missing("targets", task))
    }

    /// The chains, or `o` at every point when the file omits them.
    pub fn chains_or_plain(&self, k: usize) -> Vec<Word> {
        self.chains.clone().unwrap_or_else(|| vec![Word::empty(); k])
    }

    pub fn spec(&self, task: &str) -> Result<ConstraintSpec<R>, CliError> {
        let points = self.points(task)?;
        ConstraintSpec::new(
            &self.twist,
            points.to_vec(),
            self.chains_or_plain(points.len()),
            self.side,
        )
        .map_err(CliError::from)
    }
}
