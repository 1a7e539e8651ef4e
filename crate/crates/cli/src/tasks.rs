//! The subcommands. Each solver result is re-checked from scratch before
//! anything is printed; a failed check becomes a verification error.

use serde_json::{json, Value};
use skew_core::derivative::{partial_chain, taylor, taylor_reconstruct};
use skew_core::dlinalg;
use skew_core::evaldiv::{divide, eval};
use skew_core::interp::{
    build_vandermonde, dim_v, dp_witness, hermite_interpolate, is_dp_independent, univariate_minimal_polynomial,
    ConstraintSpec, InterpProblem,
};
use skew_core::ring::{DivisionRing, Twist};
use skew_core::skewpoly::{SkewPoly, Word};
use skew_core::{Error, Side};

use crate::problem::{self, missing, FieldError, ProblemFile, Resolved, Source};
use crate::report::{arg_text, elems_json, point_text, pretty, type_text, CliError, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Interpolate,
    Verify,
    Independence,
    Eval,
    Derive,
    Vandermonde,
    MinimalPoly,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Interpolate => "interpolate",
            Task::Verify => "verify",
            Task::Independence => "independence",
            Task::Eval => "eval",
            Task::Derive => "derive",
            Task::Vandermonde => "vandermonde",
            Task::MinimalPoly => "minimal-poly",
        }
    }

    pub fn from_file(file: &ProblemFile, src: Source) -> Result<Task, FieldError> {
        let Some(t) = &file.task else {
            return Err(missing("task", "run"));
        };
        Ok(match t.get_ref().as_str() {
            "interpolate" => Task::Interpolate,
            "verify" => Task::Verify,
            "independence" => Task::Independence,
            "eval" => Task::Eval,
            "derive" => Task::Derive,
            "vandermonde" => Task::Vandermonde,
            "minimal_poly" | "minimal-poly" => Task::MinimalPoly,
            other => return Err(src.error("task", t.span(), format!("unknown task `{other}`"))),
        })
    }
}

pub struct Options {
    pub side: Option<Side>,
    pub seed: u64,
}

/// Samples drawn when checking the twist laws.
const LAW_SAMPLES: usize = 200;

pub fn run<R: DivisionRing>(
    ring: R,
    file: &ProblemFile,
    src: Source,
    task: Task,
    opts: &Options,
) -> Result<Report, CliError> {
    let twist = problem::twist(ring, file, src)?;
    let laws = twist.validate_laws(opts.seed, LAW_SAMPLES);
    if let Some(v) = laws.violations.first() {
        let path = if v.law.starts_with("delta") { "delta" } else { "sigma" };
        return Err(FieldError {
            path: path.into(),
            line: None,
            message: format!("law `{}` fails (witness: {})", v.law, v.witness.join(", ")),
        }
        .into());
    }
    let side = problem::side(file, src, opts.side)?;
    if side == Side::Left && !twist.left_capable() {
        return Err(Error::NotLeftCapable.into());
    }
    let res = problem::resolve(twist, side, file, src)?;
    let mut report = match task {
        Task::Interpolate => interpolate(&res)?,
        Task::Verify => verify(&res)?,
        Task::Independence => independence(&res)?,
        Task::Eval => evaluate(&res)?,
        Task::Derive => derive(&res)?,
        Task::Vandermonde => vandermonde(&res)?,
        Task::MinimalPoly => minimal_poly(&res)?,
    };
    let tw = &res.twist;
    let header = format!(
        "{}: {} side over {}, n = {}",
        task.name(),
        side,
        tw.ring().name(),
        tw.n()
    );
    report.lines.insert(0, header);
    let mut json = json!({
        "task": task.name(),
        "side": side.name(),
        "ring": tw.ring().name(),
        "n": tw.n(),
        "passed": report.passed,
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut json, std::mem::take(&mut report.json)) {
        dst.extend(src);
    }
    report.json = json;
    Ok(report)
}

/// One recomputed constraint value.
struct Check<R: DivisionRing> {
    point: usize,
    word: Word,
    value: R::Elem,
    target: R::Elem,
}

impl<R: DivisionRing> Check<R> {
    fn passed(&self) -> bool {
        self.value == self.target
    }

    fn line(&self, r: &R, a: &[R::Elem]) -> String {
        format!(
            "point {} at {}, {}: value {}, target {} {}",
            self.point + 1,
            point_text(r, a),
            self.word,
            r.format_elem(&self.value),
            r.format_elem(&self.target),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    fn json(&self, r: &R) -> Value {
        json!({
            "point": self.point + 1,
            "word": self.word.to_string(),
            "value": r.format_elem(&self.value),
            "target": r.format_elem(&self.target),
            "status": if self.passed() { "PASS" } else { "FAIL" },
        })
    }
}

/// Every constraint value of `f`, each computed by its own chain of
/// partial derivatives rather than by the incremental routine the solvers
/// use. Missing targets mean zero.
fn checks<R: DivisionRing>(
    spec: &ConstraintSpec<R>,
    f: &SkewPoly<R>,
    targets: Option<&[Vec<R::Elem>]>,
) -> Result<Vec<Check<R>>, CliError> {
    let r = spec.twist().ring();
    let mut out = Vec::with_capacity(spec.total());
    for (j, a) in spec.points().iter().enumerate() {
        for (i, w) in spec.chain_words(j).into_iter().enumerate() {
            let (_, value) = partial_chain(f, a, &w, spec.side())?;
            let target = targets.map_or_else(|| r.zero(), |t| t[j][i].clone());
            out.push(Check {
                point: j,
                word: w,
                value,
                target,
            });
        }
    }
    Ok(out)
}

fn summary<R: DivisionRing>(checks: &[Check<R>]) -> String {
    let failed = checks.iter().filter(|c| !c.passed()).count();
    if failed == 0 {
        format!("verify: PASS ({} of {} constraints)", checks.len(), checks.len())
    } else {
        format!("verify: FAIL ({failed} of {} constraints failed)", checks.len())
    }
}

/// The canonical and the conventional text of `f` both parse back to `f`.
fn round_trips<R: DivisionRing>(f: &SkewPoly<R>) -> Result<bool, CliError> {
    let tw = f.twist();
    Ok(SkewPoly::parse(tw, &f.to_string())? == *f && SkewPoly::parse(tw, &pretty(f))? == *f)
}

fn poly_lines<R: DivisionRing>(name: &str, f: &SkewPoly<R>) -> Vec<String> {
    vec![format!("{name} = {f}"), format!("pretty: {}", pretty(f))]
}

fn poly_json<R: DivisionRing>(f: &SkewPoly<R>) -> Value {
    json!({
        "canonical": f.to_string(),
        "pretty": pretty(f),
        "degree": f.degree().finite(),
    })
}

fn degree_text<R: DivisionRing>(f: &SkewPoly<R>) -> String {
    f.degree().finite().map_or("-inf".into(), |d| d.to_string())
}

fn interpolate<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let spec = res.spec("interpolate")?;
    let problem = InterpProblem::new(spec.clone(), res.targets("interpolate")?.to_vec())?;
    let f = hermite_interpolate(&problem)?;
    let checks = checks(&spec, &f, Some(&problem.targets))?;
    if let Some(bad) = checks.iter().find(|c| !c.passed()) {
        let r = spec.twist().ring();
        return Err(Error::Verification(bad.line(r, &spec.points()[bad.point])).into());
    }
    if !round_trips(&f)? {
        return Err(Error::Verification("solution text does not parse back".into()).into());
    }
    let mut lines = poly_lines("f", &f);
    lines.push(format!("degree: {}, N = {}", degree_text(&f), spec.total()));
    lines.push(summary(&checks));
    let json = json!({ "polynomial": poly_json(&f), "constraints": spec.total(), "verified": true });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}

fn verify<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let f = res.polynomial("verify")?;
    let spec = res.spec("verify")?;
    let targets = res.targets("verify")?;
    let r = spec.twist().ring();
    let checks = checks(&spec, f, Some(targets))?;
    let passed = checks.iter().all(Check::passed);
    let mut lines = poly_lines("f", f);
    lines.extend(checks.iter().map(|c| c.line(r, &spec.points()[c.point])));
    lines.push(summary(&checks));
    let json = json!({
        "polynomial": poly_json(f),
        "checks": checks.iter().map(|c| c.json(r)).collect::<Vec<_>>(),
        "verified": passed,
    });
    Ok(Report { lines, json, passed })
}

/// A witness for point `j` must vanish on every other constraint and be
/// nonzero at `a_j` itself.
fn witness_holds<R: DivisionRing>(spec: &ConstraintSpec<R>, j: usize, w: &SkewPoly<R>) -> Result<bool, CliError> {
    let r = spec.twist().ring();
    let checks = checks(spec, w, None)?;
    Ok(checks.iter().all(|c| {
        let own_value = c.point == j && c.word.is_empty();
        own_value != r.is_zero(&c.value)
    }))
}

fn independence<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let spec = res.spec("independence")?;
    let r = spec.twist().ring();
    let n = spec.twist().n();
    let by_dimension = is_dp_independent(&spec)?;
    let mut witnesses = Vec::with_capacity(spec.k());
    for j in 0..spec.k() {
        let w = dp_witness(&spec, j)?;
        if let Some(w) = &w {
            if !witness_holds(&spec, j, w)? {
                return Err(Error::Verification(format!("witness for point {} fails its constraints", j + 1)).into());
            }
        }
        witnesses.push(w);
    }
    let by_witness = witnesses.iter().all(Option::is_some);
    if by_dimension != by_witness {
        return Err(Error::Verification("dimension and witness criteria disagree".into()).into());
    }
    let plain = ConstraintSpec::plain(spec.twist(), spec.points().to_vec(), spec.side())?;
    let p_independent = is_dp_independent(&plain)?;
    let kind = type_text(spec.chains(), n);
    let verdict = if by_dimension {
        format!("DP-independent of type {kind}")
    } else {
        format!("NOT DP-independent of type {kind}")
    };
    let mut lines = vec![
        verdict.clone(),
        format!("P-independent: {}", if p_independent { "yes" } else { "no" }),
        format!("constraints: N = {}", spec.total()),
    ];
    for (j, w) in witnesses.iter().enumerate() {
        let a = point_text(r, &spec.points()[j]);
        lines.push(match w {
            Some(w) => format!("point {} at {a}: witness {}", j + 1, pretty(w)),
            None => format!("point {} at {a}: no witness", j + 1),
        });
    }
    let json = json!({
        "verdict": verdict,
        "dp_independent": by_dimension,
        "p_independent": p_independent,
        "type": kind,
        "constraints": spec.total(),
        "witnesses": witnesses.iter().map(|w| w.as_ref().map(|w| w.to_string())).collect::<Vec<_>>(),
    });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}

fn evaluate<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let f = res.polynomial("eval")?;
    let points = res.points("eval")?;
    let r = res.twist.ring();
    let name = match res.side {
        Side::Right => "F",
        Side::Left => "F_L",
    };
    let mut lines = poly_lines("F", f);
    let mut values = Vec::with_capacity(points.len());
    for a in points {
        let v = eval(f, a, res.side)?;
        let div = divide(f, a, res.side)?;
        if div.remainder != v || div.reassemble(a) != *f {
            return Err(Error::Verification(format!("division at {} disagrees", point_text(r, a))).into());
        }
        lines.push(format!("{name}{} = {}", arg_text(r, a), r.format_elem(&v)));
        values.push(json!({ "point": elems_json(r, a), "value": r.format_elem(&v) }));
    }
    let json = json!({ "polynomial": poly_json(f), "values": values });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}

fn derive<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let f = res.polynomial("derive")?;
    if res.chains.is_none() {
        return Err(missing("chains", "derive").into());
    }
    let spec = res.spec("derive")?;
    let r = spec.twist().ring();
    let mut lines = poly_lines("F", f);
    let mut out = Vec::new();
    for (j, a) in spec.points().iter().enumerate() {
        let table = taylor(f, a, spec.side())?;
        if taylor_reconstruct(&table) != *f {
            return Err(Error::Verification(format!("Taylor expansion at point {} fails", j + 1)).into());
        }
        lines.push(format!("point {} at {}", j + 1, point_text(r, a)));
        for w in spec.chain_words(j) {
            let (d, v) = partial_chain(f, a, &w, spec.side())?;
            let expected = table.entries.get(&w).cloned().unwrap_or_else(|| r.zero());
            if v != expected {
                return Err(Error::Verification(format!("derivative {w} at point {} disagrees", j + 1)).into());
            }
            lines.push(format!("  D[{w}] F = {}; value {}", pretty(&d), r.format_elem(&v)));
            out.push(json!({
                "point": j + 1,
                "word": w.to_string(),
                "derivative": d.to_string(),
                "value": r.format_elem(&v),
            }));
        }
    }
    let json = json!({ "polynomial": poly_json(f), "derivatives": out });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}

fn vandermonde<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    let spec = res.spec("vandermonde")?;
    let tw: &Twist<R> = spec.twist();
    let r = tw.ring();
    let d = res.order.unwrap_or(spec.total());
    let v = build_vandermonde(&spec, d)?;
    for (t, w) in v.monomials.iter().enumerate() {
        let m = SkewPoly::monomial(tw, w.clone(), r.one());
        let fresh: Vec<R::Elem> = checks(&spec, &m, None)?.into_iter().map(|c| c.value).collect();
        let stored = match spec.side() {
            Side::Right => v.matrix.row(t).to_vec(),
            Side::Left => v.matrix.col(t),
        };
        if fresh != stored {
            return Err(Error::Verification(format!("entries for monomial {w} disagree")).into());
        }
    }
    let rank = dlinalg::rank(r, &v.matrix, spec.side());
    let rows: Vec<Vec<String>> = v
        .matrix
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|c| r.format_elem(c)).collect())
        .collect();
    let monomials: Vec<String> = v.monomials.iter().map(Word::to_string).collect();
    let mut lines = vec![
        format!(
            "order {d}: {} x {}, square: {}, rank {rank}",
            v.matrix.rows(),
            v.matrix.cols(),
            if v.is_square() { "yes" } else { "no" }
        ),
        format!("monomials: {}", monomials.join(", ")),
    ];
    lines.extend(rows.iter().map(|row| format!("[{}]", row.join(", "))));
    let json = json!({
        "order": d,
        "rows": v.matrix.rows(),
        "cols": v.matrix.cols(),
        "square": v.is_square(),
        "rank": rank,
        "monomials": monomials,
        "matrix": rows,
    });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}

fn minimal_poly<R: DivisionRing>(res: &Resolved<R>) -> Result<Report, CliError> {
    if res.twist.n() != 1 {
        return Err(FieldError {
            path: "n".into(),
            line: None,
            message: "minimal-poly needs n = 1".into(),
        }
        .into());
    }
    let spec = res.spec("minimal-poly")?;
    let r = spec.twist().ring();
    let f = univariate_minimal_polynomial(&spec)?;
    let deg = f
        .degree()
        .finite()
        .ok_or_else(|| Error::Verification("minimal polynomial is zero".into()))?;
    let monic = r.is_one(&f.coeff(&Word(vec![0; deg])));
    let in_ideal = checks(&spec, &f, None)?.iter().all(Check::passed);
    let minimal = deg == 0 || dim_v(&spec, deg - 1)? == 0;
    if !(monic && in_ideal && minimal) {
        return Err(Error::Verification("minimal polynomial fails its checks".into()).into());
    }
    let independent = deg == spec.total();
    let mut lines = poly_lines("f", &f);
    lines.push(format!("degree: {deg}, N = {}", spec.total()));
    lines.push(format!("DP-independent: {}", if independent { "yes" } else { "no" }));
    let json = json!({ "polynomial": poly_json(&f), "constraints": spec.total(), "dp_independent": independent });
    Ok(Report {
        lines,
        json,
        passed: true,
    })
}
