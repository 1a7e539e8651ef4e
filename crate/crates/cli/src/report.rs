use serde_json::{json, Value};
use skew_core::ring::DivisionRing;
use skew_core::skewpoly::{MonomialOrder, SkewPoly, Word};
use skew_core::Error;

use crate::problem::FieldError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_NOT_LEFT_CAPABLE: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Field(FieldError),
    Core(Error),
    Io(String),
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Field(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Field(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::Core(Error::Infeasible) => EXIT_INFEASIBLE,
            CliError::Core(Error::NotLeftCapable) => EXIT_NOT_LEFT_CAPABLE,
            CliError::Core(Error::Verification(_)) => EXIT_VERIFY,
            CliError::Core(_) => EXIT_INPUT,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Field(_) => "validation",
            CliError::Io(_) => "io",
            CliError::Core(Error::Infeasible) => "infeasible",
            CliError::Core(Error::NotLeftCapable) => "not_left_capable",
            CliError::Core(Error::Verification(_)) => "verification",
            CliError::Core(_) => "invalid_input",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.kind(), "message": self.to_string(), "exit": self.exit_code() });
        if let CliError::Field(f) = self {
            v["path"] = json!(f.path);
            v["line"] = json!(f.line);
        }
        v
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Field(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => f.write_str(e),
        }
    }
}

/// A finished run: text lines, their JSON mirror, and whether every check
/// passed.
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub passed: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY
        }
    }
}

pub fn point_text<R: DivisionRing>(ring: &R, a: &[R::Elem]) -> String {
    let parts: Vec<String> = a.iter().map(|c| ring.format_elem(c)).collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        format!("({})", parts.join(", "))
    }
}

/// A point as a function argument: `(i)` or `(i, 1)`.
pub fn arg_text<R: DivisionRing>(ring: &R, a: &[R::Elem]) -> String {
    if a.len() == 1 {
        format!("({})", point_text(ring, a))
    } else {
        point_text(ring, a)
    }
}

pub fn elems_json<R: DivisionRing>(ring: &R, xs: &[R::Elem]) -> Value {
    json!(xs.iter().map(|c| ring.format_elem(c)).collect::<Vec<_>>())
}

/// A chain type: degrees `(0,1)` for one variable, words otherwise.
pub fn type_text(chains: &[Word], n: usize) -> String {
    let parts: Vec<String> = if n == 1 {
        chains.iter().map(|m| m.deg().to_string()).collect()
    } else {
        chains.iter().map(|m| m.to_string()).collect()
    };
    if n == 1 {
        format!("({})", parts.join(","))
    } else {
        format!("({})", parts.join(", "))
    }
}

/// Powers collapsed, `x` for `x1` when `n = 1`: `x1^2 x2`, `x^4`.
fn pretty_word(w: &Word, n: usize) -> String {
    let mut out: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut k = 0;
    while k < letters.len() {
        let l = letters[k];
        let run = letters[k..].iter().take_while(|&&m| m == l).count();
        let name = if n == 1 { "x".to_string() } else { format!("x{}", l + 1) };
        out.push(if run == 1 { name } else { format!("{name}^{run}") });
        k += run;
    }
    out.join(" ")
}

/// Whether a coefficient needs parentheses in front of a monomial: it has
/// an operator after its first character, outside any parentheses.
fn is_compound(s: &str) -> bool {
    let mut depth = 0i32;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' | '/' | '^' if depth == 0 && k > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Conventional notation, e.g. `(3+i)x^4 - (4+2i)x^3 + 5-5i`. It parses
/// back to the same polynomial.
pub fn pretty<R: DivisionRing>(f: &SkewPoly<R>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let r = f.ring();
    let n = f.twist().n();
    let mut out = String::new();
    for (k, (w, c)) in f.sorted_terms(MonomialOrder::RightToLeft).into_iter().enumerate() {
        let text = r.format_elem(c);
        let negated = r.format_elem(&r.neg(c));
        let negative = text.starts_with('-') && !negated.starts_with('-');
        let body = if negative { negated } else { text };
        let compound = is_compound(&body);
        let coeff = if !w.is_empty() && body == "1" {
            String::new()
        } else if compound && (negative || !w.is_empty()) {
            format!("({body})")
        } else {
            body
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&coeff);
        if !w.is_empty() {
            if coeff.ends_with(|c: char| c.is_alphabetic()) {
                out.push(' ');
            }
            out.push_str(&pretty_word(w, n));
        }
    }
    out
}
