//! Canonical text form: terms in descending `≺` order joined by ` + `,
//! each written `COEFF * x1 x2 …`, constants as `COEFF`, zero as `0`.
//!
//! The parser is more lenient: it accepts `-` separators, omitted unit
//! coefficients, parenthesised coefficients, `x` for `x1` when `n = 1`,
//! and powers such as `x2^3`.

use std::fmt;

use super::{add_into, MonomialOrder, SkewPoly, Word};
use crate::ring::{DivisionRing, Twist};
use crate::{Error, Result};

impl<R: DivisionRing> fmt::Display for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let r = self.ring();
        for (k, (w, c)) in self.sorted_terms(MonomialOrder::RightToLeft).into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                f.write_str(&r.format_elem(c))?;
            } else {
                write!(f, "{} * {}", r.format_elem(c), w)?;
            }
        }
        Ok(())
    }
}

/// Splits at `+`/`-` signs that have whitespace on both sides and sit
/// outside parentheses.
fn split_terms(s: &str) -> Vec<(bool, String)> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for k in 0..chars.len() {
        let c = chars[k];
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let spaced = k > 0 && k + 1 < chars.len() && chars[k - 1].is_whitespace() && chars[k + 1].is_whitespace();
        if depth == 0 && (c == '+' || c == '-') && spaced {
            out.push((negative, std::mem::take(&mut cur)));
            negative = c == '-';
        } else {
            cur.push(c);
        }
    }
    out.push((negative, cur));
    out
}

fn find_top_level(s: &str, target: char) -> Option<usize> {
    let mut depth = 0i32;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if depth == 0 && c == target => return Some(k),
            _ => {}
        }
    }
    None
}

/// Removes one pair of parentheses enclosing the whole of `s`.
fn strip_parens(s: &str) -> &str {
    let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
        return s;
    };
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return s;
        }
    }
    inner
}

/// Parses a word such as `x1 x1 x2`, `x1^2 x2`, `x x` or `o`.
pub(crate) fn parse_word(s: &str, n: usize) -> Result<Word> {
    let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if t.is_empty() || t == "o" || t == "1" {
        return Ok(Word::empty());
    }
    let bad = |msg: &str| Error::Parse(format!("bad monomial `{s}`: {msg}"));
    let bytes = t.as_bytes();
    let mut k = 0;
    let mut letters = Vec::new();
    while k < bytes.len() {
        if bytes[k] != b'x' {
            return Err(bad("expected `x`"));
        }
        k += 1;
        let start = k;
        while k < bytes.len() && bytes[k].is_ascii_digit() {
            k += 1;
        }
        let index = if start == k {
            if n != 1 {
                return Err(bad("bare `x` needs a single variable"));
            }
            1
        } else {
            t[start..k].parse::<usize>().map_err(|_| bad("index"))?
        };
        if index == 0 || index > n {
            return Err(bad(&format!("variable index must lie in 1..={n}")));
        }
        let mut power = 1;
        if k < bytes.len() && bytes[k] == b'^' {
            k += 1;
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            power = t[start..k].parse::<usize>().map_err(|_| bad("exponent"))?;
        }
        letters.extend(std::iter::repeat_n(index - 1, power));
    }
    Ok(Word(letters))
}

impl<R: DivisionRing> SkewPoly<R> {
    /// Parses the canonical text form (and the lenient variants described
    /// in the module docs).
    pub fn parse(twist: &Twist<R>, s: &str) -> Result<Self> {
        let r = twist.ring();
        let mut p = SkewPoly::zero(twist);
        if s.trim().is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        for (negative, term) in split_terms(s) {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let split = find_top_level(term, '*').or_else(|| find_top_level(term, 'x'));
            let (coeff, word) = match split {
                Some(k) if term.as_bytes()[k] == b'*' => (&term[..k], &term[k + 1..]),
                Some(k) => (&term[..k], &term[k..]),
                None => (term, ""),
            };
            let coeff = coeff.trim();
            if coeff.is_empty() && term.starts_with('*') {
                return Err(Error::Parse(format!("missing coefficient before `*` in `{term}`")));
            }
            let c = match coeff {
                "" | "+" => r.one(),
                "-" => r.neg(&r.one()),
                _ if coeff.starts_with("-(") => r.neg(&r.parse_elem(strip_parens(&coeff[1..]))?),
                _ => r.parse_elem(strip_parens(coeff))?,
            };
            let c = if negative { r.neg(&c) } else { c };
            add_into(r, &mut p.terms, parse_word(word, twist.n())?, c);
        }
        Ok(p)
    }
}

impl Word {
    /// Parses a monomial over `n` variables: `o` (or `1`) for the empty
    /// word, otherwise letters such as `x1 x2`, `x1^2 x2` or `x x` when
    /// `n = 1`.
    pub fn parse(s: &str, n: usize) -> Result<Word> {
        parse_word(s, n)
    }
}
