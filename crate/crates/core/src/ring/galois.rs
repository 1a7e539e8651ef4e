use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::DivisionRing;
use crate::{Error, Result};

/// An element of `GF(p^m)`, stored as the base-`p` encoding
/// `Σ c_k p^k` of its least-degree representative `Σ c_k x^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub u32);

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for `0 ≤ k < q - 1`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field `GF(p^m) = F_p[x]/(μ)` with log/antilog tables for a
/// fixed primitive element `g`.
#[derive(Clone)]
pub struct GaloisField {
    t: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GaloisField({}^{}, modulus {:?})",
            self.t.p, self.t.m, self.t.modulus
        )
    }
}

const MAX_ORDER: u64 = 1 << 22;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            while v.is_multiple_of(d) {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Arithmetic on digit vectors modulo a monic polynomial, used only while
/// building the tables.
struct PolyMod<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl PolyMod<'_> {
    fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    fn decode(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0; self.m()];
        for c in d.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.m();
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for k in 0..m {
                let sub = c * self.modulus[k] as u64 % p;
                let slot = &mut prod[deg - m + k];
                *slot = (*slot + p - sub) % p;
            }
            prod[deg] = 0;
        }
        prod[..m].iter().map(|&c| c as u32).collect()
    }

    fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = self.decode(1);
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    fn is_primitive(&self, a: &[u32], q: u64, factors: &[u64]) -> bool {
        let one = self.decode(1);
        self.pow(a, q - 1) == one && factors.iter().all(|r| self.pow(a, (q - 1) / r) != one)
    }
}

impl GaloisField {
    /// `GF(p^m)` with the first monic modulus (in base-`p` encoding order)
    /// for which `x` is primitive; then `g = x`.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        let q = Self::check_params(p, m)?;
        if m == 1 {
            return Self::with_modulus(p, 1, vec![0, 1]);
        }
        let factors = prime_factors(q - 1);
        let mut x = vec![0u32; m as usize];
        x[1] = 1;
        for tail in 0..q as u32 {
            let mut modulus = vec![0u32; m as usize + 1];
            let mut v = tail;
            for c in modulus.iter_mut().take(m as usize) {
                *c = v % p;
                v /= p;
            }
            modulus[m as usize] = 1;
            if modulus[0] == 0 {
                continue;
            }
            let pm = PolyMod { p, modulus: &modulus };
            if pm.is_primitive(&x, q, &factors) {
                return Self::build(p, m, modulus, &x);
            }
        }
        Err(Error::InvalidConfig(format!("no primitive modulus for GF({p}^{m})")))
    }

    /// `GF(p^m)` for an explicit monic modulus given by its coefficients
    /// from the constant term upwards. Fails unless the quotient is a field.
    pub fn with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = Self::check_params(p, m)?;
        if modulus.len() != m as usize + 1 || modulus[m as usize] != 1 {
            return Err(Error::InvalidConfig(format!(
                "modulus must be monic of degree {m} (coefficients from constant term up)"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidConfig(format!("modulus coefficients must be < {p}")));
        }
        let factors = prime_factors(q - 1);
        let pm = PolyMod { p, modulus: &modulus };
        let generator = (1..q as u32)
            .map(|v| pm.decode(v))
            .find(|g| pm.is_primitive(g, q, &factors))
            .ok_or_else(|| Error::InvalidConfig(format!("modulus {modulus:?} is not irreducible mod {p}")))?;
        Self::build(p, m, modulus, &generator)
    }

    fn check_params(p: u32, m: u32) -> Result<u64> {
        if !is_prime(p) {
            return Err(Error::InvalidConfig(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidConfig("extension degree must be ≥ 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        q.ok_or_else(|| Error::InvalidConfig(format!("GF({p}^{m}) is too large")))
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>, generator: &[u32]) -> Result<Self> {
        let q = p.pow(m);
        let pm = PolyMod { p, modulus: &modulus };
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = pm.decode(1);
        for k in 0..q - 1 {
            let e = pm.encode(&cur);
            exp.push(e);
            log[e as usize] = k;
            cur = pm.mul(&cur, generator);
        }
        Ok(GaloisField {
            t: Arc::new(Tables {
                p,
                m,
                q,
                modulus,
                exp,
                log,
            }),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    pub fn order(&self) -> u32 {
        self.t.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The primitive element `g` used for printing.
    pub fn generator(&self) -> GfElem {
        GfElem(self.t.exp[1 % self.t.exp.len()])
    }

    /// `g^k`.
    pub fn gen_pow(&self, k: u64) -> GfElem {
        GfElem(self.t.exp[(k % (self.t.q as u64 - 1)) as usize])
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: GfElem) -> Option<u32> {
        (a.0 != 0).then(|| self.t.log[a.0 as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = GfElem> {
        (0..self.t.q).map(GfElem)
    }

    fn digits_op(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let p = self.t.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.t.m {
            out += f(a % p, b % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

impl DivisionRing for GaloisField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(0)
    }

    fn one(&self) -> GfElem {
        GfElem(1)
    }

    fn from_i64(&self, v: i64) -> GfElem {
        GfElem(v.rem_euclid(self.t.p as i64) as u32)
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let p = self.t.p;
        GfElem(self.digits_op(a.0, b.0, |x, y| (x + y) % p))
    }

    fn neg(&self, a: &GfElem) -> GfElem {
        let p = self.t.p;
        GfElem(self.digits_op(a.0, 0, |x, _| (p - x) % p))
    }

    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let p = self.t.p;
        GfElem(self.digits_op(a.0, b.0, |x, y| (x + p - y) % p))
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if a.0 == 0 || b.0 == 0 {
            return GfElem(0);
        }
        let t = &self.t;
        let k = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % (t.q as u64 - 1);
        GfElem(t.exp[k as usize])
    }

    fn inv(&self, a: &GfElem) -> Option<GfElem> {
        let k = self.log(*a)? as u64;
        Some(GfElem(
            self.t.exp[((self.t.q as u64 - 1 - k) % (self.t.q as u64 - 1)) as usize],
        ))
    }

    fn is_zero(&self, a: &GfElem) -> bool {
        a.0 == 0
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn name(&self) -> String {
        format!("GF({}^{})", self.t.p, self.t.m)
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> GfElem {
        GfElem(rng.random_range(0..self.t.q))
    }

    fn format_elem(&self, a: &GfElem) -> String {
        match self.log(*a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "g".into(),
            Some(k) => format!("g^{k}"),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<GfElem> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad GF element `{s}`"));
        let (negate, body) = match t.strip_prefix('-') {
            Some(rest) if rest.starts_with('g') => (true, rest),
            _ => (false, t.as_str()),
        };
        let value = if body == "g" {
            self.gen_pow(1)
        } else if let Some(e) = body.strip_prefix("g^") {
            self.gen_pow(e.parse::<u64>().map_err(|_| bad())?)
        } else {
            self.from_i64(body.parse::<i64>().map_err(|_| bad())?)
        };
        Ok(if negate { self.neg(&value) } else { value })
    }

    fn prime_basis(&self) -> Vec<GfElem> {
        (0..self.t.m).map(|k| GfElem(self.t.p.pow(k))).collect()
    }

    fn prime_coordinates(&self, a: &GfElem) -> Vec<GfElem> {
        let mut v = a.0;
        (0..self.t.m)
            .map(|_| {
                let c = v % self.t.p;
                v /= self.t.p;
                GfElem(c)
            })
            .collect()
    }

    fn frobenius(&self, a: &GfElem, k: u32) -> Option<GfElem> {
        let Some(l) = self.log(*a) else {
            return Some(GfElem(0));
        };
        let order = self.t.q as u64 - 1;
        let mut factor = 1u64;
        for _ in 0..k % self.t.m {
            factor = factor * self.t.p as u64 % order.max(1);
        }
        Some(self.gen_pow(l as u64 * factor))
    }

    fn extension_degree(&self) -> Option<u32> {
        Some(self.t.m)
    }
}
