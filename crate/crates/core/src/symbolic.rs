//! Monomial coefficients such as `-q^(n-1)*Psi` or `hbar^(l/2)*Phi^(1/2)`.
//!
//! Exponents are affine forms `c + a·n + b·m + d·l` with rational
//! coefficients, so `q^(n-1)` and its square root `q^((n-1)/2)` stay exact.
//! All arithmetic is rational; floating point only enters in
//! [`SymbolicCoeff::evaluate`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = Rational64;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `constant + n_coeff·n + m_coeff·m + l_coeff·l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub constant: Rational,
    pub n: Rational,
    pub m: Rational,
    pub l: Rational,
}

impl Exponent {
    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self { constant: c, n: Rational::zero(), m: Rational::zero(), l: Rational::zero() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::constant(q(num, den))
    }

    /// `k·n + c`.
    pub fn n_plus(k: i64, c: i64) -> Self {
        Self { n: Rational::from_integer(k), ..Self::int(c) }
    }

    pub fn m_plus(k: i64, c: i64) -> Self {
        Self { m: Rational::from_integer(k), ..Self::int(c) }
    }

    pub fn l_plus(k: i64, c: i64) -> Self {
        Self { l: Rational::from_integer(k), ..Self::int(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.n.is_zero() && self.m.is_zero() && self.l.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.n.is_zero() && self.m.is_zero() && self.l.is_zero()
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self { constant: self.constant * s, n: self.n * s, m: self.m * s, l: self.l * s }
    }

    pub fn evaluate(&self, n: f64, m: f64, l: f64) -> f64 {
        let f = |r: Rational| r.to_f64().expect("rational fits in f64");
        f(self.constant) + f(self.n) * n + f(self.m) * m + f(self.l) * l
    }

    /// Exponent text without the surrounding `^( )`, e.g. `(n-1)/2`.
    fn body(&self) -> String {
        let parts = [(self.n, "n"), (self.m, "m"), (self.l, "l"), (self.constant, "")];
        let den = parts.iter().fold(1i64, |acc, (r, _)| acc.lcm(r.denom()));
        let mut terms: Vec<String> = Vec::new();
        for (r, sym) in parts {
            if r.is_zero() {
                continue;
            }
            let k = (r * Rational::from_integer(den)).to_integer();
            terms.push(match (k, sym) {
                (1, s) if !s.is_empty() => s.to_string(),
                (-1, s) if !s.is_empty() => format!("-{s}"),
                (k, s) => format!("{k}{s}"),
            });
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        // lead with a positive term when there is one: 1-n rather than -n+1
        if terms[0].starts_with('-') {
            if let Some(pos) = terms.iter().position(|t| !t.starts_with('-')) {
                let t = terms.remove(pos);
                terms.insert(0, t);
            }
        }
        let mut num = terms[0].clone();
        for t in &terms[1..] {
            if !t.starts_with('-') {
                num.push('+');
            }
            num.push_str(t);
        }
        match (den, terms.len()) {
            (1, _) => num,
            (d, 1) => format!("{num}/{d}"),
            (d, _) => format!("({num})/{d}"),
        }
    }

    /// `base^exponent` in the ASCII layout used by the tables, or `None`
    /// for a zero exponent.
    pub fn power_of(&self, base: &str) -> Option<String> {
        if self.is_zero() {
            return None;
        }
        if self.is_one() {
            return Some(base.to_string());
        }
        let body = self.body();
        if body.chars().all(|c| c.is_ascii_alphanumeric()) {
            Some(format!("{base}^{body}"))
        } else {
            Some(format!("{base}^({body})"))
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.body())
    }
}

impl Add for Exponent {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { constant: self.constant + o.constant, n: self.n + o.n, m: self.m + o.m, l: self.l + o.l }
    }
}

impl Sub for Exponent {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Exponent {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-Rational::one())
    }
}

/// Numeric values substituted for the symbols.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymbolValues {
    pub q: f64,
    pub n: f64,
    pub m: f64,
    pub l: f64,
    pub psi: f64,
    pub phi: f64,
    pub hbar: f64,
}

impl Default for SymbolValues {
    fn default() -> Self {
        Self { q: 2.0, n: 1.0, m: 1.0, l: 1.0, psi: 1.0, phi: 1.0, hbar: 1.0 }
    }
}

/// `factor · q^a · hbar^b · Psi^c · Phi^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicCoeff {
    pub factor: Rational,
    pub q: Exponent,
    pub psi: Exponent,
    pub phi: Exponent,
    pub hbar: Exponent,
}

impl SymbolicCoeff {
    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(k: i64) -> Self {
        Self {
            factor: Rational::from_integer(k),
            q: Exponent::zero(),
            psi: Exponent::zero(),
            phi: Exponent::zero(),
            hbar: Exponent::zero(),
        }
    }

    /// `q^e`.
    pub fn q_pow(e: Exponent) -> Self {
        Self { q: e, ..Self::one() }
    }

    pub fn psi_pow(e: Exponent) -> Self {
        Self { psi: e, ..Self::one() }
    }

    pub fn phi_pow(e: Exponent) -> Self {
        Self { phi: e, ..Self::one() }
    }

    pub fn hbar_pow(e: Exponent) -> Self {
        Self { hbar: e, ..Self::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.factor.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.factor.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self { factor: self.factor.abs(), ..*self }
    }

    /// Exact integer power; the factor must be non-zero for negative powers.
    pub fn powi(&self, k: i64) -> Self {
        let r = Rational::from_integer(k);
        let factor = if k >= 0 {
            num_traits::pow(self.factor, k as usize)
        } else {
            num_traits::pow(self.factor.recip(), (-k) as usize)
        };
        Self {
            factor,
            q: self.q.scale(r),
            psi: self.psi.scale(r),
            phi: self.phi.scale(r),
            hbar: self.hbar.scale(r),
        }
    }

    /// `√|self|` with halved exponents; `None` when `|factor|` is not the
    /// square of a rational.
    pub fn sqrt_abs(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let f = self.factor.abs();
        let num = exact_isqrt(*f.numer())?;
        let den = exact_isqrt(*f.denom())?;
        let h = q(1, 2);
        Some(Self {
            factor: q(num, den),
            q: self.q.scale(h),
            psi: self.psi.scale(h),
            phi: self.phi.scale(h),
            hbar: self.hbar.scale(h),
        })
    }

    /// `1/√|self|`.
    pub fn inv_sqrt_abs(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        self.sqrt_abs().map(|s| s.powi(-1))
    }

    pub fn evaluate(&self, v: &SymbolValues) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let pow = |base: f64, e: &Exponent| {
            if e.is_zero() {
                1.0
            } else {
                base.powf(e.evaluate(v.n, v.m, v.l))
            }
        };
        self.factor.to_f64().expect("rational fits in f64")
            * pow(v.q, &self.q)
            * pow(v.hbar, &self.hbar)
            * pow(v.psi, &self.psi)
            * pow(v.phi, &self.phi)
    }

    /// Symbol part without the sign or rational factor, e.g. `q^(n-1)*Psi`;
    /// `None` when the coefficient is a pure number.
    pub fn symbols(&self) -> Option<String> {
        let parts: Vec<String> = [
            self.q.power_of("q"),
            self.hbar.power_of("hbar"),
            self.psi.power_of("Psi"),
            self.phi.power_of("Phi"),
        ]
        .into_iter()
        .flatten()
        .collect();
        (!parts.is_empty()).then(|| parts.join("*"))
    }

    /// Unsigned rendering, `None` for exactly ±1.
    pub fn magnitude_text(&self) -> Option<String> {
        let mag = self.factor.abs();
        let number = (!mag.is_one()).then(|| format_rational(mag));
        match (number, self.symbols()) {
            (None, None) => None,
            (Some(n), None) => Some(n),
            (None, Some(s)) => Some(s),
            (Some(n), Some(s)) => Some(format!("{n}*{s}")),
        }
    }
}

fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn exact_isqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt().round() as i64;
    (r.checked_mul(r) == Some(v)).then_some(r)
}

impl fmt::Display for SymbolicCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.is_negative() {
            f.write_str("-")?;
        }
        match self.magnitude_text() {
            Some(t) => f.write_str(&t),
            None => f.write_str("1"),
        }
    }
}

impl Mul for SymbolicCoeff {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self {
            factor: self.factor * o.factor,
            q: self.q + o.q,
            psi: self.psi + o.psi,
            phi: self.phi + o.phi,
            hbar: self.hbar + o.hbar,
        }
    }
}

impl Neg for SymbolicCoeff {
    type Output = Self;
    fn neg(self) -> Self {
        Self { factor: -self.factor, ..self }
    }
}
