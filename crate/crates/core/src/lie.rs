//! Gauge-group values: U(1) phases and SU(N) matrices, plus the site-value
//! arithmetic shared by every lattice field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clifford::{ComplexMatrix4, C64, I, ONE, ZERO};

/// Arithmetic needed for values stored on lattice sites.
pub trait Linear: Clone + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, s: C64) -> Self;
    fn max_abs(&self) -> f64;
    /// Flat list of complex components.
    fn components(&self) -> Vec<C64>;
    /// A value shaped like `self` holding `c`.
    fn with_components(&self, c: &[C64]) -> Self;

    fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }
}

/// Values of a gauge field or gauge transformation: an associative algebra
/// that also acts on colour vectors.
pub trait Algebra: Linear {
    /// Number of colours the value acts on (1 for U(1)).
    fn colors(&self) -> usize;
    fn identity_like(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn adjoint(&self) -> Self;
    fn trace(&self) -> C64;

    /// Applies the value to every colour block of `v` (length a multiple of
    /// `colors()`, colour index fastest).
    fn act(&self, v: &[C64]) -> Vec<C64>;

    fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

impl Linear for C64 {
    fn zero_like(&self) -> Self {
        ZERO
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, s: C64) -> Self {
        self * s
    }
    fn max_abs(&self) -> f64 {
        self.norm()
    }
    fn components(&self) -> Vec<C64> {
        vec![*self]
    }
    fn with_components(&self, c: &[C64]) -> Self {
        c[0]
    }
}

impl Algebra for C64 {
    fn colors(&self) -> usize {
        1
    }
    fn identity_like(&self) -> Self {
        ONE
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn adjoint(&self) -> Self {
        self.conj()
    }
    fn trace(&self) -> C64 {
        *self
    }
    fn act(&self, v: &[C64]) -> Vec<C64> {
        v.iter().map(|x| self * x).collect()
    }
    fn commutator(&self, _other: &Self) -> Self {
        ZERO
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct CMat {
    n: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(n: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] = v;
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.data[j * n + i].conj();
            }
        }
        out
    }

    pub fn tr(&self) -> C64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }

    /// `‖U†U − 1‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        self.dagger().matmul(self).sub(&Self::identity(self.n)).max_abs()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.dagger()).max_abs()
    }

    /// Matrix exponential by scaling and squaring with a Taylor series.
    pub fn expm(&self) -> Self {
        let norm: f64 = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max);
        let mut squarings = 0u32;
        let mut scaled = norm;
        while scaled > 0.25 {
            scaled /= 2.0;
            squarings += 1;
        }
        let a = self.scale_real(0.5f64.powi(squarings as i32));
        let mut result = Self::identity(self.n);
        let mut term = Self::identity(self.n);
        for k in 1..=20 {
            term = term.matmul(&a).scale_real(1.0 / k as f64);
            result = result.add(&term);
            if term.max_abs() < 1e-18 {
                break;
            }
        }
        for _ in 0..squarings {
            result = result.matmul(&result);
        }
        result
    }

    /// Kronecker product `spin ⊗ self`, with the colour index fastest.
    pub fn kron_spin(spin: &ComplexMatrix4, color: &CMat) -> CMat {
        let nc = color.n;
        let n = 4 * nc;
        let mut out = CMat::zeros(n);
        for s in 0..4 {
            for t in 0..4 {
                let g = spin.entries[s][t];
                if g == ZERO {
                    continue;
                }
                for a in 0..nc {
                    for b in 0..nc {
                        out.data[(s * nc + a) * n + t * nc + b] = g * color.get(a, b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMat{}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> =
                (0..self.n).map(|j| format!("{:+.4}{:+.4}i", self.get(i, j).re, self.get(i, j).im)).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Linear for CMat {
    fn zero_like(&self) -> Self {
        Self::zeros(self.n)
    }
    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }
    fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }
    fn scale(&self, s: C64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|a| a * s).collect() }
    }
    fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
    fn components(&self) -> Vec<C64> {
        self.data.clone()
    }
    fn with_components(&self, c: &[C64]) -> Self {
        Self::from_vec(self.n, c.to_vec())
    }
}

impl Algebra for CMat {
    fn colors(&self) -> usize {
        self.n
    }
    fn identity_like(&self) -> Self {
        Self::identity(self.n)
    }
    fn mul(&self, other: &Self) -> Self {
        self.matmul(other)
    }
    fn adjoint(&self) -> Self {
        self.dagger()
    }
    fn trace(&self) -> C64 {
        self.tr()
    }
    fn act(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len() % self.n, 0, "vector length must be a multiple of the colour count");
        v.chunks(self.n).flat_map(|block| self.matvec(block)).collect()
    }
}

/// Colour vectors and colour spinors (spin index slow, colour index fast).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CVec(pub Vec<C64>);

impl CVec {
    pub fn zeros(len: usize) -> Self {
        CVec(vec![ZERO; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inner product `⟨self, other⟩` (conjugate-linear in `self`).
    pub fn dot(&self, other: &Self) -> C64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    /// Applies a 4x4 spin matrix to a colour spinor with `nc` colours.
    pub fn apply_spin(&self, m: &ComplexMatrix4, nc: usize) -> CVec {
        assert_eq!(self.0.len(), 4 * nc);
        let mut out = vec![ZERO; 4 * nc];
        for s in 0..4 {
            for t in 0..4 {
                let g = m.entries[s][t];
                if g == ZERO {
                    continue;
                }
                for c in 0..nc {
                    out[s * nc + c] += g * self.0[t * nc + c];
                }
            }
        }
        CVec(out)
    }
}

impl Linear for CVec {
    fn zero_like(&self) -> Self {
        CVec::zeros(self.0.len())
    }
    fn add(&self, other: &Self) -> Self {
        CVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
    fn sub(&self, other: &Self) -> Self {
        CVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
    fn scale(&self, s: C64) -> Self {
        CVec(self.0.iter().map(|a| a * s).collect())
    }
    fn max_abs(&self) -> f64 {
        self.0.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
    fn components(&self) -> Vec<C64> {
        self.0.clone()
    }
    fn with_components(&self, c: &[C64]) -> Self {
        CVec(c.to_vec())
    }
}

/// The gauge group of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "group", content = "n", rename_all = "lowercase")]
pub enum GaugeGroup {
    U1,
    SUN(usize),
}

impl GaugeGroup {
    pub fn colors(&self) -> usize {
        match self {
            GaugeGroup::U1 => 1,
            GaugeGroup::SUN(n) => *n,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GaugeGroup::U1)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "u1" || lower == "u(1)" {
            return Some(GaugeGroup::U1);
        }
        let digits = lower.strip_prefix("su")?.trim_start_matches('(').trim_end_matches(')');
        match digits.parse::<usize>() {
            Ok(n) if n >= 2 => Some(GaugeGroup::SUN(n)),
            _ => None,
        }
    }
}

impl fmt::Display for GaugeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaugeGroup::U1 => write!(f, "u1"),
            GaugeGroup::SUN(n) => write!(f, "su{n}"),
        }
    }
}

/// A Lie-algebra value at one site.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum LieValue {
    AbelianScalar(C64),
    MatrixValued(CMat),
}

impl LieValue {
    pub fn max_abs(&self) -> f64 {
        match self {
            LieValue::AbelianScalar(z) => z.norm(),
            LieValue::MatrixValued(m) => m.max_abs(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (LieValue::AbelianScalar(_), LieValue::AbelianScalar(_)) => Some(LieValue::AbelianScalar(ZERO)),
            (LieValue::MatrixValued(a), LieValue::MatrixValued(b)) => {
                Some(LieValue::MatrixValued(Algebra::commutator(a, b)))
            }
            _ => None,
        }
    }
}

/// Conversion from the concrete site types to [`LieValue`].
pub trait IntoLieValue {
    fn to_lie_value(&self) -> LieValue;
}

impl IntoLieValue for C64 {
    fn to_lie_value(&self) -> LieValue {
        LieValue::AbelianScalar(*self)
    }
}

impl IntoLieValue for CMat {
    fn to_lie_value(&self) -> LieValue {
        LieValue::MatrixValued(self.clone())
    }
}

/// Hermitian generators `T^a = λ^a / 2` of SU(N) (generalised Gell-Mann
/// matrices), normalised so that `tr(T^a T^b) = δ^{ab} / 2`.
pub fn su_generators(n: usize) -> Vec<CMat> {
    assert!(n >= 2, "SU(N) needs N >= 2");
    let mut gens = Vec::with_capacity(n * n - 1);
    let half = C64::new(0.5, 0.0);
    for j in 0..n {
        for k in (j + 1)..n {
            let mut s = CMat::zeros(n);
            s.set(j, k, half);
            s.set(k, j, half);
            gens.push(s);
            let mut a = CMat::zeros(n);
            a.set(j, k, -I * 0.5);
            a.set(k, j, I * 0.5);
            gens.push(a);
        }
    }
    for l in 1..n {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt() * 0.5;
        let mut d = CMat::zeros(n);
        for i in 0..l {
            d.set(i, i, C64::new(norm, 0.0));
        }
        d.set(l, l, C64::new(-(l as f64) * norm, 0.0));
        gens.push(d);
    }
    gens
}

/// `Σ_a c_a T^a`.
pub fn lie_combination(n: usize, coeffs: &[f64]) -> CMat {
    let gens = su_generators(n);
    assert_eq!(coeffs.len(), gens.len());
    gens.iter().zip(coeffs).fold(CMat::zeros(n), |acc, (t, c)| acc.add(&t.scale_real(*c)))
}
