//! Explicit 4x4 gamma matrices and the Clifford relations they satisfy.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Default absolute tolerance for entrywise matrix equality.
pub const MATRIX_TOLERANCE: f64 = 1e-12;

/// Minkowski signature `diag(+1, -1, -1, -1)`.
pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix4 {
    pub entries: [[C64; 4]; 4],
}

impl ComplexMatrix4 {
    pub const fn zero() -> Self {
        Self { entries: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [C64; 4]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.entries[i][i] = v;
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.entries[i][j] = C64::new(*v, 0.0);
            }
        }
        m
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|v| *v *= s);
        m
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.entries[i][i]).sum()
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.entries.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_diff(other) <= tol
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|v| *v == ZERO)
    }

    pub fn apply(&self, v: &[C64; 4]) -> [C64; 4] {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.entries[i][j] * v[j]).sum();
        }
        out
    }
}

impl Default for ComplexMatrix4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for ComplexMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix4 [")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|c| format!("{:+.3}{:+.3}i", c.re, c.im)).collect();
            writeln!(f, "  {}", cells.join("  "))?;
        }
        write!(f, "]")
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..4 {
            for j in 0..4 {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl Sub for ComplexMatrix4 {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..4 {
            for j in 0..4 {
                self.entries[i][j] -= rhs.entries[i][j];
            }
        }
        self
    }
}

impl Neg for ComplexMatrix4 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.entries[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..4 {
                    m.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

/// `ab + ba`.
pub fn anticommutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    *a * *b + *b * *a
}

pub fn commutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    *a * *b - *b * *a
}

/// Four gamma matrices `γ^0, γ^x, γ^y, γ^z` together with the signature they obey.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaSet {
    pub gamma: [ComplexMatrix4; 4],
    pub eta: [f64; 4],
}

impl GammaSet {
    pub fn get(&self, mu: usize) -> &ComplexMatrix4 {
        &self.gamma[mu]
    }

    /// The 16 anticommutator residuals `|{γ^μ,γ^ν} - 2η^{μν}·1|_max`, row-major in `(μ, ν)`.
    pub fn clifford_residuals(&self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                let target = if mu == nu {
                    ComplexMatrix4::identity().scale_real(2.0 * self.eta[mu])
                } else {
                    ComplexMatrix4::zero()
                };
                out[mu][nu] = anticommutator(&self.gamma[mu], &self.gamma[nu]).max_diff(&target);
            }
        }
        out
    }

    pub fn satisfies_clifford(&self, tol: f64) -> bool {
        self.clifford_residuals().iter().flatten().all(|r| *r <= tol)
    }
}

/// Dirac representation: `γ^0 = diag(1,1,-1,-1)` and `γ^i` with the Pauli
/// blocks `σ^i` off the diagonal as `[[0, σ^i], [-σ^i, 0]]`.
pub fn standard_gamma_set() -> GammaSet {
    let pauli = pauli_matrices();
    let mut gamma = [ComplexMatrix4::zero(); 4];
    gamma[0] = ComplexMatrix4::diagonal([ONE, ONE, -ONE, -ONE]);
    for (i, s) in pauli.iter().enumerate() {
        let g = &mut gamma[i + 1];
        for r in 0..2 {
            for c in 0..2 {
                g.entries[r][c + 2] = s[r][c];
                g.entries[r + 2][c] = -s[r][c];
            }
        }
    }
    GammaSet { gamma, eta: ETA }
}

/// `σ^x, σ^y, σ^z`.
pub fn pauli_matrices() -> [[[C64; 2]; 2]; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}
