//! Free and gauged q-Dirac operators as first-order matrix-coefficient
//! differential operators, and their formal squares.

use serde::Serialize;

use crate::clifford::{ComplexMatrix4, GammaSet, C64, I};
use crate::error::{Error, Result};
use crate::gauge::GaugeConfig;
use crate::lattice::{central_diff, Field};
use crate::lie::{CMat, CVec, Linear};
use crate::metric::DiagonalMetric;

/// Residual tolerance of the squaring identity.
pub const BOX_TOLERANCE: f64 = 1e-10;

/// Sign of `γ^μ` in the operator: `+` for time, `−` for space.
pub const SIGNS: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Zero-order term: a constant spin matrix (acting trivially on colour), or
/// one `4N x 4N` matrix per site, spin index slow and colour index fast.
#[derive(Debug, Clone, PartialEq)]
pub enum ZeroOrder {
    Constant(ComplexMatrix4),
    Sites { colors: usize, values: Vec<CMat> },
}

/// `Σ_μ C_μ ∂_μ + Z`.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrderOperator {
    pub derivative_coeffs: [ComplexMatrix4; 4],
    pub zero_order: ZeroOrder,
    pub active: Vec<usize>,
}

impl FirstOrderOperator {
    /// `Z(x)` as a `4N x 4N` matrix.
    pub fn zero_order_at(&self, site: usize, colors: usize) -> CMat {
        match &self.zero_order {
            ZeroOrder::Constant(m) => CMat::kron_spin(m, &CMat::identity(colors)),
            ZeroOrder::Sites { values, .. } => values[site].clone(),
        }
    }

    /// Applies the operator to a colour-spinor field; derivatives come from
    /// [`central_diff`], so exact-gradient fields are differentiated exactly.
    pub fn apply(&self, psi: &Field<CVec>) -> Result<Field<CVec>> {
        let width = psi.values().first().map_or(4, CVec::len);
        if !width.is_multiple_of(4) {
            return Err(Error::BadParameter(format!("spinor width {width} is not a multiple of 4")));
        }
        let nc = width / 4;
        if let ZeroOrder::Sites { colors, values } = &self.zero_order {
            if *colors != nc || values.len() != psi.grid().site_count() {
                return Err(Error::SectorMismatch("spinor does not match the operator's gauge field".into()));
            }
        }
        for &mu in psi.grid().active() {
            if !self.active.contains(&mu) {
                return Err(Error::SectorMismatch(format!("spinor extends along inactive direction {mu}")));
            }
        }
        let derivs = self
            .active
            .iter()
            .map(|&mu| Ok((mu, central_diff(psi, mu)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Field::from_fn(psi.grid().clone(), |s| {
            let mut out = match &self.zero_order {
                ZeroOrder::Constant(m) => psi.at(s).apply_spin(m, nc),
                ZeroOrder::Sites { values, .. } => CVec(values[s].matvec(&psi.at(s).0)),
            };
            for (mu, d) in &derivs {
                out = out.add(&d.at(s).apply_spin(&self.derivative_coeffs[*mu], nc));
            }
            out
        }))
    }
}

/// Formal square of a constant-coefficient operator:
/// `Σ_{μ≤ν} S_μν ∂_μ∂_ν + Σ_μ P_μ ∂_μ + Z²`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondOrderDiagnostic {
    /// `second_coeffs[μ][ν]` for `μ ≤ ν`; entries below the diagonal are zero.
    pub second_coeffs: [[ComplexMatrix4; 4]; 4],
    pub first_coeffs: [ComplexMatrix4; 4],
    pub zero_coeff: ComplexMatrix4,
}

impl SecondOrderDiagnostic {
    /// `S_μν` for either ordering.
    pub fn second(&self, mu: usize, nu: usize) -> ComplexMatrix4 {
        self.second_coeffs[mu.min(nu)][mu.max(nu)]
    }

    /// Largest cross term `μ ≠ ν`.
    pub fn max_cross_term(&self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in mu + 1..4 {
                worst = worst.max(self.second_coeffs[mu][nu].max_norm());
            }
        }
        worst
    }
}

/// `D_q = γ^0 q_0 ∂_t − Σ_i γ^i q_i ∂_i` over the active directions.
pub fn build_q_dirac(metric: &DiagonalMetric, gammas: &GammaSet) -> Result<FirstOrderOperator> {
    metric.constant_values()?;
    let sector = metric.effective_sector()?;
    let mut coeffs = [ComplexMatrix4::zero(); 4];
    for &mu in &sector.active_indices {
        coeffs[mu] = gammas.gamma[mu].scale_real(SIGNS[mu] * metric.q_factor(mu, None)?);
    }
    Ok(FirstOrderOperator {
        derivative_coeffs: coeffs,
        zero_order: ZeroOrder::Constant(ComplexMatrix4::zero()),
        active: sector.active_indices,
    })
}

pub fn square_operator(op: &FirstOrderOperator) -> Result<SecondOrderDiagnostic> {
    let ZeroOrder::Constant(z) = op.zero_order else {
        return Err(Error::BadParameter("the formal square needs a constant zero-order term".into()));
    };
    let c = &op.derivative_coeffs;
    let mut second = [[ComplexMatrix4::zero(); 4]; 4];
    for mu in 0..4 {
        second[mu][mu] = c[mu] * c[mu];
        for nu in mu + 1..4 {
            second[mu][nu] = c[mu] * c[nu] + c[nu] * c[mu];
        }
    }
    Ok(SecondOrderDiagnostic {
        second_coeffs: second,
        first_coeffs: std::array::from_fn(|mu| c[mu] * z + z * c[mu]),
        zero_coeff: z * z,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxReport {
    pub max_residual: f64,
    pub pass: bool,
}

/// Compares `D_q²` with `|g^00| ∂_t² − Σ_i |g^ii| ∂_i²` times the identity.
pub fn verify_box_identity(metric: &DiagonalMetric, gammas: &GammaSet) -> Result<BoxReport> {
    let g = metric.constant_values()?;
    let sq = square_operator(&build_q_dirac(metric, gammas)?)?;
    let mut worst = sq.max_cross_term();
    for mu in 0..4 {
        let target = ComplexMatrix4::identity().scale_real(SIGNS[mu] * g[mu].abs());
        worst = worst.max(sq.second(mu, mu).max_diff(&target));
        worst = worst.max(sq.first_coeffs[mu].max_norm());
    }
    worst = worst.max(sq.zero_coeff.max_norm());
    Ok(BoxReport { max_residual: worst, pass: worst <= BOX_TOLERANCE })
}

/// `i Σ_μ c_μ ∂_μ − e Σ_μ ε_μ γ^μ A_μ − m` with `c_μ = ε_μ γ^μ q_μ`,
/// `ε = (+,−,−,−)`. The metric factors of `c_μ` and `h_μ` cancel in the
/// interaction, so the zero-order term never sees the metric.
pub fn build_gauge_dirac(
    metric: &DiagonalMetric,
    gammas: &GammaSet,
    e: f64,
    a: &GaugeConfig,
    m: f64,
) -> Result<FirstOrderOperator> {
    let free = build_q_dirac(metric, gammas)?;
    for mu in a.directions() {
        if !metric.is_active(mu) {
            return Err(Error::InactiveGaugeComponent { mu });
        }
    }
    let derivative_coeffs = free.derivative_coeffs.map(|c| c.scale(I));
    let mass = ComplexMatrix4::identity().scale_real(-m);
    let dirs = a.directions();
    let zero_order = if dirs.is_empty() {
        ZeroOrder::Constant(mass)
    } else {
        let nc = a.group().colors();
        let mass = CMat::kron_spin(&mass, &CMat::identity(nc));
        let spins: Vec<(usize, ComplexMatrix4)> =
            dirs.iter().map(|&mu| (mu, gammas.gamma[mu].scale_real(-e * SIGNS[mu]))).collect();
        let values = (0..a.grid().site_count())
            .map(|s| spins.iter().fold(mass.clone(), |acc, (mu, g)| acc.add(&CMat::kron_spin(g, &a.value(*mu, s)))))
            .collect();
        ZeroOrder::Sites { colors: nc, values }
    };
    Ok(FirstOrderOperator { derivative_coeffs, zero_order, active: free.active })
}

/// `ψ̄ = ψ† γ^0` when time is active, `ψ†` on purely spatial sectors.
pub fn dirac_adjoint(psi: &CVec, gammas: &GammaSet, time_active: bool) -> CVec {
    let nc = psi.len() / 4;
    let v = if time_active { psi.apply_spin(&gammas.gamma[0].adjoint(), nc) } else { psi.clone() };
    CVec(v.0.iter().map(C64::conj).collect())
}

/// `ψ̄ χ` for two colour spinors.
pub fn bilinear(psi: &CVec, chi: &CVec, gammas: &GammaSet, time_active: bool) -> C64 {
    dirac_adjoint(psi, gammas, time_active).0.iter().zip(&chi.0).map(|(a, b)| a * b).sum()
}
