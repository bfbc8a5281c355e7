//! Deformed Yang-Mills, fermionic and total actions.
//!
//! All sums run over sites in lexicographic order so that identical inputs
//! give bit-identical reports.

use serde::{Deserialize, Serialize};

use super::{Field, Grid};
use crate::clifford::{GammaSet, C64, I, ZERO};
use crate::error::{Error, Result};
use crate::gauge::{covariant_apply, field_strength_closed_form, GaugeConfig};
use crate::lie::{CVec, Linear};
use crate::metric::{DiagonalMetric, SiteRef};
use crate::qdirac::{bilinear, SIGNS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActionReport {
    pub value: C64,
    /// Value after a gauge transformation minus the value before.
    pub gauge_shift: Option<C64>,
    /// Named contributions that sum to `value`.
    pub breakdown: Vec<(String, C64)>,
    /// Directions integrated over.
    pub directions: Vec<usize>,
}

impl ActionReport {
    /// Records the shift to a report computed after a gauge transformation.
    pub fn with_shift(mut self, after: &ActionReport) -> Self {
        self.gauge_shift = Some(after.value - self.value);
        self
    }

    /// `|ΔS| / |S|`, or `|ΔS|` when `S = 0`.
    pub fn relative_shift(&self) -> Option<f64> {
        let shift = self.gauge_shift?.norm();
        let scale = self.value.norm();
        Some(if scale > 0.0 { shift / scale } else { shift })
    }

    pub fn breakdown_residual(&self) -> f64 {
        let sum: C64 = self.breakdown.iter().map(|(_, v)| v).sum();
        (sum - self.value).norm()
    }

    pub fn term(&self, name: &str) -> Option<C64> {
        self.breakdown.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

fn check_grid(metric: &DiagonalMetric, a: &GaugeConfig, grid: &Grid) -> Result<()> {
    if !a.grid().same_shape(grid) {
        return Err(Error::SectorMismatch("gauge configuration does not live on the given grid".into()));
    }
    metric.validate_on(grid)?;
    a.check_metric(metric)
}

/// `−¼ Σ_x √|det g_eff| · ∏h_a · Σ_{a≠b} g^aa g^bb tr(F_ab F_ab)`.
pub fn ym_action(metric: &DiagonalMetric, e: f64, a: &GaugeConfig, grid: &Grid) -> Result<ActionReport> {
    check_grid(metric, a, grid)?;
    let f = field_strength_closed_form(metric, e, a)?;
    let pairs = f.pairs();
    let mut per_pair = vec![ZERO; pairs.len()];
    let mut total = ZERO;
    let vol = grid.cell_volume();
    for s in 0..grid.site_count() {
        let at = SiteRef::new(grid, s);
        let weight = -0.25 * metric.measure_density(Some(at))? * vol;
        let mut site_sum = ZERO;
        for (k, &(mu, nu)) in pairs.iter().enumerate() {
            let raise = metric.component(mu, Some(at))? * metric.component(nu, Some(at))?;
            let fmn = f.component(mu, nu, s);
            // both orderings of the pair contribute equally
            let c = fmn.matmul(&fmn).tr() * (2.0 * raise * weight);
            per_pair[k] += c;
            site_sum += c;
        }
        total += site_sum;
    }
    let breakdown = pairs.iter().zip(per_pair).map(|((mu, nu), v)| (format!("F_{mu}{nu}"), v)).collect();
    Ok(ActionReport { value: total, gauge_shift: None, breakdown, directions: grid.active().to_vec() })
}

/// `Σ_x √|det g_eff| · ∏h_a · ψ̄ [Σ_μ i c_μ D_μ − m] ψ` with
/// `c_μ = ε_μ γ^μ q_μ`; the breakdown separates the derivative, coupling and
/// mass pieces.
#[allow(clippy::too_many_arguments)]
pub fn fermion_action(
    metric: &DiagonalMetric,
    gammas: &GammaSet,
    e: f64,
    a: &GaugeConfig,
    psi: &Field<CVec>,
    m: f64,
    grid: &Grid,
) -> Result<ActionReport> {
    check_grid(metric, a, grid)?;
    if !psi.grid().same_shape(grid) {
        return Err(Error::SectorMismatch("spinor does not live on the given grid".into()));
    }
    let nc = a.group().colors();
    if psi.values().iter().any(|v| v.len() != 4 * nc) {
        return Err(Error::GroupMismatch(format!("spinor must have {} components per site", 4 * nc)));
    }
    let time = metric.is_active(0);
    let active = grid.active().to_vec();
    let derivs = active.iter().map(|&mu| super::central_diff(psi, mu)).collect::<Result<Vec<_>>>()?;
    let covs = active.iter().map(|&mu| covariant_apply(metric, e, a, mu, psi)).collect::<Result<Vec<_>>>()?;
    let vol = grid.cell_volume();
    let (mut kinetic, mut interaction, mut mass) = (ZERO, ZERO, ZERO);
    for s in 0..grid.site_count() {
        let at = SiteRef::new(grid, s);
        let weight = metric.measure_density(Some(at))? * vol;
        let p = psi.at(s);
        let mut kin = CVec::zeros(p.len());
        let mut full = CVec::zeros(p.len());
        for (k, &mu) in active.iter().enumerate() {
            let c = gammas.gamma[mu].scale(I * (SIGNS[mu] * metric.q_factor(mu, Some(at))?));
            kin = kin.add(&derivs[k].at(s).apply_spin(&c, nc));
            full = full.add(&covs[k].at(s).apply_spin(&c, nc));
        }
        let coupling = full.sub(&kin);
        kinetic += bilinear(p, &kin, gammas, time) * weight;
        interaction += bilinear(p, &coupling, gammas, time) * weight;
        mass += bilinear(p, p, gammas, time) * (-m * weight);
    }
    Ok(ActionReport {
        value: kinetic + interaction + mass,
        gauge_shift: None,
        breakdown: vec![("kinetic".into(), kinetic), ("interaction".into(), interaction), ("mass".into(), mass)],
        directions: active,
    })
}

/// `S_YM + S_ferm`.
#[allow(clippy::too_many_arguments)]
pub fn total_action(
    metric: &DiagonalMetric,
    gammas: &GammaSet,
    e: f64,
    a: &GaugeConfig,
    psi: &Field<CVec>,
    m: f64,
    grid: &Grid,
) -> Result<ActionReport> {
    let ym = ym_action(metric, e, a, grid)?;
    let ferm = fermion_action(metric, gammas, e, a, psi, m, grid)?;
    Ok(ActionReport {
        value: ym.value + ferm.value,
        gauge_shift: None,
        breakdown: vec![("yang_mills".into(), ym.value), ("fermion".into(), ferm.value)],
        directions: ym.directions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::standard_gamma_set;
    use crate::lattice::random::random_spinor_field;
    use crate::lie::GaugeGroup;

    #[test]
    fn zero_inputs_give_zero() {
        let m = DiagonalMetric::minkowski();
        let grid = Grid::uniform(vec![0, 1, 2, 3], 4).unwrap();
        let a = GaugeConfig::zero(GaugeGroup::U1, grid.clone());
        assert_eq!(ym_action(&m, 1.0, &a, &grid).unwrap().value, ZERO);
        let psi = Field::constant(grid.clone(), CVec::zeros(4));
        let t = total_action(&m, &standard_gamma_set(), 1.0, &a, &psi, 1.0, &grid).unwrap();
        assert_eq!(t.value, ZERO);
    }

    #[test]
    fn breakdown_sums_to_value() {
        let m = DiagonalMetric::constant([2.0, -1.0, 0.0, -3.0], "m").unwrap();
        let grid = Grid::uniform(vec![0, 1, 3], 6).unwrap();
        let a = GaugeConfig::random(GaugeGroup::SUN(2), grid.clone(), 1, 1, 0.5).unwrap();
        let psi = random_spinor_field(&grid, 2, 1, 2).unwrap();
        let g = standard_gamma_set();
        for r in [
            ym_action(&m, 1.0, &a, &grid).unwrap(),
            fermion_action(&m, &g, 1.0, &a, &psi, 0.7, &grid).unwrap(),
            total_action(&m, &g, 1.0, &a, &psi, 0.7, &grid).unwrap(),
        ] {
            assert!(r.breakdown_residual() <= 1e-12 * r.value.norm().max(1.0));
            assert_eq!(r.directions, vec![0, 1, 3]);
        }
    }

    #[test]
    fn mismatched_grid_rejected() {
        let m = DiagonalMetric::constant([1.0, -1.0, 0.0, 0.0], "m").unwrap();
        let grid = Grid::uniform(vec![0, 1, 2], 4).unwrap();
        let a = GaugeConfig::zero(GaugeGroup::U1, grid.clone());
        assert!(matches!(ym_action(&m, 1.0, &a, &grid), Err(Error::SectorMismatch(_))));
    }
}
