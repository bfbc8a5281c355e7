//! Diagonal background metrics and the quantities derived from them:
//! `q_μ = √|g^{μμ}|`, `h_μ = 1/q_μ`, the effective sector and the measure.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Grid;

/// Fields whose largest modulus falls below this are identically zero.
pub const ZERO_FIELD_THRESHOLD: f64 = 1e-15;

/// Smallest `|g^{μμ}|` accepted on an active direction.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// Closed-form scalar fields for spacetime-dependent metric components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "expr", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldExpr {
    /// `offset + amplitude · cos(k x^direction)`
    Cosine { offset: f64, amplitude: f64, direction: usize, wavenumber: f64 },
    /// `scale · exp(rate · sin(k x^direction))`
    ExpSin { scale: f64, rate: f64, direction: usize, wavenumber: f64 },
}

impl FieldExpr {
    pub fn direction(&self) -> usize {
        match self {
            FieldExpr::Cosine { direction, .. } | FieldExpr::ExpSin { direction, .. } => *direction,
        }
    }

    pub fn value(&self, x: &[f64; 4]) -> f64 {
        match *self {
            FieldExpr::Cosine { offset, amplitude, direction, wavenumber } => {
                offset + amplitude * (wavenumber * x[direction]).cos()
            }
            FieldExpr::ExpSin { scale, rate, direction, wavenumber } => {
                scale * (rate * (wavenumber * x[direction]).sin()).exp()
            }
        }
    }

    /// `∂_μ` of the expression.
    pub fn derivative(&self, x: &[f64; 4], mu: usize) -> f64 {
        if mu != self.direction() {
            return 0.0;
        }
        match *self {
            FieldExpr::Cosine { amplitude, direction, wavenumber, .. } => {
                -amplitude * wavenumber * (wavenumber * x[direction]).sin()
            }
            FieldExpr::ExpSin { scale, rate, direction, wavenumber } => {
                let phase = wavenumber * x[direction];
                scale * (rate * phase.sin()).exp() * rate * wavenumber * phase.cos()
            }
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        match *self {
            FieldExpr::Cosine { offset, amplitude, .. } => offset == 0.0 && amplitude == 0.0,
            FieldExpr::ExpSin { scale, .. } => scale == 0.0,
        }
    }

    fn is_finite(&self) -> bool {
        match *self {
            FieldExpr::Cosine { offset, amplitude, direction, wavenumber } => {
                offset.is_finite() && amplitude.is_finite() && wavenumber.is_finite() && direction < 4
            }
            FieldExpr::ExpSin { scale, rate, direction, wavenumber } => {
                scale.is_finite() && rate.is_finite() && wavenumber.is_finite() && direction < 4
            }
        }
    }
}

/// Metric component sampled on a specific grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledField {
    pub grid: Grid,
    pub values: Vec<f64>,
}

impl SampledField {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.site_count() {
            return Err(Error::BadParameter(format!(
                "sampled field has {} values for {} sites",
                values.len(),
                grid.site_count()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(&[f64; 4]) -> f64) -> Self {
        let values = (0..grid.site_count()).map(|s| f(&grid.coords(s))).collect();
        Self { grid, values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MetricComponent {
    Constant(f64),
    /// Field given by a closed-form expression; derivatives are exact.
    Analytic(FieldExpr),
    /// Field known only through its samples; derivatives use the lattice stencil.
    Sampled(Arc<SampledField>),
}

impl MetricComponent {
    pub fn is_constant(&self) -> bool {
        matches!(self, MetricComponent::Constant(_))
    }

    pub fn is_identically_zero(&self) -> bool {
        match self {
            MetricComponent::Constant(v) => *v == 0.0,
            MetricComponent::Analytic(e) => e.is_identically_zero(),
            MetricComponent::Sampled(f) => f.max_abs() < ZERO_FIELD_THRESHOLD,
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            MetricComponent::Constant(v) => v.is_finite(),
            MetricComponent::Analytic(e) => e.is_finite(),
            MetricComponent::Sampled(f) => f.values.iter().all(|v| v.is_finite()),
        }
    }
}

/// A lattice site at which field-valued components are evaluated.
#[derive(Debug, Clone, Copy)]
pub struct SiteRef<'a> {
    pub grid: &'a Grid,
    pub site: usize,
}

impl<'a> SiteRef<'a> {
    pub fn new(grid: &'a Grid, site: usize) -> Self {
        Self { grid, site }
    }
}

/// `diag(g^00, g^11, g^22, g^33)`; off-diagonal components are not represented.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalMetric {
    pub components: [MetricComponent; 4],
    pub label: String,
}

impl DiagonalMetric {
    pub fn new(components: [MetricComponent; 4], label: impl Into<String>) -> Result<Self> {
        for (mu, c) in components.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::NonFiniteMetric { mu });
            }
        }
        Ok(Self { components, label: label.into() })
    }

    pub fn constant(values: [f64; 4], label: impl Into<String>) -> Result<Self> {
        Self::new(values.map(MetricComponent::Constant), label)
    }

    pub fn minkowski() -> Self {
        Self::constant([1.0, -1.0, -1.0, -1.0], "minkowski").expect("finite")
    }

    pub fn is_constant(&self) -> bool {
        self.components.iter().all(MetricComponent::is_constant)
    }

    pub fn is_active(&self, mu: usize) -> bool {
        !self.components[mu].is_identically_zero()
    }

    pub fn active_indices(&self) -> Vec<usize> {
        (0..4).filter(|&mu| self.is_active(mu)).collect()
    }

    /// Constant values, or `NonConstantMetric` naming the first field component.
    pub fn constant_values(&self) -> Result<[f64; 4]> {
        let mut out = [0.0; 4];
        for (mu, c) in self.components.iter().enumerate() {
            match c {
                MetricComponent::Constant(v) => out[mu] = *v,
                _ => return Err(Error::NonConstantMetric { mu }),
            }
        }
        Ok(out)
    }

    /// `g^{μμ}` at a site (the site is ignored for constants).
    pub fn component(&self, mu: usize, at: Option<SiteRef<'_>>) -> Result<f64> {
        match &self.components[mu] {
            MetricComponent::Constant(v) => Ok(*v),
            MetricComponent::Analytic(e) => {
                let at = at.ok_or(Error::SiteRequired { mu })?;
                Ok(e.value(&at.grid.coords(at.site)))
            }
            MetricComponent::Sampled(f) => {
                let at = at.ok_or(Error::SiteRequired { mu })?;
                if !f.grid.same_shape(at.grid) {
                    return Err(Error::SectorMismatch(format!(
                        "sampled g^{mu}{mu} lives on a different grid than the one requested"
                    )));
                }
                Ok(f.values[at.site])
            }
        }
    }

    fn active_component(&self, mu: usize, at: Option<SiteRef<'_>>) -> Result<f64> {
        if !self.is_active(mu) {
            return Err(Error::DegenerateDirection { mu });
        }
        let g = self.component(mu, at)?;
        if g.abs() < SINGULAR_THRESHOLD {
            return Err(Error::NearSingularMetric { mu, site: at.map_or(0, |s| s.site), value: g });
        }
        Ok(g)
    }

    /// `q_μ = √|g^{μμ}|`.
    pub fn q_factor(&self, mu: usize, at: Option<SiteRef<'_>>) -> Result<f64> {
        Ok(self.active_component(mu, at)?.abs().sqrt())
    }

    /// `h_μ = 1/√|g^{μμ}|`.
    pub fn h_factor(&self, mu: usize, at: Option<SiteRef<'_>>) -> Result<f64> {
        Ok(1.0 / self.q_factor(mu, at)?)
    }

    /// Exact `∂_ν g^{μμ}` when available: zero for constants, analytic for
    /// expressions, `None` for sampled fields.
    pub fn component_gradient(&self, mu: usize, nu: usize, at: SiteRef<'_>) -> Option<f64> {
        match &self.components[mu] {
            MetricComponent::Constant(_) => Some(0.0),
            MetricComponent::Analytic(e) => Some(e.derivative(&at.grid.coords(at.site), nu)),
            MetricComponent::Sampled(_) => None,
        }
    }

    /// Exact `∂_ν h_μ = -½ sgn(g) |g|^{-3/2} ∂_ν g` when available.
    pub fn h_gradient(&self, mu: usize, nu: usize, at: SiteRef<'_>) -> Result<Option<f64>> {
        let g = self.active_component(mu, Some(at))?;
        Ok(self
            .component_gradient(mu, nu, at)
            .map(|dg| -0.5 * g.signum() * g.abs().powf(-1.5) * dg))
    }

    /// Exact `∂_ν q_μ = ½ sgn(g) |g|^{-1/2} ∂_ν g` when available.
    pub fn q_gradient(&self, mu: usize, nu: usize, at: SiteRef<'_>) -> Result<Option<f64>> {
        let g = self.active_component(mu, Some(at))?;
        Ok(self
            .component_gradient(mu, nu, at)
            .map(|dg| 0.5 * g.signum() * g.abs().powf(-0.5) * dg))
    }

    /// Directions with `g^{μμ} ≢ 0`, in ascending order.
    pub fn effective_sector(&self) -> Result<EffectiveSector> {
        let active = self.active_indices();
        if active.is_empty() {
            return Err(Error::EmptySector);
        }
        for &mu in &active {
            if let MetricComponent::Constant(v) = self.components[mu] {
                if v.abs() < SINGULAR_THRESHOLD {
                    return Err(Error::NearSingularMetric { mu, site: 0, value: v });
                }
            }
        }
        Ok(EffectiveSector {
            d_eff: active.len(),
            effective_upper_metric: active.iter().map(|&mu| (mu, self.components[mu].clone())).collect(),
            active_indices: active,
        })
    }

    /// `√|det g_eff|` with the lower-index effective metric taken as the
    /// componentwise inverse: `∏_a |g^{aa}|^{-1/2}`.
    pub fn measure_density(&self, at: Option<SiteRef<'_>>) -> Result<f64> {
        let sector = self.effective_sector()?;
        sector.active_indices.iter().try_fold(1.0, |acc, &mu| Ok(acc * self.h_factor(mu, at)?))
    }

    /// Checks every field-valued active component against the singularity
    /// threshold on the given grid.
    pub fn validate_on(&self, grid: &Grid) -> Result<()> {
        let sector = self.effective_sector()?;
        if sector.active_indices != grid.active() {
            return Err(Error::SectorMismatch(format!(
                "metric `{}` is active on {:?} but the grid spans {:?}",
                self.label,
                sector.active_indices,
                grid.active()
            )));
        }
        for &mu in &sector.active_indices {
            if self.components[mu].is_constant() {
                continue;
            }
            for site in 0..grid.site_count() {
                self.q_factor(mu, Some(SiteRef::new(grid, site)))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EffectiveSector {
    pub active_indices: Vec<usize>,
    pub d_eff: usize,
    pub effective_upper_metric: Vec<(usize, MetricComponent)>,
}

impl EffectiveSector {
    /// The metric restricted to this sector, inactive directions set to zero.
    pub fn restricted_metric(&self, label: impl Into<String>) -> DiagonalMetric {
        let mut comps = [
            MetricComponent::Constant(0.0),
            MetricComponent::Constant(0.0),
            MetricComponent::Constant(0.0),
            MetricComponent::Constant(0.0),
        ];
        for (mu, c) in &self.effective_upper_metric {
            comps[*mu] = c.clone();
        }
        DiagonalMetric { components: comps, label: label.into() }
    }
}
