//! Deformed covariant derivative, field strength and gauge transformations.
//!
//! Gauge fields are Hermitian, `A_μ = A_μ^a T^a` with `T^a = λ^a/2`, and the
//! covariant derivative is `D_μ = ∂_μ + i e h_μ A_μ`. U(1) is handled as the
//! 1x1 case of the same matrix code, so there is a single implementation of
//! every formula.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{expected_h_coeffs, find_case};
use crate::clifford::{C64, I};
use crate::error::{Error, Result};
use crate::lattice::random::{axis_coords, lie_field_from_rng, FourierSeries};
use crate::lattice::{central_diff, stencil_diff, stencil_values, Field, Grid};
use crate::lie::{su_generators, Algebra, CMat, CVec, GaugeGroup, LieValue, Linear};
use crate::metric::{DiagonalMetric, SiteRef};
use crate::symbolic::SymbolicCoeff;

/// Largest accepted `‖U†U − 1‖` for a gauge transformation.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

pub(crate) fn ie(e: f64) -> C64 {
    C64::new(0.0, e)
}

/// `A_μ` on the active directions of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeConfig {
    group: GaugeGroup,
    grid: Grid,
    components: [Option<Field<CMat>>; 4],
}

impl GaugeConfig {
    /// Components on directions the grid does not span must vanish; a
    /// non-zero one is rejected with `InactiveGaugeComponent`.
    pub fn new(group: GaugeGroup, grid: Grid, components: Vec<(usize, Field<CMat>)>) -> Result<Self> {
        let mut slots: [Option<Field<CMat>>; 4] = Default::default();
        for (mu, field) in components {
            if mu > 3 {
                return Err(Error::BadParameter(format!("direction {mu} out of range")));
            }
            if field.values().iter().any(|v| v.dim() != group.colors()) {
                return Err(Error::GroupMismatch(format!("A_{mu} is not {0}x{0}", group.colors())));
            }
            if grid.axis_of(mu).is_none() {
                if field.max_abs() > 0.0 {
                    return Err(Error::InactiveGaugeComponent { mu });
                }
                continue;
            }
            if !field.grid().same_shape(&grid) {
                return Err(Error::SectorMismatch(format!("A_{mu} lives on a different grid")));
            }
            slots[mu] = Some(field);
        }
        Ok(Self { group, grid, components: slots })
    }

    pub fn zero(group: GaugeGroup, grid: Grid) -> Self {
        Self { group, grid, components: Default::default() }
    }

    /// Band-limited random components on every grid direction.
    pub fn random(group: GaugeGroup, grid: Grid, seed: u64, band_limit: usize, amplitude: f64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut comps = Vec::new();
        for &mu in grid.active() {
            comps.push((mu, lie_field_from_rng(&grid, &mut rng, group, band_limit, amplitude)?));
        }
        Self::new(group, grid, comps)
    }

    pub fn group(&self) -> GaugeGroup {
        self.group
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn component(&self, mu: usize) -> Option<&Field<CMat>> {
        self.components[mu].as_ref()
    }

    /// `A_μ(x)`, zero where no component is stored.
    pub fn value(&self, mu: usize, site: usize) -> CMat {
        match &self.components[mu] {
            Some(f) => f.at(site).clone(),
            None => CMat::zeros(self.group.colors()),
        }
    }

    pub fn lie_value(&self, mu: usize, site: usize) -> LieValue {
        to_lie(self.group, self.value(mu, site))
    }

    pub fn is_exact(&self) -> bool {
        self.components.iter().flatten().all(Field::has_exact_gradients)
    }

    pub fn into_stencil(mut self) -> Self {
        for c in self.components.iter_mut() {
            *c = c.take().map(Field::into_stencil);
        }
        self
    }

    /// Attaches spectral gradients to every component.
    pub fn with_spectral_gradients(mut self) -> Self {
        for c in self.components.iter_mut() {
            *c = c.take().map(Field::with_spectral_gradients);
        }
        self
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().flatten().map(Field::max_abs).fold(0.0, f64::max)
    }

    /// Directions that carry a stored component.
    pub fn directions(&self) -> Vec<usize> {
        (0..4).filter(|&mu| self.components[mu].is_some()).collect()
    }

    /// Checks that the metric is active exactly on the grid directions.
    pub fn check_metric(&self, metric: &DiagonalMetric) -> Result<()> {
        let sector = metric.effective_sector()?;
        if sector.active_indices != self.grid.active() {
            return Err(Error::SectorMismatch(format!(
                "metric `{}` is active on {:?}, gauge field on {:?}",
                metric.label,
                sector.active_indices,
                self.grid.active()
            )));
        }
        Ok(())
    }

    /// `∂_ν A_μ` (exact when available).
    fn derivative(&self, mu: usize, nu: usize) -> Result<Vec<CMat>> {
        match &self.components[mu] {
            Some(f) => Ok(central_diff(f, nu)?.values().to_vec()),
            None => Ok(vec![CMat::zeros(self.group.colors()); self.grid.site_count()]),
        }
    }
}

fn to_lie(group: GaugeGroup, m: CMat) -> LieValue {
    if group.is_abelian() {
        LieValue::AbelianScalar(m.get(0, 0))
    } else {
        LieValue::MatrixValued(m)
    }
}

/// `h_μ` at every site.
pub(crate) fn h_values(metric: &DiagonalMetric, grid: &Grid, mu: usize) -> Result<Vec<f64>> {
    (0..grid.site_count()).map(|s| metric.h_factor(mu, Some(SiteRef::new(grid, s)))).collect()
}

/// `q_μ` at every site.
pub(crate) fn q_values(metric: &DiagonalMetric, grid: &Grid, mu: usize) -> Result<Vec<f64>> {
    (0..grid.site_count()).map(|s| metric.q_factor(mu, Some(SiteRef::new(grid, s)))).collect()
}

fn real_field(grid: &Grid, v: &[f64]) -> Vec<C64> {
    debug_assert_eq!(v.len(), grid.site_count());
    v.iter().map(|x| C64::new(*x, 0.0)).collect()
}

/// `∂_ν` of `h_μ` or `q_μ`: analytic when the component has a closed form,
/// the lattice stencil otherwise.
fn factor_gradient(
    metric: &DiagonalMetric,
    grid: &Grid,
    mu: usize,
    nu: usize,
    samples: &[f64],
    want_h: bool,
) -> Result<Vec<f64>> {
    let axis = grid.axis_or_err(nu)?;
    let analytic: Option<Vec<f64>> = (0..grid.site_count())
        .map(|s| {
            let at = SiteRef::new(grid, s);
            if want_h {
                metric.h_gradient(mu, nu, at)
            } else {
                metric.q_gradient(mu, nu, at)
            }
        })
        .collect::<Result<Vec<Option<f64>>>>()?
        .into_iter()
        .collect();
    Ok(match analytic {
        Some(v) => v,
        None => stencil_values(grid, &real_field(grid, samples), axis).iter().map(|z| z.re).collect(),
    })
}

fn metric_has_closed_form(metric: &DiagonalMetric, mu: usize) -> bool {
    !matches!(metric.components[mu], crate::metric::MetricComponent::Sampled(_))
}

/// `∂_ν (h_μ A_μ)` at every site.
fn d_scaled(metric: &DiagonalMetric, a: &GaugeConfig, h_mu: &[f64], mu: usize, nu: usize) -> Result<Vec<CMat>> {
    let grid = a.grid();
    let Some(field) = a.component(mu) else {
        return Ok(vec![CMat::zeros(a.group.colors()); grid.site_count()]);
    };
    if !metric_has_closed_form(metric, mu) && !field.has_exact_gradients() {
        // sampled metric and stencil field: one stencil for the product
        let product: Vec<CMat> = field.values().iter().zip(h_mu).map(|(v, h)| v.scale_real(*h)).collect();
        return Ok(stencil_values(grid, &product, grid.axis_or_err(nu)?));
    }
    let dh = factor_gradient(metric, grid, mu, nu, h_mu, true)?;
    let da = a.derivative(mu, nu)?;
    Ok((0..grid.site_count())
        .map(|s| field.at(s).scale_real(dh[s]).add(&da[s].scale_real(h_mu[s])))
        .collect())
}

/// `D_μ f = ∂_μ f + i e h_μ A_μ f` for colour vectors or colour spinors.
pub fn covariant_apply(
    metric: &DiagonalMetric,
    e: f64,
    a: &GaugeConfig,
    mu: usize,
    field: &Field<CVec>,
) -> Result<Field<CVec>> {
    if !metric.is_active(mu) {
        return Err(Error::DegenerateDirection { mu });
    }
    if !field.grid().same_shape(a.grid()) {
        return Err(Error::SectorMismatch("field and gauge configuration grids differ".into()));
    }
    let d = central_diff(field, mu)?;
    let Some(a_mu) = a.component(mu) else {
        return Ok(d);
    };
    let h = h_values(metric, a.grid(), mu)?;
    let coupling = ie(e);
    let grid = a.grid().clone();
    Ok(Field::from_fn(grid, |s| {
        let coupled = CVec(a_mu.at(s).act(&field.at(s).0)).scale(coupling * h[s]);
        d.at(s).add(&coupled)
    }))
}

/// `F_μν` for every active pair `μ < ν`, including the explicit `ie`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldStrengthTensor {
    grid: Grid,
    group: GaugeGroup,
    planes: Vec<((usize, usize), Vec<CMat>)>,
}

impl FieldStrengthTensor {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn group(&self) -> GaugeGroup {
        self.group
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.planes.iter().map(|(p, _)| *p).collect()
    }

    pub fn plane(&self, mu: usize, nu: usize) -> Option<&[CMat]> {
        self.planes.iter().find(|(p, _)| *p == (mu, nu)).map(|(_, v)| v.as_slice())
    }

    /// `F_μν(x)` for any ordered pair: antisymmetric, zero on the diagonal
    /// and on inactive rows and columns.
    pub fn component(&self, mu: usize, nu: usize, site: usize) -> CMat {
        let n = self.group.colors();
        if mu == nu {
            return CMat::zeros(n);
        }
        let (lo, hi, sign) = if mu < nu { (mu, nu, 1.0) } else { (nu, mu, -1.0) };
        match self.plane(lo, hi) {
            Some(v) => v[site].scale_real(sign),
            None => CMat::zeros(n),
        }
    }

    pub fn lie_value(&self, mu: usize, nu: usize, site: usize) -> LieValue {
        to_lie(self.group, self.component(mu, nu, site))
    }

    pub fn max_abs(&self) -> f64 {
        self.planes.iter().flat_map(|(_, v)| v.iter().map(Linear::max_abs)).fold(0.0, f64::max)
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                for s in 0..self.grid.site_count() {
                    worst = worst.max(self.component(mu, nu, s).sub(&other.component(mu, nu, s)).max_abs());
                }
            }
        }
        worst
    }

    /// `F_μν f` sitewise.
    pub fn apply(&self, mu: usize, nu: usize, field: &Field<CVec>) -> Field<CVec> {
        Field::from_fn(self.grid.clone(), |s| CVec(self.component(mu, nu, s).act(&field.at(s).0)))
    }

    /// Sitewise conjugation `U F U†`.
    pub fn conjugated(&self, g: &GaugeTransformation) -> Self {
        let planes = self
            .planes
            .iter()
            .map(|(p, v)| {
                let w = v.iter().enumerate().map(|(s, f)| g.values[s].matmul(f).matmul(&g.values[s].dagger())).collect();
                (*p, w)
            })
            .collect();
        Self { grid: self.grid.clone(), group: self.group, planes }
    }
}

/// `F_μν = ie(∂_μ(h_ν A_ν) − ∂_ν(h_μ A_μ)) − e² h_μ h_ν [A_μ, A_ν]`; the
/// commutator is skipped for U(1).
pub fn field_strength_closed_form(metric: &DiagonalMetric, e: f64, a: &GaugeConfig) -> Result<FieldStrengthTensor> {
    a.check_metric(metric)?;
    let grid = a.grid();
    let active = grid.active().to_vec();
    let h: Vec<Vec<f64>> = active.iter().map(|&mu| h_values(metric, grid, mu)).collect::<Result<_>>()?;
    let mut planes = Vec::new();
    for (i, &mu) in active.iter().enumerate() {
        for (j, &nu) in active.iter().enumerate().skip(i + 1) {
            let d_mu = d_scaled(metric, a, &h[j], nu, mu)?;
            let d_nu = d_scaled(metric, a, &h[i], mu, nu)?;
            let values = (0..grid.site_count())
                .map(|s| {
                    let f = d_mu[s].sub(&d_nu[s]).scale(ie(e));
                    if a.group.is_abelian() {
                        f
                    } else {
                        let comm = a.value(mu, s).commutator(&a.value(nu, s));
                        f.sub(&comm.scale_real(e * e * h[i][s] * h[j][s]))
                    }
                })
                .collect();
            planes.push(((mu, nu), values));
        }
    }
    Ok(FieldStrengthTensor { grid: grid.clone(), group: a.group, planes })
}

/// `[D_μ, D_ν] f` by applying the covariant derivative twice.
pub fn field_strength_oracle(
    metric: &DiagonalMetric,
    e: f64,
    a: &GaugeConfig,
    field: &Field<CVec>,
    mu: usize,
    nu: usize,
) -> Result<Field<CVec>> {
    let dnu = covariant_apply(metric, e, a, nu, field)?;
    let dmu = covariant_apply(metric, e, a, mu, field)?;
    Ok(covariant_apply(metric, e, a, mu, &dnu)?.sub(&covariant_apply(metric, e, a, nu, &dmu)?))
}

/// `max_{μ<ν} ‖F_μν f − [D_μ, D_ν] f‖∞` over the active pairs.
pub fn oracle_residual(metric: &DiagonalMetric, e: f64, a: &GaugeConfig, field: &Field<CVec>) -> Result<f64> {
    let f = field_strength_closed_form(metric, e, a)?;
    let mut worst = 0.0f64;
    for (mu, nu) in f.pairs() {
        let oracle = field_strength_oracle(metric, e, a, field, mu, nu)?;
        worst = worst.max(f.apply(mu, nu, field).max_diff(&oracle));
    }
    Ok(worst)
}

/// Which transformation law `A → A'` to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformRule {
    /// `A' = U A U† + (1/ie) U ∂U†`, the undeformed law applied verbatim.
    Literal,
    /// `A' = U A U† + (1/(ie h_μ)) U ∂_μ U†`, which makes `D_μ` covariant.
    Covariant,
}

/// Per-site unitary `U(x)`, with exact first and second derivatives when it
/// was built from closed-form angles.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeTransformation {
    grid: Grid,
    group: GaugeGroup,
    values: Vec<CMat>,
    gradients: Option<Vec<Vec<CMat>>>,
    hessians: Option<Vec<Vec<Vec<CMat>>>>,
    alpha: Option<Field<C64>>,
}

impl GaugeTransformation {
    pub fn identity(group: GaugeGroup, grid: Grid) -> Self {
        let one = CMat::identity(group.colors());
        Self::constant(group, grid, one).expect("identity is unitary")
    }

    /// Spacetime-independent `U`.
    pub fn constant(group: GaugeGroup, grid: Grid, u: CMat) -> Result<Self> {
        check_unitary(&u)?;
        let n = grid.site_count();
        let d = grid.dims();
        let zero = u.zero_like();
        Ok(Self {
            group,
            values: vec![u; n],
            gradients: Some(vec![vec![zero.clone(); n]; d]),
            hessians: Some(vec![vec![vec![zero; n]; d]; d]),
            alpha: None,
            grid,
        })
    }

    /// Samples only; derivatives use the stencil.
    pub fn from_values(group: GaugeGroup, grid: Grid, values: Vec<CMat>) -> Result<Self> {
        if values.len() != grid.site_count() {
            return Err(Error::BadParameter("one unitary per site required".into()));
        }
        for u in &values {
            if u.dim() != group.colors() {
                return Err(Error::GroupMismatch(format!("U is not {0}x{0}", group.colors())));
            }
            check_unitary(u)?;
        }
        Ok(Self { group, grid, values, gradients: None, hessians: None, alpha: None })
    }

    /// `U = exp(i e α)` with exact jets from a closed-form `α`.
    pub fn abelian(grid: Grid, e: f64, alpha: &FourierSeries) -> Self {
        let xs = axis_coords(&grid);
        let d = grid.dims();
        let mut values = Vec::with_capacity(xs.len());
        let mut grads = vec![Vec::with_capacity(xs.len()); d];
        let mut hess = vec![vec![Vec::with_capacity(xs.len()); d]; d];
        for x in &xs {
            let u = C64::from_polar(1.0, e * alpha.value(x));
            values.push(CMat::from_vec(1, vec![u]));
            for a in 0..d {
                let da = alpha.gradient(x, a);
                grads[a].push(CMat::from_vec(1, vec![ie(e) * da * u]));
                for b in 0..d {
                    let h = ie(e) * alpha.hessian(x, a, b) - C64::new(e * e * da * alpha.gradient(x, b), 0.0);
                    hess[a][b].push(CMat::from_vec(1, vec![h * u]));
                }
            }
        }
        Self {
            alpha: Some(alpha.sample(&grid)),
            group: GaugeGroup::U1,
            values,
            gradients: Some(grads),
            hessians: Some(hess),
            grid,
        }
    }

    /// `U = exp(i e α)` from sampled `α`; derivatives use the stencil.
    pub fn abelian_from_fn(grid: Grid, e: f64, alpha: impl Fn(&[f64; 4]) -> f64) -> Self {
        let a: Vec<f64> = (0..grid.site_count()).map(|s| alpha(&grid.coords(s))).collect();
        let values = a.iter().map(|v| CMat::from_vec(1, vec![C64::from_polar(1.0, e * v)])).collect();
        let alpha_field = Field::new(grid.clone(), real_field(&grid, &a)).expect("one value per site");
        Self { group: GaugeGroup::U1, grid, values, gradients: None, hessians: None, alpha: Some(alpha_field) }
    }

    /// Seeded smooth transformation. U(1): `exp(ieα)` with band-limited `α`.
    /// SU(N): `V0 · Π_k exp(i θ_k(x) H_k)` with three random traceless
    /// Hermitian `H_k`, band-limited angles and a random constant `V0`.
    pub fn random(group: GaugeGroup, grid: Grid, seed: u64, band_limit: usize, e: f64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = match group {
            GaugeGroup::U1 => {
                let alpha = FourierSeries::random(&grid, band_limit, 1.0, &mut rng)?;
                return Ok(Self::abelian(grid, e, &alpha));
            }
            GaugeGroup::SUN(n) => n,
        };
        let gens = su_generators(n);
        let random_hermitian = |rng: &mut ChaCha8Rng| {
            gens.iter().fold(CMat::zeros(n), |acc, t| acc.add(&t.scale_real(rng.random_range(-1.0..1.0))))
        };
        let v0 = random_hermitian(&mut rng).scale(I).expm();
        let factors: Vec<(CMat, FourierSeries)> = (0..3)
            .map(|_| {
                let h = random_hermitian(&mut rng);
                FourierSeries::random(&grid, band_limit, 1.0, &mut rng).map(|s| (h, s))
            })
            .collect::<Result<_>>()?;
        let xs = axis_coords(&grid);
        let d = grid.dims();
        let mut values = Vec::with_capacity(xs.len());
        let mut grads = vec![Vec::with_capacity(xs.len()); d];
        let mut hess = vec![vec![Vec::with_capacity(xs.len()); d]; d];
        for x in &xs {
            let zero = CMat::zeros(n);
            let mut p = v0.clone();
            let mut dp = vec![zero.clone(); d];
            let mut ddp = vec![vec![zero.clone(); d]; d];
            for (h, theta) in &factors {
                let f = h.scale(I * theta.value(x)).expm();
                let ih = h.scale(I);
                let h2 = h.matmul(h);
                let df: Vec<CMat> = (0..d).map(|a| ih.scale_real(theta.gradient(x, a)).matmul(&f)).collect();
                let ddf: Vec<Vec<CMat>> = (0..d)
                    .map(|a| {
                        (0..d)
                            .map(|b| {
                                ih.scale_real(theta.hessian(x, a, b))
                                    .sub(&h2.scale_real(theta.gradient(x, a) * theta.gradient(x, b)))
                                    .matmul(&f)
                            })
                            .collect()
                    })
                    .collect();
                let new_ddp = (0..d)
                    .map(|a| {
                        (0..d)
                            .map(|b| {
                                ddp[a][b]
                                    .matmul(&f)
                                    .add(&dp[a].matmul(&df[b]))
                                    .add(&dp[b].matmul(&df[a]))
                                    .add(&p.matmul(&ddf[a][b]))
                            })
                            .collect()
                    })
                    .collect();
                let new_dp = (0..d).map(|a| dp[a].matmul(&f).add(&p.matmul(&df[a]))).collect();
                p = p.matmul(&f);
                dp = new_dp;
                ddp = new_ddp;
            }
            values.push(p);
            for a in 0..d {
                grads[a].push(dp[a].clone());
                for b in 0..d {
                    hess[a][b].push(ddp[a][b].clone());
                }
            }
        }
        Ok(Self { group, grid, values, gradients: Some(grads), hessians: Some(hess), alpha: None })
    }

    pub fn group(&self) -> GaugeGroup {
        self.group
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn at(&self, site: usize) -> &CMat {
        &self.values[site]
    }

    pub fn values(&self) -> &[CMat] {
        &self.values
    }

    /// The abelian phase `α`, when the transformation was built from one.
    pub fn alpha(&self) -> Option<&Field<C64>> {
        self.alpha.as_ref()
    }

    pub fn has_exact_derivatives(&self) -> bool {
        self.hessians.is_some()
    }

    pub fn into_stencil(mut self) -> Self {
        self.gradients = None;
        self.hessians = None;
        self.alpha = self.alpha.map(Field::into_stencil);
        self
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.values.iter().map(CMat::unitarity_defect).fold(0.0, f64::max)
    }

    /// `∂_μ U` at every site.
    fn d_u(&self, mu: usize) -> Result<Vec<CMat>> {
        let axis = self.grid.axis_or_err(mu)?;
        Ok(match &self.gradients {
            Some(g) => g[axis].clone(),
            None => stencil_values(&self.grid, &self.values, axis),
        })
    }

    /// `∂_μ U†` at every site.
    fn d_u_dagger(&self, mu: usize) -> Result<Vec<CMat>> {
        let axis = self.grid.axis_or_err(mu)?;
        Ok(match &self.gradients {
            Some(g) => g[axis].iter().map(CMat::dagger).collect(),
            None => {
                let ud: Vec<CMat> = self.values.iter().map(CMat::dagger).collect();
                stencil_values(&self.grid, &ud, axis)
            }
        })
    }

    /// `U ψ`, with exact gradients `∂U ψ + U ∂ψ` when both sides have them.
    pub fn apply(&self, field: &Field<CVec>) -> Field<CVec> {
        let values: Vec<CVec> = (0..self.values.len()).map(|s| CVec(self.values[s].act(&field.at(s).0))).collect();
        match (&self.gradients, field.gradients()) {
            (Some(gu), Some(gf)) => {
                let grads = gu
                    .iter()
                    .zip(gf)
                    .map(|(du, df)| {
                        (0..values.len())
                            .map(|s| CVec(du[s].act(&field.at(s).0)).add(&CVec(self.values[s].act(&df[s].0))))
                            .collect()
                    })
                    .collect();
                Field::with_gradients(self.grid.clone(), values, grads).expect("layout matches grid")
            }
            _ => Field::new(self.grid.clone(), values).expect("layout matches grid"),
        }
    }
}

fn check_unitary(u: &CMat) -> Result<()> {
    let defect = u.unitarity_defect();
    if defect > UNITARITY_TOLERANCE {
        return Err(Error::BadParameter(format!("gauge transformation is not unitary (defect {defect:e})")));
    }
    Ok(())
}

/// `A'_μ = U A_μ U† + c_μ U ∂_μ U†` with `c_μ = 1/(ie)` (literal) or
/// `1/(ie h_μ)` (covariant). Exact derivatives of `A'` are propagated when
/// both `A` and `U` carry them.
pub fn transform(
    metric: &DiagonalMetric,
    e: f64,
    a: &GaugeConfig,
    g: &GaugeTransformation,
    rule: TransformRule,
) -> Result<GaugeConfig> {
    if a.group != g.group {
        return Err(Error::GroupMismatch(format!("gauge field is {}, transformation is {}", a.group, g.group)));
    }
    if !a.grid.same_shape(&g.grid) {
        return Err(Error::SectorMismatch("gauge field and transformation grids differ".into()));
    }
    let grid = a.grid();
    let n = grid.site_count();
    let d = grid.dims();
    let inv_ie = C64::new(1.0, 0.0) / ie(e);
    let exact = a.is_exact() && g.gradients.is_some() && g.hessians.is_some();
    let mut comps = Vec::new();
    for &mu in grid.active() {
        let (c, dc): (Vec<f64>, Option<Vec<Vec<f64>>>) = match rule {
            TransformRule::Literal => (vec![1.0; n], exact.then(|| vec![vec![0.0; n]; d])),
            TransformRule::Covariant => {
                let q = q_values(metric, grid, mu)?;
                let dq = if exact {
                    Some(
                        grid.active()
                            .iter()
                            .map(|&nu| factor_gradient(metric, grid, mu, nu, &q, false))
                            .collect::<Result<Vec<_>>>()?,
                    )
                } else {
                    None
                };
                (q, dq)
            }
        };
        let dud = g.d_u_dagger(mu)?;
        let values: Vec<CMat> = (0..n)
            .map(|s| {
                let u = &g.values[s];
                let conj = u.matmul(&a.value(mu, s)).matmul(&u.dagger());
                conj.add(&u.matmul(&dud[s]).scale(inv_ie * c[s]))
            })
            .collect();
        let field = match (exact, dc) {
            (true, Some(dc)) => {
                let gu = g.gradients.as_ref().expect("exact");
                let hu = g.hessians.as_ref().expect("exact");
                let mu_axis = grid.axis_or_err(mu)?;
                let grads = (0..d)
                    .map(|ax| {
                        let nu = grid.active()[ax];
                        let da = a.derivative(mu, nu)?;
                        Ok((0..n)
                            .map(|s| {
                                let u = &g.values[s];
                                let ud = u.dagger();
                                let am = a.value(mu, s);
                                let du = &gu[ax][s];
                                let conj = du
                                    .matmul(&am)
                                    .matmul(&ud)
                                    .add(&u.matmul(&da[s]).matmul(&ud))
                                    .add(&u.matmul(&am).matmul(&du.dagger()));
                                let inhom = u.matmul(&dud[s]).scale(inv_ie * dc[ax][s]);
                                let d_inhom = du
                                    .matmul(&gu[mu_axis][s].dagger())
                                    .add(&u.matmul(&hu[ax][mu_axis][s].dagger()))
                                    .scale(inv_ie * c[s]);
                                conj.add(&inhom).add(&d_inhom)
                            })
                            .collect())
                    })
                    .collect::<Result<Vec<Vec<CMat>>>>()?;
                Field::with_gradients(grid.clone(), values, grads)?
            }
            _ => Field::new(grid.clone(), values)?,
        };
        comps.push((mu, field));
    }
    GaugeConfig::new(a.group, grid.clone(), comps)
}

/// The undeformed law `A' = U A U† + (1/ie) U ∂U†` (abelian: `A − ∂α`).
pub fn transform_paper_literal(e: f64, a: &GaugeConfig, g: &GaugeTransformation) -> Result<GaugeConfig> {
    // the metric only enters the covariant rule
    transform(&DiagonalMetric::minkowski(), e, a, g, TransformRule::Literal)
}

/// The law under which `D_μ → U D_μ U†` exactly (abelian: `A − √|g^μμ| ∂α`).
pub fn transform_covariant(
    metric: &DiagonalMetric,
    e: f64,
    a: &GaugeConfig,
    g: &GaugeTransformation,
) -> Result<GaugeConfig> {
    transform(metric, e, a, g, TransformRule::Covariant)
}

/// `max_{μ,x} ‖D'_μ(Uψ) − U D_μ ψ‖` with `A'` from the chosen rule.
pub fn covariance_residual(
    metric: &DiagonalMetric,
    e: f64,
    a: &GaugeConfig,
    g: &GaugeTransformation,
    rule: TransformRule,
    psi: &Field<CVec>,
) -> Result<f64> {
    let a2 = transform(metric, e, a, g, rule)?;
    let psi2 = g.apply(psi);
    let mut worst = 0.0f64;
    for &mu in a.grid().active() {
        let lhs = covariant_apply(metric, e, &a2, mu, &psi2)?;
        let rhs = g.apply(&covariant_apply(metric, e, a, mu, psi)?);
        worst = worst.max(lhs.max_diff(&rhs));
    }
    Ok(worst)
}

/// Size of the discrete product-rule defect
/// `max_{μ,x} ‖δ_μ(Uψ) − (δ_μ U)ψ − U δ_μ ψ‖`: the level below which no
/// stencil-based covariance test can go.
pub fn discretization_floor(g: &GaugeTransformation, psi: &Field<CVec>) -> Result<f64> {
    let g = g.clone().into_stencil();
    let psi = psi.clone().into_stencil();
    let upsi = g.apply(&psi);
    let mut worst = 0.0f64;
    for &mu in g.grid.active() {
        let d_upsi = stencil_diff(&upsi, mu)?;
        let du = g.d_u(mu)?;
        let dpsi = stencil_diff(&psi, mu)?;
        for s in 0..g.grid.site_count() {
            let split = CVec(du[s].act(&psi.at(s).0)).add(&CVec(g.values[s].act(&dpsi.at(s).0)));
            worst = worst.max(d_upsi.at(s).sub(&split).max_abs());
        }
    }
    Ok(worst)
}

const DIRECTION_NAMES: [&str; 4] = ["0", "x", "y", "z"];

/// `F_μν` in symbolic form: entry `(μ, ν)` is `ie · h_μ h_ν · F_μν` with the
/// scale factors written as powers of the deformation parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolicFieldStrength {
    pub label: String,
    pub case_id: String,
    /// `h_μ`, `None` for inactive directions.
    pub h: [Option<SymbolicCoeff>; 4],
}

impl SymbolicFieldStrength {
    pub fn for_case(label: impl Into<String>, case_id: &str) -> Result<Self> {
        let case = find_case(case_id)?;
        Ok(Self { label: label.into(), case_id: case_id.to_string(), h: expected_h_coeffs(&case) })
    }

    /// `h_μ h_ν` for an active off-diagonal pair.
    pub fn coefficient(&self, mu: usize, nu: usize) -> Option<SymbolicCoeff> {
        if mu == nu {
            return None;
        }
        Some(self.h[mu]? * self.h[nu]?)
    }

    /// Entry text in the table layout, e.g. `ie*q^(-3/4)*F_0y` or
    /// `-ie*F_0x`; `0` off the active block and on the diagonal.
    pub fn entry(&self, mu: usize, nu: usize) -> String {
        let Some(c) = self.coefficient(mu, nu) else {
            return "0".to_string();
        };
        let (lo, hi, sign) = if mu < nu { (mu, nu, "") } else { (nu, mu, "-") };
        let token = format!("F_{}{}", DIRECTION_NAMES[lo], DIRECTION_NAMES[hi]);
        match c.magnitude_text() {
            Some(m) => format!("{sign}ie*{m}*{token}"),
            None => format!("{sign}ie*{token}"),
        }
    }

    pub fn matrix(&self) -> [[String; 4]; 4] {
        std::array::from_fn(|mu| std::array::from_fn(|nu| self.entry(mu, nu)))
    }
}

/// The four constant-background examples: the first new-q relation in M1
/// with `(α, β) = (1, 1)` and in M2 with `(1, 2)`, the q-generalized
/// algebra, and the q-ħ case `j = k = 1`.
pub fn example_matrices() -> Vec<SymbolicFieldStrength> {
    [("1", "new1.M1.a1b1"), ("2", "new1.M2.a1b2"), ("3", "qgen"), ("4", "qhbar.j1k1")]
        .into_iter()
        .map(|(label, id)| SymbolicFieldStrength::for_case(label, id).expect("catalog case"))
        .collect()
}

/// `U X U†` for a Lie-algebra value.
pub fn conjugate(u: &CMat, x: &CMat) -> CMat {
    u.matmul(x).matmul(&u.dagger())
}
