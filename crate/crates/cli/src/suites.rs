//! Invariant suites behind `verify`.

use mdgauge::catalog::{metric_for, supported_cases};
use mdgauge::clifford::ETA;
use mdgauge::gauge::{covariance_residual, field_strength_closed_form, transform};
use mdgauge::lattice::action::{fermion_action, total_action, ym_action};
use mdgauge::lattice::central_diff;
use mdgauge::qdirac::{verify_box_identity, BOX_TOLERANCE};
use mdgauge::{
    anticommutator, standard_gamma_set, Algebra, CMat, ComplexMatrix4, DiagonalMetric, GaugeConfig, Grid, Linear,
    TransformRule, C64,
};
use serde_json::json;

use crate::commands::{order_checks, refinement_residuals, SHIFT_TOLERANCE};
use crate::report::{Check, Report, LITERAL_RULE_TAG};
use crate::{CliError, Resolved, Suite};

pub const CLIFFORD_TOLERANCE: f64 = 1e-12;
pub const REDUCTION_TOLERANCE: f64 = 1e-12;
pub const COVARIANCE_TOLERANCE: f64 = 1e-10;
pub const BOX_Q_VALUES: [f64; 3] = [2.0, 0.5, 5.0];
pub const ACTION_SEEDS: u64 = 5;

pub fn verify(r: &Resolved, suite: Suite) -> Result<Report, CliError> {
    let mut checks = Vec::new();
    let run = |s: Suite| suite == s || suite == Suite::All;
    if run(Suite::Clifford) {
        checks.extend(clifford());
    }
    if run(Suite::Boxsq) {
        checks.extend(boxsq(r)?);
    }
    if run(Suite::Fieldstrength) {
        checks.extend(fieldstrength(r)?);
    }
    if run(Suite::Gauge) {
        checks.extend(gauge(r)?);
    }
    if run(Suite::Actions) {
        checks.extend(actions(r)?);
    }
    let name = format!("{suite:?}").to_lowercase();
    let data = json!({ "suite": name, "metric": r.metric.label, "group": r.group.to_string() });
    Ok(Report::new("verify", &r.hash, checks, data))
}

/// `{γ^μ, γ^ν} = 2η^μν 𝟙` for all 16 ordered pairs.
pub fn clifford() -> Vec<Check> {
    let g = standard_gamma_set();
    let mut checks = Vec::new();
    for mu in 0..4 {
        for nu in 0..4 {
            let expected = if mu == nu { ComplexMatrix4::identity().scale_real(2.0 * ETA[mu]) } else { ComplexMatrix4::zero() };
            let residual = anticommutator(&g.gamma[mu], &g.gamma[nu]).max_diff(&expected);
            checks.push(Check::at_most("clifford", format!("{{gamma^{mu}, gamma^{nu}}}"), residual, CLIFFORD_TOLERANCE));
        }
    }
    checks
}

/// `D_q² = □_q 𝟙` for every supported catalog case at each `q` in
/// [`BOX_Q_VALUES`], other parameters from the configuration.
pub fn boxsq(r: &Resolved) -> Result<Vec<Check>, CliError> {
    let gammas = standard_gamma_set();
    let mut checks = Vec::new();
    for case in supported_cases() {
        for q in BOX_Q_VALUES {
            let mut params = r.config.params.values();
            params.q = q;
            let metric = metric_for(&case, &params)?;
            let report = verify_box_identity(&metric, &gammas)?;
            checks.push(Check::at_most("boxsq", format!("{} q={q}", case.id), report.max_residual, BOX_TOLERANCE));
        }
    }
    Ok(checks)
}

fn sector_grid(metric: &DiagonalMetric) -> Result<Grid, CliError> {
    let sector = metric.effective_sector()?;
    let n = if sector.d_eff >= 4 { 6 } else { 8 };
    Ok(Grid::for_sector(&sector, n)?)
}

fn derivative(a: &GaugeConfig, nu: usize, mu: usize) -> Result<Vec<CMat>, CliError> {
    let n = a.grid().site_count();
    match a.component(nu) {
        Some(f) => Ok(central_diff(f, mu)?.values().to_vec()),
        None => Ok(vec![CMat::zeros(a.group().colors()); n]),
    }
}

/// Residuals of the constant-metric reduction on one configuration.
///
/// With constant `h`, `D_μ = h_μ(q_μ ∂_μ + ie A_μ)`, so the closed form must
/// equal `ie h_μ h_ν (q_μ ∂_μ A_ν − q_ν ∂_ν A_μ) − e² h_μ h_ν [A_μ, A_ν]`.
/// The second residual compares the gap to the plain-derivative expression
/// `ie h_μ h_ν (∂_μ A_ν − ∂_ν A_μ)` against its exact prediction.
pub fn reduction_residuals(metric: &DiagonalMetric, e: f64, a: &GaugeConfig) -> Result<(f64, f64, f64), CliError> {
    let f = field_strength_closed_form(metric, e, a)?;
    let ie = C64::new(0.0, e);
    let (mut rescaled, mut predicted, mut gap) = (0.0f64, 0.0f64, 0.0f64);
    for (mu, nu) in f.pairs() {
        let (hm, hn) = (metric.h_factor(mu, None)?, metric.h_factor(nu, None)?);
        let (qm, qn) = (metric.q_factor(mu, None)?, metric.q_factor(nu, None)?);
        let d_mu_an = derivative(a, nu, mu)?;
        let d_nu_am = derivative(a, mu, nu)?;
        for s in 0..a.grid().site_count() {
            let comm = if a.group().is_abelian() {
                CMat::zeros(1)
            } else {
                a.value(mu, s).commutator(&a.value(nu, s)).scale_real(e * e * hm * hn)
            };
            let got = f.component(mu, nu, s);
            let reference =
                d_mu_an[s].scale_real(qm).sub(&d_nu_am[s].scale_real(qn)).scale(ie * (hm * hn)).sub(&comm);
            rescaled = rescaled.max(got.sub(&reference).max_abs());
            let plain = d_mu_an[s].sub(&d_nu_am[s]).scale(ie * (hm * hn)).sub(&comm);
            let expected_gap =
                d_mu_an[s].scale_real(hn - hm * hn).sub(&d_nu_am[s].scale_real(hm - hm * hn)).scale(ie);
            let actual_gap = got.sub(&plain);
            predicted = predicted.max(actual_gap.sub(&expected_gap).max_abs());
            gap = gap.max(actual_gap.max_abs());
        }
    }
    Ok((rescaled, predicted, gap))
}

pub fn fieldstrength(r: &Resolved) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let g = &r.config.gauge;
    for case in supported_cases() {
        let metric = metric_for(&case, &r.config.params.values())?;
        let grid = sector_grid(&metric)?;
        let a = GaugeConfig::random(r.group, grid, r.gauge_seed(), 1, g.amplitude.max(0.1))?;
        let (rescaled, predicted, _) = reduction_residuals(&metric, r.e(), &a)?;
        checks.push(Check::at_most("fieldstrength", format!("{} constant reduction", case.id), rescaled, REDUCTION_TOLERANCE));
        checks.push(Check::at_most(
            "fieldstrength",
            format!("{} plain-derivative gap", case.id),
            predicted,
            REDUCTION_TOLERANCE,
        ));
    }
    let residuals = refinement_residuals(r, r.gauge_seed(), r.spinor_seed())?;
    checks.extend(order_checks("fieldstrength", "oracle", &r.refinements, &residuals));
    Ok(checks)
}

/// Covariance of `D_μ` and of `F_μν` under the configured law, with exact
/// derivatives so the only error is rounding.
pub fn gauge(r: &Resolved) -> Result<Vec<Check>, CliError> {
    let rule = r.config.transform.rule;
    let a = r.gauge()?;
    let g = r.transformation()?;
    let nc = r.group.colors();
    let psi = mdgauge::lattice::random::random_vector_field(&r.grid, r.spinor_seed(), r.config.spinor.band_limit, nc)?;
    let tag = |c: Check| if rule == TransformRule::Literal { c.tagged(LITERAL_RULE_TAG) } else { c };
    let cov = covariance_residual(&r.metric, r.e(), &a, &g, rule, &psi)?;
    let name = format!("{rule:?} rule: covariant derivative").to_lowercase();
    let mut checks = vec![tag(Check::at_most("gauge", name, cov, COVARIANCE_TOLERANCE))];
    let a2 = transform(&r.metric, r.e(), &a, &g, rule)?;
    let f2 = field_strength_closed_form(&r.metric, r.e(), &a2)?;
    let f1 = field_strength_closed_form(&r.metric, r.e(), &a)?.conjugated(&g);
    let name = format!("{rule:?} rule: field strength conjugation").to_lowercase();
    checks.push(tag(Check::at_most("gauge", name, f2.max_diff(&f1), COVARIANCE_TOLERANCE)));
    checks.push(Check::at_most("gauge", "unitarity", g.unitarity_defect(), mdgauge::gauge::UNITARITY_TOLERANCE));
    Ok(checks)
}

/// Relative action shifts over [`ACTION_SEEDS`] seeded configurations.
pub fn actions(r: &Resolved) -> Result<Vec<Check>, CliError> {
    let rule = r.config.transform.rule;
    let gammas = standard_gamma_set();
    let (e, m) = (r.e(), r.mass());
    let mut checks = Vec::new();
    for k in 0..ACTION_SEEDS {
        let a = r.gauge_with_seed(&r.grid, r.gauge_seed() + 10 * k)?;
        let psi = mdgauge::lattice::random::random_spinor_field(
            &r.grid,
            r.spinor_seed() + 10 * k,
            r.config.spinor.band_limit,
            r.group.colors(),
        )?;
        let g = r.transformation_with_seed(r.transform_seed() + 10 * k)?;
        let a2 = transform(&r.metric, e, &a, &g, rule)?;
        let psi2 = g.apply(&psi);
        let pairs = [
            ("yang_mills", ym_action(&r.metric, e, &a, &r.grid)?, ym_action(&r.metric, e, &a2, &r.grid)?),
            (
                "fermion",
                fermion_action(&r.metric, &gammas, e, &a, &psi, m, &r.grid)?,
                fermion_action(&r.metric, &gammas, e, &a2, &psi2, m, &r.grid)?,
            ),
            (
                "total",
                total_action(&r.metric, &gammas, e, &a, &psi, m, &r.grid)?,
                total_action(&r.metric, &gammas, e, &a2, &psi2, m, &r.grid)?,
            ),
        ];
        for (name, before, after) in pairs {
            let shift = before.with_shift(&after).relative_shift().unwrap_or(f64::NAN);
            let mut c = Check::at_most("actions", format!("{name} seed {k}"), shift, SHIFT_TOLERANCE);
            if rule == TransformRule::Literal {
                c = c.tagged(LITERAL_RULE_TAG);
            }
            checks.push(c);
            let d = (after.directions.len() as f64 - r.sector.d_eff as f64).abs();
            if k == 0 {
                checks.push(Check::at_most("actions", format!("{name} integrates over d_eff directions"), d, 0.0));
            }
        }
    }
    Ok(checks)
}
