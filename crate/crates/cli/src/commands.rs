//! `tables`, `field-strength`, `action` and `oracle-convergence`.

use std::path::Path;

use mdgauge::gauge::{field_strength_closed_form, oracle_residual, transform};
use mdgauge::lattice::action::{fermion_action, total_action, ym_action};
use mdgauge::lattice::convergence_orders;
use mdgauge::lattice::random::random_vector_field;
use mdgauge::tables::{build_all, build_table, TableFormat};
use mdgauge::{standard_gamma_set, ActionReport, Linear, TableDocument, TransformRule};
use serde_json::{json, Value};

use crate::report::{Check, Report, LITERAL_RULE_TAG};
use crate::{ActionKind, CliError, Output, OutputFormat, Resolved};

/// Convergence orders must fall in `2 ± ORDER_BAND`.
pub const ORDER_BAND: f64 = 0.2;
/// Below this every refinement is exact and no order is defined.
pub const EXACT_RESIDUAL: f64 = 1e-12;
pub const SHIFT_TOLERANCE: f64 = 1e-10;

fn table_format(f: OutputFormat) -> TableFormat {
    match f {
        OutputFormat::Json => TableFormat::Json,
        OutputFormat::Markdown => TableFormat::Markdown,
        OutputFormat::Csv => TableFormat::Csv,
    }
}

pub fn tables(which: &str, format: OutputFormat, check: Option<&Path>, to_dir: bool) -> Result<Output, CliError> {
    let docs: Vec<TableDocument> = if which == "all" { build_all() } else { vec![build_table(which)?] };
    let fmt = table_format(format);
    let files: Vec<(String, String)> =
        docs.iter().map(|d| (format!("{}.{}", d.id, fmt.extension()), d.render(fmt))).collect();
    if let Some(dir) = check {
        let mut lines = Vec::new();
        let mut pass = true;
        for (name, text) in &files {
            let line = match std::fs::read_to_string(dir.join(name)) {
                Ok(golden) if golden == *text => format!("ok {name}"),
                Ok(golden) => {
                    pass = false;
                    let at = golden.lines().zip(text.lines()).position(|(a, b)| a != b);
                    let at = at.unwrap_or_else(|| golden.lines().count().min(text.lines().count()));
                    format!("DIFF {name} at line {}", at + 1)
                }
                Err(_) => {
                    pass = false;
                    format!("MISSING {name}")
                }
            };
            lines.push(line);
        }
        lines.push(String::new());
        return Ok(Output { files: vec![("tables-check.txt".into(), lines.join("\n"))], pass });
    }
    if !to_dir && fmt == TableFormat::Json && docs.len() > 1 {
        let mut s = serde_json::to_string_pretty(&docs).expect("tables serialize");
        s.push('\n');
        return Ok(Output { files: vec![("tables.json".into(), s)], pass: true });
    }
    Ok(Output { files, pass: true })
}

/// Closed-form-vs-oracle residuals over the refinement grids, in stencil mode.
pub fn refinement_residuals(r: &Resolved, gauge_seed: u64, vector_seed: u64) -> Result<Vec<f64>, CliError> {
    let nc = r.group.colors();
    r.refinements
        .iter()
        .map(|&n| {
            let grid = r.refined_grid(n)?;
            r.metric.validate_on(&grid)?;
            let a = r.gauge_with_seed(&grid, gauge_seed)?.into_stencil();
            let f = random_vector_field(&grid, vector_seed, r.config.spinor.band_limit, nc)?.into_stencil();
            Ok(oracle_residual(&r.metric, r.e(), &a, &f)?)
        })
        .collect()
}

/// Either one exactness check or one order check per refinement step.
pub fn order_checks(suite: &str, label: &str, sizes: &[usize], residuals: &[f64]) -> Vec<Check> {
    if residuals.iter().all(|&e| e <= EXACT_RESIDUAL) {
        let worst = residuals.iter().copied().fold(0.0, f64::max);
        return vec![Check::at_most(suite, format!("{label} exact"), worst, EXACT_RESIDUAL)];
    }
    convergence_orders(residuals)
        .into_iter()
        .zip(sizes.windows(2))
        .map(|(p, w)| {
            let mut c = Check::at_most(suite, format!("{label} order {}->{}", w[0], w[1]), (p - 2.0).abs(), ORDER_BAND);
            c.pass = c.pass && p.is_finite();
            c
        })
        .collect()
}

pub fn field_strength(r: &Resolved) -> Result<Report, CliError> {
    let a = r.gauge()?;
    let f = field_strength_closed_form(&r.metric, r.e(), &a)?;
    let sites = r.grid.site_count();
    let mut max_abs = [[0.0f64; 4]; 4];
    for (mu, row) in max_abs.iter_mut().enumerate() {
        for (nu, cell) in row.iter_mut().enumerate() {
            *cell = (0..sites).map(|s| f.component(mu, nu, s).max_abs()).fold(0.0, f64::max);
        }
    }
    let planes: Vec<Value> = f
        .pairs()
        .into_iter()
        .map(|(mu, nu)| {
            let values: Vec<Vec<[f64; 2]>> =
                (0..sites).map(|s| f.component(mu, nu, s).data().iter().map(|z| [z.re, z.im]).collect()).collect();
            json!({ "mu": mu, "nu": nu, "values": values })
        })
        .collect();
    let mut checks = Vec::new();
    let oracle = if r.from_file() {
        let nc = r.group.colors();
        let v = random_vector_field(&r.grid, r.spinor_seed(), r.config.spinor.band_limit, nc)?.into_stencil();
        let residual = oracle_residual(&r.metric, r.e(), &a.clone().into_stencil(), &v)?;
        json!({ "sizes": [r.grid.extents()], "residuals": [residual], "orders": [] })
    } else {
        let sizes = &r.refinements;
        let residuals = refinement_residuals(r, r.gauge_seed(), r.spinor_seed())?;
        checks = order_checks("fieldstrength", "oracle", sizes, &residuals);
        json!({ "sizes": sizes, "residuals": residuals, "orders": convergence_orders(&residuals) })
    };
    let data = json!({
        "metric": r.metric.label,
        "active": r.grid.active(),
        "extents": r.grid.extents(),
        "group": r.group.to_string(),
        "max_abs": max_abs,
        "planes": planes,
        "oracle": oracle,
    });
    Ok(Report::new("field-strength", &r.hash, checks, data))
}

pub fn action(r: &Resolved, kind: ActionKind, gauge_check: bool) -> Result<Report, CliError> {
    let gammas = standard_gamma_set();
    let (e, m) = (r.e(), r.mass());
    let eval = |a: &mdgauge::GaugeConfig, psi: &mdgauge::Field<mdgauge::CVec>| -> Result<Vec<(&str, ActionReport)>, CliError> {
        let mut out = Vec::new();
        if matches!(kind, ActionKind::Ym | ActionKind::All) {
            out.push(("yang_mills", ym_action(&r.metric, e, a, &r.grid)?));
        }
        if matches!(kind, ActionKind::Fermion | ActionKind::All) {
            out.push(("fermion", fermion_action(&r.metric, &gammas, e, a, psi, m, &r.grid)?));
        }
        if matches!(kind, ActionKind::Total | ActionKind::All) {
            out.push(("total", total_action(&r.metric, &gammas, e, a, psi, m, &r.grid)?));
        }
        Ok(out)
    };
    let a = r.gauge()?;
    let psi = r.spinor()?;
    let mut reports = eval(&a, &psi)?;
    let mut checks = Vec::new();
    for (name, rep) in &reports {
        let scale = rep.value.norm().max(1.0);
        checks.push(Check::at_most("action", format!("{name} breakdown"), rep.breakdown_residual(), 1e-12 * scale));
        let d = (rep.directions.len() as f64 - r.sector.d_eff as f64).abs();
        checks.push(Check::at_most("action", format!("{name} integrates over d_eff directions"), d, 0.0));
    }
    let rule = r.config.transform.rule;
    if gauge_check {
        let g = r.transformation()?;
        let a2 = transform(&r.metric, e, &a, &g, rule)?;
        let after = eval(&a2, &g.apply(&psi))?;
        for ((name, rep), (_, post)) in reports.iter_mut().zip(&after) {
            *rep = rep.clone().with_shift(post);
            let shift = rep.relative_shift().unwrap_or(f64::NAN);
            let mut c = Check::at_most("action", format!("{name} relative gauge shift"), shift, SHIFT_TOLERANCE);
            if rule == TransformRule::Literal {
                c = c.tagged(LITERAL_RULE_TAG);
            }
            checks.push(c);
        }
    }
    let mut data = serde_json::Map::new();
    data.insert("metric".into(), json!(r.metric.label));
    data.insert("group".into(), json!(r.group.to_string()));
    data.insert("rule".into(), json!(rule));
    for (name, rep) in reports {
        data.insert(name.into(), serde_json::to_value(rep).expect("report serializes"));
    }
    Ok(Report::new("action", &r.hash, checks, Value::Object(data)))
}

pub fn oracle_convergence(r: &Resolved, seeds: u64) -> Result<Report, CliError> {
    if seeds == 0 {
        return Err(CliError::Config("oracle-convergence needs at least one seed".into()));
    }
    let sizes = &r.refinements;
    let mut checks = Vec::new();
    let mut runs = Vec::new();
    for k in 0..seeds {
        let residuals = refinement_residuals(r, r.gauge_seed() + k, r.spinor_seed() + k)?;
        checks.extend(order_checks("oracle", &format!("seed {}", r.gauge_seed() + k), sizes, &residuals));
        runs.push(json!({
            "gauge_seed": r.gauge_seed() + k,
            "residuals": residuals,
            "orders": convergence_orders(&residuals),
        }));
    }
    let extents = r.refined_grid(sizes[0])?.extents().to_vec();
    let data = json!({
        "metric": r.metric.label,
        "active": r.grid.active(),
        "coarsest_extents": extents,
        "sizes": sizes,
        "runs": runs,
    });
    Ok(Report::new("oracle-convergence", &r.hash, checks, data))
}
