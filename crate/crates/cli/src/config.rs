//! Run configuration: one TOML document, validated in full before any
//! command executes.
//!
//! ```toml
//! seed = 7
//!
//! [metric]
//! case = "qhbar.j1k1"          # or: components = [1, -1, 0, { expr = "cosine", ... }]
//!
//! [params]
//! q = 4.0
//!
//! [grid]
//! n = 16
//! refinements = [16, 32, 64]
//!
//! [gauge]
//! group = "su2"
//! band_limit = 1
//! amplitude = 0.5
//!
//! [physics]
//! e = 1.0
//! mass = 1.0
//! ```

use std::path::{Path, PathBuf};

use mdgauge::catalog::{find_case, metric_for, CaseParams};
use mdgauge::lattice::io::{read_gauge, read_spinor};
use mdgauge::lattice::random::{check_band_limit, random_spinor_field};
use mdgauge::{
    CVec, DiagonalMetric, EffectiveSector, Field, FieldExpr, GaugeConfig, GaugeGroup, GaugeTransformation, Grid,
    MetricComponent, TransformRule,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentSpec {
    Number(f64),
    Expr(FieldExpr),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricSpec {
    /// Catalog case id such as `new1.M1.a1b1`.
    pub case: Option<String>,
    /// `g^00 .. g^33`, each a number or an analytic expression.
    pub components: Option<[ComponentSpec; 4]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParamSpec {
    pub q: f64,
    pub n: f64,
    pub m: f64,
    pub l: f64,
    pub psi: f64,
    pub phi: f64,
    pub hbar: f64,
}

impl Default for ParamSpec {
    fn default() -> Self {
        let d = CaseParams::default();
        Self { q: d.q, n: d.n, m: d.m, l: d.l, psi: d.psi, phi: d.phi, hbar: d.hbar }
    }
}

impl ParamSpec {
    pub fn values(&self) -> CaseParams {
        CaseParams { q: self.q, n: self.n, m: self.m, l: self.l, psi: self.psi, phi: self.phi, hbar: self.hbar }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
#[derive(Default)]
pub struct GridSpec {
    /// Points along every active direction.
    pub n: Option<usize>,
    /// Points per active direction; an extent of 1 freezes that direction.
    pub extents: Option<Vec<usize>>,
    /// Successively doubled sizes for convergence studies, default 16, 32,
    /// 64. Only the first two non-frozen directions are refined; any others
    /// are frozen on the refinement grids.
    pub refinements: Option<Vec<usize>>,
}


#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GaugeSpec {
    pub group: String,
    pub seed: Option<u64>,
    pub band_limit: usize,
    pub amplitude: f64,
    /// Use `A = 0`.
    pub zero: bool,
    /// Field file, relative to the config document.
    pub file: Option<PathBuf>,
}

impl Default for GaugeSpec {
    fn default() -> Self {
        Self { group: "u1".into(), seed: None, band_limit: 1, amplitude: 0.5, zero: false, file: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpinorSpec {
    pub seed: Option<u64>,
    pub band_limit: usize,
    pub zero: bool,
    pub file: Option<PathBuf>,
}

impl Default for SpinorSpec {
    fn default() -> Self {
        Self { seed: None, band_limit: 1, zero: false, file: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TransformSpec {
    pub seed: Option<u64>,
    pub band_limit: usize,
    pub rule: TransformRule,
}

impl Default for TransformSpec {
    fn default() -> Self {
        Self { seed: None, band_limit: 1, rule: TransformRule::Covariant }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicsSpec {
    pub e: f64,
    pub mass: f64,
}

impl Default for PhysicsSpec {
    fn default() -> Self {
        Self { e: 1.0, mass: 1.0 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Base seed; gauge, spinor and transformation seeds default to
    /// `seed`, `seed + 1` and `seed + 2`.
    pub seed: u64,
    pub metric: MetricSpec,
    pub params: ParamSpec,
    pub grid: GridSpec,
    pub gauge: GaugeSpec,
    pub spinor: SpinorSpec,
    pub transform: TransformSpec,
    pub physics: PhysicsSpec,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }
}

/// A configuration that passed validation, with everything it refers to
/// already built.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub config: RunConfig,
    pub metric: DiagonalMetric,
    pub sector: EffectiveSector,
    pub grid: Grid,
    pub group: GaugeGroup,
    pub refinements: Vec<usize>,
    pub hash: String,
    gauge_file: Option<GaugeConfig>,
    spinor_file: Option<Field<CVec>>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl Resolved {
    /// Validates `config`; relative field-file paths resolve against `base`.
    pub fn new(config: RunConfig, base: &Path) -> Result<Self, CliError> {
        let params = config.params.values();
        let metric = match (&config.metric.case, &config.metric.components) {
            (Some(_), Some(_)) => return Err(bad("metric: give either `case` or `components`, not both")),
            (Some(id), None) => metric_for(&find_case(id)?, &params)?,
            (None, Some(c)) => {
                let comps = c.clone().map(|s| match s {
                    ComponentSpec::Number(v) => MetricComponent::Constant(v),
                    ComponentSpec::Expr(e) => MetricComponent::Analytic(e),
                });
                DiagonalMetric::new(comps, "custom")?
            }
            (None, None) => DiagonalMetric::minkowski(),
        };
        let sector = metric.effective_sector()?;
        let grid = match (config.grid.n, &config.grid.extents) {
            (Some(_), Some(_)) => return Err(bad("grid: give either `n` or `extents`, not both")),
            (Some(n), None) => Grid::for_sector(&sector, n)?,
            (None, Some(ext)) => {
                if ext.len() != sector.d_eff {
                    return Err(bad(format!(
                        "grid: {} extents given for {} active directions {:?}",
                        ext.len(),
                        sector.d_eff,
                        sector.active_indices
                    )));
                }
                Grid::periodic_2pi(sector.active_indices.clone(), ext.clone())?
            }
            (None, None) => Grid::default_for_sector(&sector)?,
        };
        metric.validate_on(&grid)?;
        let refinements = config.grid.refinements.clone().unwrap_or_else(|| DEFAULT_REFINEMENTS.to_vec());
        if refinements.len() < 2 || refinements.windows(2).any(|w| w[1] != 2 * w[0]) {
            return Err(bad("grid: refinements need at least two sizes, each double the previous"));
        }
        let group = GaugeGroup::parse(&config.gauge.group)
            .ok_or_else(|| bad(format!("gauge: unknown group `{}`", config.gauge.group)))?;
        let physics = &config.physics;
        if !physics.e.is_finite() || !physics.mass.is_finite() {
            return Err(bad("physics: e and mass must be finite"));
        }
        if !(config.gauge.amplitude.is_finite() && config.gauge.amplitude >= 0.0) {
            return Err(bad("gauge: amplitude must be finite and non-negative"));
        }
        for (what, band) in [
            ("gauge", config.gauge.band_limit),
            ("spinor", config.spinor.band_limit),
            ("transform", config.transform.band_limit),
        ] {
            check_band_limit(&grid, band).map_err(|e| bad(format!("{what}: {e}")))?;
            let coarsest = refined(&grid, refinements[0])?;
            check_band_limit(&coarsest, band).map_err(|e| bad(format!("{what} on refinement grid: {e}")))?;
        }
        let mut hasher = Sha256::new();
        hasher.update(serde_json::to_vec(&config).expect("config serializes"));
        let gauge_file = match &config.gauge.file {
            Some(p) => {
                let text = read_file(&base.join(p))?;
                hasher.update(text.as_bytes());
                let (a, header) = read_gauge(&text)?;
                if header.group != Some(group) || !header.grid.same_shape(&grid) {
                    return Err(bad(format!("gauge: {} does not match the configured group and grid", p.display())));
                }
                a.check_metric(&metric)?;
                Some(a)
            }
            None => None,
        };
        let spinor_file = match &config.spinor.file {
            Some(p) => {
                let text = read_file(&base.join(p))?;
                hasher.update(text.as_bytes());
                let (psi, header) = read_spinor(&text)?;
                if header.width != Some(4 * group.colors()) || !header.grid.same_shape(&grid) {
                    return Err(bad(format!("spinor: {} does not match the configured group and grid", p.display())));
                }
                Some(psi)
            }
            None => None,
        };
        let hash = hex::encode(hasher.finalize());
        Ok(Self { config, metric, sector, grid, group, refinements, hash, gauge_file, spinor_file })
    }

    pub fn e(&self) -> f64 {
        self.config.physics.e
    }

    pub fn mass(&self) -> f64 {
        self.config.physics.mass
    }

    pub fn gauge_seed(&self) -> u64 {
        self.config.gauge.seed.unwrap_or(self.config.seed)
    }

    pub fn spinor_seed(&self) -> u64 {
        self.config.spinor.seed.unwrap_or(self.config.seed + 1)
    }

    pub fn transform_seed(&self) -> u64 {
        self.config.transform.seed.unwrap_or(self.config.seed + 2)
    }

    pub fn from_file(&self) -> bool {
        self.gauge_file.is_some() || self.spinor_file.is_some()
    }

    /// Gauge field on the configured grid.
    pub fn gauge(&self) -> Result<GaugeConfig, CliError> {
        if let Some(a) = &self.gauge_file {
            return Ok(a.clone());
        }
        self.gauge_on(&self.grid)
    }

    /// Seeded gauge field on any grid over the same directions.
    pub fn gauge_on(&self, grid: &Grid) -> Result<GaugeConfig, CliError> {
        self.gauge_with_seed(grid, self.gauge_seed())
    }

    pub fn gauge_with_seed(&self, grid: &Grid, seed: u64) -> Result<GaugeConfig, CliError> {
        let g = &self.config.gauge;
        if g.zero {
            return Ok(GaugeConfig::zero(self.group, grid.clone()));
        }
        Ok(GaugeConfig::random(self.group, grid.clone(), seed, g.band_limit, g.amplitude)?)
    }

    pub fn spinor(&self) -> Result<Field<CVec>, CliError> {
        if let Some(psi) = &self.spinor_file {
            return Ok(psi.clone());
        }
        self.spinor_on(&self.grid)
    }

    pub fn spinor_on(&self, grid: &Grid) -> Result<Field<CVec>, CliError> {
        let s = &self.config.spinor;
        if s.zero {
            return Ok(Field::constant(grid.clone(), CVec::zeros(4 * self.group.colors())));
        }
        Ok(random_spinor_field(grid, self.spinor_seed(), s.band_limit, self.group.colors())?)
    }

    pub fn transformation(&self) -> Result<GaugeTransformation, CliError> {
        self.transformation_with_seed(self.transform_seed())
    }

    pub fn transformation_with_seed(&self, seed: u64) -> Result<GaugeTransformation, CliError> {
        let band = self.config.transform.band_limit;
        Ok(GaugeTransformation::random(self.group, self.grid.clone(), seed, band, self.e())?)
    }

    /// The configured grid with every non-frozen extent set to `n`.
    pub fn refined_grid(&self, n: usize) -> Result<Grid, CliError> {
        refined(&self.grid, n)
    }
}

pub const DEFAULT_REFINEMENTS: [usize; 3] = [16, 32, 64];
/// Directions refined in convergence studies.
pub const MAX_REFINED: usize = 2;

fn refined(grid: &Grid, n: usize) -> Result<Grid, CliError> {
    let mut dynamic = 0;
    let ext = grid
        .extents()
        .iter()
        .map(|&e| {
            if e == 1 || dynamic == MAX_REFINED {
                return 1;
            }
            dynamic += 1;
            n
        })
        .collect();
    Ok(Grid::periodic_2pi(grid.active().to_vec(), ext)?)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_uses_defaults() {
        let c = RunConfig::from_toml("").unwrap();
        assert_eq!(c, RunConfig::default());
        let r = Resolved::new(c, Path::new(".")).unwrap();
        assert_eq!(r.sector.d_eff, 4);
        assert_eq!(r.grid.extents(), &[8, 8, 8, 8]);
        assert_eq!(r.group, GaugeGroup::U1);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(matches!(RunConfig::from_toml("sed = 1"), Err(CliError::Config(_))));
        assert!(matches!(RunConfig::from_toml("[gauge]\ncolour = 2"), Err(CliError::Config(_))));
    }

    #[test]
    fn mixed_components_parse() {
        let c = RunConfig::from_toml(
            "[metric]\ncomponents = [{ expr = \"cosine\", offset = 1.0, amplitude = 0.5, direction = 1, \
             wavenumber = 1.0 }, -1, 0, 0]\n[grid]\nn = 8",
        )
        .unwrap();
        let r = Resolved::new(c, Path::new(".")).unwrap();
        assert_eq!(r.sector.active_indices, vec![0, 1]);
        assert!(!r.metric.is_constant());
    }

    #[test]
    fn inconsistent_documents_rejected() {
        let cases = [
            "[metric]\ncase = \"nope\"",
            "[metric]\ncase = \"qhbar.j1k1\"\ncomponents = [1, -1, 0, 0]",
            "[params]\nq = 1.0\n[metric]\ncase = \"qgen\"",
            "[grid]\nextents = [4, 4]",
            "[grid]\nrefinements = [16, 24]",
            "[gauge]\ngroup = \"so3\"",
            "[grid]\nn = 4\n[gauge]\nband_limit = 2",
            "[metric]\ncase = \"qhbar.j1k2\"",
        ];
        for text in cases {
            let c = RunConfig::from_toml(text).unwrap();
            assert!(Resolved::new(c, Path::new(".")).is_err(), "{text}");
        }
    }

    #[test]
    fn hash_tracks_content() {
        let a = Resolved::new(RunConfig::default(), Path::new(".")).unwrap();
        let mut c = RunConfig::default();
        c.seed = 1;
        let b = Resolved::new(c, Path::new(".")).unwrap();
        assert_eq!(a.hash.len(), 64);
        assert_ne!(a.hash, b.hash);
        assert_eq!(a.hash, Resolved::new(RunConfig::default(), Path::new(".")).unwrap().hash);
    }
}
