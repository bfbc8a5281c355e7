//! Seeded band-limited random fields.
//!
//! Every field is a finite Fourier series with integer wave vectors
//! `|k_a| ≤ band_limit`, so it is smooth, exactly periodic and has exact
//! derivatives of every order. The mode list and the draw order depend only
//! on the band limit and on which axes are frozen (extent 1), never on the
//! grid extent: refining a grid resamples the same function.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, Grid};
use crate::clifford::C64;
use crate::error::{Error, Result};
use crate::lie::{su_generators, CMat, CVec, GaugeGroup, Linear};

#[derive(Debug, Clone, PartialEq)]
struct Mode {
    /// Angular wavenumber per grid axis, `2π k_a / L_a`.
    wave: Vec<f64>,
    cos: f64,
    sin: f64,
}

/// `Σ_k c_k cos(k·x) + s_k sin(k·x)` over the grid axes.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    modes: Vec<Mode>,
}

/// Rejects band limits that alias on the grid (`2·band ≥ extent` on any non-frozen axis).
pub fn check_band_limit(grid: &Grid, band_limit: usize) -> Result<()> {
    for (axis, &n) in grid.extents().iter().enumerate() {
        if n > 1 && 2 * band_limit >= n {
            return Err(Error::BandLimitTooHigh { mu: grid.active()[axis], extent: n, band_limit });
        }
    }
    Ok(())
}

/// All integer wave vectors with `|k_a| ≤ band_limit` on axes of extent > 1.
fn wave_vectors(grid: &Grid, band_limit: usize) -> Vec<Vec<i64>> {
    let b = band_limit as i64;
    let mut out = vec![Vec::new()];
    for &n in grid.extents() {
        let range: Vec<i64> = if n > 1 { (-b..=b).collect() } else { vec![0] };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                range.iter().map(move |&k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

impl FourierSeries {
    /// Random coefficients uniform in `±amplitude / (1 + |k|²)`.
    pub fn random(grid: &Grid, band_limit: usize, amplitude: f64, rng: &mut ChaCha8Rng) -> Result<Self> {
        check_band_limit(grid, band_limit)?;
        let modes = wave_vectors(grid, band_limit)
            .into_iter()
            .map(|k| {
                let k2: i64 = k.iter().map(|x| x * x).sum();
                let scale = amplitude / (1.0 + k2 as f64);
                let cos = scale * rng.random_range(-1.0..1.0);
                let sin = if k2 == 0 { 0.0 } else { scale * rng.random_range(-1.0..1.0) };
                let wave = k
                    .iter()
                    .enumerate()
                    .map(|(axis, &ka)| 2.0 * std::f64::consts::PI * ka as f64 / grid.length(axis))
                    .collect();
                Mode { wave, cos, sin }
            })
            .collect();
        Ok(Self { modes })
    }

    /// A single mode `cos_coeff·cos(w·x) + sin_coeff·sin(w·x)`.
    pub fn single(wave: Vec<f64>, cos_coeff: f64, sin_coeff: f64) -> Self {
        Self { modes: vec![Mode { wave, cos: cos_coeff, sin: sin_coeff }] }
    }

    fn phase(wave: &[f64], x: &[f64]) -> f64 {
        wave.iter().zip(x).map(|(w, xi)| w * xi).sum()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.modes
            .iter()
            .map(|m| {
                let p = Self::phase(&m.wave, x);
                m.cos * p.cos() + m.sin * p.sin()
            })
            .sum()
    }

    pub fn gradient(&self, x: &[f64], axis: usize) -> f64 {
        self.modes
            .iter()
            .map(|m| {
                let p = Self::phase(&m.wave, x);
                m.wave[axis] * (m.sin * p.cos() - m.cos * p.sin())
            })
            .sum()
    }

    pub fn hessian(&self, x: &[f64], a: usize, b: usize) -> f64 {
        self.modes
            .iter()
            .map(|m| {
                let p = Self::phase(&m.wave, x);
                -m.wave[a] * m.wave[b] * (m.cos * p.cos() + m.sin * p.sin())
            })
            .sum()
    }

    /// Samples with exact gradients as a real scalar field.
    pub fn sample(&self, grid: &Grid) -> Field<C64> {
        let xs = axis_coords(grid);
        let values = xs.iter().map(|x| C64::new(self.value(x), 0.0)).collect();
        let grads = (0..grid.dims())
            .map(|a| xs.iter().map(|x| C64::new(self.gradient(x, a), 0.0)).collect())
            .collect();
        Field::with_gradients(grid.clone(), values, grads).expect("layout matches grid")
    }
}

/// Per-site coordinates along the grid axes (not the four spacetime slots).
pub(crate) fn axis_coords(grid: &Grid) -> Vec<Vec<f64>> {
    (0..grid.site_count())
        .map(|s| (0..grid.dims()).map(|a| grid.index_along(s, a) as f64 * grid.spacing()[a]).collect())
        .collect()
}

/// Real scalar field with exact gradients; `band_limit = 0` gives a constant.
pub fn random_smooth_field(grid: &Grid, seed: u64, band_limit: usize) -> Result<Field<C64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(FourierSeries::random(grid, band_limit, 1.0, &mut rng)?.sample(grid))
}

/// Complex spinor field with `4 · colors` components per site.
pub fn random_spinor_field(grid: &Grid, seed: u64, band_limit: usize, colors: usize) -> Result<Field<CVec>> {
    random_vector_field(grid, seed, band_limit, 4 * colors)
}

/// Complex vector field with `width` components per site and exact gradients.
pub fn random_vector_field(grid: &Grid, seed: u64, band_limit: usize, width: usize) -> Result<Field<CVec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let series = (0..2 * width)
        .map(|_| FourierSeries::random(grid, band_limit, 1.0, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let xs = axis_coords(grid);
    let eval = |f: &dyn Fn(&FourierSeries, &[f64]) -> f64, x: &[f64]| {
        CVec((0..width).map(|c| C64::new(f(&series[2 * c], x), f(&series[2 * c + 1], x))).collect())
    };
    let values = xs.iter().map(|x| eval(&|s, x| s.value(x), x)).collect();
    let grads = (0..grid.dims()).map(|a| xs.iter().map(|x| eval(&|s, x| s.gradient(x, a), x)).collect()).collect();
    Field::with_gradients(grid.clone(), values, grads)
}

/// Hermitian Lie-algebra field `Σ_a c_a(x) T^a` (a real 1x1 field for U(1)).
pub fn random_lie_field(
    grid: &Grid,
    seed: u64,
    group: GaugeGroup,
    band_limit: usize,
    amplitude: f64,
) -> Result<Field<CMat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    lie_field_from_rng(grid, &mut rng, group, band_limit, amplitude)
}

pub(crate) fn lie_field_from_rng(
    grid: &Grid,
    rng: &mut ChaCha8Rng,
    group: GaugeGroup,
    band_limit: usize,
    amplitude: f64,
) -> Result<Field<CMat>> {
    let basis = match group {
        GaugeGroup::U1 => vec![CMat::identity(1)],
        GaugeGroup::SUN(n) => su_generators(n),
    };
    let series = basis
        .iter()
        .map(|_| FourierSeries::random(grid, band_limit, amplitude, rng))
        .collect::<Result<Vec<_>>>()?;
    let xs = axis_coords(grid);
    let combine = |f: &dyn Fn(&FourierSeries) -> f64| {
        basis.iter().zip(&series).fold(basis[0].zero_like(), |acc, (t, s)| acc.add(&t.scale_real(f(s))))
    };
    let values = xs.iter().map(|x| combine(&|s| s.value(x))).collect();
    let grads = (0..grid.dims()).map(|a| xs.iter().map(|x| combine(&|s| s.gradient(x, a))).collect()).collect();
    Field::with_gradients(grid.clone(), values, grads)
}
