//! Periodic grids, lattice fields, finite differences and the deformed
//! actions.
//!
//! A [`Field`] may carry exact gradients alongside its samples. Fields built
//! from closed-form Fourier series do, and [`central_diff`] then returns the
//! exact derivative instead of the stencil. This is what lets the gauge
//! invariance of the actions hold to rounding error rather than to the
//! discretization floor.

pub mod action;
pub mod grid;
pub mod io;
pub mod random;

pub use action::{fermion_action, total_action, ym_action, ActionReport};
pub use grid::{default_extent, Grid};
pub use random::{random_lie_field, random_smooth_field, random_spinor_field, FourierSeries};

use rustfft::FftPlanner;

use crate::clifford::C64;
use crate::error::{Error, Result};
use crate::lie::Linear;

/// Values on every site of a grid, optionally with exact first derivatives
/// (`gradients[axis][site]`, axes in grid order).
#[derive(Debug, Clone, PartialEq)]
pub struct Field<T> {
    grid: Grid,
    values: Vec<T>,
    gradients: Option<Vec<Vec<T>>>,
}

impl<T: Linear> Field<T> {
    pub fn new(grid: Grid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.site_count() {
            return Err(Error::BadParameter(format!(
                "field has {} values for {} sites",
                values.len(),
                grid.site_count()
            )));
        }
        Ok(Self { grid, values, gradients: None })
    }

    pub fn with_gradients(grid: Grid, values: Vec<T>, gradients: Vec<Vec<T>>) -> Result<Self> {
        let mut f = Self::new(grid, values)?;
        if gradients.len() != f.grid.dims() || gradients.iter().any(|g| g.len() != f.values.len()) {
            return Err(Error::BadParameter("gradient layout does not match the grid".into()));
        }
        f.gradients = Some(gradients);
        Ok(f)
    }

    pub fn from_fn(grid: Grid, f: impl Fn(usize) -> T) -> Self {
        let values = (0..grid.site_count()).map(f).collect();
        Self { grid, values, gradients: None }
    }

    /// A constant field; its exact gradient is zero.
    pub fn constant(grid: Grid, value: T) -> Self {
        let n = grid.site_count();
        let zero = value.zero_like();
        let gradients = vec![vec![zero; n]; grid.dims()];
        Self { values: vec![value; n], gradients: Some(gradients), grid }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn at(&self, site: usize) -> &T {
        &self.values[site]
    }

    pub fn has_exact_gradients(&self) -> bool {
        self.gradients.is_some()
    }

    pub fn gradients(&self) -> Option<&[Vec<T>]> {
        self.gradients.as_deref()
    }

    /// Replaces any stored gradients with the spectral derivative of the
    /// samples. Exact for fields band-limited below the Nyquist mode, such
    /// as those read back from field files.
    pub fn with_spectral_gradients(mut self) -> Self {
        let gradients = (0..self.grid.dims()).map(|axis| spectral(&self.grid, &self.values, axis)).collect();
        self.gradients = Some(gradients);
        self
    }

    /// Drops the exact gradients so derivatives fall back to the stencil.
    pub fn into_stencil(mut self) -> Self {
        self.gradients = None;
        self
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(Linear::max_abs).fold(0.0, f64::max)
    }

    /// `max_x ‖self(x) − other(x)‖`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b).max_abs()).fold(0.0, f64::max)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.add(b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert!(self.grid.same_shape(&other.grid), "fields live on different grids");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        let gradients = match (&self.gradients, &other.gradients) {
            (Some(ga), Some(gb)) => Some(
                ga.iter().zip(gb).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect(),
            ),
            _ => None,
        };
        Self { grid: self.grid.clone(), values, gradients }
    }
}

/// Two-point central difference along one axis with periodic wrap.
fn stencil<T: Linear>(grid: &Grid, values: &[T], axis: usize) -> Vec<T> {
    let inv = 1.0 / (2.0 * grid.spacing()[axis]);
    (0..grid.site_count())
        .map(|s| {
            let fwd = &values[grid.shift(s, axis, 1)];
            let bwd = &values[grid.shift(s, axis, -1)];
            fwd.sub(bwd).scale_real(inv)
        })
        .collect()
}

/// FFT derivative along one axis; the Nyquist mode of an even extent is dropped.
fn spectral<T: Linear>(grid: &Grid, values: &[T], axis: usize) -> Vec<T> {
    let n = grid.extents()[axis];
    let zero = values[0].zero_like();
    if n == 1 {
        return vec![zero; values.len()];
    }
    let mut planner = FftPlanner::new();
    let (fwd, inv) = (planner.plan_fft_forward(n), planner.plan_fft_inverse(n));
    let k0 = 2.0 * std::f64::consts::PI / grid.length(axis);
    let factor: Vec<C64> = (0..n)
        .map(|k| {
            let m = if 2 * k < n { k as f64 } else if 2 * k == n { 0.0 } else { k as f64 - n as f64 };
            C64::new(0.0, m * k0 / n as f64)
        })
        .collect();
    let width = values[0].components().len();
    let mut out = vec![zero; values.len()];
    for base in (0..values.len()).filter(|&s| grid.index_along(s, axis) == 0) {
        let line: Vec<usize> = (0..n).map(|k| grid.shift(base, axis, k as isize)).collect();
        let comps: Vec<Vec<C64>> = line.iter().map(|&s| values[s].components()).collect();
        let mut deriv = vec![vec![C64::new(0.0, 0.0); width]; n];
        let mut buf = vec![C64::new(0.0, 0.0); n];
        for c in 0..width {
            for (b, row) in buf.iter_mut().zip(&comps) {
                *b = row[c];
            }
            fwd.process(&mut buf);
            for (b, f) in buf.iter_mut().zip(&factor) {
                *b *= f;
            }
            inv.process(&mut buf);
            for (row, b) in deriv.iter_mut().zip(&buf) {
                row[c] = *b;
            }
        }
        for (&s, d) in line.iter().zip(&deriv) {
            out[s] = values[s].with_components(d);
        }
    }
    out
}

/// `∂_μ f`: the exact derivative for fields that carry one, otherwise
/// `(f(x + h e_μ) − f(x − h e_μ)) / 2h`.
pub fn central_diff<T: Linear>(field: &Field<T>, mu: usize) -> Result<Field<T>> {
    let axis = field.grid.axis_or_err(mu)?;
    let values = match &field.gradients {
        Some(g) => g[axis].clone(),
        None => stencil(&field.grid, &field.values, axis),
    };
    Ok(Field { grid: field.grid.clone(), values, gradients: None })
}

/// The stencil derivative even when exact gradients are available.
pub fn stencil_diff<T: Linear>(field: &Field<T>, mu: usize) -> Result<Field<T>> {
    let axis = field.grid.axis_or_err(mu)?;
    Ok(Field { grid: field.grid.clone(), values: stencil(&field.grid, &field.values, axis), gradients: None })
}

/// Stencil derivative of raw per-site values.
pub(crate) fn stencil_values<T: Linear>(grid: &Grid, values: &[T], axis: usize) -> Vec<T> {
    stencil(grid, values, axis)
}

/// Observed order `log2(e_coarse / e_fine)` for each consecutive pair of
/// errors measured on grids refined by a factor of two.
pub fn convergence_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}
