use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::EffectiveSector;

/// Periodic grid over the active directions of a metric.
///
/// Sites are numbered lexicographically with the first active direction
/// slowest. Coordinates along inactive directions are identically zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    active: Vec<usize>,
    extents: Vec<usize>,
    spacing: Vec<f64>,
    #[serde(skip)]
    strides: Vec<usize>,
}

impl Grid {
    pub fn new(active: Vec<usize>, extents: Vec<usize>, spacing: Vec<f64>) -> Result<Self> {
        if active.is_empty() {
            return Err(Error::EmptySector);
        }
        if active.len() != extents.len() || active.len() != spacing.len() {
            return Err(Error::BadParameter("grid: active, extents and spacing lengths differ".into()));
        }
        if active.windows(2).any(|w| w[0] >= w[1]) || active.iter().any(|&mu| mu > 3) {
            return Err(Error::BadParameter(format!("grid: invalid active directions {active:?}")));
        }
        if extents.contains(&0) {
            return Err(Error::BadParameter("grid: extents must be positive".into()));
        }
        if spacing.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
            return Err(Error::BadParameter("grid: spacing must be positive and finite".into()));
        }
        let mut grid = Self { active, extents, spacing, strides: Vec::new() };
        grid.rebuild_strides();
        Ok(grid)
    }

    fn rebuild_strides(&mut self) {
        let mut strides = vec![1; self.extents.len()];
        for a in (0..self.extents.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * self.extents[a + 1];
        }
        self.strides = strides;
    }

    /// Uniform grid of `n` points per active direction covering `[0, 2π)`.
    pub fn uniform(active: Vec<usize>, n: usize) -> Result<Self> {
        let d = active.len();
        Self::new(active, vec![n; d], vec![2.0 * PI / n as f64; d])
    }

    /// Grid covering `[0, 2π)` in every direction with the given extents.
    pub fn periodic_2pi(active: Vec<usize>, extents: Vec<usize>) -> Result<Self> {
        let spacing = extents.iter().map(|&n| 2.0 * PI / n as f64).collect();
        Self::new(active, extents, spacing)
    }

    pub fn for_sector(sector: &EffectiveSector, n: usize) -> Result<Self> {
        Self::uniform(sector.active_indices.clone(), n)
    }

    /// Desk-scale default: 16 points per direction for `d_eff ≤ 2`, 12 for 3, 8 for 4.
    pub fn default_for_sector(sector: &EffectiveSector) -> Result<Self> {
        Self::for_sector(sector, default_extent(sector.d_eff))
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn spacing(&self) -> &[f64] {
        &self.spacing
    }

    pub fn dims(&self) -> usize {
        self.active.len()
    }

    pub fn site_count(&self) -> usize {
        self.extents.iter().product()
    }

    pub fn cell_volume(&self) -> f64 {
        self.spacing.iter().product()
    }

    /// Position of direction `mu` among the active axes.
    pub fn axis_of(&self, mu: usize) -> Option<usize> {
        self.active.iter().position(|&a| a == mu)
    }

    pub fn axis_or_err(&self, mu: usize) -> Result<usize> {
        self.axis_of(mu).ok_or(Error::DegenerateDirection { mu })
    }

    pub fn index_along(&self, site: usize, axis: usize) -> usize {
        (site / self.strides[axis]) % self.extents[axis]
    }

    /// Periodic neighbour `site ± step` along an axis.
    pub fn shift(&self, site: usize, axis: usize, step: isize) -> usize {
        let n = self.extents[axis] as isize;
        let i = self.index_along(site, axis) as isize;
        let j = (i + step).rem_euclid(n);
        (site as isize + (j - i) * self.strides[axis] as isize) as usize
    }

    /// Full four-component coordinates of a site.
    pub fn coords(&self, site: usize) -> [f64; 4] {
        let mut x = [0.0; 4];
        for (axis, &mu) in self.active.iter().enumerate() {
            x[mu] = self.index_along(site, axis) as f64 * self.spacing[axis];
        }
        x
    }

    /// Side length `N_a h_a` of an axis.
    pub fn length(&self, axis: usize) -> f64 {
        self.extents[axis] as f64 * self.spacing[axis]
    }

    pub fn same_shape(&self, other: &Grid) -> bool {
        self.active == other.active && self.extents == other.extents && self.spacing == other.spacing
    }

    /// Needed after deserialisation.
    pub fn normalized(mut self) -> Self {
        self.rebuild_strides();
        self
    }
}

pub fn default_extent(d_eff: usize) -> usize {
    match d_eff {
        0..=2 => 16,
        3 => 12,
        _ => 8,
    }
}
