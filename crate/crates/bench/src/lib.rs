//! Shared inputs for the benchmarks.

use mdgauge::lattice::random::random_spinor_field;
use mdgauge::{CVec, DiagonalMetric, Field, GaugeConfig, GaugeGroup, GaugeTransformation, Grid};

pub const E: f64 = 0.8;
pub const MASS: f64 = 0.5;

/// SU(2) fields on a three-direction constant metric with `n` points per axis.
pub struct Fixture {
    pub metric: DiagonalMetric,
    pub grid: Grid,
    pub gauge: GaugeConfig,
    pub spinor: Field<CVec>,
    pub transformation: GaugeTransformation,
}

pub fn fixture(n: usize) -> Fixture {
    let metric = DiagonalMetric::constant([1.0, -2.0, 0.0, -0.5], "bench").expect("metric");
    let grid = Grid::uniform(vec![0, 1, 3], n).expect("grid");
    let group = GaugeGroup::SUN(2);
    let gauge = GaugeConfig::random(group, grid.clone(), 1, 1, 0.5).expect("gauge field");
    let spinor = random_spinor_field(&grid, 2, 1, 2).expect("spinor");
    let transformation = GaugeTransformation::random(group, grid.clone(), 3, 1, E).expect("transformation");
    Fixture { metric, grid, gauge, spinor, transformation }
}
