//! Metric-deformed gauge theory on desk-scale lattices.
//!
//! The deformation enters only through a diagonal background metric
//! `g^{μμ}`: the q-Dirac operator carries `q_μ = √|g^{μμ}|` on each
//! derivative, the covariant derivative couples the gauge field with
//! `h_μ = 1/q_μ`, and directions with `g^{μμ} = 0` drop out of the
//! dynamics altogether.
//!
//! Module map:
//! - [`clifford`]: gamma matrices and 4x4 complex matrices
//! - [`metric`]: diagonal backgrounds, `q_μ`, `h_μ`, effective sector, measure
//! - [`symbolic`] and [`catalog`]: exact coefficients for every tabulated algebra case
//! - [`qdirac`]: free and gauged q-Dirac operators and their squares
//! - [`gauge`]: covariant derivative, field strength, gauge transformations
//! - [`lattice`]: periodic grids, fields, finite differences, actions
//! - [`tables`]: table documents and their emitters

pub mod catalog;
pub mod clifford;
pub mod error;
pub mod gauge;
pub mod lattice;
pub mod lie;
pub mod metric;
pub mod qdirac;
pub mod symbolic;
pub mod tables;

pub use catalog::{AlgebraCase, AlgebraKind, CaseParams};
pub use clifford::{anticommutator, standard_gamma_set, ComplexMatrix4, GammaSet, C64};
pub use error::{Error, Result};
pub use gauge::{FieldStrengthTensor, GaugeConfig, GaugeTransformation, TransformRule};
pub use lattice::{ActionReport, Field, Grid};
pub use lie::{Algebra, CMat, CVec, GaugeGroup, LieValue, Linear};
pub use metric::{DiagonalMetric, EffectiveSector, FieldExpr, MetricComponent};
pub use qdirac::{FirstOrderOperator, SecondOrderDiagnostic};
pub use symbolic::{Exponent, SymbolicCoeff};
pub use tables::TableDocument;
