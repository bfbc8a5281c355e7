use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("direction {mu} is degenerate (g^{mu}{mu} vanishes identically)")]
    DegenerateDirection { mu: usize },

    #[error("all four metric components vanish; the effective sector is empty")]
    EmptySector,

    #[error("metric component g^{mu}{mu} = {value:e} is too close to zero at site {site}")]
    NearSingularMetric { mu: usize, site: usize, value: f64 },

    #[error("metric component g^{mu}{mu} is not finite")]
    NonFiniteMetric { mu: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("operation requires a constant metric, but g^{mu}{mu} is a field")]
    NonConstantMetric { mu: usize },

    #[error("a lattice site is required to evaluate field-valued g^{mu}{mu}")]
    SiteRequired { mu: usize },

    #[error("gauge component A_{mu} is non-zero on an inactive direction")]
    InactiveGaugeComponent { mu: usize },

    #[error("sector mismatch: {0}")]
    SectorMismatch(String),

    #[error("band limit {band_limit} is too high for extent {extent} along direction {mu}")]
    BandLimitTooHigh { mu: usize, extent: usize, band_limit: usize },

    #[error("unknown algebra case `{0}`")]
    UnknownCase(String),

    #[error("unknown table `{0}`")]
    UnknownTable(String),

    #[error("case `{0}` has off-diagonal metric components and cannot be instantiated")]
    UnsupportedOffDiagonal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),
}
