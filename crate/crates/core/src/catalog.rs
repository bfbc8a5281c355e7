//! Every tabulated algebra case as a symbolic diagonal metric.
//!
//! Each deformed Heisenberg algebra enters only through the metric
//! components it induces. Rows keep their published order; the three
//! appendix-only rows of the first new-q relation and the off-diagonal
//! q-ħ rows are flagged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::DiagonalMetric;
use crate::symbolic::{Exponent, SymbolValues, SymbolicCoeff};

/// Numeric parameter values; see [`SymbolValues`].
pub type CaseParams = SymbolValues;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// first relation of the new q-Heisenberg algebra
    NewQRel1,
    /// second relation, metric algebra M1
    NewQRel2M1,
    /// second relation, metric algebra M2
    NewQRel2M2,
    /// third relation
    NewQRel3,
    QGeneralized,
    QHbar,
    SimpleDistinguished,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    M1,
    M2,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::M1 => f.write_str("M1"),
            Variant::M2 => f.write_str("M2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseIndices {
    AlphaBeta(u8, u8),
    AlphaLambda(u8, u8),
    LambdaBeta(u8, u8),
    JK(u8, u8),
    Unindexed,
}

impl CaseIndices {
    pub fn pair(&self) -> Option<(u8, u8)> {
        match *self {
            CaseIndices::AlphaBeta(a, b)
            | CaseIndices::AlphaLambda(a, b)
            | CaseIndices::LambdaBeta(a, b)
            | CaseIndices::JK(a, b) => Some((a, b)),
            CaseIndices::Unindexed => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraCase {
    pub id: String,
    pub algebra: AlgebraKind,
    pub variant: Option<Variant>,
    pub indices: CaseIndices,
    /// `g^00, g^11, g^22, g^33`.
    pub metric_coeffs: [SymbolicCoeff; 4],
    /// `g^01, g^02, g^03` as listed in the metric appendix (display only).
    pub off_diagonal: [SymbolicCoeff; 3],
    /// Listed in the appendix table but not in the main-text table.
    pub appendix_only: bool,
    /// Needs off-diagonal components, which a diagonal metric cannot hold.
    pub unsupported_offdiagonal: bool,
}

impl AlgebraCase {
    pub fn is_supported(&self) -> bool {
        !self.unsupported_offdiagonal
    }

    /// Uses the `Psi` symbol anywhere in its diagonal.
    fn uses(&self, pick: impl Fn(&SymbolicCoeff) -> &Exponent) -> bool {
        self.metric_coeffs.iter().any(|c| !c.is_zero() && !pick(c).is_zero())
    }
}

fn qp(e: Exponent) -> SymbolicCoeff {
    SymbolicCoeff::q_pow(e)
}

fn one() -> SymbolicCoeff {
    SymbolicCoeff::one()
}

fn zero() -> SymbolicCoeff {
    SymbolicCoeff::zero()
}

/// `q^(n-1)·Psi`
fn qn1_psi() -> SymbolicCoeff {
    qp(Exponent::n_plus(1, -1)) * SymbolicCoeff::psi_pow(Exponent::int(1))
}

/// `hbar^l·Phi`
fn hbar_l_phi() -> SymbolicCoeff {
    SymbolicCoeff::hbar_pow(Exponent::l_plus(1, 0)) * SymbolicCoeff::phi_pow(Exponent::int(1))
}

struct Row {
    variant: Option<Variant>,
    idx: (u8, u8),
    diag: [SymbolicCoeff; 4],
    off: [SymbolicCoeff; 3],
    appendix_only: bool,
    unsupported: bool,
}

fn row(idx: (u8, u8), diag: [SymbolicCoeff; 4]) -> Row {
    Row { variant: None, idx, diag, off: [zero(); 3], appendix_only: false, unsupported: false }
}

fn new1_cases() -> Vec<AlgebraCase> {
    let qn = || qp(Exponent::n_plus(1, 0));
    let q_minus_n = || qp(Exponent::n_plus(-1, 0));
    let m1 = |idx, diag, appendix_only| Row { variant: Some(Variant::M1), appendix_only, ..row(idx, diag) };
    let m2 = |idx, diag, off, appendix_only| Row { variant: Some(Variant::M2), off, appendix_only, ..row(idx, diag) };
    let rows = vec![
        m1((1, 1), [one(), -q_minus_n(), qn1_psi(), zero()], false),
        m2((1, 2), [one(), zero(), zero(), -qn()], [zero(), zero(), qn1_psi()], false),
        m2((1, 3), [one(), zero(), -qn(), zero()], [qn1_psi(), zero(), zero()], false),
        m2((2, 1), [one(), zero(), zero(), q_minus_n()], [zero(), zero(), qn1_psi()], false),
        m1((2, 2), [one(), zero(), -qn(), qn1_psi()], false),
        m2((2, 3), [one(), -qn(), zero(), zero()], [qn1_psi(), zero(), zero()], false),
        m2((3, 1), [one(), zero(), zero(), -qn()], [zero(), qn1_psi(), zero()], true),
        m2((3, 2), [one(), -qn(), zero(), zero()], [qn1_psi(), zero(), zero()], true),
        m1((3, 3), [one(), qn1_psi(), zero(), -qn()], true),
    ];
    build(AlgebraKind::NewQRel1, "new1", rows, |r| {
        let (a, b) = r.idx;
        (CaseIndices::AlphaBeta(a, b), format!("{}.a{a}b{b}", r.variant.expect("variant")))
    })
}

fn new2_cases(variant: Variant) -> Vec<AlgebraCase> {
    let qm = || qp(Exponent::m_plus(1, 0));
    let rows = match variant {
        Variant::M1 => vec![
            row((1, 2), [zero(), zero(), qm(), one()]),
            row((1, 3), [zero(), -one(), -qm(), zero()]),
            row((2, 1), [zero(), zero(), -one(), -qm()]),
            row((2, 3), [zero(), one(), zero(), qm()]),
            row((3, 1), [zero(), qm(), one(), zero()]),
            row((3, 2), [zero(), -qm(), zero(), -one()]),
        ],
        Variant::M2 => vec![
            row((1, 2), [qm(), zero(), zero(), -one()]),
            row((1, 3), [qm(), zero(), -one(), zero()]),
            row((2, 1), [one(), zero(), zero(), qm()]),
            row((2, 3), [qm(), -one(), zero(), zero()]),
            row((3, 1), [-one(), zero(), qm(), zero()]),
            row((3, 2), [-one(), qm(), zero(), zero()]),
        ],
    };
    let kind = match variant {
        Variant::M1 => AlgebraKind::NewQRel2M1,
        Variant::M2 => AlgebraKind::NewQRel2M2,
    };
    let rows = rows.into_iter().map(|r| Row { variant: Some(variant), ..r }).collect();
    build(kind, "new2", rows, |r| {
        let (a, l) = r.idx;
        (CaseIndices::AlphaLambda(a, l), format!("{variant}.a{a}l{l}"))
    })
}

fn new3_cases() -> Vec<AlgebraCase> {
    let ql = || qp(Exponent::l_plus(1, 0));
    let ql1 = || qp(Exponent::l_plus(1, 1));
    let rows = vec![
        row((1, 1), [ql(), -ql1(), -hbar_l_phi(), zero()]),
        row((1, 2), [ql(), zero(), zero(), -ql1()]),
        row((1, 3), [ql(), zero(), -ql1(), zero()]),
        row((2, 2), [ql(), zero(), -ql1(), -hbar_l_phi()]),
        row((2, 3), [ql(), -ql1(), zero(), zero()]),
        row((3, 3), [ql(), -hbar_l_phi(), zero(), -ql1()]),
    ];
    build(AlgebraKind::NewQRel3, "new3", rows, |r| {
        let (l, b) = r.idx;
        (CaseIndices::LambdaBeta(l, b), format!("l{l}b{b}"))
    })
}

fn qhbar_cases() -> Vec<AlgebraCase> {
    let mq = || -qp(Exponent::int(1));
    let sq = || qp(Exponent::frac(1, 2));
    let off = |idx, diag, off| Row { off, unsupported: true, ..row(idx, diag) };
    let rows = vec![
        row((1, 1), [mq(), one(), sq(), zero()]),
        row((2, 2), [mq(), one(), zero(), sq()]),
        row((3, 3), [mq(), sq(), zero(), one()]),
        off((1, 2), [mq(), zero(), zero(), one()], [zero(), zero(), sq()]),
        off((1, 3), [mq(), zero(), one(), zero()], [zero(), sq(), zero()]),
        off((2, 3), [mq(), one(), zero(), zero()], [sq(), zero(), zero()]),
    ];
    build(AlgebraKind::QHbar, "qhbar", rows, |r| {
        let (j, k) = r.idx;
        (CaseIndices::JK(j, k), format!("j{j}k{k}"))
    })
}

fn build(
    algebra: AlgebraKind,
    prefix: &str,
    rows: Vec<Row>,
    naming: impl Fn(&Row) -> (CaseIndices, String),
) -> Vec<AlgebraCase> {
    rows.into_iter()
        .map(|r| {
            let (indices, suffix) = naming(&r);
            AlgebraCase {
                id: format!("{prefix}.{suffix}"),
                algebra,
                variant: r.variant,
                indices,
                metric_coeffs: r.diag,
                off_diagonal: r.off,
                appendix_only: r.appendix_only,
                unsupported_offdiagonal: r.unsupported,
            }
        })
        .collect()
}

fn single(id: &str, algebra: AlgebraKind, diag: [SymbolicCoeff; 4]) -> AlgebraCase {
    AlgebraCase {
        id: id.to_string(),
        algebra,
        variant: None,
        indices: CaseIndices::Unindexed,
        metric_coeffs: diag,
        off_diagonal: [zero(); 3],
        appendix_only: false,
        unsupported_offdiagonal: false,
    }
}

/// All catalog rows in table order: relation 1 (9 rows), relation 2 for M1
/// and M2 (6 each), relation 3 (6), q-ħ (3 diagonal + 3 off-diagonal),
/// q-generalized, and the simple distinguished case.
pub fn enumerate_cases() -> Vec<AlgebraCase> {
    let q = || qp(Exponent::int(1));
    let mut cases = new1_cases();
    cases.extend(new2_cases(Variant::M1));
    cases.extend(new2_cases(Variant::M2));
    cases.extend(new3_cases());
    cases.extend(qhbar_cases());
    cases.push(single("qgen", AlgebraKind::QGeneralized, [-one(), one(), zero(), -q()]));
    cases.push(single(
        "simple",
        AlgebraKind::SimpleDistinguished,
        [one(), -qp(Exponent::n_plus(1, 0)), -q(), -one()],
    ));
    cases
}

/// Rows that can be instantiated as a diagonal metric.
pub fn supported_cases() -> Vec<AlgebraCase> {
    enumerate_cases().into_iter().filter(AlgebraCase::is_supported).collect()
}

pub fn find_case(id: &str) -> Result<AlgebraCase> {
    enumerate_cases().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.to_string()))
}

pub fn case_ids() -> Vec<String> {
    enumerate_cases().into_iter().map(|c| c.id).collect()
}

/// Evaluates the case's metric coefficients at the given parameters.
pub fn metric_for(case: &AlgebraCase, params: &CaseParams) -> Result<DiagonalMetric> {
    if case.unsupported_offdiagonal {
        return Err(Error::UnsupportedOffDiagonal(case.id.clone()));
    }
    validate_params(case, params)?;
    let values = case.metric_coeffs.map(|c| c.evaluate(params));
    DiagonalMetric::constant(values, case.id.clone())
}

fn validate_params(case: &AlgebraCase, p: &CaseParams) -> Result<()> {
    if !p.q.is_finite() || p.q == 0.0 || p.q == 1.0 {
        return Err(Error::BadParameter(format!("q must lie in R \\ {{0, 1}}, got {}", p.q)));
    }
    if p.q < 0.0 {
        return Err(Error::BadParameter(format!("q must be positive for real fractional powers, got {}", p.q)));
    }
    for (name, v) in [("n", p.n), ("m", p.m), ("l", p.l)] {
        if !v.is_finite() {
            return Err(Error::BadParameter(format!("{name} must be finite")));
        }
    }
    if case.uses(|c| &c.psi) && !(p.psi > 0.0 && p.psi.is_finite()) {
        return Err(Error::BadParameter(format!("Psi must be positive, got {}", p.psi)));
    }
    if case.uses(|c| &c.phi) && !(p.phi > 0.0 && p.phi.is_finite()) {
        return Err(Error::BadParameter(format!("Phi must be positive, got {}", p.phi)));
    }
    if case.uses(|c| &c.hbar) && !(p.hbar > 0.0 && p.hbar.is_finite()) {
        return Err(Error::BadParameter(format!("hbar must be positive, got {}", p.hbar)));
    }
    Ok(())
}

/// `α_μ = √|g^{μμ}|` per direction, zero for inactive directions.
pub fn expected_dirac_coeffs(case: &AlgebraCase) -> [SymbolicCoeff; 4] {
    case.metric_coeffs.map(|c| c.sqrt_abs().expect("catalog factors are ±1"))
}

/// `h_μ = 1/√|g^{μμ}|` per direction, `None` for inactive directions.
pub fn expected_h_coeffs(case: &AlgebraCase) -> [Option<SymbolicCoeff>; 4] {
    case.metric_coeffs.map(|c| c.inv_sqrt_abs())
}

/// A cell where the published table disagrees with what its own metric
/// column implies. The regenerated table keeps the metric-consistent value
/// and carries the published text as a footnote.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperDiscrepancy {
    pub table: &'static str,
    /// Zero-based row within the table.
    pub row: usize,
    pub column: &'static str,
    pub published: &'static str,
    pub note: &'static str,
}

const GAUGE_EQ: &str = "q-gauge Dirac equation";
const DIRAC_OP: &str = "Dirac operator";

/// All known published-vs-regenerated deviations.
pub fn known_discrepancies() -> Vec<PaperDiscrepancy> {
    let d = |table, row, column, published, note| PaperDiscrepancy { table, row, column, published, note };
    vec![
        d(
            "new1",
            3,
            GAUGE_EQ,
            "(i*gamma^0*d_t - i*gamma^z*q^(n/2)*d_z - e*gamma^mu*A_mu - m)psi = 0",
            "metric column gives |g^33| = q^(-n), so the z coefficient is q^(-n/2)",
        ),
        d(
            "new2.m2",
            0,
            GAUGE_EQ,
            "(-i*gamma^0*q^(m/2)*d_t - i*gamma^z*d_z - e*gamma^mu*A_mu - m)psi = 0",
            "time-derivative term printed with a minus sign; the operator rule gives +i*gamma^0",
        ),
        d(
            "new2.m2",
            5,
            GAUGE_EQ,
            "(i*gamma^0*d_t - i*gamma^x*q^(m/2)*d_z - e*gamma^mu*A_mu - m)psi = 0",
            "derivative printed as d_z although g^33 = 0; the active direction is x",
        ),
        d(
            "app.dirac.new1",
            3,
            "g^33",
            "-q^n",
            "the metric table for this relation lists g^33 = q^(-n)",
        ),
        d(
            "app.dirac.new1",
            3,
            DIRAC_OP,
            "gamma^0*d_t - gamma^z*q^(n/2)*d_z",
            "follows the printed g^33 = -q^n; the metric table value q^(-n) gives q^(-n/2)",
        ),
        d(
            "app.dirac.new1",
            4,
            DIRAC_OP,
            "gamma^0*d_t - gamma^y*q^(n/2)*d_y - gamma^z*q^((n-1)/2)*d_z",
            "Psi^(1/2) factor missing although g^33 = q^(n-1)*Psi",
        ),
        d(
            "app.dirac.new2.m2",
            0,
            DIRAC_OP,
            "-gamma^0*q^(m/2)*d_t - gamma^z*d_z",
            "time-derivative term printed with a minus sign; the operator rule gives +gamma^0",
        ),
        d(
            "app.dirac.new2.m2",
            5,
            DIRAC_OP,
            "gamma^0*d_t - gamma^x*q^(m/2)*d_z",
            "derivative printed as d_z although g^33 = 0; the active direction is x",
        ),
        d(
            "app.dirac.new3",
            0,
            "g^22",
            "-Phi",
            "hbar^l dropped; the metric table lists -hbar^l*Phi (identical at hbar = 1)",
        ),
        d(
            "app.dirac.new3",
            0,
            DIRAC_OP,
            "gamma^0*q^(l/2)*d_t - gamma^x*q^((l+1)/2)*d_x - gamma^y*Phi^(1/2)*d_y",
            "hbar^(l/2) dropped (identical at hbar = 1)",
        ),
        d(
            "app.dirac.new3",
            3,
            "g^33",
            "-Phi",
            "hbar^l dropped; the metric table lists -hbar^l*Phi (identical at hbar = 1)",
        ),
        d(
            "app.dirac.new3",
            3,
            DIRAC_OP,
            "gamma^0*q^(l/2)*d_t - gamma^y*q^((l+1)/2)*d_y - gamma^z*Phi^(1/2)*d_z",
            "hbar^(l/2) dropped (identical at hbar = 1)",
        ),
        d(
            "app.dirac.new3",
            5,
            "g^11",
            "-Phi",
            "hbar^l dropped; the metric table lists -hbar^l*Phi (identical at hbar = 1)",
        ),
        d(
            "app.dirac.new3",
            5,
            DIRAC_OP,
            "gamma^0*q^(l/2)*d_t - gamma^x*Phi^(1/2)*d_x - gamma^z*q^((l+1)/2)*d_z",
            "hbar^(l/2) dropped (identical at hbar = 1)",
        ),
    ]
}
