use thiserror::Error;

/// Errors raised by the exact and numeric layers.
///
/// The variants fall into three classes that the CLI maps onto distinct exit
/// codes: malformed input ([`Error::Parse`]), violated mathematical
/// preconditions, and certification failures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("algebra context mismatch: R_{{0,{left}}} vs R_{{0,{right}}}")]
    ContextMismatch { left: usize, right: usize },

    #[error("invalid algebra dimension m = {0} (supported: 1..={max})", max = crate::clifford::MAX_GENERATORS)]
    InvalidDimension(usize),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("m must be odd (got m = {0})")]
    EvenDimension(usize),

    #[error("bidegree mismatch: {0}")]
    BidegreeMismatch(String),

    #[error("parity violation in {slot}: expected {expected}, found {found}")]
    ParityViolation {
        slot: &'static str,
        expected: String,
        found: String,
    },

    #[error("{slot} is not polynomial after axial substitution (negative exponent in {term})")]
    NotPolynomial { slot: &'static str, term: String },

    #[error("Cauchy-Riemann equation {0} violated")]
    CauchyRiemann(&'static str),

    #[error("h is not harmonic in both axial planes")]
    NotHarmonic,

    #[error("direct and closed-form routes disagree")]
    RouteDisagreement,

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("point lies too close to the singular locus (r = {r}, rho = {rho})")]
    SingularPoint { r: f64, rho: f64 },

    #[error("invalid finite-difference configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed input rather than mathematics.
    pub fn is_schema(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
