//! Crate-wide error type.

use crate::shadow::Violation;
use crate::sixj::ThetaClass;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while evaluating invariants or volumes.
///
/// Variants split into two families consumed by the CLI exit-code mapping:
/// input/validation problems ([`Error::is_validation`]) and numeric or
/// domain failures.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Factorial argument outside the range covered by a [`crate::SineTable`].
    #[error("factorial argument {arg} exceeds sine-table range {max} (n = {n})")]
    TableRange { arg: u32, max: u32, n: u32 },

    /// Division by the leading coefficient of the zero function.
    #[error("division by the zero-function leading coefficient")]
    ZeroDivision,

    /// Minimal-order summands disagree on their singular-unit count.
    #[error("summands of minimal order {order} carry mixed phase units; the sum is not real-reducible")]
    PhaseMismatch { order: i64 },

    /// A summand with indeterminate sign cannot be accumulated.
    #[error("summand of minimal order has indeterminate sign")]
    IndeterminateSum,

    /// Square root of a leading coefficient with odd order or odd phase count.
    #[error("leading coefficient has odd order ({order}) or odd phase count ({phase_units}); no square root")]
    OddParity { order: i64, phase_units: i64 },

    /// A color triple fails the triangle inequalities or the parity condition.
    #[error("triple {index} of the 6-tuple is not admissible")]
    NotAdmissible { index: usize },

    /// An entry of a real 6-tuple lies outside `[0, 1]`.
    #[error("theta[{index}] = {value} is outside [0, 1]")]
    ThetaOutOfRange { index: usize, value: f64 },

    /// An operation restricted to hyperbolic-type 6-tuples got something else.
    #[error("6-tuple is {class:?}, not hyperbolic-type")]
    NotHyperbolic { class: ThetaClass },

    /// A dihedral angle outside `[0, π)`.
    #[error("angle[{index}] = {value} is outside [0, pi)")]
    AngleOutOfRange { index: usize, value: f64 },

    /// The truncated tetrahedron with the requested angles does not exist.
    #[error("no truncated tetrahedron: angles at truncation face {face} sum to {sum} >= pi")]
    NoTetrahedron { face: usize, sum: f64 },

    /// Dilogarithm argument outside the closed unit disk.
    #[error("dilogarithm argument has modulus {modulus} > 1")]
    DilogDomain { modulus: f64 },

    /// The saddle equation has no sign change on the admissible interval.
    #[error("saddle bracket failed: ln g has the same sign at both interval endpoints")]
    SaddleBracket,

    /// The quadratic for the non-trivial critical points degenerates.
    #[error("degenerate critical-point equation (discriminant or leading coefficient vanishes)")]
    DegenerateRoots,

    /// The two routes of the dilogarithm volume formula disagree.
    #[error("volume routes disagree: Im U(z+) branch gives {plus}, Im U(z-) branch gives {minus}")]
    VolumeMismatch { plus: f64, minus: f64 },

    /// A shadow link failed structural validation.
    #[error("invalid shadow link: {}", format_violations(.violations))]
    InvalidLink { violations: Vec<Violation> },

    /// Holonomy deformation too large at one vertex.
    #[error("deformation out of range at vertex {vertex}: induced angles admit no truncated tetrahedron")]
    DeformationOutOfRange { vertex: usize },

    /// An input slice has the wrong length.
    #[error("{what}: expected {expected} entries, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A value that must be an exact half-integer is not.
    #[error("{value} is not an exact half-integer")]
    NotHalfInteger { value: f64 },

    /// The color sequence cannot be made admissible at this n.
    #[error("n = {n} is too small to produce an admissible color sequence for this 6-tuple")]
    NTooSmall { n: u32 },

    /// Colored-Jones convergence runs take even n only.
    #[error("convergence run requires even n, got {n}")]
    OddN { n: u32 },

    /// Root order below the smallest meaningful value.
    #[error("root order n = {n} must be at least 3")]
    RootOrderTooSmall { n: u32 },

    /// Failed to read a link file.
    #[error("cannot read link file: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed JSON in a link file.
    #[error("malformed link file at line {line}, column {column}: {message}")]
    LinkParse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for errors caused by malformed or out-of-contract input, as
    /// opposed to numeric/domain failures discovered during evaluation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NotAdmissible { .. }
                | Error::ThetaOutOfRange { .. }
                | Error::NotHyperbolic { .. }
                | Error::AngleOutOfRange { .. }
                | Error::InvalidLink { .. }
                | Error::LengthMismatch { .. }
                | Error::NotHalfInteger { .. }
                | Error::NTooSmall { .. }
                | Error::OddN { .. }
                | Error::RootOrderTooSmall { .. }
                | Error::Io(_)
                | Error::LinkParse { .. }
        )
    }

    /// Short machine-readable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TableRange { .. } => "table-range",
            Error::ZeroDivision => "zero-division",
            Error::PhaseMismatch { .. } => "phase-mismatch",
            Error::IndeterminateSum => "indeterminate-sum",
            Error::OddParity { .. } => "odd-parity",
            Error::NotAdmissible { .. } => "not-admissible",
            Error::ThetaOutOfRange { .. } => "theta-out-of-range",
            Error::NotHyperbolic { .. } => "not-hyperbolic",
            Error::AngleOutOfRange { .. } => "angle-out-of-range",
            Error::NoTetrahedron { .. } => "no-tetrahedron",
            Error::DilogDomain { .. } => "dilog-domain",
            Error::SaddleBracket => "saddle-bracket",
            Error::DegenerateRoots => "degenerate-roots",
            Error::VolumeMismatch { .. } => "volume-mismatch",
            Error::InvalidLink { .. } => "invalid-link",
            Error::DeformationOutOfRange { .. } => "deformation-out-of-range",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::NotHalfInteger { .. } => "not-half-integer",
            Error::NTooSmall { .. } => "n-too-small",
            Error::OddN { .. } => "odd-n",
            Error::RootOrderTooSmall { .. } => "root-order-too-small",
            Error::Io(_) => "io",
            Error::LinkParse { .. } => "link-parse",
        }
    }
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
