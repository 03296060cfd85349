//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by validation and by search budgets.
///
/// Budget errors (`SearchBudgetExceeded`, `EnumerationBudgetExceeded`,
/// `OracleSizeExceeded`) mean "undecided at this budget" and are never
/// conflated with a negative mathematical verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Characteristic is neither 0 nor a prime.
    InvalidCharacteristic(u64),
    /// Arithmetic was attempted between scalars of different fields.
    MismatchedFields { left: u64, right: u64 },
    /// A scalar string failed to parse in the given field.
    InvalidScalar(String),
    /// A complex failed a structural invariant.
    InvalidComplex(String),
    /// A weighted complex failed a structural invariant.
    InvalidWeighting(String),
    /// An operation required a balanced input.
    NotBalanced,
    /// The finite-field witness search space exceeds the configured cap.
    SearchBudgetExceeded { characteristic: u64, dimension: usize, cap: u64 },
    /// An enumeration parameter exceeds the configured cap.
    EnumerationBudgetExceeded { requested: u64, cap: u64 },
    /// The brute-force oracle only runs on small inputs.
    OracleSizeExceeded { simplices: usize, cap: usize },
    /// A divisor or curve class failed a structural invariant.
    InvalidClass(String),
    /// Classes or complexes with different marked-point counts were mixed.
    MismatchedN { left: u32, right: u32 },
    /// A vertex label lies outside the allowed range.
    LabelOutOfRange { label: u32, n: u32 },
    /// A Laurent or Cox element failed a structural invariant.
    InvalidElement(String),
    /// A hypertree input failed a structural invariant (not an axiom).
    InvalidHypertree(String),
    /// Malformed JSON or a JSON value violating an interface contract.
    InvalidJson(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCharacteristic(c) => {
                write!(f, "characteristic {c} is neither 0 nor a prime")
            }
            Error::MismatchedFields { left, right } => {
                write!(f, "scalars from different fields (char {left} vs char {right})")
            }
            Error::InvalidScalar(s) => write!(f, "invalid scalar: {s}"),
            Error::InvalidComplex(s) => write!(f, "invalid complex: {s}"),
            Error::InvalidWeighting(s) => write!(f, "invalid weighting: {s}"),
            Error::NotBalanced => write!(f, "input weighting is not balanced"),
            Error::SearchBudgetExceeded { characteristic, dimension, cap } => write!(
                f,
                "finite-field search over char {characteristic} with nullspace dimension \
                 {dimension} exceeds the cap of {cap} candidates; undecided at this budget"
            ),
            Error::EnumerationBudgetExceeded { requested, cap } => {
                write!(f, "enumeration size {requested} exceeds the budget cap {cap}")
            }
            Error::OracleSizeExceeded { simplices, cap } => {
                write!(f, "brute-force oracle limited to {cap} simplices, got {simplices}")
            }
            Error::InvalidClass(s) => write!(f, "invalid class: {s}"),
            Error::MismatchedN { left, right } => {
                write!(f, "mismatched marked-point counts: n = {left} vs n = {right}")
            }
            Error::LabelOutOfRange { label, n } => {
                write!(f, "label {label} outside 1..={} for n = {n}", n.saturating_sub(1))
            }
            Error::InvalidElement(s) => write!(f, "invalid element: {s}"),
            Error::InvalidHypertree(s) => write!(f, "invalid hypertree: {s}"),
            Error::InvalidJson(s) => write!(f, "invalid JSON input: {s}"),
        }
    }
}

impl std::error::Error for Error {}
