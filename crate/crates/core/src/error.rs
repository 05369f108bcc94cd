use thiserror::Error;

use crate::laurent::LaurentInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    /// Long division left a non-zero remainder. `lambda` names the λ-component
    /// that failed when the division was performed on a class.
    #[error("non-exact division{}: remainder {remainder}", lambda_suffix(*.lambda))]
    NonExactDivision {
        lambda: Option<usize>,
        remainder: LaurentInt,
    },

    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),

    #[error("unsupported product: both factors carry λ-components of positive index")]
    UnsupportedProduct,

    #[error("coefficient index {index} outside series order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("degenerate denominator: exponents {0:?} are not pairwise distinct")]
    DegenerateDenominator([i64; 3]),

    #[error("enumeration guard exceeded: {count} multisets > limit {limit}")]
    EnumerationGuard { count: u128, limit: u128 },

    #[error("pipeline integrity: {0}")]
    Integrity(String),

    #[error("decomposition: {0}")]
    Decomposition(String),

    #[error("parse: {0}")]
    Parse(String),
}

fn lambda_suffix(lambda: Option<usize>) -> String {
    match lambda {
        Some(a) => format!(" in λ{a}-component"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
