//! Split-complex arithmetic, Minkowski-plane classification and
//! series-defined exponential functions over small unital algebras.

mod causal;
mod series;
mod split_complex;

pub(crate) use causal::near_light_cone;
pub use causal::{classify_vector, classify_vector_with_tolerance, CausalClass};
pub use num_complex::Complex64;
pub use series::{
    cosh_series, exp_series, series_cosh, series_exp, series_sinh, sinh_series, AlgebraElement, SquareMatrix,
    UnitalAlgebra, MAX_SERIES_TERMS,
};
pub use split_complex::SplitComplex;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("lightlike element has no inverse")]
    LightlikeNotInvertible,
    #[error("result exceeds the floating-point range")]
    Overflow,
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },
    #[error("series tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("matrix must be square with dimension 2..=4 (dimension {dim}, {len} entries)")]
    InvalidMatrixDimension { dim: usize, len: usize },
    #[error("non-finite component")]
    NonFinite,
}
