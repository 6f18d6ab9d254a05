//! Power-series exponential, hyperbolic cosine and hyperbolic sine over small
//! finite-dimensional unital algebras.
//!
//! Plain truncated sums sharing no code with the closed forms elsewhere in
//! the crate, which makes them usable as independent oracles.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{AlgebraError, SplitComplex};

/// Hard cap on the number of series terms.
pub const MAX_SERIES_TERMS: usize = 200;

/// The operations the power series need from a normed unital algebra.
pub trait UnitalAlgebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: f64) -> Self;
    /// A submultiplicative algebra norm.
    fn norm(&self) -> f64;
}

impl UnitalAlgebra for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn one_like(&self) -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: f64) -> Self {
        self * s
    }
    fn norm(&self) -> f64 {
        self.abs()
    }
}

impl UnitalAlgebra for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: f64) -> Self {
        self * s
    }
    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }
}

impl UnitalAlgebra for SplitComplex {
    fn zero_like(&self) -> Self {
        SplitComplex::ZERO
    }
    fn one_like(&self) -> Self {
        SplitComplex::ONE
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn scale(&self, s: f64) -> Self {
        SplitComplex::scale(self, s)
    }
    fn norm(&self) -> f64 {
        self.banach_norm()
    }
}

/// A real square matrix of dimension 2, 3 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix(DMatrix<f64>);

impl SquareMatrix {
    pub const MIN_DIM: usize = 2;
    pub const MAX_DIM: usize = 4;

    /// Builds an `n × n` matrix from row-major entries.
    pub fn from_rows(n: usize, entries: &[f64]) -> Result<Self, AlgebraError> {
        if !(Self::MIN_DIM..=Self::MAX_DIM).contains(&n) || entries.len() != n * n {
            return Err(AlgebraError::InvalidMatrixDimension { dim: n, len: entries.len() });
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(AlgebraError::NonFinite);
        }
        Ok(SquareMatrix(DMatrix::from_row_slice(n, n, entries)))
    }

    pub fn identity(n: usize) -> Result<Self, AlgebraError> {
        if !(Self::MIN_DIM..=Self::MAX_DIM).contains(&n) {
            return Err(AlgebraError::InvalidMatrixDimension { dim: n, len: n * n });
        }
        Ok(SquareMatrix(DMatrix::identity(n, n)))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[(row, col)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.0
    }
}

impl UnitalAlgebra for SquareMatrix {
    fn zero_like(&self) -> Self {
        SquareMatrix(DMatrix::zeros(self.dim(), self.dim()))
    }
    fn one_like(&self) -> Self {
        SquareMatrix(DMatrix::identity(self.dim(), self.dim()))
    }
    fn add(&self, other: &Self) -> Self {
        SquareMatrix(&self.0 + &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        SquareMatrix(&self.0 * &other.0)
    }
    fn scale(&self, s: f64) -> Self {
        SquareMatrix(&self.0 * s)
    }
    /// Frobenius norm.
    fn norm(&self) -> f64 {
        self.0.norm()
    }
}

/// An element of one of the supported algebras.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraElement {
    Real(f64),
    Complex(Complex64),
    Split(SplitComplex),
    Matrix(SquareMatrix),
}

impl AlgebraElement {
    pub fn norm(&self) -> f64 {
        match self {
            AlgebraElement::Real(x) => x.norm(),
            AlgebraElement::Complex(z) => UnitalAlgebra::norm(z),
            AlgebraElement::Split(w) => w.norm(),
            AlgebraElement::Matrix(m) => m.norm(),
        }
    }

    pub fn identity_like(&self) -> AlgebraElement {
        self.map(|x| x.one_like(), |z| z.one_like(), |w| w.one_like(), |m| m.one_like())
    }

    pub fn zero_like(&self) -> AlgebraElement {
        self.map(|x| x.zero_like(), |z| z.zero_like(), |w| w.zero_like(), |m| m.zero_like())
    }

    /// Sum of two elements of the same variant, `None` if the variants (or
    /// matrix dimensions) differ.
    pub fn checked_add(&self, other: &AlgebraElement) -> Option<AlgebraElement> {
        use AlgebraElement::*;
        match (self, other) {
            (Real(a), Real(b)) => Some(Real(a + b)),
            (Complex(a), Complex(b)) => Some(Complex(a + b)),
            (Split(a), Split(b)) => Some(Split(*a + *b)),
            (Matrix(a), Matrix(b)) if a.dim() == b.dim() => Some(Matrix(a.add(b))),
            _ => None,
        }
    }

    /// Norm of `self − other`, `None` on a variant mismatch.
    pub fn distance(&self, other: &AlgebraElement) -> Option<f64> {
        let neg = other.map(|x| -x, |z| -z, |w| -*w, |m| m.scale(-1.0));
        self.checked_add(&neg).map(|d| d.norm())
    }

    fn map(
        &self,
        real: impl FnOnce(&f64) -> f64,
        complex: impl FnOnce(&Complex64) -> Complex64,
        split: impl FnOnce(&SplitComplex) -> SplitComplex,
        matrix: impl FnOnce(&SquareMatrix) -> SquareMatrix,
    ) -> AlgebraElement {
        match self {
            AlgebraElement::Real(x) => AlgebraElement::Real(real(x)),
            AlgebraElement::Complex(z) => AlgebraElement::Complex(complex(z)),
            AlgebraElement::Split(w) => AlgebraElement::Split(split(w)),
            AlgebraElement::Matrix(m) => AlgebraElement::Matrix(matrix(m)),
        }
    }
}

/// Sums `first + Σ_k term_k` where `term_k = term_{k-1} · step · ratio(k)`.
///
/// Truncates as soon as the next term's norm drops below
/// `tol · max(1, ‖partial sum‖)`; fails after [`MAX_SERIES_TERMS`] terms.
fn sum_series<A: UnitalAlgebra>(first: A, step: &A, ratio: impl Fn(usize) -> f64, tol: f64) -> Result<A, AlgebraError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AlgebraError::InvalidTolerance(tol));
    }
    let mut sum = first.clone();
    let mut term = first;
    for k in 1..MAX_SERIES_TERMS {
        term = term.mul(step).scale(ratio(k));
        let term_norm = term.norm();
        if !term_norm.is_finite() {
            return Err(AlgebraError::Overflow);
        }
        if term_norm < tol * sum.norm().max(1.0) {
            return Ok(sum);
        }
        sum = sum.add(&term);
        if !sum.norm().is_finite() {
            return Err(AlgebraError::Overflow);
        }
    }
    Err(AlgebraError::NoConvergence { terms: MAX_SERIES_TERMS })
}

pub fn exp_series<A: UnitalAlgebra>(x: &A, tol: f64) -> Result<A, AlgebraError> {
    sum_series(x.one_like(), x, |k| 1.0 / k as f64, tol)
}

pub fn cosh_series<A: UnitalAlgebra>(x: &A, tol: f64) -> Result<A, AlgebraError> {
    let x2 = x.mul(x);
    sum_series(x.one_like(), &x2, |k| 1.0 / ((2 * k - 1) * (2 * k)) as f64, tol)
}

pub fn sinh_series<A: UnitalAlgebra>(x: &A, tol: f64) -> Result<A, AlgebraError> {
    let x2 = x.mul(x);
    sum_series(x.clone(), &x2, |k| 1.0 / ((2 * k) * (2 * k + 1)) as f64, tol)
}

macro_rules! dispatch {
    ($f:ident, $x:expr, $tol:expr) => {
        match $x {
            AlgebraElement::Real(v) => $f(v, $tol).map(AlgebraElement::Real),
            AlgebraElement::Complex(v) => $f(v, $tol).map(AlgebraElement::Complex),
            AlgebraElement::Split(v) => $f(v, $tol).map(AlgebraElement::Split),
            AlgebraElement::Matrix(v) => $f(v, $tol).map(AlgebraElement::Matrix),
        }
    };
}

/// `e^x = Σ x^k / k!`.
pub fn series_exp(x: &AlgebraElement, tol: f64) -> Result<AlgebraElement, AlgebraError> {
    dispatch!(exp_series, x, tol)
}

/// `cosh x = Σ x^{2k} / (2k)!`, summed from the even terms directly.
pub fn series_cosh(x: &AlgebraElement, tol: f64) -> Result<AlgebraElement, AlgebraError> {
    dispatch!(cosh_series, x, tol)
}

/// `sinh x = Σ x^{2k+1} / (2k+1)!`, summed from the odd terms directly.
pub fn series_sinh(x: &AlgebraElement, tol: f64) -> Result<AlgebraElement, AlgebraError> {
    dispatch!(sinh_series, x, tol)
}
