//! Error type shared across the crate.

use thiserror::Error;

use crate::numerics::EigenPair;

#[derive(Error, Debug)]
pub enum Error {
    /// Polynomial degree above the supported desk-scale bound.
    #[error("jacobi degree {n} exceeds the supported bound {max}")]
    DegreeTooLarge { n: usize, max: usize },

    /// Generalized binomial order above the supported bound.
    #[error("binomial order {m} exceeds the supported bound {max}")]
    OrderTooLarge { m: usize, max: usize },

    /// Parameter record that violates a structural invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Level index at or above the normalizability bound of Eq.-(7) type;
    /// distinct from evaluation failures so callers can report the bound.
    #[error("level n = {n} is not normalizable (bound {bound:.6}): only n < bound qualify")]
    NonNormalizable { n: usize, bound: f64 },

    /// Principal-branch condition Re(1 -/+ i sinh(x + i eps)) > 0 violated.
    #[error("branch-cut condition violated at x = {x} (axis shift {axis_shift})")]
    BranchCut { x: f64, axis_shift: f64 },

    /// Grid that cannot support the requested stencil or quadrature.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Grid too coarse for a finite-difference shift operator.
    #[error("grid too coarse: {n_points} points (need at least {min})")]
    GridTooCoarse { n_points: usize, min: usize },

    /// Symmetric grid required for reflection-based operations.
    #[error("operation requires a symmetric grid (x_min = -x_max), got [{x_min}, {x_max}]")]
    AsymmetricGrid { x_min: f64, x_max: f64 },

    /// Matrix too large for the dense desk-scale eigensolver.
    #[error("matrix dimension {n} exceeds the dense eigensolver bound {max}")]
    MatrixTooLarge { n: usize, max: usize },

    /// Eigensolver did not reach the backward-error contract; partial
    /// results (the pairs that did converge) are carried along.
    #[error("eigensolver failed the backward-error bound on {failed} of {total} pairs")]
    EigenFailure {
        failed: usize,
        total: usize,
        partial: Vec<EigenPair>,
    },

    /// Non-finite input where a finite number is required.
    #[error("non-finite input: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
