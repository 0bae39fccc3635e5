//! Central tolerance constants used by the verification checks.
//!
//! Two regimes: identities evaluated by pure algebra sit near machine
//! precision; anything that passes through the grid discretization or the
//! dense eigensolver inherits the order-4 stencil error at the default
//! resolution (~1e-7 per eigenvalue) plus Dirichlet-wall truncation, and
//! gets 1e-5.

/// Pure algebraic identities (no discretization in the loop).
pub const ALGEBRAIC: f64 = 1e-12;

/// Algebraic identities composed across a few operations (e.g. the
/// factorization identity evaluated from two closed forms).
pub const ALGEBRAIC_COMPOSED: f64 = 1e-10;

/// Anything passing through the grid eigensolver.
pub const EIGENSOLVER: f64 = 1e-5;

/// Unbroken-benchmark spectrum at the default grid; the order-4 stencil
/// at N = 1601 leaves ~2e-7 worst-case error, so 1e-6 has headroom.
pub const BENCHMARK_SPECTRUM: f64 = 1e-6;

/// Finite-difference identity checks on sampled analytic eigenfunctions.
pub const FD_IDENTITY: f64 = 1e-5;

/// Relative deviation allowed in the SUSY algebra checks on test spinors.
pub const ALGEBRA_SPINOR: f64 = 1e-6;

/// Ground-state annihilation A psi_0 = 0, pointwise relative to max|psi_0|.
/// Needs a step below [`FD_SAFE_STEP`]; see that constant.
pub const ANNIHILATION: f64 = 1e-8;

/// Step used for finite-difference-only checks (never for matrices).
///
/// The order-4 first-derivative truncation is (h^4/30) f^(5). Benchmark
/// eigenfunctions show |f^(5)| up to ~570 |f| (measured: the annihilation
/// ratio is 1.2e-8 at h = 5e-3), so meeting the 1e-8 annihilation
/// tolerance needs h <= ~5e-3; 3e-3 leaves an 8x margin.
pub const FD_SAFE_STEP: f64 = 3e-3;

/// PT pseudo-orthogonality: off-diagonal Gram entries relative to the
/// geometric mean of the corresponding diagonals.
pub const PT_ORTHOGONALITY: f64 = 1e-6;

/// The plain Hermitian inner product must leave at least one cross term
/// above this fraction of the diagonal scale (the negative claim).
pub const HERMITIAN_CROSS_FLOOR: f64 = 1e-3;

/// Greedy analytic-numeric eigenvalue matching distance.
pub const MATCHING: f64 = 1e-4;

/// Two levels closer than this are treated as degenerate: matched by
/// multiplicity and skipped by the orthogonality assertions.
pub const DEGENERACY: f64 = 1e-9;

/// Realness / imaginariness classification of couplings.
pub const CLASSIFY: f64 = 1e-12;
