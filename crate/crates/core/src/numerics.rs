//! Numerical verification backbone, independent of the closed forms it is
//! used to check: finite-difference discretization of -d^2/dx^2 + V with
//! complex V and Dirichlet walls, a dense general complex eigensolver,
//! composite-Simpson quadrature, finite differences, and the PT
//! pseudo-inner product in both candidate conventions.

use faer::complex_native::c64;
use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{QuasiParity, SymmetryPhase};
use crate::tolerances;

/// Dense-eigensolver dimension cap (desk scale).
pub const MAX_EIG_DIM: usize = 4096;

/// Backward-error contract for every returned eigenpair:
/// ||M v - lambda v|| <= BOUND * ||M|| * ||v||.
pub const BACKWARD_ERROR_BOUND: f64 = 1e-8;

/// Uniform grid on a truncated interval. Simpson quadrature needs an odd
/// point count, so the constructor rounds up; reflection-based operations
/// additionally require x_min = -x_max so grid points map onto grid
/// points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    n_points: usize,
    stencil_order: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_points: usize, stencil_order: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::NonFinite("grid bounds".into()));
        }
        if x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "x_min = {x_min} must lie below x_max = {x_max}"
            )));
        }
        if n_points < 16 {
            return Err(Error::InvalidGrid(format!(
                "n_points = {n_points} below the minimum of 16"
            )));
        }
        if stencil_order != 2 && stencil_order != 4 {
            return Err(Error::InvalidGrid(format!(
                "stencil_order must be 2 or 4, got {stencil_order}"
            )));
        }
        // Simpson weights need an odd count.
        let n_points = if n_points % 2 == 0 { n_points + 1 } else { n_points };
        Ok(Self {
            x_min,
            x_max,
            n_points,
            stencil_order,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn stencil_order(&self) -> usize {
        self.stencil_order
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    /// Half-width of the finite-difference stencil; derivative values
    /// this many points from each edge are dropped by the shift
    /// operators.
    pub fn margin(&self) -> usize {
        self.stencil_order / 2
    }

    pub fn is_symmetric(&self) -> bool {
        (self.x_min + self.x_max).abs() <= 1e-12 * (self.x_max - self.x_min)
    }

    /// j-th grid point. Symmetric grids are generated around zero so that
    /// the reflection x_j -> x_{n-1-j} is exact in floating point.
    pub fn point(&self, j: usize) -> f64 {
        if self.is_symmetric() {
            let mid = (self.n_points - 1) as f64 / 2.0;
            (j as f64 - mid) * self.step()
        } else {
            self.x_min + j as f64 * self.step()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |j| self.point(j))
    }

    /// The same grid with `margin` points removed from each side; where a
    /// shift-operator output lives. Symmetric grids stay symmetric, and
    /// an odd point count stays odd.
    pub fn interior(&self, margin: usize) -> Result<Self> {
        if 2 * margin + 16 > self.n_points {
            return Err(Error::GridTooCoarse {
                n_points: self.n_points,
                min: 2 * margin + 16,
            });
        }
        GridSpec::new(
            self.point(margin),
            self.point(self.n_points - 1 - margin),
            self.n_points - 2 * margin,
            self.stencil_order,
        )
    }

    /// Composite-Simpson weight of the j-th point.
    fn simpson_weight(&self, j: usize) -> f64 {
        let h = self.step();
        if j == 0 || j == self.n_points - 1 {
            h / 3.0
        } else if j % 2 == 1 {
            4.0 * h / 3.0
        } else {
            2.0 * h / 3.0
        }
    }
}

/// Symmetric grid [-x_max, x_max]; the shape every PT check uses.
pub fn symmetric_grid(x_max: f64, n_points: usize, stencil_order: usize) -> Result<GridSpec> {
    GridSpec::new(-x_max, x_max, n_points, stencil_order)
}

/// Samples an infallible function on the grid.
pub fn sample<F: Fn(f64) -> Complex64>(f: F, grid: &GridSpec) -> Vec<Complex64> {
    grid.points().map(f).collect()
}

/// Discretizes H = -d^2/dx^2 + V with Dirichlet walls at x_min and x_max:
/// the unknowns are the n_points - 2 interior values, the central-
/// difference stencil of the requested order is truncated at the walls
/// (ghost values beyond a wall are zero), and V(x_j) sits on the
/// diagonal. The result is complex symmetric by construction, never
/// Hermitian.
pub fn build_hamiltonian<F: Fn(f64) -> Complex64>(potential: F, grid: &GridSpec) -> Mat<c64> {
    let h = grid.step();
    let m = grid.n_points - 2;
    let mut a = Mat::<c64>::zeros(m, m);
    match grid.stencil_order {
        2 => {
            let inv_h2 = 1.0 / (h * h);
            for j in 0..m {
                let v = potential(grid.point(j + 1));
                a[(j, j)] = c64::new(2.0 * inv_h2 + v.re, v.im);
                if j + 1 < m {
                    a[(j, j + 1)] = c64::new(-inv_h2, 0.0);
                    a[(j + 1, j)] = c64::new(-inv_h2, 0.0);
                }
            }
        }
        4 => {
            let inv_12h2 = 1.0 / (12.0 * h * h);
            for j in 0..m {
                let v = potential(grid.point(j + 1));
                a[(j, j)] = c64::new(30.0 * inv_12h2 + v.re, v.im);
                if j + 1 < m {
                    a[(j, j + 1)] = c64::new(-16.0 * inv_12h2, 0.0);
                    a[(j + 1, j)] = c64::new(-16.0 * inv_12h2, 0.0);
                }
                if j + 2 < m {
                    a[(j, j + 2)] = c64::new(inv_12h2, 0.0);
                    a[(j + 2, j)] = c64::new(inv_12h2, 0.0);
                }
            }
        }
        _ => unreachable!("constructor admits only orders 2 and 4"),
    }
    a
}

/// One converged eigenpair of a dense complex matrix.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: Complex64,
    /// Unit-norm eigenvector, phase fixed so its largest component is
    /// real positive.
    pub vector: Vec<Complex64>,
    /// Measured backward error ||M v - lambda v|| / (||M||_F ||v||).
    pub residual: f64,
}

/// The `k` eigenvalues of smallest real part (ties by imaginary part),
/// with eigenvectors, from a dense general non-Hermitian complex
/// eigendecomposition. Every returned pair is validated against
/// [`BACKWARD_ERROR_BOUND`]; validation failures return the converged
/// pairs inside the error.
pub fn eig_complex(m: &Mat<c64>, k: usize) -> Result<Vec<EigenPair>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::InvalidGrid(format!(
            "eigensolver needs a square matrix, got {n} x {}",
            m.ncols()
        )));
    }
    if n > MAX_EIG_DIM {
        return Err(Error::MatrixTooLarge { n, max: MAX_EIG_DIM });
    }
    let mut frob = 0.0f64;
    for j in 0..n {
        for i in 0..n {
            let e = m.read(i, j);
            if !e.re.is_finite() || !e.im.is_finite() {
                return Err(Error::NonFinite(format!("matrix entry ({i}, {j})")));
            }
            frob += e.re * e.re + e.im * e.im;
        }
    }
    let frob = frob.sqrt();

    let evd = m.as_ref().eigendecomposition::<c64>();
    let s = evd.s().column_vector().to_owned();
    let u = evd.u();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (ea, eb) = (s.read(a), s.read(b));
        (ea.re, ea.im)
            .partial_cmp(&(eb.re, eb.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let k = k.min(n);
    let mut pairs = Vec::with_capacity(k);
    let mut failed = 0usize;
    for &j in order.iter().take(k) {
        let lambda = s.read(j);
        // normalize and fix the phase deterministically
        let mut vnorm = 0.0f64;
        let mut big = (0usize, 0.0f64);
        for i in 0..n {
            let a = u.read(i, j);
            let mag = a.re * a.re + a.im * a.im;
            vnorm += mag;
            if mag > big.1 {
                big = (i, mag);
            }
        }
        let vnorm = vnorm.sqrt();
        let pivot = u.read(big.0, j);
        let phase = c64::new(pivot.re / pivot.norm(), pivot.im / pivot.norm());
        let vector: Vec<Complex64> = (0..n)
            .map(|i| {
                let w = u.read(i, j) * phase.conj() / vnorm;
                Complex64::new(w.re, w.im)
            })
            .collect();

        // backward error against the full matrix
        let mut rnorm = 0.0f64;
        for i in 0..n {
            let mut acc = c64::new(0.0, 0.0);
            for l in 0..n {
                let e = m.read(i, l);
                let v = vector[l];
                acc += e * c64::new(v.re, v.im);
            }
            let r = acc - lambda * c64::new(vector[i].re, vector[i].im);
            rnorm += r.re * r.re + r.im * r.im;
        }
        let residual = rnorm.sqrt() / frob.max(f64::MIN_POSITIVE);
        if residual > BACKWARD_ERROR_BOUND {
            failed += 1;
            continue;
        }
        pairs.push(EigenPair {
            value: Complex64::new(lambda.re, lambda.im),
            vector,
            residual,
        });
    }
    if failed > 0 {
        return Err(Error::EigenFailure {
            failed,
            total: k,
            partial: pairs,
        });
    }
    Ok(pairs)
}

/// The two candidate conventions for the PT pseudo-inner product; which
/// one orthogonalizes the analytic bound states is an empirical question
/// answered by the verification layer, never hard-coded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerConvention {
    /// sum_j w_j f*(-x_j) g(x_j)
    Conjugating,
    /// sum_j w_j f(-x_j) g(x_j)
    Bilinear,
}

/// PT pseudo-inner product on a symmetric grid with composite-Simpson
/// weights. The reflection maps grid indices, so symmetry is mandatory.
pub fn pt_inner(
    f: &[Complex64],
    g: &[Complex64],
    grid: &GridSpec,
    convention: InnerConvention,
) -> Result<Complex64> {
    if !grid.is_symmetric() {
        return Err(Error::AsymmetricGrid {
            x_min: grid.x_min,
            x_max: grid.x_max,
        });
    }
    let n = grid.n_points;
    if f.len() != n || g.len() != n {
        return Err(Error::InvalidGrid(format!(
            "grid-function length mismatch: {} and {} on a {n}-point grid",
            f.len(),
            g.len()
        )));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let fr = f[n - 1 - j];
        let fr = match convention {
            InnerConvention::Conjugating => fr.conj(),
            InnerConvention::Bilinear => fr,
        };
        acc += grid.simpson_weight(j) * fr * g[j];
    }
    Ok(acc)
}

/// Plain Hermitian inner product sum_j w_j f*(x_j) g(x_j); kept around so
/// the verification layer can demonstrate that it does NOT orthogonalize
/// the bound states.
pub fn hermitian_inner(f: &[Complex64], g: &[Complex64], grid: &GridSpec) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..grid.n_points.min(f.len()).min(g.len()) {
        acc += grid.simpson_weight(j) * f[j].conj() * g[j];
    }
    acc
}

/// Composite-Simpson integral of a sampled function.
pub fn integrate(f: &[Complex64], grid: &GridSpec) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..grid.n_points.min(f.len()) {
        acc += grid.simpson_weight(j) * f[j];
    }
    acc
}

/// Central differences of the grid's stencil order, full grid length;
/// edge points use one-sided stencils of the same order.
pub fn differentiate(f: &[Complex64], grid: &GridSpec) -> Vec<Complex64> {
    let n = f.len();
    let h = grid.step();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    match grid.stencil_order {
        2 => {
            out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
            for j in 1..n - 1 {
                out[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
            }
            out[n - 1] = (f[n - 3] - 4.0 * f[n - 2] + 3.0 * f[n - 1]) / (2.0 * h);
        }
        4 => {
            let d = 12.0 * h;
            out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / d;
            out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / d;
            for j in 2..n - 2 {
                out[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / d;
            }
            out[n - 2] =
                (-f[n - 5] + 6.0 * f[n - 4] - 18.0 * f[n - 3] + 10.0 * f[n - 2] + 3.0 * f[n - 1])
                    / d;
            out[n - 1] =
                (3.0 * f[n - 5] - 16.0 * f[n - 4] + 36.0 * f[n - 3] - 48.0 * f[n - 2]
                    + 25.0 * f[n - 1])
                    / d;
        }
        _ => unreachable!(),
    }
    out
}

/// First derivative on the interior only (margin points dropped on each
/// side); what the SUSY shift operators are built from.
pub(crate) fn first_derivative_interior(f: &[Complex64], h: f64, order: usize) -> Vec<Complex64> {
    let n = f.len();
    match order {
        2 => (1..n - 1)
            .map(|j| (f[j + 1] - f[j - 1]) / (2.0 * h))
            .collect(),
        4 => (2..n - 2)
            .map(|j| (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / (12.0 * h))
            .collect(),
        _ => unreachable!(),
    }
}

/// Second derivative on the interior only.
pub(crate) fn second_derivative_interior(f: &[Complex64], h: f64, order: usize) -> Vec<Complex64> {
    let n = f.len();
    match order {
        2 => (1..n - 1)
            .map(|j| (f[j + 1] - 2.0 * f[j] + f[j - 1]) / (h * h))
            .collect(),
        4 => (2..n - 2)
            .map(|j| {
                (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] - f[j + 2])
                    / (12.0 * h * h)
            })
            .collect(),
        _ => unreachable!(),
    }
}

/// Analytic levels paired against numeric eigenvalues.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub analytic: Vec<(QuasiParity, usize, Complex64)>,
    pub numeric: Vec<Complex64>,
    /// (analytic index, numeric index, |delta|) per matched level.
    pub matches: Vec<(usize, usize, f64)>,
    /// Indices into `numeric` that matched nothing: discretized-continuum
    /// artifacts, not errors.
    pub unmatched_numeric: Vec<usize>,
    pub phase: SymmetryPhase,
}

impl SpectrumReport {
    pub fn all_matched(&self) -> bool {
        self.matches.len() == self.analytic.len()
    }

    /// Worst matched distance; infinite when an analytic level found no
    /// partner.
    pub fn worst_delta(&self) -> f64 {
        if !self.all_matched() {
            return f64::INFINITY;
        }
        self.matches.iter().map(|m| m.2).fold(0.0, f64::max)
    }

    pub fn matched_numeric(&self, analytic_idx: usize) -> Option<Complex64> {
        self.matches
            .iter()
            .find(|(a, _, _)| *a == analytic_idx)
            .map(|&(_, nidx, _)| self.numeric[nidx])
    }
}

/// Greedy nearest-distance matching: all cross distances sorted
/// ascending, a pair is accepted when both sides are still free and the
/// distance stays within `tol`. Each analytic level matches at most one
/// numeric eigenvalue; degenerate levels resolve by multiplicity.
pub fn match_spectra(
    analytic: &[(QuasiParity, usize, Complex64)],
    numeric: &[Complex64],
    tol: f64,
    phase: SymmetryPhase,
) -> SpectrumReport {
    let mut dist: Vec<(f64, usize, usize)> = Vec::with_capacity(analytic.len() * numeric.len());
    for (i, &(_, _, ea)) in analytic.iter().enumerate() {
        for (j, &en) in numeric.iter().enumerate() {
            dist.push(((ea - en).norm(), i, j));
        }
    }
    dist.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));

    let mut used_a = vec![false; analytic.len()];
    let mut used_n = vec![false; numeric.len()];
    let mut matches = Vec::new();
    for (d, i, j) in dist {
        if d > tol {
            break;
        }
        if used_a[i] || used_n[j] {
            continue;
        }
        used_a[i] = true;
        used_n[j] = true;
        matches.push((i, j, d));
    }
    matches.sort_by_key(|&(i, _, _)| i);
    let unmatched_numeric = (0..numeric.len()).filter(|&j| !used_n[j]).collect();
    SpectrumReport {
        analytic: analytic.to_vec(),
        numeric: numeric.to_vec(),
        matches,
        unmatched_numeric,
        phase,
    }
}

/// Default matching tolerance (see [`crate::tolerances::MATCHING`]).
pub fn match_spectra_default(
    analytic: &[(QuasiParity, usize, Complex64)],
    numeric: &[Complex64],
    phase: SymmetryPhase,
) -> SpectrumReport {
    match_spectra(analytic, numeric, tolerances::MATCHING, phase)
}
