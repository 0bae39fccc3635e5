//! The complex Scarf II model: potential evaluation, closed-form spectra
//! per quasi-parity, analytic (unnormalized) wavefunctions, bound-state
//! counting, symmetry-phase classification, and conversions to the other
//! parameter dictionaries in circulation.
//!
//! Units: hbar = 2m = 1, so the Hamiltonian is H = -d^2/dx^2 + V(x) and
//! the bound levels are E_n = -(n + (q alpha + beta + 1)/2)^2.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{pt_inner, GridSpec, InnerConvention};
use crate::specfun::{jacobi_poly, JacobiParams};
use crate::tolerances;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The coupling pair (alpha, beta) plus an optional imaginary axis shift
/// x -> x + i eps. Single source of truth for one potential instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScarfParams {
    pub alpha: Complex64,
    pub beta: Complex64,
    /// The eps of the coordinate shift; must satisfy |eps| < pi/2 so that
    /// cosh(x + i eps) never vanishes on the real line.
    pub axis_shift: f64,
}

impl ScarfParams {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        Self::with_axis_shift(alpha, beta, 0.0)
    }

    pub fn with_axis_shift(alpha: Complex64, beta: Complex64, axis_shift: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || !axis_shift.is_finite() {
            return Err(Error::NonFinite("scarf parameters".into()));
        }
        if axis_shift.abs() >= std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidParams(format!(
                "|axis_shift| = {} must stay below pi/2 (cosh zeros)",
                axis_shift.abs()
            )));
        }
        Ok(Self {
            alpha,
            beta,
            axis_shift,
        })
    }

    /// Same couplings, different imaginary axis shift.
    pub fn shifted(&self, axis_shift: f64) -> Result<Self> {
        Self::with_axis_shift(self.alpha, self.beta, axis_shift)
    }

    fn u(&self, x: f64) -> Complex64 {
        Complex64::new(x, self.axis_shift)
    }
}

/// The two-valued quasi-parity label selecting a solution family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuasiParity {
    Plus,
    Minus,
}

impl QuasiParity {
    pub const BOTH: [QuasiParity; 2] = [QuasiParity::Plus, QuasiParity::Minus];

    pub fn sign(self) -> f64 {
        match self {
            QuasiParity::Plus => 1.0,
            QuasiParity::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            QuasiParity::Plus => QuasiParity::Minus,
            QuasiParity::Minus => QuasiParity::Plus,
        }
    }
}

impl std::fmt::Display for QuasiParity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuasiParity::Plus => write!(f, "+1"),
            QuasiParity::Minus => write!(f, "-1"),
        }
    }
}

/// Symmetry classification of a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryPhase {
    /// alpha = beta*: the potential is real.
    Hermitian,
    /// alpha, beta both real: PT symmetric with real spectrum.
    PtUnbroken,
    /// Exactly one coupling purely imaginary: PT symmetric, spectrum in
    /// conjugate pairs.
    PtBroken,
    /// Both couplings purely imaginary: the normalizability bound kills
    /// every level.
    NoBoundStates,
    /// Anything else.
    General,
}

impl std::fmt::Display for SymmetryPhase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SymmetryPhase::Hermitian => "hermitian",
            SymmetryPhase::PtUnbroken => "pt_unbroken",
            SymmetryPhase::PtBroken => "pt_broken",
            SymmetryPhase::NoBoundStates => "no_bound_states",
            SymmetryPhase::General => "general",
        };
        write!(f, "{s}")
    }
}

fn is_real(w: Complex64) -> bool {
    w.im.abs() <= tolerances::CLASSIFY * (1.0 + w.re.abs())
}

fn is_purely_imaginary(w: Complex64) -> bool {
    w.re.abs() <= tolerances::CLASSIFY * (1.0 + w.im.abs()) && w.im.abs() > tolerances::CLASSIFY
}

/// Total classification of a parameter point. Hermitian wins over the PT
/// phases, so a real conjugate pair (alpha = beta real) is Hermitian.
pub fn classify_symmetry(p: &ScarfParams) -> SymmetryPhase {
    let (a, b) = (p.alpha, p.beta);
    if (a - b.conj()).norm() <= tolerances::CLASSIFY * (1.0 + a.norm() + b.norm()) {
        return SymmetryPhase::Hermitian;
    }
    if is_real(a) && is_real(b) {
        return SymmetryPhase::PtUnbroken;
    }
    match (is_purely_imaginary(a), is_purely_imaginary(b)) {
        (true, true) => SymmetryPhase::NoBoundStates,
        (true, false) if is_real(b) => SymmetryPhase::PtBroken,
        (false, true) if is_real(a) => SymmetryPhase::PtBroken,
        _ => SymmetryPhase::General,
    }
}

/// V(x + i eps) with alpha replaced by q alpha before evaluation.
///
/// Invariant under q -> -q (bitwise: the even coefficient sees only
/// (q alpha)^2 and the odd one a commuted product), so both signs give
/// the same bosonic potential.
pub fn eval_potential(p: &ScarfParams, sign: QuasiParity, x: f64) -> Complex64 {
    let a = p.alpha * sign.sign();
    let b = p.beta;
    let u = p.u(x);
    let ch = u.cosh();
    let sh = u.sinh();
    let sech2 = 1.0 / (ch * ch);
    let even = (a + b) * 0.5 * ((a + b) * 0.5) + (a - b) * 0.5 * ((a - b) * 0.5) - 0.25;
    let odd = (b + a) * 0.5 * ((b - a) * 0.5);
    -sech2 * even + 2.0 * I * sh * sech2 * odd
}

/// Closed-form level E_n = -(n + (q alpha + beta + 1)/2)^2.
///
/// Total in `n`; indices at or above [`max_level`] are valid inputs but
/// label non-normalizable solutions.
pub fn energy(p: &ScarfParams, q: QuasiParity, n: usize) -> Complex64 {
    let shifted = (p.alpha * q.sign() + p.beta + 1.0) * 0.5 + n as f64;
    -shifted * shifted
}

/// Number of normalizable levels in sector `q`: integers n >= 0 with
/// n < -(Re(q alpha + beta) + 1)/2.
pub fn max_level(p: &ScarfParams, q: QuasiParity) -> usize {
    let bound = -(q.sign() * p.alpha.re + p.beta.re + 1.0) / 2.0;
    if bound <= 0.0 {
        0
    } else {
        bound.ceil() as usize
    }
}

/// Normalizability bound of sector `q` as a real number (levels require
/// n strictly below it). Exposed so callers can print it on rejection.
pub fn level_bound(p: &ScarfParams, q: QuasiParity) -> f64 {
    -(q.sign() * p.alpha.re + p.beta.re + 1.0) / 2.0
}

/// Unnormalized bound-state wavefunction of Eq.-(6) form,
///
/// ```text
/// psi(x) = (1 - i sinh u)^(q a/2 + 1/4) (1 + i sinh u)^(b/2 + 1/4)
///          P_n^(q a, b)(i sinh u),    u = x + i eps.
/// ```
///
/// Complex powers take the principal branch. On the real line (eps = 0)
/// both bases have real part exactly 1, so the branch is continuous; for
/// eps != 0 the branch-cut condition Re(1 -/+ i sinh u) > 0 is checked
/// pointwise and violations are an error.
pub fn wavefunction(p: &ScarfParams, q: QuasiParity, n: usize, x: f64) -> Result<Complex64> {
    let levels = max_level(p, q);
    if n >= levels {
        return Err(Error::NonNormalizable {
            n,
            bound: level_bound(p, q),
        });
    }
    wavefunction_value(p, q, n, x)
}

fn wavefunction_value(p: &ScarfParams, q: QuasiParity, n: usize, x: f64) -> Result<Complex64> {
    let a = p.alpha * q.sign();
    let b = p.beta;
    let s = p.u(x).sinh();
    let f_minus = 1.0 - I * s;
    let f_plus = 1.0 + I * s;
    if p.axis_shift != 0.0 && (f_minus.re <= 0.0 || f_plus.re <= 0.0) {
        return Err(Error::BranchCut {
            x,
            axis_shift: p.axis_shift,
        });
    }
    let poly = jacobi_poly(JacobiParams::new(a, b, n)?, I * s)?;
    Ok(f_minus.powc(a * 0.5 + 0.25) * f_plus.powc(b * 0.5 + 0.25) * poly)
}

/// Samples a bound-state wavefunction on a grid.
pub fn sample_wavefunction(
    p: &ScarfParams,
    q: QuasiParity,
    n: usize,
    grid: &GridSpec,
) -> Result<Vec<Complex64>> {
    if n >= max_level(p, q) {
        return Err(Error::NonNormalizable {
            n,
            bound: level_bound(p, q),
        });
    }
    grid.points()
        .map(|x| wavefunction_value(p, q, n, x))
        .collect()
}

/// One normalizable level: quasi-parity, index, closed-form energy, its
/// numerically computed PT pseudo-norm, and an evaluation handle.
#[derive(Debug, Clone)]
pub struct BoundState {
    pub q: QuasiParity,
    pub n: usize,
    pub energy: Complex64,
    /// Pseudo-norm under the conjugating PT pairing (the convention the
    /// verification layer finds to orthogonalize the family); vanishes in
    /// the broken phase.
    pub pseudo_norm: Complex64,
    params: ScarfParams,
}

impl BoundState {
    /// The analytic wavefunction at `x` (unnormalized).
    pub fn psi(&self, x: f64) -> Result<Complex64> {
        wavefunction(&self.params, self.q, self.n, x)
    }

    pub fn params(&self) -> &ScarfParams {
        &self.params
    }
}

/// All normalizable levels of both sectors, cheap form: (q, n, energy).
/// Order: q = +1 sector first, ascending n.
pub fn bound_levels(p: &ScarfParams) -> Vec<(QuasiParity, usize, Complex64)> {
    let mut out = Vec::new();
    for q in QuasiParity::BOTH {
        for n in 0..max_level(p, q) {
            out.push((q, n, energy(p, q, n)));
        }
    }
    out
}

/// All normalizable levels with pseudo-norms computed on `grid`.
pub fn bound_states(p: &ScarfParams, grid: &GridSpec) -> Result<Vec<BoundState>> {
    let mut out = Vec::new();
    for q in QuasiParity::BOTH {
        for n in 0..max_level(p, q) {
            let samples = sample_wavefunction(p, q, n, grid)?;
            let pseudo_norm = pt_inner(&samples, &samples, grid, InnerConvention::Conjugating)?;
            out.push(BoundState {
                q,
                n,
                energy: energy(p, q, n),
                pseudo_norm,
                params: *p,
            });
        }
    }
    Ok(out)
}

/// Foreign coefficient dictionaries for the same potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NotationDictionary {
    /// V(x) = -V1 sech^2 x + i V2 sinh x sech^2 x ... wait, stores the
    /// two strength coefficients of the even and odd terms.
    V1V2 { v1: Complex64, v2: Complex64 },
    /// The (A, B) parametrization common in the SUSY literature.
    AB { a: Complex64, b: Complex64 },
    /// The (s, lambda) parametrization of the Hermitian literature.
    SLambda { s: Complex64, lambda: Complex64 },
}

/// Tag selecting an export dictionary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DictionaryTarget {
    V1V2,
    AB,
    SLambda,
}

impl std::str::FromStr for DictionaryTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v1v2" => Ok(DictionaryTarget::V1V2),
            "ab" => Ok(DictionaryTarget::AB),
            "slambda" => Ok(DictionaryTarget::SLambda),
            other => Err(Error::InvalidParams(format!(
                "unknown dictionary target '{other}' (expected v1v2 | ab | slambda)"
            ))),
        }
    }
}

/// Exports the couplings to a foreign dictionary:
/// V1 = [(a+b)^2 + (a-b)^2 - 1]/4 and V2 = (a+b)(a-b)/2,
/// A = -(a+b+1)/2 and B = (a-b)/2,
/// s = -(a+b+1)/2 and lambda = i (a-b)/2.
pub fn export_params(p: &ScarfParams, target: DictionaryTarget) -> NotationDictionary {
    let (a, b) = (p.alpha, p.beta);
    match target {
        DictionaryTarget::V1V2 => NotationDictionary::V1V2 {
            v1: ((a + b) * (a + b) + (a - b) * (a - b) - 1.0) * 0.25,
            v2: (a + b) * (a - b) * 0.5,
        },
        DictionaryTarget::AB => NotationDictionary::AB {
            a: -(a + b + 1.0) * 0.5,
            b: (a - b) * 0.5,
        },
        DictionaryTarget::SLambda => NotationDictionary::SLambda {
            s: -(a + b + 1.0) * 0.5,
            lambda: I * (a - b) * 0.5,
        },
    }
}

/// Inverts a foreign dictionary back to the couplings.
///
/// The AB and s-lambda maps are linear and invert exactly. The V1V2 map
/// sees the couplings only through their squares, so each of alpha, beta
/// is recovered as the principal square root: the representative with
/// Re >= 0, ties broken by Im >= 0 (alpha -> -alpha is the quasi-parity
/// ambiguity; beta -> -beta likewise leaves both V's unchanged).
pub fn convert_params(dict: NotationDictionary) -> Result<ScarfParams> {
    let (alpha, beta) = match dict {
        NotationDictionary::V1V2 { v1, v2 } => {
            ((v1 + v2 + 0.25).sqrt(), (v1 - v2 + 0.25).sqrt())
        }
        NotationDictionary::AB { a, b } => (b - a - 0.5, -a - b - 0.5),
        NotationDictionary::SLambda { s, lambda } => {
            (-s - 0.5 - I * lambda, -s - 0.5 + I * lambda)
        }
    };
    ScarfParams::new(alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::symmetric_grid;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unbroken() -> ScarfParams {
        ScarfParams::new(c(0.8, 0.0), c(-4.2, 0.0)).unwrap()
    }

    fn broken() -> ScarfParams {
        ScarfParams::new(c(0.0, 1.0), c(-4.0, 0.0)).unwrap()
    }

    /// Independent route to the potential through the (A, B) dictionary:
    /// V(x) = -[B^2 + A(A+1)] sech^2 x + i B (2A+1) sinh x sech^2 x.
    fn potential_from_ab(p: &ScarfParams, x: f64) -> Complex64 {
        let NotationDictionary::AB { a, b } = export_params(p, DictionaryTarget::AB) else {
            unreachable!()
        };
        let u = Complex64::new(x, p.axis_shift);
        let sech2 = 1.0 / (u.cosh() * u.cosh());
        let sh = u.sinh();
        -(b * b + a * (a + 1.0)) * sech2 + Complex64::new(0.0, 1.0) * b * (2.0 * a + 1.0) * sh * sech2
    }

    #[test]
    fn potential_at_origin() {
        // -((-1.7)^2 + 2.5^2 - 0.25) = -8.89
        let v = eval_potential(&unbroken(), QuasiParity::Plus, 0.0);
        assert_relative_eq!(v.re, -8.89, max_relative = 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn potential_matches_ab_route() {
        let p = unbroken();
        let pb = broken();
        for k in 0..100 {
            let x = -6.0 + 12.0 * (k as f64) / 99.0;
            for params in [&p, &pb] {
                let v = eval_potential(params, QuasiParity::Plus, x);
                let w = potential_from_ab(params, x);
                assert!((v - w).norm() <= 1e-12 * (1.0 + v.norm()), "x = {x}");
            }
        }
    }

    #[test]
    fn potential_even_for_equal_couplings() {
        // alpha = beta kills the odd term identically.
        let p = ScarfParams::new(c(1.3, 0.4), c(1.3, 0.4)).unwrap();
        for x in [-2.0, -0.5, 0.0, 1.7, 3.0] {
            let v = eval_potential(&p, QuasiParity::Plus, x);
            let vr = eval_potential(&p, QuasiParity::Plus, -x);
            assert!((v - vr).norm() <= 1e-14 * (1.0 + v.norm()));
        }
    }

    #[test]
    fn potential_pt_identity() {
        // [V(-x)]* = V(x) in both PT phases (eps = 0).
        for p in [unbroken(), broken()] {
            for k in 0..100 {
                let x = -8.0 + 16.0 * (k as f64) / 99.0;
                let v = eval_potential(&p, QuasiParity::Plus, x);
                let w = eval_potential(&p, QuasiParity::Plus, -x).conj();
                assert!((v - w).norm() <= 1e-13 * (1.0 + v.norm()));
            }
        }
    }

    #[test]
    fn potential_quasi_parity_invariance_is_bitwise() {
        for p in [unbroken(), broken()] {
            for k in 0..200 {
                let x = -10.0 + 20.0 * (k as f64) / 199.0;
                let vp = eval_potential(&p, QuasiParity::Plus, x);
                let vm = eval_potential(&p, QuasiParity::Minus, x);
                assert_eq!(vp, vm, "x = {x}");
            }
        }
    }

    #[test]
    fn energies_unbroken() {
        let p = unbroken();
        assert_relative_eq!(energy(&p, QuasiParity::Plus, 0).re, -1.44, max_relative = 1e-14);
        assert_relative_eq!(energy(&p, QuasiParity::Plus, 1).re, -0.04, max_relative = 1e-13);
        assert_relative_eq!(energy(&p, QuasiParity::Minus, 0).re, -4.0, max_relative = 1e-14);
        assert_relative_eq!(energy(&p, QuasiParity::Minus, 1).re, -1.0, max_relative = 1e-14);
    }

    #[test]
    fn energy_zero_at_vanishing_shifted_index() {
        // alpha = 1, beta = -4: (q alpha + beta + 1)/2 = -1, so n = 1 sits
        // exactly at zero energy.
        let p = ScarfParams::new(c(1.0, 0.0), c(-4.0, 0.0)).unwrap();
        assert!(energy(&p, QuasiParity::Plus, 1).norm() == 0.0);
    }

    #[test]
    fn energies_broken_conjugate_pairing() {
        let p = broken();
        let e0p = energy(&p, QuasiParity::Plus, 0);
        let e0m = energy(&p, QuasiParity::Minus, 0);
        assert!((e0p - c(-2.0, 1.5)).norm() <= 1e-14);
        assert!((e0m - c(-2.0, -1.5)).norm() <= 1e-14);
        // exact multiset pairing across sectors
        let plus: Vec<_> = (0..max_level(&p, QuasiParity::Plus))
            .map(|n| energy(&p, QuasiParity::Plus, n))
            .collect();
        let minus: Vec<_> = (0..max_level(&p, QuasiParity::Minus))
            .map(|n| energy(&p, QuasiParity::Minus, n))
            .collect();
        assert_eq!(plus.len(), minus.len());
        for e in &plus {
            assert!(minus.iter().any(|f| *f == e.conj()));
        }
    }

    #[test]
    fn level_counts() {
        let p = unbroken();
        assert_eq!(max_level(&p, QuasiParity::Plus), 2);
        assert_eq!(max_level(&p, QuasiParity::Minus), 2);

        let imag = ScarfParams::new(c(0.0, 2.0), c(0.0, 3.0)).unwrap();
        assert_eq!(max_level(&imag, QuasiParity::Plus), 0);
        assert_eq!(max_level(&imag, QuasiParity::Minus), 0);

        let b = broken();
        assert_eq!(max_level(&b, QuasiParity::Plus), 2);
        assert_eq!(max_level(&b, QuasiParity::Minus), 2);
    }

    #[test]
    fn wavefunction_origin_values() {
        let p = unbroken();
        // n = 0 at the origin: both prefactors are 1^..., P_0 = 1.
        let v = wavefunction(&p, QuasiParity::Plus, 0, 0.0).unwrap();
        assert!((v - c(1.0, 0.0)).norm() <= 1e-15);
        let v = wavefunction(&p, QuasiParity::Minus, 0, 0.0).unwrap();
        assert!((v - c(1.0, 0.0)).norm() <= 1e-15);
        // n = 1: P_1^(0.8,-4.2)(0) = 2.5
        let v = wavefunction(&p, QuasiParity::Plus, 1, 0.0).unwrap();
        assert!((v - c(2.5, 0.0)).norm() <= 1e-14);
    }

    #[test]
    fn wavefunction_decay_rate() {
        // Ground-state decay exp(-kappa x), kappa = -(q a + b + 1)/2 = 1.2;
        // the measured local rate between x = 3 and 4 must sit within 10%.
        let p = unbroken();
        let a3 = wavefunction(&p, QuasiParity::Plus, 0, 3.0).unwrap().norm();
        let a4 = wavefunction(&p, QuasiParity::Plus, 0, 4.0).unwrap().norm();
        let rate = -(a4 / a3).ln();
        assert!((rate - 1.2).abs() <= 0.12, "rate = {rate}");
        assert!(a3 < 0.1 && a4 < a3);
    }

    #[test]
    fn wavefunction_rejects_unnormalizable_index() {
        let p = unbroken();
        match wavefunction(&p, QuasiParity::Plus, 5, 0.0) {
            Err(Error::NonNormalizable { n: 5, bound }) => {
                assert_relative_eq!(bound, 1.2, max_relative = 1e-12)
            }
            other => panic!("expected NonNormalizable, got {other:?}"),
        }
    }

    #[test]
    fn reflection_duality() {
        // Swapping (alpha, beta) equals (-1)^n times reflecting x.
        let p = unbroken();
        let swapped = ScarfParams::new(p.beta, p.alpha).unwrap();
        for n in 0..2usize {
            // swapped parameters admit the same level count in the mirror
            // sector; compare q = +1 of one against q = +1 of the other
            for k in 0..50 {
                let x = -4.0 + 8.0 * (k as f64) / 49.0;
                let lhs = wavefunction_value(&swapped, QuasiParity::Plus, n, x).unwrap();
                let rhs = wavefunction_value(&p, QuasiParity::Plus, n, -x).unwrap()
                    * if n % 2 == 0 { 1.0 } else { -1.0 };
                let scale = lhs.norm().max(rhs.norm()).max(1e-30);
                assert!((lhs - rhs).norm() <= 1e-10 * scale, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn eigenfunction_residual() {
        // -psi'' + V psi = E psi at 50 interior points, 4th-order central
        // differences with step 1e-3.
        let h = 1e-3;
        for p in [unbroken(), broken()] {
            for q in QuasiParity::BOTH {
                for n in 0..max_level(&p, q) {
                    let e = energy(&p, q, n);
                    let mut max_psi: f64 = 0.0;
                    let mut worst: f64 = 0.0;
                    for k in 0..50 {
                        let x = -5.0 + 10.0 * (k as f64) / 49.0;
                        let psi = |t: f64| wavefunction_value(&p, q, n, t).unwrap();
                        let d2 = (-psi(x + 2.0 * h) + 16.0 * psi(x + h) - 30.0 * psi(x)
                            + 16.0 * psi(x - h)
                            - psi(x - 2.0 * h))
                            / (12.0 * h * h);
                        let r = -d2 + eval_potential(&p, q, x) * psi(x) - e * psi(x);
                        worst = worst.max(r.norm());
                        max_psi = max_psi.max(psi(x).norm());
                    }
                    assert!(
                        worst <= 1e-6 * max_psi,
                        "residual {worst:e} vs scale {max_psi:e} (q={q}, n={n})"
                    );
                }
            }
        }
    }

    #[test]
    fn hermitian_case_matches_unshifted_formulas() {
        // alpha = beta*: potential real, single level at -0.49.
        let p = ScarfParams::new(c(-1.2, -2.5), c(-1.2, 2.5)).unwrap();
        assert_eq!(classify_symmetry(&p), SymmetryPhase::Hermitian);
        for x in [-3.0, -1.0, 0.0, 0.4, 2.2] {
            assert!(eval_potential(&p, QuasiParity::Plus, x).im.abs() < 1e-13);
        }
        assert_eq!(max_level(&p, QuasiParity::Plus), 1);
        assert_eq!(max_level(&p, QuasiParity::Minus), 0);
        let e = energy(&p, QuasiParity::Plus, 0);
        assert!((e - c(-0.49, 0.0)).norm() <= 1e-13);
    }

    #[test]
    fn classification_table() {
        use SymmetryPhase::*;
        let cases = [
            (c(0.8, 0.0), c(-4.2, 0.0), PtUnbroken),
            (c(0.0, 1.0), c(-4.0, 0.0), PtBroken),
            (c(-4.0, 0.0), c(0.0, 1.0), PtBroken),
            (c(-1.2, -2.5), c(-1.2, 2.5), Hermitian),
            (c(0.0, 2.0), c(0.0, 3.0), NoBoundStates),
            (c(1.0, 1.0), c(2.0, -0.5), General),
            // real conjugate pair classifies Hermitian, not PtUnbroken
            (c(1.5, 0.0), c(1.5, 0.0), Hermitian),
            // alpha = 0 is real, not imaginary
            (c(0.0, 0.0), c(-4.0, 0.0), PtUnbroken),
        ];
        for (a, b, want) in cases {
            let p = ScarfParams::new(a, b).unwrap();
            assert_eq!(classify_symmetry(&p), want, "alpha={a} beta={b}");
        }
    }

    #[test]
    fn dictionary_values() {
        let p = unbroken();
        match export_params(&p, DictionaryTarget::V1V2) {
            NotationDictionary::V1V2 { v1, v2 } => {
                assert_relative_eq!(v1.re, 8.89, max_relative = 1e-14);
                assert_relative_eq!(v2.re, -8.5, max_relative = 1e-14);
                // V1 equals -V(0)
                let v0 = eval_potential(&p, QuasiParity::Plus, 0.0);
                assert!((v1 + v0).norm() <= 1e-13);
            }
            _ => unreachable!(),
        }
        match export_params(&p, DictionaryTarget::AB) {
            NotationDictionary::AB { a, b } => {
                assert_relative_eq!(a.re, 1.2, max_relative = 1e-14);
                assert_relative_eq!(b.re, 2.5, max_relative = 1e-14);
            }
            _ => unreachable!(),
        }
        // alpha = beta: V2 = B = lambda = 0
        let pe = ScarfParams::new(c(0.9, 0.1), c(0.9, 0.1)).unwrap();
        match export_params(&pe, DictionaryTarget::V1V2) {
            NotationDictionary::V1V2 { v2, .. } => assert!(v2.norm() == 0.0),
            _ => unreachable!(),
        }
        match export_params(&pe, DictionaryTarget::SLambda) {
            NotationDictionary::SLambda { lambda, .. } => assert!(lambda.norm() == 0.0),
            _ => unreachable!(),
        }
    }

    #[test]
    fn dictionary_round_trips() {
        // AB and s-lambda are linear bijections: exact round trip.
        for (a, b) in [
            (c(0.8, 0.0), c(-4.2, 0.0)),
            (c(0.0, 1.0), c(-4.0, 0.0)),
            (c(1.3, -0.7), c(0.4, 0.9)),
        ] {
            let p = ScarfParams::new(a, b).unwrap();
            for target in [DictionaryTarget::AB, DictionaryTarget::SLambda] {
                let back = convert_params(export_params(&p, target)).unwrap();
                assert!((back.alpha - a).norm() <= 1e-13 * (1.0 + a.norm()));
                assert!((back.beta - b).norm() <= 1e-13 * (1.0 + b.norm()));
            }
            // V1V2 sees only the squares; round trip up to signs, with the
            // Re >= 0 (tie Im >= 0) representative returned.
            let back = convert_params(export_params(&p, DictionaryTarget::V1V2)).unwrap();
            assert!((back.alpha * back.alpha - a * a).norm() <= 1e-12 * (1.0 + a.norm_sqr()));
            assert!((back.beta * back.beta - b * b).norm() <= 1e-12 * (1.0 + b.norm_sqr()));
            assert!(back.alpha.re >= 0.0 && back.beta.re >= 0.0);
        }
    }

    #[test]
    fn axis_shift_guard() {
        assert!(ScarfParams::with_axis_shift(c(0.8, 0.0), c(-4.2, 0.0), 1.6).is_err());
        assert!(ScarfParams::with_axis_shift(c(0.8, 0.0), c(-4.2, 0.0), 1.4).is_ok());
    }

    #[test]
    fn bound_states_carry_pseudo_norms() {
        let grid = symmetric_grid(24.0, 1601, 4).unwrap();
        let states = bound_states(&unbroken(), &grid).unwrap();
        assert_eq!(states.len(), 4);
        for s in &states {
            assert!(s.pseudo_norm.norm() > 1e-3, "pseudo-norm collapsed: {s:?}");
            assert!(s.pseudo_norm.im.abs() <= 1e-10 * (1.0 + s.pseudo_norm.re.abs()));
        }
        // q = +1 sector norms negative, q = -1 positive for this benchmark
        assert!(states[0].pseudo_norm.re < 0.0);
        assert!(states[2].pseudo_norm.re > 0.0);
        assert!((states[0].psi(0.0).unwrap() - c(1.0, 0.0)).norm() < 1e-14);
    }
}
