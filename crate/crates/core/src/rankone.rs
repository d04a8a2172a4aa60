//! Rank-one evaluator: the identity-normalized eigenfunction as a power
//! series in `u = (1 − s)/2`, and the Gauss hypergeometric series.
//!
//! For `m = (k₁, 0, k₂)` and `λ = λ₁ε`, the eigen-equation
//! `L(m)F = (λ₁² − ρ²)F` with `ρ = k₁/2 + k₂` reads, in `u`,
//!
//! ```text
//! u(1 − u) F'' + (c − (ρ + 1) u) F' + (λ₁² − ρ²)/4 · F = 0,   c = (1 + k₁ + k₂)/2.
//! ```
//!
//! `u = 0` is the identity, `u = 1` the antipodal point `s = −1`, so the
//! series converges for `|u| < 1` in both pictures (`s = cos t`, `s = cosh t`).

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::{Float, Num};

use crate::error::{Error, Result};

/// Largest `|u|` accepted by [`frobenius_eval`].
pub const MAX_U: f64 = 0.95;

/// Largest `|z|` accepted by [`gauss_2f1`].
pub const MAX_Z_2F1: f64 = 0.9;

/// Field operations needed by the Frobenius recurrence.
pub trait Scalar: Clone + Num + Neg<Output = Self> {
    fn from_i64(n: i64) -> Self;
    /// Whether a leading recurrence coefficient counts as zero.
    fn is_degenerate(&self) -> bool;
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn is_degenerate(&self) -> bool {
        self.abs() < 1e-12
    }
}

impl Scalar for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_degenerate(&self) -> bool {
        self.norm() < 1e-12
    }
}

/// Power-series solution at a regular singular point `u = 0` of
/// `p2(u) F'' + p1(u) F' + p0(u) F = 0`, with `p2(0) = 0` and `F(0) = 1`.
#[derive(Debug, Clone)]
pub struct FrobeniusEngine<S> {
    p2: Vec<S>,
    p1: Vec<S>,
    p0: Vec<S>,
    coeffs: Vec<S>,
}

fn coeff<S: Scalar>(p: &[S], k: usize) -> S {
    p.get(k).cloned().unwrap_or_else(S::zero)
}

impl<S: Scalar> FrobeniusEngine<S> {
    pub fn new(p2: Vec<S>, p1: Vec<S>, p0: Vec<S>) -> Result<Self> {
        if !coeff(&p2, 0).is_zero() {
            return Err(Error::InvalidArgument("u = 0 is not a singular point".into()));
        }
        Ok(FrobeniusEngine {
            p2,
            p1,
            p0,
            coeffs: vec![S::one()],
        })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Computes `c_{n+1}` from the coefficient of `u^n`:
    ///
    /// ```text
    /// (n+1)(n p2_1 + p1_0) c_{n+1} = −[ Σ_{k≥2} p2_k (n−k+2)(n−k+1) c_{n−k+2}
    ///                                 + Σ_{k≥1} p1_k (n−k+1) c_{n−k+1}
    ///                                 + Σ_{k≥0} p0_k c_{n−k} ]
    /// ```
    pub fn extend_to(&mut self, order: usize) -> Result<()> {
        while self.order() < order {
            let n = self.order();
            let lead = S::from_i64(n as i64) * coeff(&self.p2, 1) + coeff(&self.p1, 0);
            if lead.is_degenerate() {
                return Err(Error::IndicialCollision { order: n + 1 });
            }
            let mut acc = S::zero();
            for (k, p) in self.p2.iter().enumerate().skip(2) {
                if k <= n + 1 {
                    let j = n + 2 - k;
                    acc = acc + p.clone() * S::from_i64((j * (j - 1)) as i64) * self.coeffs[j].clone();
                }
            }
            for (k, p) in self.p1.iter().enumerate().skip(1) {
                if k <= n + 1 {
                    let j = n + 1 - k;
                    acc = acc + p.clone() * S::from_i64(j as i64) * self.coeffs[j].clone();
                }
            }
            for (k, p) in self.p0.iter().enumerate() {
                if k <= n {
                    acc = acc + p.clone() * self.coeffs[n - k].clone();
                }
            }
            let next = -acc / (S::from_i64(n as i64 + 1) * lead);
            self.coeffs.push(next);
        }
        Ok(())
    }
}

/// Coefficients of `p2 F'' + p1 F' + p0 F` for the polynomial `F = Σ c_j u^j`.
pub fn ode_residual<S: Scalar>(p2: &[S], p1: &[S], p0: &[S], c: &[S]) -> Vec<S> {
    let deg = c.len() + p2.len().max(p1.len()).max(p0.len());
    let mut out = vec![S::zero(); deg];
    for (j, cj) in c.iter().enumerate() {
        for (k, p) in p2.iter().enumerate() {
            if j >= 2 {
                let t = p.clone() * S::from_i64((j * (j - 1)) as i64) * cj.clone();
                out[j - 2 + k] = out[j - 2 + k].clone() + t;
            }
        }
        for (k, p) in p1.iter().enumerate() {
            if j >= 1 {
                let t = p.clone() * S::from_i64(j as i64) * cj.clone();
                out[j - 1 + k] = out[j - 1 + k].clone() + t;
            }
        }
        for (k, p) in p0.iter().enumerate() {
            out[j + k] = out[j + k].clone() + p.clone() * cj.clone();
        }
    }
    out
}

/// `(p2, p1, p0)` of the rank-one equation in `u`, for scalar `λ₁²`.
pub fn bc1_ode<S: Scalar>(k1: S, k2: S, lambda_sq: S) -> (Vec<S>, Vec<S>, Vec<S>) {
    let two = S::from_i64(2);
    let rho = k1.clone() / two.clone() + k2.clone();
    let c = (S::one() + k1 + k2) / two;
    let p0 = (lambda_sq - rho.clone() * rho.clone()) / S::from_i64(4);
    (
        vec![S::zero(), S::one(), -S::one()],
        vec![c, -(rho + S::one())],
        vec![p0],
    )
}

/// `ρ = k₁/2 + k₂`.
pub fn bc1_rho(k1: f64, k2: f64) -> f64 {
    0.5 * k1 + k2
}

/// `c = (1 + k₁ + k₂)/2`, the indicial parameter at the identity.
pub fn bc1_indicial(k1: f64, k2: f64) -> f64 {
    0.5 * (1.0 + k1 + k2)
}

/// A truncated power series `Σ c_j u^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    pub coeffs: Vec<Complex64>,
}

/// Value of a truncated series with the size of its last term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub last_term: f64,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_u(&self, u: Complex64) -> SeriesValue {
        let value = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c);
        let last_term = match self.coeffs.last() {
            Some(c) => c.norm() * u.norm().powi(self.order() as i32),
            None => 0.0,
        };
        SeriesValue { value, last_term }
    }

    /// Evaluates at `s`, refusing points with `|u| ≥ 0.95`.
    pub fn eval_s(&self, s: Complex64) -> Result<SeriesValue> {
        let u = (Complex64::new(1.0, 0.0) - s) * 0.5;
        if !(u.norm() < MAX_U) {
            return Err(Error::Domain("|1 - s|/2 must stay below 0.95".into()));
        }
        Ok(self.eval_u(u))
    }

    pub fn scale(&self, k: Complex64) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

/// The identity-normalized eigenfunction of the rank-one operator with
/// multiplicity `(k₁, 0, k₂)` and spectral parameter `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusSeries {
    pub k1: f64,
    pub k2: f64,
    pub lambda: Complex64,
    pub series: PowerSeries,
}

impl FrobeniusSeries {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.series.coeffs
    }
}

fn engine(k1: f64, k2: f64, lambda: Complex64) -> Result<FrobeniusEngine<Complex64>> {
    if !(k1.is_finite() && k2.is_finite() && lambda.re.is_finite() && lambda.im.is_finite()) {
        return Err(Error::InvalidArgument("non-finite rank-one parameters".into()));
    }
    let (p2, p1, p0) = bc1_ode(
        Complex64::new(k1, 0.0),
        Complex64::new(k2, 0.0),
        lambda * lambda,
    );
    FrobeniusEngine::new(p2, p1, p0)
}

/// Coefficients up to `u^order`.
pub fn frobenius_build(k1: f64, k2: f64, lambda: Complex64, order: usize) -> Result<FrobeniusSeries> {
    let mut e = engine(k1, k2, lambda)?;
    e.extend_to(order)?;
    Ok(FrobeniusSeries {
        k1,
        k2,
        lambda,
        series: PowerSeries::new(e.coeffs().to_vec()),
    })
}

const ADAPTIVE_MAX_ORDER: usize = 20_000;
const ADAPTIVE_MIN_ORDER: usize = 16;

/// Chooses the order so that the tail on `|u| ≤ u_max` is below
/// `tol` relative to the partial sum of absolute terms; four consecutive
/// small terms end the build.
pub fn frobenius_build_adaptive(
    k1: f64,
    k2: f64,
    lambda: Complex64,
    u_max: f64,
    tol: f64,
) -> Result<FrobeniusSeries> {
    if !(u_max < MAX_U) {
        return Err(Error::Domain("|1 - s|/2 must stay below 0.95".into()));
    }
    let mut e = engine(k1, k2, lambda)?;
    let mut abs_sum = 1.0;
    let mut small = 0;
    let mut order = 0;
    let mut power = 1.0;
    while order < ADAPTIVE_MAX_ORDER {
        order += 1;
        e.extend_to(order)?;
        power *= u_max;
        let term = e.coeffs()[order].norm() * power;
        abs_sum += term;
        if term <= tol * abs_sum {
            small += 1;
        } else {
            small = 0;
        }
        if small >= 4 && order >= ADAPTIVE_MIN_ORDER {
            return Ok(FrobeniusSeries {
                k1,
                k2,
                lambda,
                series: PowerSeries::new(e.coeffs().to_vec()),
            });
        }
    }
    Err(Error::Domain("rank-one series did not converge within the order limit".into()))
}

/// Horner evaluation at `s` (complex, either picture).
pub fn frobenius_eval(fs: &FrobeniusSeries, s: Complex64) -> Result<SeriesValue> {
    fs.series.eval_s(s)
}

/// Identity-normalized `F(λ, (k₁, 0, k₂); s)` with an order chosen for
/// this point to double precision.
pub fn rank_one_value(k1: f64, k2: f64, lambda: Complex64, s: Complex64) -> Result<Complex64> {
    let u = ((Complex64::new(1.0, 0.0) - s) * 0.5).norm();
    let fs = frobenius_build_adaptive(k1, k2, lambda, u.max(1e-3), 1e-17)?;
    Ok(frobenius_eval(&fs, s)?.value)
}

fn nonpositive_integer(c: Complex64) -> bool {
    c.im == 0.0 && c.re <= 0.0 && c.re == c.re.round()
}

const GAUSS_MAX_TERMS: usize = 100_000;

/// `₂F₁(a, b; c; z)` by its power series, `|z| ≤ 0.9`.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(gauss_series(a, b, c, z)?.0)
}

/// Returns the series value and its termwise derivative in `z`.
fn gauss_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if nonpositive_integer(c) {
        return Err(Error::ParameterPole(c.re));
    }
    if !(z.norm() <= MAX_Z_2F1) {
        return Err(Error::Domain("|z| must not exceed 0.9".into()));
    }
    // t_j = (a)_j (b)_j / ((c)_j j!), kept without the z^j factor for the
    // derivative: F' = Σ j t_j z^{j−1}.
    let one = Complex64::new(1.0, 0.0);
    let mut coef = one;
    let mut zpow_prev = Complex64::new(0.0, 0.0);
    let mut zpow = one;
    let mut sum = one;
    let mut dsum = Complex64::new(0.0, 0.0);
    let mut small = 0;
    for j in 0..GAUSS_MAX_TERMS {
        let jf = j as f64;
        coef = coef * (a + jf) * (b + jf) / ((c + jf) * (jf + 1.0));
        zpow_prev = zpow;
        zpow *= z;
        let term = coef * zpow;
        let dterm = coef * zpow_prev * (jf + 1.0);
        sum += term;
        dsum += dterm;
        if coef == Complex64::new(0.0, 0.0) {
            return Ok((sum, dsum));
        }
        if term.norm() <= 1e-17 * sum.norm() && dterm.norm() <= 1e-17 * dsum.norm().max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok((sum, dsum));
            }
        } else {
            small = 0;
        }
    }
    let _ = zpow_prev;
    Err(Error::Domain("hypergeometric series did not converge".into()))
}

/// Both sides of `d/dz ₂F₁(a, b; c; z) = (ab/c) ₂F₁(a+1, b+1; c+1; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
}

/// The left side is the termwise derivative of the series, the right side
/// the shifted series.
pub fn classical_shift_check(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<ShiftCheck> {
    let (_, lhs) = gauss_series(a, b, c, z)?;
    let one = Complex64::new(1.0, 0.0);
    let rhs = a * b / c * gauss_2f1(a + one, b + one, c + one, z)?;
    Ok(ShiftCheck { lhs, rhs })
}
