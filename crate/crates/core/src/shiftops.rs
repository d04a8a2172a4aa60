//! Rank-one shift operators as first-order operators `p(s) d/ds + q(s)` in
//! the invariant variable `s`.
//!
//! The lowering operator with shift `−b₁` at multiplicity `m = (k₁, 0, k₂)`
//! is
//!
//! ```text
//! E₋(m) = 2(s − 1) d/ds + C,   C = k₁ + k₂ − 1,
//! ```
//!
//! equal to `tanh X · d/dX + C` for `s = cosh 2X`. It maps `F(λ, m)` to
//! `C · F(λ, m − b₁)`: on the series in `u` it acts by `c_j ↦ (2j + C) c_j`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::poly::{Poly, RationalFn};
use crate::rankone::{bc1_indicial, bc1_rho, PowerSeries};
use crate::root_system::Multiplicity;

/// `b₁ = (4, 0, −2)`
pub const B1: Multiplicity = Multiplicity::new(4.0, 0.0, -2.0);

/// `p(s) d/ds + q(s)` on an interval of `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneOperator {
    pub p: RationalFn,
    pub q: RationalFn,
    /// Open interval on which the coefficients are regular.
    pub interval: (f64, f64),
}

impl RankOneOperator {
    pub fn new(p: RationalFn, q: RationalFn, interval: (f64, f64)) -> Self {
        RankOneOperator { p, q, interval }
    }

    /// Coefficients at `s`.
    pub fn coefficients(&self, s: f64) -> Result<(f64, f64)> {
        if self.p.has_pole_at(s) || self.q.has_pole_at(s) {
            return Err(Error::Representation("coefficient pole at a sample point".into()));
        }
        Ok((self.p.eval(s), self.q.eval(s)))
    }

    /// Applies the operator to a function given with its derivative.
    pub fn apply_pointwise(&self, s: f64, f: Complex64, df: Complex64) -> Result<Complex64> {
        let (p, q) = self.coefficients(s)?;
        Ok(df * p + f * q)
    }

    /// The formal transpose with respect to `ds`:
    /// `(p d/ds + q)* = −p d/ds + (q − p′)`.
    pub fn transpose(&self) -> RankOneOperator {
        RankOneOperator {
            p: -&self.p,
            q: &self.q - &self.p.derivative(),
            interval: self.interval,
        }
    }
}

/// The E₋ constant `C = k₁ + k₂ − 1` of the current multiplicity.
pub fn e_minus_constant(m: &Multiplicity) -> f64 {
    m.short + m.long - 1.0
}

/// `E₋(m) = 2(s − 1) d/ds + (k₁ + k₂ − 1)`.
pub fn e_minus(m: &Multiplicity) -> RankOneOperator {
    RankOneOperator::new(
        RationalFn::poly(Poly::linear_root(1.0).scale(2.0)),
        RationalFn::constant(e_minus_constant(m)),
        (-1.0, f64::INFINITY),
    )
}

/// Exponents `(e₀, e₁, e₂)` of the rank-one weight
/// `w_m(s) = 2^{e₀} |1 − s|^{e₁} |1 + s|^{e₂}`, where
/// `|δ(m, x)| dt = w_m(s) ds` under `s = cos t`.
pub fn weight_exponents(m: &Multiplicity) -> (f64, f64, f64) {
    let (k1, k2) = (m.short, m.long);
    (0.5 * k1 + k2, 0.5 * (k1 + k2 - 1.0), 0.5 * (k2 - 1.0))
}

/// `(log w_m)′ = −e₁/(1 − s) + e₂/(1 + s)`, as a rational function.
pub fn weight_log_derivative(m: &Multiplicity) -> RationalFn {
    let (_, e1, e2) = weight_exponents(m);
    // −e₁/(1 − s) = e₁/(s − 1)
    let a = RationalFn::new(Poly::constant(e1), Poly::linear_root(1.0));
    let b = RationalFn::new(Poly::constant(e2), Poly::linear_root(-1.0));
    &a + &b
}

/// `w_a / w_b` as a rational function when the exponent differences are
/// integers.
fn weight_ratio(a: &Multiplicity, b: &Multiplicity) -> Result<RationalFn> {
    let (a0, a1, a2) = weight_exponents(a);
    let (b0, b1, b2) = weight_exponents(b);
    let d = [a0 - b0, a1 - b1, a2 - b2];
    if d.iter().any(|x| (x - x.round()).abs() > 1e-12) {
        return Err(Error::Representation("weight ratio is not rational".into()));
    }
    let mut num = Poly::constant(2f64.powi(d[0].round() as i32));
    let mut den = Poly::constant(1.0);
    let factors = [(d[1].round() as i32, Poly::new(vec![1.0, -1.0])), (d[2].round() as i32, Poly::new(vec![1.0, 1.0]))];
    for (k, f) in factors.iter() {
        for _ in 0..k.abs() {
            if *k > 0 {
                num = &num * f;
            } else {
                den = &den * f;
            }
        }
    }
    Ok(RationalFn::new(num, den))
}

/// The raising operator `G₊(b₁, m)`, adjoint to `E₋(m + b₁)`:
/// `(E₋ F, H)_m = (F, G₊ H)_{m + b₁}` with `(f, g)_m = ∫_{−1}^{1} f g w_m ds`.
///
/// Integration by parts gives
/// `G₊ H = (w_m / w_{m+b₁}) [−p H′ + (q − p′ − p (log w_m)′) H]`
/// with `p, q` the coefficients of `E₋(m + b₁)`; the conjugation only uses
/// the logarithmic derivative of the weight.
pub fn g_plus(m: &Multiplicity) -> Result<RankOneOperator> {
    let upper = *m + B1;
    let e = e_minus(&upper);
    let t = e.transpose();
    let conj = &t.q - &(&e.p * &weight_log_derivative(m));
    let ratio = weight_ratio(m, &upper)?;
    let p = &t.p * &ratio;
    let q = &conj * &ratio;
    if p.den.degree() > 0 || q.den.degree() > 0 {
        for x in [-1.0, 1.0] {
            if p.has_pole_at(x) || q.has_pole_at(x) {
                return Err(Error::WeightSingularity(x));
            }
        }
    }
    Ok(RankOneOperator::new(p, q, (-1.0, 1.0)))
}

/// Action on a truncated series in `u = (1 − s)/2`. Only polynomial
/// coefficients are accepted; the result keeps the orders that the input
/// determines.
pub fn apply_series(op: &RankOneOperator, f: &PowerSeries) -> Result<PowerSeries> {
    if !op.p.is_polynomial() || !op.q.is_polynomial() {
        return Err(Error::Representation(
            "operator has poles inside the series disk".into(),
        ));
    }
    // s = 1 − 2u, d/ds = −½ d/du
    let pu = op.p.num.compose_affine(1.0, -2.0).scale(-0.5);
    let qu = op.q.num.compose_affine(1.0, -2.0);
    let m = f.order();
    let valid = if pu.coeffs()[0] == 0.0 { m } else { m.saturating_sub(1) };
    let mut out = vec![Complex64::new(0.0, 0.0); valid + 1];
    for (n, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &pk) in pu.coeffs().iter().enumerate() {
            if k <= n + 1 {
                let j = n + 1 - k;
                if j <= m {
                    acc += f.coeffs[j] * (j as f64 * pk);
                }
            }
        }
        for (k, &qk) in qu.coeffs().iter().enumerate() {
            if k <= n {
                acc += f.coeffs[n - k] * qk;
            }
        }
        *slot = acc;
    }
    Ok(PowerSeries::new(out))
}

/// Samples on a uniform grid `s_i = start + i h`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub start: f64,
    pub step: f64,
    pub values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn from_fn<F: FnMut(f64) -> Complex64>(start: f64, step: f64, n: usize, mut f: F) -> Self {
        SampledFunction {
            start,
            step,
            values: (0..n).map(|i| f(start + step * i as f64)).collect(),
        }
    }

    pub fn grid(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    /// First derivative with 7-point stencils (sixth order), one-sided near
    /// the ends.
    pub fn derivative(&self) -> Result<Vec<Complex64>> {
        let n = self.values.len();
        if n < STENCIL {
            return Err(Error::Representation("at least 7 samples are needed".into()));
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let left = i.saturating_sub(STENCIL / 2).min(n - STENCIL);
            let w = fornberg_weights((i - left) as f64, STENCIL);
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, wk) in w.iter().enumerate() {
                acc += self.values[left + k] * *wk;
            }
            out.push(acc / self.step);
        }
        Ok(out)
    }
}

const STENCIL: usize = 7;

/// First-derivative weights at `x0` for nodes `0, 1, …, n − 1`.
fn fornberg_weights(x0: f64, n: usize) -> Vec<f64> {
    let mut c = vec![[0.0f64; 2]; n];
    let mut c1 = 1.0;
    let mut c4 = -x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let xi = i as f64;
        let mn = i.min(1);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xi - x0;
        for j in 0..i {
            let c3 = xi - j as f64;
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|r| r[1]).collect()
}

/// Action on samples; derivatives by finite differences.
pub fn apply_sampled(op: &RankOneOperator, f: &SampledFunction) -> Result<SampledFunction> {
    let df = f.derivative()?;
    let mut values = Vec::with_capacity(f.values.len());
    for (i, (&v, &d)) in f.values.iter().zip(&df).enumerate() {
        values.push(op.apply_pointwise(f.grid(i), v, d)?);
    }
    Ok(SampledFunction {
        start: f.start,
        step: f.step,
        values,
    })
}

/// The chain `E₋(m′ − (|l|−1) b₁) ∘ … ∘ E₋(m′ − b₁) ∘ E₋(m′)`, rightmost
/// first. Each factor uses the constant of the multiplicity it acts on.
pub fn e_minus_chain(m_prime: &Multiplicity, l: i64) -> Vec<RankOneOperator> {
    (0..l.unsigned_abs())
        .map(|i| e_minus(&(*m_prime - B1 * i as f64)))
        .collect()
}

/// `Π C_i` over the chain; the chain maps `F(λ, m′)` to
/// `Π C_i · F(λ, m′ − |l| b₁)`.
pub fn chain_constant(m_prime: &Multiplicity, l: i64) -> f64 {
    (0..l.unsigned_abs())
        .map(|i| e_minus_constant(&(*m_prime - B1 * i as f64)))
        .product()
}

/// Applies an operator chain to a series, first element first.
pub fn apply_chain(chain: &[RankOneOperator], f: &PowerSeries) -> Result<PowerSeries> {
    let mut out = f.clone();
    for op in chain {
        out = apply_series(op, &out)?;
    }
    Ok(out)
}

/// The modified operator `L(m) + ρ²` acting on a series in `u`:
/// `−4 [u(1 − u) D² + (c − (ρ + 1) u) D] + ρ²`, exact on polynomials.
pub fn modified_laplacian_series(m: &Multiplicity, f: &PowerSeries) -> PowerSeries {
    let (k1, k2) = (m.short, m.long);
    let rho = bc1_rho(k1, k2);
    let c = bc1_indicial(k1, k2);
    let a = &f.coeffs;
    let n = a.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (j, slot) in out.iter_mut().enumerate() {
        // coefficient of u^j
        let mut acc = a[j] * (rho * rho);
        let jf = j as f64;
        if j + 1 < n {
            acc += a[j + 1] * (-4.0 * ((jf + 1.0) * jf + c * (jf + 1.0)));
        }
        acc += a[j] * (4.0 * (jf * (jf - 1.0) + (rho + 1.0) * jf));
        *slot = acc;
    }
    PowerSeries::new(out)
}
