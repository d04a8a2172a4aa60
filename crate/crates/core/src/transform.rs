//! Rank-one χ-spherical Fourier transform for `m = (2(q−1), 0, 1)`:
//!
//! ```text
//! 𝒮f(λ) = ∫ f(t) η_l^+(s) w_m(s) F(λ + ρ, m_+(l); s) ds,   ρ = q,
//! ```
//!
//! over `s ∈ [cos r, 1]` on the torus or `s ∈ [1, cosh r]` on `A`, computed
//! either directly or through the `E₋` chain applied to `F(λ + ρ, m′)`.
//! Values are defined up to one global constant, fixed here to 1.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::rankone::{frobenius_build_adaptive, PowerSeries};
use crate::root_system::{mult_shift_data, Multiplicity, SpectralParameter};
use crate::shiftops::{apply_chain, chain_constant, e_minus_chain};
use crate::spherical::Picture;

/// Relative change under node doubling above which a warning is attached.
pub const QUADRATURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    /// `amplitude · exp(−r² / (r² − t²))` for `|t| < r`.
    Standard { amplitude: f64 },
    /// Values at `t_k = k r / (n − 1)`, `k = 0 … n − 1`; cubic Lagrange
    /// interpolation in between, zero at and beyond `r`.
    Samples(Vec<f64>),
}

/// An even function of `t` supported in `[0, r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BumpSection {
    pub r: f64,
    pub profile: Profile,
}

/// The standard smooth bump of radius `r`.
pub fn make_bump(r: f64, amplitude: f64) -> Result<BumpSection> {
    if !(r > 0.0 && r < core::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidRadius(r));
    }
    Ok(BumpSection {
        r,
        profile: Profile::Standard { amplitude },
    })
}

impl BumpSection {
    pub fn from_samples(r: f64, samples: Vec<f64>) -> Result<Self> {
        if !(r > 0.0 && r < core::f64::consts::FRAC_PI_2) {
            return Err(Error::InvalidRadius(r));
        }
        if samples.len() < 4 {
            return Err(Error::InvalidArgument("at least 4 samples are needed".into()));
        }
        Ok(BumpSection {
            r,
            profile: Profile::Samples(samples),
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t = t.abs();
        if t >= self.r {
            return 0.0;
        }
        match &self.profile {
            Profile::Standard { amplitude } => {
                let r2 = self.r * self.r;
                amplitude * (-r2 / (r2 - t * t)).exp()
            }
            Profile::Samples(v) => {
                let n = v.len();
                let h = self.r / (n - 1) as f64;
                let x = t / h;
                let i = (x.floor() as usize).min(n - 2);
                let lo = i.saturating_sub(1).min(n - 4);
                let mut acc = 0.0;
                for (a, va) in v.iter().enumerate().skip(lo).take(4) {
                    let mut w = 1.0;
                    for b in lo..lo + 4 {
                        if a != b {
                            w *= (x - b as f64) / (a as f64 - b as f64);
                        }
                    }
                    acc += w * va;
                }
                acc
            }
        }
    }

    pub fn scaled(&self, k: f64) -> BumpSection {
        let profile = match &self.profile {
            Profile::Standard { amplitude } => Profile::Standard {
                amplitude: amplitude * k,
            },
            Profile::Samples(v) => Profile::Samples(v.iter().map(|x| x * k).collect()),
        };
        BumpSection { r: self.r, profile }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureWarning {
    pub relative_change: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformValue {
    pub value: Complex64,
    /// Set when doubling the node count moves the result by more than
    /// [`QUADRATURE_TOL`].
    pub warning: Option<QuadratureWarning>,
}

/// Inputs shared by both routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformSetup {
    pub l: i64,
    pub q: u32,
    pub nodes: usize,
    pub picture: Picture,
}

impl TransformSetup {
    pub fn new(l: i64, q: u32, nodes: usize) -> Self {
        TransformSetup {
            l,
            q,
            nodes,
            picture: Picture::Compact,
        }
    }

    pub fn with_picture(mut self, picture: Picture) -> Self {
        self.picture = picture;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.q < 1 {
            return Err(Error::InvalidArgument("q must be at least 1".into()));
        }
        if self.nodes == 0 {
            return Err(Error::InvalidArgument("node count must be positive".into()));
        }
        Ok(())
    }

    fn base(&self) -> Multiplicity {
        Multiplicity::grassmannian(self.q)
    }

    /// `[a, b]` in `s` and the map `s ↦ t`.
    fn interval(&self, r: f64) -> (f64, f64) {
        match self.picture {
            Picture::Compact => (r.cos(), 1.0),
            Picture::Noncompact => (1.0, r.cosh()),
        }
    }

    fn t_of_s(&self, s: f64) -> f64 {
        match self.picture {
            Picture::Compact => s.clamp(-1.0, 1.0).acos(),
            Picture::Noncompact => s.max(1.0).acosh(),
        }
    }

    /// `η_l^+(s) w_m(s)`, with `|1 − s|` so that both pictures share it.
    fn weight(&self, s: f64) -> f64 {
        let q = self.q as i32;
        let e = self.l.unsigned_abs() as f64;
        ((1.0 + s) / 2.0).powf(0.5 * e) * 2f64.powi(q) * (1.0 - s).abs().powi(q - 1)
    }
}

fn spectral(lambda: &SpectralParameter) -> Result<Complex64> {
    if lambda.rank() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: lambda.rank(),
        });
    }
    Ok(lambda.coords()[0])
}

fn series_for(mult: &Multiplicity, lambda: Complex64, u_max: f64) -> Result<PowerSeries> {
    Ok(frobenius_build_adaptive(mult.short, mult.long, lambda, u_max.max(1e-3), 1e-18)?.series)
}

fn integrate(f: &BumpSection, setup: &TransformSetup, series: &PowerSeries, scale: Complex64) -> Result<TransformValue> {
    let (a, b) = setup.interval(f.r);
    let run = |n: usize| -> Result<Complex64> {
        let gl = GaussLegendre::new(n);
        let mut acc = Complex64::new(0.0, 0.0);
        for (s, w) in gl.mapped(a, b) {
            let fv = f.eval(setup.t_of_s(s));
            if fv == 0.0 {
                continue;
            }
            let fs = series.eval_s(Complex64::new(s, 0.0))?.value;
            acc += fs * (w * fv * setup.weight(s));
        }
        Ok(acc * scale)
    };
    let v = run(setup.nodes)?;
    let v2 = run(2 * setup.nodes)?;
    let change = (v2 - v).norm() / v2.norm().max(f64::MIN_POSITIVE);
    let warning = if v2.norm() > 0.0 && change > QUADRATURE_TOL {
        Some(QuadratureWarning {
            relative_change: change,
        })
    } else {
        None
    };
    Ok(TransformValue { value: v, warning })
}

fn u_max(setup: &TransformSetup, r: f64) -> f64 {
    let (a, b) = setup.interval(r);
    ((1.0 - a) / 2.0).abs().max(((1.0 - b) / 2.0).abs())
}

/// `𝒮f(λ)` with `F(λ + ρ, m_+(l))` built directly.
pub fn transform_direct(f: &BumpSection, lambda: &SpectralParameter, setup: &TransformSetup) -> Result<TransformValue> {
    setup.validate()?;
    let lam = spectral(lambda)? + setup.q as f64;
    let plus = mult_shift_data(&setup.base(), setup.l).plus;
    let series = series_for(&plus, lam, u_max(setup, f.r))?;
    integrate(f, setup, &series, Complex64::new(1.0, 0.0))
}

/// `𝒮f(λ)` with `F(λ + ρ, m_+(l))` obtained as `E₋^{|l|} F(λ + ρ, m′)`
/// divided by the chain constant.
pub fn transform_shifted(f: &BumpSection, lambda: &SpectralParameter, setup: &TransformSetup) -> Result<TransformValue> {
    setup.validate()?;
    let lam = spectral(lambda)? + setup.q as f64;
    let prime = mult_shift_data(&setup.base(), setup.l).prime;
    if !prime.is_positive() {
        return Err(Error::NotPositive(prime.short, prime.medium, prime.long));
    }
    let series = series_for(&prime, lam, u_max(setup, f.r))?;
    let shifted = apply_chain(&e_minus_chain(&prime, setup.l), &series)?;
    let k = chain_constant(&prime, setup.l);
    integrate(f, setup, &shifted, Complex64::new(1.0 / k, 0.0))
}

/// Fitted exponential type of `ξ ↦ 𝒮f(ξλ₀)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub lambda0: f64,
    pub xi_grid: Vec<f64>,
    pub log_abs: Vec<f64>,
    pub tau: f64,
    pub r: f64,
    /// RMS residual of the straight-line fit.
    pub residual: f64,
    pub picture: Picture,
}

/// Least-squares slope of `log|𝒮f|` against `ξ |λ₀|` over the upper half of
/// the grid.
///
/// On `A` the transform is sampled at `ξλ₀`, on the torus at `iξλ₀`: the
/// growth in both cases comes from the exponential factor of `F` along the
/// support of `f`.
pub fn growth_estimate(
    f: &BumpSection,
    lambda0: f64,
    setup: &TransformSetup,
    xi_grid: &[f64],
) -> Result<GrowthReport> {
    if xi_grid.len() < 4 {
        return Err(Error::InvalidArgument("xi grid needs at least 4 points".into()));
    }
    if xi_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidArgument("xi grid must be increasing".into()));
    }
    if *xi_grid.last().unwrap() > 100.0 {
        return Err(Error::InvalidArgument("xi must not exceed 100".into()));
    }
    if !(lambda0.is_finite() && lambda0 != 0.0) {
        return Err(Error::InvalidArgument("direction must be a nonzero real".into()));
    }
    let dir = lambda0.signum();
    let mut log_abs = Vec::with_capacity(xi_grid.len());
    let mut bad = 0;
    for &xi in xi_grid {
        let lam = match setup.picture {
            Picture::Noncompact => Complex64::new(xi * dir, 0.0),
            Picture::Compact => Complex64::new(0.0, xi * dir),
        };
        let v = transform_direct(f, &SpectralParameter::new(alloc::vec![lam]), setup)?.value;
        let la = v.norm().ln();
        if !la.is_finite() {
            bad += 1;
        }
        log_abs.push(la);
    }
    if 2 * bad > xi_grid.len() {
        return Err(Error::DegenerateFit {
            bad,
            total: xi_grid.len(),
        });
    }
    let start = xi_grid.len() / 2;
    let pts: Vec<(f64, f64)> = xi_grid[start..]
        .iter()
        .zip(&log_abs[start..])
        .filter(|(_, y)| y.is_finite())
        .map(|(&x, &y)| (x, y))
        .collect();
    if pts.len() < 2 {
        return Err(Error::DegenerateFit {
            bad,
            total: xi_grid.len(),
        });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let tau = sxy / sxx;
    let residual = (pts
        .iter()
        .map(|p| {
            let e = p.1 - (my + tau * (p.0 - mx));
            e * e
        })
        .sum::<f64>()
        / n)
        .sqrt();
    Ok(GrowthReport {
        lambda0: dir,
        xi_grid: xi_grid.to_vec(),
        log_abs,
        tau,
        r: f.r,
        residual,
        picture: setup.picture,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bump_examples() {
        let b = make_bump(0.3, 2.0).unwrap();
        assert_eq!(b.eval(0.3), 0.0);
        assert!((b.eval(0.0) - 2.0 * (-1.0f64).exp()).abs() < 1e-15);
        for i in 0..30 {
            let t = 0.01 * i as f64;
            assert_eq!(b.eval(t), b.eval(-t));
        }
        assert_eq!(make_bump(1.6, 1.0), Err(Error::InvalidRadius(1.6)));
        assert_eq!(make_bump(0.0, 1.0), Err(Error::InvalidRadius(0.0)));
    }

    #[test]
    fn sampled_bump_interpolates() {
        let b = make_bump(0.4, 1.0).unwrap();
        let samples: Vec<f64> = (0..201).map(|k| b.eval(0.4 * k as f64 / 200.0)).collect();
        let s = BumpSection::from_samples(0.4, samples).unwrap();
        for i in 0..40 {
            let t = 0.0099 * i as f64;
            assert!((s.eval(t) - b.eval(t)).abs() < 1e-6);
        }
    }

    #[test]
    fn zero_function_and_linearity() {
        let setup = TransformSetup::new(1, 2, 100);
        let lam = SpectralParameter::new(alloc::vec![c(2.0, 0.0)]);
        let zero = make_bump(0.3, 0.0).unwrap();
        assert_eq!(transform_direct(&zero, &lam, &setup).unwrap().value, c(0.0, 0.0));
        let b = make_bump(0.3, 1.0).unwrap();
        let v = transform_direct(&b, &lam, &setup).unwrap().value;
        let v3 = transform_direct(&b.scaled(3.0), &lam, &setup).unwrap().value;
        assert!((v3 - v * 3.0).norm() < 1e-14 * v3.norm());
    }

    #[test]
    fn two_routes_agree() {
        let cases = [(2u32, 1i64, 0.3, 2.0, 1e-8), (1, 2, 0.4, 1.5, 1e-7), (3, 0, 0.2, 0.7, 1e-12)];
        for &(q, l, r, lam, tol) in &cases {
            let setup = TransformSetup::new(l, q, 200);
            let b = make_bump(r, 1.0).unwrap();
            let lam = SpectralParameter::new(alloc::vec![c(lam, 0.0)]);
            let d = transform_direct(&b, &lam, &setup).unwrap();
            let s = transform_shifted(&b, &lam, &setup).unwrap();
            assert!((d.value - s.value).norm() < tol * d.value.norm(), "{q} {l}");
            assert!(d.warning.is_none());
        }
    }

    #[test]
    fn conjugation() {
        let setup = TransformSetup::new(2, 2, 200);
        let b = make_bump(0.35, 1.0).unwrap();
        let lam = SpectralParameter::new(alloc::vec![c(1.3, 2.1)]);
        let a = transform_direct(&b, &lam, &setup).unwrap().value;
        let bb = transform_direct(&b, &lam.conj(), &setup).unwrap().value;
        assert!((a.conj() - bb).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn growth_tracks_radius() {
        let setup = TransformSetup::new(1, 2, 200).with_picture(Picture::Noncompact);
        let grid: Vec<f64> = (1..=16).map(|k| 5.0 * k as f64).collect();
        let big = growth_estimate(&make_bump(0.3, 1.0).unwrap(), 1.0, &setup, &grid).unwrap();
        let small = growth_estimate(&make_bump(0.15, 1.0).unwrap(), 1.0, &setup, &grid).unwrap();
        assert!(big.tau <= 0.3 * 1.05 + 0.02, "{}", big.tau);
        assert!(small.tau <= 0.15 * 1.05 + 0.02, "{}", small.tau);
        assert!(small.tau < big.tau);
        let scaled = growth_estimate(&make_bump(0.3, 10.0).unwrap(), 1.0, &setup, &grid).unwrap();
        assert!((scaled.tau - big.tau).abs() < 1e-10);
    }

    #[test]
    fn growth_rejects_bad_grids() {
        let setup = TransformSetup::new(1, 2, 50);
        let b = make_bump(0.3, 1.0).unwrap();
        assert!(growth_estimate(&b, 1.0, &setup, &[1.0, 2.0, 2.0, 3.0]).is_err());
        assert!(growth_estimate(&b, 1.0, &setup, &[1.0, 2.0, 3.0, 120.0]).is_err());
    }
}
