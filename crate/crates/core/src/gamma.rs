//! Complex log-gamma.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Distance to a nonpositive integer below which `z` is treated as a pole.
pub const POLE_TOL: f64 = 1e-10;

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_78;

/// Distance from `z` to the nearest nonpositive integer, or `None` if
/// `Re z > 0.5`.
pub fn pole_distance(z: Complex64) -> Option<f64> {
    if z.re > 0.5 {
        return None;
    }
    let n = z.re.round().min(0.0);
    Some(Complex64::new(z.re - n, z.im).norm())
}

/// Whether `z` lies within [`POLE_TOL`] of a nonpositive integer.
pub fn is_pole(z: Complex64) -> bool {
    matches!(pole_distance(z), Some(d) if d < POLE_TOL)
}

fn lanczos(z: Complex64) -> Complex64 {
    let mut a = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + HALF_LN_TWO_PI + a.ln() - z.ln()
}

/// `log Γ(z)`, continued analytically from the positive real axis with branch
/// cuts along the negative real axis (the same branch as mpmath's `loggamma`).
///
/// For `Re z < 1/2` the argument is shifted upward with the recurrence
/// instead of using reflection, which keeps the imaginary part on the right
/// sheet without any `2πi` bookkeeping.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite log-gamma argument".into()));
    }
    if is_pole(z) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    if z.re >= 0.5 {
        return Ok(lanczos(z));
    }
    let n = (0.5 - z.re).ceil() as usize;
    let mut shift = Complex64::new(0.0, 0.0);
    for k in 0..n {
        shift += (z + k as f64).ln();
    }
    Ok(lanczos(z + n as f64) - shift)
}

/// `log Γ(x)` for real `x`; the imaginary part carries the sign as `iπ·k`.
pub fn log_gamma_real(x: f64) -> Result<Complex64> {
    log_gamma(Complex64::new(x, 0.0))
}

/// `Γ(z)` through `exp(log Γ(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_integers_and_half() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let lg = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((lg.re - 0.5 * PI.ln()).abs() < 1e-15);
        assert_eq!(lg.im, 0.0);
        let lg = log_gamma(c(10.0, 0.0)).unwrap();
        assert!((lg.re - 362_880f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn golden_3_plus_4i() {
        // mpmath.loggamma(3+4j) at 50 digits
        let lg = log_gamma(c(3.0, 4.0)).unwrap();
        assert!((lg.re - -1.756_626_784_603_784_1).abs() < 1e-13);
        assert!((lg.im - 4.742_664_438_034_657_9).abs() < 1e-13);
    }

    #[test]
    fn negative_real_branch() {
        // Γ(-2.5) < 0, three crossings of the cut below zero
        let lg = log_gamma(c(-2.5, 0.0)).unwrap();
        assert!((lg.re - (-0.056_243_716_497_674_05)).abs() < 1e-13);
        assert!((lg.im + 3.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn poles_are_refused() {
        for k in 0..5 {
            let z = c(-(k as f64), 0.0);
            assert!(matches!(log_gamma(z), Err(Error::Pole { .. })));
        }
        assert!(matches!(log_gamma(c(-3.0 + 1e-12, 0.0)), Err(Error::Pole { .. })));
        assert!(log_gamma(c(-3.0 + 1e-6, 0.0)).is_ok());
    }

    #[test]
    fn recurrence() {
        for &(re, im) in &[(0.3, 0.2), (-4.7, 1.3), (7.1, -3.3), (-0.4, -0.01), (20.0, 30.0)] {
            let z = c(re, im);
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = z.ln() + log_gamma(z).unwrap();
            let d = lhs - rhs;
            // equal up to a multiple of 2πi
            let k = (d.im / (2.0 * PI)).round();
            assert!((d - c(0.0, 2.0 * PI * k)).norm() < 1e-12 * (1.0 + lhs.norm()));
        }
    }

    #[test]
    fn reflection() {
        for &(re, im) in &[(0.3, 0.2), (0.7, -1.1), (-1.3, 0.4), (2.2, 0.9)] {
            let z = c(re, im);
            let lhs = gamma(z).unwrap() * gamma(c(1.0, 0.0) - z).unwrap();
            let rhs = PI / (z * PI).sin();
            assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
        }
    }
}
