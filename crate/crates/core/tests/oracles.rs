#![allow(clippy::excessive_precision)]

//! Comparisons against values produced independently of the library: an
//! mpmath log-gamma table, the Gauss `₂F₁` closed form of the rank-one
//! function and a direct Runge–Kutta integration of the rank-one equation.

use bcshift_core::gamma::log_gamma;
use bcshift_core::rankone::{gauss_2f1, rank_one_value};
use bcshift_core::spherical::{chi_spherical, Sign, TorusPoint};
use bcshift_core::root_system::build_bc;
use bcshift_core::{Complex64, Multiplicity, SpectralParameter};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn log_gamma_against_mpmath_table() {
    let data = include_str!("data/loggamma_oracle.csv");
    let mut n = 0;
    for line in data.lines().filter(|l| !l.starts_with('#')) {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let want = c(v[2], v[3]);
        let got = log_gamma(c(v[0], v[1])).unwrap();
        assert!(
            (got - want).norm() < 1e-13 * want.norm().max(1.0),
            "z = {} {}: {got} vs {want}",
            v[0],
            v[1]
        );
        n += 1;
    }
    assert_eq!(n, 1000);
}

#[test]
fn rank_one_matches_gauss_form() {
    // F = ₂F₁((ρ + λ)/2, (ρ − λ)/2; (1 + k₁ + k₂)/2; (1 − s)/2)
    for &(k1, k2) in &[(2.0, 1.0), (4.0, 1.0), (0.5, 2.5), (-3.0, 5.0)] {
        let rho = 0.5 * k1 + k2;
        let cc = c(0.5 * (1.0 + k1 + k2), 0.0);
        for &lam in &[c(2.7, 0.0), c(0.4, 1.3), c(-1.1, 0.6)] {
            for &s in &[-0.5, 0.0, 0.3, 0.9, 1.4] {
                let u = c((1.0 - s) / 2.0, 0.0);
                let want = gauss_2f1((lam + rho) / 2.0, (-lam + rho) / 2.0, cc, u).unwrap();
                let got = rank_one_value(k1, k2, lam, c(s, 0.0)).unwrap();
                assert!((got - want).norm() < 1e-12 * want.norm().max(1.0), "{k1} {k2} {lam} {s}");
            }
        }
    }
}

/// Classical RK4 for `F″ + (k₁ cot Y + 2k₂ cot 2Y) F′ = −(λ² − ρ²) F`,
/// started from the two-term expansion near `Y = 0`.
fn rk4_compact(k1: f64, k2: f64, lam: f64, y_end: f64) -> f64 {
    let rho = 0.5 * k1 + k2;
    let e = lam * lam - rho * rho;
    // F ≈ 1 − e Y² / (2(1 + k₁ + k₂))
    let a = -e / (2.0 * (1.0 + k1 + k2));
    let mut y = 1e-3;
    let mut f = [1.0 + a * y * y, 2.0 * a * y];
    let rhs = |y: f64, f: [f64; 2]| -> [f64; 2] {
        let drift = k1 / y.tan() + 2.0 * k2 / (2.0 * y).tan();
        [f[1], -drift * f[1] - e * f[0]]
    };
    let n = 200_000;
    let h = (y_end - y) / n as f64;
    for _ in 0..n {
        let s1 = rhs(y, f);
        let s2 = rhs(y + h / 2.0, [f[0] + h / 2.0 * s1[0], f[1] + h / 2.0 * s1[1]]);
        let s3 = rhs(y + h / 2.0, [f[0] + h / 2.0 * s2[0], f[1] + h / 2.0 * s2[1]]);
        let s4 = rhs(y + h, [f[0] + h * s3[0], f[1] + h * s3[1]]);
        for i in 0..2 {
            f[i] += h / 6.0 * (s1[i] + 2.0 * s2[i] + 2.0 * s3[i] + s4[i]);
        }
        y += h;
    }
    f[0]
}

#[test]
fn rank_one_matches_direct_integration() {
    // the start at Y = 1e-3 leaves an O(1e-12) error
    for &(k1, k2, lam) in &[(2.0, 1.0, 2.7), (4.0, 1.0, 1.3), (1.0, 2.0, 3.4)] {
        for &y in &[0.4, 0.8, 1.1] {
            let want = rk4_compact(k1, k2, lam, y);
            let s = (2.0 * y).cos();
            let got = rank_one_value(k1, k2, c(lam, 0.0), c(s, 0.0)).unwrap();
            assert!((got.re - want).abs() < 1e-9 * want.abs().max(1.0), "{k1} {k2} {lam} {y}: {got} vs {want}");
            assert!(got.im.abs() < 1e-14);
        }
    }
}

#[test]
fn chi_spherical_golden() {
    // q = 2, l = 1, λ = ρ + 2, t = 0.5; independently evaluated with mpmath
    let rs = build_bc(1).unwrap();
    let m = Multiplicity::grassmannian(2);
    let lam = SpectralParameter::new(vec![c(4.0, 0.0)]);
    let p = TorusPoint::compact(vec![0.5]);
    for sign in [Sign::Plus, Sign::Minus] {
        let v = chi_spherical(&lam, 1, &m, &p, sign, &rs).unwrap();
        assert!((v.re - 0.915_775_906_448_087_44).abs() < 1e-13, "{sign:?}: {v}");
    }
}
