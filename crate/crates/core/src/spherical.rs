//! χ-spherical functions `φ_{λ,l} = η_l^± F(λ, m_±(l); ·)`, the weights
//! `δ(m)`, `Δ_s`, `Δ_m`, `Δ_l`, the factor `d` and the rank-one weight in `s`.
//!
//! Points are given by `t_i = 2ε_i(Y)` on the torus (`x = e^{iY}`) or
//! `t_i = 2ε_i(X)` on `A`, so that in rank one `s = cos t` or `s = cosh t`
//! and a root takes the value `α = ⟨α, t⟩ / 2`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::hyperfun::{eval_f, rank_one_f};
use crate::root_system::{mult_shift_data, Multiplicity, Orbit, RootSystemBC, SpectralParameter};
use crate::series::{default_order, ChamberPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Picture {
    /// The torus `B`, `x = e^{iY}`, `s = cos t`.
    Compact,
    /// The split torus `A`, `a = e^X`, `s = cosh t`.
    Noncompact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A point of `B` or `A` in the coordinates `t_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    pub t: Vec<f64>,
    pub picture: Picture,
}

impl TorusPoint {
    pub fn compact(t: Vec<f64>) -> Self {
        TorusPoint {
            t,
            picture: Picture::Compact,
        }
    }

    pub fn noncompact(t: Vec<f64>) -> Self {
        TorusPoint {
            t,
            picture: Picture::Noncompact,
        }
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// `α(Y)` or `α(X)`.
    pub fn root_value(&self, alpha: &[i32]) -> f64 {
        0.5 * alpha.iter().zip(&self.t).map(|(&a, &t)| a as f64 * t).sum::<f64>()
    }

    /// `|α| ≤ π/2` for every root.
    pub fn in_strip(&self, rs: &RootSystemBC) -> bool {
        rs.positive_roots()
            .iter()
            .all(|r| self.root_value(r.coords()).abs() <= core::f64::consts::FRAC_PI_2)
    }

    /// The invariant coordinate `s` of a rank-one point.
    pub fn s(&self) -> f64 {
        match self.picture {
            Picture::Compact => self.t[0].cos(),
            Picture::Noncompact => self.t[0].cosh(),
        }
    }

    /// `e^α − e^{−α}`: `2i sin α` on `B`, `2 sinh α` on `A`.
    fn difference(&self, a: f64) -> Complex64 {
        match self.picture {
            Picture::Compact => Complex64::new(0.0, 2.0 * a.sin()),
            Picture::Noncompact => Complex64::new(2.0 * a.sinh(), 0.0),
        }
    }

    /// `(e^α + e^{−α}) / 2`: `cos α` on `B`, `cosh α` on `A`.
    fn half_sum(&self, a: f64) -> f64 {
        match self.picture {
            Picture::Compact => a.cos(),
            Picture::Noncompact => a.cosh(),
        }
    }
}

/// `η_l^± = Π_{α ∈ 𝒪_s⁺} ((e^α + e^{−α})/2)^{±|l|}`; in rank one
/// `η_l^+ = ((1 + s)/2)^{|l|/2}`.
///
/// The exponent `|l|` (not `2|l|`) is the one for which `η_l^+ F(λ, m_+(l))`
/// and `η_l^- F(λ, m_-(l))` coincide.
pub fn eta(l: i64, sign: Sign, point: &TorusPoint, rs: &RootSystemBC) -> Result<Complex64> {
    rs.check_dim(point.rank())?;
    let e = l.unsigned_abs() as f64;
    if e == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut out = Complex64::new(1.0, 0.0);
    for r in rs.positive_roots().iter().filter(|r| r.orbit() == Orbit::Short) {
        let h = point.half_sum(point.root_value(r.coords()));
        if h.abs() < 1e-12 && sign == Sign::Minus {
            return Err(Error::VanishingFactor);
        }
        let exp = match sign {
            Sign::Plus => e,
            Sign::Minus => -e,
        };
        out *= if h >= 0.0 {
            Complex64::new(h.powf(exp), 0.0)
        } else {
            Complex64::new(h, 0.0).powf(exp)
        };
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightValue {
    /// `Π (e^α − e^{−α})^{m_α}` with principal powers.
    pub delta: Complex64,
    /// `Π |e^α − e^{−α}|^{m_α}`
    pub abs_delta: f64,
    /// `(Δ_s, Δ_m, Δ_l)`
    pub components: [f64; 3],
}

/// `δ(m)` at a point, with the orbit products `Δ`.
pub fn delta_weight(m: &Multiplicity, point: &TorusPoint, rs: &RootSystemBC) -> Result<WeightValue> {
    rs.check_dim(point.rank())?;
    let mut delta = Complex64::new(1.0, 0.0);
    let mut abs_delta = 1.0;
    let mut comps = [1.0f64; 3];
    for r in rs.positive_roots() {
        let f = point.difference(point.root_value(r.coords()));
        let ma = m.of_root(r);
        let af = f.norm();
        if af == 0.0 && ma < 0.0 {
            return Err(Error::WallSingularity);
        }
        let slot = match r.orbit() {
            Orbit::Short => 0,
            Orbit::Medium => 1,
            Orbit::Long => 2,
        };
        comps[slot] *= af;
        if ma != 0.0 {
            delta *= if af == 0.0 { Complex64::new(0.0, 0.0) } else { f.powf(ma) };
            abs_delta *= af.powf(ma);
        }
    }
    Ok(WeightValue {
        delta,
        abs_delta,
        components: comps,
    })
}

/// `d = (Δ_s / Δ_l)^{2|l|} = Π_{α ∈ 𝒪_s⁺} |e^α + e^{−α}|^{−2|l|}`.
pub fn d_factor(l: i64, point: &TorusPoint, rs: &RootSystemBC) -> Result<f64> {
    rs.check_dim(point.rank())?;
    let e = 2.0 * l.unsigned_abs() as f64;
    let mut out = 1.0;
    for r in rs.positive_roots().iter().filter(|r| r.orbit() == Orbit::Short) {
        let h = 2.0 * point.half_sum(point.root_value(r.coords())).abs();
        if h == 0.0 && e > 0.0 {
            return Err(Error::VanishingFactor);
        }
        out *= h.powf(-e);
    }
    Ok(out)
}

/// The rank-one weight `w_m(s) = 2^{k₁/2+k₂} |1 − s|^{(k₁+k₂−1)/2} |1 + s|^{(k₂−1)/2}`
/// with `|δ(m, x)| dt = w_m(s) ds` under `s = cos t`. For `m = (2(q−1), 0, 1)`
/// it is `2^q (1 − s)^{q−1}`.
pub fn rank_one_weight(m: &Multiplicity, s: f64) -> Result<f64> {
    let (k1, k2) = (m.short, m.long);
    let e0 = 0.5 * k1 + k2;
    let e1 = 0.5 * (k1 + k2 - 1.0);
    let e2 = 0.5 * (k2 - 1.0);
    let a = (1.0 - s).abs();
    let b = (1.0 + s).abs();
    if (a == 0.0 && e1 < 0.0) || (b == 0.0 && e2 < 0.0) {
        return Err(Error::WeightSingularity(s));
    }
    Ok(2f64.powf(e0) * a.powf(e1) * b.powf(e2))
}

/// `φ_{λ,l} = η_l^± F(λ, m_±(l); ·)`.
///
/// Rank one works in both pictures; higher rank only on `A` through the
/// chamber series.
pub fn chi_spherical(
    lambda: &SpectralParameter,
    l: i64,
    m: &Multiplicity,
    point: &TorusPoint,
    sign: Sign,
    rs: &RootSystemBC,
) -> Result<Complex64> {
    rs.check_dim(lambda.rank())?;
    rs.check_dim(point.rank())?;
    let shifts = mult_shift_data(m, l);
    let ms = match sign {
        Sign::Plus => shifts.plus,
        Sign::Minus => shifts.minus,
    };
    let h = eta(l, sign, point, rs)?;
    let f = if rs.rank() == 1 {
        let t = match point.picture {
            Picture::Compact => Complex64::new(0.0, point.t[0]),
            Picture::Noncompact => Complex64::new(point.t[0], 0.0),
        };
        rank_one_f(lambda.coords()[0], &ms, t)?
    } else {
        if point.picture == Picture::Compact {
            return Err(Error::Domain(
                "torus evaluation is only available in rank one".into(),
            ));
        }
        let x = ChamberPoint::new(point.t.iter().map(|t| 0.5 * t).collect());
        eval_f(lambda, &ms, rs, &x, default_order(rs.rank()))?.value
    };
    Ok(h * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::root_system::build_bc;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eta_examples() {
        let rs = build_bc(1).unwrap();
        let p = TorusPoint::compact(vec![0.7]);
        assert_eq!(eta(0, Sign::Plus, &p, &rs).unwrap(), c(1.0, 0.0));
        let p0 = TorusPoint::compact(vec![0.0]);
        assert_eq!(eta(3, Sign::Plus, &p0, &rs).unwrap(), c(1.0, 0.0));
        // s = 0.5: ((1 + s)/2)^{1/2}
        let p = TorusPoint::compact(vec![0.5f64.acos()]);
        assert!((eta(1, Sign::Plus, &p, &rs).unwrap().re - 0.75f64.sqrt()).abs() < 1e-15);
        let pi = TorusPoint::compact(vec![core::f64::consts::PI]);
        assert_eq!(eta(1, Sign::Minus, &pi, &rs), Err(Error::VanishingFactor));
    }

    #[test]
    fn eta_plus_times_minus() {
        let rs = build_bc(2).unwrap();
        let p = TorusPoint::compact(vec![0.9, -0.4]);
        for l in 0..4 {
            let a = eta(l, Sign::Plus, &p, &rs).unwrap() * eta(l, Sign::Minus, &p, &rs).unwrap();
            assert!((a - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn weight_change_of_variables() {
        let rs = build_bc(1).unwrap();
        for q in 1..=4 {
            let m = Multiplicity::grassmannian(q);
            for &t in &[0.3, 1.1, 2.5] {
                let w = delta_weight(&m, &TorusPoint::compact(vec![t]), &rs).unwrap();
                let s = f64::cos(t);
                // dt = ds / sin t
                let lhs = w.abs_delta / t.sin();
                let rhs = 2f64.powi(q as i32) * (1.0 - s).powi(q as i32 - 1);
                assert!((lhs - rhs).abs() < 1e-12 * rhs, "{q} {t}");
                assert!((rank_one_weight(&m, s).unwrap() - rhs).abs() < 1e-12 * rhs);
            }
        }
    }

    #[test]
    fn weight_factorization_and_zero() {
        let rs = build_bc(2).unwrap();
        let p = TorusPoint::compact(vec![1.3, 0.4]);
        let m = Multiplicity::new(2.0, 3.0, 1.0);
        let w = delta_weight(&m, &p, &rs).unwrap();
        let [a, b, cc] = w.components;
        assert!((w.abs_delta - a.powi(2) * b.powi(3) * cc).abs() < 1e-12 * w.abs_delta);
        assert!((w.delta.norm() - w.abs_delta).abs() < 1e-12 * w.abs_delta);
        let w0 = delta_weight(&Multiplicity::ZERO, &p, &rs).unwrap();
        assert_eq!(w0.delta, c(1.0, 0.0));
        let wall = TorusPoint::compact(vec![0.4, 0.4]);
        assert_eq!(
            delta_weight(&Multiplicity::new(1.0, -1.0, 1.0), &wall, &rs),
            Err(Error::WallSingularity)
        );
    }

    #[test]
    fn d_factor_is_bounded() {
        let rs = build_bc(2).unwrap();
        for i in 0..20 {
            for j in 0..20 {
                // |α(Y)| ≤ π/4 on short roots means |t_i| ≤ π/2
                let t = vec![-1.5 + 0.15 * i as f64, -1.5 + 0.15 * j as f64];
                let d = d_factor(2, &TorusPoint::compact(t), &rs).unwrap();
                assert!(d <= 1.0);
            }
        }
    }

    #[test]
    fn sign_consistency_rank_one() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::grassmannian(2);
        let lam = SpectralParameter::new(vec![c(2.3, 0.4)]);
        for &t in &[0.2, 0.9, 1.6, 2.2] {
            let p = TorusPoint::compact(vec![t]);
            let a = chi_spherical(&lam, 2, &m, &p, Sign::Plus, &rs).unwrap();
            let b = chi_spherical(&lam, 2, &m, &p, Sign::Minus, &rs).unwrap();
            assert!((a - b).norm() < 1e-10 * a.norm(), "{t}: {a} {b}");
        }
    }

    #[test]
    fn golden_chi_value() {
        // q = 2, l = 1, λ = ρ + 2 = 4, t = 0.5, both signs agree
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::grassmannian(2);
        let lam = SpectralParameter::real(&[4.0]);
        let p = TorusPoint::compact(vec![0.5]);
        let a = chi_spherical(&lam, 1, &m, &p, Sign::Plus, &rs).unwrap();
        let b = chi_spherical(&lam, 1, &m, &p, Sign::Minus, &rs).unwrap();
        assert!((a - b).norm() < 1e-14);
        assert!((a.re - GOLDEN_CHI).abs() < 1e-13, "{}", a.re);
    }

    const GOLDEN_CHI: f64 = 0.915_775_906_448_087_44;
}
