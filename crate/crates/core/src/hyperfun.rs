//! The hypergeometric function `F(λ, m; a) = Σ_{w∈W} c(wλ, m) Φ(wλ, m; a)`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::cfunction::{c_norm_with, log_c_tilde_rho};
use crate::error::{Error, Result};
use crate::rankone::rank_one_value;
use crate::root_system::{build_bc, weyl_orbit, Multiplicity, RootSystemBC, SpectralParameter, WeylElement};
use crate::series::{eval_phi_complex, gamma_coefficients, ChamberPoint, CHAMBER_MARGIN};

/// One summand `c(wλ, m) Φ(wλ, m; a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylTerm {
    pub w: WeylElement,
    pub c: Complex64,
    pub phi: Complex64,
}

impl WeylTerm {
    pub fn product(&self) -> Complex64 {
        self.c * self.phi
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FEvaluation {
    pub value: Complex64,
    pub per_term: Vec<WeylTerm>,
    /// Largest last-shell diagnostic among the series.
    pub truncation_diag: f64,
    /// `max |c Φ| / |F|`; large values signal cancellation between terms.
    pub cancellation: f64,
}

fn in_term(index: usize) -> impl Fn(Error) -> Error {
    move |e| Error::InWeylTerm {
        index,
        source: Box::new(e),
    }
}

/// `F(λ, m; exp X)` for `X` in the positive chamber.
pub fn eval_f(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    x: &ChamberPoint,
    order: usize,
) -> Result<FEvaluation> {
    let z: Vec<Complex64> = x.coords().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    eval_f_complex(lambda, m, rs, &z, order)
}

/// `F(λ, m; exp(X + iY))` with `X = Re Z` in the positive chamber.
pub fn eval_f_complex(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    z: &[Complex64],
    order: usize,
) -> Result<FEvaluation> {
    rs.check_dim(lambda.rank())?;
    rs.check_dim(z.len())?;
    let re = ChamberPoint::new(z.iter().map(|c| c.re).collect());
    let min_root = re.min_root_value(rs);
    if !(min_root > CHAMBER_MARGIN) {
        return Err(Error::Chamber {
            min_root_value: min_root,
        });
    }
    let log_rho = log_c_tilde_rho(m, rs)?;
    let mut per_term = Vec::new();
    let mut value = Complex64::new(0.0, 0.0);
    let mut diag = 0.0f64;
    for (i, (w, wl)) in weyl_orbit(lambda, rs)?.into_iter().enumerate() {
        let c = c_norm_with(&wl, m, rs, log_rho).map_err(in_term(i))?;
        let phi = if c == Complex64::new(0.0, 0.0) {
            Complex64::new(0.0, 0.0)
        } else {
            let tbl = gamma_coefficients(&wl, m, rs, order).map_err(in_term(i))?;
            let p = eval_phi_complex(&tbl, z).map_err(in_term(i))?;
            diag = diag.max(p.last_shell);
            p.value
        };
        value += c * phi;
        per_term.push(WeylTerm { w, c, phi });
    }
    let biggest = per_term.iter().map(|t| t.product().norm()).fold(0.0, f64::max);
    let cancellation = if value.norm() > 0.0 {
        biggest / value.norm()
    } else {
        f64::INFINITY
    };
    Ok(FEvaluation {
        value,
        per_term,
        truncation_diag: diag,
        cancellation,
    })
}

/// Largest `|u|` for which the rank-one route uses the series at the
/// identity.
const FROBENIUS_U: f64 = 0.9;

/// Smallest `Re t` for which the chamber series is used in rank one.
const CHAMBER_T: f64 = 0.5;

/// `F(λ, (k₁, 0, k₂); ·)` in rank one at complexified `t = 2α(X + iY)`,
/// so that `s = cosh t`; the compact picture is `t = iθ`.
///
/// Near the identity the Frobenius series is used, further out the chamber
/// series with a truncation chosen from `Re t`.
pub fn rank_one_f(lambda: Complex64, m: &Multiplicity, t: Complex64) -> Result<Complex64> {
    let t = if t.re < 0.0 { -t } else { t };
    let s = t.cosh();
    let u = (Complex64::new(1.0, 0.0) - s) * 0.5;
    if u.norm() <= FROBENIUS_U {
        return rank_one_value(m.short, m.long, lambda, s);
    }
    if t.re < CHAMBER_T {
        return Err(Error::Domain(
            "point is outside both rank-one expansions".into(),
        ));
    }
    let rs = build_bc(1)?;
    // shell of height N decays like e^{−N Re t / 2}
    let order = ((2.0 * 40.0 / t.re).ceil() as usize).clamp(40, 400);
    let f = eval_f_complex(&SpectralParameter::new(vec![lambda]), m, &rs, &[t * 0.5], order)?;
    Ok(f.value)
}

/// Both sides of `|F(λ, m; exp(X + iY))| ≤ C exp(max_w Re wλ(X) − min_w Im wλ(Y))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpdamBound {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

fn strip_ok(rs: &RootSystemBC, v: &[f64]) -> bool {
    rs.positive_roots()
        .iter()
        .all(|r| r.dot_real(v).abs() <= core::f64::consts::FRAC_PI_2 + 1e-12)
}

/// Evaluates both sides of the bound. Rank one goes through [`rank_one_f`];
/// higher rank needs `X` inside the chamber.
pub fn check_opdam_bound(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    x: &[f64],
    y: &[f64],
    order: usize,
) -> Result<OpdamBound> {
    rs.check_dim(lambda.rank())?;
    rs.check_dim(x.len())?;
    rs.check_dim(y.len())?;
    if !m.is_positive() {
        return Err(Error::NotPositive(m.short, m.medium, m.long));
    }
    if !strip_ok(rs, x) || !strip_ok(rs, y) {
        return Err(Error::Domain("|alpha(X)| and |alpha(Y)| must not exceed pi/2".into()));
    }
    let f = if rs.rank() == 1 {
        rank_one_f(lambda.coords()[0], m, Complex64::new(2.0 * x[0], 2.0 * y[0]))?
    } else {
        let z: Vec<Complex64> = x.iter().zip(y).map(|(&a, &b)| Complex64::new(a, b)).collect();
        eval_f_complex(lambda, m, rs, &z, order)?.value
    };
    let mut max_re = f64::NEG_INFINITY;
    let mut min_im = f64::INFINITY;
    for (_, wl) in weyl_orbit(lambda, rs)? {
        max_re = max_re.max(wl.dot_real(x).re);
        min_im = min_im.min(wl.dot_real(y).im);
    }
    let rhs = (max_re - min_im).exp();
    let lhs = f.norm();
    Ok(OpdamBound {
        lhs,
        rhs,
        ratio: lhs / rhs,
    })
}

fn check_mm0(m: &Multiplicity, lambda: &SpectralParameter, x: &ChamberPoint, rs: &RootSystemBC) -> Result<()> {
    if m.medium != 0.0 {
        return Err(Error::InvalidArgument("the product formula needs m_m = 0".into()));
    }
    rs.check_dim(lambda.rank())?;
    rs.check_dim(x.coords().len())
}

/// `Π_j F(λ_j, m; x_j)` with rank-one factors, for `m_m = 0`.
pub fn product_eval_mm0(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    x: &ChamberPoint,
) -> Result<Complex64> {
    check_mm0(m, lambda, x, rs)?;
    let mut out = Complex64::new(1.0, 0.0);
    for (l, &xj) in lambda.coords().iter().zip(x.coords()) {
        out *= rank_one_f(*l, m, Complex64::new(2.0 * xj, 0.0))?;
    }
    Ok(out)
}

/// The product averaged over permutations of the coordinates of `λ`, which
/// makes it invariant under the whole Weyl group of `BC_n`.
pub fn product_eval_mm0_symmetrized(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    x: &ChamberPoint,
) -> Result<Complex64> {
    check_mm0(m, lambda, x, rs)?;
    let n = rs.rank();
    // factors[i][j] = F(λ_i, m; x_j)
    let mut factors = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (i, l) in lambda.coords().iter().enumerate() {
        for (j, &xj) in x.coords().iter().enumerate() {
            factors[i][j] = rank_one_f(*l, m, Complex64::new(2.0 * xj, 0.0))?;
        }
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut count = 0usize;
    for w in rs.weyl_group().iter().filter(|w| w.signs().iter().all(|&s| s == 1)) {
        let mut p = Complex64::new(1.0, 0.0);
        for (i, &j) in w.perm().iter().enumerate() {
            p *= factors[i][j];
        }
        sum += p;
        count += 1;
    }
    Ok(sum / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rankone::{frobenius_build, frobenius_eval};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rank_one_agrees_with_frobenius() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::new(2.0, 0.0, 1.0);
        let lam = 7.0 / 3.0;
        let fs = frobenius_build(2.0, 1.0, c(lam, 0.0), 400).unwrap();
        for &t in &[1.2, 1.4, 1.6] {
            let f = eval_f(&SpectralParameter::real(&[lam]), &m, &rs, &ChamberPoint::new(vec![t / 2.0]), 80).unwrap();
            let g = frobenius_eval(&fs, c(f64::cosh(t), 0.0)).unwrap().value;
            assert!((f.value - g).norm() < 1e-10 * g.norm(), "{t}: {} {}", f.value, g);
        }
    }

    #[test]
    fn per_term_breakdown_sums_to_value() {
        let rs = build_bc(2).unwrap();
        let m = Multiplicity::new(1.0, 1.0, 1.0);
        let lam = SpectralParameter::new(vec![c(1.3, 0.2), c(0.45, -0.1)]);
        let f = eval_f(&lam, &m, &rs, &ChamberPoint::new(vec![1.5, 0.7]), 12).unwrap();
        assert_eq!(f.per_term.len(), 8);
        let s: Complex64 = f.per_term.iter().map(|t| t.product()).sum();
        assert!((s - f.value).norm() < 1e-15 * f.value.norm().max(1.0));
        assert!(f.per_term[0].w.is_identity());
    }

    #[test]
    fn weyl_term_errors_name_the_element() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::new(2.0, 0.0, 1.0);
        // λ = 3: fine for w = 1 (resonances need ⟨μ, μ − 6⟩ = 0, i.e. μ = 6 at height 6)
        let err = eval_f(&SpectralParameter::real(&[3.0]), &m, &rs, &ChamberPoint::new(vec![1.0]), 10).unwrap_err();
        assert_eq!(err.tag(), "resonance");
        assert_eq!(err.weyl_index(), Some(0));
    }

    #[test]
    fn polar_multiplicity_is_refused() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::new(1.0, 0.0, -2.0);
        let err = eval_f(&SpectralParameter::real(&[1.3]), &m, &rs, &ChamberPoint::new(vec![1.0]), 10).unwrap_err();
        assert!(matches!(err, Error::PolarMultiplicity { .. }));
    }

    #[test]
    fn conjugation_symmetry() {
        let rs = build_bc(2).unwrap();
        let m = Multiplicity::new(2.0, 1.0, 1.0);
        let lam = SpectralParameter::new(vec![c(1.1, 0.7), c(0.35, -0.3)]);
        let x = ChamberPoint::new(vec![1.2, 0.5]);
        let a = eval_f(&lam, &m, &rs, &x, 12).unwrap().value;
        let b = eval_f(&lam.conj(), &m, &rs, &x, 12).unwrap().value;
        assert!((a.conj() - b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn product_formula_rank_one_is_identity() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::new(2.0, 0.0, 1.0);
        let lam = SpectralParameter::real(&[1.3]);
        let x = ChamberPoint::new(vec![0.4]);
        let p = product_eval_mm0(&lam, &m, &rs, &x).unwrap();
        let r = rank_one_f(c(1.3, 0.0), &m, c(0.8, 0.0)).unwrap();
        assert_eq!(p, r);
        let rs2 = build_bc(2).unwrap();
        let sq = product_eval_mm0(
            &SpectralParameter::real(&[1.3, 1.3]),
            &m,
            &rs2,
            &ChamberPoint::new(vec![0.4, 0.4]),
        )
        .unwrap();
        assert!((sq - r * r).norm() < 1e-15 * sq.norm());
    }

    #[test]
    fn opdam_bound_at_zero_lambda() {
        let rs = build_bc(1).unwrap();
        let m = Multiplicity::new(2.0, 0.0, 1.0);
        let b = check_opdam_bound(&SpectralParameter::real(&[0.0]), &m, &rs, &[0.6], &[0.0], 40).unwrap();
        assert_eq!(b.rhs, 1.0);
        assert!(b.lhs <= 1.0 + 1e-12);
        assert!(matches!(
            check_opdam_bound(&SpectralParameter::real(&[0.0]), &m, &rs, &[1.7], &[0.0], 40),
            Err(Error::Domain(_))
        ));
    }
}
