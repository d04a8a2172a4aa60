//! Harish-Chandra c-functions `c̃(λ, m)`, `c(λ, m) = c̃(λ, m) / c̃(ρ, m)`, the
//! polar set and the product `c(λ, m) c(−λ, m)`.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gamma::{log_gamma, pole_distance, POLE_TOL};
use crate::root_system::{lambda_alpha, rho, Multiplicity, RootSystemBC, SpectralParameter};

/// Tolerance for treating `m_α / 2` as an integer.
const CANCEL_TOL: f64 = 1e-12;

/// `c̃` in log form together with the net pole order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CValue {
    /// `log c̃` when neither flag is set. When poles or zeros occur, the
    /// log of the product of the finite factors and the Γ residues.
    pub log_value: Complex64,
    /// Number of numerator Γ poles.
    pub pole_count: u32,
    /// Number of denominator Γ poles.
    pub zero_count: u32,
    pub is_pole: bool,
    pub is_zero: bool,
    /// Poles and zeros of equal total order at distinct Γ arguments; the
    /// value depends on the direction of approach.
    pub indeterminate: bool,
}

impl CValue {
    /// `c̃` itself; `∞` for a pole and `0` for a zero.
    pub fn value(&self) -> Complex64 {
        if self.is_pole {
            Complex64::new(f64::INFINITY, 0.0)
        } else if self.is_zero {
            Complex64::new(0.0, 0.0)
        } else {
            self.log_value.exp()
        }
    }

    pub fn is_regular(&self) -> bool {
        !self.is_pole && !self.is_zero && !self.indeterminate
    }
}

/// `log` of the residue of `Γ` at `−n`, i.e. `log((−1)^n / n!)`.
fn log_residue(n: u32) -> Complex64 {
    let mut log_fact = 0.0;
    for k in 2..=n {
        log_fact += (k as f64).ln();
    }
    let phase = if n % 2 == 1 { core::f64::consts::PI } else { 0.0 };
    Complex64::new(-log_fact, phase)
}

fn pole_index(z: Complex64) -> Option<u32> {
    match pole_distance(z) {
        Some(d) if d < POLE_TOL => Some((-z.re).round() as u32),
        _ => None,
    }
}

/// Folds `Γ(z)/Γ(z + k)` into `out`, counting a vanishing linear factor as a
/// pole (`k > 0`) or a zero (`k < 0`).
fn pochhammer_ratio(z: Complex64, k: i64, out: &mut CValue) {
    if k >= 0 {
        for t in 0..k {
            let f = z + t as f64;
            if f.norm() < POLE_TOL {
                out.pole_count += 1;
            } else {
                out.log_value -= f.ln();
            }
        }
    } else {
        for t in 1..=-k {
            let f = z - t as f64;
            if f.norm() < POLE_TOL {
                out.zero_count += 1;
            } else {
                out.log_value += f.ln();
            }
        }
    }
}

/// `Γ(λ_α + m_{α/2}/4)` over `Γ(λ_α + m_{α/2}/4 + m_α/2)`, multiplied over
/// `α ∈ Σ⁺`. Factors with `m_α = 0` are identically one and skipped.
pub fn c_tilde(lambda: &SpectralParameter, m: &Multiplicity, rs: &RootSystemBC) -> Result<CValue> {
    rs.check_dim(lambda.rank())?;
    let mut out = CValue {
        log_value: Complex64::new(0.0, 0.0),
        pole_count: 0,
        zero_count: 0,
        is_pole: false,
        is_zero: false,
        indeterminate: false,
    };
    let mut num: Vec<Complex64> = Vec::new();
    let mut den: Vec<Complex64> = Vec::new();
    for root in rs.positive_roots() {
        let m_a = m.of_root(root);
        if m_a == 0.0 {
            continue;
        }
        let z = lambda_alpha(lambda, root.coords())? + m.of_half_root(root) / 4.0;
        let half = m_a / 2.0;
        if (half - half.round()).abs() < CANCEL_TOL {
            // Γ(z)/Γ(z + k) is rational in z for integer k
            pochhammer_ratio(z, half.round() as i64, &mut out);
        } else {
            num.push(z);
            den.push(z + half);
        }
    }
    for z in num {
        match pole_index(z) {
            Some(n) => {
                out.pole_count += 1;
                out.log_value += log_residue(n);
            }
            None => out.log_value += log_gamma(z)?,
        }
    }
    for z in den {
        match pole_index(z) {
            Some(n) => {
                out.zero_count += 1;
                out.log_value -= log_residue(n);
            }
            None => out.log_value -= log_gamma(z)?,
        }
    }
    out.is_pole = out.pole_count > out.zero_count;
    out.is_zero = out.zero_count > out.pole_count;
    out.indeterminate = out.pole_count > 0 && out.pole_count == out.zero_count;
    Ok(out)
}

/// Whether `m` belongs to the polar set `{m | c̃(ρ(m), m) = 0}`.
///
/// Multiplicities where `c̃(ρ(m), m)` is an indeterminate `0/0` are reported
/// as not polar, with a warning.
pub fn is_polar(m: &Multiplicity, rs: &RootSystemBC) -> bool {
    match c_tilde(&rho(rs, m), m, rs) {
        Ok(v) => {
            if v.indeterminate {
                log::warn!("c~(rho, m) is indeterminate at m = {:?}; treated as not polar", m);
            }
            v.is_zero
        }
        Err(_) => false,
    }
}

fn polar_error(m: &Multiplicity, reason: &'static str) -> Error {
    Error::PolarMultiplicity {
        m_s: m.short,
        m_m: m.medium,
        m_l: m.long,
        reason,
    }
}

/// `log c̃(ρ(m), m)`, refusing multiplicities where it is not a finite
/// nonzero number.
pub fn log_c_tilde_rho(m: &Multiplicity, rs: &RootSystemBC) -> Result<Complex64> {
    let at_rho = c_tilde(&rho(rs, m), m, rs)?;
    if at_rho.is_zero {
        return Err(polar_error(m, "zero"));
    }
    if at_rho.is_pole {
        return Err(polar_error(m, "a pole"));
    }
    if at_rho.indeterminate {
        return Err(polar_error(m, "indeterminate"));
    }
    Ok(at_rho.log_value)
}

/// `c(λ, m)` given `log c̃(ρ, m)`.
pub fn c_norm_with(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    log_rho: Complex64,
) -> Result<Complex64> {
    let at_lambda = c_tilde(lambda, m, rs)?;
    if at_lambda.is_pole || at_lambda.indeterminate {
        return Err(Error::SpectralPole);
    }
    if at_lambda.is_zero {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((at_lambda.log_value - log_rho).exp())
}

/// `c(λ, m) = c̃(λ, m) / c̃(ρ, m)`, computed in log space.
pub fn c_norm(lambda: &SpectralParameter, m: &Multiplicity, rs: &RootSystemBC) -> Result<Complex64> {
    let log_rho = log_c_tilde_rho(m, rs)?;
    c_norm_with(lambda, m, rs, log_rho)
}

/// `c(λ, m) c(−λ, m)`.
pub fn gk_product(lambda: &SpectralParameter, m: &Multiplicity, rs: &RootSystemBC) -> Result<Complex64> {
    let log_rho = log_c_tilde_rho(m, rs)?;
    Ok(c_norm_with(lambda, m, rs, log_rho)? * c_norm_with(&-lambda, m, rs, log_rho)?)
}
