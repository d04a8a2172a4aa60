//! Harish-Chandra series `Φ(λ, m; a) = a^{λ−ρ} Σ_{μ∈Ξ} Γ_μ a^{−μ}` on the
//! positive chamber.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::root_system::{from_simple_coords, rho, Multiplicity, RootSystemBC, SpectralParameter};

/// Minimum value of `α(X)` over positive roots for a point to count as
/// inside the chamber.
pub const CHAMBER_MARGIN: f64 = 1e-6;

/// Relative resonance tolerance; the absolute threshold is
/// `RESONANCE_TOL · max(1, ‖μ‖²)`.
pub const RESONANCE_TOL: f64 = 1e-8;

/// Default truncation height for a given rank.
pub fn default_order(rank: usize) -> usize {
    if rank == 1 {
        30
    } else {
        12
    }
}

/// A point `μ = Σ n_j α_j` of the cone spanned by the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coeffs: Vec<u32>,
}

impl LatticePoint {
    pub fn new(coeffs: Vec<u32>) -> Self {
        LatticePoint { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn height(&self) -> usize {
        self.coeffs.iter().map(|&c| c as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// ε-coordinates of `μ`.
    pub fn epsilon_coords(&self) -> Vec<f64> {
        let c: Vec<i64> = self.coeffs.iter().map(|&x| x as i64).collect();
        from_simple_coords(&c).into_iter().map(|x| x as f64).collect()
    }
}

fn compositions(n: usize, total: usize, prefix: &mut Vec<u32>, out: &mut Vec<LatticePoint>) {
    if prefix.len() == n {
        out.push(LatticePoint::new(prefix.clone()));
        return;
    }
    for c in 0..=total {
        prefix.push(c as u32);
        compositions(n, total - c, prefix, out);
        prefix.pop();
    }
}

/// All `μ ∈ Ξ` of height at most `max_height`, ordered by height and then
/// lexicographically.
pub fn enumerate_lattice(rs: &RootSystemBC, max_height: usize) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    compositions(rs.rank(), max_height, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    out
}

/// The coefficients `Γ_μ(λ, m)` up to a fixed height.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    lambda: SpectralParameter,
    mult: Multiplicity,
    rho: SpectralParameter,
    max_height: usize,
    points: Vec<LatticePoint>,
    values: Vec<Complex64>,
}

impl CoefficientTable {
    pub fn lambda(&self) -> &SpectralParameter {
        &self.lambda
    }

    pub fn mult(&self) -> &Multiplicity {
        &self.mult
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(μ, Γ_μ)` pairs in [`enumerate_lattice`] order.
    pub fn iter(&self) -> impl Iterator<Item = (&LatticePoint, Complex64)> {
        self.points.iter().zip(self.values.iter().copied())
    }

    pub fn get(&self, mu: &[u32]) -> Option<Complex64> {
        self.points
            .binary_search_by(|p| {
                p.height()
                    .cmp(&mu.iter().map(|&c| c as usize).sum())
                    .then_with(|| p.coeffs[..].cmp(mu))
            })
            .ok()
            .map(|i| self.values[i])
    }
}

fn dot_c(a: &[f64], b: &[Complex64]) -> Complex64 {
    a.iter()
        .zip(b)
        .fold(Complex64::new(0.0, 0.0), |acc, (&x, z)| acc + z * x)
}

/// Builds `Γ_μ` for every `μ` of height at most `max_height` from
/// `⟨μ, μ−2λ⟩ Γ_μ = 2 Σ_{α>0} m_α Σ_{k≥1} Γ_{μ−2kα} ⟨μ+ρ−2kα−λ, α⟩`.
pub fn gamma_coefficients(
    lambda: &SpectralParameter,
    m: &Multiplicity,
    rs: &RootSystemBC,
    max_height: usize,
) -> Result<CoefficientTable> {
    rs.check_dim(lambda.rank())?;
    if !lambda.is_finite() {
        return Err(Error::InvalidArgument("spectral parameter is not finite".into()));
    }
    let n = rs.rank();
    let rho_m = rho(rs, m);
    let points = enumerate_lattice(rs, max_height);
    let index: BTreeMap<&[u32], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.coeffs(), i))
        .collect();

    let roots: Vec<(f64, Vec<i64>, Vec<f64>)> = rs
        .positive_roots()
        .iter()
        .filter(|r| m.of_root(r) != 0.0)
        .map(|r| {
            (
                m.of_root(r),
                r.simple_coords(),
                r.coords().iter().map(|&c| c as f64).collect(),
            )
        })
        .collect();

    let lam = lambda.coords();
    let rho_minus_lambda: Vec<Complex64> = rho_m
        .coords()
        .iter()
        .zip(lam)
        .map(|(r, l)| r - l)
        .collect();

    let mut values = vec![Complex64::new(0.0, 0.0); points.len()];
    values[0] = Complex64::new(1.0, 0.0);
    let mut shifted = vec![0i64; n];
    for (idx, mu) in points.iter().enumerate().skip(1) {
        let mu_eps = mu.epsilon_coords();
        let norm2: f64 = mu_eps.iter().map(|x| x * x).sum();
        let divisor = mu_eps
            .iter()
            .zip(lam)
            .fold(Complex64::new(0.0, 0.0), |acc, (&x, l)| acc + (l * -2.0 + x) * x);
        if divisor.norm() <= RESONANCE_TOL * norm2.max(1.0) {
            return Err(Error::Resonance {
                mu: mu.coeffs().to_vec(),
                divisor: divisor.norm(),
            });
        }
        let mut rhs = Complex64::new(0.0, 0.0);
        for (m_alpha, simple, alpha) in &roots {
            let mut k = 1i64;
            loop {
                let mut inside = true;
                for i in 0..n {
                    shifted[i] = mu.coeffs()[i] as i64 - 2 * k * simple[i];
                    if shifted[i] < 0 {
                        inside = false;
                    }
                }
                if !inside {
                    break;
                }
                let key: Vec<u32> = shifted.iter().map(|&c| c as u32).collect();
                let g = values[index[&key[..]]];
                if g != Complex64::new(0.0, 0.0) {
                    // ⟨μ − 2kα + ρ − λ, α⟩
                    let mu_part: f64 = mu_eps
                        .iter()
                        .zip(alpha)
                        .map(|(x, a)| (x - 2.0 * k as f64 * a) * a)
                        .sum();
                    let pairing = dot_c(alpha, &rho_minus_lambda) + mu_part;
                    rhs += g * pairing * *m_alpha;
                }
                k += 1;
            }
        }
        values[idx] = rhs * 2.0 / divisor;
    }
    Ok(CoefficientTable {
        lambda: lambda.clone(),
        mult: *m,
        rho: rho_m,
        max_height,
        points,
        values,
    })
}

/// A point `X` of `𝔞`, with `a = exp X`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChamberPoint(pub Vec<f64>);

impl ChamberPoint {
    pub fn new(x: Vec<f64>) -> Self {
        ChamberPoint(x)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// `min_{α>0} α(X)`.
    pub fn min_root_value(&self, rs: &RootSystemBC) -> f64 {
        rs.positive_roots()
            .iter()
            .map(|r| r.dot_real(&self.0))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn in_chamber(&self, rs: &RootSystemBC) -> bool {
        self.min_root_value(rs) > CHAMBER_MARGIN
    }
}

/// Value of a truncated Harish-Chandra series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiValue {
    pub value: Complex64,
    /// `Σ |Γ_μ e^{−μ(X)}|` over the two outermost shells, relative to the
    /// leading term `Γ_0 = 1`. Two shells are used because `Γ_μ` vanishes on
    /// every shell of odd height.
    pub last_shell: f64,
}

/// Evaluates `Φ(λ, m; exp X)`.
pub fn eval_phi(tbl: &CoefficientTable, x: &ChamberPoint) -> Result<PhiValue> {
    let z: Vec<Complex64> = x.coords().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    eval_phi_complex(tbl, &z)
}

/// Evaluates `Φ(λ, m; exp(X + iY))`; only `X = Re Z` has to lie in the
/// chamber.
pub fn eval_phi_complex(tbl: &CoefficientTable, z: &[Complex64]) -> Result<PhiValue> {
    let n = tbl.rank();
    if z.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.len(),
        });
    }
    let re: Vec<f64> = z.iter().map(|c| c.re).collect();
    // α(X) > 0 for all α > 0 iff X_1 > … > X_n > 0
    let mut min_root = f64::INFINITY;
    for i in 0..n {
        min_root = min_root.min(re[i]);
        if i + 1 < n {
            min_root = min_root.min(re[i] - re[i + 1]);
        }
    }
    if !(min_root > CHAMBER_MARGIN) {
        return Err(Error::Chamber {
            min_root_value: min_root,
        });
    }
    let lower_shell = tbl.max_height.saturating_sub(1);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last_shell = 0.0;
    for (mu, g) in tbl.iter() {
        if g == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mu_x = dot_c(&mu.epsilon_coords(), z);
        let term = g * (-mu_x).exp();
        sum += term;
        if mu.height() >= lower_shell && !mu.is_zero() {
            last_shell += term.norm();
        }
    }
    let lead: Complex64 = tbl
        .lambda
        .coords()
        .iter()
        .zip(tbl.rho.coords())
        .zip(z)
        .fold(Complex64::new(0.0, 0.0), |acc, ((l, r), x)| acc + (l - r) * x);
    Ok(PhiValue {
        value: lead.exp() * sum,
        last_shell,
    })
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
    fn enumeration_examples() {
        let rs1 = build_bc(1).unwrap();
        let pts = enumerate_lattice(&rs1, 3);
        let coeffs: Vec<Vec<u32>> = pts.iter().map(|p| p.coeffs().to_vec()).collect();
        assert_eq!(coeffs, vec![vec![0], vec![1], vec![2], vec![3]]);

        let rs2 = build_bc(2).unwrap();
        assert_eq!(enumerate_lattice(&rs2, 1).len(), 3);
        let pts = enumerate_lattice(&rs2, 2);
        assert_eq!(pts.len(), 6);
        let heights: Vec<usize> = pts.iter().map(|p| p.height()).collect();
        assert_eq!(heights, vec![0, 1, 1, 2, 2, 2]);
        assert!(pts[0].is_zero());
    }

    #[test]
    fn zero_multiplicity_gives_pure_exponential() {
        let rs = build_bc(2).unwrap();
        let lam = SpectralParameter::new(vec![c(0.7, 0.2), c(0.31, -0.4)]);
        let tbl = gamma_coefficients(&lam, &Multiplicity::ZERO, &rs, 8).unwrap();
        for (mu, g) in tbl.iter() {
            if mu.is_zero() {
                assert_eq!(g, c(1.0, 0.0));
            } else {
                assert_eq!(g, c(0.0, 0.0));
            }
        }
        let x = ChamberPoint::new(vec![1.1, 0.4]);
        let phi = eval_phi(&tbl, &x).unwrap();
        let expected = (lam.coords()[0] * 1.1 + lam.coords()[1] * 0.4).exp();
        assert!((phi.value - expected).norm() < 1e-14 * expected.norm());
    }

    #[test]
    fn bc1_first_nonzero_coefficient() {
        // e^{aX}(1 + Γ_2 e^{−2X}), a = λ − ρ, substituted into
        // D² + (k_1 coth X + 2 k_2 coth 2X) D and compared at order e^{(a−2)X}
        // gives Γ_2 = k_1 a / (2 (a + ρ − 1)).
        let rs = build_bc(1).unwrap();
        let (k1, k2) = (1.3, 0.7);
        let lam = 2.37;
        let m = Multiplicity::new(k1, 0.0, k2);
        let tbl = gamma_coefficients(&SpectralParameter::real(&[lam]), &m, &rs, 4).unwrap();
        let rho = k1 / 2.0 + k2;
        let a = lam - rho;
        let expected = k1 * a / (2.0 * (a + rho - 1.0));
        assert!((tbl.get(&[2]).unwrap().re - expected).abs() < 1e-14);
        assert_eq!(tbl.get(&[1]).unwrap(), c(0.0, 0.0));
        assert_eq!(tbl.get(&[3]).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn resonance_detected() {
        let rs = build_bc(1).unwrap();
        let lam = SpectralParameter::real(&[1.0]);
        let err = gamma_coefficients(&lam, &Multiplicity::new(1.0, 0.0, 1.0), &rs, 4).unwrap_err();
        assert_eq!(
            err,
            Error::Resonance {
                mu: vec![2],
                divisor: 0.0
            }
        );
    }

    #[test]
    fn chamber_is_enforced() {
        let rs = build_bc(2).unwrap();
        let lam = SpectralParameter::real(&[0.3, 0.1]);
        let tbl = gamma_coefficients(&lam, &Multiplicity::new(1.0, 1.0, 1.0), &rs, 4).unwrap();
        assert!(matches!(
            eval_phi(&tbl, &ChamberPoint::new(vec![0.5, 0.5])),
            Err(Error::Chamber { .. })
        ));
        assert!(matches!(
            eval_phi(&tbl, &ChamberPoint::new(vec![0.5, -0.1])),
            Err(Error::Chamber { .. })
        ));
        assert!(eval_phi(&tbl, &ChamberPoint::new(vec![0.5, 0.2])).is_ok());
    }

    #[test]
    fn diagnostic_shrinks_with_order() {
        let rs = build_bc(1).unwrap();
        let lam = SpectralParameter::real(&[2.3]);
        let m = Multiplicity::new(1.0, 0.0, 1.0);
        let x = ChamberPoint::new(vec![1.0]);
        let d10 = eval_phi(&gamma_coefficients(&lam, &m, &rs, 10).unwrap(), &x)
            .unwrap()
            .last_shell;
        let d30 = eval_phi(&gamma_coefficients(&lam, &m, &rs, 30).unwrap(), &x)
            .unwrap()
            .last_shell;
        assert!(d30 <= d10);
        let d40 = eval_phi(&gamma_coefficients(&lam, &m, &rs, 40).unwrap(), &x)
            .unwrap()
            .last_shell;
        assert!(d40 < 1e-12, "{d40}");
    }

    #[test]
    fn builds_are_bit_identical() {
        let rs = build_bc(2).unwrap();
        let lam = SpectralParameter::new(vec![c(1.7, 0.3), c(0.45, 0.1)]);
        let m = Multiplicity::new(2.0, 1.0, 1.0);
        let a = gamma_coefficients(&lam, &m, &rs, 12).unwrap();
        let b = gamma_coefficients(&lam, &m, &rs, 12).unwrap();
        for ((_, x), (_, y)) in a.iter().zip(b.iter()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }
}
