//! `BC_n` root data, the hyperoctahedral Weyl group, multiplicity triples and
//! the multiplicity shift arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// The three Weyl group orbits of a `BC_n` root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orbit {
    /// `±ε_i`
    Short,
    /// `±ε_j ± ε_k`, empty in rank one
    Medium,
    /// `±2ε_i`
    Long,
}

/// A root as an integer vector in the ε-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i32>,
    orbit: Orbit,
}

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn orbit(&self) -> Orbit {
        self.orbit
    }

    /// `⟨α, α⟩`, one of 1, 2 or 4.
    pub fn norm2(&self) -> i32 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn dot_real(&self, x: &[f64]) -> f64 {
        self.coords.iter().zip(x).map(|(&c, &v)| c as f64 * v).sum()
    }

    pub fn dot_complex(&self, z: &[Complex64]) -> Complex64 {
        self.coords
            .iter()
            .zip(z)
            .fold(Complex64::new(0.0, 0.0), |acc, (&c, &v)| acc + v * c as f64)
    }

    /// Coordinates on the simple roots `ε_1 − ε_2, …, ε_{n−1} − ε_n, ε_n`.
    pub fn simple_coords(&self) -> Vec<i64> {
        to_simple_coords(&self.coords)
    }

    /// Whether `2α` is not a root, i.e. `α ∈ Σ_*`.
    pub fn in_sigma_star(&self) -> bool {
        self.orbit != Orbit::Short
    }

    /// Whether `α/2` is not a root, i.e. `α ∈ Σ_i`.
    pub fn in_sigma_i(&self) -> bool {
        self.orbit != Orbit::Long
    }
}

/// ε-coordinates to simple-root coordinates (partial sums).
pub fn to_simple_coords(v: &[i32]) -> Vec<i64> {
    let mut acc = 0i64;
    v.iter()
        .map(|&c| {
            acc += c as i64;
            acc
        })
        .collect()
}

/// Simple-root coordinates to ε-coordinates (successive differences).
pub fn from_simple_coords(c: &[i64]) -> Vec<i64> {
    let mut prev = 0i64;
    c.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

fn orbit_of(coords: &[i32]) -> Orbit {
    let nonzero: Vec<i32> = coords.iter().copied().filter(|&c| c != 0).collect();
    match (nonzero.len(), nonzero.first().map(|c| c.abs())) {
        (1, Some(1)) => Orbit::Short,
        (1, Some(2)) => Orbit::Long,
        _ => Orbit::Medium,
    }
}

/// Root data of `BC_n` with the positive system
/// `{ε_i, 2ε_i, ε_j ± ε_k (j < k)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemBC {
    rank: usize,
    roots: Vec<Root>,
    positive: Vec<Root>,
    simple: Vec<Root>,
}

fn unit(n: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

/// Builds the `BC_n` root system.
pub fn build_bc(n: usize) -> Result<RootSystemBC> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut positive = Vec::new();
    for i in 0..n {
        positive.push(unit(n, i, 1));
    }
    for i in 0..n {
        positive.push(unit(n, i, 2));
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut minus = vec![0; n];
            minus[j] = 1;
            minus[k] = -1;
            positive.push(minus);
            let mut plus = vec![0; n];
            plus[j] = 1;
            plus[k] = 1;
            positive.push(plus);
        }
    }
    let positive: Vec<Root> = positive
        .into_iter()
        .map(|coords| Root {
            orbit: orbit_of(&coords),
            coords,
        })
        .collect();
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| Root {
        coords: r.coords.iter().map(|c| -c).collect(),
        orbit: r.orbit,
    }));
    let mut simple = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut v = vec![0; n];
        v[i] = 1;
        v[i + 1] = -1;
        simple.push(Root {
            coords: v,
            orbit: Orbit::Medium,
        });
    }
    simple.push(Root {
        coords: unit(n, n - 1, 1),
        orbit: Orbit::Short,
    });
    Ok(RootSystemBC {
        rank: n,
        roots,
        positive,
        simple,
    })
}

impl RootSystemBC {
    pub fn new(n: usize) -> Result<Self> {
        build_bc(n)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// Orbit of an arbitrary integer vector, or `None` if it is not a root.
    pub fn orbit_of(&self, v: &[i32]) -> Option<Orbit> {
        self.roots.iter().find(|r| r.coords == v).map(|r| r.orbit)
    }

    pub fn contains(&self, v: &[i32]) -> bool {
        self.orbit_of(v).is_some()
    }

    /// `|W| = 2^n n!`
    pub fn weyl_order(&self) -> usize {
        (1..=self.rank).product::<usize>() << self.rank
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        WeylElement::all(self.rank)
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }
}

/// A Weyl-invariant real multiplicity function, one value per orbit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Multiplicity {
    pub short: f64,
    pub medium: f64,
    pub long: f64,
}

impl Multiplicity {
    pub const ZERO: Multiplicity = Multiplicity {
        short: 0.0,
        medium: 0.0,
        long: 0.0,
    };

    pub const fn new(short: f64, medium: f64, long: f64) -> Self {
        Multiplicity {
            short,
            medium,
            long,
        }
    }

    /// Multiplicities `(2(q − 1), 0, 1)` of `SU(q + 1)/S(U(1) × U(q))`.
    pub fn grassmannian(q: u32) -> Self {
        Multiplicity::new(2.0 * (q as f64 - 1.0), 0.0, 1.0)
    }

    pub fn on(&self, orbit: Orbit) -> f64 {
        match orbit {
            Orbit::Short => self.short,
            Orbit::Medium => self.medium,
            Orbit::Long => self.long,
        }
    }

    /// `m_α` for a root.
    pub fn of_root(&self, root: &Root) -> f64 {
        self.on(root.orbit)
    }

    /// `m_{α/2}`, which is zero unless `α` is long.
    pub fn of_half_root(&self, root: &Root) -> f64 {
        match root.orbit {
            Orbit::Long => self.short,
            _ => 0.0,
        }
    }

    /// Membership in `ℳ⁺`.
    pub fn is_positive(&self) -> bool {
        self.short >= 0.0 && self.medium >= 0.0 && self.long >= 0.0
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.short, self.medium, self.long]
    }
}

impl Add for Multiplicity {
    type Output = Multiplicity;
    fn add(self, o: Multiplicity) -> Multiplicity {
        Multiplicity::new(self.short + o.short, self.medium + o.medium, self.long + o.long)
    }
}

impl Sub for Multiplicity {
    type Output = Multiplicity;
    fn sub(self, o: Multiplicity) -> Multiplicity {
        Multiplicity::new(self.short - o.short, self.medium - o.medium, self.long - o.long)
    }
}

impl Mul<f64> for Multiplicity {
    type Output = Multiplicity;
    fn mul(self, k: f64) -> Multiplicity {
        Multiplicity::new(self.short * k, self.medium * k, self.long * k)
    }
}

impl Neg for Multiplicity {
    type Output = Multiplicity;
    fn neg(self) -> Multiplicity {
        self * -1.0
    }
}

/// A spectral parameter `λ ∈ 𝔞*_ℂ` in ε-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralParameter(pub Vec<Complex64>);

impl SpectralParameter {
    pub fn new(coords: Vec<Complex64>) -> Self {
        SpectralParameter(coords)
    }

    pub fn real(coords: &[f64]) -> Self {
        SpectralParameter(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(n: usize) -> Self {
        SpectralParameter(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Bilinear (not Hermitian) extension of the inner product.
    pub fn dot(&self, other: &SpectralParameter) -> Complex64 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a * b)
    }

    pub fn dot_real(&self, x: &[f64]) -> Complex64 {
        self.0
            .iter()
            .zip(x)
            .fold(Complex64::new(0.0, 0.0), |acc, (a, &b)| acc + a * b)
    }

    pub fn conj(&self) -> Self {
        SpectralParameter(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        SpectralParameter(self.0.iter().map(|z| z * k).collect())
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for &SpectralParameter {
    type Output = SpectralParameter;
    fn add(self, o: &SpectralParameter) -> SpectralParameter {
        SpectralParameter(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &SpectralParameter {
    type Output = SpectralParameter;
    fn sub(self, o: &SpectralParameter) -> SpectralParameter {
        SpectralParameter(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &SpectralParameter {
    type Output = SpectralParameter;
    fn neg(self) -> SpectralParameter {
        SpectralParameter(self.0.iter().map(|z| -z).collect())
    }
}

/// `ρ(m) = ½ Σ_{α ∈ Σ⁺} m_α α`.
pub fn rho(rs: &RootSystemBC, m: &Multiplicity) -> SpectralParameter {
    let mut v = vec![0.0; rs.rank()];
    for root in rs.positive_roots() {
        let w = 0.5 * m.of_root(root);
        for (acc, &c) in v.iter_mut().zip(root.coords()) {
            *acc += w * c as f64;
        }
    }
    SpectralParameter::real(&v)
}

/// `λ_α = ⟨λ, α⟩ / ⟨α, α⟩`.
pub fn lambda_alpha(lambda: &SpectralParameter, alpha: &[i32]) -> Result<Complex64> {
    let n2: i32 = alpha.iter().map(|c| c * c).sum();
    if n2 == 0 {
        return Err(Error::ZeroRoot);
    }
    let dot = alpha
        .iter()
        .zip(lambda.coords())
        .fold(Complex64::new(0.0, 0.0), |acc, (&c, z)| acc + z * c as f64);
    Ok(dot / n2 as f64)
}

const LATTICE_TOL: f64 = 1e-9;

/// Whether a real `λ` lies in the weight lattice `P`.
pub fn in_weight_lattice(lambda: &[f64], rs: &RootSystemBC) -> Result<bool> {
    rs.check_dim(lambda.len())?;
    let lam = SpectralParameter::real(lambda);
    for root in rs.positive_roots() {
        let v = lambda_alpha(&lam, root.coords())?.re;
        if (v - v.round()).abs() > LATTICE_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The basis `ℬ = {b_1, b_2, b_3}` of integral multiplicities.
pub fn shift_basis(_rs: &RootSystemBC) -> [Multiplicity; 3] {
    [
        Multiplicity::new(4.0, 0.0, -2.0),
        Multiplicity::new(0.0, 2.0, 0.0),
        Multiplicity::new(0.0, 0.0, 2.0),
    ]
}

/// Multiplicities attached to the character power `l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultShift {
    /// `m_+(l) = (m_s − 2|l|, m_m, m_l + 2|l|)`
    pub plus: Multiplicity,
    /// `m_−(l) = (m_s + 2|l|, m_m, m_l − 2|l|)`
    pub minus: Multiplicity,
    /// `m' = (m_s + 2|l|, m_m, m_l)`
    pub prime: Multiplicity,
    /// `k = |l| b_1`, so that `m_+(l) = m' − k`
    pub k: Multiplicity,
}

pub fn mult_shift_data(m: &Multiplicity, l: i64) -> MultShift {
    let a = 2.0 * l.unsigned_abs() as f64;
    MultShift {
        plus: Multiplicity::new(m.short - a, m.medium, m.long + a),
        minus: Multiplicity::new(m.short + a, m.medium, m.long - a),
        prime: Multiplicity::new(m.short + a, m.medium, m.long),
        k: Multiplicity::new(2.0 * a, 0.0, -a),
    }
}

/// A signed permutation: `(w v)_{perm[i]} = signs[i] · v_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be +1 or -1".into()));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// All `2^n n!` elements; permutations in lexicographic order, then sign
    /// patterns by bitmask. The identity comes first.
    pub fn all(n: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            for mask in 0u32..(1u32 << n) {
                let signs = (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(WeylElement {
                    perm: perm.clone(),
                    signs,
                });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    pub fn act<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Copy + Neg<Output = T> + Default,
    {
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -x } else { x };
        }
        out
    }

    pub fn act_spectral(&self, lambda: &SpectralParameter) -> SpectralParameter {
        SpectralParameter(self.act(lambda.coords()))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All pairs `(w, wλ)`.
pub fn weyl_orbit(
    lambda: &SpectralParameter,
    rs: &RootSystemBC,
) -> Result<Vec<(WeylElement, SpectralParameter)>> {
    rs.check_dim(lambda.rank())?;
    Ok(rs
        .weyl_group()
        .into_iter()
        .map(|w| {
            let image = w.act_spectral(lambda);
            (w, image)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bc1_has_four_roots_and_no_medium_orbit() {
        let rs = build_bc(1).unwrap();
        assert_eq!(rs.roots().len(), 4);
        assert!(rs.roots().iter().all(|r| r.orbit() != Orbit::Medium));
        assert!(rs.contains(&[1]) && rs.contains(&[-2]));
    }

    #[test]
    fn bc2_positive_roots() {
        let rs = build_bc(2).unwrap();
        let mut pos: Vec<Vec<i32>> = rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        pos.sort();
        let mut expected = vec![
            vec![1, 0],
            vec![0, 1],
            vec![2, 0],
            vec![0, 2],
            vec![1, -1],
            vec![1, 1],
        ];
        expected.sort();
        assert_eq!(pos, expected);
    }

    #[test]
    fn bc3_counts() {
        let rs = build_bc(3).unwrap();
        assert_eq!(rs.weyl_order(), 48);
        assert_eq!(rs.weyl_group().len(), 48);
        assert_eq!(rs.roots().len(), 24);
    }

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(build_bc(0), Err(Error::ZeroRank));
    }

    #[test]
    fn positive_roots_are_nonnegative_in_simple_coords() {
        for n in 1..=4 {
            let rs = build_bc(n).unwrap();
            for r in rs.positive_roots() {
                let sc = r.simple_coords();
                assert!(sc.iter().all(|&c| c >= 0), "{:?}", r);
                let back: Vec<i32> = from_simple_coords(&sc).iter().map(|&c| c as i32).collect();
                assert_eq!(back, r.coords());
            }
        }
    }

    #[test]
    fn sigma_star_and_sigma_i() {
        let rs = build_bc(2).unwrap();
        for r in rs.roots() {
            let doubled: Vec<i32> = r.coords().iter().map(|c| 2 * c).collect();
            assert_eq!(r.in_sigma_star(), !rs.contains(&doubled));
            let halved_ok = r.coords().iter().all(|c| c % 2 == 0);
            let halved: Vec<i32> = r.coords().iter().map(|c| c / 2).collect();
            assert_eq!(r.in_sigma_i(), !(halved_ok && rs.contains(&halved)));
        }
    }

    #[test]
    fn rho_examples() {
        let rs1 = build_bc(1).unwrap();
        let r = rho(&rs1, &Multiplicity::new(3.0, 0.0, 5.0));
        assert_eq!(r.coords()[0].re, 1.5 + 5.0);

        let rs2 = build_bc(2).unwrap();
        let r = rho(&rs2, &Multiplicity::new(1.0, 1.0, 1.0));
        assert_eq!(r.coords()[0].re, 2.5);
        assert_eq!(r.coords()[1].re, 1.5);

        let r = rho(&rs2, &Multiplicity::ZERO);
        assert!(r.coords().iter().all(|z| *z == c(0.0, 0.0)));
    }

    #[test]
    fn lambda_alpha_examples() {
        let l = SpectralParameter::real(&[2.0]);
        assert_eq!(lambda_alpha(&l, &[1]).unwrap(), c(2.0, 0.0));
        assert_eq!(lambda_alpha(&l, &[2]).unwrap(), c(1.0, 0.0));
        let l = SpectralParameter::new(vec![c(1.0, 1.0), c(1.0, 0.0)]);
        assert_eq!(lambda_alpha(&l, &[1, -1]).unwrap(), c(0.0, 0.5));
        assert_eq!(lambda_alpha(&l, &[0, 0]), Err(Error::ZeroRoot));
    }

    #[test]
    fn weight_lattice_examples() {
        let rs1 = build_bc(1).unwrap();
        assert!(!in_weight_lattice(&[1.0], &rs1).unwrap());
        assert!(in_weight_lattice(&[2.0], &rs1).unwrap());
        let rs2 = build_bc(2).unwrap();
        assert!(in_weight_lattice(&[2.0, 2.0], &rs2).unwrap());
        assert!(in_weight_lattice(&[2.0, 0.0], &rs2).unwrap());
        assert!(!in_weight_lattice(&[1.0, 1.0], &rs2).unwrap());
        assert!(!in_weight_lattice(&[3.0, 2.0], &rs2).unwrap());
    }

    #[test]
    fn shift_basis_values() {
        let rs = build_bc(1).unwrap();
        let [b1, b2, b3] = shift_basis(&rs);
        assert_eq!(b1, Multiplicity::new(4.0, 0.0, -2.0));
        assert_eq!(b2, Multiplicity::new(0.0, 2.0, 0.0));
        assert_eq!(b3, Multiplicity::new(0.0, 0.0, 2.0));
    }

    #[test]
    fn mult_shift_examples() {
        let m = Multiplicity::new(2.0, 0.0, 1.0);
        let d = mult_shift_data(&m, 1);
        assert_eq!(d.plus, Multiplicity::new(0.0, 0.0, 3.0));
        assert_eq!(d.prime, Multiplicity::new(4.0, 0.0, 1.0));
        assert_eq!(d.k, Multiplicity::new(4.0, 0.0, -2.0));
        assert_eq!(d.minus, Multiplicity::new(4.0, 0.0, -1.0));

        let d = mult_shift_data(&m, 0);
        assert_eq!(d.plus, m);
        assert_eq!(d.prime, m);
        assert_eq!(d.minus, m);
        assert_eq!(d.k, Multiplicity::ZERO);

        let d = mult_shift_data(&Multiplicity::grassmannian(3), 2);
        assert_eq!(d.plus, Multiplicity::new(0.0, 0.0, 5.0));
        assert_eq!(d.prime, Multiplicity::new(8.0, 0.0, 1.0));
        assert_eq!(mult_shift_data(&m, -2), mult_shift_data(&m, 2));
    }

    #[test]
    fn weyl_orbit_examples() {
        let rs1 = build_bc(1).unwrap();
        let orbit = weyl_orbit(&SpectralParameter::real(&[3.0]), &rs1).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit[0].0.is_identity());
        assert_eq!(orbit[0].1, SpectralParameter::real(&[3.0]));
        assert_eq!(orbit[1].1, SpectralParameter::real(&[-3.0]));

        let rs2 = build_bc(2).unwrap();
        let orbit = weyl_orbit(&SpectralParameter::real(&[5.0, 7.0]), &rs2).unwrap();
        let mut images: Vec<(i64, i64)> = orbit
            .iter()
            .map(|(_, l)| (l.coords()[0].re as i64, l.coords()[1].re as i64))
            .collect();
        images.sort();
        let mut expected = vec![];
        for (a, b) in [(5, 7), (7, 5)] {
            for sa in [-1, 1] {
                for sb in [-1, 1] {
                    expected.push((sa * a, sb * b));
                }
            }
        }
        expected.sort();
        assert_eq!(images, expected);
    }

    #[test]
    fn only_zero_is_fixed_by_w() {
        let rs2 = build_bc(2).unwrap();
        let l = SpectralParameter::real(&[0.3, 0.0]);
        let fixed = weyl_orbit(&l, &rs2).unwrap().iter().all(|(_, img)| *img == l);
        assert!(!fixed);
        let z = SpectralParameter::zero(2);
        assert!(weyl_orbit(&z, &rs2).unwrap().iter().all(|(_, img)| *img == z));
    }

    #[test]
    fn weyl_action_preserves_roots_and_orbits() {
        for n in 1..=3 {
            let rs = build_bc(n).unwrap();
            for w in rs.weyl_group() {
                for r in rs.roots() {
                    let image = w.act(r.coords());
                    assert_eq!(rs.orbit_of(&image), Some(r.orbit()));
                }
            }
        }
    }
}
