//! Real polynomials and rational functions in one variable.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Polynomial with coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(Vec<f64>);

impl Poly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Poly(coeffs)
    }

    pub fn constant(c: f64) -> Self {
        Poly::new(vec![c])
    }

    /// `s`
    pub fn x() -> Self {
        Poly::new(vec![0.0, 1.0])
    }

    /// `s − a`
    pub fn linear_root(a: f64) -> Self {
        Poly::new(vec![-a, 1.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() == 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() == 1 {
            return Poly::constant(0.0);
        }
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly::new(self.0.iter().map(|&c| c * k).collect())
    }

    /// Synthetic division by `s − a`; `None` unless the remainder vanishes
    /// to within `tol` relative to the coefficient size.
    pub fn divide_root(&self, a: f64, tol: f64) -> Option<Poly> {
        if self.is_zero() || self.degree() == 0 {
            return None;
        }
        let n = self.0.len();
        let mut q = vec![0.0; n - 1];
        let mut carry = 0.0;
        for k in (1..n).rev() {
            carry = self.0[k] + carry * a;
            q[k - 1] = carry;
        }
        let rem = self.0[0] + carry * a;
        let scale = self.0.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if rem.abs() <= tol * scale {
            Some(Poly::new(q))
        } else {
            None
        }
    }

    /// Re-expands `p(s)` as a polynomial in `u` with `s = a + b u`.
    pub fn compose_affine(&self, a: f64, b: f64) -> Poly {
        let lin = Poly::new(vec![a, b]);
        let mut out = Poly::constant(0.0);
        for &c in self.0.iter().rev() {
            out = &(&out * &lin) + &Poly::constant(c);
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0.0) + o.0.get(k).unwrap_or(&0.0))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

const ROOT_TOL: f64 = 1e-12;

/// `num / den`, kept with common `(s ∓ 1)` factors cancelled.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        RationalFn { num, den }.simplified()
    }

    pub fn poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::constant(1.0),
        }
    }

    pub fn constant(c: f64) -> Self {
        RationalFn::poly(Poly::constant(c))
    }

    /// Cancels the factors `s − 1` and `s + 1` shared by numerator and
    /// denominator, then normalizes a constant denominator to one.
    pub fn simplified(mut self) -> Self {
        if self.num.is_zero() {
            return RationalFn::constant(0.0);
        }
        for root in [1.0, -1.0] {
            while let (Some(n), Some(d)) = (
                self.num.divide_root(root, ROOT_TOL),
                self.den.divide_root(root, ROOT_TOL),
            ) {
                self.num = n;
                self.den = d;
            }
        }
        if self.den.is_constant() {
            let d = self.den.coeffs()[0];
            self.num = self.num.scale(1.0 / d);
            self.den = Poly::constant(1.0);
        }
        self
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.num.eval(x) / self.den.eval(x)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.num.eval_complex(x) / self.den.eval_complex(x)
    }

    pub fn derivative(&self) -> RationalFn {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFn::new(n, &self.den * &self.den)
    }

    /// Whether the denominator vanishes at `x` (relative tolerance).
    pub fn has_pole_at(&self, x: f64) -> bool {
        let scale = self.den.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
        self.den.eval(x).abs() <= ROOT_TOL * scale
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, o: &RationalFn) -> RationalFn {
        if self.den == o.den {
            return RationalFn::new(&self.num + &o.num, self.den.clone());
        }
        RationalFn::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, o: &RationalFn) -> RationalFn {
        self + &(-o)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, o: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &o.num, &self.den * &o.den)
    }
}
