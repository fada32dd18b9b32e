//! Dense polynomial containers: complex polynomials in `z`, complex Laurent
//! polynomials on `z^k, k in Z`, and real polynomials in `x`.
//!
//! All three store coefficients in ascending powers and trim exact zeros at
//! the ends, so `degree()` is always the true degree.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

fn trim_tail_c(v: &mut Vec<Complex64>) {
    while v.last() == Some(&ZERO) {
        v.pop();
    }
}

/// Complex polynomial `sum c_k z^k`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        trim_tail_c(&mut coeffs);
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Reversed polynomial `z^n conj(p)(1/z)`: conjugated coefficients in
    /// reversed order within length `n + 1`.
    pub fn reversed(&self, n: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeExceeded {
                    degree: d,
                    bound: n,
                });
            }
        }
        let coeffs = (0..=n).map(|k| self.coeff(n - k).conj()).collect();
        Ok(Self::new(coeffs))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, rhs: &ComplexPoly) -> ComplexPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, rhs: &ComplexPoly) -> ComplexPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

/// Laurent polynomial `sum_{k} c_k z^(min_power + k)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LaurentPoly {
    min_power: i64,
    coeffs: Vec<Complex64>,
}

impl LaurentPoly {
    pub fn new(min_power: i64, mut coeffs: Vec<Complex64>) -> Self {
        trim_tail_c(&mut coeffs);
        let lead = coeffs.iter().take_while(|&&c| c == ZERO).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            min_power: min_power + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(0, vec![c])
    }

    /// `z^k`.
    pub fn monomial(k: i64) -> Self {
        Self::new(k, vec![Complex64::new(1.0, 0.0)])
    }

    /// `z^shift * p(z)`.
    pub fn from_poly(p: &ComplexPoly, shift: i64) -> Self {
        Self::new(shift, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_power(&self) -> i64 {
        self.min_power
    }

    /// Largest power present; equals `min_power - 1` for the zero polynomial.
    pub fn max_power(&self) -> i64 {
        self.min_power + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let idx = k - self.min_power;
        if idx < 0 {
            return ZERO;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(ZERO)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        if self.is_zero() {
            return ZERO;
        }
        let horner = self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c);
        horner * z.powi(self.min_power as i32)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_power: self.min_power + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.min_power, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// `conj(f)(1/z)`: conjugated coefficients with `k -> -k`.
    pub fn conj_reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self::new(-self.max_power(), coeffs)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    fn combine(&self, rhs: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        if self.is_zero() && rhs.is_zero() {
            return Self::zero();
        }
        let (lo, hi) = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => (rhs.min_power, rhs.max_power()),
            (_, true) => (self.min_power, self.max_power()),
            _ => (
                self.min_power.min(rhs.min_power),
                self.max_power().max(rhs.max_power()),
            ),
        };
        let coeffs = (lo..=hi).map(|k| op(self.coeff(k), rhs.coeff(k))).collect();
        Self::new(lo, coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Real polynomial `sum c_k x^k`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = 1.0;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }

    /// Multiplies by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Classical Chebyshev polynomial of the first kind, `T_k(cos t) = cos(k t)`.
    pub fn chebyshev_t(k: usize) -> Self {
        chebyshev(k, Self::constant(1.0), Self::monomial(1))
    }

    /// Classical Chebyshev polynomial of the second kind,
    /// `U_k(cos t) = sin((k + 1) t) / sin t`.
    pub fn chebyshev_u(k: usize) -> Self {
        chebyshev(k, Self::constant(1.0), Self::monomial(1).scale(2.0))
    }

    /// Monic first-kind Chebyshev polynomial.
    pub fn monic_chebyshev_t(k: usize) -> Self {
        if k == 0 {
            return Self::constant(1.0);
        }
        Self::chebyshev_t(k).scale(0.5_f64.powi(k as i32 - 1))
    }

    /// Monic second-kind Chebyshev polynomial.
    pub fn monic_chebyshev_u(k: usize) -> Self {
        Self::chebyshev_u(k).scale(0.5_f64.powi(k as i32))
    }
}

fn chebyshev(k: usize, p0: RealPoly, p1: RealPoly) -> RealPoly {
    if k == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..k {
        let next = &cur.mul_x().scale(2.0) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

impl Add for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: &RealPoly) -> RealPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RealPoly {
    type Output = RealPoly;
    fn mul(self, rhs: &RealPoly) -> RealPoly {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RealPoly::new(coeffs)
    }
}
