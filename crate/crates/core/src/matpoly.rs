use std::ops::{Add, Sub};

use num_complex::Complex64;

use crate::mat2::{CMat2, Mat2};
use crate::poly::RealPoly;

/// 2x2 matrix whose entries are real polynomials in `x`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatPoly2 {
    pub entries: [[RealPoly; 2]; 2],
}

impl MatPoly2 {
    pub fn new(p11: RealPoly, p12: RealPoly, p21: RealPoly, p22: RealPoly) -> Self {
        Self {
            entries: [[p11, p12], [p21, p22]],
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(m: Mat2) -> Self {
        Self::new(
            RealPoly::constant(m.get(0, 0)),
            RealPoly::constant(m.get(0, 1)),
            RealPoly::constant(m.get(1, 0)),
            RealPoly::constant(m.get(1, 1)),
        )
    }

    pub fn diag(a: RealPoly, d: RealPoly) -> Self {
        Self::new(a, RealPoly::zero(), RealPoly::zero(), d)
    }

    /// `x^k I`.
    pub fn scalar_monomial(k: usize) -> Self {
        Self::diag(RealPoly::monomial(k), RealPoly::monomial(k))
    }

    pub fn entry(&self, i: usize, j: usize) -> &RealPoly {
        &self.entries[i][j]
    }

    pub fn degree(&self) -> Option<usize> {
        self.entries
            .iter()
            .flatten()
            .filter_map(RealPoly::degree)
            .max()
    }

    /// Matrix coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Mat2 {
        let e = &self.entries;
        Mat2::new(
            e[0][0].coeff(k),
            e[0][1].coeff(k),
            e[1][0].coeff(k),
            e[1][1].coeff(k),
        )
    }

    pub fn leading_coeff(&self) -> Mat2 {
        self.degree().map_or(Mat2::zero(), |d| self.coeff(d))
    }

    pub fn eval(&self, x: f64) -> Mat2 {
        let e = &self.entries;
        Mat2::new(
            e[0][0].eval(x),
            e[0][1].eval(x),
            e[1][0].eval(x),
            e[1][1].eval(x),
        )
    }

    pub fn eval_complex(&self, x: Complex64) -> CMat2 {
        let e = &self.entries;
        CMat2::new(
            e[0][0].eval_complex(x),
            e[0][1].eval_complex(x),
            e[1][0].eval_complex(x),
            e[1][1].eval_complex(x),
        )
    }

    /// `A * self` for a constant matrix `A`.
    pub fn left_mul(&self, a: &Mat2) -> Self {
        let e = &self.entries;
        let row = |i: usize, j: usize| &e[0][j].scale(a.get(i, 0)) + &e[1][j].scale(a.get(i, 1));
        Self::new(row(0, 0), row(0, 1), row(1, 0), row(1, 1))
    }

    /// `self * B` for a polynomial matrix `B`.
    pub fn mul(&self, b: &MatPoly2) -> Self {
        let (e, f) = (&self.entries, &b.entries);
        let prod = |i: usize, j: usize| &(&e[i][0] * &f[0][j]) + &(&e[i][1] * &f[1][j]);
        Self::new(prod(0, 0), prod(0, 1), prod(1, 0), prod(1, 1))
    }

    pub fn mul_x(&self) -> Self {
        self.map(RealPoly::mul_x)
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        Self::new(
            e[0][0].clone(),
            e[1][0].clone(),
            e[0][1].clone(),
            e[1][1].clone(),
        )
    }

    pub fn map(&self, f: impl Fn(&RealPoly) -> RealPoly) -> Self {
        let e = &self.entries;
        Self::new(f(&e[0][0]), f(&e[0][1]), f(&e[1][0]), f(&e[1][1]))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(RealPoly::max_abs)
            .fold(0.0, f64::max)
    }

    /// Max-abs coefficient difference relative to the largest coefficient of
    /// either operand.
    pub fn relative_diff(&self, other: &Self) -> f64 {
        let scale = self.max_abs_coeff().max(other.max_abs_coeff());
        if scale == 0.0 {
            return 0.0;
        }
        (self - other).max_abs_coeff() / scale
    }
}

impl Add for &MatPoly2 {
    type Output = MatPoly2;
    fn add(self, r: &MatPoly2) -> MatPoly2 {
        let (e, f) = (&self.entries, &r.entries);
        MatPoly2::new(
            &e[0][0] + &f[0][0],
            &e[0][1] + &f[0][1],
            &e[1][0] + &f[1][0],
            &e[1][1] + &f[1][1],
        )
    }
}

impl Sub for &MatPoly2 {
    type Output = MatPoly2;
    fn sub(self, r: &MatPoly2) -> MatPoly2 {
        let (e, f) = (&self.entries, &r.entries);
        MatPoly2::new(
            &e[0][0] - &f[0][0],
            &e[0][1] - &f[0][1],
            &e[1][0] - &f[1][0],
            &e[1][1] - &f[1][1],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_commutes_with_entries() {
        let p = MatPoly2::new(
            RealPoly::new(vec![1.0, 2.0]),
            RealPoly::monomial(2),
            RealPoly::zero(),
            RealPoly::new(vec![-0.5, 0.0, 1.0]),
        );
        let x = 0.3;
        let v = p.eval(x);
        assert_eq!(v.get(0, 0), 1.6);
        assert!((v.get(0, 1) - 0.09).abs() < 1e-15);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(2), Mat2::new(0.0, 1.0, 0.0, 1.0));

        let a = Mat2::new(1.0, -2.0, 0.5, 3.0);
        assert!((p.left_mul(&a).eval(x) - a * v).max_abs() < 1e-14);
        let q = p.transpose();
        assert!((p.mul(&q).eval(x) - v * v.transpose()).max_abs() < 1e-14);
    }
}
