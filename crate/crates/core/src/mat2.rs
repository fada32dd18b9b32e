//! Fixed-size 2x2 matrices over `f64` and `Complex64`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

/// Row-major 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2<T> {
    pub m: [[T; 2]; 2],
}

pub type Mat2 = Matrix2<f64>;
pub type CMat2 = Matrix2<Complex64>;

impl<T> Matrix2<T>
where
    T: Copy + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    pub const fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn identity() -> Self {
        Self::diag(T::one(), T::one())
    }

    pub fn diag(a: T, d: T) -> Self {
        Self::new(a, T::zero(), T::zero(), d)
    }

    /// `diag(1, 0)`.
    pub fn c() -> Self {
        Self::diag(T::one(), T::zero())
    }

    /// The rotation generator `[[0, 1], [-1, 0]]`.
    pub fn j() -> Self {
        Self::new(T::zero(), T::one(), -T::one(), T::zero())
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.m[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    pub fn det(&self) -> T {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> T {
        self.m[0][0] + self.m[1][1]
    }

    /// Adjugate, `A * adj(A) = det(A) I`.
    pub fn adj(&self) -> Self {
        Self::new(self.m[1][1], -self.m[0][1], -self.m[1][0], self.m[0][0])
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|v| v * s)
    }

    pub fn map<U>(&self, f: impl Fn(T) -> U) -> Matrix2<U> {
        Matrix2 {
            m: [
                [f(self.m[0][0]), f(self.m[0][1])],
                [f(self.m[1][0]), f(self.m[1][1])],
            ],
        }
    }

    pub fn mul_vec(&self, v: [T; 2]) -> [T; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    fn entries(&self) -> [T; 4] {
        [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]]
    }
}

impl Mat2 {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        (d != 0.0).then(|| self.adj().scale(1.0 / d))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.m[0][1] - self.m[1][0]).abs() <= tol
    }

    /// Eigenvalues of a symmetric matrix in ascending order.
    pub fn symmetric_eigenvalues(&self) -> [f64; 2] {
        let mean = 0.5 * self.trace();
        let half_gap = 0.5 * (self.m[0][0] - self.m[1][1]);
        let off = 0.5 * (self.m[0][1] + self.m[1][0]);
        let r = half_gap.hypot(off);
        [mean - r, mean + r]
    }

    pub fn to_complex(&self) -> CMat2 {
        self.map(|v| Complex64::new(v, 0.0))
    }
}

impl CMat2 {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        (d != Complex64::zero()).then(|| self.adj().scale(d.inv()))
    }

    pub fn re(&self) -> Mat2 {
        self.map(|v| v.re)
    }

    pub fn im(&self) -> Mat2 {
        self.map(|v| v.im)
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().map(|v| v.conj())
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `I + i s J` for real `s`, kept with exact unit entries.
    pub fn i_plus_ij(sign: f64) -> Self {
        let i = Complex64::new(0.0, sign);
        Self::new(Complex64::one(), i, -i, Complex64::one())
    }
}

impl<T> Add for Matrix2<T>
where
    T: Copy + Add<Output = T>,
{
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self {
            m: [
                [self.m[0][0] + r.m[0][0], self.m[0][1] + r.m[0][1]],
                [self.m[1][0] + r.m[1][0], self.m[1][1] + r.m[1][1]],
            ],
        }
    }
}

impl<T> Sub for Matrix2<T>
where
    T: Copy + Sub<Output = T>,
{
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self {
            m: [
                [self.m[0][0] - r.m[0][0], self.m[0][1] - r.m[0][1]],
                [self.m[1][0] - r.m[1][0], self.m[1][1] - r.m[1][1]],
            ],
        }
    }
}

impl<T> Mul for Matrix2<T>
where
    T: Copy + Add<Output = T> + Mul<Output = T>,
{
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let a = &self.m;
        let b = &r.m;
        Self {
            m: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
        }
    }
}

impl<T> Neg for Matrix2<T>
where
    T: Copy + Neg<Output = T>,
{
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            m: [
                [-self.m[0][0], -self.m[0][1]],
                [-self.m[1][0], -self.m[1][1]],
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_mat() -> impl Strategy<Value = Mat2> {
        prop::array::uniform4(-3.0..3.0f64).prop_map(|[a, b, c, d]| Mat2::new(a, b, c, d))
    }

    #[test]
    fn j_squares_to_minus_identity() {
        assert_eq!(Mat2::j() * Mat2::j(), -Mat2::identity());
    }

    #[test]
    fn complex_i_plus_ij_relations() {
        let p = CMat2::i_plus_ij(1.0);
        let m = CMat2::i_plus_ij(-1.0);
        // (I + iJ)(I - iJ) = I + J^2 + ... = 0 since J^2 = -I.
        assert_eq!(p * m, CMat2::zero());
        assert_eq!(p.re(), Mat2::identity());
        assert_eq!(p.im(), Mat2::j());
    }

    proptest! {
        #[test]
        fn algebra_identities(a in arb_mat(), b in arb_mat()) {
            let tol = 1e-10;
            prop_assert!(((a * a.adj()) - Mat2::identity().scale(a.det())).max_abs() < tol);
            prop_assert!(((a * b).det() - a.det() * b.det()).abs() < tol);
            prop_assert!(((a * b).transpose() - b.transpose() * a.transpose()).max_abs() < tol);
            prop_assert!(((a + b).trace() - a.trace() - b.trace()).abs() < tol);
            // J A J = -adj(A)^T
            prop_assert!((Mat2::j() * a * Mat2::j() + a.adj().transpose()).max_abs() < tol);
        }

        #[test]
        fn symmetric_eigenvalues_solve_characteristic(a in -3.0..3.0f64, b in -3.0..3.0f64, d in -3.0..3.0f64) {
            let s = Mat2::new(a, b, b, d);
            for l in s.symmetric_eigenvalues() {
                prop_assert!((s - Mat2::identity().scale(l)).det().abs() < 1e-9);
            }
        }
    }
}
