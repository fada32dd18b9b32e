//! Matrix orthogonal polynomials attached to a circle measure.
//!
//! `F_n` are the quasi-orthogonal polynomials read off the VSOF, `P_n` the
//! left orthogonal ones, `W_n P_n` left orthonormal, and `Q_n = Xi_n^T W_n P_n`
//! the standard (symmetric positive definite leading coefficient) family.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::matpoly::MatPoly2;
use crate::measure::{matrix_inner, MatrixMeasure};
use crate::opuc::SchurSequence;
use crate::poly::RealPoly;
use crate::sof::{gram_block, schur_matrix_at, xy_decompose, Vsof};

/// `F_n` from the x-y decomposition of both SOF components.
pub fn matrix_poly_from_sof(v: &Vsof) -> Result<MatPoly2> {
    let (f11, f12) = xy_decompose(v.f1())?;
    let (f21, f22) = xy_decompose(v.f2())?;
    Ok(MatPoly2::new(f11, f12, f21, f22))
}

/// Coefficients of the two real recurrences
/// `x F_n = F_{n+1} + L F_n + M F_{n-1}` and
/// `F_n Y = J F_{n+1} + L~ F_n + M~ F_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRecurrence {
    pub l: Mat2,
    pub m: Mat2,
    pub l_tilde: Mat2,
    pub m_tilde: Mat2,
}

pub fn real_recurrence_coeffs(schur: &SchurSequence, n: usize) -> RealRecurrence {
    assert!(n >= 1, "real recurrences start at n = 1");
    let h = |k: usize| schur_matrix_at(schur, k);
    let id = Mat2::identity();
    let j = Mat2::j();
    let det = 1.0 - schur.get(2 * n - 1).norm_sqr();
    let lower = id - h(2 * n);
    let upper = id + h(2 * n);
    RealRecurrence {
        l: (lower * h(2 * n - 1) - h(2 * n + 1) * upper).scale(0.5),
        m: (lower * (id + h(2 * n - 2))).scale(0.25 * det),
        l_tilde: (lower * h(2 * n - 1) * j - j * h(2 * n + 1) * upper).scale(0.5),
        m_tilde: (lower * j * (id + h(2 * n - 2))).scale(-0.25 * det),
    }
}

/// `Y(x) = [[0, 1], [1 - x^2, 0]]`.
pub fn y_matrix() -> MatPoly2 {
    MatPoly2::new(
        RealPoly::zero(),
        RealPoly::constant(1.0),
        RealPoly::new(vec![1.0, 0.0, -1.0]),
        RealPoly::zero(),
    )
}

/// `F_0 .. F_n` from `F_0 = C`, `F_1 = (x I - I + H_1) C + I` and the first
/// real recurrence.
pub fn matrix_poly_recurrence(schur: &SchurSequence, n: usize) -> Vec<MatPoly2> {
    let c = Mat2::c();
    let mut out = vec![MatPoly2::constant(c)];
    if n == 0 {
        return out;
    }
    let h1 = schur_matrix_at(schur, 1);
    let f1 = &(&MatPoly2::scalar_monomial(1).mul(&MatPoly2::constant(c))
        + &MatPoly2::constant((h1 - Mat2::identity()) * c))
        + &MatPoly2::constant(Mat2::identity());
    out.push(f1);
    for k in 1..n {
        let rec = real_recurrence_coeffs(schur, k);
        let next = &(&out[k].mul_x() - &out[k].left_mul(&rec.l)) - &out[k - 1].left_mul(&rec.m);
        out.push(next);
    }
    out
}

/// Coefficient residual of the second real recurrence at index `n`, relative
/// to the largest coefficient involved.
pub fn second_recurrence_residual(schur: &SchurSequence, f: &[MatPoly2], n: usize) -> f64 {
    let rec = real_recurrence_coeffs(schur, n);
    let lhs = f[n].mul(&y_matrix());
    let rhs = &(&f[n + 1].left_mul(&Mat2::j()) + &f[n].left_mul(&rec.l_tilde))
        + &f[n - 1].left_mul(&rec.m_tilde);
    lhs.relative_diff(&rhs)
}

/// Subleading data of `F_{n+1} = C x^{n+1} + [[eta, 0], [gamma, 1]] x^n + ...`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadingData {
    pub eta: f64,
    pub gamma: f64,
    /// `[[1, 0], [gamma, 1]]`, leading coefficient of `P_n`.
    pub gamma_mat: Mat2,
}

pub fn leading_data(schur: &SchurSequence, n: usize) -> LeadingData {
    let b = (1..=2 * n + 1).fold(Complex64::default(), |b, k| {
        b + schur.get(k) * schur.get(k - 1).conj()
    });
    let s = schur.get(2 * n + 1) + b;
    LeadingData {
        eta: 0.5 * s.re,
        gamma: 0.5 * s.im,
        gamma_mat: Mat2::new(1.0, 0.0, 0.5 * s.im, 1.0),
    }
}

/// One row of [`quasi_orthogonality_report`]; residuals are relative to the
/// size of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiOrthogonalityRow {
    pub n: usize,
    /// `max_k<=n-2 |int F_n dOmega x^k|`.
    pub low_moments: f64,
    /// Deviation of `int F_n dOmega x^{n-1}` from `C_n (I - C) / 2`.
    pub top_moment: f64,
    /// Deviation of `int F_n dOmega F_n^T` from `C_n / 2`.
    pub norm: f64,
    /// `max_{m<n} |int F_n dOmega F_m^T|` relative to `sqrt(|C_n| |C_m|)`.
    pub cross: f64,
}

impl QuasiOrthogonalityRow {
    pub fn max_residual(&self) -> f64 {
        self.low_moments
            .max(self.top_moment)
            .max(self.norm)
            .max(self.cross)
    }
}

pub fn quasi_orthogonality_report(
    f: &[MatPoly2],
    omega: &MatrixMeasure,
    schur: &SchurSequence,
) -> Vec<QuasiOrthogonalityRow> {
    let scales: Vec<f64> = (0..f.len())
        .map(|n| gram_block(schur, n).max_abs())
        .collect();
    let i_minus_c = Mat2::identity() - Mat2::c();
    (0..f.len())
        .map(|n| {
            let cn = gram_block(schur, n);
            let scale = scales[n];
            let moment = |k: usize| matrix_inner(&f[n], &MatPoly2::scalar_monomial(k), omega);
            let low_moments = (0..n.saturating_sub(1))
                .map(|k| moment(k).max_abs())
                .fold(0.0, f64::max)
                / scale;
            let top_moment = if n >= 1 {
                (moment(n - 1) - (cn * i_minus_c).scale(0.5)).max_abs() / scale
            } else {
                0.0
            };
            let norm = (matrix_inner(&f[n], &f[n], omega) - cn.scale(0.5)).max_abs() / scale;
            let cross = (0..n)
                .map(|m| matrix_inner(&f[n], &f[m], omega).max_abs() / (scale * scales[m]).sqrt())
                .fold(0.0, f64::max);
            QuasiOrthogonalityRow {
                n,
                low_moments,
                top_moment,
                norm,
                cross,
            }
        })
        .collect()
}

/// `r_n = Im a_{2n} / (1 + Re a_{2n})`.
pub fn lomp_ratio(schur: &SchurSequence, n: usize) -> f64 {
    let a = schur.get(2 * n);
    a.im / (1.0 + a.re)
}

/// `(alpha_n, beta_n)` with `P_n = alpha_n F_{n+1} + beta_n F_n`.
pub fn lomp_coefficients(schur: &SchurSequence, n: usize) -> (Mat2, Mat2) {
    (
        Mat2::identity() - Mat2::c(),
        Mat2::new(1.0, lomp_ratio(schur, n), 0.0, 0.0),
    )
}

/// `(alpha~_n, beta~_n)` with `F_n = alpha~_n P_n + beta~_n P_{n-1}`.
pub fn lomp_inverse_coefficients(schur: &SchurSequence, n: usize) -> (Mat2, Mat2) {
    (Mat2::c(), Mat2::new(0.0, -lomp_ratio(schur, n), 0.0, 1.0))
}

/// Left orthogonal `P_n = alpha_n F_{n+1} + beta_n F_n`.
pub fn lomp(schur: &SchurSequence, n: usize, f_n: &MatPoly2, f_next: &MatPoly2) -> MatPoly2 {
    let (alpha, beta) = lomp_coefficients(schur, n);
    &f_next.left_mul(&alpha) + &f_n.left_mul(&beta)
}

/// `P_0 .. P_{len-2}` from `F_0 .. F_{len-1}`.
pub fn lomp_family(schur: &SchurSequence, f: &[MatPoly2]) -> Vec<MatPoly2> {
    f.windows(2)
        .enumerate()
        .map(|(n, w)| lomp(schur, n, &w[0], &w[1]))
        .collect()
}

/// Relative coefficient residual of `F_n - (alpha~_n P_n + beta~_n P_{n-1})`,
/// with `P_{-1} = 0`.
pub fn lomp_inverse_residual(
    schur: &SchurSequence,
    f: &[MatPoly2],
    p: &[MatPoly2],
    n: usize,
) -> f64 {
    let (at, bt) = lomp_inverse_coefficients(schur, n);
    let mut rebuilt = p[n].left_mul(&at);
    if n >= 1 {
        rebuilt = &rebuilt + &p[n - 1].left_mul(&bt);
    }
    f[n].relative_diff(&rebuilt)
}

/// `(W_n, N_n)` where `W_n P_n` is left orthonormal and
/// `N_n = int P_n dOmega P_n^T` is diagonal.
pub fn lomp_normalizers(schur: &SchurSequence, n: usize) -> (Mat2, Mat2) {
    let e_even = schur.eps(2 * n);
    let e_odd = schur.eps(2 * n + 1);
    let re_even = 1.0 + schur.get(2 * n).re;
    let re_next = 1.0 + schur.get(2 * n + 2).re;
    let p4 = 0.25_f64.powi(n as i32);
    let norm = Mat2::diag(p4 * e_even / re_even, p4 * 0.25 * e_odd * re_next);
    let p2 = 2.0_f64.powi(n as i32);
    let w = Mat2::diag(
        p2 * e_even.powf(-0.5) * re_even.sqrt(),
        p2 * 2.0 * e_odd.powf(-0.5) / re_next.sqrt(),
    );
    (w, norm)
}

/// Normalization data of the standard LONP.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardLonpData {
    /// `K_n = W_n Gamma_n`.
    pub k: Mat2,
    /// `Theta_n = K_n + adj(K_n)^T`.
    pub theta: Mat2,
    /// Orthogonal `Xi_n = Theta_n / sqrt(det Theta_n)`.
    pub xi: Mat2,
    pub w: Mat2,
}

pub fn standard_lonp_data(schur: &SchurSequence, n: usize) -> Result<StandardLonpData> {
    let (w, _) = lomp_normalizers(schur, n);
    let k = w * leading_data(schur, n).gamma_mat;
    let theta = k + k.adj().transpose();
    let det = theta.det();
    if !(det > 0.0) {
        return Err(Error::Degenerate(det));
    }
    Ok(StandardLonpData {
        k,
        theta,
        xi: theta.scale(det.sqrt().recip()),
        w,
    })
}

/// `Q_n = Xi_n^T W_n P_n`.
pub fn standard_lonp(p_n: &MatPoly2, schur: &SchurSequence, n: usize) -> Result<MatPoly2> {
    let d = standard_lonp_data(schur, n)?;
    Ok(p_n.left_mul(&(d.xi.transpose() * d.w)))
}

/// All three families `F_0..F_{n+1}`, `P_0..P_n`, `Q_0..Q_n`.
#[derive(Debug, Clone)]
pub struct MatrixFamilies {
    pub f: Vec<MatPoly2>,
    pub p: Vec<MatPoly2>,
    pub q: Vec<MatPoly2>,
}

pub fn matrix_families(schur: &SchurSequence, n: usize) -> Result<MatrixFamilies> {
    let f = matrix_poly_recurrence(schur, n + 1);
    let p = lomp_family(schur, &f);
    let q = p
        .iter()
        .enumerate()
        .map(|(k, pk)| standard_lonp(pk, schur, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixFamilies { f, p, q })
}
