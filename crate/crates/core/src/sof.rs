//! Semi-orthogonal functions and their vector form.
//!
//! For `n >= 1` the pair
//!
//! ```text
//! f1_n(z) = (z phi_{2n-1}(z) + phi*_{2n-1}(z)) / (2^n z^n)
//! f2_n(z) = (z phi_{2n-1}(z) - phi*_{2n-1}(z)) / (i 2^n z^n)
//! ```
//!
//! lives in `Lambda_{-n,n}`, is real on the circle, and splits as
//! `f_k(z) = p_k1(x) + y p_k2(x)` with `x = (z + 1/z)/2`, `y = (z - 1/z)/2i`.
//! For `n = 0` the pair is `(1, 0)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::{CMat2, Mat2};
use crate::measure::{vector_inner_sampled, CircleMeasure};
use crate::opuc::{szego_sequence, SchurSequence};
use crate::poly::{ComplexPoly, LaurentPoly, RealPoly};

/// Tolerance for the conjugate-reflection test in [`xy_decompose`], relative
/// to the largest coefficient.
pub const REFLECTION_TOL: f64 = 1e-12;

/// Vector semi-orthogonal function `f_n = (f1_n, f2_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vsof {
    pub n: usize,
    pub components: [LaurentPoly; 2],
}

impl Vsof {
    pub fn f1(&self) -> &LaurentPoly {
        &self.components[0]
    }

    pub fn f2(&self) -> &LaurentPoly {
        &self.components[1]
    }

    pub fn eval(&self, z: Complex64) -> [Complex64; 2] {
        [self.components[0].eval(z), self.components[1].eval(z)]
    }

    /// `A f_n` for a constant complex matrix `A`, as Laurent polynomials.
    pub fn left_mul(&self, a: &CMat2) -> [LaurentPoly; 2] {
        let [f1, f2] = &self.components;
        let row = |i: usize| &f1.scale(a.get(i, 0)) + &f2.scale(a.get(i, 1));
        [row(0), row(1)]
    }
}

/// `(f1_n, f2_n)` from the monic `phi_{2n-1}`.
pub fn semi_orthogonal_pair(phi: &ComplexPoly, n: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    if n == 0 {
        return Err(Error::DegreeMismatch {
            expected: 0,
            found: "index 0 has no defining polynomial".into(),
        });
    }
    let deg = 2 * n - 1;
    let monic = phi.degree() == Some(deg) && (phi.coeff(deg) - 1.0).norm() <= 1e-12;
    if !monic {
        return Err(Error::DegreeMismatch {
            expected: deg,
            found: format!("{:?} (leading {})", phi.degree(), phi.coeff(deg)),
        });
    }
    let zphi = phi.shift(1);
    let rev = phi.reversed(deg)?;
    let scale = 0.5_f64.powi(n as i32);
    let plus = (&zphi + &rev).scale(Complex64::new(scale, 0.0));
    let minus = (&zphi - &rev).scale(Complex64::new(0.0, -scale));
    Ok((
        LaurentPoly::from_poly(&plus, -(n as i64)),
        LaurentPoly::from_poly(&minus, -(n as i64)),
    ))
}

/// Unique `(p1, p2)` with `f(z) = p1(x) + y p2(x)`.
///
/// Pairs `c_k z^k + conj(c_k) z^-k` are rewritten through
/// `z^k + z^-k = 2 T_k(x)` and `z^k - z^-k = 2 i y U_{k-1}(x)`, so the result
/// is exact at `x = +-1`.
pub fn xy_decompose(f: &LaurentPoly) -> Result<(RealPoly, RealPoly)> {
    let deviation = (f - &f.conj_reflect()).max_abs();
    if deviation > REFLECTION_TOL * f.max_abs().max(1.0) {
        return Err(Error::NotReflectionSymmetric { deviation });
    }
    if f.is_zero() {
        return Ok((RealPoly::zero(), RealPoly::zero()));
    }
    let top = f.max_power().max(-f.min_power()).max(0) as usize;
    let mut p1 = RealPoly::constant(f.coeff(0).re);
    let mut p2 = RealPoly::zero();
    for k in 1..=top {
        // Average the two mirrored coefficients to stay exactly symmetric.
        let ck = 0.5 * (f.coeff(k as i64) + f.coeff(-(k as i64)).conj());
        if ck.re != 0.0 {
            p1 = &p1 + &RealPoly::chebyshev_t(k).scale(2.0 * ck.re);
        }
        if ck.im != 0.0 {
            p2 = &p2 - &RealPoly::chebyshev_u(k - 1).scale(2.0 * ck.im);
        }
    }
    Ok((p1, p2))
}

/// Builds the VSOF family `f_0 .. f_n` from a single monic sequence.
pub fn vsof_family(schur: &SchurSequence, n: usize) -> Vec<Vsof> {
    let phis = szego_sequence(schur, (2 * n).saturating_sub(1));
    let mut out = Vec::with_capacity(n + 1);
    out.push(Vsof {
        n: 0,
        components: [
            LaurentPoly::constant(Complex64::new(1.0, 0.0)),
            LaurentPoly::zero(),
        ],
    });
    for k in 1..=n {
        let (f1, f2) =
            semi_orthogonal_pair(&phis[2 * k - 1], k).expect("szego_sequence yields monic phi");
        out.push(Vsof {
            n: k,
            components: [f1, f2],
        });
    }
    out
}

pub fn vsof(schur: &SchurSequence, n: usize) -> Vsof {
    vsof_family(schur, n).pop().expect("family is nonempty")
}

/// Gram matrix blocks `<<f_n, f_m>>` for a whole family, sampling each
/// component once on the quadrature grid.
pub fn vsof_gram(family: &[Vsof], m: &CircleMeasure) -> Vec<Vec<CMat2>> {
    let samples: Vec<[Vec<Complex64>; 2]> = family
        .iter()
        .map(|v| [m.sample(v.f1()), m.sample(v.f2())])
        .collect();
    samples
        .iter()
        .map(|a| {
            samples
                .iter()
                .map(|b| vector_inner_sampled(a, b, m))
                .collect()
        })
        .collect()
}

/// Schur matrix `H = [[Re a, Im a], [Im a, -Re a]]`.
pub fn schur_matrix(a: Complex64) -> Mat2 {
    Mat2::new(a.re, a.im, a.im, -a.re)
}

/// `H_n` for the sequence, with `H_0 = diag(1, -1)`.
pub fn schur_matrix_at(schur: &SchurSequence, n: usize) -> Mat2 {
    schur_matrix(schur.get(n))
}

/// `C_n = <<f_n, f_n>>`: `eps_0 diag(1, 0)` for `n = 0`, otherwise
/// `eps_{2n-1} / 2^{2n-1} (I - H_{2n})`.
pub fn gram_block(schur: &SchurSequence, n: usize) -> Mat2 {
    if n == 0 {
        return Mat2::c().scale(schur.eps0());
    }
    let factor = schur.eps(2 * n - 1) * 0.5_f64.powi(2 * n as i32 - 1);
    (Mat2::identity() - schur_matrix_at(schur, 2 * n)).scale(factor)
}

/// Complex coefficients `(L_n, M_n)` of
/// `z f_n = (I + iJ) f_{n+1} + L_n f_n + M_n f_{n-1}`, `n >= 1`.
pub fn vsof_recurrence_coeffs(schur: &SchurSequence, n: usize) -> (CMat2, CMat2) {
    assert!(n >= 1, "VSOF recurrence starts at n = 1");
    let h = |k: usize| schur_matrix_at(schur, k).to_complex();
    let id = CMat2::identity();
    let ipj = CMat2::i_plus_ij(1.0);
    let imj = CMat2::i_plus_ij(-1.0);
    let half = Complex64::new(0.5, 0.0);
    let l =
        ((id - h(2 * n)) * h(2 * n - 1) * ipj - ipj * h(2 * n + 1) * (id + h(2 * n))).scale(half);
    let det = 1.0 - schur.get(2 * n - 1).norm_sqr();
    let m = ((id - h(2 * n)) * imj * (id + h(2 * n - 2))).scale(Complex64::new(0.25 * det, 0.0));
    (l, m)
}

/// Coefficient-level residual of the complex VSOF recurrence at index `n`.
pub fn vsof_recurrence_residual(schur: &SchurSequence, family: &[Vsof], n: usize) -> f64 {
    let (l, m) = vsof_recurrence_coeffs(schur, n);
    let ipj = CMat2::i_plus_ij(1.0);
    let up = family[n + 1].left_mul(&ipj);
    let mid = family[n].left_mul(&l);
    let down = family[n - 1].left_mul(&m);
    (0..2)
        .map(|i| {
            let lhs = family[n].components[i].shift(1);
            let rhs = &(&up[i] + &mid[i]) + &down[i];
            lhs.max_abs_diff(&rhs)
        })
        .fold(0.0, f64::max)
}
