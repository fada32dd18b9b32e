//! Scalar orthogonal polynomials on the unit circle.
//!
//! Everything is driven by a [`SchurSequence`]: the parameters `a_n = phi_n(0)`
//! of the monic orthogonal polynomials together with the total mass
//! `eps_0 = <1, 1>`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::measure::CircleMeasure;
use crate::poly::{ComplexPoly, LaurentPoly};

/// Threshold for "computed Schur parameter reached the unit circle".
pub const DEFAULT_SCHUR_TOL: f64 = 1e-10;

/// Schur parameters `a_1, a_2, ...` (with `a_0 = 1` implicit and `a_n = 0`
/// past the stored head) and the total mass `eps_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurSequence {
    head: Vec<Complex64>,
    eps0: f64,
}

impl SchurSequence {
    pub fn new(head: Vec<Complex64>, eps0: f64) -> Result<Self> {
        for (i, a) in head.iter().enumerate() {
            let modulus = a.norm();
            if !(modulus < 1.0) {
                return Err(Error::InvalidSchur {
                    index: i + 1,
                    modulus,
                });
            }
        }
        if !(eps0 > 0.0 && eps0.is_finite()) {
            return Err(Error::InvalidMass(eps0));
        }
        Ok(Self { head, eps0 })
    }

    /// Head with the default total mass `2 pi` (normalized Lebesgue scale).
    pub fn with_unit_density(head: Vec<Complex64>) -> Result<Self> {
        Self::new(head, TAU)
    }

    /// All `a_n = 0` for `n >= 1`.
    pub fn zero(eps0: f64) -> Result<Self> {
        Self::new(Vec::new(), eps0)
    }

    /// Random head of length `1..=max_len`, each `a_n` uniform in the disk of
    /// radius `radius < 1`, with `eps_0 = 2 pi`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_len: usize, radius: f64) -> Self {
        assert!(radius < 1.0 && max_len >= 1);
        let len = rng.gen_range(1..=max_len);
        let head = (0..len)
            .map(|_| {
                let r = radius * rng.gen::<f64>().sqrt();
                Complex64::from_polar(r, TAU * rng.gen::<f64>())
            })
            .collect();
        Self { head, eps0: TAU }
    }

    /// Random head with real parameters in `(-radius, radius)`.
    pub fn random_real<R: Rng + ?Sized>(rng: &mut R, max_len: usize, radius: f64) -> Self {
        assert!(radius < 1.0 && max_len >= 1);
        let len = rng.gen_range(1..=max_len);
        let head = (0..len)
            .map(|_| Complex64::new(rng.gen_range(-radius..radius), 0.0))
            .collect();
        Self { head, eps0: TAU }
    }

    /// `a_n`, with `a_0 = 1`.
    pub fn get(&self, n: usize) -> Complex64 {
        match n {
            0 => Complex64::new(1.0, 0.0),
            _ => self.head.get(n - 1).copied().unwrap_or_default(),
        }
    }

    pub fn head(&self) -> &[Complex64] {
        &self.head
    }

    pub fn eps0(&self) -> f64 {
        self.eps0
    }

    /// Whether every parameter is real (the measure is symmetric).
    pub fn is_real(&self) -> bool {
        self.head.iter().all(|a| a.im == 0.0)
    }

    /// `eps_n = eps_0 prod_{k <= n} (1 - |a_k|^2)`.
    pub fn eps(&self, n: usize) -> f64 {
        (1..=n).fold(self.eps0, |e, k| e * (1.0 - self.get(k).norm_sqr()))
    }

    /// `lim eps_n`, reached once past the head.
    pub fn eps_limit(&self) -> f64 {
        self.eps(self.head.len())
    }
}

/// Monic `phi_0 .. phi_n` from `phi_k = z phi_{k-1} + a_k phi*_{k-1}`.
pub fn szego_sequence(schur: &SchurSequence, n: usize) -> Vec<ComplexPoly> {
    let mut phis = Vec::with_capacity(n + 1);
    phis.push(ComplexPoly::one());
    for k in 1..=n {
        let prev = &phis[k - 1];
        let rev = prev.reversed(k - 1).expect("phi_{k-1} has degree k-1");
        let next = &prev.shift(1) + &rev.scale(schur.get(k));
        phis.push(next);
    }
    phis
}

/// Scalar data attached to the monic sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct OpucSequences {
    pub phis: Vec<ComplexPoly>,
    /// `b_n`, the coefficient of `z^(n-1)` in `phi_n`; `b_0 = 0`.
    pub b: Vec<Complex64>,
    /// `eps_n = <phi_n, phi_n>`.
    pub eps: Vec<f64>,
    /// `kappa_n = eps_n^(-1/2)`, leading coefficient of the orthonormal polynomial.
    pub kappa: Vec<f64>,
}

pub fn derived_sequences(schur: &SchurSequence, n: usize) -> OpucSequences {
    let phis = szego_sequence(schur, n);
    let mut b = vec![Complex64::default()];
    let mut eps = vec![schur.eps0()];
    for k in 1..=n {
        b.push(b[k - 1] + schur.get(k) * schur.get(k - 1).conj());
        eps.push(eps[k - 1] * (1.0 - schur.get(k).norm_sqr()));
    }
    let kappa = eps.iter().map(|e| e.powf(-0.5)).collect();
    OpucSequences {
        phis,
        b,
        eps,
        kappa,
    }
}

/// Recovers `a_1 .. a_n` from a measure by orthogonalizing with quadrature,
/// using `a_{k+1} = -<z phi_k, phi*_k> / eps_k`.
pub fn schur_from_measure(measure: &CircleMeasure, n: usize) -> Result<SchurSequence> {
    schur_from_measure_with_tol(measure, n, DEFAULT_SCHUR_TOL)
}

pub fn schur_from_measure_with_tol(
    measure: &CircleMeasure,
    n: usize,
    tol: f64,
) -> Result<SchurSequence> {
    let inner = |f: &ComplexPoly, g: &ComplexPoly| {
        let (lf, lg) = (LaurentPoly::from_poly(f, 0), LaurentPoly::from_poly(g, 0));
        measure.integrate(|z| lf.eval(z) * lg.eval(z).conj())
    };
    let eps0 = inner(&ComplexPoly::one(), &ComplexPoly::one()).re;
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return Err(Error::InvalidMass(eps0));
    }
    let mut head = Vec::with_capacity(n);
    let mut phi = ComplexPoly::one();
    for k in 0..n {
        let eps_k = inner(&phi, &phi).re;
        let rev = phi.reversed(k).expect("phi_k has degree k");
        if !(eps_k > 0.0) {
            return Err(Error::InadmissibleMeasure {
                index: k + 1,
                modulus: 1.0,
            });
        }
        let a = -inner(&phi.shift(1), &rev) / eps_k;
        if a.norm() >= 1.0 - tol || !a.is_finite() {
            return Err(Error::InadmissibleMeasure {
                index: k + 1,
                modulus: a.norm(),
            });
        }
        phi = &phi.shift(1) + &rev.scale(a);
        head.push(a);
    }
    SchurSequence::new(head, eps0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{circle_inner, DEFAULT_NODES};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn schur_sequence_validates() {
        assert_eq!(
            SchurSequence::with_unit_density(vec![c(0.2, 0.0), c(0.6, 0.8)]),
            Err(Error::InvalidSchur {
                index: 2,
                modulus: 1.0
            })
        );
        assert!(SchurSequence::new(vec![], 0.0).is_err());
        let s = SchurSequence::with_unit_density(vec![c(0.5, 0.0)]).unwrap();
        assert_eq!(s.get(0), c(1.0, 0.0));
        assert_eq!(s.get(1), c(0.5, 0.0));
        assert_eq!(s.get(9), c(0.0, 0.0));
    }

    #[test]
    fn szego_sequence_examples() {
        let zero = SchurSequence::zero(TAU).unwrap();
        let phis = szego_sequence(&zero, 3);
        for (k, p) in phis.iter().enumerate() {
            assert_eq!(*p, ComplexPoly::monomial(k));
        }

        let s = SchurSequence::with_unit_density(vec![c(0.5, 0.0)]).unwrap();
        let phis = szego_sequence(&s, 2);
        assert_eq!(
            phis[2],
            ComplexPoly::new(vec![c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)])
        );

        let s = SchurSequence::with_unit_density(vec![c(0.5, 0.0), c(0.25, 0.0)]).unwrap();
        let phis = szego_sequence(&s, 2);
        assert_eq!(
            phis[2],
            ComplexPoly::new(vec![c(0.25, 0.0), c(0.625, 0.0), c(1.0, 0.0)])
        );
    }

    #[test]
    fn derived_sequence_examples() {
        let zero = SchurSequence::zero(TAU).unwrap();
        let d = derived_sequences(&zero, 4);
        assert!(d.b.iter().all(|b| *b == c(0.0, 0.0)));
        assert!(d.eps.iter().all(|&e| e == TAU));

        for a in [c(0.5, 0.0), c(0.0, 0.5)] {
            let s = SchurSequence::with_unit_density(vec![a]).unwrap();
            let d = derived_sequences(&s, 1);
            assert_eq!(d.b[1], a);
            assert_relative_eq!(d.eps[1], 0.75 * TAU, max_relative = 1e-15);
            assert_eq!(d.kappa[1], d.eps[1].powf(-0.5));
        }
    }

    #[test]
    fn schur_from_lebesgue_is_zero() {
        let leb = CircleMeasure::lebesgue(DEFAULT_NODES).unwrap();
        let s = schur_from_measure(&leb, 10).unwrap();
        assert_relative_eq!(s.eps0(), TAU, max_relative = 1e-12);
        assert!(s.head().iter().all(|a| a.norm() < 1e-14));
    }

    #[test]
    fn schur_from_one_plus_cos() {
        let m = CircleMeasure::new(|t: f64| 1.0 + t.cos(), vec![], DEFAULT_NODES).unwrap();
        let s = schur_from_measure(&m, 3).unwrap();
        assert!((s.get(1) - c(-0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn schur_from_finite_support_fails() {
        let atoms = (0..3)
            .map(|k| crate::measure::Atom {
                theta: k as f64,
                mass: 1.0,
            })
            .collect();
        let m = CircleMeasure::new(|_| 0.0, atoms, 64).unwrap();
        match schur_from_measure(&m, 6) {
            Err(Error::InadmissibleMeasure { index, .. }) => assert_eq!(index, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quadrature_orthogonality_of_monic_sequence() {
        // Smooth weight; orthogonality of phi_n against z^k and its norm.
        let m = CircleMeasure::new(
            |t: f64| 1.5 + 0.6 * t.cos() - 0.4 * (2.0 * t).sin(),
            vec![],
            DEFAULT_NODES,
        )
        .unwrap();
        let s = schur_from_measure(&m, 20).unwrap();
        let d = derived_sequences(&s, 20);
        for (n, phi) in d.phis.iter().enumerate() {
            let lp = LaurentPoly::from_poly(phi, 0);
            let norm = circle_inner(&lp, &lp, &m).re;
            assert_relative_eq!(norm, d.eps[n], max_relative = 1e-8);
            for k in 0..n {
                let v = circle_inner(&lp, &LaurentPoly::monomial(k as i64), &m);
                assert!(v.norm() <= 1e-8 * d.eps[n], "n={n} k={k}");
            }
        }
    }

    proptest! {
        #[test]
        fn recurrence_bookkeeping(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = SchurSequence::random(&mut rng, 10, 0.95);
            let d = derived_sequences(&s, 14);
            for n in 0..=14 {
                prop_assert_eq!(d.phis[n].coeff(0), s.get(n));
                prop_assert_eq!(d.phis[n].degree(), Some(n));
                prop_assert_eq!(d.phis[n].coeff(n), c(1.0, 0.0));
                if n >= 1 {
                    prop_assert!((d.phis[n].coeff(n - 1) - d.b[n]).norm() < 1e-12);
                    let ratio = d.eps[n] / d.eps[n - 1];
                    prop_assert!((ratio - (1.0 - s.get(n).norm_sqr())).abs() < 1e-14);
                    prop_assert!(d.eps[n] <= d.eps[n - 1]);
                    if s.get(n).norm() > 0.0 {
                        prop_assert!(d.eps[n] < d.eps[n - 1]);
                    }
                }
                prop_assert_eq!(d.kappa[n], d.eps[n].powf(-0.5));
            }
        }
    }
}
