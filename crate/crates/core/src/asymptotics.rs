//! Szego functions, the explicit matrix Szego function of an associated
//! matrix measure, and convergence reports for the matrix and vector
//! families built from a Schur sequence.
//!
//! All Szego integrals are trapezoid sums on the measure's own grid: the full
//! circle grid for the scalar function and its upper half (`x = cos(theta)`)
//! for the matrix quantities.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::{CMat2, Mat2};
use crate::matrix_op::matrix_families;
use crate::measure::{interval_nodes, CircleMeasure, MatrixMeasure};
use crate::opuc::{szego_sequence, SchurSequence};
use crate::sof::vsof_family;

/// Grid weights at or below this count as zero for the Szego condition.
pub const SZEGO_FLOOR: f64 = 1e-14;

const DOMAIN_TOL: f64 = 1e-12;

/// Bernstein-Szego measure `eps_L / (2 pi |phi_L(e^{i theta})|^2) d theta`,
/// whose Schur parameters are exactly the head of `schur` followed by zeros.
pub fn bernstein_szego_measure(schur: &SchurSequence, nodes: usize) -> Result<CircleMeasure> {
    let len = schur.head().len();
    let phi = szego_sequence(schur, len)
        .pop()
        .expect("phi_0 is always present");
    let scale = schur.eps(len) / TAU;
    CircleMeasure::new(
        move |t| scale / phi.eval(Complex64::from_polar(1.0, t)).norm_sqr(),
        Vec::new(),
        nodes,
    )
}

/// [`bernstein_szego_measure`] on the smallest grid of `min_nodes * 2^k`
/// nodes whose total mass reproduces `eps_0` to relative accuracy `tol`.
///
/// The trapezoid error decays like `r^N`, with `r` the largest zero modulus
/// of `phi_L`, so heads with zeros near the circle need finer grids.
pub fn bernstein_szego_resolved(
    schur: &SchurSequence,
    min_nodes: usize,
    tol: f64,
) -> Result<CircleMeasure> {
    let mut nodes = min_nodes;
    loop {
        let m = bernstein_szego_measure(schur, nodes)?;
        let mass = m.integrate(|_| Complex64::new(1.0, 0.0)).re;
        if (mass / schur.eps0() - 1.0).abs() <= tol || nodes >= MAX_RESOLVED_NODES.max(min_nodes) {
            return Ok(m);
        }
        nodes *= 2;
    }
}

const MAX_RESOLVED_NODES: usize = 1 << 20;

fn check_off_circle(z: Complex64) -> Result<()> {
    if (z.norm() - 1.0).abs() <= DOMAIN_TOL {
        return Err(Error::OnUnitCircle(z.to_string()));
    }
    Ok(())
}

/// `log mu'` on the circle grid, with `dtheta`.
struct CircleLogTable {
    nodes: Vec<(Complex64, f64)>,
    dtheta: f64,
}

impl CircleLogTable {
    fn new(m: &CircleMeasure) -> Result<Self> {
        if m.has_atoms() {
            return Err(Error::AtomsNotSupported);
        }
        let nodes = m
            .grid_angles()
            .map(|t| {
                let w = m.weight_at(t);
                if w > SZEGO_FLOOR {
                    Ok((Complex64::from_polar(1.0, t), w.ln()))
                } else {
                    Err(Error::SzegoClass {
                        location: format!("theta = {t}"),
                        value: w,
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            nodes,
            dtheta: TAU / m.nodes() as f64,
        })
    }

    fn log_szego(&self, z: Complex64) -> Complex64 {
        let sum: Complex64 = self.nodes.iter().map(|&(e, l)| l * (e + z) / (e - z)).sum();
        sum * self.dtheta / (2.0 * TAU)
    }
}

/// Scalar Szego function `D(d mu; z)` of an absolutely continuous measure.
#[derive(Debug)]
pub struct ScalarSzego {
    table: CircleLogTable,
}

impl std::fmt::Debug for CircleLogTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CircleLogTable")
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

impl ScalarSzego {
    pub fn new(m: &CircleMeasure) -> Result<Self> {
        Ok(Self {
            table: CircleLogTable::new(m)?,
        })
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_off_circle(z)?;
        Ok(self.table.log_szego(z).exp())
    }

    /// `D(d mu; 0)`, real and positive.
    pub fn d0(&self) -> f64 {
        self.table.log_szego(Complex64::default()).re.exp()
    }
}

/// `D(d mu; z) = exp(1/(4 pi) int log mu'(theta) (e^{i theta} + z)/(e^{i theta} - z) d theta)`.
pub fn szego_function(m: &CircleMeasure, z: Complex64) -> Result<Complex64> {
    ScalarSzego::new(m)?.eval(z)
}

/// `int_0^{2 pi} log mu'(theta) d theta`.
pub fn circle_szego_integral(m: &CircleMeasure) -> Result<f64> {
    let t = CircleLogTable::new(m)?;
    Ok(t.nodes.iter().map(|n| n.1).sum::<f64>() * t.dtheta)
}

/// The root of `z^2 - 2 x z + 1 = 0` inside the unit disk.
pub fn joukowski_inverse(x: Complex64) -> Result<Complex64> {
    if x.im.abs() <= DOMAIN_TOL && x.re.abs() <= 1.0 + DOMAIN_TOL {
        return Err(Error::OnInterval(x.to_string()));
    }
    let root = ((x - 1.0) * (x + 1.0)).sqrt();
    let (w1, w2) = (x + root, x - root);
    let outer = if w1.norm() >= w2.norm() { w1 } else { w2 };
    Ok(outer.inv())
}

/// Szego-type data of an associated matrix measure, tabulated on the
/// upper half of the circle grid.
#[derive(Debug, Clone)]
pub struct SzegoData {
    /// `(cos theta_j, sin theta_j, log det Omega', log(nu1'/nu2'))`.
    table: Vec<[f64; 4]>,
    dtheta: f64,
    pub gamma: f64,
    /// `D(d mu; 0) = exp(R(0))`.
    pub d0: f64,
}

impl SzegoData {
    fn kernel(&self, z: Complex64, c: f64) -> Complex64 {
        (1.0 - 2.0 * c * z + z * z).inv()
    }

    /// `R(z) = (1 - z^2)/(4 pi) int_0^pi log det Omega'(cos t) dt / (1 - 2 z cos t + z^2)`.
    pub fn r(&self, z: Complex64) -> Complex64 {
        let sum: Complex64 = self.table.iter().map(|e| e[2] * self.kernel(z, e[0])).sum();
        (1.0 - z * z) / (4.0 * PI) * sum * self.dtheta
    }

    /// `I(z) = -z/(2 pi) int_0^pi log(nu1'/nu2') sin t dt / (1 - 2 z cos t + z^2)`.
    pub fn i(&self, z: Complex64) -> Complex64 {
        let sum: Complex64 = self
            .table
            .iter()
            .map(|e| e[3] * e[1] * self.kernel(z, e[0]))
            .sum();
        -z / TAU * sum * self.dtheta
    }

    /// `int_{-1}^1 log det Omega'(x) dx / sqrt(1 - x^2)`.
    pub fn log_det_integral(&self) -> f64 {
        self.table.iter().map(|e| e[2]).sum::<f64>() * self.dtheta
    }
}

pub fn szego_data(omega: &MatrixMeasure) -> Result<SzegoData> {
    if !omega.atoms().is_empty() {
        return Err(Error::AtomsNotSupported);
    }
    let half = omega.nodes() / 2;
    let dtheta = PI / half as f64;
    let mut table = Vec::with_capacity(half);
    let mut odd = 0.0;
    for n in interval_nodes(omega.nodes()) {
        // mu'(theta) and mu'(-theta), recovered without dividing by s.
        let r = omega.rho_at(n.x) * n.s;
        let g = omega.sigma_at(n.x) * n.s;
        let (up, down) = (0.5 * (r + g), 0.5 * (r - g));
        for v in [up, down] {
            if !(v > SZEGO_FLOOR) {
                return Err(Error::SzegoClass {
                    location: format!("x = {}", n.x),
                    value: v,
                });
            }
        }
        let ratio = (up / down).ln();
        odd += ratio * n.s;
        table.push([n.x, n.s, (up * down).ln(), ratio]);
    }
    let mut data = SzegoData {
        table,
        dtheta,
        gamma: -odd * dtheta / (2.0 * TAU),
        d0: 0.0,
    };
    data.d0 = data.r(Complex64::default()).re.exp();
    Ok(data)
}

/// `int_{-1}^1 log det Omega'(x) dx / sqrt(1 - x^2)`.
pub fn interval_szego_integral(omega: &MatrixMeasure) -> Result<f64> {
    Ok(szego_data(omega)?.log_det_integral())
}

/// `1/2 Im sum_k a_k conj(a_{k-1})` over the head.
pub fn gamma_limit(schur: &SchurSequence) -> f64 {
    let len = schur.head().len();
    0.5 * (1..=len)
        .map(|k| (schur.get(k) * schur.get(k - 1).conj()).im)
        .sum::<f64>()
}

/// `D(d Omega; z)` at `x = (z + 1/z)/2` from precomputed data.
pub fn matrix_szego_with(data: &SzegoData, x: Complex64) -> Result<CMat2> {
    let z = joukowski_inverse(x)?;
    let one = Complex64::new(1.0, 0.0);
    let g = data.gamma;
    let prefactor = CMat2::diag(one, x - z);
    let (r, i) = (data.r(z), data.i(z));
    let rot = CMat2::new(i.cos(), i.sin(), -i.sin(), i.cos()).scale(r.exp());
    let tail = CMat2::new(
        Complex64::new(3.0, 0.0),
        Complex64::new(-2.0 * g, 0.0),
        2.0 * g * z,
        3.0 * z,
    );
    let norm = (9.0 + 4.0 * g * g).sqrt().recip();
    Ok((prefactor * rot * tail).scale(Complex64::new(norm, 0.0)))
}

pub fn matrix_szego(omega: &MatrixMeasure, x: Complex64) -> Result<CMat2> {
    matrix_szego_with(&szego_data(omega)?, x)
}

/// One step of a convergence table. `rate` is the per-index ratio to the
/// previous row, `(err_n / err_prev)^(1 / (n - prev))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub err: f64,
    pub rate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport<L> {
    pub limit: L,
    pub rows: Vec<ConvergenceRow>,
}

impl<L> ConvergenceReport<L> {
    pub fn errors(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.err).collect()
    }
}

fn rows_from(pairs: impl IntoIterator<Item = (usize, f64)>) -> Vec<ConvergenceRow> {
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    for (n, err) in pairs {
        let rate = rows.last().and_then(|p| {
            (n > p.n && p.err > 0.0).then(|| (err / p.err).powf(1.0 / (n - p.n) as f64))
        });
        rows.push(ConvergenceRow { n, err, rate });
    }
    rows
}

fn sorted(n_list: &[usize]) -> Vec<usize> {
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    ns
}

/// `err_n = max |z^n Q_n(x) - D(d Omega; z)^{-1} / sqrt(2 pi)|` against the
/// standard left orthonormal family.
pub fn lonp_convergence_report(
    omega: &MatrixMeasure,
    schur: &SchurSequence,
    x: f64,
    n_list: &[usize],
) -> Result<ConvergenceReport<CMat2>> {
    let xc = Complex64::new(x, 0.0);
    let z = joukowski_inverse(xc)?;
    let d = matrix_szego(omega, xc)?;
    let limit = d
        .inverse()
        .ok_or_else(|| Error::Degenerate(d.det().norm()))?
        .scale(Complex64::new(TAU.sqrt().recip(), 0.0));
    let ns = sorted(n_list);
    let n_max = ns.last().copied().unwrap_or(0);
    let fams = matrix_families(schur, n_max)?;
    let rows = rows_from(ns.into_iter().map(|n| {
        let value = fams.q[n].eval(x).to_complex().scale(z.powu(n as u32));
        (n, (value - limit).max_abs())
    }));
    Ok(ConvergenceReport { limit, rows })
}

/// Error of `2^n z^{-+n} f_n(z)` against `(1, +-i) D0 D(z)^{-+1}`; the
/// branch follows `|z| < 1` or `|z| > 1`.
pub fn vsof_asymptotics_check(
    m: &CircleMeasure,
    schur: &SchurSequence,
    z: Complex64,
    n_list: &[usize],
) -> Result<ConvergenceReport<[Complex64; 2]>> {
    check_off_circle(z)?;
    let szego = ScalarSzego::new(m)?;
    let d0 = szego.d0();
    let dz = szego.eval(z)?;
    let inside = z.norm() < 1.0;
    let limit = if inside {
        let v = d0 / dz;
        [v, Complex64::i() * v]
    } else {
        let v = d0 * dz;
        [v, -Complex64::i() * v]
    };
    let ns = sorted(n_list);
    let fam = vsof_family(schur, ns.last().copied().unwrap_or(0));
    let rows = rows_from(ns.into_iter().map(|n| {
        let f = fam[n].eval(z);
        let factor = if inside { 2.0 * z } else { 2.0 / z }.powu(n as u32);
        let err = (0..2)
            .map(|k| (f[k] * factor - limit[k]).norm())
            .fold(0.0, f64::max);
        (n, err)
    }));
    Ok(ConvergenceReport { limit, rows })
}

/// Real-valued version of [`matrix_szego`] for real `x` outside `[-1, 1]`.
pub fn matrix_szego_real(omega: &MatrixMeasure, x: f64) -> Result<Mat2> {
    Ok(matrix_szego(omega, Complex64::new(x, 0.0))?.re())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{associated_matrix_measure, symmetric_measure, DEFAULT_NODES};
    use crate::opuc::{derived_sequences, schur_from_measure};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn head(a: &[Complex64]) -> SchurSequence {
        SchurSequence::with_unit_density(a.to_vec()).unwrap()
    }

    fn bs(s: &SchurSequence) -> Result<CircleMeasure> {
        bernstein_szego_resolved(s, DEFAULT_NODES, 1e-13)
    }

    fn leb() -> CircleMeasure {
        CircleMeasure::lebesgue(DEFAULT_NODES).unwrap()
    }

    fn smooth_weight(seed: u64) -> CircleMeasure {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coef: Vec<(f64, f64)> = (0..3)
            .map(|_| (rng.gen_range(-0.2..0.2), rng.gen_range(-0.2..0.2)))
            .collect();
        CircleMeasure::new(
            move |t| {
                1.0 + coef
                    .iter()
                    .enumerate()
                    .map(|(k, (a, b))| {
                        a * ((k + 1) as f64 * t).cos() + b * ((k + 1) as f64 * t).sin()
                    })
                    .sum::<f64>()
            },
            Vec::new(),
            DEFAULT_NODES,
        )
        .unwrap()
    }

    #[test]
    fn lebesgue_szego_is_one() {
        for z in [c(0.0, 0.0), c(0.3, -0.5), c(2.0, 1.0)] {
            assert!((szego_function(&leb(), z).unwrap() - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn szego_domain_errors() {
        assert!(matches!(
            szego_function(&leb(), c(0.6, 0.8)),
            Err(Error::OnUnitCircle(_))
        ));
        let zero_arc =
            CircleMeasure::new(|t| if t < 1.0 { 0.0 } else { 1.0 }, Vec::new(), 64).unwrap();
        assert!(matches!(
            szego_function(&zero_arc, c(0.1, 0.0)),
            Err(Error::SzegoClass { .. })
        ));
        let atomic = CircleMeasure::new(
            |_| 1.0,
            vec![crate::measure::Atom {
                theta: 1.0,
                mass: 0.5,
            }],
            64,
        )
        .unwrap();
        assert_eq!(
            szego_function(&atomic, c(0.1, 0.0)),
            Err(Error::AtomsNotSupported)
        );
    }

    #[test]
    fn reflected_szego_is_conjugate() {
        let m = smooth_weight(5);
        let mt = symmetric_measure(&m);
        for z in [c(0.2, 0.4), c(-0.7, 0.1), c(1.5, -0.3)] {
            let lhs = szego_function(&mt, z).unwrap();
            let rhs = szego_function(&m, z.conj()).unwrap().conj();
            assert!((lhs - rhs).norm() < 1e-13);
        }
    }

    #[test]
    fn d0_matches_eps_limit() {
        let s = head(&[c(0.5, 0.0)]);
        let m = bs(&s).unwrap();
        let d0 = ScalarSzego::new(&m).unwrap().d0();
        assert!((TAU * d0 * d0 - 0.75 * TAU).abs() < 1e-12);
    }

    #[test]
    fn bernstein_szego_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let s = SchurSequence::random(&mut rng, 6, 0.8);
            let m = bs(&s).unwrap();
            let len = s.head().len();
            let phi = szego_sequence(&s, len).pop().unwrap();
            let rev = phi.reversed(len).unwrap();
            let sz = ScalarSzego::new(&m).unwrap();
            for z in [c(0.1, 0.2), c(-0.5, 0.3)] {
                let expect = (s.eps(len) / TAU).sqrt() / rev.eval(z);
                assert!((sz.eval(z).unwrap() - expect).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn boundary_values() {
        let m = smooth_weight(9).with_nodes(16384).unwrap();
        let sz = ScalarSzego::new(&m).unwrap();
        for j in 0..16 {
            let t = TAU * j as f64 / 16.0 + 0.1;
            let d = sz.eval(Complex64::from_polar(0.999, t)).unwrap();
            let w = m.weight_at(t);
            assert!((d.norm_sqr() / w - 1.0).abs() < 0.02);
        }
    }

    #[test]
    fn kappa_and_reversed_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let s = SchurSequence::random(&mut rng, 6, 0.8);
            let m = bs(&s).unwrap();
            let sz = ScalarSzego::new(&m).unwrap();
            let d0 = sz.d0();
            let n = s.head().len() + 3;
            let seq = derived_sequences(&s, n);
            let kappa = TAU.sqrt().recip() / d0;
            assert!((seq.kappa[n] - kappa).abs() < 1e-8);
            let z = c(0.3, -0.4);
            let rev = seq.phis[n].reversed(n).unwrap();
            assert!((rev.eval(z) - d0 / sz.eval(z).unwrap()).norm() < 1e-8);
        }
    }

    #[test]
    fn schur_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let s = SchurSequence::random(&mut rng, 8, 0.8);
            let m = bs(&s).unwrap();
            let len = s.head().len();
            let back = schur_from_measure(&m, len + 2).unwrap();
            for k in 1..=len + 2 {
                assert!((back.get(k) - s.get(k)).norm() < 1e-6, "k = {k}");
            }
            assert!((back.eps0() - TAU).abs() < 1e-8);
        }
    }

    #[test]
    fn joukowski_examples() {
        assert!((joukowski_inverse(c(1.25, 0.0)).unwrap() - 0.5).norm() < 1e-15);
        assert!((joukowski_inverse(c(-1.25, 0.0)).unwrap() + 0.5).norm() < 1e-15);
        let mut prev = 1.0;
        for x in [2.0, 5.0, 50.0, 1e4] {
            let z = joukowski_inverse(c(x, 0.0)).unwrap().re;
            assert!(z < prev && (z * 2.0 * x - 1.0).abs() < 0.1);
            prev = z;
        }
        assert!(matches!(
            joukowski_inverse(c(0.3, 0.0)),
            Err(Error::OnInterval(_))
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let z = Complex64::from_polar(rng.gen_range(0.05..0.95), rng.gen_range(0.0..TAU));
            let x = 0.5 * (z + z.inv());
            let back = joukowski_inverse(x).unwrap();
            assert!((back - z).norm() < 1e-12);
            assert!((0.5 * (back + back.inv()) - x).norm() < 1e-12);
        }
    }

    #[test]
    fn szego_data_symmetric_and_lebesgue() {
        let omega = associated_matrix_measure(&leb());
        let data = szego_data(&omega).unwrap();
        assert!(data.gamma.abs() < 1e-15);
        for z in [c(0.5, 0.0), c(-0.3, 0.2)] {
            assert!(data.r(z).norm() < 1e-12);
            assert!(data.i(z).norm() < 1e-12);
        }
        let s = SchurSequence::random_real(&mut ChaCha8Rng::seed_from_u64(4), 6, 0.8);
        let omega = associated_matrix_measure(&bs(&s).unwrap());
        let data = szego_data(&omega).unwrap();
        assert!(data.gamma.abs() < 1e-13);
        for x in [1.25, 2.0, -3.0] {
            assert!(data.i(joukowski_inverse(c(x, 0.0)).unwrap()).norm() < 1e-13);
            let d = matrix_szego(&omega, c(x, 0.0)).unwrap();
            assert!(d.get(0, 1).norm() < 1e-13 && d.get(1, 0).norm() < 1e-13);
        }
    }

    #[test]
    fn gamma_examples_and_cross_check() {
        assert_eq!(gamma_limit(&head(&[c(0.3, 0.0), c(-0.2, 0.0)])), 0.0);
        assert!((gamma_limit(&head(&[c(0.0, 0.5)])) - 0.25).abs() < 1e-16);
        assert!((gamma_limit(&head(&[c(0.5, 0.0), c(0.0, 0.5)])) - 0.125).abs() < 1e-16);

        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..10 {
            let s = SchurSequence::random(&mut rng, 8, 0.8);
            let omega = associated_matrix_measure(&bs(&s).unwrap());
            let data = szego_data(&omega).unwrap();
            assert!((data.gamma - gamma_limit(&s)).abs() < 1e-8);
        }
    }

    #[test]
    fn szego_integrals_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..5 {
            let s = SchurSequence::random(&mut rng, 8, 0.8);
            let m = bs(&s).unwrap();
            let circle = circle_szego_integral(&m).unwrap();
            let interval = interval_szego_integral(&associated_matrix_measure(&m)).unwrap();
            assert!((circle - interval).abs() < 1e-8);
            let d0 = szego_data(&associated_matrix_measure(&m)).unwrap().d0;
            assert!((TAU * d0 * d0 - s.eps_limit()).abs() < 1e-8);
        }
    }

    #[test]
    fn matrix_szego_examples() {
        let omega = associated_matrix_measure(&leb());
        let d = matrix_szego(&omega, c(1.25, 0.0)).unwrap();
        assert!((d - CMat2::diag(c(1.0, 0.0), c(0.375, 0.0))).max_abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let s = SchurSequence::random(&mut rng, 6, 0.8);
        let omega = associated_matrix_measure(&bs(&s).unwrap());
        let data = szego_data(&omega).unwrap();
        for x in [c(1.1, 0.0), c(3.0, 0.0), c(-2.0, 0.0), c(0.2, 0.7)] {
            assert!(matrix_szego_with(&data, x).unwrap().det().norm() > 1e-6);
        }
    }

    #[test]
    fn lonp_limits() {
        let zero = SchurSequence::zero(TAU).unwrap();
        let omega = associated_matrix_measure(&leb());
        let rep =
            lonp_convergence_report(&omega, &zero, 1.25, &(2..=12).collect::<Vec<_>>()).unwrap();
        assert!((rep.limit.get(0, 0).re - TAU.sqrt().recip()).abs() < 1e-14);
        for row in &rep.rows {
            assert!(row.err <= 10.0 * 0.25_f64.powi(row.n as i32), "{row:?}");
        }

        let s = head(&[c(0.5, 0.0)]);
        let omega = associated_matrix_measure(&bs(&s).unwrap());
        let rep = lonp_convergence_report(&omega, &s, 2.0, &[12]).unwrap();
        assert!(rep.rows[0].err < 1e-6, "{:?}", rep.rows);
    }

    #[test]
    fn lonp_limit_complex_heads() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..4 {
            let s = SchurSequence::random(&mut rng, 4, 0.6);
            let omega = associated_matrix_measure(&bs(&s).unwrap());
            for x in [2.0, -1.5] {
                let rep = lonp_convergence_report(&omega, &s, x, &[8, 20]).unwrap();
                assert!(rep.rows[1].err < 1e-10, "x = {x}: {:?}", rep.rows);
                assert!(rep.rows[1].err < rep.rows[0].err);
            }
        }
    }

    #[test]
    fn vsof_limits() {
        let zero = SchurSequence::zero(TAU).unwrap();
        let rep = vsof_asymptotics_check(&leb(), &zero, c(0.5, 0.0), &(1..=10).collect::<Vec<_>>())
            .unwrap();
        for row in &rep.rows {
            assert!((row.err - 0.25_f64.powi(row.n as i32)).abs() < 1e-12);
        }
        let rep = vsof_asymptotics_check(&leb(), &zero, c(2.0, 0.0), &[3, 6]).unwrap();
        assert!(
            (rep.limit[0] - 1.0).norm() < 1e-14 && (rep.limit[1] + Complex64::i()).norm() < 1e-14
        );
        assert!(rep.rows[1].err < 1e-3);

        let s = head(&[c(0.5, 0.0)]);
        let m = bs(&s).unwrap();
        let rep =
            vsof_asymptotics_check(&m, &s, c(0.4, 0.3), &(1..=12).collect::<Vec<_>>()).unwrap();
        let errs = rep.errors();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
        assert!(errs[11] < 1e-6);
    }
}
