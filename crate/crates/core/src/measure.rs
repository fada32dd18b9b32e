//! Measures on the unit circle and on `[-1, 1]`, their quadrature rules, and
//! the associated 2x2 matrix measure.
//!
//! The circle rule is the uniform trapezoid rule on the half-shifted grid
//! `theta_j = 2 pi (j + 1/2) / N`. Integrals over `[-1, 1]` are always taken
//! through `x = cos(theta)` on the midpoint grid `theta_j = pi (j + 1/2) / M`
//! with `M = N / 2`, which is exactly the upper half of the circle grid. The
//! endpoint singularities `1 / sqrt(1 - x^2)` of projected densities are
//! cancelled by the Jacobian `sin(theta)` and never evaluated at `x = +-1`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::{CMat2, Mat2};
use crate::matpoly::MatPoly2;
use crate::poly::LaurentPoly;

pub const DEFAULT_NODES: usize = 4096;

/// Real density on the circle (in `theta`) or on the interval (in `x`).
pub type Density = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// `sqrt(1 - x^2)` without cancellation near `x = +-1`.
pub(crate) fn sqrt_one_minus_sq(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).max(0.0).sqrt()
}

fn check_nodes(nodes: usize) -> Result<()> {
    if nodes < 4 || !nodes.is_multiple_of(2) {
        return Err(Error::InvalidMeasure(format!(
            "node count must be even and at least 4, got {nodes}"
        )));
    }
    Ok(())
}

/// Point mass on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub theta: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, Copy)]
struct CircleNode {
    z: Complex64,
    /// `mu'(theta_j) * dtheta`.
    weight: f64,
}

/// Measure `d mu = mu'(theta) d theta + sum_j m_j delta_{theta_j}` on `[0, 2 pi)`.
#[derive(Clone)]
pub struct CircleMeasure {
    weight: Density,
    atoms: Vec<Atom>,
    nodes: usize,
    grid: Arc<Vec<CircleNode>>,
    nonnegative: bool,
}

impl fmt::Debug for CircleMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CircleMeasure")
            .field("atoms", &self.atoms)
            .field("nodes", &self.nodes)
            .field("nonnegative", &self.nonnegative)
            .finish_non_exhaustive()
    }
}

impl CircleMeasure {
    /// Positive measure; the weight must be finite and nonnegative on the grid.
    pub fn new(
        weight: impl Fn(f64) -> f64 + Send + Sync + 'static,
        atoms: Vec<Atom>,
        nodes: usize,
    ) -> Result<Self> {
        let m = Self::signed(weight, atoms, nodes)?;
        if !m.nonnegative {
            return Err(Error::InvalidMeasure(
                "weight takes negative values on the quadrature grid".into(),
            ));
        }
        Ok(m)
    }

    /// Real (possibly signed) measure. Atoms must still carry positive mass.
    pub fn signed(
        weight: impl Fn(f64) -> f64 + Send + Sync + 'static,
        atoms: Vec<Atom>,
        nodes: usize,
    ) -> Result<Self> {
        Self::from_density(Arc::new(weight), atoms, nodes)
    }

    pub fn lebesgue(nodes: usize) -> Result<Self> {
        Self::new(|_| 1.0, Vec::new(), nodes)
    }

    pub(crate) fn from_density(weight: Density, atoms: Vec<Atom>, nodes: usize) -> Result<Self> {
        check_nodes(nodes)?;
        for (i, a) in atoms.iter().enumerate() {
            if !(0.0..TAU).contains(&a.theta) {
                return Err(Error::InvalidMeasure(format!(
                    "atom angle {} outside [0, 2pi)",
                    a.theta
                )));
            }
            if !(a.mass > 0.0 && a.mass.is_finite()) {
                return Err(Error::InvalidMeasure(format!(
                    "atom mass {} must be positive",
                    a.mass
                )));
            }
            if atoms[..i].iter().any(|b| b.theta == a.theta) {
                return Err(Error::InvalidMeasure(format!(
                    "duplicate atom angle {}",
                    a.theta
                )));
            }
        }
        let dtheta = TAU / nodes as f64;
        let mut nonnegative = true;
        let mut grid = Vec::with_capacity(nodes);
        for j in 0..nodes {
            let theta = dtheta * (j as f64 + 0.5);
            let w = weight(theta);
            if !w.is_finite() {
                return Err(Error::InvalidMeasure(format!(
                    "weight is not finite at theta = {theta}"
                )));
            }
            nonnegative &= w >= 0.0;
            grid.push(CircleNode {
                z: Complex64::from_polar(1.0, theta),
                weight: w * dtheta,
            });
        }
        Ok(Self {
            weight,
            atoms,
            nodes,
            grid: Arc::new(grid),
            nonnegative,
        })
    }

    /// Same measure on a different quadrature resolution.
    pub fn with_nodes(&self, nodes: usize) -> Result<Self> {
        Self::from_density(self.weight.clone(), self.atoms.clone(), nodes)
    }

    pub fn weight_at(&self, theta: f64) -> f64 {
        (self.weight)(theta)
    }

    pub fn weight(&self) -> &Density {
        &self.weight
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn has_atoms(&self) -> bool {
        !self.atoms.is_empty()
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn is_nonnegative(&self) -> bool {
        self.nonnegative
    }

    /// Quadrature nodes `theta_j` of the circle rule.
    pub fn grid_angles(&self) -> impl Iterator<Item = f64> + '_ {
        let dtheta = TAU / self.nodes as f64;
        (0..self.nodes).map(move |j| dtheta * (j as f64 + 0.5))
    }

    /// `int f(e^{i theta}) d mu(theta)`.
    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        let smooth: Complex64 = self.grid.iter().map(|n| f(n.z) * n.weight).sum();
        let atoms: Complex64 = self
            .atoms
            .iter()
            .map(|a| f(Complex64::from_polar(1.0, a.theta)) * a.mass)
            .sum();
        smooth + atoms
    }

    /// Values of `f` at the grid nodes followed by the atoms, for repeated
    /// inner products against the same function.
    pub fn sample(&self, f: &LaurentPoly) -> Vec<Complex64> {
        self.grid
            .iter()
            .map(|n| f.eval(n.z))
            .chain(
                self.atoms
                    .iter()
                    .map(|a| f.eval(Complex64::from_polar(1.0, a.theta))),
            )
            .collect()
    }

    /// `<f, g>` from samples produced by [`CircleMeasure::sample`].
    pub fn inner_sampled(&self, f: &[Complex64], g: &[Complex64]) -> Complex64 {
        let weights = self
            .grid
            .iter()
            .map(|n| n.weight)
            .chain(self.atoms.iter().map(|a| a.mass));
        f.iter()
            .zip(g)
            .zip(weights)
            .map(|((a, b), w)| a * b.conj() * w)
            .sum()
    }
}

/// `<f, g>_mu = int f(e^{i theta}) conj(g(e^{i theta})) d mu(theta)`.
pub fn circle_inner(f: &LaurentPoly, g: &LaurentPoly, m: &CircleMeasure) -> Complex64 {
    m.integrate(|z| f.eval(z) * g.eval(z).conj())
}

/// Matrix of pairwise inner products `[<f_i, g_j>]_{i,j}`.
pub fn vector_inner(f: &[LaurentPoly; 2], g: &[LaurentPoly; 2], m: &CircleMeasure) -> CMat2 {
    let fs = [m.sample(&f[0]), m.sample(&f[1])];
    let gs = [m.sample(&g[0]), m.sample(&g[1])];
    vector_inner_sampled(&fs, &gs, m)
}

pub(crate) fn vector_inner_sampled(
    fs: &[Vec<Complex64>; 2],
    gs: &[Vec<Complex64>; 2],
    m: &CircleMeasure,
) -> CMat2 {
    CMat2::new(
        m.inner_sampled(&fs[0], &gs[0]),
        m.inner_sampled(&fs[0], &gs[1]),
        m.inner_sampled(&fs[1], &gs[0]),
        m.inner_sampled(&fs[1], &gs[1]),
    )
}

fn reflect_angle(theta: f64) -> f64 {
    if theta == 0.0 {
        0.0
    } else {
        TAU - theta
    }
}

/// The reflected measure `d mu~(theta) = -d mu(2 pi - theta)`.
pub fn symmetric_measure(m: &CircleMeasure) -> CircleMeasure {
    let w = m.weight.clone();
    let atoms = m
        .atoms
        .iter()
        .map(|a| Atom {
            theta: reflect_angle(a.theta),
            mass: a.mass,
        })
        .collect();
    CircleMeasure::from_density(Arc::new(move |t: f64| w(reflect_angle(t))), atoms, m.nodes)
        .expect("reflection preserves validity")
}

/// Midpoint nodes of the interval rule: `(x, sqrt(1 - x^2), dx)`.
#[derive(Debug, Clone, Copy)]
pub struct IntervalNode {
    pub x: f64,
    pub s: f64,
    pub dx: f64,
}

pub fn interval_nodes(nodes: usize) -> impl Iterator<Item = IntervalNode> {
    let half = nodes / 2;
    let dtheta = PI / half as f64;
    (0..half).map(move |j| {
        let theta = dtheta * (j as f64 + 0.5);
        let (s, x) = theta.sin_cos();
        IntervalNode {
            x,
            s,
            dx: s * dtheta,
        }
    })
}

/// Scalar measure on `[-1, 1]`: a density in `x` plus point masses.
#[derive(Clone)]
pub struct IntervalMeasure {
    density: Density,
    atoms: Vec<(f64, f64)>,
    nodes: usize,
}

impl fmt::Debug for IntervalMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntervalMeasure")
            .field("atoms", &self.atoms)
            .field("nodes", &self.nodes)
            .finish_non_exhaustive()
    }
}

impl IntervalMeasure {
    pub fn density_at(&self, x: f64) -> f64 {
        (self.density)(x)
    }

    pub fn density(&self) -> &Density {
        &self.density
    }

    /// `(x, mass)` pairs.
    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn integrate(&self, h: impl Fn(f64) -> f64) -> f64 {
        let smooth: f64 = interval_nodes(self.nodes)
            .map(|n| h(n.x) * self.density_at(n.x) * n.dx)
            .sum();
        smooth + self.atoms.iter().map(|&(x, q)| h(x) * q).sum::<f64>()
    }

    pub fn total_mass(&self) -> f64 {
        self.integrate(|_| 1.0)
    }
}

/// The two projections of a circle measure onto `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct ProjectedPair {
    pub nu1: IntervalMeasure,
    pub nu2: IntervalMeasure,
}

/// Projects the upper half circle (`nu1`) and the reflected measure (`nu2`)
/// onto `[-1, 1]` through `x = cos(theta)`.
///
/// Atoms at `theta = 0` or `pi` sit on both half circles; their mass is split
/// evenly so that `nu1 + nu2` still carries it exactly once.
pub fn project_measures(m: &CircleMeasure) -> ProjectedPair {
    let w1 = m.weight.clone();
    let w2 = m.weight.clone();
    let nu1_density: Density = Arc::new(move |x: f64| w1(x.acos()) / sqrt_one_minus_sq(x));
    let nu2_density: Density = Arc::new(move |x: f64| w2(TAU - x.acos()) / sqrt_one_minus_sq(x));

    let mut atoms1 = Vec::new();
    let mut atoms2 = Vec::new();
    for a in &m.atoms {
        let x = a.theta.cos();
        if a.theta == 0.0 || a.theta == PI {
            atoms1.push((x, 0.5 * a.mass));
            atoms2.push((x, 0.5 * a.mass));
        } else if a.theta < PI {
            atoms1.push((x, a.mass));
        } else {
            atoms2.push((x, a.mass));
        }
    }
    ProjectedPair {
        nu1: IntervalMeasure {
            density: nu1_density,
            atoms: atoms1,
            nodes: m.nodes,
        },
        nu2: IntervalMeasure {
            density: nu2_density,
            atoms: atoms2,
            nodes: m.nodes,
        },
    }
}

/// Point mass of a matrix measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixAtom {
    pub x: f64,
    pub mass: Mat2,
}

/// Structured 2x2 measure on `[-1, 1]`,
/// `d Omega = 1/2 [[d rho, s d sigma], [s d sigma, s^2 d rho]]`, `s = sqrt(1 - x^2)`.
#[derive(Clone)]
pub struct MatrixMeasure {
    rho: Density,
    sigma: Density,
    atoms: Vec<MatrixAtom>,
    nodes: usize,
}

impl fmt::Debug for MatrixMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixMeasure")
            .field("atoms", &self.atoms)
            .field("nodes", &self.nodes)
            .finish_non_exhaustive()
    }
}

impl MatrixMeasure {
    pub fn new(
        rho: impl Fn(f64) -> f64 + Send + Sync + 'static,
        sigma: impl Fn(f64) -> f64 + Send + Sync + 'static,
        atoms: Vec<MatrixAtom>,
        nodes: usize,
    ) -> Result<Self> {
        check_nodes(nodes)?;
        Ok(Self {
            rho: Arc::new(rho),
            sigma: Arc::new(sigma),
            atoms,
            nodes,
        })
    }

    pub fn rho_at(&self, x: f64) -> f64 {
        (self.rho)(x)
    }

    pub fn sigma_at(&self, x: f64) -> f64 {
        (self.sigma)(x)
    }

    pub fn atoms(&self) -> &[MatrixAtom] {
        &self.atoms
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// `Omega'(x)`.
    pub fn density(&self, x: f64) -> Mat2 {
        let s = sqrt_one_minus_sq(x);
        let (r, g) = (self.rho_at(x), self.sigma_at(x));
        Mat2::new(0.5 * r, 0.5 * s * g, 0.5 * s * g, 0.5 * s * s * r)
    }

    /// Quadrature weights `(x_j, Omega'(x_j) dx_j)` followed by the atoms.
    pub fn quadrature(&self) -> impl Iterator<Item = (f64, Mat2)> + '_ {
        let smooth = interval_nodes(self.nodes).map(move |n| {
            // rho' * s and sigma' * s stay bounded at the endpoints.
            let r = self.rho_at(n.x) * n.s;
            let g = self.sigma_at(n.x) * n.s;
            let f = 0.5 * n.dx / n.s;
            (
                n.x,
                Mat2::new(f * r, f * n.s * g, f * n.s * g, f * n.s * n.s * r),
            )
        });
        smooth.chain(self.atoms.iter().map(|a| (a.x, a.mass)))
    }

    /// `int d Omega`.
    pub fn total(&self) -> Mat2 {
        self.quadrature().fold(Mat2::zero(), |acc, (_, w)| acc + w)
    }
}

fn matrix_atom(x: f64, rho_mass: f64, sigma_mass: f64) -> MatrixAtom {
    let s = sqrt_one_minus_sq(x);
    MatrixAtom {
        x,
        mass: Mat2::new(
            0.5 * rho_mass,
            0.5 * s * sigma_mass,
            0.5 * s * sigma_mass,
            0.5 * s * s * rho_mass,
        ),
    }
}

/// Builds `d Omega` with `rho = nu1 + nu2`, `sigma = nu1 - nu2`.
pub fn associated_matrix_measure(m: &CircleMeasure) -> MatrixMeasure {
    let ProjectedPair { nu1, nu2 } = project_measures(m);
    let (a1, a2) = (nu1.density.clone(), nu2.density.clone());
    let (b1, b2) = (nu1.density.clone(), nu2.density.clone());
    let atoms = nu1
        .atoms
        .iter()
        .map(|&(x, q)| matrix_atom(x, q, q))
        .chain(nu2.atoms.iter().map(|&(x, q)| matrix_atom(x, q, -q)))
        .collect();
    MatrixMeasure {
        rho: Arc::new(move |x| a1(x) + a2(x)),
        sigma: Arc::new(move |x| b1(x) - b2(x)),
        atoms,
        nodes: m.nodes,
    }
}

/// `int F(x) d Omega(x) G(x)^T`.
pub fn matrix_inner(f: &MatPoly2, g: &MatPoly2, omega: &MatrixMeasure) -> Mat2 {
    omega.quadrature().fold(Mat2::zero(), |acc, (x, w)| {
        acc + f.eval(x) * w * g.eval(x).transpose()
    })
}

/// Grid node where `|sigma'| <= rho'` fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityViolation {
    pub x: f64,
    pub rho: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityReport {
    pub positive: bool,
    pub violations: Vec<DensityViolation>,
    /// Indices into [`MatrixMeasure::atoms`] whose mass is not nonnegative definite.
    pub atom_violations: Vec<usize>,
}

/// Checks `|sigma'(x_j)| <= rho'(x_j)` on the interval grid and that every
/// atom carries a nonnegative definite mass.
pub fn positivity_check(omega: &MatrixMeasure) -> PositivityReport {
    let violations: Vec<_> = interval_nodes(omega.nodes)
        .filter_map(|n| {
            let rho = omega.rho_at(n.x);
            let sigma = omega.sigma_at(n.x);
            let ok = sigma.abs() <= rho * (1.0 + 4.0 * f64::EPSILON);
            (!ok).then_some(DensityViolation { x: n.x, rho, sigma })
        })
        .collect();
    let atom_violations: Vec<_> = omega
        .atoms
        .iter()
        .enumerate()
        .filter(|(_, a)| {
            let m = a.mass;
            let scale = m.max_abs().max(f64::MIN_POSITIVE);
            !(m.trace() >= 0.0
                && m.det() >= -1e-14 * scale * scale
                && m.is_symmetric(1e-14 * scale))
        })
        .map(|(i, _)| i)
        .collect();
    PositivityReport {
        positive: violations.is_empty() && atom_violations.is_empty(),
        violations,
        atom_violations,
    }
}
