use std::time::Instant;

use circmat_core::matrix_op::{
    lomp_family, lomp_inverse_residual, lomp_normalizers, matrix_poly_from_sof,
    matrix_poly_recurrence, quasi_orthogonality_report, second_recurrence_residual, standard_lonp,
    standard_lonp_data,
};
use circmat_core::measure::matrix_inner;
use circmat_core::sof::{gram_block, vsof_gram};
use circmat_core::{
    associated_matrix_measure, positivity_check, vsof_family, CMat2, Mat2, MatPoly2, SchurSequence,
};

use crate::report::{CheckResult, RunReport};
use crate::spec::MeasureSpec;

/// Tolerance for identities that hold exactly up to rounding.
pub const ALGEBRAIC_TOL: f64 = 1e-10;

/// Number of Schur parameters needed for every object up to index `n`.
pub fn schur_len(n: usize) -> usize {
    2 * n + 3
}

/// Runs the full check suite for `F_0 .. F_n`, `P_0 .. P_n`, `Q_0 .. Q_n`.
/// Quadrature-based checks use `tol`; algebraic ones use [`ALGEBRAIC_TOL`].
pub fn run_verify(
    spec: &MeasureSpec,
    n: usize,
    tol: f64,
    nodes: usize,
) -> circmat_core::Result<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::default();
    let measure = spec.circle_measure(nodes)?;
    let omega = associated_matrix_measure(&measure);

    let pos = positivity_check(&omega);
    let excess = pos
        .violations
        .iter()
        .map(|v| v.sigma.abs() - v.rho)
        .fold(0.0, f64::max);
    let mut check = CheckResult::measured("positivity", excess, 0.0);
    check.pass = pos.positive;
    if let Some(v) = pos.violations.first() {
        check = check.with_detail(format!(
            "{} nodes with |sigma'| > rho', first at x = {:.6} (rho' = {:.3e}, sigma' = {:.3e})",
            pos.violations.len(),
            v.x,
            v.rho,
            v.sigma
        ));
    } else if let Some(i) = pos.atom_violations.first() {
        check = check.with_detail(format!("atom {i} is not nonnegative definite"));
    }
    report.push(check);

    match spec.schur_sequence(&measure, schur_len(n)) {
        Ok(schur) => family_checks(&mut report, &schur, &measure, &omega, n, tol),
        Err(e) => report.push(CheckResult::failed("schur-parameters", tol, e)),
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn family_checks(
    report: &mut RunReport,
    schur: &SchurSequence,
    measure: &circmat_core::CircleMeasure,
    omega: &circmat_core::MatrixMeasure,
    n: usize,
    tol: f64,
) {
    let family = vsof_family(schur, n);
    let gram = vsof_gram(&family, measure);
    let scale: Vec<f64> = (0..=n).map(|k| gram_block(schur, k).max_abs()).collect();
    let mut gram_err: f64 = 0.0;
    for i in 0..=n {
        for j in 0..=n {
            let expect = if i == j {
                gram_block(schur, i).to_complex()
            } else {
                CMat2::zero()
            };
            gram_err = gram_err.max((gram[i][j] - expect).max_abs() / (scale[i] * scale[j]).sqrt());
        }
    }
    report.push(CheckResult::measured("gram-blocks", gram_err, tol));

    let f = matrix_poly_recurrence(schur, n + 1);
    let mut dual: f64 = 0.0;
    for (k, v) in family.iter().enumerate() {
        match matrix_poly_from_sof(v) {
            Ok(direct) => dual = dual.max(direct.relative_diff(&f[k])),
            Err(e) => {
                report.push(CheckResult::failed("dual-route", ALGEBRAIC_TOL, e));
                return;
            }
        }
    }
    report.push(CheckResult::measured("dual-route", dual, ALGEBRAIC_TOL));

    let second = (1..=n)
        .map(|k| second_recurrence_residual(schur, &f, k))
        .fold(0.0, f64::max);
    report.push(CheckResult::measured(
        "second-recurrence",
        second,
        ALGEBRAIC_TOL,
    ));

    let quasi = quasi_orthogonality_report(&f[..=n], omega, schur)
        .iter()
        .map(|r| r.max_residual())
        .fold(0.0, f64::max);
    report.push(CheckResult::measured("quasi-orthogonality", quasi, tol));

    let p = lomp_family(schur, &f);
    let inverse = (0..=n)
        .map(|k| lomp_inverse_residual(schur, &f, &p, k))
        .fold(0.0, f64::max);
    report.push(CheckResult::measured(
        "lomp-inverse",
        inverse,
        ALGEBRAIC_TOL,
    ));

    let monomials: Vec<MatPoly2> = (0..n).map(MatPoly2::scalar_monomial).collect();
    let mono_norms: Vec<f64> = monomials
        .iter()
        .map(|m| matrix_inner(m, m, omega).max_abs())
        .collect();
    let mut lomp_err: f64 = 0.0;
    for (k, pk) in p.iter().enumerate() {
        let (_, norm) = lomp_normalizers(schur, k);
        let s = norm.max_abs();
        for (j, m) in monomials.iter().enumerate().take(k) {
            let moment = matrix_inner(pk, m, omega).max_abs() / (s * mono_norms[j]).sqrt();
            lomp_err = lomp_err.max(moment);
        }
        lomp_err = lomp_err.max((matrix_inner(pk, pk, omega) - norm).max_abs() / s);
    }
    report.push(CheckResult::measured("lomp-orthogonality", lomp_err, tol));

    let mut xi_err: f64 = 0.0;
    let mut lonp_err: f64 = 0.0;
    for (k, pk) in p.iter().enumerate() {
        let q = standard_lonp_data(schur, k).and_then(|d| Ok((d, standard_lonp(pk, schur, k)?)));
        match q {
            Ok((d, q)) => {
                xi_err = xi_err.max((d.xi.transpose() * d.xi - Mat2::identity()).max_abs());
                lonp_err = lonp_err.max((matrix_inner(&q, &q, omega) - Mat2::identity()).max_abs());
            }
            Err(e) => {
                report.push(CheckResult::failed("lonp-orthonormality", tol, e));
                return;
            }
        }
    }
    report.push(CheckResult::measured(
        "xi-orthogonal",
        xi_err,
        ALGEBRAIC_TOL,
    ));
    report.push(CheckResult::measured("lonp-orthonormality", lonp_err, tol));
}
