use std::fmt::Write as _;
use std::path::Path;

use circmat_core::{associated_matrix_measure, lonp_convergence_report, CMat2, ConvergenceReport};

use crate::spec::MeasureSpec;
use crate::verify::schur_len;
use crate::CliError;

/// `n,err,rate` with 17 significant digits; `rate` is empty on the first row.
pub fn convergence_csv<L>(report: &ConvergenceReport<L>) -> String {
    let mut out = String::from("n,err,rate\n");
    for r in &report.rows {
        let rate = r.rate.map(|v| format!("{v:.16e}")).unwrap_or_default();
        writeln!(out, "{},{:.16e},{rate}", r.n, r.err).expect("writing to a String");
    }
    out
}

/// LONP convergence at `x` for `n = 1 ..= n_max`.
pub fn asymptotics(
    spec: &MeasureSpec,
    x: f64,
    n_max: usize,
    nodes: usize,
) -> Result<ConvergenceReport<CMat2>, CliError> {
    if spec.has_atoms() {
        return Err(circmat_core::Error::AtomsNotSupported.into());
    }
    let measure = spec.circle_measure(nodes)?;
    let schur = spec.schur_sequence(&measure, schur_len(n_max))?;
    let omega = associated_matrix_measure(&measure);
    let ns: Vec<usize> = (1..=n_max).collect();
    Ok(lonp_convergence_report(&omega, &schur, x, &ns)?)
}

pub fn run_asymptotics(
    spec: &MeasureSpec,
    x: f64,
    n_max: usize,
    nodes: usize,
    out: &Path,
) -> Result<ConvergenceReport<CMat2>, CliError> {
    let report = asymptotics(spec, x, n_max, nodes)?;
    std::fs::write(out, convergence_csv(&report)).map_err(|e| CliError::io(out, e))?;
    Ok(report)
}

/// The limit matrix `D(d Omega; z)^{-1} / sqrt(2 pi)`, real part and any
/// imaginary residue.
pub fn format_limit(limit: &CMat2) -> String {
    let mut s = String::from("limit (D^-1 / sqrt(2 pi)):\n");
    for i in 0..2 {
        let row: Vec<String> = (0..2)
            .map(|j| format!("{:>24.16e}", limit.get(i, j).re))
            .collect();
        writeln!(s, "  [{}]", row.join(", ")).expect("writing to a String");
    }
    let im = limit.im().max_abs();
    if im > 0.0 {
        writeln!(s, "  max |imaginary part| = {im:.3e}").expect("writing to a String");
    }
    s
}
