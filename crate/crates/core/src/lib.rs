//! Scalar orthogonal polynomials on the unit circle, their semi-orthogonal
//! vector functions, and the 2x2 matrix orthogonal polynomials on `[-1, 1]`
//! they induce through the associated matrix measure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod mat2;
pub mod matpoly;
pub mod matrix_op;
pub mod measure;
pub mod opuc;
pub mod poly;
pub mod sof;

pub use asymptotics::{
    bernstein_szego_measure, bernstein_szego_resolved, gamma_limit, joukowski_inverse,
    lonp_convergence_report, matrix_szego, szego_data, szego_function, vsof_asymptotics_check,
    ConvergenceReport, ConvergenceRow, ScalarSzego, SzegoData,
};
pub use error::{Error, Result};
pub use mat2::{CMat2, Mat2, Matrix2};
pub use matpoly::MatPoly2;
pub use matrix_op::{matrix_families, MatrixFamilies, RealRecurrence};
pub use measure::{
    associated_matrix_measure, positivity_check, Atom, CircleMeasure, MatrixAtom, MatrixMeasure,
    PositivityReport, DEFAULT_NODES,
};
pub use num_complex::Complex64;
pub use opuc::{derived_sequences, szego_sequence, OpucSequences, SchurSequence};
pub use poly::{ComplexPoly, LaurentPoly, RealPoly};
pub use sof::{vsof_family, Vsof};
