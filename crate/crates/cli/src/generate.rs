use std::path::Path;

use circmat_core::sof::{gram_block, schur_matrix_at};
use circmat_core::{matrix_families, szego_sequence, Mat2, MatPoly2};
use serde::{Deserialize, Serialize};

use crate::spec::MeasureSpec;
use crate::verify::schur_len;
use crate::CliError;

pub type MatJson = [[f64; 2]; 2];
/// Entry-wise ascending coefficient lists.
pub type MatPolyJson = [[Vec<f64>; 2]; 2];

/// Everything `gen` writes, indexed by `n = 0 ..= N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenOutput {
    pub n: usize,
    pub eps0: f64,
    /// `[re, im]` of `a_1 .. a_{2N+3}`.
    pub schur: Vec<[f64; 2]>,
    /// Ascending `[re, im]` coefficients of the monic `phi_n`.
    pub phi: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "H")]
    pub h: Vec<MatJson>,
    #[serde(rename = "C")]
    pub c: Vec<MatJson>,
    #[serde(rename = "F")]
    pub f: Vec<MatPolyJson>,
    #[serde(rename = "P")]
    pub p: Vec<MatPolyJson>,
    #[serde(rename = "Q")]
    pub q: Vec<MatPolyJson>,
}

fn mat_json(m: Mat2) -> MatJson {
    m.m
}

fn matpoly_json(p: &MatPoly2) -> MatPolyJson {
    let e = &p.entries;
    let c = |i: usize, j: usize| e[i][j].coeffs().to_vec();
    [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]
}

pub fn generate(spec: &MeasureSpec, n: usize, nodes: usize) -> Result<GenOutput, CliError> {
    let measure = spec.circle_measure(nodes)?;
    let schur = spec.schur_sequence(&measure, schur_len(n))?;
    let fams = matrix_families(&schur, n)?;
    Ok(GenOutput {
        n,
        eps0: schur.eps0(),
        schur: (1..=schur_len(n))
            .map(|k| {
                let a = schur.get(k);
                [a.re, a.im]
            })
            .collect(),
        phi: szego_sequence(&schur, n)
            .iter()
            .map(|p| p.coeffs().iter().map(|c| [c.re, c.im]).collect())
            .collect(),
        h: (0..=n)
            .map(|k| mat_json(schur_matrix_at(&schur, k)))
            .collect(),
        c: (0..=n).map(|k| mat_json(gram_block(&schur, k))).collect(),
        f: fams.f[..=n].iter().map(matpoly_json).collect(),
        p: fams.p.iter().map(matpoly_json).collect(),
        q: fams.q.iter().map(matpoly_json).collect(),
    })
}

pub fn run_generate(
    spec: &MeasureSpec,
    n: usize,
    nodes: usize,
    out: &Path,
) -> Result<GenOutput, CliError> {
    let output = generate(spec, n, nodes)?;
    let text = serde_json::to_string_pretty(&output)?;
    std::fs::write(out, text + "\n").map_err(|e| CliError::io(out, e))?;
    Ok(output)
}
