//! Measure specification files.
//!
//! ```json
//! {"kind": "schur", "schur": [[0.5, 0.0]], "eps0": 6.283185307179586}
//! {"kind": "weight", "weight": {"family": "trig-poly", "cos": [1.0, 0.5], "sin": [0.2]},
//!  "atoms": [{"theta": 1.0, "mass": 0.3}]}
//! ```
//!
//! Trig-poly weights are `sum_k cos[k] cos(k theta) + sum_k sin[k] sin((k + 1) theta)`.
//! Table weights sample `theta_j = 2 pi j / M` and interpolate linearly.

use std::f64::consts::TAU;
use std::fmt;
use std::path::Path;

use circmat_core::{bernstein_szego_resolved, Atom, CircleMeasure, Complex64, SchurSequence};
use serde::Deserialize;
use thiserror::Error;

/// Relative accuracy of the total mass when a Schur head is turned into its
/// Bernstein-Szego measure.
pub const MASS_TOL: f64 = 1e-13;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}\n  | {context}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
        context: String,
    },
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
}

fn field_err(field: impl Into<String>, reason: impl fmt::Display) -> SpecError {
    SpecError::Field {
        field: field.into(),
        reason: reason.to_string(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: String,
    schur: Option<Vec<[f64; 2]>>,
    eps0: Option<f64>,
    weight: Option<RawWeight>,
    atoms: Option<Vec<RawAtom>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeight {
    family: String,
    cos: Option<Vec<f64>>,
    sin: Option<Vec<f64>>,
    samples: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAtom {
    theta: f64,
    mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightFamily {
    Lebesgue,
    TrigPoly { cos: Vec<f64>, sin: Vec<f64> },
    Table { samples: Vec<f64> },
}

impl WeightFamily {
    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            Self::Lebesgue => 1.0,
            Self::TrigPoly { cos, sin } => {
                let c: f64 = cos
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a * (k as f64 * theta).cos())
                    .sum();
                let s: f64 = sin
                    .iter()
                    .enumerate()
                    .map(|(k, b)| b * ((k + 1) as f64 * theta).sin())
                    .sum();
                c + s
            }
            Self::Table { samples } => {
                let m = samples.len();
                let u = theta.rem_euclid(TAU) / TAU * m as f64;
                let j = (u.floor() as usize).min(m - 1);
                let t = u - j as f64;
                samples[j] * (1.0 - t) + samples[(j + 1) % m] * t
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeasureSpec {
    Schur(SchurSequence),
    Weight {
        family: WeightFamily,
        atoms: Vec<Atom>,
    },
}

impl MeasureSpec {
    pub fn has_atoms(&self) -> bool {
        matches!(self, Self::Weight { atoms, .. } if !atoms.is_empty())
    }

    /// The circle measure on at least `nodes` grid points. Weight families
    /// may be signed so that non-positive inputs reach the positivity check.
    pub fn circle_measure(&self, nodes: usize) -> circmat_core::Result<CircleMeasure> {
        match self {
            Self::Schur(s) => bernstein_szego_resolved(s, nodes, MASS_TOL),
            Self::Weight { family, atoms } => {
                let f = family.clone();
                CircleMeasure::signed(move |t| f.eval(t), atoms.clone(), nodes)
            }
        }
    }

    /// Schur parameters `a_1 .. a_len`, computed from the measure for weight
    /// specs.
    pub fn schur_sequence(
        &self,
        measure: &CircleMeasure,
        len: usize,
    ) -> circmat_core::Result<SchurSequence> {
        match self {
            Self::Schur(s) => Ok(s.clone()),
            Self::Weight { .. } => circmat_core::opuc::schur_from_measure(measure, len),
        }
    }
}

fn parse_error(text: &str, err: serde_json::Error) -> SpecError {
    let line = err.line();
    let context = text
        .lines()
        .nth(line.saturating_sub(1))
        .unwrap_or("")
        .trim_end()
        .to_string();
    SpecError::Parse {
        line,
        column: err.column(),
        message: err.to_string(),
        context,
    }
}

fn finite(values: &[f64], field: &str) -> Result<(), SpecError> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(field_err(format!("{field}[{i}]"), "must be finite")),
        None => Ok(()),
    }
}

pub fn parse_spec_str(text: &str) -> Result<MeasureSpec, SpecError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| parse_error(text, e))?;
    match raw.kind.as_str() {
        "schur" => {
            if raw.weight.is_some() {
                return Err(field_err("weight", "not allowed when kind is \"schur\""));
            }
            if raw.atoms.is_some() {
                return Err(field_err("atoms", "not allowed when kind is \"schur\""));
            }
            let head = raw
                .schur
                .ok_or_else(|| field_err("schur", "required when kind is \"schur\""))?;
            let head: Vec<Complex64> = head
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect();
            for (i, a) in head.iter().enumerate() {
                if !(a.norm() < 1.0) {
                    return Err(field_err(
                        format!("schur[{i}]"),
                        format!("|a_{}| = {} must be < 1", i + 1, a.norm()),
                    ));
                }
            }
            let eps0 = raw.eps0.unwrap_or(TAU);
            if !(eps0 > 0.0 && eps0.is_finite()) {
                return Err(field_err(
                    "eps0",
                    format!("{eps0} must be positive and finite"),
                ));
            }
            let s = SchurSequence::new(head, eps0).map_err(|e| field_err("schur", e))?;
            Ok(MeasureSpec::Schur(s))
        }
        "weight" => {
            if raw.schur.is_some() {
                return Err(field_err("schur", "not allowed when kind is \"weight\""));
            }
            if raw.eps0.is_some() {
                return Err(field_err("eps0", "not allowed when kind is \"weight\""));
            }
            let w = raw
                .weight
                .ok_or_else(|| field_err("weight", "required when kind is \"weight\""))?;
            let family = parse_family(w)?;
            let atoms = raw
                .atoms
                .unwrap_or_default()
                .into_iter()
                .enumerate()
                .map(|(i, a)| {
                    if !(0.0..TAU).contains(&a.theta) {
                        return Err(field_err(
                            format!("atoms[{i}].theta"),
                            "must lie in [0, 2 pi)",
                        ));
                    }
                    if !(a.mass > 0.0 && a.mass.is_finite()) {
                        return Err(field_err(format!("atoms[{i}].mass"), "must be positive"));
                    }
                    Ok(Atom {
                        theta: a.theta,
                        mass: a.mass,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (i, a) in atoms.iter().enumerate() {
                if atoms[..i].iter().any(|b| b.theta == a.theta) {
                    return Err(field_err(format!("atoms[{i}].theta"), "duplicate angle"));
                }
            }
            Ok(MeasureSpec::Weight { family, atoms })
        }
        other => Err(field_err(
            "kind",
            format!("expected \"schur\" or \"weight\", got {other:?}"),
        )),
    }
}

fn parse_family(w: RawWeight) -> Result<WeightFamily, SpecError> {
    let reject = |name: &str, present: bool| {
        if present {
            Err(field_err(
                format!("weight.{name}"),
                format!("not used by family {:?}", w.family),
            ))
        } else {
            Ok(())
        }
    };
    match w.family.as_str() {
        "lebesgue" => {
            reject("cos", w.cos.is_some())?;
            reject("sin", w.sin.is_some())?;
            reject("samples", w.samples.is_some())?;
            Ok(WeightFamily::Lebesgue)
        }
        "trig-poly" => {
            reject("samples", w.samples.is_some())?;
            let cos = w.cos.clone().unwrap_or_default();
            let sin = w.sin.clone().unwrap_or_default();
            if cos.is_empty() && sin.is_empty() {
                return Err(field_err(
                    "weight.cos",
                    "trig-poly needs cos or sin coefficients",
                ));
            }
            finite(&cos, "weight.cos")?;
            finite(&sin, "weight.sin")?;
            Ok(WeightFamily::TrigPoly { cos, sin })
        }
        "table" => {
            reject("cos", w.cos.is_some())?;
            reject("sin", w.sin.is_some())?;
            let samples = w
                .samples
                .clone()
                .ok_or_else(|| field_err("weight.samples", "required for family \"table\""))?;
            if samples.is_empty() {
                return Err(field_err("weight.samples", "must not be empty"));
            }
            finite(&samples, "weight.samples")?;
            Ok(WeightFamily::Table { samples })
        }
        other => Err(field_err(
            "weight.family",
            format!("expected \"lebesgue\", \"trig-poly\" or \"table\", got {other:?}"),
        )),
    }
}

pub fn parse_spec(path: &Path) -> Result<MeasureSpec, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_spec_str(&text)
}
