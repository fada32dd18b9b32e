use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Schur parameter a_{index} has modulus {modulus}, must be < 1")]
    InvalidSchur { index: usize, modulus: f64 },

    #[error("total mass eps0 = {0} must be positive and finite")]
    InvalidMass(f64),

    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },

    #[error("expected a monic polynomial of degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: String },

    #[error("Laurent polynomial is not fixed by conjugate reflection (deviation {deviation:e})")]
    NotReflectionSymmetric { deviation: f64 },

    #[error("measure is not admissible: computed |a_{index}| = {modulus} reached the unit circle")]
    InadmissibleMeasure { index: usize, modulus: f64 },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("Szego condition violated: density {value:e} at {location} is not strictly positive")]
    SzegoClass { location: String, value: f64 },

    #[error("measures with atoms are outside the Szego class handled here")]
    AtomsNotSupported,

    #[error("point {0} lies on the unit circle")]
    OnUnitCircle(String),

    #[error("point {0} lies on the interval [-1, 1]")]
    OnInterval(String),

    #[error("normalization matrix is degenerate (det = {0:e})")]
    Degenerate(f64),
}
