use thiserror::Error;

/// Failures while reading external (JSON or string) descriptions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid number `{0}`")]
    Number(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

impl ParseError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Field { field: field.into(), message: message.into() }
    }
}

/// Which weighted-category axiom failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightViolation {
    /// `w(1_x) ≠ 0`.
    NonzeroIdentity { object: String },
    /// `w(a + b) > w(a) + w(b)`.
    Subadditivity { first: String, second: String },
}

impl std::fmt::Display for WeightViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeightViolation::NonzeroIdentity { object } => {
                write!(f, "identity of `{object}` has nonzero weight")
            }
            WeightViolation::Subadditivity { first, second } => {
                write!(f, "w({first} + {second}) > w({first}) + w({second})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square or has the wrong size: {0}")]
    Shape(String),
    #[error("d[{0}][{0}] is not zero")]
    ReflexivityViolation(usize),
    #[error("triangle inequality fails: d[{0}][{1}] + d[{1}][{2}] < d[{0}][{2}]")]
    TriangleViolation(usize, usize, usize),
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("size limit exceeded: {what} needs more than {limit}")]
    SizeLimitExceeded { what: &'static str, limit: u64 },
    #[error("not a category: {0}")]
    NotACategory(String),
    #[error("weight axiom violated: {0}")]
    WeightAxiomViolation(WeightViolation),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not a natural transformation: {0}")]
    NotNatural(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("no elementary retract found")]
    NoRetractFound,
    #[error("paths are not consecutive: first ends at {end}, second starts at {start}")]
    EndpointMismatch { end: String, start: String },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid plane: {0}")]
    InvalidPlane(String),
    #[error("pieces do not cover the plane by interiors: {0}")]
    CoverViolation(String),
    #[error("edge leaves the space: {0}")]
    EdgeOffSpace(String),
    #[error("invalid w-space: {0}")]
    InvalidWSpace(String),
    #[error("incompatible quadratic fields Q(sqrt {0}) and Q(sqrt {1})")]
    IncompatibleField(u64, u64),
    #[error("invalid quadratic irrational: {0}")]
    InvalidQuadratic(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix determinant is {0}, not ±1")]
    NotUnimodular(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
