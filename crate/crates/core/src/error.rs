use thiserror::Error;

/// Everything that can go wrong when building or combining the set structures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lower}, {upper}]: lower endpoint exceeds upper")]
    InvalidInterval { lower: f64, upper: f64 },
    #[error("interval endpoints must be finite")]
    NonFiniteEndpoint,
    #[error("scalar factor must be non-negative, got {0}")]
    NegativeScalar(f64),
    #[error("interval bag is empty")]
    EmptyBag,
    #[error("interval bag entry has count zero")]
    ZeroCount,

    #[error("universe must be non-empty")]
    EmptyUniverse,
    #[error("duplicate element label `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("membership of `{element}` is {value}, outside [0, 1]")]
    MembershipOutOfRange { element: String, value: f64 },
    #[error("expected {expected} membership values, got {actual}")]
    MembershipCount { expected: usize, actual: usize },
    #[error("alpha level {0} outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("map is not total: `{0}` has no image")]
    MapNotTotal(String),
    #[error("map sends `{from}` to `{to}`, which is outside the codomain")]
    MapOutsideCodomain { from: String, to: String },

    #[error("invalid grades for `{element}`: {detail}")]
    InvalidGrades { element: String, detail: String },
    #[error("`{element}` has component sum {sum}, so it carries no refusal degree")]
    NotPictureFuzzy { element: String, sum: f64 },

    #[error("parameter `{0}` is not in the parameter universe")]
    UnknownParameter(String),
    #[error("parameter `{0}` listed twice")]
    DuplicateParameter(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("enumeration too large: {0}")]
    CapacityExceeded(String),

    #[error("invalid grade scale: {0}")]
    InvalidScale(String),
    #[error("unknown grade {0}")]
    UnknownGrade(String),
    #[error("grade count for {0} must be positive")]
    ZeroGradeCount(String),
    #[error("score {0} outside the 0-100 scale")]
    ScoreOutOfRange(f64),
    #[error("invalid decision table: {0}")]
    InvalidTable(String),
    #[error("cell ({alternative}, {parameter}) holds a grade; this method needs binary cells")]
    GradeCell {
        alternative: String,
        parameter: String,
    },
    #[error("no weight for parameter `{0}`")]
    MissingWeight(String),
    #[error("weight {weight} for `{parameter}` outside (0, 1]")]
    InvalidWeight { parameter: String, weight: f64 },

    #[error("separation needs at least two points")]
    SingletonUniverse,
    #[error("open family contains a duplicate at position {0}")]
    DuplicateOpen(usize),
    #[error("set at position {0} is not an open of the topology")]
    NotAnOpen(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
