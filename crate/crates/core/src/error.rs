use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: i64 },

    #[error("the forms are proportional")]
    Proportional,

    #[error("f(e) = 0: not hyperbolic with respect to e by definition")]
    VanishesAtDirection,

    #[error("base point is proportional to the direction")]
    DegenerateLine,

    #[error("the center meets the curve (common factor {0})")]
    CenterMeetsCurve(String),

    #[error("the curve parametrization has a common factor")]
    CommonFactor,

    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),

    #[error("parameter must be positive")]
    NonPositiveParameter,

    #[error("expected a linear form")]
    NotLinear,

    #[error("scaling parameter a = 0 is refused: the naive substitution is not the flat limit")]
    ZeroScaling,

    #[error("missing distraction slot t[{var}][{slot}]")]
    MissingSlot { var: usize, slot: usize },

    #[error("distraction is not generic: {0}")]
    NotGeneric(String),

    #[error("monomial ideal must be generated by monomials in x{from}..x{to}")]
    UnsupportedSupport { from: usize, to: usize },

    #[error("empty fan")]
    EmptyFan,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("Groebner scope exceeded: {0}")]
    ScopeExceeded(String),

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("deformation is not well defined: syzygy {syzygy} maps to {image}")]
    IllDefinedDeformation { syzygy: String, image: String },

    #[error("element lies in the ideal")]
    InIdeal,

    #[error("element is not nilpotent modulo the ideal")]
    NotInRadical,

    #[error("point decomposition invalid: {0}")]
    BadDecomposition(String),

    #[error("E is not contained in E'")]
    NotContained,

    #[error("invalid task: {0}")]
    Task(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
