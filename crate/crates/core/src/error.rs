use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("quiver is not connected")]
    DisconnectedQuiver,
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("negative Ext defect {0}: hom/euler convention violated")]
    NonNegativityViolation(i64),

    #[error("the linear category A_n carries no translation")]
    NoTranslationForLine,
    #[error("arcs belong to different serial categories")]
    CategoryMismatch,
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("elements belong to different grading groups")]
    WeightMismatch,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("class does not belong to this model: {0}")]
    ModelMismatch(String),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("family is not vertex-like")]
    NotVertexLike,
    #[error("not an exceptional torsion sheaf: {0}")]
    NotExceptionalTorsion(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }

    /// Stable machine-readable code, used by the CLI's JSON error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidQuiver(_) => "invalid_quiver",
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::DisconnectedQuiver => "disconnected_quiver",
            Error::QuiverMismatch => "quiver_mismatch",
            Error::InvalidRep(_) => "invalid_rep",
            Error::NonNegativityViolation(_) => "non_negativity_violation",
            Error::NoTranslationForLine => "no_translation_for_line",
            Error::CategoryMismatch => "category_mismatch",
            Error::InvalidArc(_) => "invalid_arc",
            Error::BoundExceeded(_) => "bound_exceeded",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::WeightMismatch => "weight_mismatch",
            Error::InvalidWeights(_) => "invalid_weights",
            Error::ModelMismatch(_) => "model_mismatch",
            Error::InvalidClass(_) => "invalid_class",
            Error::UnknownPoint(_) => "unknown_point",
            Error::NotVertexLike => "not_vertex_like",
            Error::NotExceptionalTorsion(_) => "not_exceptional_torsion",
            Error::Invariant(_) => "internal_invariant",
            Error::Parse { .. } => "parse_error",
        }
    }

    /// True for errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonNegativityViolation(_) | Error::Invariant(_))
    }
}
