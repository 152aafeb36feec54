use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("unknown group type `{0}`")]
    UnknownType(String),

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group order exceeds cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("elements belong to different Weyl groups")]
    MixedParents,

    #[error("invalid weight function: {0}")]
    InvalidWeights(String),

    #[error("{0} is not a minimal coset representative for the given subset")]
    NotMinimalRepresentative(String),

    #[error("invalid orbit label: {0}")]
    InvalidLabel(String),

    #[error("label `{given}` is not canonical; canonical form is `{canonical}`")]
    NonCanonicalLabel { given: String, canonical: String },

    #[error("label parse error: {0}")]
    LabelParse(String),

    #[error("orbit is unstable under {side} move {alpha}: {case}")]
    Unstable {
        side: &'static str,
        alpha: usize,
        case: String,
    },

    #[error("labels lie in different strata {0} and {1}")]
    StrataDiffer(String, String),

    #[error("split-model only: {0}")]
    NotSplit(String),

    #[error("posets are defined over different label sets")]
    LabelUniverseMismatch,

    #[error("matrix model: {0}")]
    MatrixModel(String),

    #[error("group description: {0}")]
    GroupSpec(String),
}
