use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring order {0} exceeds the cap of {cap}", cap = crate::finring::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("ring axiom `{law}` fails at elements {witness:?}")]
    Axiom { law: &'static str, witness: Vec<usize> },

    #[error("module axiom `{law}` fails at {witness:?}")]
    ModuleAxiom { law: &'static str, witness: Vec<usize> },

    #[error("ideals or subsets belong to different rings")]
    RingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("`{0}` requires a proper ideal")]
    NotProper(&'static str),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("subset is not multiplicatively closed: {0}")]
    NotMultiplicativelyClosed(String),

    #[error("map is not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    /// Two independent routes to the same predicate disagreed.
    #[error("internal inconsistency in `{predicate}`: definition says {definition}, characterization says {characterization}")]
    Inconsistent { predicate: String, definition: bool, characterization: bool },

    #[error("witness for `{predicate}` does not re-validate: {detail}")]
    InvalidWitness { predicate: String, detail: String },

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("ideal is not representable in homogeneous form: {0}")]
    NonHomogeneous(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("unknown theorem check `{0}`")]
    UnknownTheorem(String),

    #[error("unknown search property `{0}`")]
    UnknownProperty(String),

    #[error("no examples registered")]
    EmptyRegistry,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("recipe error: {0}")]
    Recipe(String),
}
