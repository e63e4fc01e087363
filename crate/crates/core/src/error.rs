use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside its domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },
    #[error("parameters {0} lie outside the admissible region")]
    Region(String),
    #[error("root finding failed: {0}")]
    Bracket(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown chain `{0}`")]
    UnknownChain(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("unexpected parameter `{0}`")]
    UnexpectedParam(String),
    #[error("precondition `{condition}` of {claim} does not hold")]
    Precondition { claim: String, condition: String },
    #[error("claim {claim} has no sharp boundary on `{param}`")]
    NoBoundary { claim: String, param: String },
    #[error("invalid sampling spec: {0}")]
    SampleSpec(String),
}

pub(crate) fn domain(what: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        what,
        value,
        expected,
    }
}
