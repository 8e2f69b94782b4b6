use thiserror::Error;

/// Errors produced by graph construction and the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: out-of-range vertices, self-loops, bad parameters.
    #[error("input error: {0}")]
    Input(String),
    /// A search exceeded its configured cap. `partial` is the amount of work
    /// (group elements, subsets, backtrack nodes) done before giving up.
    #[error("resource limit exceeded: {what} (cap {cap}, reached {partial})")]
    Resource {
        what: &'static str,
        cap: u64,
        partial: u64,
    },
    /// The input is well formed but lies outside the hypotheses a result
    /// is stated for, e.g. a graph with isolated vertices.
    #[error("out of scope: {0}")]
    Scope(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
