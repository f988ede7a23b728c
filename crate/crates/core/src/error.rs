use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {0} vertices, capacity is {cap}", cap = crate::CAPACITY)]
    TooManyVertices(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("separator budget exceeded: more than {limit} minimal separators")]
    SeparatorBudget { limit: usize },

    #[error("potential maximal clique budget exceeded: more than {limit} PMCs")]
    PmcBudget { limit: usize },

    #[error("complement cannot be connected: input graph is disconnected")]
    DisconnectedInput,

    #[error("no feasible solution")]
    Infeasible,

    #[error("model does not witness {kind} {set}")]
    ModelDoesNotWitness { kind: &'static str, set: String },

    #[error("invalid arc model: {0}")]
    InvalidArcModel(String),

    #[error("clique partition of {set} needs {needed} cliques, limit is {limit}")]
    CliqueWidth {
        set: String,
        needed: usize,
        limit: usize,
    },

    #[error("missing clique partition for {0}")]
    MissingCliquePartition(String),

    #[error("characteristic {parts} parts exceed {cliques} cliques on {set}")]
    CharacteristicBound {
        set: String,
        parts: usize,
        cliques: usize,
    },

    #[error("instance too large for exhaustive search: {0}")]
    TooLargeForOracle(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::SeparatorBudget { .. } | Error::PmcBudget { .. }
        )
    }
}
