use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Solver(#[from] sepdp::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use sepdp::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Solver(e) if e.is_budget() => 3,
            CliError::Solver(
                E::Verification(_) | E::CharacteristicBound { .. } | E::ModelDoesNotWitness { .. },
            ) => 4,
            CliError::Solver(_) => 2,
        }
    }
}
