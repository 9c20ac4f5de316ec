use pcfquad::algebra::AlgebraError;
use pcfquad::dynamics::DynamicsError;
use pcfquad::mapping_scheme::SchemeError;
use pcfquad::moduli::ModuliError;
use pcfquad::monodromy::MonodromyError;
use pcfquad::trees::TreeError;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    NotCertified(String),
    #[error("{0} of {1} checks failed")]
    ChecksFailed(usize, usize),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Moduli(#[from] ModuliError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::Parse(_) => "ParseError",
            CliError::NotCertified(_) => "NotCertified",
            CliError::ChecksFailed(..) => "ChecksFailed",
            CliError::Scheme(e) => e.name(),
            CliError::Dynamics(e) => e.name(),
            CliError::Moduli(e) => e.name(),
            CliError::Tree(e) => e.name(),
            CliError::Monodromy(e) => e.name(),
            CliError::Algebra(e) => e.name(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        json!({"error": self.name(), "message": self.to_string()}).to_string()
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
