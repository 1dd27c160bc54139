use std::fmt;

use evictlab::game::GameError;
use evictlab::strategies::StrategyError;
use evictlab::GraphError;

/// Some check failed, or an I/O or other runtime error occurred.
pub const EXIT_FAILURE: u8 = 1;
/// The input could not be parsed.
pub const EXIT_PARSE: u8 = 2;
/// The input exceeds a size cap.
pub const EXIT_CAPACITY: u8 = 3;
/// A time limit expired.
pub const EXIT_TIMEOUT: u8 = 4;

/// An error paired with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    inner: anyhow::Error,
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn new(code: u8, inner: impl Into<anyhow::Error>) -> Self {
        CliError { code, inner: inner.into() }
    }

    pub fn parse(msg: impl fmt::Display) -> Self {
        Self::new(EXIT_PARSE, anyhow::anyhow!("{msg}"))
    }

    pub fn capacity(msg: impl fmt::Display) -> Self {
        Self::new(EXIT_CAPACITY, anyhow::anyhow!("{msg}"))
    }

    pub fn failure(msg: impl fmt::Display) -> Self {
        Self::new(EXIT_FAILURE, anyhow::anyhow!("{msg}"))
    }

    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn context(self, ctx: impl fmt::Display + Send + Sync + 'static) -> Self {
        CliError { code: self.code, inner: self.inner.context(ctx) }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.inner)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::TooManyVertices(_) => EXIT_CAPACITY,
            _ => EXIT_PARSE,
        };
        CliError::new(code, e)
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        let code = match e {
            GameError::Timeout => EXIT_TIMEOUT,
            GameError::StateSpaceTooLarge { .. } => EXIT_CAPACITY,
            GameError::InvalidGuardCount { .. } => EXIT_PARSE,
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e)
    }
}

impl From<StrategyError> for CliError {
    fn from(e: StrategyError) -> Self {
        let code = match e {
            StrategyError::TooLarge { .. } => EXIT_CAPACITY,
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_FAILURE, e)
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::new(EXIT_FAILURE, e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::new(EXIT_FAILURE, e)
    }
}
