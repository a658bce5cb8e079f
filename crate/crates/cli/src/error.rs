use thiserror::Error;

/// Failure of a CLI command. The variant decides the exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or configuration; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The command was valid but failed while running; exit code 3.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    /// Single-line, greppable rendering for stderr.
    pub fn line(&self) -> String {
        let (tag, msg) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Runtime(m) => ("runtime", m),
        };
        format!("error[{tag}]: {}", msg.replace('\n', " "))
    }

    /// Library errors raised while resolving a configuration.
    pub(crate) fn from_config(e: metaparts::Error) -> Self {
        CliError::Usage(e.to_string())
    }

    /// Library errors raised during a run.
    pub(crate) fn from_run(e: metaparts::Error) -> Self {
        CliError::Runtime(e.to_string())
    }

    pub(crate) fn io(what: &str, path: &std::path::Path, e: std::io::Error) -> Self {
        CliError::Runtime(format!("{what} {}: {e}", path.display()))
    }
}
