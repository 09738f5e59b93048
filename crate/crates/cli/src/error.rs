use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or parameters; exit code 1.
    Usage(String),
    /// Error raised by the library.
    Numeric(conedet::Error),
    /// Some identity checks failed; exit code 2.
    VerifyFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numeric(conedet::Error::Domain { .. } | conedet::Error::Pole { .. }) => 1,
            CliError::Numeric(_) => 3,
            CliError::VerifyFailed { .. } => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Numeric(err) => write!(f, "{err}"),
            CliError::VerifyFailed { failed, total } => {
                write!(f, "{failed} of {total} identity checks failed")
            }
        }
    }
}

impl From<conedet::Error> for CliError {
    fn from(err: conedet::Error) -> Self {
        CliError::Numeric(err)
    }
}
