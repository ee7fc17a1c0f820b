use std::fmt;

/// Failures of a command, split by exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    UnknownReference(String),
    Lib(tightcomp::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Parse(_) => "ParseError",
            CliError::UnknownReference(_) => "UnknownReference",
            CliError::Lib(e) => e.kind(),
        }
    }

    /// 2 for input that could not be taken in or a search that hit its cap, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(tightcomp::Error::SizeLimit(_)) | CliError::Lib(tightcomp::Error::UnknownReference(_)) => 2,
            CliError::Lib(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Parse(s) | CliError::UnknownReference(s) => write!(f, "{s}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tightcomp::Error> for CliError {
    fn from(e: tightcomp::Error) -> Self {
        CliError::Lib(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::UnknownReference("x".into()).exit_code(), 2);
        assert_eq!(CliError::Lib(tightcomp::Error::SizeLimit(3)).exit_code(), 2);
        assert_eq!(CliError::Lib(tightcomp::Error::MissingComposite("f".into(), "g".into())).exit_code(), 1);
        assert_eq!(CliError::Parse("x".into()).kind(), "ParseError");
    }
}
