use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Parse = 2,
    Invariant = 3,
    Reference = 4,
    Singular = 5,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn label(self) -> &'static str {
        match self {
            ExitKind::Parse => "parse_error",
            ExitKind::Invariant => "invariant_violation",
            ExitKind::Reference => "reference_error",
            ExitKind::Singular => "singular_metric",
        }
    }
}

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
    /// Location of the offending value inside the input, e.g. `D[0][1]`.
    pub path: Option<String>,
}

impl CliError {
    pub fn new(kind: ExitKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
            path: None,
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(ExitKind::Parse, message)
    }

    pub fn reference(message: impl Into<String>) -> Self {
        Self::new(ExitKind::Reference, message)
    }

    pub fn at(mut self, path: impl Into<String>) -> Self {
        self.path = Some(path.into());
        self
    }

    /// Classifies a library error, using `field` to name the input it came from.
    pub fn from_core(err: cmgeom::Error, field: &str) -> Self {
        use cmgeom::Error as E;
        let message = err.to_string();
        match err {
            E::DimensionMismatch { .. } => Self::reference(message).at(field),
            E::SingularCm => Self::new(ExitKind::Singular, message),
            E::Asymmetric { row, col } => {
                Self::new(ExitKind::Invariant, message).at(format!("{field}[{row}][{col}]"))
            }
            E::NonHollowDiagonal { index, .. } => {
                Self::new(ExitKind::Invariant, message).at(format!("{field}[{index}][{index}]"))
            }
            E::ColumnSum { column, .. } => {
                Self::new(ExitKind::Invariant, message).at(format!("{field}[*][{column}]"))
            }
            E::NonFinite { index } => {
                Self::new(ExitKind::Invariant, message).at(format!("{field}[{index}]"))
            }
            E::NotSquare { .. } | E::Empty => Self::parse(message).at(field),
            _ => Self::new(ExitKind::Invariant, message).at(field),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
