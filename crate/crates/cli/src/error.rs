use equivar::equivariant::EngineError;
use equivar::formulas::FormulaError;
use equivar::simplicial::ComplexError;
use equivar::smith::SmithError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// An error with a stable machine-readable code and the exit status it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    fn new(code: &str, message: impl Into<String>, exit: i32) -> Self {
        CliError {
            code: code.to_string(),
            message: message.into(),
            exit,
        }
    }

    pub fn parse(code: &str, message: impl Into<String>) -> Self {
        Self::new(code, message, EXIT_PARSE)
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        let exit = match e {
            ComplexError::VertexOutOfRange { .. }
            | ComplexError::InvalidSimplex { .. }
            | ComplexError::SimplexCapExceeded { .. }
            | ComplexError::InvalidInvolution(_) => EXIT_PARSE,
            ComplexError::NonRegularAction(_) => EXIT_HYPOTHESIS,
            ComplexError::NotSimplicial(_)
            | ComplexError::NotASubcomplex(_)
            | ComplexError::Linalg(_) => EXIT_INVARIANT,
        };
        Self::new(e.code(), e.to_string(), exit)
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Complex(c) => c.into(),
            EngineError::NotAnInvolution => Self::new(e.code(), e.to_string(), EXIT_INVARIANT),
            EngineError::WindowTooSmall { .. } | EngineError::EmptyFixedSet => {
                Self::new(e.code(), e.to_string(), EXIT_HYPOTHESIS)
            }
        }
    }
}

impl From<SmithError> for CliError {
    fn from(e: SmithError) -> Self {
        match e {
            SmithError::Complex(c) => c.into(),
            SmithError::Invariant(_) => Self::new(e.code(), e.to_string(), EXIT_INVARIANT),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Engine(inner) => inner.into(),
            FormulaError::Complex(inner) => inner.into(),
            FormulaError::RouteMismatch { .. } | FormulaError::EngineMismatch(_) => {
                Self::new(e.code(), e.to_string(), EXIT_INVARIANT)
            }
            FormulaError::Hypothesis(_)
            | FormulaError::Inconsistent(_)
            | FormulaError::Constraint(_)
            | FormulaError::Inadmissible(_)
            | FormulaError::Unproven(_) => Self::new(e.code(), e.to_string(), EXIT_HYPOTHESIS),
        }
    }
}
