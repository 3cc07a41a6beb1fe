use std::fmt;

/// Broad failure class; each maps to a fixed process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// A module rejected the input or found no applicable structure result.
    Compute,
    /// Malformed command line.
    Usage,
    /// Unparseable or schema-violating input document.
    Input,
    /// File could not be read.
    Io,
}

impl Category {
    pub fn exit_code(self) -> i32 {
        match self {
            Category::Compute => 1,
            Category::Usage => 2,
            Category::Input => 3,
            Category::Io => 4,
        }
    }
}

/// Error surfaced in a report, with a stable machine-readable code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub category: Category,
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(category: Category, code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            category,
            code,
            message: message.into(),
        }
    }

    pub fn schema(message: impl Into<String>) -> Self {
        Self::new(Category::Input, "schema", message)
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Category::Usage, "usage", message)
    }
}

impl From<relchow::Error> for CliError {
    fn from(e: relchow::Error) -> Self {
        CliError::new(Category::Compute, e.code(), e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}
