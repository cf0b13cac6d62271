use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("size exceeded: more than {cap} vertices")]
    SizeExceeded { cap: usize },
    #[error("dot syntax error at line {line}: {message}")]
    DotSyntax { line: usize, message: String },
}
