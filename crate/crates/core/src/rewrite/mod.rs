//! Noncommutative polynomials and rewriting modulo relations.

pub mod parse;
pub mod system;
pub mod word;

pub use parse::parse_poly;
pub use system::{independent, orient, proportional, RewriteRule, RewriteSystem};
pub use word::{NCPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("reduction exceeded the step budget of {0}")]
    StepBudgetExceeded(usize),
    #[error("relation cannot be oriented: {0}")]
    OrderViolation(String),
    #[error("confluence certified to degree {certified}, degree {needed} needed")]
    InsufficientConfluence { needed: usize, certified: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
