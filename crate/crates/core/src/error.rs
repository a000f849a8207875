use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two quadratic-extension operands live over different discriminants.
    #[error("quadratic extension context mismatch: sqrt({left}) vs sqrt({right})")]
    ContextMismatch { left: Box<Rational>, right: Box<Rational> },

    /// p^2 + 4q = 0, so the characteristic polynomial has a repeated root.
    #[error("degenerate discriminant: p^2 + 4q = 0 (repeated root)")]
    DegenerateDiscriminant,

    #[error("negative index {n} requires q != 0")]
    NegativeIndexUnsupported { n: i64 },

    #[error("index out of domain for {identity}: {reason}")]
    IndexOutOfDomain { identity: &'static str, reason: String },

    #[error("{identity} is only stated for the Fibonacci/Lucas presets")]
    ParamsOutOfScope { identity: &'static str },

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible in the quadratic extension")]
    NotInvertible,

    /// A value that must be rational kept a nonzero sqrt part.
    #[error("expected a rational value, found a nonzero sqrt component")]
    IrrationalResult,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
