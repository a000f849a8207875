//! Exact bicomplex arithmetic and bicomplex Horadam sequences.
//!
//! * [`rational`]: arbitrary-precision rationals.
//! * [`bicomplex`]: the commutative four-dimensional algebra with
//!   `i^2 = j^2 = -1`, `k = ij`, `k^2 = 1`, its involutions, norms and
//!   idempotent decomposition.
//! * [`quad_field`]: the quadratic extension holding the characteristic
//!   roots, and the Binet closed form.
//! * [`horadam`]: Horadam terms under four evaluation strategies.
//! * [`identities`]: closed-form identities checked against direct
//!   evaluation over index sweeps.

pub mod bicomplex;
pub mod error;
pub mod exec;
pub mod horadam;
pub mod identities;
pub mod quad_field;
pub mod rational;

pub use bicomplex::{Axis, Bicomplex, ComplexPair, IdempotentParts, Scalar};
pub use error::{Error, Result};
pub use exec::Execution;
pub use horadam::{
    bh_initial, bh_term, bh_term_counted, gf_expand, matrix_power, matrix_power_counted, scalar_term, CompanionMatrix,
    EvalStrategy, HoradamParams, OpCount, Preset,
};
pub use identities::{evaluate_identity, sweep_verify, IdentityId, IdentityReport, Verdict};
pub use quad_field::{QuadContext, QuadExt};
pub use rational::Rational;
