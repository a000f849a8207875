//! Horadam sequences `w_n(a, b; p, q)` and bicomplex Horadam terms
//! `BH_n = w_n + w_{n+1} i + w_{n+2} j + w_{n+3} k`, with four
//! interchangeable evaluation strategies.

mod matrix;
mod series;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

pub use matrix::{matrix_power, matrix_power_counted, CompanionMatrix};
pub use series::{gf_expand, scalar_gf_expand, series_quotient, GeneratingFunction, SeriesCoeff};

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::quad_field::{self, QuadContext};
use crate::rational::Rational;

/// `(a, b; p, q)`: `w_0 = a`, `w_1 = b`, `w_n = p w_{n-1} + q w_{n-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HoradamParams {
    a: Rational,
    b: Rational,
    p: Rational,
    q: Rational,
}

impl HoradamParams {
    pub fn new(a: Rational, b: Rational, p: Rational, q: Rational) -> Self {
        HoradamParams { a, b, p, q }
    }

    pub fn from_ints(a: i64, b: i64, p: i64, q: i64) -> Self {
        Self::new(a.into(), b.into(), p.into(), q.into())
    }

    pub fn fibonacci() -> Self {
        Self::from_ints(0, 1, 1, 1)
    }

    pub fn lucas() -> Self {
        Self::from_ints(2, 1, 1, 1)
    }

    pub fn pell() -> Self {
        Self::from_ints(0, 1, 2, 1)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn context(&self) -> QuadContext {
        QuadContext::new(self.p.clone(), self.q.clone())
    }

    pub fn delta(&self) -> Rational {
        self.context().delta()
    }

    /// The `(0, 1; p, q)` sequence `U_n` sharing this recurrence.
    pub fn fundamental(&self) -> Self {
        Self::new(Rational::zero(), Rational::one(), self.p.clone(), self.q.clone())
    }

    /// Parameters of `v_k = w_{-k}`: `(a, (b - p a)/q; -p/q, 1/q)`.
    pub fn reflected(&self) -> Option<Self> {
        let q_inv = self.q.recip()?;
        Some(Self::new(
            self.a.clone(),
            (&self.b - &self.p * &self.a) * &q_inv,
            -(&self.p * &q_inv),
            q_inv,
        ))
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Fibonacci,
    Lucas,
    Pell,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fibonacci, Preset::Lucas, Preset::Pell];

    pub fn params(self) -> HoradamParams {
        match self {
            Preset::Fibonacci => HoradamParams::fibonacci(),
            Preset::Lucas => HoradamParams::lucas(),
            Preset::Pell => HoradamParams::pell(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fibonacci => "fibonacci",
            Preset::Lucas => "lucas",
            Preset::Pell => "pell",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                what: "preset",
                input: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalStrategy {
    Iterative,
    MatrixPower,
    Binet,
    GeneratingFunction,
}

impl EvalStrategy {
    pub const ALL: [EvalStrategy; 4] = [
        EvalStrategy::Iterative,
        EvalStrategy::MatrixPower,
        EvalStrategy::Binet,
        EvalStrategy::GeneratingFunction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalStrategy::Iterative => "iterative",
            EvalStrategy::MatrixPower => "matrix",
            EvalStrategy::Binet => "binet",
            EvalStrategy::GeneratingFunction => "gf",
        }
    }
}

impl fmt::Display for EvalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EvalStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "iterative" => Ok(EvalStrategy::Iterative),
            "matrix" | "matrix-power" => Ok(EvalStrategy::MatrixPower),
            "binet" => Ok(EvalStrategy::Binet),
            "gf" | "generating-function" => Ok(EvalStrategy::GeneratingFunction),
            _ => Err(Error::Parse {
                what: "strategy",
                input: s.to_string(),
            }),
        }
    }
}

/// Work done by one evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    /// Multiplications in the strategy's coefficient ring (rationals, or
    /// quadratic-extension elements for Binet).
    pub ring_muls: u64,
    /// 2x2 matrix products (MatrixPower only).
    pub matrix_products: u64,
}

/// `(BH_0, BH_1)` from the closed initial-value formulas.
pub fn bh_initial(params: &HoradamParams) -> (Bicomplex<Rational>, Bicomplex<Rational>) {
    let (a, b, p, q) = (&params.a, &params.b, &params.p, &params.q);
    let two = Rational::from(2);
    let p2 = p * p;
    let pq = p * q;
    // w_2 = pb + qa
    let w2 = p * b + q * a;
    // w_3 = p^2 b + pqa + qb
    let w3 = &p2 * b + &pq * a + q * b;
    // w_4 = p^3 b + p^2 q a + 2pqb + q^2 a
    let w4 = &p2 * p * b + &p2 * q * a + &two * &pq * b + q * q * a;
    (
        Bicomplex::new(a.clone(), b.clone(), w2.clone(), w3.clone()),
        Bicomplex::new(b.clone(), w2, w3, w4),
    )
}

fn iterate_pair(params: &HoradamParams, n: u64, ops: &mut OpCount) -> (Rational, Rational) {
    let mut w0 = params.a.clone();
    let mut w1 = params.b.clone();
    for _ in 0..n {
        let next = &params.p * &w1 + &params.q * &w0;
        w0 = std::mem::replace(&mut w1, next);
    }
    ops.ring_muls += 2 * n;
    (w0, w1)
}

fn step(params: &HoradamParams, w0: &Rational, w1: &Rational, ops: &mut OpCount) -> Rational {
    ops.ring_muls += 2;
    &params.p * w1 + &params.q * w0
}

fn gf_muls(params: &HoradamParams, order: u64, width: u64) -> u64 {
    // Each coefficient: one scaling per nonzero denominator term in reach,
    // plus the division by the constant term.
    let terms = [params.p.is_zero(), params.q.is_zero()]
        .iter()
        .enumerate()
        .filter(|(_, z)| !**z)
        .map(|(j, _)| order.saturating_sub(j as u64))
        .sum::<u64>();
    width * (terms + order + 1)
}

fn term_nonneg(n: u64, params: &HoradamParams, strategy: EvalStrategy, ops: &mut OpCount) -> Result<Rational> {
    match strategy {
        EvalStrategy::Iterative => Ok(iterate_pair(params, n, ops).0),
        EvalStrategy::MatrixPower => {
            let (m, products) = matrix_power_counted(params, n);
            ops.matrix_products += products;
            ops.ring_muls += 8 * products + 2;
            let [_, [u_n, q_u_prev]] = &m.entries;
            Ok(u_n * &params.b + q_u_prev * &params.a)
        }
        EvalStrategy::Binet => {
            let value = quad_field::binet_scalar(n, params)?;
            ops.ring_muls += 2 * quad_field::power_mul_count(n) + 8;
            Ok(value)
        }
        EvalStrategy::GeneratingFunction => {
            ops.ring_muls += gf_muls(params, n, 1);
            Ok(scalar_gf_expand(params, n as usize).pop().expect("nonempty expansion"))
        }
    }
}

/// `w_n` with the chosen strategy. Negative indices evaluate the reflected
/// sequence `w_{-k}` with the same strategy and need `q != 0`.
pub fn scalar_term(n: i64, params: &HoradamParams, strategy: EvalStrategy) -> Result<Rational> {
    scalar_term_counted(n, params, strategy, &mut OpCount::default())
}

fn scalar_term_counted(n: i64, params: &HoradamParams, strategy: EvalStrategy, ops: &mut OpCount) -> Result<Rational> {
    if n >= 0 {
        return term_nonneg(n as u64, params, strategy, ops);
    }
    let reflected = params.reflected().ok_or(Error::NegativeIndexUnsupported { n })?;
    term_nonneg(n.unsigned_abs(), &reflected, strategy, ops)
}

fn bh_nonneg(n: u64, params: &HoradamParams, strategy: EvalStrategy, ops: &mut OpCount) -> Result<Bicomplex<Rational>> {
    match strategy {
        EvalStrategy::Iterative => {
            let (w0, w1) = iterate_pair(params, n, ops);
            let w2 = step(params, &w0, &w1, ops);
            let w3 = step(params, &w1, &w2, ops);
            Ok(Bicomplex::new(w0, w1, w2, w3))
        }
        EvalStrategy::MatrixPower => {
            // [BH_{n+1}, BH_n]^T = M^n [BH_1, BH_0]^T.
            let (m, products) = matrix_power_counted(params, n);
            ops.matrix_products += products;
            ops.ring_muls += 8 * products + 8;
            let (bh0, bh1) = bh_initial(params);
            let [_, [u_n, q_u_prev]] = &m.entries;
            Ok(bh1.scale(u_n).add_ref(&bh0.scale(q_u_prev)))
        }
        EvalStrategy::Binet => {
            let (value, muls) = quad_field::binet_bh_counted(n, params)?;
            ops.ring_muls += muls;
            Ok(value)
        }
        EvalStrategy::GeneratingFunction => {
            ops.ring_muls += gf_muls(params, n, 4);
            Ok(gf_expand(params, n as usize).pop().expect("nonempty expansion"))
        }
    }
}

/// `BH_n` with the chosen strategy.
pub fn bh_term(n: i64, params: &HoradamParams, strategy: EvalStrategy) -> Result<Bicomplex<Rational>> {
    bh_term_counted(n, params, strategy).map(|(value, _)| value)
}

pub fn bh_term_counted(
    n: i64,
    params: &HoradamParams,
    strategy: EvalStrategy,
) -> Result<(Bicomplex<Rational>, OpCount)> {
    let mut ops = OpCount::default();
    let value = if n >= 0 {
        bh_nonneg(n as u64, params, strategy, &mut ops)?
    } else {
        let mut comps = Vec::with_capacity(4);
        for m in n..n + 4 {
            comps.push(scalar_term_counted(m, params, strategy, &mut ops)?);
        }
        let [w, x, y, z]: [Rational; 4] = comps.try_into().expect("four components");
        Bicomplex::new(w, x, y, z)
    };
    Ok((value, ops))
}

/// One index where two strategies returned different values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: i64,
    pub reference: EvalStrategy,
    pub other: EvalStrategy,
    pub reference_value: Bicomplex<Rational>,
    pub other_value: Bicomplex<Rational>,
}

/// Evaluates `BH_n` with every strategy for each `n` in `indices` and
/// collects disagreements against the first strategy, in index order.
/// Binet is skipped when the discriminant vanishes.
pub fn strategy_disagreements(
    params: &HoradamParams,
    indices: &[i64],
    strategies: &[EvalStrategy],
    exec: Execution,
) -> Result<Vec<Disagreement>> {
    let skip_binet = params.delta().is_zero();
    let active: Vec<EvalStrategy> = strategies
        .iter()
        .copied()
        .filter(|s| !(skip_binet && *s == EvalStrategy::Binet))
        .collect();
    let Some((&reference, others)) = active.split_first() else {
        return Ok(Vec::new());
    };
    let per_index = exec.map_ordered(indices, |&n| -> Result<Vec<Disagreement>> {
        let base = bh_term(n, params, reference)?;
        let mut found = Vec::new();
        for &other in others {
            let value = bh_term(n, params, other)?;
            if value != base {
                found.push(Disagreement {
                    n,
                    reference,
                    other,
                    reference_value: base.clone(),
                    other_value: value,
                });
            }
        }
        Ok(found)
    });
    let mut out = Vec::new();
    for r in per_index {
        out.extend(r?);
    }
    Ok(out)
}
