use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::horadam::{bh_term, gf_expand, scalar_term, series_quotient, EvalStrategy, HoradamParams};
use crate::quad_field::{self, alpha_beta_product};
use crate::rational::Rational;

use super::{IdentityId, Scope};

/// Index tuple: `n`, plus `m` or `r` for two-index identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indices {
    pub n: i64,
    pub second: Option<i64>,
}

impl Indices {
    pub fn single(n: i64) -> Self {
        Indices { n, second: None }
    }

    pub fn pair(n: i64, second: i64) -> Self {
        Indices {
            n,
            second: Some(second),
        }
    }
}

/// Both sides of an identity at one index tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub lhs: Bicomplex<Rational>,
    pub rhs: Bicomplex<Rational>,
    /// For the Lucas Catalan/Cassini statements: the general Horadam
    /// closed form specialized to the Lucas preset, a third opinion.
    pub reference: Option<Bicomplex<Rational>>,
}

impl Evaluation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn r(v: i64) -> Rational {
    Rational::from(v)
}

fn out_of_domain(id: IdentityId, reason: impl Into<String>) -> Error {
    Error::IndexOutOfDomain {
        identity: id.name(),
        reason: reason.into(),
    }
}

fn check_domain(id: IdentityId, idx: Indices) -> Result<()> {
    if idx.n < id.min_n() {
        return Err(out_of_domain(id, format!("n = {} < {}", idx.n, id.min_n())));
    }
    match (id.second_index(), idx.second) {
        (None, None) => Ok(()),
        (None, Some(_)) => Err(out_of_domain(id, "takes a single index n")),
        (Some(kind), None) => Err(out_of_domain(id, format!("missing index {}", kind.name()))),
        (Some(kind), Some(s)) => {
            if s < id.min_second() {
                return Err(out_of_domain(
                    id,
                    format!("{} = {} < {}", kind.name(), s, id.min_second()),
                ));
            }
            if id.requires_n_at_least_second() && idx.n < s {
                return Err(out_of_domain(id, format!("n = {} < r = {}", idx.n, s)));
            }
            Ok(())
        }
    }
}

fn check_scope(id: IdentityId, params: &HoradamParams) -> Result<()> {
    if id.scope() == Scope::FibonacciLucas && *params != HoradamParams::lucas() && *params != HoradamParams::fibonacci()
    {
        return Err(Error::ParamsOutOfScope { identity: id.name() });
    }
    Ok(())
}

// Left-hand path: the recurrence, run forward.

fn iterated(n: i64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    bh_term(n, params, EvalStrategy::Iterative)
}

/// `BH_0..=BH_upto` in one forward pass.
fn iterated_run(params: &HoradamParams, upto: i64) -> Vec<Bicomplex<Rational>> {
    let mut out = Vec::with_capacity(upto.max(0) as usize + 1);
    let first = iterated(0, params).expect("non-negative index");
    out.push(first);
    if upto >= 1 {
        out.push(iterated(1, params).expect("non-negative index"));
    }
    for k in 2..=upto as usize {
        let next = out[k - 1].scale(params.p()).add_ref(&out[k - 2].scale(params.q()));
        out.push(next);
    }
    out
}

fn iterated_scalar(n: i64, params: &HoradamParams) -> Result<Rational> {
    scalar_term(n, params, EvalStrategy::Iterative)
}

fn catalan_lhs(n: i64, r: i64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    let bn = iterated(n, params)?;
    let plus = iterated(n + r, params)?;
    let minus = iterated(n - r, params)?;
    Ok(bn.square().sub_ref(&plus.mul_ref(&minus)))
}

// Right-hand path: closed forms only.

fn closed(n: i64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    match n {
        n if n >= 0 => quad_field::binet_bh(n as u64, params),
        n => bh_term(n, params, EvalStrategy::Binet),
    }
}

fn closed_fib(n: i64) -> Result<Rational> {
    scalar_term(n, &HoradamParams::fibonacci(), EvalStrategy::Binet)
}

fn two_j_plus_k() -> Bicomplex<Rational> {
    Bicomplex::from_ints(0, 0, 2, 1)
}

/// `AB ul(alpha) ul(beta) (-q)^{n-r} U_r^2`, using
/// `(alpha^r - beta^r)^2 / (p^2 + 4q) = U_r^2` so every step is rational.
/// Valid for a vanishing discriminant as well.
pub fn catalan_rhs(n: i64, r: i64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    if r < 0 || n < r {
        return Err(out_of_domain(
            IdentityId::HoradamCatalan,
            format!("need n >= r >= 0, got n = {n}, r = {r}"),
        ));
    }
    let u_r = scalar_term(r, &params.fundamental(), EvalStrategy::MatrixPower)?;
    let factor = quad_field::weight_product(params) * (-params.q()).pow((n - r) as u64) * &u_r * &u_r;
    Ok(alpha_beta_product(&params.context()).scale(&factor))
}

/// `AB ul(alpha) ul(beta) (-q)^{n-1}`.
pub fn cassini_rhs(n: i64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    if n < 1 {
        return Err(out_of_domain(
            IdentityId::HoradamCassini,
            format!("need n >= 1, got n = {n}"),
        ));
    }
    let factor = quad_field::weight_product(params) * (-params.q()).pow((n - 1) as u64);
    Ok(alpha_beta_product(&params.context()).scale(&factor))
}

/// The stated Lucas Catalan right side `15 (-1)^{n-r} f_r^2 (2j + k)`.
pub fn lucas_catalan_stated_rhs(n: i64, r: i64) -> Result<Bicomplex<Rational>> {
    if r < 1 || n < r {
        return Err(out_of_domain(
            IdentityId::LucasCatalan,
            format!("need n >= r >= 1, got n = {n}, r = {r}"),
        ));
    }
    let f_r = closed_fib(r)?;
    let factor = Rational::from(15) * Rational::sign_power(n - r) * &f_r * &f_r;
    Ok(two_j_plus_k().scale(&factor))
}

/// The stated Lucas Cassini right side `15 (-1)^{n-1} (2j + k)`.
pub fn lucas_cassini_stated_rhs(n: i64) -> Result<Bicomplex<Rational>> {
    if n < 1 {
        return Err(out_of_domain(
            IdentityId::LucasCassini,
            format!("need n >= 1, got n = {n}"),
        ));
    }
    Ok(two_j_plus_k().scale(&(r(15) * Rational::sign_power(n - 1))))
}

/// `(k_n k_m + k_{n+1} k_{m+1}, 5 f_{n+m+1})`, each side on its own path.
pub fn scalar_lucas_fib_lemma(n: i64, m: i64) -> Result<(Rational, Rational)> {
    if n < 0 || m < 0 {
        return Err(out_of_domain(IdentityId::ScalarLucasLemma, "need n, m >= 0"));
    }
    let lucas = HoradamParams::lucas();
    let k = |i| iterated_scalar(i, &lucas);
    let lhs = k(n)? * k(m)? + k(n + 1)? * k(m + 1)?;
    let rhs = r(5) * closed_fib(n + m + 1)?;
    Ok((lhs, rhs))
}

/// Evaluates both sides of `id` at `idx`.
///
/// Fibonacci/Lucas identities accept only those presets for `params` and
/// evaluate on the presets themselves.
pub fn evaluate_identity(id: IdentityId, idx: Indices, params: &HoradamParams) -> Result<Evaluation> {
    check_scope(id, params)?;
    check_domain(id, idx)?;
    let fib = HoradamParams::fibonacci();
    let lucas = HoradamParams::lucas();
    let n = idx.n;
    let second = idx.second.unwrap_or(0);
    let plain = |lhs, rhs| Evaluation {
        lhs,
        rhs,
        reference: None,
    };

    let eval = match id {
        IdentityId::BfPlusBl => plain(
            iterated(n, &fib)?.add_ref(&iterated(n, &lucas)?),
            closed(n + 1, &fib)?.scale(&r(2)),
        ),
        IdentityId::BlNeighbors => plain(
            iterated(n - 1, &lucas)?.add_ref(&iterated(n + 1, &lucas)?),
            closed(n, &fib)?.scale(&r(5)),
        ),
        IdentityId::SumOdd => {
            let run = iterated_run(&lucas, 2 * n);
            let lhs = (1..=n).fold(Bicomplex::zero(), |acc, i| acc.add_ref(&run[(2 * i - 1) as usize]));
            plain(lhs, closed(2 * n, &lucas)?.sub_ref(&closed(0, &lucas)?))
        }
        IdentityId::SumAll => {
            let run = iterated_run(&lucas, n);
            let lhs = (1..=n).fold(Bicomplex::zero(), |acc, i| acc.add_ref(&run[i as usize]));
            plain(lhs, closed(n + 2, &lucas)?.sub_ref(&closed(2, &lucas)?))
        }
        IdentityId::SumEven => {
            let run = iterated_run(&lucas, 2 * n);
            let lhs = (1..=n).fold(Bicomplex::zero(), |acc, i| acc.add_ref(&run[(2 * i) as usize]));
            plain(lhs, closed(2 * n + 1, &lucas)?.sub_ref(&closed(1, &lucas)?))
        }
        IdentityId::FiveBfSq => {
            let lhs = iterated(n, &fib)?
                .square()
                .scale(&r(5))
                .sub_ref(&iterated(n, &lucas)?.square());
            let rhs = two_j_plus_k().scale(&(r(12) * Rational::sign_power(n + 1)));
            plain(lhs, rhs)
        }
        IdentityId::SumSq => {
            let run = iterated_run(&lucas, n);
            let lhs = (1..=n).fold(Bicomplex::zero(), |acc, i| acc.add_ref(&run[i as usize].square()));
            let constant = Bicomplex::from_ints(5, -10, -12, 9);
            let rhs = closed(n, &lucas)?.mul_ref(&closed(n + 1, &lucas)?).sub_ref(&constant);
            plain(lhs, rhs)
        }
        IdentityId::ProductSum => {
            let m = second;
            let lhs = iterated(n, &lucas)?
                .mul_ref(&iterated(m, &lucas)?)
                .add_ref(&iterated(n + 1, &lucas)?.mul_ref(&iterated(m + 1, &lucas)?));
            let s = n + m;
            let two = r(2);
            let f = closed_fib;
            let tail = Bicomplex::new(
                &two * f(s + 4)? - f(s + 1)?,
                -(&two * f(s + 6)?),
                -(&two * f(s + 5)?),
                &two * f(s + 4)?,
            );
            let rhs = closed(s + 1, &fib)?.scale(&two).add_ref(&tail).scale(&r(5));
            plain(lhs, rhs)
        }
        IdentityId::LucasGf => {
            let numer = [Bicomplex::from_ints(2, 1, 3, 4), Bicomplex::from_ints(-1, 2, 1, 3)];
            let denom = [r(1), r(-1), r(-1)];
            let coeffs = series_quotient(&numer, &denom, n as usize)?;
            plain(iterated(n, &lucas)?, coeffs[n as usize].clone())
        }
        IdentityId::LucasCatalan => Evaluation {
            lhs: catalan_lhs(n, second, &lucas)?,
            rhs: lucas_catalan_stated_rhs(n, second)?,
            reference: Some(catalan_rhs(n, second, &lucas)?),
        },
        IdentityId::LucasCassini => Evaluation {
            lhs: catalan_lhs(n, 1, &lucas)?,
            rhs: lucas_cassini_stated_rhs(n)?,
            reference: Some(cassini_rhs(n, &lucas)?),
        },
        IdentityId::HoradamGf => {
            let coeffs = gf_expand(params, n as usize);
            plain(iterated(n, params)?, coeffs[n as usize].clone())
        }
        IdentityId::HoradamCatalan => plain(catalan_lhs(n, second, params)?, catalan_rhs(n, second, params)?),
        IdentityId::HoradamCassini => plain(catalan_lhs(n, 1, params)?, cassini_rhs(n, params)?),
        IdentityId::ScalarLucasLemma => {
            let (lhs, rhs) = scalar_lucas_fib_lemma(n, second)?;
            plain(Bicomplex::from_scalar(lhs), Bicomplex::from_scalar(rhs))
        }
    };
    Ok(eval)
}
