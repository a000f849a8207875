//! Power-series expansion of rational generating functions by formal long
//! division.

use num_traits::Zero;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{bh_initial, HoradamParams};

/// Coefficients usable in a series numerator: a module over the rationals.
pub trait SeriesCoeff: Clone {
    fn zero_coeff() -> Self;
    fn sub_coeff(&self, rhs: &Self) -> Self;
    fn scale_coeff(&self, c: &Rational) -> Self;
}

impl SeriesCoeff for Rational {
    fn zero_coeff() -> Self {
        <Rational as Zero>::zero()
    }
    fn sub_coeff(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn scale_coeff(&self, c: &Rational) -> Self {
        self * c
    }
}

impl SeriesCoeff for Bicomplex<Rational> {
    fn zero_coeff() -> Self {
        Bicomplex::zero()
    }
    fn sub_coeff(&self, rhs: &Self) -> Self {
        self.sub_ref(rhs)
    }
    fn scale_coeff(&self, c: &Rational) -> Self {
        Bicomplex::scale(self, c)
    }
}

/// First `order + 1` coefficients of `numer(t) / denom(t)`.
///
/// Schoolbook division: `c_k = (N_k - sum_{j=1..k} D_j c_{k-j}) / D_0`.
/// Fails when `D_0 = 0` (no power-series expansion).
pub fn series_quotient<C: SeriesCoeff>(numer: &[C], denom: &[Rational], order: usize) -> Result<Vec<C>> {
    let lead_inv = denom.first().and_then(Rational::recip).ok_or(Error::DivisionByZero)?;
    let mut out: Vec<C> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = numer.get(k).cloned().unwrap_or_else(C::zero_coeff);
        for (j, d) in denom.iter().enumerate().skip(1).take(k) {
            if !d.is_zero() {
                acc = acc.sub_coeff(&out[k - j].scale_coeff(d));
            }
        }
        out.push(acc.scale_coeff(&lead_inv));
    }
    Ok(out)
}

/// Generating function `(N_0 + N_1 t) / (1 - p t - q t^2)` of a bicomplex
/// Horadam sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunction {
    /// `[BH_0, BH_1 - p BH_0]`.
    pub numerator: [Bicomplex<Rational>; 2],
    /// `[1, -p, -q]`.
    pub denominator: [Rational; 3],
}

impl GeneratingFunction {
    /// Numerator from the closed initial-value formulas, not from iterating.
    pub fn for_params(params: &HoradamParams) -> Self {
        let (bh0, bh1) = bh_initial(params);
        let linear = bh1.sub_ref(&bh0.scale(params.p()));
        GeneratingFunction {
            numerator: [bh0, linear],
            denominator: [Rational::from(1), -params.p(), -params.q()],
        }
    }

    pub fn expand(&self, order: usize) -> Vec<Bicomplex<Rational>> {
        series_quotient(&self.numerator, &self.denominator, order).expect("denominator has unit constant term")
    }
}

/// Coefficients `c_0..=c_order` of the bicomplex Horadam generating function.
pub fn gf_expand(params: &HoradamParams, order: usize) -> Vec<Bicomplex<Rational>> {
    GeneratingFunction::for_params(params).expand(order)
}

/// Scalar `w_0..=w_order` from `(a + (b - p a) t) / (1 - p t - q t^2)`.
pub fn scalar_gf_expand(params: &HoradamParams, order: usize) -> Vec<Rational> {
    let numer = [params.a().clone(), params.b() - params.p() * params.a()];
    let denom = [Rational::from(1), -params.p(), -params.q()];
    series_quotient(&numer, &denom, order).expect("denominator has unit constant term")
}
