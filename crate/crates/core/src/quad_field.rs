//! Exact arithmetic in `Q(sqrt(D))`, `D = p^2 + 4q`, holding the roots
//! `alpha, beta = (p +- sqrt(D))/2` of `t^2 - p t - q`.
//!
//! `sqrt(D)` stays symbolic; elements are pairs `u + v sqrt(D)`. Nothing
//! requires `D` to be positive or a non-square: the formal ring
//! `Q[s]/(s^2 - D)` is enough for every identity evaluated here. When `D`
//! is a rational square the ring has zero divisors, but `alpha - beta =
//! sqrt(D)` stays invertible as long as `D != 0`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bicomplex::{Bicomplex, Scalar};
use crate::error::{Error, Result};
use crate::horadam::HoradamParams;
use crate::rational::Rational;

/// The recurrence coefficients `(p, q)`; the discriminant is derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadContext {
    p: Rational,
    q: Rational,
}

impl QuadContext {
    pub fn new(p: Rational, q: Rational) -> Self {
        QuadContext { p, q }
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn delta(&self) -> Rational {
        &self.p * &self.p + Rational::from(4) * &self.q
    }

    pub fn element(&self, u: Rational, v: Rational) -> QuadExt {
        QuadExt {
            u,
            v,
            delta: self.delta(),
        }
    }

    pub fn rational(&self, u: Rational) -> QuadExt {
        self.element(u, Rational::zero())
    }

    /// `(alpha, beta)`, or `DegenerateDiscriminant` when they coincide.
    pub fn roots(&self) -> Result<(QuadExt, QuadExt)> {
        if self.delta().is_zero() {
            return Err(Error::DegenerateDiscriminant);
        }
        Ok(self.formal_roots())
    }

    /// `(p/2 + sqrt(D)/2, p/2 - sqrt(D)/2)` without the distinctness check.
    /// With `D = 0` these are the two images of the double root in the dual
    /// numbers, still satisfying `t^2 = p t + q`.
    fn formal_roots(&self) -> (QuadExt, QuadExt) {
        let half_p = self.p.halve();
        let half = Rational::new(1, 2).unwrap();
        (self.element(half_p.clone(), half.clone()), self.element(half_p, -half))
    }
}

/// `u + v sqrt(delta)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadExt {
    pub u: Rational,
    pub v: Rational,
    pub delta: Rational,
}

impl QuadExt {
    fn check(&self, rhs: &Self) -> Result<()> {
        if self.delta != rhs.delta {
            return Err(Error::ContextMismatch {
                left: Box::new(self.delta.clone()),
                right: Box::new(rhs.delta.clone()),
            });
        }
        Ok(())
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.u.clone())
        } else {
            Err(Error::IrrationalResult)
        }
    }

    /// `sqrt(D) -> -sqrt(D)`; swaps the images of alpha and beta.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            u: self.u.clone(),
            v: -&self.v,
            delta: self.delta.clone(),
        }
    }

    /// `u^2 - v^2 D`, the product with the conjugate.
    pub fn field_norm(&self) -> Rational {
        &self.u * &self.u - &self.v * &self.v * &self.delta
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(QuadExt {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
            delta: self.delta.clone(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(QuadExt {
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
            delta: self.delta.clone(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(QuadExt {
            u: &self.u * &rhs.u + &self.v * &rhs.v * &self.delta,
            v: &self.u * &rhs.v + &rhs.u * &self.v,
            delta: self.delta.clone(),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(if self.u.is_zero() && self.v.is_zero() {
                Error::DivisionByZero
            } else {
                Error::NotInvertible
            });
        }
        Ok(QuadExt {
            u: &self.u / &n,
            v: -(&self.v / &n),
            delta: self.delta.clone(),
        })
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        self.try_mul(&rhs.inverse()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inverse()?.pow(exp.unsigned_abs()))
        }
    }
}

/// Operator-style arithmetic panics on a context mismatch; the `try_*`
/// methods report it. Within one context (all uses in this crate) the two
/// agree.
impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt {
            u: Rational::zero(),
            v: Rational::zero(),
            delta: self.delta.clone(),
        }
    }
    fn one_like(&self) -> Self {
        QuadExt {
            u: Rational::one(),
            v: Rational::zero(),
            delta: self.delta.clone(),
        }
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("quadratic context mismatch")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("quadratic context mismatch")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("quadratic context mismatch")
    }
    fn neg_ref(&self) -> Self {
        QuadExt {
            u: -&self.u,
            v: -&self.v,
            delta: self.delta.clone(),
        }
    }
    fn halve(&self) -> Self {
        QuadExt {
            u: self.u.halve(),
            v: self.v.halve(),
            delta: self.delta.clone(),
        }
    }
}

/// `1 + t i + t^2 j + t^3 k`.
pub fn underline(root: &QuadExt) -> Bicomplex<QuadExt> {
    let t2 = root.mul_ref(root);
    let t3 = t2.mul_ref(root);
    Bicomplex::new(root.one_like(), root.clone(), t2, t3)
}

fn rational_parts(b: &Bicomplex<QuadExt>) -> Result<Bicomplex<Rational>> {
    Ok(Bicomplex::new(
        b.w.to_rational()?,
        b.x.to_rational()?,
        b.y.to_rational()?,
        b.z.to_rational()?,
    ))
}

/// `underline(alpha) * underline(beta)`, computed in the extension. The
/// result is always rational; this holds for `D = 0` too.
pub fn alpha_beta_product(ctx: &QuadContext) -> Bicomplex<Rational> {
    let (alpha, beta) = ctx.formal_roots();
    let prod = underline(&alpha).mul_ref(&underline(&beta));
    rational_parts(&prod).expect("symmetric product has no sqrt part")
}

/// Closed form of [`alpha_beta_product`]:
/// `(1 + q - q^2 - q^3) + p(1 - q^2) i + (p^2 + 2q)(1 + q) j + p(p^2 + 2q) k`.
pub fn alpha_beta_product_closed_form(p: &Rational, q: &Rational) -> Bicomplex<Rational> {
    let one = Rational::one();
    let q2 = q * q;
    let q3 = &q2 * q;
    let p2_2q = p * p + Rational::from(2) * q;
    Bicomplex::new(
        &one + q - &q2 - &q3,
        p * &(&one - &q2),
        &p2_2q * &(&one + q),
        p * &p2_2q,
    )
}

/// `(A, B) = (b - a beta, b - a alpha)`.
pub fn binet_weights(params: &HoradamParams, alpha: &QuadExt, beta: &QuadExt) -> (QuadExt, QuadExt) {
    let ctx = alpha.zero_like();
    let a = QuadExt {
        u: params.a().clone(),
        ..ctx.clone()
    };
    let b = QuadExt {
        u: params.b().clone(),
        ..ctx
    };
    (b.sub_ref(&a.mul_ref(beta)), b.sub_ref(&a.mul_ref(alpha)))
}

/// `A * B = b^2 - a b p - a^2 q`.
pub fn weight_product(params: &HoradamParams) -> Rational {
    let (a, b, p, q) = (params.a(), params.b(), params.p(), params.q());
    b * b - a * b * p - a * a * q
}

/// Multiplication count of a square-and-multiply power with exponent `n`.
pub(crate) fn power_mul_count(n: u64) -> u64 {
    if n == 0 {
        0
    } else {
        u64::from(63 - n.leading_zeros()) + u64::from(n.count_ones())
    }
}

/// `BH_n = (A ul(alpha) alpha^n - B ul(beta) beta^n) / (alpha - beta)`,
/// evaluated entirely in the extension; the sqrt parts cancel and the
/// rational bicomplex is returned.
pub fn binet_bh(n: u64, params: &HoradamParams) -> Result<Bicomplex<Rational>> {
    let ctx = params.context();
    let (alpha, beta) = ctx.roots()?;
    let (wa, wb) = binet_weights(params, &alpha, &beta);
    let left = underline(&alpha).scale(&wa.mul_ref(&alpha.pow(n)));
    let right = underline(&beta).scale(&wb.mul_ref(&beta.pow(n)));
    let diff_inv = alpha.sub_ref(&beta).inverse()?;
    rational_parts(&left.sub_ref(&right).scale(&diff_inv))
}

/// Scalar Binet: `w_n = (A alpha^n - B beta^n) / (alpha - beta)`.
pub fn binet_scalar(n: u64, params: &HoradamParams) -> Result<Rational> {
    let ctx = params.context();
    let (alpha, beta) = ctx.roots()?;
    let (wa, wb) = binet_weights(params, &alpha, &beta);
    let num = wa.mul_ref(&alpha.pow(n)).sub_ref(&wb.mul_ref(&beta.pow(n)));
    num.try_div(&alpha.sub_ref(&beta))?.to_rational()
}

/// Binet term plus the number of extension multiplications spent.
pub(crate) fn binet_bh_counted(n: u64, params: &HoradamParams) -> Result<(Bicomplex<Rational>, u64)> {
    let value = binet_bh(n, params)?;
    // Two powers, two underlines (2 each), two weights, two weight products,
    // eight scalings and the inverse (3 + 4 scaled components).
    let muls = 2 * power_mul_count(n) + 4 + 2 + 2 + 8 + 7;
    Ok((value, muls))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ctx(p: i64, q: i64) -> QuadContext {
        QuadContext::new(p.into(), q.into())
    }

    #[test]
    fn root_relations() {
        for (p, q) in [(1, 1), (2, 1), (-3, 5), (1, -3), (0, 1), (4, 0)] {
            let c = ctx(p, q);
            let (alpha, beta) = c.roots().unwrap();
            assert_eq!(alpha.mul_ref(&beta), c.rational((-q).into()));
            assert_eq!(alpha.add_ref(&beta), c.rational(p.into()));
            for t in [&alpha, &beta] {
                let rhs = t.scale_rational(&p.into()).add_ref(&c.rational(q.into()));
                assert_eq!(t.mul_ref(t), rhs);
            }
            assert_eq!(alpha.conjugate(), beta);
        }
    }

    #[test]
    fn golden_ratio_examples() {
        let (alpha, beta) = ctx(1, 1).roots().unwrap();
        assert_eq!((alpha.u.clone(), alpha.v.clone()), (r("1/2"), r("1/2")));
        assert_eq!((beta.u.clone(), beta.v.clone()), (r("1/2"), r("-1/2")));
        let sq = alpha.mul_ref(&alpha);
        assert_eq!((sq.u, sq.v), (r("3/2"), r("1/2")));
    }

    #[test]
    fn pell_root() {
        let c = ctx(2, 1);
        assert_eq!(c.delta(), r("8"));
        let (alpha, _) = c.roots().unwrap();
        assert_eq!((alpha.u.clone(), alpha.v.clone()), (r("1"), r("1/2")));
        let two_alpha_plus_one = alpha.add_ref(&alpha).add_ref(&alpha.one_like());
        assert_eq!(alpha.mul_ref(&alpha), two_alpha_plus_one);
    }

    #[test]
    fn degenerate_discriminant() {
        assert_eq!(ctx(0, 0).roots(), Err(Error::DegenerateDiscriminant));
        assert_eq!(ctx(2, -1).roots(), Err(Error::DegenerateDiscriminant));
    }

    #[test]
    fn context_mismatch() {
        let a = ctx(1, 1).rational(1.into());
        let b = ctx(2, 1).rational(1.into());
        assert!(matches!(a.try_add(&b), Err(Error::ContextMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::ContextMismatch { .. })));
        assert!(matches!(a.try_div(&b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn division_and_inverse() {
        let c = ctx(1, 1);
        let x = c.element(r("3"), r("2"));
        let y = c.element(r("1/2"), r("-7"));
        assert_eq!(x.try_mul(&y).unwrap().try_div(&y).unwrap(), x);
        assert_eq!(c.rational(0.into()).inverse(), Err(Error::DivisionByZero));
        // D = 1 (p=1, q=0): 1 + sqrt(1) is a zero divisor.
        let c1 = ctx(1, 0);
        assert_eq!(c1.element(r("1"), r("1")).inverse(), Err(Error::NotInvertible));
        let (alpha, beta) = c1.roots().unwrap();
        assert!(alpha.sub_ref(&beta).inverse().is_ok());
    }

    #[test]
    fn negative_powers() {
        let (alpha, _) = ctx(1, 1).roots().unwrap();
        let inv3 = alpha.powi(-3).unwrap();
        assert_eq!(inv3.mul_ref(&alpha.pow(3)), alpha.one_like());
    }

    #[test]
    fn underline_golden() {
        let (alpha, beta) = ctx(1, 1).roots().unwrap();
        let ua = underline(&alpha);
        let one = alpha.one_like();
        assert_eq!(ua.w, one);
        assert_eq!(ua.x, alpha);
        assert_eq!(ua.y, alpha.add_ref(&one));
        assert_eq!(ua.z, alpha.add_ref(&alpha).add_ref(&one));
        assert_eq!(underline(&beta), ua.map(|c| c.conjugate()));
    }

    #[test]
    fn alpha_beta_product_examples() {
        assert_eq!(alpha_beta_product(&ctx(1, 1)), Bicomplex::from_ints(0, 0, 6, 3));
        // Pell: (1 + 1 - 1 - 1) + 2*0 i + 6*2 j + 2*6 k.
        assert_eq!(alpha_beta_product(&ctx(2, 1)), Bicomplex::from_ints(0, 0, 12, 12));
    }

    #[test]
    fn alpha_beta_product_grid() {
        for p in -10..=10 {
            for q in -10..=10 {
                let c = ctx(p, q);
                assert_eq!(
                    alpha_beta_product(&c),
                    alpha_beta_product_closed_form(c.p(), c.q()),
                    "p={p} q={q}"
                );
            }
        }
        let c = QuadContext::new(r("1/2"), r("-2/3"));
        assert_eq!(alpha_beta_product(&c), alpha_beta_product_closed_form(c.p(), c.q()));
    }

    #[test]
    fn weight_product_matches_expansion() {
        for (a, b, p, q) in [(0, 1, 1, 1), (2, 1, 1, 1), (1, 3, 2, -1), (3, -2, -1, 5), (5, 7, 0, 3)] {
            let params = HoradamParams::new(a.into(), b.into(), p.into(), q.into());
            let c = params.context();
            let (alpha, beta) = c.formal_roots();
            let (wa, wb) = binet_weights(&params, &alpha, &beta);
            assert_eq!(wa.mul_ref(&wb), c.rational(weight_product(&params)));
        }
    }

    #[test]
    fn root_difference_squared_over_delta() {
        // (alpha^r - beta^r)^2 = D * U_r^2, with U the (0,1;p,q) sequence.
        for (p, q) in [(1, 1), (2, 1), (3, -2), (-1, 5)] {
            let c = ctx(p, q);
            let (alpha, beta) = c.roots().unwrap();
            let (mut u0, mut u1) = (Rational::zero(), Rational::one());
            for r in 0..12u64 {
                let d = alpha.pow(r).sub_ref(&beta.pow(r));
                assert_eq!(d.mul_ref(&d), c.rational(c.delta() * &u0 * &u0));
                let next = Rational::from(p) * &u1 + Rational::from(q) * &u0;
                u0 = std::mem::replace(&mut u1, next);
            }
        }
    }

    #[test]
    fn binet_examples() {
        let fib = HoradamParams::fibonacci();
        assert_eq!(binet_bh(0, &fib).unwrap(), Bicomplex::from_ints(0, 1, 1, 2));
        let lucas = HoradamParams::lucas();
        assert_eq!(binet_bh(1, &lucas).unwrap(), Bicomplex::from_ints(1, 3, 4, 7));
        assert_eq!(binet_scalar(10, &fib).unwrap(), r("55"));
        let degenerate = HoradamParams::new(1.into(), 3.into(), 2.into(), (-1).into());
        assert_eq!(binet_bh(4, &degenerate), Err(Error::DegenerateDiscriminant));
    }

    #[test]
    fn serializes_with_delta() {
        let (alpha, _) = ctx(1, 1).roots().unwrap();
        assert_eq!(
            serde_json::to_string(&alpha).unwrap(),
            r#"{"u":"1/2","v":"1/2","delta":"5"}"#
        );
    }

    impl QuadExt {
        fn scale_rational(&self, c: &Rational) -> Self {
            QuadExt {
                u: &self.u * c,
                v: &self.v * c,
                delta: self.delta.clone(),
            }
        }
    }
}
