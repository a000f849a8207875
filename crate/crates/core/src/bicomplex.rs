//! The bicomplex ring `w + x i + y j + z k` over an exact commutative
//! coefficient ring.
//!
//! Basis products follow the table
//!
//! ```text
//!   .  |  i   j   k
//!   i  | -1   k  -j
//!   j  |  k  -1  -i
//!   k  | -j  -i   1
//! ```
//!
//! so the algebra is commutative with `k^2 = +1`. It has zero divisors and
//! the nontrivial idempotents `e = (1 + k)/2`, `e' = (1 - k)/2`; in the
//! basis `{e, e'}` multiplication is componentwise complex multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// An exact commutative ring usable as bicomplex coefficients.
///
/// Elements may carry context (the quadratic extension carries its
/// discriminant), so identities are produced from an existing element.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplication by 1/2. Every coefficient ring used here contains 1/2.
    fn halve(&self) -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn halve(&self) -> Self {
        Rational::halve(self)
    }
}

/// Imaginary axis selecting one of the three involutions and norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex<R> {
    /// Unit coefficient.
    pub w: R,
    /// `i` coefficient.
    pub x: R,
    /// `j` coefficient.
    pub y: R,
    /// `k` coefficient.
    pub z: R,
}

/// A complex number `re + im i` over `R`; the slots of the idempotent
/// decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexPair<R> {
    pub re: R,
    pub im: R,
}

fn scalar_is_zero<R: Scalar>(c: &R) -> bool {
    *c == c.zero_like()
}

impl<R: Scalar> ComplexPair<R> {
    pub fn mul(&self, rhs: &Self) -> Self {
        ComplexPair {
            re: self.re.mul_ref(&rhs.re).sub_ref(&self.im.mul_ref(&rhs.im)),
            im: self.re.mul_ref(&rhs.im).add_ref(&self.im.mul_ref(&rhs.re)),
        }
    }

    pub fn is_zero(&self) -> bool {
        scalar_is_zero(&self.re) && scalar_is_zero(&self.im)
    }
}

/// Coordinates in the idempotent basis: `b = first * e + second * e'`
/// with `e = (1 + k)/2`, `e' = (1 - k)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdempotentParts<R> {
    pub first: ComplexPair<R>,
    pub second: ComplexPair<R>,
}

impl<R: Scalar> IdempotentParts<R> {
    /// Componentwise product; corresponds to bicomplex multiplication.
    pub fn mul(&self, rhs: &Self) -> Self {
        IdempotentParts {
            first: self.first.mul(&rhs.first),
            second: self.second.mul(&rhs.second),
        }
    }

    pub fn recompose(&self) -> Bicomplex<R> {
        // b = h1 + h2 k with h1 = (c1 + c2)/2, h2 = (c1 - c2)/2, and
        // (s + t i) k = s k - t j.
        let (c1, c2) = (&self.first, &self.second);
        let h1_re = c1.re.add_ref(&c2.re).halve();
        let h1_im = c1.im.add_ref(&c2.im).halve();
        let h2_re = c1.re.sub_ref(&c2.re).halve();
        let h2_im = c1.im.sub_ref(&c2.im).halve();
        Bicomplex {
            w: h1_re,
            x: h1_im,
            y: h2_im.neg_ref(),
            z: h2_re,
        }
    }
}

impl<R: Scalar> Bicomplex<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Bicomplex { w, x, y, z }
    }

    /// The zero element in the same coefficient context as `template`.
    pub fn zero_like(template: &R) -> Self {
        let z = template.zero_like();
        Bicomplex::new(z.clone(), z.clone(), z.clone(), z)
    }

    pub fn one_like(template: &R) -> Self {
        let z = template.zero_like();
        Bicomplex::new(template.one_like(), z.clone(), z.clone(), z)
    }

    /// Embeds a coefficient as `c + 0i + 0j + 0k`.
    pub fn from_scalar(c: R) -> Self {
        let z = c.zero_like();
        Bicomplex::new(c, z.clone(), z.clone(), z)
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Bicomplex<S> {
        Bicomplex {
            w: f(&self.w),
            x: f(&self.x),
            y: f(&self.y),
            z: f(&self.z),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components().into_iter().all(scalar_is_zero)
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        Bicomplex {
            w: self.w.add_ref(&rhs.w),
            x: self.x.add_ref(&rhs.x),
            y: self.y.add_ref(&rhs.y),
            z: self.z.add_ref(&rhs.z),
        }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        Bicomplex {
            w: self.w.sub_ref(&rhs.w),
            x: self.x.sub_ref(&rhs.x),
            y: self.y.sub_ref(&rhs.y),
            z: self.z.sub_ref(&rhs.z),
        }
    }

    pub fn neg_ref(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|v| v.mul_ref(c))
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        let w = w1
            .mul_ref(w2)
            .sub_ref(&x1.mul_ref(x2))
            .sub_ref(&y1.mul_ref(y2))
            .add_ref(&z1.mul_ref(z2));
        let x = w1
            .mul_ref(x2)
            .add_ref(&x1.mul_ref(w2))
            .sub_ref(&y1.mul_ref(z2))
            .sub_ref(&z1.mul_ref(y2));
        let y = w1
            .mul_ref(y2)
            .add_ref(&y1.mul_ref(w2))
            .sub_ref(&x1.mul_ref(z2))
            .sub_ref(&z1.mul_ref(x2));
        let z = w1
            .mul_ref(z2)
            .add_ref(&z1.mul_ref(w2))
            .add_ref(&x1.mul_ref(y2))
            .add_ref(&y1.mul_ref(x2));
        Bicomplex { w, x, y, z }
    }

    pub fn square(&self) -> Self {
        self.mul_ref(self)
    }

    /// `b^n` by square-and-multiply; `b^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Bicomplex::one_like(&self.w);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// The involution for `axis`: `i` negates the i and k parts, `j` the
    /// j and k parts, `k` the i and j parts.
    pub fn conjugate(&self, axis: Axis) -> Self {
        let Bicomplex { w, x, y, z } = self;
        match axis {
            Axis::I => Bicomplex::new(w.clone(), x.neg_ref(), y.clone(), z.neg_ref()),
            Axis::J => Bicomplex::new(w.clone(), x.clone(), y.neg_ref(), z.neg_ref()),
            Axis::K => Bicomplex::new(w.clone(), x.neg_ref(), y.neg_ref(), z.clone()),
        }
    }

    /// `b * conj(b, axis)`. Isotropic, so it is a bicomplex value rather
    /// than a scalar: the i-norm is supported on `{1, j}`, the j-norm on
    /// `{1, i}`, the k-norm on `{1, k}`.
    pub fn norm(&self, axis: Axis) -> Self {
        self.mul_ref(&self.conjugate(axis))
    }

    /// Splits `b = z1 + z2 j` (`z1 = w + x i`, `z2 = y + z i`) into
    /// `c1 = z1 - z2 i` and `c2 = z1 + z2 i`.
    pub fn idempotent_decompose(&self) -> IdempotentParts<R> {
        let Bicomplex { w, x, y, z } = self;
        IdempotentParts {
            first: ComplexPair {
                re: w.add_ref(z),
                im: x.sub_ref(y),
            },
            second: ComplexPair {
                re: w.sub_ref(z),
                im: x.add_ref(y),
            },
        }
    }

    /// True iff `b != 0` and exactly one idempotent component vanishes.
    ///
    /// Exact over integral-domain coefficients, where the complex slots have
    /// no zero divisors of their own.
    pub fn is_zero_divisor(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let parts = self.idempotent_decompose();
        parts.first.is_zero() != parts.second.is_zero()
    }
}

impl Bicomplex<Rational> {
    pub fn zero() -> Self {
        Bicomplex::zero_like(&Rational::zero())
    }

    pub fn one() -> Self {
        Bicomplex::one_like(&Rational::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Bicomplex::new(w.into(), x.into(), y.into(), z.into())
    }

    /// The idempotent `(1 + k)/2`.
    pub fn idempotent() -> Self {
        Self::from_ints(1, 0, 0, 1).scale(&Rational::new(1, 2).unwrap())
    }
}

macro_rules! forward_bicomplex_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl<R: Scalar> $trait<&Bicomplex<R>> for &Bicomplex<R> {
            type Output = Bicomplex<R>;
            fn $method(self, rhs: &Bicomplex<R>) -> Bicomplex<R> {
                self.$imp(rhs)
            }
        }
        impl<R: Scalar> $trait<Bicomplex<R>> for Bicomplex<R> {
            type Output = Bicomplex<R>;
            fn $method(self, rhs: Bicomplex<R>) -> Bicomplex<R> {
                self.$imp(&rhs)
            }
        }
        impl<R: Scalar> $trait<&Bicomplex<R>> for Bicomplex<R> {
            type Output = Bicomplex<R>;
            fn $method(self, rhs: &Bicomplex<R>) -> Bicomplex<R> {
                self.$imp(rhs)
            }
        }
    };
}

forward_bicomplex_binop!(Add, add, add_ref);
forward_bicomplex_binop!(Sub, sub, sub_ref);
forward_bicomplex_binop!(Mul, mul, mul_ref);

impl<R: Scalar> Neg for Bicomplex<R> {
    type Output = Bicomplex<R>;
    fn neg(self) -> Bicomplex<R> {
        self.neg_ref()
    }
}

impl<R: Scalar> Neg for &Bicomplex<R> {
    type Output = Bicomplex<R>;
    fn neg(self) -> Bicomplex<R> {
        self.neg_ref()
    }
}

/// Renders `w + x*i + y*j + z*k`, folding negative coefficients into `-`.
impl fmt::Display for Bicomplex<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.w)?;
        for (c, unit) in [(&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_negative() {
                write!(f, " - {}*{}", c.abs(), unit)?;
            } else {
                write!(f, " + {}*{}", c, unit)?;
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Bicomplex<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i + {:?}j + {:?}k)", self.w, self.x, self.y, self.z)
    }
}

/// JSON form `{"1": w, "i": x, "j": y, "k": z}`.
impl<R: Serialize> Serialize for Bicomplex<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("1", &self.w)?;
        map.serialize_entry("i", &self.x)?;
        map.serialize_entry("j", &self.y)?;
        map.serialize_entry("k", &self.z)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Bicomplex<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut map = std::collections::BTreeMap::<String, Rational>::deserialize(deserializer)?;
        let mut take = |key: &str| {
            map.remove(key)
                .ok_or_else(|| D::Error::custom(format!("missing bicomplex component {key:?}")))
        };
        let b = Bicomplex::new(take("1")?, take("i")?, take("j")?, take("k")?);
        if let Some(extra) = map.keys().next() {
            return Err(D::Error::custom(format!("unknown bicomplex component {extra:?}")));
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bc(w: i64, x: i64, y: i64, z: i64) -> Bicomplex<Rational> {
        Bicomplex::from_ints(w, x, y, z)
    }

    /// Multiplier driven by the basis table alone: expands both operands
    /// over basis pairs and looks up each product.
    fn table_mul(a: &Bicomplex<Rational>, b: &Bicomplex<Rational>) -> Bicomplex<Rational> {
        // (sign, index) of basis[r] * basis[c] with basis = [1, i, j, k].
        const TABLE: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (1, 3), (-1, 0), (-1, 1)],
            [(1, 3), (-1, 2), (-1, 1), (1, 0)],
        ];
        let lhs = a.components();
        let rhs = b.components();
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for r in 0..4 {
            for c in 0..4 {
                let (sign, idx) = TABLE[r][c];
                let term = lhs[r] * rhs[c] * Rational::from(sign);
                out[idx] = &out[idx] + &term;
            }
        }
        let [w, x, y, z] = out;
        Bicomplex::new(w, x, y, z)
    }

    #[test]
    fn basis_relations() {
        let (one, i, j, k) = (Bicomplex::one(), Bicomplex::i(), Bicomplex::j(), Bicomplex::k());
        assert_eq!(&i * &i, -&one);
        assert_eq!(&j * &j, -&one);
        assert_eq!(&k * &k, one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, k);
        assert_eq!(&i * &k, -&j);
        assert_eq!(&k * &i, -&j);
        assert_eq!(&j * &k, -&i);
        assert_eq!(&k * &j, -&i);
    }

    #[test]
    fn ring_ops_examples() {
        assert_eq!(bc(1, 2, 0, 0) + bc(0, 0, 3, 4), bc(1, 2, 3, 4));
        let b = bc(3, -1, 4, 1);
        assert!((&b + &(-&b)).is_zero());
        let half = Rational::new(1, 2).unwrap();
        let scaled = bc(2, 1, 3, 4).scale(&half);
        assert_eq!(
            scaled,
            Bicomplex::new(1.into(), half.clone(), Rational::new(3, 2).unwrap(), 2.into())
        );
    }

    #[test]
    fn worked_products() {
        assert!((bc(0, 1, 1, 0) * bc(0, 1, -1, 0)).is_zero());
        let e = Bicomplex::idempotent();
        assert_eq!(&e * &e, e);
        assert!((bc(1, 0, 0, 1) * bc(1, 0, 0, -1)).is_zero());
        assert_eq!(Bicomplex::i() * Bicomplex::j(), Bicomplex::k());
    }

    #[test]
    fn conjugates() {
        let b = bc(1, 2, 3, 4);
        assert_eq!(b.conjugate(Axis::I), bc(1, -2, 3, -4));
        assert_eq!(b.conjugate(Axis::J), bc(1, 2, -3, -4));
        assert_eq!(b.conjugate(Axis::K), bc(1, -2, -3, 4));
        for axis in Axis::ALL {
            assert_eq!(b.conjugate(axis).conjugate(axis), b);
        }
    }

    #[test]
    fn norms() {
        assert!(bc(1, 0, 0, 1).norm(Axis::I).is_zero());
        for axis in Axis::ALL {
            assert_eq!(Bicomplex::one().norm(axis), Bicomplex::one());
        }
        let b = bc(1, 2, 3, 4);
        let expected = table_mul(&b, &b.conjugate(Axis::J));
        assert_eq!(b.norm(Axis::J), expected);
        assert!(expected.y.is_zero() && expected.z.is_zero());
        // 1 - 4 + 9 - 16 and 2 + 2 + 12 + 12.
        assert_eq!(expected, bc(-10, 28, 0, 0));
    }

    #[test]
    fn decomposition_examples() {
        let parts = bc(1, 0, 0, 1).idempotent_decompose();
        assert_eq!(parts.first.is_zero() as u8 + parts.second.is_zero() as u8, 1);
        let one = Bicomplex::one().idempotent_decompose();
        let unit = ComplexPair {
            re: Rational::one(),
            im: Rational::zero(),
        };
        assert_eq!(one.first, unit);
        assert_eq!(one.second, unit);
        assert_eq!(bc(5, -2, 7, 3).idempotent_decompose().recompose(), bc(5, -2, 7, 3));
    }

    #[test]
    fn zero_divisors() {
        assert!(bc(0, 1, 1, 0).is_zero_divisor());
        assert!(bc(1, 0, 0, 1).is_zero_divisor());
        assert!(!Bicomplex::zero().is_zero_divisor());
        assert!(!bc(1, 2, 0, 0).is_zero_divisor());
        assert!(!Bicomplex::one().is_zero_divisor());
    }

    #[test]
    fn powers() {
        let e = Bicomplex::idempotent();
        assert_eq!(e.pow(5), e);
        let b = bc(2, -1, 0, 3);
        assert_eq!(b.pow(1), b);
        assert_eq!(b.pow(0), Bicomplex::one());
        let s = bc(0, 1, 1, 0);
        assert_eq!(s.pow(2), table_mul(&s, &s));
        assert_eq!(s.pow(2), bc(-2, 0, 0, 2));
        assert_eq!(b.pow(7), (0..7).fold(Bicomplex::one(), |acc, _| table_mul(&acc, &b)));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(bc(2, 1, 3, 4).to_string(), "2 + 1*i + 3*j + 4*k");
        assert_eq!(bc(-1, -2, 0, 3).to_string(), "-1 - 2*i + 0*j + 3*k");
        let json = serde_json::to_string(&bc(55, 89, 144, 233)).unwrap();
        assert_eq!(json, r#"{"1":"55","i":"89","j":"144","k":"233"}"#);
        let back: Bicomplex<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, bc(55, 89, 144, 233));
        assert!(serde_json::from_str::<Bicomplex<Rational>>(r#"{"1":"1","i":"0","j":"0"}"#).is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn arb_bicomplex() -> impl Strategy<Value = Bicomplex<Rational>> {
        (arb_rational(), arb_rational(), arb_rational(), arb_rational())
            .prop_map(|(w, x, y, z)| Bicomplex::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn mul_matches_table(a in arb_bicomplex(), b in arb_bicomplex()) {
            prop_assert_eq!(&a * &b, table_mul(&a, &b));
        }

        #[test]
        fn decomposition_is_multiplicative(a in arb_bicomplex(), b in arb_bicomplex()) {
            let prod = a.idempotent_decompose().mul(&b.idempotent_decompose());
            prop_assert_eq!(prod.recompose(), table_mul(&a, &b));
            prop_assert_eq!(a.idempotent_decompose().recompose(), a);
        }

        #[test]
        fn norm_support_and_fixed_point(b in arb_bicomplex()) {
            let ni = b.norm(Axis::I);
            prop_assert!(ni.x.is_zero() && ni.z.is_zero());
            let nj = b.norm(Axis::J);
            prop_assert!(nj.y.is_zero() && nj.z.is_zero());
            let nk = b.norm(Axis::K);
            prop_assert!(nk.x.is_zero() && nk.y.is_zero());
            for axis in Axis::ALL {
                let n = b.norm(axis);
                prop_assert_eq!(n.conjugate(axis), n);
            }
        }

        #[test]
        fn conjugation_is_automorphism(a in arb_bicomplex(), b in arb_bicomplex()) {
            for axis in Axis::ALL {
                prop_assert_eq!((&a * &b).conjugate(axis), a.conjugate(axis) * b.conjugate(axis));
                prop_assert_eq!((&a + &b).conjugate(axis), a.conjugate(axis) + b.conjugate(axis));
            }
        }

        #[test]
        fn zero_divisor_criterion(a in arb_bicomplex(), b in arb_bicomplex()) {
            // A product that vanishes with both factors nonzero forces both to be zero divisors.
            if !a.is_zero() && !b.is_zero() && (&a * &b).is_zero() {
                prop_assert!(a.is_zero_divisor() && b.is_zero_divisor());
            }
            // Zero divisors are annihilated by the opposite idempotent image.
            if a.is_zero_divisor() {
                let e = Bicomplex::idempotent();
                let killer = if a.idempotent_decompose().first.is_zero() { e } else { Bicomplex::one() - e };
                prop_assert!((&a * &killer).is_zero());
            }
        }
    }

    #[test]
    fn idempotent_relations() {
        let e = Bicomplex::idempotent();
        let f = Bicomplex::one() - &e;
        assert_eq!(&e * &e, e);
        assert!((&e * &f).is_zero());
        assert_eq!(&e + &f, Bicomplex::one());
    }
}
