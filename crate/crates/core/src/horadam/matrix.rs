use std::ops::Mul;

use num_traits::{One, Zero};

use crate::rational::Rational;

use super::HoradamParams;

/// A 2x2 rational matrix, in practice a power of the companion matrix
/// `[[p, q], [1, 0]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix {
    pub entries: [[Rational; 2]; 2],
}

impl CompanionMatrix {
    pub fn new(params: &HoradamParams) -> Self {
        CompanionMatrix {
            entries: [
                [params.p().clone(), params.q().clone()],
                [Rational::one(), Rational::zero()],
            ],
        }
    }

    pub fn identity() -> Self {
        CompanionMatrix {
            entries: [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]],
        }
    }

    pub fn det(&self) -> Rational {
        let [[a, b], [c, d]] = &self.entries;
        a * d - b * c
    }
}

impl Mul for &CompanionMatrix {
    type Output = CompanionMatrix;

    fn mul(self, rhs: &CompanionMatrix) -> CompanionMatrix {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &rhs.entries;
        CompanionMatrix {
            entries: [[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]],
        }
    }
}

/// `M^n` by square-and-multiply, with the number of matrix products used.
///
/// The accumulator starts at the first set bit rather than the identity,
/// and the base is not squared past the top bit, so the count is
/// `floor(log2 n) + popcount(n) - 1`.
pub fn matrix_power_counted(params: &HoradamParams, mut n: u64) -> (CompanionMatrix, u64) {
    let mut products = 0;
    let mut acc: Option<CompanionMatrix> = None;
    let mut base = CompanionMatrix::new(params);
    while n > 0 {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(m) => {
                    products += 1;
                    &m * &base
                }
            });
        }
        n >>= 1;
        if n > 0 {
            base = &base * &base;
            products += 1;
        }
    }
    (acc.unwrap_or_else(CompanionMatrix::identity), products)
}

pub fn matrix_power(params: &HoradamParams, n: u64) -> CompanionMatrix {
    matrix_power_counted(params, n).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(m: [[i64; 2]; 2]) -> CompanionMatrix {
        CompanionMatrix {
            entries: m.map(|row| row.map(Rational::from)),
        }
    }

    #[test]
    fn small_powers() {
        let fib = HoradamParams::fibonacci();
        assert_eq!(matrix_power(&fib, 0), CompanionMatrix::identity());
        assert_eq!(matrix_power(&fib, 1), CompanionMatrix::new(&fib));
        assert_eq!(matrix_power(&fib, 5), int_matrix([[8, 5], [5, 3]]));
    }

    #[test]
    fn matches_repeated_multiplication() {
        let params = HoradamParams::new(1.into(), 3.into(), 2.into(), (-1).into());
        let m = CompanionMatrix::new(&params);
        let mut acc = CompanionMatrix::identity();
        for n in 0..40 {
            assert_eq!(matrix_power(&params, n), acc);
            acc = &acc * &m;
        }
    }

    #[test]
    fn product_count_is_logarithmic() {
        let fib = HoradamParams::fibonacci();
        for n in [1u64, 2, 3, 7, 8, 1000, 1 << 12] {
            let (_, count) = matrix_power_counted(&fib, n);
            let bits = 64 - n.leading_zeros() as u64;
            assert!(count <= 2 * bits);
            assert_eq!(count, bits - 1 + n.count_ones() as u64 - 1);
        }
    }
}
