//! Closed-form identities for bicomplex Fibonacci, Lucas and Horadam
//! numbers, each evaluated along two disjoint paths: the left side by
//! iterating the recurrence and multiplying, the right side from its closed
//! form (Binet terms, rational Catalan reduction, or series division).
//! Direct evaluation is the ground truth; the stated right sides are
//! hypotheses under test.

mod eval;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use eval::{
    cassini_rhs, catalan_rhs, evaluate_identity, lucas_cassini_stated_rhs, lucas_catalan_stated_rhs,
    scalar_lucas_fib_lemma, Evaluation, Indices,
};
pub use sweep::{
    default_bounds, sweep_verify, verify_catalog, Counterexample, IdentityReport, IndexRange, SweepBounds, Verdict,
};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// `BF_n + BL_n = 2 BF_{n+1}`
    BfPlusBl,
    /// `BL_{n-1} + BL_{n+1} = 5 BF_n`
    BlNeighbors,
    /// `sum_{i=1..n} BL_{2i-1} = BL_{2n} - BL_0`
    SumOdd,
    /// `sum_{i=1..n} BL_i = BL_{n+2} - BL_2`
    SumAll,
    /// `sum_{i=1..n} BL_{2i} = BL_{2n+1} - BL_1`
    SumEven,
    /// `5 BF_n^2 - BL_n^2 = 12 (-1)^{n+1} (2j + k)`
    FiveBfSq,
    /// `sum_{i=1..n} BL_i^2 = BL_n BL_{n+1} - (5 - 10i - 12j + 9k)`
    SumSq,
    /// `BL_n BL_m + BL_{n+1} BL_{m+1} = 5(2 BF_{s+1} + 2f_{s+4} - f_{s+1} - 2f_{s+6} i - 2f_{s+5} j + 2f_{s+4} k)`, `s = n + m`
    ProductSum,
    /// `sum BL_n t^n = (2+i+3j+4k + (-1+2i+j+3k) t) / (1 - t - t^2)`
    LucasGf,
    /// `BL_n^2 - BL_{n+r} BL_{n-r} = 15 (-1)^{n-r} f_r^2 (2j + k)`
    LucasCatalan,
    /// `BL_n^2 - BL_{n+1} BL_{n-1} = 15 (-1)^{n-1} (2j + k)`
    LucasCassini,
    /// `sum BH_n t^n = (BH_0 + (BH_1 - p BH_0) t) / (1 - p t - q t^2)`
    HoradamGf,
    /// `BH_n^2 - BH_{n+r} BH_{n-r} = A B ul(alpha) ul(beta) (-q)^{n-r} U_r^2`
    HoradamCatalan,
    /// `BH_n^2 - BH_{n+1} BH_{n-1} = A B ul(alpha) ul(beta) (-q)^{n-1}`
    HoradamCassini,
    /// `k_n k_m + k_{n+1} k_{m+1} = 5 f_{n+m+1}`
    ScalarLucasLemma,
}

/// Name and bounds of an identity's second index, if it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondIndex {
    M,
    R,
}

impl SecondIndex {
    pub fn name(self) -> &'static str {
        match self {
            SecondIndex::M => "m",
            SecondIndex::R => "r",
        }
    }
}

/// Which parameters an identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Pinned to the Fibonacci and Lucas presets.
    FibonacciLucas,
    /// Any Horadam parameters.
    Horadam,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::BfPlusBl,
        IdentityId::BlNeighbors,
        IdentityId::SumOdd,
        IdentityId::SumAll,
        IdentityId::SumEven,
        IdentityId::FiveBfSq,
        IdentityId::SumSq,
        IdentityId::ProductSum,
        IdentityId::LucasGf,
        IdentityId::LucasCatalan,
        IdentityId::LucasCassini,
        IdentityId::HoradamGf,
        IdentityId::HoradamCatalan,
        IdentityId::HoradamCassini,
        IdentityId::ScalarLucasLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::BfPlusBl => "BF_PLUS_BL",
            IdentityId::BlNeighbors => "BL_NEIGHBORS",
            IdentityId::SumOdd => "SUM_ODD",
            IdentityId::SumAll => "SUM_ALL",
            IdentityId::SumEven => "SUM_EVEN",
            IdentityId::FiveBfSq => "FIVE_BF_SQ",
            IdentityId::SumSq => "SUM_SQ",
            IdentityId::ProductSum => "PRODUCT_SUM",
            IdentityId::LucasGf => "LUCAS_GF",
            IdentityId::LucasCatalan => "LUCAS_CATALAN",
            IdentityId::LucasCassini => "LUCAS_CASSINI",
            IdentityId::HoradamGf => "HORADAM_GF",
            IdentityId::HoradamCatalan => "HORADAM_CATALAN",
            IdentityId::HoradamCassini => "HORADAM_CASSINI",
            IdentityId::ScalarLucasLemma => "SCALAR_LUCAS_LEMMA",
        }
    }

    pub fn second_index(self) -> Option<SecondIndex> {
        match self {
            IdentityId::ProductSum | IdentityId::ScalarLucasLemma => Some(SecondIndex::M),
            IdentityId::LucasCatalan | IdentityId::HoradamCatalan => Some(SecondIndex::R),
            _ => None,
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            IdentityId::HoradamGf | IdentityId::HoradamCatalan | IdentityId::HoradamCassini => Scope::Horadam,
            _ => Scope::FibonacciLucas,
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> i64 {
        match self {
            IdentityId::BlNeighbors | IdentityId::LucasCassini | IdentityId::HoradamCassini => 1,
            IdentityId::LucasCatalan => 1,
            _ => 0,
        }
    }

    /// Smallest admissible second index.
    pub fn min_second(self) -> i64 {
        match self {
            IdentityId::LucasCatalan => 1,
            _ => 0,
        }
    }

    /// Catalan-type identities need `n >= r`.
    pub fn requires_n_at_least_second(self) -> bool {
        self.second_index() == Some(SecondIndex::R)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable. The Lucas Catalan
    /// and Cassini statements also answer to a `_paper` suffix.
    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        let key = match key.as_str() {
            "LUCAS_CATALAN_PAPER" => "LUCAS_CATALAN",
            "LUCAS_CASSINI_PAPER" => "LUCAS_CASSINI",
            other => other,
        };
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::Parse {
                what: "identity",
                input: s.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
            assert_eq!(id.name().to_lowercase().parse::<IdentityId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.name()));
        }
        assert_eq!(
            "lucas_catalan_paper".parse::<IdentityId>().unwrap(),
            IdentityId::LucasCatalan
        );
        assert_eq!("sum-sq".parse::<IdentityId>().unwrap(), IdentityId::SumSq);
        assert!("golden".parse::<IdentityId>().is_err());
    }
}
