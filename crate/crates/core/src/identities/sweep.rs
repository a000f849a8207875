use serde::Serialize;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::horadam::HoradamParams;
use crate::rational::Rational;

use super::eval::{evaluate_identity, Indices};
use super::{IdentityId, Scope, SecondIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IndexRange {
    pub min: i64,
    pub max: i64,
}

impl IndexRange {
    pub fn new(min: i64, max: i64) -> Self {
        IndexRange { min, max }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepBounds {
    pub n: IndexRange,
    pub second: Option<IndexRange>,
}

impl SweepBounds {
    pub fn single(n: IndexRange) -> Self {
        SweepBounds { n, second: None }
    }

    pub fn pair(n: IndexRange, second: IndexRange) -> Self {
        SweepBounds {
            n,
            second: Some(second),
        }
    }
}

/// Catalog-wide default bounds: `n <= 100`, `m <= 30`, `r <= 5`, each
/// starting at the identity's smallest admissible index.
pub fn default_bounds(id: IdentityId) -> SweepBounds {
    let n = IndexRange::new(id.min_n(), 100);
    match id.second_index() {
        None => SweepBounds::single(n),
        Some(SecondIndex::M) => SweepBounds::pair(n, IndexRange::new(id.min_second(), 30)),
        Some(SecondIndex::R) => SweepBounds::pair(n, IndexRange::new(id.min_second(), 5)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportIndices {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRange {
    pub n: IndexRange,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<IndexRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<IndexRange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub indices: ReportIndices,
    pub lhs: Bicomplex<Rational>,
    pub rhs: Bicomplex<Rational>,
    /// `lhs - rhs`.
    pub difference: Bicomplex<Rational>,
    /// General closed form at the same indices, when the identity has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<Bicomplex<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: HoradamParams,
    pub range: ReportRange,
    pub verdict: Verdict,
    /// Every failing index tuple, lexicographic by `(n, m | r)`.
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn split_second(id: IdentityId, value: Option<i64>) -> (Option<i64>, Option<i64>) {
    match id.second_index() {
        Some(SecondIndex::M) => (value, None),
        Some(SecondIndex::R) => (None, value),
        None => (None, None),
    }
}

fn validate(id: IdentityId, bounds: &SweepBounds) -> Result<()> {
    let bad = |reason: String| Error::IndexOutOfDomain {
        identity: id.name(),
        reason,
    };
    let n = bounds.n;
    if n.min > n.max {
        return Err(bad(format!("empty n range [{}, {}]", n.min, n.max)));
    }
    if n.min < id.min_n() {
        return Err(bad(format!("n range starts below {}", id.min_n())));
    }
    match (id.second_index(), bounds.second) {
        (None, None) => Ok(()),
        (None, Some(_)) => Err(bad("takes a single index n".into())),
        (Some(kind), None) => Err(bad(format!("missing {} range", kind.name()))),
        (Some(kind), Some(s)) => {
            if s.min > s.max {
                return Err(bad(format!("empty {} range [{}, {}]", kind.name(), s.min, s.max)));
            }
            if s.min < id.min_second() {
                return Err(bad(format!("{} range starts below {}", kind.name(), id.min_second())));
            }
            Ok(())
        }
    }
}

/// Index tuples in lexicographic order; Catalan-type tuples with `n < r`
/// lie outside the identity and are skipped.
fn tuples(id: IdentityId, bounds: &SweepBounds) -> Vec<Indices> {
    let mut out = Vec::new();
    for n in bounds.n.min..=bounds.n.max {
        match bounds.second {
            None => out.push(Indices::single(n)),
            Some(s) => {
                for second in s.min..=s.max {
                    if id.requires_n_at_least_second() && n < second {
                        continue;
                    }
                    out.push(Indices::pair(n, second));
                }
            }
        }
    }
    out
}

/// Evaluates `id` at every tuple in `bounds` and compares both sides
/// exactly. The report is independent of `exec`.
pub fn sweep_verify(
    id: IdentityId,
    params: &HoradamParams,
    bounds: &SweepBounds,
    exec: Execution,
) -> Result<IdentityReport> {
    validate(id, bounds)?;
    let report_params = match id.scope() {
        Scope::FibonacciLucas => {
            if *params != HoradamParams::lucas() && *params != HoradamParams::fibonacci() {
                return Err(Error::ParamsOutOfScope { identity: id.name() });
            }
            HoradamParams::lucas()
        }
        Scope::Horadam => params.clone(),
    };
    let points = tuples(id, bounds);
    let results = exec.map_ordered(&points, |&idx| evaluate_identity(id, idx, params));

    let mut counterexamples = Vec::new();
    for (idx, result) in points.iter().zip(results) {
        let eval = result?;
        if eval.holds() {
            continue;
        }
        let (m, r) = split_second(id, idx.second);
        counterexamples.push(Counterexample {
            indices: ReportIndices { n: idx.n, m, r },
            difference: eval.lhs.sub_ref(&eval.rhs),
            lhs: eval.lhs,
            rhs: eval.rhs,
            reference: eval.reference,
        });
    }
    let (m, r) = match (id.second_index(), bounds.second) {
        (Some(SecondIndex::M), s) => (s, None),
        (Some(SecondIndex::R), s) => (None, s),
        (None, _) => (None, None),
    };
    Ok(IdentityReport {
        identity: id,
        params: report_params,
        range: ReportRange { n: bounds.n, m, r },
        verdict: if counterexamples.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        counterexamples,
    })
}

/// Sweeps every identity with its default bounds. Fibonacci/Lucas
/// identities always run on their own presets; the Horadam ones use
/// `params`.
pub fn verify_catalog(params: &HoradamParams, exec: Execution) -> Result<Vec<IdentityReport>> {
    IdentityId::ALL
        .into_iter()
        .map(|id| {
            let p = match id.scope() {
                Scope::FibonacciLucas => HoradamParams::lucas(),
                Scope::Horadam => params.clone(),
            };
            sweep_verify(id, &p, &default_bounds(id), exec)
        })
        .collect()
}
