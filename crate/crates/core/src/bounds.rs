//! Case classification and the bound formulas for sums of Betti numbers,
//! polar invariants, local Lipschitz-Killing invariants and densities.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::crofton::{round_sig12, CroftonMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("section dimension k={k} is outside 2..={max}")]
    KOutOfRange { k: usize, max: usize },
}

/// A non-negative integer or an explicit marker for "no finite bound".
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(BigUint),
    Unbounded,
}

impl ExtNat {
    pub fn from_u64(n: u64) -> Self {
        ExtNat::Finite(BigUint::from(n))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Unbounded => None,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Finite(n) => serialize_biguint(n, s),
            ExtNat::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

fn serialize_biguint<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&n.to_string())
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

/// A non-negative real bound, or the marker for "no finite bound".
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Unbounded,
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(x) => s.serialize_f64(round_sig12(*x)),
            ExtReal::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PureDimSource {
    HypersurfaceAuto,
    UserFlag,
    Unknown,
}

/// Whether the complexification is pure dimensional, and who said so.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PureDimensionality {
    pub value: Option<bool>,
    pub source: PureDimSource,
}

impl PureDimensionality {
    /// Hypersurfaces are pure dimensional; otherwise only a user assertion
    /// counts.
    pub fn determine(generator_count: usize, user_flag: bool) -> Self {
        if generator_count == 1 {
            PureDimensionality {
                value: Some(true),
                source: PureDimSource::HypersurfaceAuto,
            }
        } else if user_flag {
            PureDimensionality {
                value: Some(true),
                source: PureDimSource::UserFlag,
            }
        } else {
            PureDimensionality {
                value: None,
                source: PureDimSource::Unknown,
            }
        }
    }

    pub fn is_pure(&self) -> bool {
        self.value == Some(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `k < n - d`: a generic section misses the germ.
    Empty,
    /// `k = n - d`: a generic section meets the germ in finitely many points.
    ZeroDim,
    /// `n - d < k < n - s` with pure dimensionality.
    Bounded,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnboundedReason {
    /// `k >= n - s`: counter-example families exist.
    SingularLocusTooLarge,
    NotPureDimensional,
    /// A bound may hold, but pure dimensionality was not established.
    PureDimensionalityUnknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaseClassification {
    pub k: usize,
    pub case: Case,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<UnboundedReason>,
    #[serde(skip)]
    pub pure_dim_source: PureDimSource,
}

/// Classifies section dimension `k` for a germ with cone dimension `d` and
/// singular-locus dimension `s` (`-1` when empty) in `R^n`.
pub fn classify(
    n: usize,
    d: usize,
    s: i64,
    k: usize,
    pure: PureDimensionality,
) -> Result<CaseClassification, BoundsError> {
    if k < 2 || k + 1 > n {
        return Err(BoundsError::KOutOfRange {
            k,
            max: n.saturating_sub(1),
        });
    }
    let codim = n - d;
    let (case, reason) = if k < codim {
        (Case::Empty, None)
    } else if k == codim {
        (Case::ZeroDim, None)
    } else if (k as i64) >= n as i64 - s {
        (Case::Unbounded, Some(UnboundedReason::SingularLocusTooLarge))
    } else {
        match pure.value {
            Some(true) => (Case::Bounded, None),
            Some(false) => (Case::Unbounded, Some(UnboundedReason::NotPureDimensional)),
            None => (
                Case::Unbounded,
                Some(UnboundedReason::PureDimensionalityUnknown),
            ),
        }
    };
    Ok(CaseClassification {
        k,
        case,
        reason,
        pure_dim_source: pure.source,
    })
}

/// `mu (2 mu - 1)^e`.
pub fn mu_power_bound(mu: u64, e: usize) -> BigUint {
    if mu == 0 {
        return BigUint::zero();
    }
    BigUint::from(mu) * num_traits::pow(BigUint::from(2 * mu - 1), e)
}

pub fn betti_sum_bound(mu: u64, k: usize, case: Case) -> ExtNat {
    match case {
        Case::Empty => ExtNat::Finite(BigUint::zero()),
        Case::ZeroDim => ExtNat::from_u64(mu),
        Case::Bounded => ExtNat::Finite(mu_power_bound(mu, k - 1)),
        Case::Unbounded => ExtNat::Unbounded,
    }
}

/// `(D + 1)(2D + 1)^(n - l - 1)` with `D` the sum of the degrees.
pub fn op_bound(degrees: &[u32], n: usize, l: usize) -> BigUint {
    assert!(l < n, "op_bound needs l < n");
    let total: u64 = degrees.iter().map(|&d| d as u64).sum();
    BigUint::from(total + 1) * num_traits::pow(BigUint::from(2 * total + 1), n - l - 1)
}

/// Which exponent the polar-invariant bound uses in its generic case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LkExponent {
    /// `n - l - 1`
    #[default]
    Default,
    /// `l - 1`
    PaperDisplay,
}

impl LkExponent {
    fn exponent(self, n: usize, l: usize) -> usize {
        match self {
            LkExponent::Default => n - l - 1,
            LkExponent::PaperDisplay => l - 1,
        }
    }
}

/// Bound on the polar invariant `sigma_l`, `1 <= l <= n`.
pub fn sigma_bound(
    mu: u64,
    n: usize,
    d: usize,
    s: i64,
    l: usize,
    pure: PureDimensionality,
    exponent: LkExponent,
) -> ExtNat {
    assert!((1..=n).contains(&l), "sigma_bound needs 1 <= l <= n");
    if l == d {
        ExtNat::from_u64(mu)
    } else if l > d {
        ExtNat::Finite(BigUint::zero())
    } else if s < l as i64 && pure.is_pure() {
        ExtNat::Finite(mu_power_bound(mu, exponent.exponent(n, l)))
    } else {
        ExtNat::Unbounded
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LkReason {
    /// `dim Sing T >= k`.
    SingularLocusTooLarge,
    /// Some polar invariant in the sum has no finite bound.
    PolarInvariantUnbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LkBound {
    pub bound: ExtReal,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<LkReason>,
}

/// Bound on the local Lipschitz-Killing invariant of degree `k >= 1`.
#[allow(clippy::too_many_arguments)]
pub fn lipschitz_killing_bound(
    mu: u64,
    n: usize,
    d: usize,
    s: i64,
    k: usize,
    m: &CroftonMatrix,
    pure: PureDimensionality,
    exponent: LkExponent,
) -> LkBound {
    assert!(k >= 1, "lipschitz_killing_bound needs k >= 1");
    let finite = |x: f64| LkBound {
        bound: ExtReal::Finite(x),
        reason: None,
    };
    if k == d {
        return finite(mu as f64);
    }
    if k > d {
        return finite(0.0);
    }
    if s >= k as i64 {
        return LkBound {
            bound: ExtReal::Unbounded,
            reason: Some(LkReason::SingularLocusTooLarge),
        };
    }
    let mut total = m.get(k, d) * mu as f64;
    for l in k..d {
        match sigma_bound(mu, n, d, s, l, pure, exponent) {
            ExtNat::Finite(sig) => {
                total += m.get(k, l) * sig.to_f64().unwrap_or(f64::INFINITY);
            }
            ExtNat::Unbounded => {
                return LkBound {
                    bound: ExtReal::Unbounded,
                    reason: Some(LkReason::PolarInvariantUnbounded),
                }
            }
        }
    }
    finite(total)
}

/// The density of the germ is bounded by its multiplicity.
pub fn density_bound(mu: u64) -> u64 {
    mu
}

/// Density bound obtained from degrees alone, for comparison.
pub fn op_baseline_density(degrees: &[u32], n: usize, d: usize) -> BigUint {
    op_bound(degrees, n, d)
}

#[derive(Clone, Debug, Serialize)]
pub struct KBound {
    pub k: usize,
    pub case: Case,
    pub betti_sum_bound: ExtNat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<UnboundedReason>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaEntry {
    pub l: usize,
    pub bound: ExtNat,
}

#[derive(Clone, Debug, Serialize)]
pub struct LkEntry {
    pub k: usize,
    pub bound: ExtReal,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<LkReason>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportFlags {
    pub assume_pure_dimensional: bool,
    pub lk_exponent: LkExponent,
    pub budget: u64,
    pub k_range: Option<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub germ_bounds: String,
}

impl Default for Versions {
    fn default() -> Self {
        Versions {
            germ_bounds: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Everything computed for one germ. Fields that could not be determined
/// are `null`.
#[derive(Clone, Debug, Serialize)]
pub struct GermReport {
    pub input: String,
    pub n: usize,
    pub vars: Vec<String>,
    pub degrees: Vec<u32>,
    pub tangent_cone_generators: Vec<String>,
    pub dimension_d: Option<usize>,
    pub multiplicity_mu: Option<u64>,
    /// `-1` when the singular locus is empty.
    pub singular_dimension_s: Option<i64>,
    pub pure_dimensional: PureDimensionality,
    pub per_k: Vec<KBound>,
    pub sigma_bounds: Vec<SigmaEntry>,
    pub lk_bounds: Vec<LkEntry>,
    pub density_bound: Option<u64>,
    #[serde(serialize_with = "serialize_opt_biguint")]
    pub op_baseline_density: Option<BigUint>,
    pub flags: ReportFlags,
    pub versions: Versions,
    pub notes: Vec<String>,
}

fn serialize_opt_biguint<S: Serializer>(n: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => serialize_biguint(n, s),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crofton::crofton_matrix;
    use std::f64::consts::PI;

    const PURE: PureDimensionality = PureDimensionality {
        value: Some(true),
        source: PureDimSource::UserFlag,
    };
    const UNKNOWN: PureDimensionality = PureDimensionality {
        value: None,
        source: PureDimSource::Unknown,
    };

    #[test]
    fn classification_examples() {
        assert_eq!(classify(5, 2, 0, 2, PURE).unwrap().case, Case::Empty);
        assert_eq!(classify(3, 1, 0, 2, PURE).unwrap().case, Case::ZeroDim);
        let c = classify(3, 2, 2, 2, PURE).unwrap();
        assert_eq!(c.case, Case::Unbounded);
        assert_eq!(c.reason, Some(UnboundedReason::SingularLocusTooLarge));
    }

    #[test]
    fn unknown_purity_withholds_the_bound() {
        let c = classify(5, 4, 0, 3, UNKNOWN).unwrap();
        assert_eq!(c.case, Case::Unbounded);
        assert_eq!(c.reason, Some(UnboundedReason::PureDimensionalityUnknown));
        assert_eq!(classify(5, 4, 0, 3, PURE).unwrap().case, Case::Bounded);
    }

    #[test]
    fn k_outside_range() {
        assert!(classify(3, 1, 0, 1, PURE).is_err());
        assert!(classify(3, 1, 0, 3, PURE).is_err());
        assert!(classify(2, 1, 0, 2, PURE).is_err());
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_sum_bound(3, 2, Case::ZeroDim), ExtNat::from_u64(3));
        assert_eq!(betti_sum_bound(2, 2, Case::Bounded), ExtNat::from_u64(6));
        for k in 2..10 {
            assert_eq!(betti_sum_bound(1, k, Case::Bounded), ExtNat::from_u64(1));
        }
        assert_eq!(betti_sum_bound(7, 3, Case::Unbounded), ExtNat::Unbounded);
    }

    #[test]
    fn op_examples() {
        assert_eq!(op_bound(&[6, 6, 4], 3, 1), BigUint::from(561u32));
        assert_eq!(op_bound(&[1], 2, 1), BigUint::from(2u32));
        assert_eq!(op_bound(&[2, 2], 4, 1), BigUint::from(405u32));
    }

    #[test]
    fn sigma_examples() {
        let e = LkExponent::Default;
        assert_eq!(sigma_bound(3, 3, 1, 0, 1, UNKNOWN, e), ExtNat::from_u64(3));
        assert_eq!(sigma_bound(3, 3, 1, 0, 2, UNKNOWN, e), ExtNat::from_u64(0));
        assert_eq!(sigma_bound(2, 4, 3, 0, 2, PURE, e), ExtNat::from_u64(6));
        assert_eq!(
            sigma_bound(2, 4, 3, 0, 2, PURE, LkExponent::PaperDisplay),
            ExtNat::from_u64(6)
        );
        assert_eq!(
            sigma_bound(2, 5, 4, 0, 1, PURE, LkExponent::PaperDisplay),
            ExtNat::from_u64(2)
        );
        assert_eq!(sigma_bound(2, 4, 3, 2, 2, PURE, e), ExtNat::Unbounded);
    }

    #[test]
    fn lk_examples() {
        let m = crofton_matrix(4);
        let e = LkExponent::Default;
        let b = lipschitz_killing_bound(3, 3, 1, 0, 1, &m, UNKNOWN, e);
        assert_eq!(b.bound, ExtReal::Finite(3.0));
        let b = lipschitz_killing_bound(2, 3, 2, 0, 1, &m, PURE, e);
        let ExtReal::Finite(x) = b.bound else {
            panic!("expected a finite bound")
        };
        assert!((x - ((PI / 2.0 - 1.0) * 2.0 + 6.0)).abs() < 1e-12);
        let b = lipschitz_killing_bound(2, 3, 2, 1, 1, &m, PURE, e);
        assert_eq!(b.reason, Some(LkReason::SingularLocusTooLarge));
        let b = lipschitz_killing_bound(2, 3, 2, 0, 1, &m, UNKNOWN, e);
        assert_eq!(b.reason, Some(LkReason::PolarInvariantUnbounded));
    }

    #[test]
    fn density_ratio() {
        let base = op_baseline_density(&[6, 6, 4], 3, 1);
        assert_eq!(base / BigUint::from(density_bound(3)), BigUint::from(187u32));
    }

    #[test]
    fn serialization_of_markers() {
        let v = serde_json::to_string(&ExtNat::Unbounded).unwrap();
        assert_eq!(v, "\"unbounded\"");
        let big = ExtNat::Finite(BigUint::from(10u32).pow(30));
        assert_eq!(serde_json::to_string(&big).unwrap(), format!("1{}", "0".repeat(30)));
        assert_eq!(serde_json::to_string(&ExtReal::Finite(PI)).unwrap(), "3.14159265359");
    }
}
