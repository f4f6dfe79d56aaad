//! Exponent search for the extremal families and the model sweep that checks
//! the order bound across them.
//!
//! Every α in a range is profiled once (π(2^α−1), π(2^α+1)); profiles are
//! independent and computed through [`crate::par`].

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactness::{
    classify_corollary_b, verify_theorem_a, CorollaryCase, CorollaryRecord, Status, TheoremARecord,
};
use crate::models::{fresh_solvable_primes, CharModel, SolvableLabel, SolvableModel};
use crate::numtheory::{prime_divisors, PrimeSet};
use crate::par::{self, Exec};

/// Largest exponent searched; keeps 2^α + 1 below the factorization cap.
pub const ALPHA_CAP: u32 = 90;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaProfile {
    pub alpha: u32,
    /// π(2^α − 1)
    pub minus: PrimeSet,
    /// π(2^α + 1)
    pub plus: PrimeSet,
}

impl AlphaProfile {
    pub fn is_balanced(&self) -> bool {
        self.minus.len() == self.plus.len()
    }

    /// π(2^{2α} − 1) ∪ {2}, the prime support of PSL₂(2^α).
    pub fn support(&self) -> PrimeSet {
        self.minus
            .union(&self.plus)
            .union(&PrimeSet::new([2]).expect("2 is prime"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NearMiss {
    pub alpha: u32,
    pub minus_size: usize,
    pub plus_size: usize,
    /// The two sizes differ by exactly one.
    pub near_balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub k_target: usize,
    /// Cases whose π-size condition is `k_target`.
    pub cases: Vec<CorollaryCase>,
    pub realizations: Vec<AlphaProfile>,
    pub exhausted_range: (u32, u32),
    /// α where exactly one of |π(2^α∓1)| equals `k_target`.
    pub near_misses: Vec<NearMiss>,
}

fn check_range(range: &RangeInclusive<u32>) -> Result<()> {
    if range.is_empty() {
        return Ok(());
    }
    if *range.start() < 2 || *range.end() > ALPHA_CAP {
        return Err(Error::OutOfRange(format!(
            "alpha range {}..={} must lie within [2, {ALPHA_CAP}]",
            range.start(),
            range.end()
        )));
    }
    Ok(())
}

/// Factors 2^α ± 1 for every α in `range`, ascending by α.
pub fn alpha_profiles(range: RangeInclusive<u32>, exec: Exec) -> Result<Vec<AlphaProfile>> {
    check_range(&range)?;
    let alphas: Vec<u32> = range.collect();
    par::map(exec, &alphas, |&alpha| {
        let q = 1u128 << alpha;
        Ok(AlphaProfile {
            alpha,
            minus: prime_divisors(q - 1)?,
            plus: prime_divisors(q + 1)?,
        })
    })
    .into_iter()
    .collect()
}

fn cases_for(n: usize, k_target: usize) -> Result<Vec<CorollaryCase>> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n must be at least 4, got {n}")));
    }
    Ok(match n - k_target.min(n) {
        3 => vec![CorollaryCase::A, CorollaryCase::BI],
        2 => vec![CorollaryCase::BII],
        1 => vec![CorollaryCase::BIII],
        _ => {
            return Err(Error::BadParameter(format!(
                "k must be one of n-3, n-2, n-1 (n = {n}), got {k_target}"
            )))
        }
    })
}

/// Selects realizations from precomputed profiles.
pub fn select_alphas(
    n: usize,
    k_target: usize,
    profiles: &[AlphaProfile],
    range: RangeInclusive<u32>,
) -> Result<SearchResult> {
    let cases = cases_for(n, k_target)?;
    check_range(&range)?;
    let in_range: Vec<&AlphaProfile> = profiles.iter().filter(|p| range.contains(&p.alpha)).collect();
    let realizations = in_range
        .iter()
        .filter(|p| p.minus.len() == k_target && p.plus.len() == k_target)
        .map(|p| (*p).clone())
        .collect();
    let near_misses = in_range
        .iter()
        .filter(|p| (p.minus.len() == k_target) != (p.plus.len() == k_target))
        .map(|p| NearMiss {
            alpha: p.alpha,
            minus_size: p.minus.len(),
            plus_size: p.plus.len(),
            near_balanced: p.minus.len().abs_diff(p.plus.len()) == 1,
        })
        .collect();
    Ok(SearchResult {
        n,
        k_target,
        cases,
        realizations,
        exhausted_range: (*range.start(), *range.end()),
        near_misses,
    })
}

/// All α in `range` with |π(2^α−1)| = |π(2^α+1)| = `k_target`.
pub fn find_alphas(n: usize, k_target: usize, range: RangeInclusive<u32>) -> Result<SearchResult> {
    find_alphas_with(Exec::default(), n, k_target, range)
}

pub fn find_alphas_with(exec: Exec, n: usize, k_target: usize, range: RangeInclusive<u32>) -> Result<SearchResult> {
    cases_for(n, k_target)?;
    let profiles = alpha_profiles(range.clone(), exec)?;
    select_alphas(n, k_target, &profiles, range)
}

/// Solvable radical attached to PSL₂(2^α) in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SolvableShape {
    Abelian,
    OnePair,
    TwoPairs,
}

impl SolvableShape {
    pub const ALL: [SolvableShape; 3] = [SolvableShape::Abelian, SolvableShape::OnePair, SolvableShape::TwoPairs];

    fn pair_count(self) -> usize {
        match self {
            SolvableShape::Abelian => 0,
            SolvableShape::OnePair => 1,
            SolvableShape::TwoPairs => 2,
        }
    }
}

impl fmt::Display for SolvableShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolvableShape::Abelian => "abelian",
            SolvableShape::OnePair => "one-pair",
            SolvableShape::TwoPairs => "two-pairs",
        })
    }
}

/// PSL₂(2^α) × R where R has the given shape on the smallest primes outside the support.
pub fn build_model(profile: &AlphaProfile, shape: SolvableShape) -> Result<CharModel> {
    let simple = CharModel::psl2(1u128 << profile.alpha)?;
    let fresh = fresh_solvable_primes(2 * shape.pair_count(), &profile.support());
    let f = fresh.as_slice();
    let mut factors = vec![simple];
    match shape {
        SolvableShape::Abelian => factors.push(CharModel::Solvable(SolvableModel::abelian())),
        SolvableShape::OnePair => factors.push(CharModel::Solvable(SolvableModel::disconnected(
            SolvableLabel::Type1,
            f[0],
            f[1],
        )?)),
        SolvableShape::TwoPairs => {
            factors.push(CharModel::Solvable(SolvableModel::disconnected(
                SolvableLabel::Type1,
                f[0],
                f[1],
            )?));
            factors.push(CharModel::Solvable(SolvableModel::disconnected(
                SolvableLabel::Type4,
                f[2],
                f[3],
            )?));
        }
    }
    CharModel::product(factors)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CorollaryOutcome {
    Classified(CorollaryRecord),
    /// The model's solvable part does not fit the case its π-sizes select.
    ShapeMismatch {
        reason: String,
    },
    /// The case matched but the certificates did not hold.
    CertificateFailure {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub alpha: u32,
    pub k: usize,
    pub shape: SolvableShape,
    pub model: String,
    pub theorem_a: TheoremARecord,
    pub corollary: CorollaryOutcome,
    pub status: Status,
}

/// For every balanced α with |π(2^α±1)| ∈ {n−3, n−2, n−1} and each shape,
/// builds the product model and records the order-bound check and the
/// classification. Records are sorted by α, then shape.
pub fn sweep_models(n: usize, range: RangeInclusive<u32>, shapes: &[SolvableShape]) -> Result<Vec<SweepRecord>> {
    sweep_models_with(Exec::default(), n, range, shapes)
}

pub fn sweep_models_with(
    exec: Exec,
    n: usize,
    range: RangeInclusive<u32>,
    shapes: &[SolvableShape],
) -> Result<Vec<SweepRecord>> {
    let profiles = alpha_profiles(range.clone(), exec)?;
    sweep_profiles(exec, n, &profiles, range, shapes)
}

/// Sweep over precomputed profiles, so several n can share one factorization pass.
pub fn sweep_profiles(
    exec: Exec,
    n: usize,
    profiles: &[AlphaProfile],
    range: RangeInclusive<u32>,
    shapes: &[SolvableShape],
) -> Result<Vec<SweepRecord>> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n must be at least 4, got {n}")));
    }
    let mut items = Vec::new();
    for k in [n - 3, n - 2, n - 1] {
        let found = select_alphas(n, k, profiles, range.clone())?;
        for profile in found.realizations {
            for &shape in shapes {
                items.push((profile.clone(), k, shape));
            }
        }
    }
    let mut records = par::map(exec, &items, |(profile, k, shape)| {
        let model = build_model(profile, *shape)?;
        let theorem_a = verify_theorem_a(&model, n)?;
        let corollary = match classify_corollary_b(&model, n) {
            Ok(rec) => CorollaryOutcome::Classified(rec),
            Err(Error::ShapeMismatch(reason)) => CorollaryOutcome::ShapeMismatch { reason },
            Err(Error::CertificateFailure(reason)) => CorollaryOutcome::CertificateFailure { reason },
            Err(e) => return Err(e),
        };
        let ok = theorem_a.status.is_pass() && !matches!(corollary, CorollaryOutcome::CertificateFailure { .. });
        Ok(SweepRecord {
            alpha: profile.alpha,
            k: *k,
            shape: *shape,
            model: model.to_string(),
            theorem_a,
            corollary,
            status: Status::from_bool(ok),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|r| (r.alpha, r.shape));
    Ok(records)
}
