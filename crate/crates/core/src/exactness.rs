//! The n-exact decision procedure and instance-level verification of the
//! order bound and the extremal classification.
//!
//! A graph is n-exact (n ≥ 4) when it is Kₙ-free and its complement holds an
//! odd cycle of length at least 2n−5. Reports always carry certificates: the
//! maximum clique, an n-clique when one exists, and the complement cycle.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    self, is_bipartite, is_hamiltonian, is_kn_free, longest_odd_cycle_at_least, max_clique, Bipartiteness, CliqueCheck,
    CycleWitness, PrimeGraph, ODD_CYCLE_CAP,
};
use crate::models::{psl2_graph, CharModel, SolvableLabel};
use crate::numtheory::{prime_divisors, PrimePower, PrimeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExtremalClass {
    /// Order 2n−5, the least an n-exact graph can have.
    MinExtremal,
    /// Order 2n−1; only claimed for character-graph models.
    MaxExtremal,
    Interior,
    NotExact,
}

/// Where a graph came from. The 2n−1 ceiling only applies to character graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphOrigin {
    #[default]
    Arbitrary,
    CharacterModel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    pub order: usize,
    pub required_cycle_length: usize,
    pub max_clique: PrimeSet,
    pub is_kn_free: bool,
    pub clique_witness: Option<PrimeSet>,
    pub odd_cycle: Option<CycleWitness>,
    pub verdict: bool,
    pub extremal_class: ExtremalClass,
}

impl ExactnessReport {
    /// Re-checks every certificate against `g`.
    pub fn revalidate(&self, g: &PrimeGraph) -> bool {
        let comp = graph::complement(g);
        let clique_ok = |c: &PrimeSet| {
            let v = c.as_slice();
            (0..v.len()).all(|i| v[i + 1..].iter().all(|&b| g.has_edge(v[i], b)))
        };
        let cycle_ok = self
            .odd_cycle
            .as_ref()
            .is_none_or(|w| w.len() % 2 == 1 && w.len() >= self.required_cycle_length && w.validates_in(&comp));
        let witness_ok = match &self.clique_witness {
            Some(c) => !self.is_kn_free && c.len() == self.n && clique_ok(c),
            None => self.is_kn_free,
        };
        self.order == g.order()
            && clique_ok(&self.max_clique)
            && self.is_kn_free == (self.max_clique.len() < self.n)
            && witness_ok
            && cycle_ok
            && self.verdict == (self.is_kn_free && self.odd_cycle.is_some())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n-exactness needs n >= 4, got {n}")));
    }
    Ok(())
}

/// n-exact test for an arbitrary graph.
pub fn check_n_exact(g: &PrimeGraph, n: usize) -> Result<ExactnessReport> {
    check_n_exact_as(g, n, GraphOrigin::Arbitrary)
}

pub fn check_n_exact_as(g: &PrimeGraph, n: usize, origin: GraphOrigin) -> Result<ExactnessReport> {
    check_n(n)?;
    g.ensure_order_at_most("check_n_exact", ODD_CYCLE_CAP)?;
    let required = (2 * n - 5).max(3);
    let clique = max_clique(g)?;
    let clique_witness = match is_kn_free(g, n)? {
        CliqueCheck::Free => None,
        CliqueCheck::Contains(w) => Some(w),
    };
    let odd_cycle = longest_odd_cycle_at_least(&graph::complement(g), required)?;
    let is_free = clique_witness.is_none();
    let verdict = is_free && odd_cycle.is_some();
    let order = g.order();
    let extremal_class = if !verdict {
        ExtremalClass::NotExact
    } else if order == 2 * n - 5 {
        ExtremalClass::MinExtremal
    } else if order == 2 * n - 1 && origin == GraphOrigin::CharacterModel {
        ExtremalClass::MaxExtremal
    } else {
        ExtremalClass::Interior
    };
    Ok(ExactnessReport {
        n,
        order,
        required_cycle_length: required,
        max_clique: clique,
        is_kn_free: is_free,
        clique_witness,
        odd_cycle,
        verdict,
        extremal_class,
    })
}

/// The odd cycle u, m₁, p₁, …, m_k, p_k alternating between the two parts,
/// with k = min(|minus_part|, |plus_part|), taking each part's least primes.
pub fn alternating_cycle_witness(u: u128, minus_part: &PrimeSet, plus_part: &PrimeSet) -> Result<CycleWitness> {
    if minus_part.is_empty() || plus_part.is_empty() {
        return Err(Error::BadParameter("both parts must be nonempty".into()));
    }
    if !minus_part.is_disjoint(plus_part) {
        return Err(Error::BadParameter("parts must be disjoint".into()));
    }
    if minus_part.contains(u) || plus_part.contains(u) {
        return Err(Error::BadParameter(format!("parts must not contain {u}")));
    }
    let mut seq = vec![u];
    for (m, p) in minus_part.iter().zip(plus_part.iter()) {
        seq.push(m);
        seq.push(p);
    }
    Ok(CycleWitness::from_sequence(seq))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremARecord {
    pub model: String,
    pub n: usize,
    pub order: usize,
    pub bound: usize,
    pub n_exact: bool,
    pub status: Status,
    pub report: ExactnessReport,
}

/// Order bound for n-exact character graphs: PASS unless the model's graph is
/// n-exact with more than 2n−1 vertices.
pub fn verify_theorem_a(model: &CharModel, n: usize) -> Result<TheoremARecord> {
    check_n(n)?;
    let g = model.graph()?;
    let report = check_n_exact_as(&g, n, GraphOrigin::CharacterModel)?;
    let bound = 2 * n - 1;
    let status = Status::from_bool(!report.verdict || report.order <= bound);
    Ok(TheoremARecord {
        model: model.to_string(),
        n,
        order: report.order,
        bound,
        n_exact: report.verdict,
        status,
        report,
    })
}

/// Extremal case a model instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CorollaryCase {
    /// Order 2n−5: PSL₂(2^α) × abelian, |π(2^α±1)| = n−3.
    #[serde(rename = "a")]
    A,
    /// Order 2n−1: |π(2^α±1)| = n−3 with two rank-two disconnected factors.
    #[serde(rename = "b.i")]
    BI,
    /// Order 2n−1: |π(2^α±1)| = n−2 with one rank-two disconnected factor.
    #[serde(rename = "b.ii")]
    BII,
    /// Order 2n−1: |π(2^α±1)| = n−1 with abelian rest.
    #[serde(rename = "b.iii")]
    BIII,
    NotCoveredByClassification,
}

impl CorollaryCase {
    /// Order an instance of this case must have.
    pub fn required_order(self, n: usize) -> Option<usize> {
        match self {
            CorollaryCase::A => Some(2 * n - 5),
            CorollaryCase::BI | CorollaryCase::BII | CorollaryCase::BIII => Some(2 * n - 1),
            CorollaryCase::NotCoveredByClassification => None,
        }
    }
}

impl fmt::Display for CorollaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorollaryCase::A => "a",
            CorollaryCase::BI => "b.i",
            CorollaryCase::BII => "b.ii",
            CorollaryCase::BIII => "b.iii",
            CorollaryCase::NotCoveredByClassification => "not-covered",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryRecord {
    pub model: String,
    pub n: usize,
    pub alpha: u32,
    pub k: usize,
    pub case: CorollaryCase,
    /// Present for every covered case; certifies n-exactness at the required order.
    pub report: Option<ExactnessReport>,
}

fn flatten<'a>(model: &'a CharModel, out: &mut Vec<&'a CharModel>) {
    match model {
        CharModel::Product(factors) => factors.iter().for_each(|f| flatten(f, out)),
        other => out.push(other),
    }
}

/// Identifies which extremal case a `PSL₂(2^α) × solvable` model realizes and
/// certifies that its graph is n-exact with the order the case demands.
pub fn classify_corollary_b(model: &CharModel, n: usize) -> Result<CorollaryRecord> {
    check_n(n)?;
    let mut factors = Vec::new();
    flatten(model, &mut factors);

    let mut simple: Option<PrimePower> = None;
    let mut pairs = 0usize;
    for factor in &factors {
        match factor {
            CharModel::Psl2(q) if q.base() == 2 && q.exponent() >= 2 && simple.is_none() => {
                simple = Some(*q);
            }
            CharModel::Solvable(s) => {
                pairs += match s.label() {
                    SolvableLabel::Abelian => 0,
                    SolvableLabel::Type1 | SolvableLabel::Type4 => 1,
                    SolvableLabel::C4Product => 2,
                }
            }
            other => {
                return Err(Error::ShapeMismatch(format!(
                    "expected one PSL2(2^a) factor and solvable factors, found {other}"
                )))
            }
        }
    }
    let q = simple.ok_or_else(|| Error::ShapeMismatch("no PSL2(2^a) factor".into()))?;
    let alpha = q.exponent();
    let minus = prime_divisors(q.value() - 1)?.len();
    let plus = prime_divisors(q.value() + 1)?.len();
    if minus != plus {
        return Err(Error::AsymmetricPiSizes { alpha, minus, plus });
    }
    let k = minus;

    let mismatch = |case: &str| {
        Error::ShapeMismatch(format!(
            "|pi(2^{alpha}+-1)| = {k} points to case {case} but the solvable part has {pairs} rank-two factor(s)"
        ))
    };
    let case = if k + 3 == n {
        match pairs {
            0 => CorollaryCase::A,
            2 => CorollaryCase::BI,
            _ => return Err(mismatch("a or b.i")),
        }
    } else if k + 2 == n {
        match pairs {
            1 => CorollaryCase::BII,
            _ => return Err(mismatch("b.ii")),
        }
    } else if k + 1 == n {
        match pairs {
            0 => CorollaryCase::BIII,
            _ => return Err(mismatch("b.iii")),
        }
    } else {
        CorollaryCase::NotCoveredByClassification
    };

    let report = match case.required_order(n) {
        None => None,
        Some(required) => {
            let g = model.graph()?;
            let report = check_n_exact_as(&g, n, GraphOrigin::CharacterModel)?;
            if !report.verdict || report.order != required {
                return Err(Error::CertificateFailure(format!(
                    "{model} should be {n}-exact of order {required}; verdict {}, order {}",
                    report.verdict, report.order
                )));
            }
            if case != CorollaryCase::A && report.max_clique.len() != n - 1 {
                return Err(Error::CertificateFailure(format!(
                    "{model} should have clique number {}, found {}",
                    n - 1,
                    report.max_clique.len()
                )));
            }
            Some(report)
        }
    };
    Ok(CorollaryRecord {
        model: model.to_string(),
        n,
        alpha,
        k,
        case,
        report,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonRecord {
    pub f: u32,
    pub minus: PrimeSet,
    pub plus: PrimeSet,
    /// | |π(2^f+1)| − |π(2^f−1)| | ≤ 1
    pub balanced: bool,
    pub non_bipartite: bool,
    pub hamiltonian: bool,
    pub bipartition: Option<(PrimeSet, PrimeSet)>,
    pub odd_cycle: Option<CycleWitness>,
    pub hamilton_cycle: Option<CycleWitness>,
    pub status: Status,
}

/// Graph side of the Hamilton characterization for PSL₂(2^f): the complement
/// is non-bipartite and Hamiltonian exactly when |π(2^f±1)| differ by at most one.
pub fn verify_hamilton_characterization(f: u32) -> Result<HamiltonRecord> {
    if !(2..=12).contains(&f) {
        return Err(Error::BadParameter(format!("f must lie in [2, 12], got {f}")));
    }
    let q = 1u128 << f;
    let minus = prime_divisors(q - 1)?;
    let plus = prime_divisors(q + 1)?;
    let comp = graph::complement(&psl2_graph(&PrimePower::new(2, f)?)?);
    let (bipartition, odd_cycle) = match is_bipartite(&comp) {
        Bipartiteness::Bipartite { left, right } => (Some((left, right)), None),
        Bipartiteness::OddCycle(w) => (None, Some(w)),
    };
    let hamilton_cycle = is_hamiltonian(&comp)?;
    let balanced = minus.len().abs_diff(plus.len()) <= 1;
    let non_bipartite = odd_cycle.is_some();
    let hamiltonian = hamilton_cycle.is_some();
    Ok(HamiltonRecord {
        f,
        minus,
        plus,
        balanced,
        non_bipartite,
        hamiltonian,
        bipartition,
        odd_cycle,
        hamilton_cycle,
        status: Status::from_bool((non_bipartite && hamiltonian) == balanced),
    })
}
