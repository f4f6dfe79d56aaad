//! Character-graph constructors for the group families handled here:
//! PSL₂(q), the Suzuki groups ²B₂(q²), abstract solvable models and direct
//! products of models with disjoint prime supports.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, SolvableViolation};
use crate::graph::{self, is_bipartite, isomorphic_small, Bipartiteness, PrimeGraph};
use crate::numtheory::{factorize, prime_divisors, smallest_primes_excluding, PrimePower, PrimeSet};

/// cd(G): a set of positive integers that contains 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSet(BTreeSet<u128>);

impl DegreeSet {
    pub fn new(degrees: impl IntoIterator<Item = u128>) -> Result<Self> {
        let set: BTreeSet<u128> = degrees.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::BadParameter("character degrees are positive".into()));
        }
        if !set.contains(&1) {
            return Err(Error::BadParameter("a degree set always contains 1".into()));
        }
        Ok(DegreeSet(set))
    }

    pub fn iter(&self) -> impl Iterator<Item = u128> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, d: u128) -> bool {
        self.0.contains(&d)
    }
}

/// Δ from a degree set: primes dividing some degree, p–q adjacent when pq divides some degree.
pub fn graph_from_degrees(degrees: &DegreeSet) -> Result<PrimeGraph> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for d in degrees.iter().filter(|&d| d > 1) {
        let primes = factorize(d)?.support();
        let ps = primes.as_slice();
        for (i, &p) in ps.iter().enumerate() {
            vertices.insert(p);
            edges.extend(ps[i + 1..].iter().map(|&q| (p, q)));
        }
    }
    let vertices = PrimeSet::new(vertices)?;
    PrimeGraph::new(vertices, edges)
}

fn check_psl2_parameter(q: &PrimePower) -> Result<()> {
    if q.value() < 4 {
        return Err(Error::BadParameter(format!("PSL2(q) needs q >= 4, got {}", q.value())));
    }
    Ok(())
}

fn is_power_of_two(n: u128) -> bool {
    n.is_power_of_two()
}

/// Δ(PSL₂(q)) from its component structure.
///
/// Even q: three complete components {2}, π(q−1), π(q+1). Odd q > 5: {p}
/// isolated and π(q²−1) complete when q±1 is a power of two; otherwise 2 is
/// joined to everything, M = π(q−1)∖{2} and P = π(q+1)∖{2} are cliques and no
/// M–P edges exist. q = 5 is handled as q = 4 (PSL₂(4) ≅ PSL₂(5)).
pub fn psl2_graph(q: &PrimePower) -> Result<PrimeGraph> {
    check_psl2_parameter(q)?;
    let value = q.value();
    if value == 5 {
        return psl2_graph(&PrimePower::new(2, 2)?);
    }
    let minus = prime_divisors(value - 1)?;
    let plus = prime_divisors(value + 1)?;
    let clique_edges = |s: &PrimeSet| -> Vec<(u128, u128)> {
        let v = s.as_slice();
        (0..v.len())
            .flat_map(|i| v[i + 1..].iter().map(move |&b| (v[i], b)))
            .collect()
    };
    let base = PrimeSet::new([q.base()])?;
    let vertices = base.union(&minus).union(&plus);

    let mut edges = Vec::new();
    if q.base() == 2 {
        edges.extend(clique_edges(&minus));
        edges.extend(clique_edges(&plus));
    } else if is_power_of_two(value - 1) || is_power_of_two(value + 1) {
        edges.extend(clique_edges(&minus.union(&plus)));
    } else {
        let two = PrimeSet::new([2])?;
        let m = minus.difference(&two);
        let p = plus.difference(&two);
        edges.extend(clique_edges(&m));
        edges.extend(clique_edges(&p));
        edges.extend(m.iter().chain(p.iter()).map(|r| (2, r)));
    }
    PrimeGraph::new(vertices, edges)
}

/// Δ(²B₂(q²)) with q² = 2^(2m+1): ρ = {2} ∪ π(q²−1) ∪ π(q⁴+1), odd part
/// complete, 2 adjacent exactly to π(q²−1).
pub fn suzuki_graph(m: u32) -> Result<PrimeGraph> {
    if m == 0 {
        return Err(Error::BadParameter("Suzuki groups need m >= 1".into()));
    }
    let q2_exp = 2 * m + 1;
    let q4_exp = 2 * q2_exp;
    if q4_exp >= 127 {
        return Err(Error::OutOfRange(format!(
            "q^4 + 1 = 2^{q4_exp} + 1 exceeds the factorization cap 2^96"
        )));
    }
    let q2 = 1u128 << q2_exp;
    let adjacent_to_two = prime_divisors(q2 - 1)?;
    let rest = prime_divisors((1u128 << q4_exp) + 1)?;
    let odd = adjacent_to_two.union(&rest);
    let vertices = odd.union(&PrimeSet::new([2])?);
    let o = odd.as_slice();
    let mut edges: Vec<(u128, u128)> = (0..o.len())
        .flat_map(|i| o[i + 1..].iter().map(move |&b| (o[i], b)))
        .collect();
    edges.extend(adjacent_to_two.iter().map(|r| (2, r)));
    PrimeGraph::new(vertices, edges)
}

/// Character degrees of PSL₂(q), used only to cross-check [`psl2_graph`].
///
/// Even q: {1, q−1, q, q+1}. Odd q: {1, q−1, q, q+1, (q+ε)/2} with
/// ε = (−1)^((q−1)/2). For q = 5 no character of degree q+1 exists and the
/// set is cd(A₅) = {1, 3, 4, 5}.
pub fn psl2_degree_oracle(q: &PrimePower) -> Result<DegreeSet> {
    check_psl2_parameter(q)?;
    let v = q.value();
    if q.base() == 2 {
        return DegreeSet::new([1, v - 1, v, v + 1]);
    }
    if v == 5 {
        return DegreeSet::new([1, 3, 4, 5]);
    }
    let half = if v % 4 == 1 { v.div_ceil(2) } else { (v - 1) / 2 };
    DegreeSet::new([1, v - 1, v, v + 1, half])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SolvableLabel {
    Type1,
    Type4,
    C4Product,
    Abelian,
}

impl SolvableLabel {
    pub fn name(self) -> &'static str {
        match self {
            SolvableLabel::Type1 => "Type1",
            SolvableLabel::Type4 => "Type4",
            SolvableLabel::C4Product => "C4Product",
            SolvableLabel::Abelian => "Abelian",
        }
    }
}

/// A solvable group seen only through its character graph.
///
/// Constructors enforce that the complement is bipartite and that a graph on
/// four or more vertices contains a triangle or is a 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableModel {
    label: SolvableLabel,
    rho: PrimeSet,
    graph: PrimeGraph,
}

impl SolvableModel {
    pub fn new(label: SolvableLabel, rho: PrimeSet, graph: PrimeGraph) -> Result<Self> {
        if graph.vertices() != &rho {
            return Err(SolvableViolation::VertexSetMismatch.into());
        }
        if let Bipartiteness::OddCycle(w) = is_bipartite(&graph::complement(&graph)) {
            return Err(SolvableViolation::ComplementNotBipartite(w.vertices().to_vec()).into());
        }
        let order = graph.order();
        if order >= 4 && !graph::has_triangle(&graph) && !(order == 4 && is_c4(&graph)?) {
            return Err(SolvableViolation::NeitherTriangleNorC4(order).into());
        }
        let shape_ok = match label {
            SolvableLabel::Abelian => rho.is_empty(),
            SolvableLabel::Type1 | SolvableLabel::Type4 => rho.len() == 2 && graph.edge_count() == 0,
            SolvableLabel::C4Product => order == 4 && is_c4(&graph)?,
        };
        if !shape_ok {
            let requirement = match label {
                SolvableLabel::Abelian => "an empty prime set",
                SolvableLabel::Type1 | SolvableLabel::Type4 => "two primes and no edges",
                SolvableLabel::C4Product => "a 4-cycle",
            };
            return Err(SolvableViolation::LabelShape {
                label: label.name(),
                requirement,
            }
            .into());
        }
        Ok(SolvableModel { label, rho, graph })
    }

    pub fn abelian() -> Self {
        SolvableModel {
            label: SolvableLabel::Abelian,
            rho: PrimeSet::empty(),
            graph: PrimeGraph::empty(PrimeSet::empty()),
        }
    }

    /// Disconnected group of Type 1 or 4 on two primes; its graph has no edges.
    pub fn disconnected(label: SolvableLabel, p: u128, q: u128) -> Result<Self> {
        if !matches!(label, SolvableLabel::Type1 | SolvableLabel::Type4) {
            return Err(Error::BadParameter(format!(
                "{} is not a disconnected type",
                label.name()
            )));
        }
        let rho = PrimeSet::new([p, q])?;
        let graph = PrimeGraph::empty(rho.clone());
        SolvableModel::new(label, rho, graph)
    }

    /// A × B for two rank-two disconnected factors; Δ is the 4-cycle K₂,₂.
    pub fn c4_product(a: &SolvableModel, b: &SolvableModel) -> Result<Self> {
        let graph = graph::join(&a.graph, &b.graph)?;
        let rho = graph.vertices().clone();
        SolvableModel::new(SolvableLabel::C4Product, rho, graph)
    }

    pub fn label(&self) -> SolvableLabel {
        self.label
    }

    pub fn rho(&self) -> &PrimeSet {
        &self.rho
    }

    pub fn graph(&self) -> &PrimeGraph {
        &self.graph
    }
}

fn is_c4(g: &PrimeGraph) -> Result<bool> {
    let square = PrimeGraph::cycle(&[2, 3, 5, 7])?;
    isomorphic_small(g, &square)
}

/// A group model from which Δ(G) is derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharModel {
    Psl2(PrimePower),
    /// ²B₂(q²) with q² = 2^(2m+1).
    Suzuki(u32),
    Solvable(SolvableModel),
    /// Direct product; factors have pairwise disjoint prime supports.
    Product(Vec<CharModel>),
}

impl CharModel {
    pub fn psl2(q: u128) -> Result<Self> {
        let pp = PrimePower::from_value(q)?;
        check_psl2_parameter(&pp)?;
        Ok(CharModel::Psl2(pp))
    }

    pub fn suzuki(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadParameter("Suzuki groups need m >= 1".into()));
        }
        Ok(CharModel::Suzuki(m))
    }

    /// Validated direct product; overlapping supports are a `VertexClash`.
    pub fn product(factors: Vec<CharModel>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::BadParameter("a product needs at least one factor".into()));
        }
        let model = CharModel::Product(factors);
        model.graph()?;
        Ok(model)
    }

    /// Δ(G) for this model.
    pub fn graph(&self) -> Result<PrimeGraph> {
        model_graph(self)
    }

    /// ρ(G), the vertex set of the model's graph.
    pub fn support(&self) -> Result<PrimeSet> {
        Ok(self.graph()?.vertices().clone())
    }
}

impl fmt::Display for CharModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharModel::Psl2(q) => write!(f, "PSL2({q})"),
            CharModel::Suzuki(m) => match 1u128.checked_shl(2 * m + 1) {
                Some(q2) => write!(f, "Sz({q2})"),
                None => write!(f, "Sz(2^{})", 2 * m + 1),
            },
            CharModel::Solvable(s) if s.label == SolvableLabel::Abelian => f.write_str("Abelian"),
            CharModel::Solvable(s) => write!(f, "{}{}", s.label.name(), s.rho),
            CharModel::Product(factors) => {
                for (i, m) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn model_graph(model: &CharModel) -> Result<PrimeGraph> {
    match model {
        CharModel::Psl2(q) => psl2_graph(q),
        CharModel::Suzuki(m) => suzuki_graph(*m),
        CharModel::Solvable(s) => Ok(s.graph.clone()),
        CharModel::Product(factors) => {
            let mut acc = PrimeGraph::empty(PrimeSet::empty());
            for factor in factors {
                acc = graph::join(&acc, &model_graph(factor)?)?;
            }
            Ok(acc)
        }
    }
}

/// The `count` smallest primes outside `partner`, for attaching solvable factors.
pub fn fresh_solvable_primes(count: usize, partner: &PrimeSet) -> PrimeSet {
    smallest_primes_excluding(count, partner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, has_triangle, induced_subgraph, PrimeGraph};

    fn set(v: &[u128]) -> PrimeSet {
        PrimeSet::new(v.iter().copied()).unwrap()
    }

    fn pp(q: u128) -> PrimePower {
        PrimePower::from_value(q).unwrap()
    }

    fn type1(p: u128, q: u128) -> CharModel {
        CharModel::Solvable(SolvableModel::disconnected(SolvableLabel::Type1, p, q).unwrap())
    }

    fn type4(p: u128, q: u128) -> CharModel {
        CharModel::Solvable(SolvableModel::disconnected(SolvableLabel::Type4, p, q).unwrap())
    }

    #[test]
    fn degrees_examples() {
        let g = graph_from_degrees(&DegreeSet::new([1]).unwrap()).unwrap();
        assert_eq!(g.order(), 0);

        let g = graph_from_degrees(&DegreeSet::new([1, 3, 6, 7, 8]).unwrap()).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 3, 7]));
        assert_eq!(g.edges(), vec![(2, 3)]);

        let g = graph_from_degrees(&DegreeSet::new([1, 5, 10, 11, 12]).unwrap()).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 3, 5, 11]));
        assert_eq!(g.edges(), vec![(2, 3), (2, 5)]);
    }

    #[test]
    fn degree_set_validation() {
        assert!(DegreeSet::new([2, 3]).is_err());
        assert!(DegreeSet::new([0, 1]).is_err());
    }

    #[test]
    fn psl2_examples() {
        let g = psl2_graph(&pp(4)).unwrap();
        assert_eq!(g, PrimeGraph::empty(set(&[2, 3, 5])));

        let g = psl2_graph(&pp(64)).unwrap();
        assert_eq!(connected_components(&g), vec![set(&[2]), set(&[3, 7]), set(&[5, 13])]);
        assert_eq!(g.edges(), vec![(3, 7), (5, 13)]);

        let g = psl2_graph(&pp(11)).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 3, 5, 11]));
        assert_eq!(g.edges(), vec![(2, 3), (2, 5)]);
        let sub = induced_subgraph(&g, &set(&[2, 3, 5])).unwrap();
        assert_eq!(sub.edges(), vec![(2, 3), (2, 5)]);

        assert_eq!(psl2_graph(&pp(5)).unwrap(), psl2_graph(&pp(4)).unwrap());
        assert!(matches!(psl2_graph(&pp(3)), Err(Error::BadParameter(_))));
        assert!(matches!(CharModel::psl2(2), Err(Error::BadParameter(_))));
        assert!(matches!(CharModel::psl2(12), Err(Error::BadParameter(_))));
    }

    #[test]
    fn psl2_7_complete_part() {
        let g = psl2_graph(&pp(7)).unwrap();
        let expected = PrimeGraph::new(set(&[2, 3, 7]), [(2, 3)]).unwrap();
        assert_eq!(g, expected);
        assert!(crate::graph::isomorphic_small(&g, &expected).unwrap());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            psl2_degree_oracle(&pp(4)).unwrap(),
            DegreeSet::new([1, 3, 4, 5]).unwrap()
        );
        assert_eq!(
            psl2_degree_oracle(&pp(7)).unwrap(),
            DegreeSet::new([1, 6, 7, 8, 3]).unwrap()
        );
        assert_eq!(
            psl2_degree_oracle(&pp(9)).unwrap(),
            DegreeSet::new([1, 8, 9, 10, 5]).unwrap()
        );
        for q in [4, 5, 7, 9, 11, 13, 64, 121, 125] {
            let q = pp(q);
            let via_degrees = graph_from_degrees(&psl2_degree_oracle(&q).unwrap()).unwrap();
            assert_eq!(via_degrees, psl2_graph(&q).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn suzuki_examples() {
        let g = suzuki_graph(1).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 5, 7, 13]));
        assert_eq!(g.edges(), vec![(2, 7), (5, 7), (5, 13), (7, 13)]);
        assert!(has_triangle(&g));

        let g = suzuki_graph(2).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 5, 31, 41]));
        assert_eq!(g.neighbors(2).unwrap().collect::<Vec<_>>(), vec![31]);

        assert!(matches!(suzuki_graph(0), Err(Error::BadParameter(_))));
        assert!(matches!(suzuki_graph(40), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn product_examples() {
        let s4 = CharModel::psl2(4).unwrap();
        let abelian = CharModel::Solvable(SolvableModel::abelian());
        let g = CharModel::product(vec![s4.clone(), abelian]).unwrap().graph().unwrap();
        assert_eq!(g, s4.graph().unwrap());

        let s64 = CharModel::psl2(64).unwrap();
        let m = CharModel::product(vec![s64.clone(), type1(11, 17)]).unwrap();
        let g = m.graph().unwrap();
        assert_eq!(g.order(), 7);
        for x in [11, 17] {
            for y in [2, 3, 5, 7, 13] {
                assert!(g.has_edge(x, y));
            }
        }
        assert!(!g.has_edge(11, 17));

        let m = CharModel::product(vec![s64, type1(11, 17), type4(19, 23)]).unwrap();
        let g = m.graph().unwrap();
        assert_eq!(g.order(), 9);
        let square = induced_subgraph(&g, &set(&[11, 17, 19, 23])).unwrap();
        assert!(crate::graph::isomorphic_small(&square, &PrimeGraph::cycle(&[2, 3, 5, 7]).unwrap()).unwrap());
        assert_eq!(m.to_string(), "PSL2(64) x Type1{11,17} x Type4{19,23}");
    }

    #[test]
    fn product_rejects_overlap() {
        let s64 = CharModel::psl2(64).unwrap();
        assert_eq!(
            CharModel::product(vec![s64, type1(7, 11)]),
            Err(Error::VertexClash(vec![7]))
        );
        assert!(CharModel::product(vec![]).is_err());
    }

    #[test]
    fn product_complement_restricts_to_factor_complement() {
        let s = CharModel::psl2(64).unwrap();
        let r = type1(11, 17);
        let g = CharModel::product(vec![s.clone(), r.clone()]).unwrap().graph().unwrap();
        let comp = crate::graph::complement(&g);
        for factor in [s, r] {
            let fg = factor.graph().unwrap();
            let restricted = induced_subgraph(&comp, fg.vertices()).unwrap();
            assert_eq!(restricted, crate::graph::complement(&fg));
        }
    }

    #[test]
    fn solvable_constraints() {
        // complement of a 5-cycle is a 5-cycle: not bipartite
        let c5 = PrimeGraph::cycle(&[2, 3, 5, 7, 11]).unwrap();
        assert!(matches!(
            SolvableModel::new(SolvableLabel::Abelian, c5.vertices().clone(), c5),
            Err(Error::Solvable(SolvableViolation::ComplementNotBipartite(_)))
        ));
        // path on 4 vertices: complement is a path (bipartite), no triangle, not C4
        let p4 = PrimeGraph::new(set(&[2, 3, 5, 7]), [(2, 3), (3, 5), (5, 7)]).unwrap();
        assert_eq!(
            SolvableModel::new(SolvableLabel::C4Product, p4.vertices().clone(), p4),
            Err(Error::Solvable(SolvableViolation::NeitherTriangleNorC4(4)))
        );
        let edge = PrimeGraph::complete(set(&[2, 3]));
        assert!(matches!(
            SolvableModel::new(SolvableLabel::Type1, set(&[2, 3]), edge),
            Err(Error::Solvable(SolvableViolation::LabelShape { .. }))
        ));
        assert_eq!(
            SolvableModel::new(SolvableLabel::Type1, set(&[2, 5]), PrimeGraph::empty(set(&[2, 3]))),
            Err(Error::Solvable(SolvableViolation::VertexSetMismatch))
        );

        let a = SolvableModel::disconnected(SolvableLabel::Type1, 11, 17).unwrap();
        let b = SolvableModel::disconnected(SolvableLabel::Type4, 19, 23).unwrap();
        let c4 = SolvableModel::c4_product(&a, &b).unwrap();
        assert_eq!(c4.graph().edge_count(), 4);
        assert!(SolvableModel::disconnected(SolvableLabel::Abelian, 11, 17).is_err());
    }

    #[test]
    fn fresh_primes_avoid_partner() {
        let s = CharModel::psl2(64).unwrap().support().unwrap();
        assert_eq!(fresh_solvable_primes(4, &s), set(&[11, 17, 19, 23]));
    }
}
