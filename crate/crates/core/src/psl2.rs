//! The groups `PSL_2(u^a)` and `SL_2(u^a)`: degree sets, their degree graphs
//! in closed form, the alternation criterion for odd cycles in the
//! complement, and Dickson's list of subgroup types.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{self, CycleWitness, DegreeSet, GraphError, PrimeGraph};
use crate::numtheory::{self, NumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Psl2Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("field order {0} is below 4")]
    FieldTooSmall(u64),
    #[error("field order {u}^{alpha} exceeds the supported range (< 2^32)")]
    FieldTooLarge { u: u64, alpha: u32 },
    #[error("prime set has even size {0}")]
    EvenSubset(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearKind {
    Psl2,
    Sl2,
}

impl fmt::Display for LinearKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinearKind::Psl2 => "PSL2",
            LinearKind::Sl2 => "SL2",
        })
    }
}

/// `PSL_2(u^alpha)` or `SL_2(u^alpha)`, optionally times an abelian group.
///
/// `SL_2(2^alpha)` is stored as `PSL_2(2^alpha)`; the groups coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearGroup {
    kind: LinearKind,
    u: u64,
    alpha: u32,
    q: u64,
    abelian_factor: BTreeSet<u64>,
}

impl LinearGroup {
    pub fn new(kind: LinearKind, u: u64, alpha: u32) -> Result<Self, Psl2Error> {
        if !numtheory::is_prime(u) {
            return Err(Psl2Error::NotPrime(u));
        }
        if alpha == 0 {
            return Err(Psl2Error::ZeroExponent);
        }
        let q = u
            .checked_pow(alpha)
            .filter(|&q| q < 1 << 32)
            .ok_or(Psl2Error::FieldTooLarge { u, alpha })?;
        if q < 4 {
            return Err(Psl2Error::FieldTooSmall(q));
        }
        let kind = if u == 2 { LinearKind::Psl2 } else { kind };
        Ok(Self {
            kind,
            u,
            alpha,
            q,
            abelian_factor: BTreeSet::new(),
        })
    }

    pub fn psl(u: u64, alpha: u32) -> Result<Self, Psl2Error> {
        Self::new(LinearKind::Psl2, u, alpha)
    }

    pub fn sl(u: u64, alpha: u32) -> Result<Self, Psl2Error> {
        Self::new(LinearKind::Sl2, u, alpha)
    }

    /// Builds the group over the field of order `q`, which must be a prime
    /// power.
    pub fn from_order(kind: LinearKind, q: u64) -> Result<Self, Psl2Error> {
        let f = numtheory::factor(q)?;
        match f.factors() {
            [(u, alpha)] => Self::new(kind, *u, *alpha),
            _ => Err(Psl2Error::NotPrimePower(q)),
        }
    }

    /// Direct product with an abelian group whose order has the given prime
    /// divisors.
    pub fn with_abelian_factor(mut self, primes: impl IntoIterator<Item = u64>) -> Self {
        self.abelian_factor.extend(primes);
        self
    }

    pub fn kind(&self) -> LinearKind {
        self.kind
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// Field order `u^alpha`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn abelian_factor(&self) -> &BTreeSet<u64> {
        &self.abelian_factor
    }

    /// `(u, alpha)` used for graph questions. `PSL_2(5)` is read as
    /// `PSL_2(4)`, the only case where the closed-form graph needs the
    /// exceptional isomorphism.
    pub fn graph_parameters(&self) -> (u64, u32) {
        if self.kind == LinearKind::Psl2 && self.q == 5 {
            (2, 2)
        } else {
            (self.u, self.alpha)
        }
    }

    pub fn name(&self) -> String {
        let mut name = format!("{}({})", self.kind, self.q);
        if !self.abelian_factor.is_empty() {
            name.push_str(&format!(" x A[{}]", self.abelian_factor.iter().join(",")));
        }
        name
    }
}

impl fmt::Display for LinearGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Anything the CLI can turn into a degree graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Linear(LinearGroup),
    Raw(DegreeSet),
}

impl GroupDescriptor {
    pub fn degree_set(&self) -> DegreeSet {
        match self {
            GroupDescriptor::Linear(g) => degree_set(g),
            GroupDescriptor::Raw(ds) => ds.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupDescriptor::Linear(g) => g.name(),
            GroupDescriptor::Raw(ds) => ds.name().to_string(),
        }
    }
}

/// The classical character degrees of `PSL_2(q)` and `SL_2(q)`.
///
/// Abelian direct factors contribute only linear characters and leave the
/// set unchanged.
pub fn degree_set(g: &LinearGroup) -> DegreeSet {
    let q = g.q;
    let degrees: Vec<u64> = match (g.kind, g.u) {
        (_, 2) => vec![1, q - 1, q, q + 1],
        (LinearKind::Psl2, _) if q == 5 => vec![1, 3, 4, 5],
        (LinearKind::Psl2, _) => {
            // (q + e)/2 with e = (-1)^((q-1)/2)
            let half = if q % 4 == 1 { (q + 1) / 2 } else { (q - 1) / 2 };
            vec![1, half, q - 1, q, q + 1]
        }
        (LinearKind::Sl2, _) => vec![1, (q - 1) / 2, (q + 1) / 2, q - 1, q, q + 1],
    };
    DegreeSet::new(g.name(), degrees).expect("degree list contains 1 and no 0")
}

/// The degree graph of `g` from its closed-form description: `u` isolated,
/// `pi(q+1)` and `pi(q-1)` complete, and no other edges.
pub fn closed_form_graph(g: &LinearGroup) -> PrimeGraph {
    let (u, alpha) = g.graph_parameters();
    let q = u.pow(alpha);
    let plus = numtheory::prime_set(q + 1, false).expect("q + 1 > 0");
    let minus = numtheory::prime_set(q - 1, false).expect("q - 1 > 0");
    let mut out = PrimeGraph::new();
    out.add_vertex(u);
    for part in [&plus, &minus] {
        for &p in part {
            out.add_vertex(p);
        }
        for (&a, &b) in part.iter().tuple_combinations() {
            out.add_edge(a, b);
        }
    }
    out
}

/// Joins a prime `s` dividing `|G/S|` to every prime in `pi(u^(2 alpha) - 1)`.
///
/// No edge from `s` to `u` is added.
pub fn add_outer_prime(
    g: &PrimeGraph,
    group: &LinearGroup,
    s: u64,
) -> Result<PrimeGraph, Psl2Error> {
    if !numtheory::is_prime(s) {
        return Err(Psl2Error::NotPrime(s));
    }
    let q = group.q();
    let targets = numtheory::prime_set(q * q - 1, false)?;
    let mut out = g.clone();
    out.add_vertex(s);
    for t in targets {
        out.add_edge(s, t);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlternationFailure {
    /// fewer than three primes
    TooSmall,
    /// the characteristic is not in the set
    MissingCharacteristic,
    /// 2 appears besides the characteristic
    EvenPrime,
    /// a prime divides neither `q + 1` nor `q - 1`
    Unassigned(u64),
    /// the two sides have different sizes
    Unbalanced,
}

/// Result of the alternation criterion with its partition witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternation {
    pub characteristic: u64,
    /// odd primes of the set dividing `q + 1`
    pub plus: BTreeSet<u64>,
    /// odd primes of the set dividing `q - 1`
    pub minus: BTreeSet<u64>,
    pub failure: Option<AlternationFailure>,
}

impl Alternation {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    /// The cycle `u, a1, b1, a2, b2, ...` in the complement graph, when the
    /// criterion holds.
    pub fn cycle_order(&self) -> Option<Vec<u64>> {
        if !self.holds() {
            return None;
        }
        let mut order = vec![self.characteristic];
        for (a, b) in self.plus.iter().zip(&self.minus) {
            order.push(*a);
            order.push(*b);
        }
        Some(order)
    }
}

/// Whether `primes` (odd size) consists of the characteristic together with
/// odd primes taken alternately from `pi(q+1)` and `pi(q-1)`.
///
/// This is decided from the arithmetic alone; for odd sizes the complement
/// graph induced on such a set is a complete bipartite graph plus a vertex
/// joined to everything.
pub fn theorem_a_predicate(
    g: &LinearGroup,
    primes: &BTreeSet<u64>,
) -> Result<Alternation, Psl2Error> {
    if primes.len() % 2 == 0 {
        return Err(Psl2Error::EvenSubset(primes.len()));
    }
    let (u, alpha) = g.graph_parameters();
    let q = u.pow(alpha);
    let plus_primes = numtheory::prime_set(q + 1, true)?;
    let minus_primes = numtheory::prime_set(q - 1, true)?;
    let rest: BTreeSet<u64> = primes.iter().copied().filter(|&p| p != u).collect();
    let plus: BTreeSet<u64> = rest.intersection(&plus_primes).copied().collect();
    let minus: BTreeSet<u64> = rest.intersection(&minus_primes).copied().collect();
    let failure = if primes.len() < 3 {
        Some(AlternationFailure::TooSmall)
    } else if !primes.contains(&u) {
        Some(AlternationFailure::MissingCharacteristic)
    } else if rest.contains(&2) {
        Some(AlternationFailure::EvenPrime)
    } else if let Some(&p) = rest.iter().find(|p| !plus.contains(p) && !minus.contains(p)) {
        Some(AlternationFailure::Unassigned(p))
    } else if plus.len() != minus.len() || plus.is_empty() {
        Some(AlternationFailure::Unbalanced)
    } else {
        None
    };
    Ok(Alternation {
        characteristic: u,
        plus,
        minus,
        failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub subset: BTreeSet<u64>,
    pub cycle: Option<CycleWitness>,
    pub predicate: bool,
}

/// Exhaustive comparison of cycle existence against the alternation
/// criterion on all odd vertex subsets of size `3..=max_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremAReport {
    pub group: LinearGroup,
    pub max_size: usize,
    pub subsets_tested: usize,
    /// subsets spanning a cycle of the complement, in test order
    pub cycle_sets: Vec<BTreeSet<u64>>,
    pub predicate_true: usize,
    pub disagreements: Vec<Disagreement>,
}

impl TheoremAReport {
    pub fn is_consistent(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn theorem_a_verify(g: &LinearGroup, max_size: usize) -> Result<TheoremAReport, Psl2Error> {
    if max_size < 3 {
        return Err(GraphError::CycleSizeTooSmall(max_size).into());
    }
    let comp = closed_form_graph(g).complement();
    let verts: Vec<u64> = comp.vertices().iter().copied().collect();
    let mut report = TheoremAReport {
        group: g.clone(),
        max_size,
        subsets_tested: 0,
        cycle_sets: Vec::new(),
        predicate_true: 0,
        disagreements: Vec::new(),
    };
    for size in (3..=max_size.min(verts.len())).step_by(2) {
        for combo in verts.iter().copied().combinations(size) {
            let subset: BTreeSet<u64> = combo.into_iter().collect();
            let cycle = graph::has_spanning_cycle(&comp, &subset, max_size)?;
            let predicate = theorem_a_predicate(g, &subset)?.holds();
            report.subsets_tested += 1;
            if predicate {
                report.predicate_true += 1;
            }
            if cycle.is_some() {
                report.cycle_sets.push(subset.clone());
            }
            if cycle.is_some() != predicate {
                report.disagreements.push(Disagreement {
                    subset,
                    cycle,
                    predicate,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupType {
    DihedralPlus,
    DihedralMinus,
    Affine,
    A4,
    S4,
    A5,
    PslSub,
    PglSub,
}

/// One line of Dickson's list for a given `PSL_2(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupTypeRecord {
    pub kind: SubgroupType,
    pub order: u128,
    /// subfield exponent for the `PSL_2(u^beta)` and `PGL_2(u^beta)` types
    pub beta: Option<u32>,
    pub condition_met: bool,
}

/// Subgroup types of `PSL_2(u^alpha)` with `d = gcd(2, q - 1)`.
///
/// `A4`, `S4` and `A5` are always listed with their existence condition
/// evaluated; `PGL_2(u^beta)` appears only for `u` odd and `alpha/beta`
/// even.
pub fn dickson_subgroups(g: &LinearGroup) -> Vec<SubgroupTypeRecord> {
    let (u, alpha) = (g.u as u128, g.alpha);
    let q = g.q as u128;
    let d = if q % 2 == 1 { 2 } else { 1 };
    let record = |kind, order, condition_met| SubgroupTypeRecord {
        kind,
        order,
        beta: None,
        condition_met,
    };
    let mut out = vec![
        record(SubgroupType::DihedralPlus, 2 * (q + 1) / d, true),
        record(SubgroupType::DihedralMinus, 2 * (q - 1) / d, true),
        record(SubgroupType::Affine, q * (q - 1) / d, true),
        record(SubgroupType::A4, 12, !(u == 2 && alpha % 2 == 1)),
        record(SubgroupType::S4, 24, (q * q) % 16 == 1),
        record(SubgroupType::A5, 60, (q * (q * q - 1)) % 5 == 0),
    ];
    for beta in (1..=alpha).filter(|b| alpha % b == 0) {
        let sub = u.pow(beta);
        let full = sub * (sub * sub - 1);
        let d_sub = if sub % 2 == 1 { 2 } else { 1 };
        out.push(SubgroupTypeRecord {
            kind: SubgroupType::PslSub,
            order: full / d_sub,
            beta: Some(beta),
            condition_met: true,
        });
        if u != 2 && (alpha / beta) % 2 == 0 {
            out.push(SubgroupTypeRecord {
                kind: SubgroupType::PglSub,
                order: full,
                beta: Some(beta),
                condition_met: true,
            });
        }
    }
    out
}
