//! Prime graphs: the character degree graph of a degree set, its complement,
//! and the graph properties the classification works with.
//!
//! Graphs here are tiny (a few dozen primes at most). Search routines work on
//! `u64` adjacency masks indexed by the ascending vertex order, which caps the
//! vertex count at 64.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::numtheory::{self, NumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("degree set {name:?} does not contain 1")]
    MissingTrivialDegree { name: String },
    #[error("degree set {name:?} contains 0")]
    ZeroDegree { name: String },
    #[error("{0} is not a vertex of the graph")]
    UnknownVertex(u64),
    #[error("vertex set of size {size} exceeds the search capacity {cap}")]
    Capacity { size: usize, cap: usize },
    #[error("maximum cycle size must be at least 3, got {0}")]
    CycleSizeTooSmall(usize),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Hard limit coming from the `u64` adjacency masks.
pub const MAX_MASK_VERTICES: usize = 64;

/// Default bound on the vertex set of a spanning-cycle query.
pub const DEFAULT_MAX_CYCLE_LEN: usize = 12;

/// A named set of character degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSet {
    name: String,
    degrees: BTreeSet<u64>,
}

impl DegreeSet {
    pub fn new(
        name: impl Into<String>,
        degrees: impl IntoIterator<Item = u64>,
    ) -> Result<Self, GraphError> {
        let name = name.into();
        let degrees: BTreeSet<u64> = degrees.into_iter().collect();
        if degrees.contains(&0) {
            return Err(GraphError::ZeroDegree { name });
        }
        if !degrees.contains(&1) {
            return Err(GraphError::MissingTrivialDegree { name });
        }
        Ok(Self { name, degrees })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degrees(&self) -> &BTreeSet<u64> {
        &self.degrees
    }
}

/// Undirected simple graph on a set of primes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    // each edge stored once as (smaller, larger)
    edges: BTreeSet<(u64, u64)>,
}

fn ordered(a: u64, b: u64) -> (u64, u64) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PrimeGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph, adding edge endpoints to the vertex set. Loops are
    /// dropped.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_vertex(&mut self, v: u64) {
        self.vertices.insert(v);
    }

    pub fn add_edge(&mut self, a: u64, b: u64) {
        if a == b {
            return;
        }
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.insert(ordered(a, b));
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: u64) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        a != b && self.edges.contains(&ordered(a, b))
    }

    pub fn neighbors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        self.vertices
            .iter()
            .copied()
            .filter(move |&w| self.has_edge(v, w))
    }

    /// Same vertices, complemented adjacency.
    pub fn complement(&self) -> PrimeGraph {
        let edges = self
            .vertices
            .iter()
            .copied()
            .tuple_combinations()
            .filter(|&(a, b)| !self.has_edge(a, b))
            .collect();
        PrimeGraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// Subgraph induced on `subset` (vertices outside the graph are ignored).
    pub fn induced(&self, subset: &BTreeSet<u64>) -> PrimeGraph {
        let vertices: BTreeSet<u64> = subset.intersection(&self.vertices).copied().collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| vertices.contains(a) && vertices.contains(b))
            .collect();
        PrimeGraph { vertices, edges }
    }

    /// Adjacency masks over the ascending vertex order.
    fn masks(&self) -> Result<(Vec<u64>, Vec<u64>), GraphError> {
        let n = self.vertices.len();
        if n > MAX_MASK_VERTICES {
            return Err(GraphError::Capacity {
                size: n,
                cap: MAX_MASK_VERTICES,
            });
        }
        let order: Vec<u64> = self.vertices.iter().copied().collect();
        let index: BTreeMap<u64, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![0u64; n];
        for &(a, b) in &self.edges {
            let (i, j) = (index[&a], index[&b]);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok((order, adj))
    }
}

impl fmt::Display for PrimeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs = self.vertices.iter().join(", ");
        let es = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).join(", ");
        write!(f, "V = {{{vs}}}, E = {{{es}}}")
    }
}

/// The character degree graph: primes dividing some degree, `p ~ q` iff
/// `pq` divides some degree.
pub fn build_degree_graph(ds: &DegreeSet) -> Result<PrimeGraph, GraphError> {
    let mut g = PrimeGraph::new();
    for &d in ds.degrees() {
        let primes: Vec<u64> = numtheory::factor(d)?.primes().collect();
        for &p in &primes {
            g.add_vertex(p);
        }
        for (&p, &q) in primes.iter().tuple_combinations() {
            g.add_edge(p, q);
        }
    }
    Ok(g)
}

pub fn complement(g: &PrimeGraph) -> PrimeGraph {
    g.complement()
}

/// Connected components, each sorted, listed by smallest element.
pub fn components(g: &PrimeGraph) -> Vec<Vec<u64>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in g.vertices() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A simple cycle, listed from its first vertex; the closing edge is implied.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    order: Vec<u64>,
}

impl CycleWitness {
    /// Accepts `order` only if it is a simple cycle of `g` with at least
    /// three vertices.
    pub fn checked(order: Vec<u64>, g: &PrimeGraph) -> Option<Self> {
        let w = Self { order };
        w.is_valid_in(g).then_some(w)
    }

    pub fn order(&self) -> &[u64] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<u64> {
        self.order.iter().copied().collect()
    }

    pub fn is_valid_in(&self, g: &PrimeGraph) -> bool {
        let n = self.order.len();
        n >= 3
            && self.vertex_set().len() == n
            && (0..n).all(|i| g.has_edge(self.order[i], self.order[(i + 1) % n]))
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.order.iter().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper two-colouring; each side sorted.
    Bipartite { left: Vec<u64>, right: Vec<u64> },
    OddCycle(CycleWitness),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

/// Two-colours `g` by breadth-first search from the smallest uncoloured
/// vertex, or returns an odd cycle closing a monochromatic edge.
pub fn is_bipartite(g: &PrimeGraph) -> Bipartition {
    let mut colour: BTreeMap<u64, (bool, Option<u64>, usize)> = BTreeMap::new();
    for &root in g.vertices() {
        if colour.contains_key(&root) {
            continue;
        }
        colour.insert(root, (false, None, 0));
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let (cv, _, depth) = colour[&v];
            for w in g.neighbors(v) {
                match colour.get(&w) {
                    None => {
                        colour.insert(w, (!cv, Some(v), depth + 1));
                        queue.push_back(w);
                    }
                    Some(&(cw, _, _)) if cw == cv => {
                        return Bipartition::OddCycle(odd_cycle_from(&colour, v, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (left, right): (Vec<u64>, Vec<u64>) = colour.keys().partition(|v| !colour[v].0);
    Bipartition::Bipartite { left, right }
}

/// Joins the BFS tree paths from `v` and `w` to their common ancestor.
fn odd_cycle_from(tree: &BTreeMap<u64, (bool, Option<u64>, usize)>, v: u64, w: u64) -> CycleWitness {
    let parent = |x: u64| tree[&x].1.expect("non-root vertex has a parent");
    let depth = |x: u64| tree[&x].2;
    let (mut a, mut b) = (v, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth(a) > depth(b) {
        a = parent(a);
        left.push(a);
    }
    while depth(b) > depth(a) {
        b = parent(b);
        right.push(b);
    }
    while a != b {
        a = parent(a);
        b = parent(b);
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    // `left` runs v .. ancestor .. w; rotate so the ancestor leads
    let top = left.iter().position(|&x| x == a).unwrap_or(0);
    left.rotate_left(top);
    CycleWitness { order: left }
}

/// Searches for a cycle through every vertex of `subset` in `g[subset]`.
///
/// Returns `Ok(None)` when `|subset| < 3` or when no such cycle exists.
/// Backtracking starts at the smallest vertex and branches in ascending
/// order, so the witness is the lexicographically first Hamiltonian cycle.
pub fn has_spanning_cycle(
    g: &PrimeGraph,
    subset: &BTreeSet<u64>,
    max_len: usize,
) -> Result<Option<CycleWitness>, GraphError> {
    if let Some(&v) = subset.iter().find(|v| !g.contains_vertex(**v)) {
        return Err(GraphError::UnknownVertex(v));
    }
    if subset.len() > max_len.min(MAX_MASK_VERTICES) {
        return Err(GraphError::Capacity {
            size: subset.len(),
            cap: max_len.min(MAX_MASK_VERTICES),
        });
    }
    if subset.len() < 3 {
        return Ok(None);
    }
    let (order, adj) = g.induced(subset).masks()?;
    let n = order.len();
    if adj.iter().any(|m| m.count_ones() < 2) {
        return Ok(None);
    }
    let mut path = vec![0usize];
    if hamiltonian_from(&adj, n, &mut path, 1) {
        let cycle = path.into_iter().map(|i| order[i]).collect();
        return Ok(Some(CycleWitness { order: cycle }));
    }
    Ok(None)
}

fn hamiltonian_from(adj: &[u64], n: usize, path: &mut Vec<usize>, visited: u64) -> bool {
    let last = *path.last().expect("path starts at vertex 0");
    if path.len() == n {
        return adj[last] & 1 != 0;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let unvisited = !visited & full;
    // every unvisited vertex needs two usable neighbours: the path end,
    // vertex 0, or another unvisited vertex
    let usable = unvisited | 1 | (1 << last);
    for (i, &m) in adj.iter().enumerate() {
        if unvisited >> i & 1 == 1 && (m & usable).count_ones() < 2 {
            return false;
        }
    }
    let mut candidates = adj[last] & unvisited;
    while candidates != 0 {
        let next = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        path.push(next);
        if hamiltonian_from(adj, n, path, visited | 1 << next) {
            return true;
        }
        path.pop();
    }
    false
}

/// Every odd-sized vertex set `3 <= |S| <= max_size` that spans a cycle of
/// `g`, ordered by size and then lexicographically.
pub fn enumerate_odd_cycle_sets(
    g: &PrimeGraph,
    max_size: usize,
) -> Result<Vec<BTreeSet<u64>>, GraphError> {
    if max_size < 3 {
        return Err(GraphError::CycleSizeTooSmall(max_size));
    }
    let verts: Vec<u64> = g.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for size in (3..=max_size.min(verts.len())).step_by(2) {
        for combo in verts.iter().copied().combinations(size) {
            let subset: BTreeSet<u64> = combo.into_iter().collect();
            if has_spanning_cycle(g, &subset, max_size)?.is_some() {
                out.push(subset);
            }
        }
    }
    Ok(out)
}

/// Exact clique number by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &PrimeGraph) -> Result<usize, GraphError> {
    Ok(maximum_clique(g)?.len())
}

/// A maximum clique; ties broken towards the first one found.
pub fn maximum_clique(g: &PrimeGraph) -> Result<Vec<u64>, GraphError> {
    let (order, adj) = g.masks()?;
    let n = order.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    bron_kerbosch(&adj, 0, all, 0, &mut best);
    Ok((0..n).filter(|i| best >> i & 1 == 1).map(|i| order[i]).collect())
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut u64) {
    if p == 0 {
        if x == 0 && r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot_source = p | x;
    let pivot = (0..adj.len())
        .filter(|&u| pivot_source >> u & 1 == 1)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p | x is non-empty");
    let mut branch = p & !adj[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Outcome of a graph-theoretic check; a violation carries its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

fn first_independent_set(g: &PrimeGraph, size: usize) -> Option<Vec<u64>> {
    g.vertices()
        .iter()
        .copied()
        .combinations(size)
        .find(|s| s.iter().tuple_combinations().all(|(&a, &b)| !g.has_edge(a, b)))
}

/// Three-vertex condition: every three vertices span at least one edge.
pub fn palfy_check(g: &PrimeGraph) -> Verdict<Vec<u64>> {
    match first_independent_set(g, 3) {
        Some(t) => Verdict::Violated(t),
        None => Verdict::Holds,
    }
}

/// Four-vertex condition: every four vertices span at least one edge.
pub fn four_vertex_check(g: &PrimeGraph) -> Verdict<Vec<u64>> {
    match first_independent_set(g, 4) {
        Some(t) => Verdict::Violated(t),
        None => Verdict::Holds,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexBound {
    pub vertices: usize,
    pub clique_number: usize,
    /// `max(2w + 1, 3w - 4)`
    pub bound: i64,
}

impl VertexBound {
    pub fn holds(&self) -> bool {
        self.vertices as i64 <= self.bound
    }
}

/// Compares `|V|` with `max(2w + 1, 3w - 4)` for clique number `w`.
pub fn vertex_bound_check(g: &PrimeGraph) -> Result<VertexBound, GraphError> {
    let w = clique_number(g)? as i64;
    Ok(VertexBound {
        vertices: g.vertex_count(),
        clique_number: w as usize,
        bound: (2 * w + 1).max(3 * w - 4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(degrees: &[u64]) -> DegreeSet {
        DegreeSet::new("test", degrees.iter().copied()).unwrap()
    }

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    fn psl2_4() -> PrimeGraph {
        build_degree_graph(&ds(&[1, 3, 4, 5])).unwrap()
    }

    fn psl2_7() -> PrimeGraph {
        build_degree_graph(&ds(&[1, 3, 6, 7, 8])).unwrap()
    }

    fn psl2_16() -> PrimeGraph {
        build_degree_graph(&ds(&[1, 15, 16, 17])).unwrap()
    }

    #[test]
    fn degree_set_validation() {
        assert_eq!(
            DegreeSet::new("bad", [2, 3]),
            Err(GraphError::MissingTrivialDegree { name: "bad".into() })
        );
        assert!(matches!(
            DegreeSet::new("zero", [0, 1]),
            Err(GraphError::ZeroDegree { .. })
        ));
    }

    #[test]
    fn degree_graph_examples() {
        let g = psl2_4();
        assert_eq!(g.vertices(), &set(&[2, 3, 5]));
        assert!(g.edges().is_empty());
        assert!(build_degree_graph(&ds(&[1])).unwrap().is_empty());
        let g = psl2_7();
        assert_eq!(g.vertices(), &set(&[2, 3, 7]));
        assert_eq!(g.edges(), &BTreeSet::from([(2, 3)]));
    }

    #[test]
    fn complement_examples() {
        let c = psl2_4().complement();
        assert_eq!(c.edges(), &BTreeSet::from([(2, 3), (2, 5), (3, 5)]));
        assert_eq!(c.complement(), psl2_4());
        assert_eq!(psl2_7().complement().edges(), &BTreeSet::from([(2, 7), (3, 7)]));
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&psl2_4()), vec![vec![2], vec![3], vec![5]]);
        assert_eq!(components(&psl2_7()), vec![vec![2, 3], vec![7]]);
        assert!(components(&PrimeGraph::new()).is_empty());
    }

    #[test]
    fn bipartite_examples() {
        match is_bipartite(&psl2_4().complement()) {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.vertex_set(), set(&[2, 3, 5]));
                assert!(c.is_valid_in(&psl2_4().complement()));
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        assert_eq!(
            is_bipartite(&psl2_7().complement()),
            Bipartition::Bipartite {
                left: vec![2, 3],
                right: vec![7]
            }
        );
        let single = PrimeGraph::from_parts([5], []);
        assert!(is_bipartite(&single).is_bipartite());
    }

    #[test]
    fn odd_cycle_witness_on_pentagon_with_tail() {
        let g = PrimeGraph::from_parts([], [(2, 3), (3, 5), (5, 7), (7, 11), (11, 2), (11, 13)]);
        match is_bipartite(&g) {
            Bipartition::OddCycle(c) => {
                assert!(c.is_valid_in(&g));
                assert_eq!(c.len() % 2, 1);
            }
            _ => panic!("pentagon is not bipartite"),
        }
    }

    #[test]
    fn spanning_cycle_examples() {
        let c4 = psl2_4().complement();
        let w = has_spanning_cycle(&c4, &set(&[2, 3, 5]), DEFAULT_MAX_CYCLE_LEN).unwrap();
        assert_eq!(w.unwrap().order(), &[2, 3, 5]);
        let c7 = psl2_7().complement();
        assert_eq!(has_spanning_cycle(&c7, &set(&[2, 3, 7]), 12).unwrap(), None);
        assert_eq!(has_spanning_cycle(&c7, &set(&[2, 3]), 12).unwrap(), None);
    }

    #[test]
    fn spanning_cycle_errors() {
        let c7 = psl2_7().complement();
        assert_eq!(
            has_spanning_cycle(&c7, &set(&[2, 3, 11]), 12),
            Err(GraphError::UnknownVertex(11))
        );
        assert_eq!(
            has_spanning_cycle(&c7, &set(&[2, 3, 7]), 2),
            Err(GraphError::Capacity { size: 3, cap: 2 })
        );
    }

    #[test]
    fn odd_cycle_set_examples() {
        let sets = enumerate_odd_cycle_sets(&psl2_16().complement(), 7).unwrap();
        assert_eq!(sets, vec![set(&[2, 3, 17]), set(&[2, 5, 17])]);
        assert!(enumerate_odd_cycle_sets(&psl2_7().complement(), 7).unwrap().is_empty());
        let edgeless = PrimeGraph::from_parts([2, 3, 5, 7], []);
        assert!(enumerate_odd_cycle_sets(&edgeless, 5).unwrap().is_empty());
        assert_eq!(
            enumerate_odd_cycle_sets(&edgeless, 1),
            Err(GraphError::CycleSizeTooSmall(1))
        );
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&PrimeGraph::new()).unwrap(), 0);
        assert_eq!(clique_number(&psl2_16()).unwrap(), 2);
        assert_eq!(maximum_clique(&psl2_16()).unwrap(), vec![3, 5]);
        let triangle = PrimeGraph::from_parts([], [(2, 3), (3, 5), (2, 5)]);
        assert_eq!(clique_number(&triangle).unwrap(), 3);
    }

    #[test]
    fn palfy_examples() {
        assert_eq!(palfy_check(&psl2_4()), Verdict::Violated(vec![2, 3, 5]));
        assert!(palfy_check(&build_degree_graph(&ds(&[1, 6])).unwrap()).holds());
        assert!(palfy_check(&psl2_7()).holds());
    }

    #[test]
    fn four_vertex_examples() {
        assert!(four_vertex_check(&psl2_16()).holds());
        let edgeless = PrimeGraph::from_parts([2, 3, 5, 7], []);
        assert_eq!(four_vertex_check(&edgeless), Verdict::Violated(vec![2, 3, 5, 7]));
        assert!(four_vertex_check(&psl2_4()).holds());
    }

    #[test]
    fn vertex_bound_examples() {
        let b = vertex_bound_check(&psl2_4()).unwrap();
        assert_eq!((b.vertices, b.clique_number, b.bound), (3, 1, 3));
        assert!(b.holds());
        let b = vertex_bound_check(&psl2_16()).unwrap();
        assert_eq!((b.vertices, b.clique_number, b.bound), (4, 2, 5));
        assert!(b.holds());
        let b = vertex_bound_check(&PrimeGraph::from_parts([7], [])).unwrap();
        assert_eq!(b.bound, 3);
        assert!(b.holds());
    }

    #[test]
    fn capacity_error_on_huge_vertex_sets() {
        let primes: Vec<u64> = (2..400).filter(|&n| numtheory::is_prime(n)).take(65).collect();
        let g = PrimeGraph::from_parts(primes, []);
        assert!(matches!(clique_number(&g), Err(GraphError::Capacity { size: 65, .. })));
    }
}
