//! Finitely generated matrix groups, their enumeration, and Sylow
//! subgroups.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::numtheory;

use super::field::Field;
use super::matrix::Matrix;
use super::ModError;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CLOSURE_CAP_ENV: &str = "CDGRAPH_CLOSURE_CAP";

/// The closure cap from the environment, or the default.
pub fn closure_cap_from_env() -> Result<usize, ModError> {
    match std::env::var(CLOSURE_CAP_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| ModError::BadCap(s.clone())),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

/// Generators of a group of invertible `dim x dim` matrices.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    field: Arc<Field>,
    dim: usize,
    generators: Vec<Matrix>,
    cap: usize,
}

impl MatrixGroup {
    pub fn new(field: Arc<Field>, dim: usize, generators: Vec<Matrix>) -> Result<Self, ModError> {
        if dim == 0 {
            return Err(ModError::ZeroDimension);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(ModError::DimensionMismatch {
                    generator: i,
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.entries().iter().any(|&e| !field.contains(e)) {
                return Err(ModError::EntryOutOfField { generator: i });
            }
            if g.inverse(&field).is_none() {
                return Err(ModError::Singular { generator: i });
            }
        }
        Ok(Self {
            field,
            dim,
            generators,
            cap: DEFAULT_CLOSURE_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Enumerates the group breadth-first from the identity, multiplying by
    /// generators on the right in the order given.
    pub fn close(&self) -> Result<ClosedGroup, ModError> {
        let f = &*self.field;
        let id = Matrix::identity(self.dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let next = current.mul(g, f);
                if !index.contains_key(&next) {
                    if elements.len() >= self.cap {
                        return Err(ModError::CapExceeded { cap: self.cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        let generator_index = self.generators.iter().map(|g| index[g]).collect();
        let inverses = elements
            .iter()
            .map(|m| index[&m.inverse(f).expect("group elements are invertible")])
            .collect();
        Ok(ClosedGroup {
            group: self.clone(),
            elements,
            index,
            generator_index,
            inverses,
        })
    }
}

/// A fully enumerated matrix group. Element `0` is the identity.
#[derive(Debug, Clone)]
pub struct ClosedGroup {
    group: MatrixGroup,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    generator_index: Vec<usize>,
    inverses: Vec<usize>,
}

/// A subgroup of a [`ClosedGroup`], as sorted element indices.
///
/// Equality and ordering look at the members only.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

impl ClosedGroup {
    pub fn generators(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.group.field
    }

    pub fn dim(&self) -> usize {
        self.group.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Indices of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_index
    }

    pub fn element_set(&self) -> HashSet<&Matrix> {
        self.elements.iter().collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b], self.field());
        self.index[&m]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn power(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            members: seen.into_iter().collect(),
            generators: gens,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![0],
            generators: Vec::new(),
        }
    }

    /// Whether conjugation by every element of `by` preserves `h`.
    pub fn normalizes(&self, by: &[usize], h: &Subgroup) -> bool {
        by.iter()
            .all(|&g| h.generators.iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.normalizes(&[g], h))
            .collect()
    }

    /// `g H g^-1`, keeping conjugated generators.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = h.members.iter().map(|&x| self.conjugate(x, g)).collect();
        members.sort_unstable();
        Subgroup {
            members,
            generators: h.generators.iter().map(|&x| self.conjugate(x, g)).collect(),
        }
    }

    /// Whether the element set is closed under products and inverses.
    pub fn is_closed_under_operations(&self) -> bool {
        let set = self.element_set();
        self.elements.iter().all(|a| {
            set.contains(&a.inverse(self.field()).expect("invertible"))
                && self
                    .elements
                    .iter()
                    .all(|b| set.contains(&a.mul(b, self.field())))
        })
    }
}

/// All Sylow `q`-subgroups of a closed group.
#[derive(Debug, Clone)]
pub struct SylowFamily {
    pub q: u64,
    /// `q`-part of the group order
    pub sylow_order: usize,
    /// sorted by member list
    pub subgroups: Vec<Subgroup>,
    /// `q` does not divide the group order; the family is the trivial group
    pub trivial: bool,
}

impl SylowFamily {
    pub fn count(&self) -> usize {
        self.subgroups.len()
    }
}

fn q_part(n: usize, q: usize) -> usize {
    let mut part = 1;
    let mut n = n;
    while n % q == 0 {
        n /= q;
        part *= q;
    }
    part
}

/// One Sylow `q`-subgroup grown through normalizers, then all of its
/// conjugates.
pub fn sylow_subgroups(g: &ClosedGroup, q: u64) -> Result<SylowFamily, ModError> {
    if !numtheory::is_prime(q) {
        return Err(ModError::NotPrime(q as u32));
    }
    let qu = q as usize;
    let target = q_part(g.order(), qu);
    if target == 1 {
        return Ok(SylowFamily {
            q,
            sylow_order: 1,
            subgroups: vec![g.trivial_subgroup()],
            trivial: true,
        });
    }
    let start = (1..g.order())
        .find_map(|x| {
            let ord = g.element_order(x);
            (ord % qu == 0).then(|| g.power(x, ord / q_part(ord, qu)))
        })
        .expect("Cauchy: an element of order divisible by q exists");
    let mut p = g.subgroup(&[start]);
    while p.order() < target {
        let normalizer = g.normalizer(&p);
        let y = normalizer
            .into_iter()
            .find(|&y| !p.contains(y) && p.contains(g.power(y, qu)))
            .ok_or(ModError::Internal("normalizer growth stalled"))?;
        let mut gens = p.generators.clone();
        gens.push(y);
        p = g.subgroup(&gens);
    }
    // orbit of p under conjugation by the generators
    let mut seen: HashSet<Vec<usize>> = HashSet::from([p.members.clone()]);
    let mut family = vec![p.clone()];
    let mut queue = VecDeque::from([p]);
    while let Some(h) = queue.pop_front() {
        for &s in g.generator_indices() {
            let c = g.conjugate_subgroup(&h, s);
            if seen.insert(c.members.clone()) {
                family.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    family.sort();
    Ok(SylowFamily {
        q,
        sylow_order: target,
        subgroups: family,
        trivial: false,
    })
}
