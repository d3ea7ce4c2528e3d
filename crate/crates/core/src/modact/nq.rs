//! The action of a closed matrix group on its natural module `F^n`:
//! vector stabilizers, orbits, irreducibility, and the `N_q` condition.

use super::field::Elem;
use super::group::{sylow_subgroups, ClosedGroup, Subgroup, SylowFamily};
use super::matrix::{vector_at, vector_index, Subspace};
use super::ModError;

/// Largest module enumerated vector by vector.
pub const MAX_MODULE_SIZE: usize = 1 << 24;

fn module_size(g: &ClosedGroup) -> Result<usize, ModError> {
    (g.field().order() as usize)
        .checked_pow(g.dim() as u32)
        .filter(|&n| n <= MAX_MODULE_SIZE)
        .ok_or(ModError::ModuleTooLarge)
}

fn act(g: &ClosedGroup, elem: usize, v: &[Elem]) -> Vec<Elem> {
    g.element(elem).apply(v, g.field())
}

/// `C_G(v)`: elements fixing `v`, ascending.
pub fn stabilizer(g: &ClosedGroup, v: &[Elem]) -> Vec<usize> {
    (0..g.order()).filter(|&x| act(g, x, v) == v).collect()
}

/// Kernel of the action: elements fixing every basis vector.
pub fn kernel(g: &ClosedGroup) -> Vec<usize> {
    let n = g.dim();
    let basis: Vec<Vec<Elem>> = (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect();
    (0..g.order())
        .filter(|&x| basis.iter().all(|e| act(g, x, e) == *e))
        .collect()
}

/// Orbits on non-zero vectors, each given by its smallest vector index and
/// listed in ascending order of that representative.
pub fn nonzero_orbits(g: &ClosedGroup) -> Result<Vec<Vec<usize>>, ModError> {
    let size = module_size(g)?;
    let f = g.field();
    let gens = g.generators().generators();
    let mut seen = vec![false; size];
    let mut orbits = Vec::new();
    for start in 1..size {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let v = vector_at(orbit[head], g.dim(), f);
            head += 1;
            for m in gens {
                let w = vector_index(&m.apply(&v, f), f);
                if !seen[w] {
                    seen[w] = true;
                    orbit.push(w);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `|C_V(H)|`: number of vectors fixed by every element of `h`.
pub fn fixed_point_count(g: &ClosedGroup, h: &Subgroup) -> Result<usize, ModError> {
    let size = module_size(g)?;
    let f = g.field();
    Ok((0..size)
        .filter(|&i| {
            let v = vector_at(i, g.dim(), f);
            h.generators()
                .iter()
                .all(|&x| act(g, x, &v) == v)
        })
        .count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// basis (reduced echelon form) of a proper non-zero invariant subspace
    Reducible { basis: Vec<Vec<Elem>> },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// The submodule generated by `v`.
pub fn spin(g: &ClosedGroup, v: &[Elem]) -> Subspace {
    let f = g.field();
    let gens = g.generators().generators();
    let mut space = Subspace::new();
    space.insert(v, f);
    let mut pending = vec![v.to_vec()];
    while let Some(w) = pending.pop() {
        for m in gens {
            let image = m.apply(&w, f);
            if space.insert(&image, f) {
                pending.push(image);
            }
        }
    }
    space
}

/// Irreducibility of `F^n` over `F` by spinning one vector from each orbit.
pub fn is_irreducible(g: &ClosedGroup) -> Result<Irreducibility, ModError> {
    let f = g.field();
    for orbit in nonzero_orbits(g)? {
        let v = vector_at(orbit[0], g.dim(), f);
        let space = spin(g, &v);
        if space.dim() < g.dim() {
            return Ok(Irreducibility::Reducible {
                basis: space.basis(),
            });
        }
    }
    Ok(Irreducibility::Irreducible)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NqReport {
    pub q: u64,
    pub satisfied: bool,
    pub group_order: usize,
    pub kernel_order: usize,
    /// `q` divides `|G : C_G(V)|`
    pub index_divisible: bool,
    /// smallest non-zero vector with no normal Sylow `q`-subgroup in its
    /// stabilizer
    pub failing_vector: Option<Vec<Elem>>,
    pub sylow_count: usize,
    pub sylow_order: usize,
}

/// Whether `q | |G : C_G(V)|` and every non-zero `v` has a Sylow
/// `q`-subgroup of `G` inside `C_G(v)` and normal there.
pub fn check_nq(g: &ClosedGroup, q: u64) -> Result<NqReport, ModError> {
    let family = sylow_subgroups(g, q)?;
    check_nq_with(g, &family)
}

/// [`check_nq`] with a precomputed Sylow family.
pub fn check_nq_with(g: &ClosedGroup, family: &SylowFamily) -> Result<NqReport, ModError> {
    let q = family.q;
    let kernel_order = kernel(g).len();
    let index = g.order() / kernel_order;
    let index_divisible = index % q as usize == 0;
    let f = g.field();
    let mut failing_vector = None;
    // the condition is constant along orbits: C(gv) = g C(v) g^-1
    for orbit in nonzero_orbits(g)? {
        let v = vector_at(orbit[0], g.dim(), f);
        if !vector_condition(g, family, &v) {
            failing_vector = Some(v);
            break;
        }
    }
    Ok(NqReport {
        q,
        satisfied: index_divisible && failing_vector.is_none(),
        group_order: g.order(),
        kernel_order,
        index_divisible,
        failing_vector,
        sylow_count: family.count(),
        sylow_order: family.sylow_order,
    })
}

fn vector_condition(g: &ClosedGroup, family: &SylowFamily, v: &[Elem]) -> bool {
    let centralizer = stabilizer(g, v);
    let inside = |x: usize| centralizer.binary_search(&x).is_ok();
    family.subgroups.iter().any(|sylow| {
        sylow.members().iter().all(|&x| inside(x)) && g.normalizes(&centralizer, sylow)
    })
}
