//! Verification sweeps over `PSL_2(q)` and `SL_2(q)`.

use rayon::prelude::*;

use crate::graph::{self, VertexBound};
use crate::numtheory;
use crate::psl2::{self, LinearGroup, LinearKind, Psl2Error, TheoremAReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub qmin: u64,
    pub qmax: u64,
    /// largest odd subset size for the spanning-cycle comparison; `None`
    /// skips it
    pub theorem_a_max_size: Option<usize>,
    pub corollaries: bool,
}

impl SweepOptions {
    pub fn new(qmax: u64) -> Self {
        Self {
            qmin: 4,
            qmax,
            theorem_a_max_size: Some(7),
            corollaries: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corollaries {
    pub complement_clique_number: usize,
    pub vertex_bound: VertexBound,
    pub components: usize,
    /// characteristic 2 after the `PSL_2(5) = PSL_2(4)` identification
    pub even_characteristic: bool,
}

impl Corollaries {
    pub fn clique_ok(&self) -> bool {
        self.complement_clique_number <= 3
    }

    pub fn components_ok(&self) -> bool {
        self.components <= 3 && (self.components == 3) == self.even_characteristic
    }

    pub fn holds(&self) -> bool {
        self.clique_ok() && self.vertex_bound.holds() && self.components_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub group: LinearGroup,
    /// graph from the degree set equals the closed-form graph
    pub structural_equal: bool,
    pub theorem_a: Option<TheoremAReport>,
    pub corollaries: Option<Corollaries>,
}

impl SweepRow {
    pub fn holds(&self) -> bool {
        self.structural_equal
            && self.theorem_a.as_ref().is_none_or(TheoremAReport::is_consistent)
            && self.corollaries.as_ref().is_none_or(Corollaries::holds)
    }

    pub fn summary(&self) -> String {
        let mut line = format!(
            "{} structure={}",
            self.group,
            if self.structural_equal { "ok" } else { "MISMATCH" }
        );
        if let Some(t) = &self.theorem_a {
            line.push_str(&format!(
                " theorem_a={} subsets={} cycles={}",
                if t.is_consistent() { "ok" } else { "DISAGREE" },
                t.subsets_tested,
                t.cycle_sets.len()
            ));
        }
        if let Some(c) = &self.corollaries {
            line.push_str(&format!(
                " omega_complement={} vertices={} bound={} components={} corollaries={}",
                c.complement_clique_number,
                c.vertex_bound.vertices,
                c.vertex_bound.bound,
                c.components,
                if c.holds() { "ok" } else { "VIOLATED" }
            ));
        }
        line
    }
}

/// Prime powers in `[lo, hi]`, ascending.
pub fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi)
        .filter(|&q| {
            numtheory::factor(q).is_ok_and(|f| f.factors().len() == 1)
        })
        .collect()
}

/// The groups covered for one field order: `PSL_2(q)`, plus `SL_2(q)` for
/// odd `q`.
pub fn groups_for(q: u64) -> Result<Vec<LinearGroup>, Psl2Error> {
    let mut out = vec![LinearGroup::from_order(LinearKind::Psl2, q)?];
    if q % 2 == 1 {
        out.push(LinearGroup::from_order(LinearKind::Sl2, q)?);
    }
    Ok(out)
}

pub fn check_group(g: &LinearGroup, opts: &SweepOptions) -> Result<SweepRow, Psl2Error> {
    let built = graph::build_degree_graph(&psl2::degree_set(g))?;
    let closed_form = psl2::closed_form_graph(g);
    let theorem_a = opts
        .theorem_a_max_size
        .map(|k| psl2::theorem_a_verify(g, k))
        .transpose()?;
    let corollaries = if opts.corollaries {
        let comp = built.complement();
        Some(Corollaries {
            complement_clique_number: graph::clique_number(&comp)?,
            vertex_bound: graph::vertex_bound_check(&built)?,
            components: graph::components(&built).len(),
            even_characteristic: g.graph_parameters().0 == 2,
        })
    } else {
        None
    };
    Ok(SweepRow {
        group: g.clone(),
        structural_equal: built == closed_form,
        theorem_a,
        corollaries,
    })
}

/// Runs every group for every prime power in range, in parallel; rows come
/// back sorted by `q`, `PSL_2` before `SL_2`.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<SweepRow>, Psl2Error> {
    let groups: Vec<LinearGroup> = prime_powers(opts.qmin.max(4), opts.qmax)
        .into_iter()
        .map(groups_for)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    groups.par_iter().map(|g| check_group(g, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers_prefix() {
        assert_eq!(prime_powers(4, 32), vec![4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
    }

    #[test]
    fn small_sweep_is_ordered_and_clean() {
        let rows = sweep(&SweepOptions::new(16)).unwrap();
        let names: Vec<String> = rows.iter().map(|r| r.group.name()).collect();
        assert_eq!(names[..4], ["PSL2(4)", "PSL2(5)", "SL2(5)", "PSL2(7)"]);
        assert!(rows.iter().all(SweepRow::holds), "{rows:#?}");
    }
}
