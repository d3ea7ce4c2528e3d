//! Command bodies. Each returns report lines and a violation flag.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use itertools::Itertools;

use super::corpus::ingest_degree_sets;
use super::dot::export_dot;
use super::groupfile::load_group_file;
use super::sweep::{sweep, SweepOptions};
use super::{CliError, Outcome};
use crate::graph::{self, Bipartition, DegreeSet, PrimeGraph, Verdict};
use crate::modact::nq::{self, fixed_point_count};
use crate::modact::{blow_up, is_irreducible, sylow_subgroups, Irreducibility};
use crate::numtheory;
use crate::psl2::{self, LinearGroup};

/// Where a degree graph comes from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Degrees { name: String, degrees: Vec<u64> },
    Linear { group: LinearGroup, outer_primes: Vec<u64> },
    Corpus { path: PathBuf, name: String },
}

impl GraphSource {
    pub fn resolve(&self) -> Result<(String, PrimeGraph), CliError> {
        match self {
            GraphSource::Degrees { name, degrees } => {
                let ds = DegreeSet::new(name.clone(), degrees.iter().copied())?;
                Ok((name.clone(), graph::build_degree_graph(&ds)?))
            }
            GraphSource::Linear {
                group,
                outer_primes,
            } => {
                let mut g = graph::build_degree_graph(&psl2::degree_set(group))?;
                let mut name = group.name();
                for &s in outer_primes {
                    g = psl2::add_outer_prime(&g, group, s)?;
                    name.push_str(&format!(" outer {s}"));
                }
                Ok((name, g))
            }
            GraphSource::Corpus { path, name } => {
                let entry = ingest_degree_sets(path)?
                    .into_iter()
                    .find(|e| e.name == *name)
                    .ok_or_else(|| CliError::NoSuchEntry {
                        path: path.clone(),
                        name: name.clone(),
                    })?;
                Ok((entry.name, graph::build_degree_graph(&entry.degrees)?))
            }
        }
    }
}

fn dot_lines(text: &str) -> Outcome {
    Outcome {
        lines: text.lines().map(String::from).collect(),
        violated: false,
    }
}

pub fn graph_cmd(source: &GraphSource) -> Result<Outcome, CliError> {
    let (name, g) = source.resolve()?;
    Ok(dot_lines(&export_dot(&g, &name)))
}

pub fn complement_cmd(source: &GraphSource) -> Result<Outcome, CliError> {
    let (name, g) = source.resolve()?;
    Ok(dot_lines(&export_dot(&g.complement(), &format!("{name} complement"))))
}

fn braces(s: &BTreeSet<u64>) -> String {
    format!("{{{}}}", s.iter().join(", "))
}

/// Vertex sets spanning a cycle of the complement, with one cycle each.
pub fn cycles_cmd(source: &GraphSource, odd_only: bool, max_size: usize) -> Result<Outcome, CliError> {
    if max_size < 3 {
        return Err(graph::GraphError::CycleSizeTooSmall(max_size).into());
    }
    let (name, g) = source.resolve()?;
    let comp = g.complement();
    let verts: Vec<u64> = comp.vertices().iter().copied().collect();
    let step = if odd_only { 2 } else { 1 };
    let mut out = Outcome::default();
    let mut count = 0;
    for size in (3..=max_size.min(verts.len())).step_by(step) {
        for combo in verts.iter().copied().combinations(size) {
            let subset: BTreeSet<u64> = combo.into_iter().collect();
            if let Some(w) = graph::has_spanning_cycle(&comp, &subset, max_size)? {
                out.push(format!("{} {w}", braces(&subset)));
                count += 1;
            }
        }
    }
    let kind = if odd_only { "odd cycle sets" } else { "cycle sets" };
    out.push(format!("{name}: {count} {kind} of size <= {max_size} in the complement"));
    Ok(out)
}

pub fn verify_theorem_a_cmd(group: &LinearGroup, max_size: usize) -> Result<Outcome, CliError> {
    let report = psl2::theorem_a_verify(group, max_size)?;
    let mut out = Outcome::default();
    for s in &report.cycle_sets {
        let alt = psl2::theorem_a_predicate(group, s)?;
        let order = alt.cycle_order().map_or_else(|| "-".into(), |o| o.iter().join(", "));
        out.push(format!("{} alternating order ({order})", braces(s)));
    }
    for d in &report.disagreements {
        let cycle = d.cycle.as_ref().map_or_else(|| "none".into(), ToString::to_string);
        out.violation(format!(
            "DISAGREEMENT {}: cycle {cycle}, predicate {}",
            braces(&d.subset),
            d.predicate
        ));
    }
    out.push(format!(
        "{}: {} odd subsets of size <= {}, {} with spanning cycles, {} satisfying the predicate, {} disagreements",
        group,
        report.subsets_tested,
        max_size,
        report.cycle_sets.len(),
        report.predicate_true,
        report.disagreements.len()
    ));
    Ok(out)
}

pub fn sweep_cmd(opts: &SweepOptions) -> Result<Outcome, CliError> {
    let rows = sweep(opts)?;
    let mut out = Outcome::default();
    let mut failures = 0;
    for row in &rows {
        if row.holds() {
            out.push(row.summary());
        } else {
            failures += 1;
            out.violation(format!("VIOLATION {}", row.summary()));
            if let Some(t) = &row.theorem_a {
                for d in &t.disagreements {
                    out.push(format!("  disagreement on {}", braces(&d.subset)));
                }
            }
        }
    }
    out.push(format!(
        "{} groups with {} <= q <= {}, {} failing",
        rows.len(),
        opts.qmin,
        opts.qmax,
        failures
    ));
    Ok(out)
}

fn vector_text(v: &[u32]) -> String {
    format!("({})", v.iter().join(", "))
}

/// Checks condition `N_q` on the natural module of the group in `path`;
/// `blow` first restricts scalars to the prime field.
pub fn nq_check_cmd(path: &Path, q: u64, blow: bool) -> Result<Outcome, CliError> {
    let mut group = load_group_file(path)?;
    if blow {
        group = blow_up(&group)?;
    }
    let g = group.close()?;
    let family = sylow_subgroups(&g, q)?;
    let report = nq::check_nq_with(&g, &family)?;
    let module_size = (g.field().order() as u64).pow(g.dim() as u32);
    let mut out = Outcome::default();
    out.push(format!(
        "group: order {} over GF({}) in dimension {}, kernel order {}",
        report.group_order,
        g.field().order(),
        g.dim(),
        report.kernel_order
    ));
    out.push(format!(
        "sylow {q}-subgroups: {} of order {}",
        report.sylow_count, report.sylow_order
    ));
    out.push(format!("q divides |G : C_G(V)|: {}", report.index_divisible));
    match &report.failing_vector {
        Some(v) => out.push(format!("failing vector: {}", vector_text(v))),
        None => out.push("every non-zero vector has a normal Sylow subgroup in its stabilizer"),
    }
    let irreducible = is_irreducible(&g)?;
    match &irreducible {
        Irreducibility::Irreducible => out.push("module irreducible: true"),
        Irreducibility::Reducible { basis } => out.push(format!(
            "module irreducible: false, invariant subspace spanned by {}",
            basis.iter().map(|v| vector_text(v)).join(", ")
        )),
    }
    if report.satisfied {
        out.push(format!("N_{q}: satisfied"));
        if !irreducible.is_irreducible() {
            out.violation("VIOLATION: condition holds on a reducible module");
        }
        if module_size % q != 0 {
            let fixed = fixed_point_count(&g, &family.subgroups[0])? as u64;
            let line = format!(
                "sylow count {} vs (|V| - 1)/(|C_V(Q)| - 1) = ({} - 1)/({} - 1)",
                report.sylow_count, module_size, fixed
            );
            let lhs = report.sylow_count as u64 * fixed.saturating_sub(1);
            if fixed > 1 && lhs == module_size - 1 {
                out.push(line);
            } else {
                out.violation(format!("VIOLATION: {line}"));
            }
        }
    } else {
        out.violation(format!("N_{q}: not satisfied"));
    }
    Ok(out)
}

fn verdict_text(v: &Verdict<Vec<u64>>) -> String {
    match v {
        Verdict::Holds => "ok".into(),
        Verdict::Violated(w) => format!("independent {{{}}}", w.iter().join(", ")),
    }
}

/// Per entry: vertex bound and four-vertex condition; for entries tagged
/// `solvable` also the three-vertex condition and a bipartite complement.
pub fn audit_cmd(path: &Path) -> Result<Outcome, CliError> {
    let entries = ingest_degree_sets(path)?;
    let mut out = Outcome::default();
    let mut failing = 0;
    for e in &entries {
        let g = graph::build_degree_graph(&e.degrees)?;
        let mut findings = Vec::new();
        let mut ok = true;
        let bound = graph::vertex_bound_check(&g)?;
        ok &= bound.holds();
        findings.push(format!(
            "vertices={} omega={} bound={}",
            bound.vertices, bound.clique_number, bound.bound
        ));
        let four = graph::four_vertex_check(&g);
        ok &= four.holds();
        findings.push(format!("four_vertex={}", verdict_text(&four)));
        if e.is_solvable() {
            let three = graph::palfy_check(&g);
            ok &= three.holds();
            findings.push(format!("three_vertex={}", verdict_text(&three)));
            match graph::is_bipartite(&g.complement()) {
                Bipartition::Bipartite { left, right } => findings.push(format!(
                    "complement bipartite {{{}}} | {{{}}}",
                    left.iter().join(", "),
                    right.iter().join(", ")
                )),
                Bipartition::OddCycle(c) => {
                    ok = false;
                    findings.push(format!("complement odd cycle {c}"));
                }
            }
        }
        let line = format!("{} (line {}): {}", e.name, e.line, findings.join(" "));
        if ok {
            out.push(line);
        } else {
            failing += 1;
            out.violation(format!("VIOLATION {line}"));
        }
    }
    out.push(format!("{} entries audited, {} failing", entries.len(), failing));
    Ok(out)
}

pub fn repunit_cmd(ns: &[u64], r_max: Option<u64>) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    for &n in ns {
        if n < 2 {
            return Err(CliError::Usage(format!("repunit needs N >= 2, got {n}")));
        }
        let sols = numtheory::solve_repunit(n, r_max.unwrap_or(n));
        if sols.is_empty() {
            out.push(format!("{n}: no solutions"));
        } else {
            out.push(format!("{n}: {}", sols.iter().join("; ")));
        }
    }
    Ok(out)
}
