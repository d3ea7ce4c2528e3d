use std::collections::BTreeSet;

use cdgraph::graph::{self, CycleWitness};
use cdgraph::numtheory;
use cdgraph::psl2::{self, LinearGroup, LinearKind, SubgroupType};
use itertools::Itertools;
use proptest::prelude::*;

fn arb_group() -> impl Strategy<Value = LinearGroup> {
    (2u64..2000, any::<bool>()).prop_filter_map("prime power >= 4", |(q, sl)| {
        let kind = if sl { LinearKind::Sl2 } else { LinearKind::Psl2 };
        LinearGroup::from_order(kind, q).ok()
    })
}

fn order(g: &LinearGroup) -> u128 {
    let q = g.q() as u128;
    let full = q * (q * q - 1);
    match (g.kind(), q % 2) {
        (LinearKind::Psl2, 1) => full / 2,
        _ => full,
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn alternation_order_is_a_cycle_of_the_complement(g in arb_group()) {
        let comp = psl2::closed_form_graph(&g).complement();
        let verts: Vec<u64> = comp.vertices().iter().copied().collect();
        for size in [3, 5] {
            for c in verts.iter().copied().combinations(size) {
                let s: BTreeSet<u64> = c.into_iter().collect();
                let alt = psl2::theorem_a_predicate(&g, &s).unwrap();
                if let Some(order) = alt.cycle_order() {
                    let w = CycleWitness::checked(order, &comp);
                    prop_assert!(w.is_some(), "{} {:?}", g, s);
                    prop_assert_eq!(w.unwrap().vertex_set(), s);
                }
            }
        }
    }

    #[test]
    fn degrees_divide_group_order(g in arb_group()) {
        let n = order(&g);
        for &d in psl2::degree_set(&g).degrees() {
            prop_assert_eq!(n % d as u128, 0, "{} degree {}", g, d);
        }
    }

    #[test]
    fn vertices_are_the_primes_of_the_order(g in arb_group()) {
        let q = g.q();
        let expected = numtheory::prime_set(q * (q * q - 1), false).unwrap();
        let built = graph::build_degree_graph(&psl2::degree_set(&g)).unwrap();
        prop_assert_eq!(built.vertices(), &expected);
    }

    #[test]
    fn outer_prime_joins_exactly_pi_of_q_squared_minus_one(g in arb_group(), s in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        let base = psl2::closed_form_graph(&g);
        let out = psl2::add_outer_prime(&base, &g, s).unwrap();
        let targets = numtheory::prime_set(g.q() * g.q() - 1, false).unwrap();
        for &v in out.vertices() {
            if v == s {
                continue;
            }
            prop_assert_eq!(out.has_edge(s, v), targets.contains(&v) || base.has_edge(s, v));
        }
        prop_assert!(!out.has_edge(s, g.u()) || base.has_edge(s, g.u()));
        prop_assert!(base.edges().is_subset(out.edges()));
    }

    #[test]
    fn dickson_orders_divide_when_listed(g in arb_group().prop_filter("psl", |g| g.kind() == LinearKind::Psl2)) {
        let n = order(&g);
        for rec in psl2::dickson_subgroups(&g) {
            if rec.condition_met {
                prop_assert_eq!(n % rec.order, 0, "{} {:?}", g, rec);
            }
        }
        let full = psl2::dickson_subgroups(&g)
            .into_iter()
            .find(|r| r.kind == SubgroupType::PslSub && r.beta == Some(g.alpha()))
            .unwrap();
        prop_assert_eq!(full.order, n);
    }
}

#[test]
fn abelian_factor_keeps_the_graph() {
    let g = LinearGroup::psl(7, 1).unwrap();
    let h = g.clone().with_abelian_factor([3, 5]);
    assert_eq!(psl2::degree_set(&g).degrees(), psl2::degree_set(&h).degrees());
    assert_eq!(psl2::closed_form_graph(&g), psl2::closed_form_graph(&h));
}
