use jaco_brush::{
    brush_number, brute_force_brush_number, build_jaco, census, minimal_allocation,
    orientation_cost, union_additivity_check, verify_allocation, BrushAllocation, Cost, DiGraph,
    UndirectedGraph, DEFAULT_CAP_EPS,
};
use proptest::prelude::*;

/// All vectors of `len` non-negative entries summing to `total`.
fn compositions(total: u64, len: usize, out: &mut Vec<Vec<u64>>, prefix: &mut Vec<u64>) {
    if prefix.len() + 1 == len {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, len, out, prefix);
        prefix.pop();
    }
}

/// Smallest total allocation that the simulator accepts, trying totals
/// `0..=ε` in order; `None` if nothing up to `ε` cleans the digraph.
fn least_cleaning_total(g: &DiGraph) -> Option<u64> {
    for total in 0..=g.eps() as u64 {
        let mut all = Vec::new();
        compositions(total, g.nu(), &mut all, &mut Vec::new());
        if all
            .into_iter()
            .any(|beta| verify_allocation(g, &BrushAllocation::new(beta)).unwrap())
        {
            return Some(total);
        }
    }
    None
}

fn check_cost_against_search(u: &UndirectedGraph) {
    for mask in 0..1u64 << u.eps() {
        let g = u.orient(mask);
        let expected = match least_cleaning_total(&g) {
            Some(c) => Cost::Finite(c),
            None => Cost::Undoable,
        };
        assert_eq!(orientation_cost(&g), expected, "{:?}", g.arcs());
    }
}

#[test]
fn cost_equals_exhaustive_allocation_search() {
    // every simple graph on at most four vertices (ε ≤ 6)
    for nu in 1..=4usize {
        let pairs: Vec<_> = (1..=nu)
            .flat_map(|a| (a + 1..=nu).map(move |b| (a, b)))
            .collect();
        for subset in 0..1u32 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| subset >> k & 1 == 1)
                .map(|(_, &e)| e);
            check_cost_against_search(&UndirectedGraph::new(nu, edges).unwrap());
        }
    }
    check_cost_against_search(&build_jaco(5).unwrap().underlying());
    check_cost_against_search(&UndirectedGraph::path(7));
    check_cost_against_search(&UndirectedGraph::new(6, (2..=6).map(|b| (1, b))).unwrap());
}

#[test]
fn closed_form_equals_oracle_up_to_ten() {
    for n in 1..=10 {
        let g = build_jaco(n).unwrap();
        let closed = brush_number(&g).unwrap().b_r;
        let brute = brute_force_brush_number(&g.underlying(), DEFAULT_CAP_EPS).unwrap();
        assert_eq!(closed, brute, "J_{n}");
    }
}

#[test]
fn defined_orientation_is_optimal_up_to_ten() {
    for n in 1..=10 {
        let c = census(&build_jaco(n).unwrap().underlying(), DEFAULT_CAP_EPS).unwrap();
        assert_eq!(c.cost(0), Cost::Finite(c.minimum), "J_{n}");
    }
}

#[test]
fn parallel_census_matches_sequential() {
    for n in [4, 5, 6, 7] {
        let u = build_jaco(n).unwrap().underlying();
        let c = census(&u, DEFAULT_CAP_EPS).unwrap();
        let sequential: Vec<Cost> = (0..1u64 << u.eps())
            .map(|m| orientation_cost(&u.orient(m)))
            .collect();
        assert_eq!(c.entries().map(|e| e.1).collect::<Vec<_>>(), sequential);
    }
}

fn sorted_costs(u: &UndirectedGraph) -> Vec<Cost> {
    let mut v: Vec<Cost> = census(u, DEFAULT_CAP_EPS)
        .unwrap()
        .entries()
        .map(|e| e.1)
        .collect();
    v.sort();
    v
}

#[test]
fn census_multiset_ignores_edge_labelling() {
    for n in [4, 5] {
        let u = build_jaco(n).unwrap().underlying();
        let reference = sorted_costs(&u);
        // rotate vertex labels, which reorders the sorted edge list
        let flipped =
            UndirectedGraph::new(n, u.edges().iter().map(|&(a, b)| (a % n + 1, b % n + 1)))
                .unwrap();
        assert_ne!(flipped.edges(), u.edges());
        assert_eq!(sorted_costs(&flipped), reference);
        assert_eq!(
            census(&flipped, DEFAULT_CAP_EPS).unwrap().minimum,
            census(&u, 24).unwrap().minimum
        );
    }
}

#[test]
fn reversing_every_arc_keeps_the_cost() {
    for u in [
        build_jaco(5).unwrap().underlying(),
        build_jaco(7).unwrap().underlying(),
        UndirectedGraph::complete(4),
    ] {
        let c = census(&u, DEFAULT_CAP_EPS).unwrap();
        let full = (1u64 << u.eps()) - 1;
        for (mask, cost) in c.entries() {
            assert_eq!(cost, c.cost(full ^ mask));
        }
    }
}

#[test]
fn complete_graphs() {
    for m in 1..=5 {
        let brute =
            brute_force_brush_number(&UndirectedGraph::complete(m), DEFAULT_CAP_EPS).unwrap();
        assert_eq!(brute, (m * m / 4) as u64, "K_{m}");
    }
}

#[test]
fn listed_unions_are_additive() {
    let j = |n| build_jaco(n).unwrap().underlying();
    assert!(union_additivity_check(&[j(2), j(2)], 24).unwrap());
    assert!(union_additivity_check(&[j(1)], 24).unwrap());
    assert!(union_additivity_check(&[j(4), UndirectedGraph::complete(3)], 24).unwrap());
    assert!(union_additivity_check(&[j(5), j(3), UndirectedGraph::complete(4)], 24).unwrap());
}

fn small_graph() -> impl Strategy<Value = UndirectedGraph> {
    (1usize..=5).prop_flat_map(|nu| {
        let pairs: Vec<_> = (1..=nu)
            .flat_map(|a| (a + 1..=nu).map(move |b| (a, b)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            UndirectedGraph::new(nu, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_unions_are_additive(a in small_graph(), b in small_graph()) {
        prop_assert!(union_additivity_check(&[a, b], DEFAULT_CAP_EPS).unwrap());
    }

    #[test]
    fn minimal_allocation_is_tight(u in small_graph(), mask in any::<u64>()) {
        let g = u.orient(mask & ((1u64 << u.eps()) - 1));
        prop_assume!(g.is_acyclic());
        let alloc = minimal_allocation(&g).unwrap();
        prop_assert!(verify_allocation(&g, &alloc).unwrap());
        prop_assert_eq!(Cost::Finite(alloc.total()), orientation_cost(&g));
        for v in 0..g.nu() {
            if alloc.as_slice()[v] > 0 {
                let mut less = alloc.clone();
                less.as_mut_slice()[v] -= 1;
                prop_assert!(!verify_allocation(&g, &less).unwrap());
            }
        }
    }
}
