use jaco_brush::{
    build_jaco, is_cleanable, simulate, simulate_by, verify_allocation, BrushAllocation,
    CleaningTrace, DiGraph, Outcome,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every orientation of every simple graph on `nu` vertices: each vertex
/// pair is absent, forward or backward.
fn all_oriented_graphs(nu: usize) -> impl Iterator<Item = DiGraph> {
    let pairs: Vec<(usize, usize)> = (1..=nu)
        .flat_map(|a| (a + 1..=nu).map(move |b| (a, b)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut arcs = Vec::new();
        for &(a, b) in &pairs {
            match code % 3 {
                1 => arcs.push((a, b)),
                2 => arcs.push((b, a)),
                _ => {}
            }
            code /= 3;
        }
        DiGraph::new(nu, arcs).unwrap()
    })
}

/// Colour-marking depth-first search for a directed cycle.
fn has_cycle_dfs(g: &DiGraph) -> bool {
    fn visit(v: usize, succ: &[Vec<usize>], colour: &mut [u8]) -> bool {
        colour[v] = 1;
        for &w in &succ[v] {
            if colour[w] == 1 || (colour[w] == 0 && visit(w, succ, colour)) {
                return true;
            }
        }
        colour[v] = 2;
        false
    }
    let mut succ = vec![Vec::new(); g.nu() + 1];
    for &(t, h) in g.arcs() {
        succ[t].push(h);
    }
    let mut colour = vec![0u8; g.nu() + 1];
    (1..=g.nu()).any(|v| colour[v] == 0 && visit(v, &succ, &mut colour))
}

fn random_dag(rng: &mut impl Rng, nu: usize) -> DiGraph {
    let mut order: Vec<usize> = (1..=nu).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for a in 0..nu {
        for b in a + 1..nu {
            if rng.gen_bool(0.4) {
                arcs.push((order[a], order[b]));
            }
        }
    }
    DiGraph::new(nu, arcs).unwrap()
}

/// Replays a trace, checking the brush bookkeeping at every step.
fn check_trace(g: &DiGraph, alloc: &BrushAllocation, trace: &CleaningTrace) {
    let initial = alloc.total();
    let mut held = alloc.as_slice().to_vec();
    let mut fired = vec![false; g.nu()];
    let mut cleaned_so_far = 0u64;
    let mut seen_arcs = Vec::new();
    for step in &trace.steps {
        let v = step.vertex - 1;
        assert!(!fired[v], "v_{} fired twice", step.vertex);
        fired[v] = true;
        assert_eq!(held[v], step.held);
        assert!(step.held >= step.cleaned.len() as u64);
        for &(t, h) in &step.cleaned {
            assert_eq!(t, step.vertex);
            held[v] -= 1;
            held[h - 1] += 1;
            cleaned_so_far += 1;
        }
        seen_arcs.extend_from_slice(&step.cleaned);
        // brushes only move, one per cleaned arc
        assert_eq!(held.iter().sum::<u64>(), initial);
        let received: u64 = seen_arcs.len() as u64;
        assert_eq!(received, cleaned_so_far);
    }
    assert_eq!(
        trace.outcome == Outcome::Cleaned,
        trace.remaining_dirty.is_empty()
    );
    if trace.outcome == Outcome::Cleaned {
        let mut all = seen_arcs.clone();
        all.sort_unstable();
        let mut expected = g.arcs().to_vec();
        expected.sort_unstable();
        assert_eq!(all, expected);
    }
}

#[test]
fn cleanable_iff_acyclic_up_to_five_vertices() {
    let mut checked = 0;
    for nu in 1..=5 {
        for g in all_oriented_graphs(nu) {
            let acyclic = !has_cycle_dfs(&g);
            assert_eq!(is_cleanable(&g), acyclic, "{:?}", g.arcs());
            let saturated = simulate(&g, &BrushAllocation::saturating(&g)).unwrap();
            assert_eq!(saturated.is_cleaned(), acyclic, "{:?}", g.arcs());
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 3 + 27 + 729 + 59049);
}

#[test]
fn firing_order_does_not_change_outcome() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut outcomes = [0usize; 2];
    for _ in 0..1000 {
        let nu = rng.gen_range(1..=8);
        let g = random_dag(&mut rng, nu);
        let alloc = BrushAllocation::new((0..nu).map(|_| rng.gen_range(0..=3)).collect());
        let reference = simulate(&g, &alloc).unwrap();
        check_trace(&g, &alloc, &reference);
        outcomes[reference.is_cleaned() as usize] += 1;
        for _ in 0..5 {
            let trace =
                simulate_by(&g, &alloc, |eligible| rng.gen_range(0..eligible.len())).unwrap();
            check_trace(&g, &alloc, &trace);
            assert_eq!(
                trace.outcome,
                reference.outcome,
                "{:?} with {:?}",
                g.arcs(),
                alloc
            );
        }
    }
    // both outcomes must actually occur for the comparison to mean anything
    assert!(outcomes[0] > 100 && outcomes[1] > 100, "{outcomes:?}");
}

#[test]
fn allocation_cleans_iff_it_covers_each_vertex_deficit() {
    let underlying = build_jaco(5).unwrap().underlying();
    let mut acyclic = 0;
    for mask in 0..32 {
        let g = underlying.orient(mask);
        if !g.is_acyclic() {
            continue;
        }
        acyclic += 1;
        let need: Vec<u64> = g
            .out_degrees()
            .iter()
            .zip(g.in_degrees())
            .map(|(&o, i)| o.saturating_sub(i) as u64)
            .collect();
        for code in 0..4usize.pow(5) {
            let beta: Vec<u64> = (0..5).map(|k| (code / 4usize.pow(k)) as u64 % 4).collect();
            let covers = beta.iter().zip(&need).all(|(b, n)| b >= n);
            let alloc = BrushAllocation::new(beta);
            assert_eq!(
                verify_allocation(&g, &alloc).unwrap(),
                covers,
                "mask {mask}, {alloc:?}"
            );
        }
    }
    assert_eq!(acyclic, 24);
}

#[test]
fn j9_trace_bookkeeping() {
    let g = build_jaco(9).unwrap().to_digraph();
    let alloc = BrushAllocation::new(vec![1, 0, 1, 2, 1, 1, 0, 0, 0]);
    let trace = simulate(&g, &alloc).unwrap();
    check_trace(&g, &alloc, &trace);
    assert_eq!(trace.cleaning_sequence(), vec![1, 2, 3, 4, 5, 6, 7, 8]);
}
