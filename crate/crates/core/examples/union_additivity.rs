//! The brush number of a disjoint union equals the sum over its components.

use jaco_brush::{
    brute_force_brush_number, build_jaco, union_additivity_check, UndirectedGraph, DEFAULT_CAP_EPS,
};

fn main() -> jaco_brush::Result<()> {
    let j = |n| build_jaco(n).map(|g| g.underlying());
    let cases = [
        vec![j(2)?, j(2)?],
        vec![j(4)?, UndirectedGraph::complete(3)],
        vec![
            j(5)?,
            UndirectedGraph::path(4),
            UndirectedGraph::complete(4),
        ],
    ];
    for parts in &cases {
        let each: Vec<u64> = parts
            .iter()
            .map(|p| brute_force_brush_number(p, DEFAULT_CAP_EPS))
            .collect::<Result<_, _>>()?;
        let union = UndirectedGraph::disjoint_union(parts.iter());
        let whole = brute_force_brush_number(&union, DEFAULT_CAP_EPS)?;
        println!(
            "components {each:?} sum {} | union on {} vertices, {} edges: {whole} | additive {}",
            each.iter().sum::<u64>(),
            union.nu(),
            union.eps(),
            union_additivity_check(parts, DEFAULT_CAP_EPS)?
        );
    }
    Ok(())
}
