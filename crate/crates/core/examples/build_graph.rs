//! Build J_n(1) and print its degree tables, Jaconian vertices and Hope subgraph.
//!
//! cargo run --example build_graph -- 12

use jaco_brush::build_jaco;

fn main() -> jaco_brush::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(Ok(12), |a| a.parse())
        .unwrap_or(12);
    let g = build_jaco(n)?;
    println!("J_{n}(1): {} arcs", g.eps());
    println!(
        "{:>4} {:>5} {:>5} {:>7} {:>6}",
        "i", "d^-", "d^+", "d^+inf", "deg"
    );
    let degrees = g.degrees();
    for i in 1..=n {
        println!(
            "{i:>4} {:>5} {:>5} {:>7} {:>6}",
            g.in_deg(i),
            g.out_deg(i),
            g.inf_out_deg(i),
            degrees[i - 1]
        );
    }
    println!("Jaconian set: {:?}", g.jaconian_set());
    let hope = g.hope_subgraph()?;
    println!(
        "prime Jaconian vertex v_{}, Hope subgraph on v_{}..=v_{} ({} vertices, {} arcs)",
        hope.prime_index,
        hope.vertices.start(),
        hope.vertices.end(),
        hope.size(),
        hope.arcs.len()
    );
    Ok(())
}
