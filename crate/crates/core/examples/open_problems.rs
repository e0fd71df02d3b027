//! Data for two open questions: the Hope-subgraph lower bound and the number
//! of edges joining the prefix v_1..v_i to the Hope subgraph.

use jaco_brush::{hope_bound_experiment, linking_experiment};

fn main() -> jaco_brush::Result<()> {
    println!("n    i   b_r(J_n)  |Hope|  b_r(Hope)  holds");
    for r in hope_bound_experiment(24)? {
        println!(
            "{:<4} {:<3} {:<9} {:<7} {:<10} {}",
            r.n, r.prime_index, r.br_jaco, r.hope_size, r.br_hope, r.bound_holds
        );
    }
    println!();
    println!("n    eps    prefix  hope   linking  b_r");
    for r in linking_experiment(24)? {
        println!(
            "{:<4} {:<6} {:<7} {:<6} {:<8} {}",
            r.n, r.eps, r.prefix_arcs, r.hope_arcs, r.linking_edges, r.br
        );
    }
    Ok(())
}
