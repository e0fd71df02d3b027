//! Step through the cleaning process on J_9(1), then show that one brush fewer
//! anywhere leaves arcs dirty and that a directed cycle is never cleaned.

use jaco_brush::{build_jaco, minimal_allocation, simulate, BrushAllocation, DiGraph};

fn main() -> jaco_brush::Result<()> {
    let g = build_jaco(9)?.to_digraph();
    let alloc = minimal_allocation(&g)?;
    println!("allocation {:?}", alloc.as_slice());
    let trace = simulate(&g, &alloc)?;
    for step in &trace.steps {
        println!(
            "fire v_{} holding {}: cleans {:?}, {} left behind",
            step.vertex,
            step.held,
            step.cleaned,
            step.surplus()
        );
    }
    println!("outcome: {:?}", trace.outcome);

    let mut short = alloc.clone();
    short.as_mut_slice()[3] -= 1;
    let trace = simulate(&g, &short)?;
    println!(
        "with {:?}: {:?}, dirty {:?}",
        short.as_slice(),
        trace.outcome,
        trace.remaining_dirty
    );

    let cycle = DiGraph::new(3, vec![(1, 2), (2, 3), (3, 1)])?;
    let trace = simulate(&cycle, &BrushAllocation::new(vec![100, 100, 100]))?;
    println!("3-cycle with 300 brushes: {:?}", trace.outcome);
    Ok(())
}
