//! Cost of every orientation of J_5(1), listed with e_1 varying slowest.

use jaco_brush::oracle::row_mask;
use jaco_brush::{build_jaco, census, DEFAULT_CAP_EPS};

fn main() -> jaco_brush::Result<()> {
    let u = build_jaco(5)?.underlying();
    let c = census(&u, DEFAULT_CAP_EPS)?;
    println!("edges {:?}", c.edge_order);
    for (row, cost) in c.in_row_order().iter().enumerate() {
        let g = u.orient(row_mask(row as u64, u.eps()));
        println!("{:>2}  {:?}  {cost}", row + 1, g.arcs());
    }
    println!(
        "{} orientations, minimum {}, {} undoable",
        c.len(),
        c.minimum,
        c.undoable_count
    );
    Ok(())
}
