//! Closed-form brush number with its prefix/Hope split and a minimal allocation.
//!
//! cargo run --example brush_number -- 20

use jaco_brush::{brush_number, build_jaco, verify_allocation};

fn main() -> jaco_brush::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    for n in 1..=max_n {
        let g = build_jaco(n)?;
        let r = brush_number(&g)?;
        assert!(verify_allocation(&g.to_digraph(), &r.allocation)?);
        println!(
            "n={n:<3} prime=v_{:<3} b_r={:<4} ({} + {})  allocation {:?}",
            r.prime_index,
            r.b_r,
            r.sum_prefix,
            r.sum_hope,
            r.allocation.as_slice()
        );
    }
    Ok(())
}
