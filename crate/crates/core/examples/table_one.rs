//! Degree and brush-number table for J_1(1)..J_16(1) in all three output formats.

use jaco_brush::report::{render_table1, Format};
use jaco_brush::table1;

fn main() -> jaco_brush::Result<()> {
    let rows = table1(16)?;
    for format in [Format::Md, Format::Csv, Format::Json] {
        print!("{}", render_table1(&rows, format)?);
        println!();
    }
    Ok(())
}
