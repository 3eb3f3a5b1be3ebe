//! Universal abelian cover of a quotient cusp and its equivariant smoothings.
//!
//! Run with `cargo run --example quotient_cusp_cover -- 3,2,4`.

use slc_invariants::QuotientCuspSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,2,4".into());
    let e: Vec<u64> = arg.split(',').map(str::parse).collect::<Result<_, _>>()?;
    let spec = QuotientCuspSpec::new(e)?;

    println!("B = {}", spec.b_matrix());
    println!("|D| = 16b = {}", spec.cover_group_order());
    let cover = spec.cover_resolution_cycle()?;
    println!("cover cycle ({cover}), dual ({})", cover.dual());
    println!("cover is a complete intersection: {}", cover.is_complete_intersection());

    let data = spec.cover_equations()?;
    for t in data.tuples.iter().take(3) {
        let family = spec.smoothing_family(*t)?;
        println!("{:?}: {}; {}  parameter {}", t, family.equations[0], family.equations[1], family.parameter);
    }
    if data.tuples.len() > 3 {
        println!("... {} admissible tuples in all", data.tuples.len());
    }
    Ok(())
}
