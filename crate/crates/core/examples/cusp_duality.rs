//! Duality of cusp cycles: block form, dual cycle, monodromy and link.
//!
//! Run with `cargo run --example cusp_duality -- 6,2,2,3,3,2,2,4`.

use slc_invariants::CuspCycle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "6,2,2,3,3,2,2,4".into());
    let cycle: CuspCycle = arg.parse()?;
    let dual = cycle.dual();
    let a = cycle.monodromy();

    println!("cycle      ({cycle}), canonical ({})", cycle.canonicalize());
    println!("blocks     {:?}", cycle.block_form().blocks);
    println!("dual       ({dual})");
    println!("monodromy  {a}, trace {}", a.trace());
    println!("link H_1   {}", cycle.link_homology());
    println!("complete intersection: {}", cycle.is_complete_intersection());
    assert_eq!(dual.dual(), cycle);
    assert_eq!(dual.len() as u64, cycle.excess());
    Ok(())
}
