//! Tangent cohomology of smooth surfaces in P^3 from the normal and Euler sequences.
//!
//! Run with `cargo run --example hypersurface_cohomology -- 6`.

use slc_invariants::hypersurface::{surface_invariants, tangent_computation, virtual_dimension};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: i128 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let c = tangent_computation(d)?;
    let s = surface_invariants(d).expect("degree is positive");

    println!("degree {d}: K^2 = {}, e = {}, chi = {}, p_g = {}, q = {}", s.k2, s.e, s.chi, s.pg, s.q);
    for table in [&c.normal, &c.restricted_tangent, &c.tangent] {
        println!("  h^*({}) = {:?}", table.sheaf, table.dims);
    }
    println!("h^1 - h^2 = {}, 10 chi - 2 K^2 = {}", c.tangent.h(1) - c.tangent.h(2), virtual_dimension(s.k2, s.chi));
    Ok(())
}
