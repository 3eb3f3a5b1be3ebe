//! Class T cyclic quotient singularities 1/dn^2(1, dna - 1).
//!
//! Run with `cargo run --example class_t_enumeration -- 50`.

use slc_invariants::cyclic_quotient::enumerate_class_t;
use slc_invariants::CyclicQuotient;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_m: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(50);

    for (c, w) in enumerate_class_t(max_m) {
        let t = c.classify()?;
        let kind = if t.is_wahl { "Wahl" } else { "" };
        println!("{c:<14} d={} n={} a={}  index {}  cover A{} {kind}", w.d, w.n, w.a, t.index, t.cover_a_type());
    }

    match CyclicQuotient::new(5, 1)?.classify() {
        Ok(_) => println!("1/5(1,1) is class T"),
        Err(e) => println!("1/5(1,1): {e}"),
    }
    Ok(())
}
