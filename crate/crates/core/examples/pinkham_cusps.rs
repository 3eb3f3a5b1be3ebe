//! Cusps T_{p,q,r}: dual cycle, link group and the smoothing x^p + y^q + z^r + xyz.

use slc_invariants::TriplePQR;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q, r) in [(3, 3, 4), (3, 3, 7), (3, 4, 5), (4, 4, 4)] {
        let t = TriplePQR::new(p, q, r)?;
        let dual = t.dual_cycle()?;
        let s = t.smoothing_record();
        println!(
            "T({p},{q},{r}): dual ({dual}), link torsion {}, order {}, smoothing {}",
            t.link_group(),
            t.group_order(),
            s.equation
        );
    }
    Ok(())
}
