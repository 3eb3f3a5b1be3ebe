//! Torsion of the link of the cusp (6,2,2,3,3,2,2,4) computed two ways.

use slc_invariants::report::{discrepancy_report, DiscrepancyReport};

fn main() {
    print!("{}", discrepancy_report());
    let r = DiscrepancyReport::compute();
    assert!(r.is_consistent());
}
