//! The symmetric sextic family: invariant theory, the stacky fan surgery
//! and tautological numbers on the virtual class.

use slc_invariants::donaldson::{
    equivariant_vd, invariant_sextic_basis, invariant_two_forms, ksba_surgery, tautological_invariant,
    RationalPairing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = invariant_sextic_basis();
    println!("|G| = {}; invariant sextics: {} of {} monomials", s.group_order, s.dimension, s.ambient_dimension);
    for name in &s.named_basis {
        println!("  {name}");
    }

    let t = invariant_two_forms();
    println!("invariant 2-forms: dimension {}, spanned by {}", t.dimension, t.basis.join(", "));
    let vd = equivariant_vd();
    println!("equivariant vd = {} - {} = {}", vd.h1, vd.h2, vd.vd);

    let surgery = ksba_surgery();
    for (step, fan) in [
        ("GIT fan", &surgery.initial),
        ("insert (4,-1)", &surgery.after_first_insertion),
        ("insert (2,1)", &surgery.after_second_insertion),
        ("collapse (2,0)", &surgery.result),
    ] {
        println!("{step}:");
        for cone in fan.cones() {
            println!("  {cone}");
        }
    }

    let inv = tautological_invariant(&RationalPairing::sextic())?;
    println!("c1(L_Ob) = {} c1(lambda_2); <c1(lambda_2), vir> = {}; I_CM = {}", inv.ratio, inv.l2_vir, inv.i_cm);
    Ok(())
}
