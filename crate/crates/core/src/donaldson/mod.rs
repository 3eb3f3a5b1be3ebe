//! The sextic example: a group of order 72 acting on `ℙ³`, its invariant
//! sextics and two-forms, the toric surgery from the GIT fan to the KSBA
//! fan, and the resulting tautological invariant.

pub mod cyclotomic;
pub mod fan;
pub mod invariants;
pub mod tautological;

use serde::Serialize;

pub use cyclotomic::Cyclo6;
pub use fan::{initial_git_fan, ksba_fan, ksba_surgery, Cone, FanSurgery, Ray, StackyFan};
pub use invariants::{GroupAction, InvariantSpace, MonomialMap, Polynomial};
pub use tautological::{cm_exponents, tautological_invariant, RationalPairing, TautologicalInvariant};

use invariants::{
    format_wedge, invariant_polynomials, invariant_wedges, polynomial_coordinates, polynomial_from_coordinates,
    q_plus_minus,
};

#[derive(Clone, Debug, Serialize)]
pub struct SexticInvariants {
    pub group_order: usize,
    pub ambient_dimension: usize,
    pub dimension: usize,
    /// Row-reduced basis written out as polynomials.
    pub basis: Vec<String>,
    /// A readable spanning set, checked to span the same space.
    pub named_basis: Vec<String>,
}

/// `x₁⁶+x₂⁶`, `y₁⁶+y₂⁶`, `Q₊³`, `Q₊Q₋²` with `Q± = x₁y₁ ± x₂y₂`.
pub fn named_sextics() -> Vec<(String, Polynomial)> {
    let (qp, qm) = q_plus_minus();
    let x = Polynomial::monomial([6, 0, 0, 0]).add(&Polynomial::monomial([0, 0, 6, 0]));
    let y = Polynomial::monomial([0, 6, 0, 0]).add(&Polynomial::monomial([0, 0, 0, 6]));
    vec![
        ("x1^6 + x2^6".to_string(), x),
        ("y1^6 + y2^6".to_string(), y),
        ("Q+^3".to_string(), qp.pow(3)),
        ("Q+*Q-^2".to_string(), qp.mul(&qm.pow(2))),
    ]
}

pub fn invariant_sextic_basis() -> SexticInvariants {
    let group = GroupAction::sextic_symmetry();
    let (monomials, space) = invariant_polynomials(&group, 6);
    let named = named_sextics();
    debug_assert!(named
        .iter()
        .all(|(_, p)| space.contains(&polynomial_coordinates(&monomials, p))));
    SexticInvariants {
        group_order: group.order(),
        ambient_dimension: monomials.len(),
        dimension: space.dimension,
        basis: space
            .basis
            .iter()
            .map(|row| polynomial_from_coordinates(&monomials, row).to_string())
            .collect(),
        named_basis: named.into_iter().map(|(n, _)| n).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoFormInvariants {
    pub ambient_dimension: usize,
    pub dimension: usize,
    pub basis: Vec<String>,
}

fn two_forms(group: &GroupAction) -> TwoFormInvariants {
    let (wedges, space) = invariant_wedges(group);
    TwoFormInvariants {
        ambient_dimension: wedges.len(),
        dimension: space.dimension,
        basis: space.basis.iter().map(|row| format_wedge(&wedges, row)).collect(),
    }
}

/// `G`-invariants in `Λ²` of the standard representation.
pub fn invariant_two_forms() -> TwoFormInvariants {
    two_forms(&GroupAction::sextic_symmetry())
}

/// Same, for the subgroup of diagonal twists.
pub fn twist_invariant_two_forms() -> TwoFormInvariants {
    two_forms(&GroupAction::diagonal_twists())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivariantVd {
    pub h1: i64,
    pub h2: i64,
    pub vd: i64,
}

/// `h¹ − h²` with `h²` the dimension of invariant two-forms (Serre
/// duality) and `h¹` the carried constant.
pub fn equivariant_vd() -> EquivariantVd {
    let h1 = tautological::INVARIANT_H1_TANGENT;
    let h2 = invariant_two_forms().dimension as i64;
    EquivariantVd { h1, h2, vd: h1 - h2 }
}
