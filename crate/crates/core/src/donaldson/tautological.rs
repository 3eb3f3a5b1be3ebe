//! Exact rational arithmetic for the CM tautological invariant.
//!
//! Divisor classes are rational multiples of `c₁(λ₂)`. From one pairing
//! against the boundary curve `D_II`, `c₁(L_Ob) = r·c₁(λ₂)`; the virtual
//! class is then `c₁(L_Ob) ∩ [M]`, and `c₁(L_CM) = 2c₁(λ₂)` because
//! `λ₃ = λ₂²`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Named pairing values used by [`tautological_invariant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPairing {
    /// `⟨−c₁(L_Ob), D_II⟩`
    pub ob_dii: BigRational,
    /// `⟨c₁(λ₂), D_II⟩`
    pub l2_dii: BigRational,
    /// `⟨c₁(λ₂)², [M]⟩`
    pub l2_sq: BigRational,
}

impl RationalPairing {
    /// The sextic example: `−1/4`, `12`, `288`.
    pub fn sextic() -> Self {
        RationalPairing {
            ob_dii: BigRational::new(BigInt::from(-1), BigInt::from(4)),
            l2_dii: BigRational::from_integer(BigInt::from(12)),
            l2_sq: BigRational::from_integer(BigInt::from(288)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautologicalInvariant {
    /// `c₁(L_Ob) = ratio · c₁(λ₂)`
    pub ratio: BigRational,
    /// `⟨c₁(λ₂), [M]^vir⟩`
    pub l2_vir: BigRational,
    pub i_cm: BigRational,
}

pub fn tautological_invariant(p: &RationalPairing) -> Result<TautologicalInvariant> {
    if p.l2_dii.is_zero() {
        return Err(Error::ZeroPairing);
    }
    let ratio = -p.ob_dii.clone() / &p.l2_dii;
    let l2_vir = &p.l2_sq * &ratio;
    let i_cm = BigRational::from_integer(BigInt::from(2)) * &l2_vir;
    Ok(TautologicalInvariant { ratio, l2_vir, i_cm })
}

/// Exponents `(a₃, a₂)` in `λ_CM = λ₃^{a₃} ⊗ λ₂^{a₂}`.
pub fn cm_exponents(mu: &BigRational) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let six = BigRational::from_integer(BigInt::from(6));
    (two * mu + &six, -six)
}

/// `dim H¹(T)^G` for the sextic family. Not recomputed here.
pub const INVARIANT_H1_TANGENT: i64 = 2;
