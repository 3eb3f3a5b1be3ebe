//! Smooth degree-`d` surfaces `S ⊂ ℙ³`: numerical invariants and the
//! cohomology of the tangent sheaf.
//!
//! Dimensions come from three long exact sequences:
//!
//! ```text
//! 0 → O(k) → O(k+1)^4 → T_ℙ³(k) → 0          (Euler, twisted)
//! 0 → T_ℙ³(−d) → T_ℙ³ → T_ℙ³|_S → 0           (restriction)
//! 0 → O_ℙ³ → O_ℙ³(d) → O_S(d) = N_S → 0       (normal bundle)
//! 0 → T_S → T_ℙ³|_S → N_S → 0                 (tangent–normal)
//! ```
//!
//! The only map ranks supplied by hand are those of the Euler maps on
//! `H⁰` and `H³`, which are multiplication by the four coordinates and
//! its Serre dual. Everything else is forced by exactness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_sequence::{LongExactSequence, SolvedSequence};

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub sheaf: String,
    pub dims: Vec<i128>,
}

impl CohomologyTable {
    fn new(sheaf: impl Into<String>, dims: Vec<i128>) -> Self {
        CohomologyTable { sheaf: sheaf.into(), dims }
    }

    pub fn h(&self, q: usize) -> i128 {
        self.dims[q]
    }
}

/// `H^q(ℙ³, O(k))`.
pub fn line_bundle_cohomology_p3(k: i128) -> CohomologyTable {
    CohomologyTable::new(
        format!("O_P3({k})"),
        vec![binomial(k + 3, 3), 0, 0, binomial(-k - 1, 3)],
    )
}

/// `H^q(ℙ³, T(k))` from the twisted Euler sequence.
pub fn tangent_p3_cohomology(k: i128) -> Result<CohomologyTable> {
    let sub = line_bundle_cohomology_p3(k);
    let mid = line_bundle_cohomology_p3(k + 1);
    let mut les = LongExactSequence::of_short_exact(["O(k)", "O(k+1)^4", "T(k)"], 3);
    for q in 0..4 {
        les.set_dim(LongExactSequence::slot(q, 0), sub.h(q));
        les.set_dim(LongExactSequence::slot(q, 1), 4 * mid.h(q));
    }
    // s ↦ (x₀s, …, x₃s) is injective on sections.
    les.set_rank(LongExactSequence::slot(0, 0), sub.h(0));
    // On H³ it is dual to (s_i) ↦ Σ x_i s_i : H⁰(O(−k−5))⁴ → H⁰(O(−k−4)),
    // onto when the target degree is positive and zero otherwise.
    let dual_rank = if k <= -5 { binomial(-k - 4 + 3, 3) } else { 0 };
    les.set_rank(LongExactSequence::slot(3, 0), dual_rank);
    let solved = les.solve()?;
    Ok(CohomologyTable::new(format!("T_P3({k})"), solved.column(2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "K2")]
    pub k2: i128,
    pub e: i128,
    pub chi: i128,
    pub pg: i128,
    pub q: i128,
}

/// Closed forms for a smooth degree-`d` surface in ℙ³.
///
/// Returns `None` for `d < 1`.
pub fn surface_invariants(d: i128) -> Option<SurfaceInvariants> {
    if d < 1 {
        return None;
    }
    let k2 = d * (d - 4) * (d - 4);
    let e = d * d * d - 4 * d * d + 6 * d;
    debug_assert_eq!((k2 + e) % 12, 0);
    Some(SurfaceInvariants { k2, e, chi: (k2 + e) / 12, pg: binomial(d - 1, 3), q: 0 })
}

pub fn virtual_dimension(k2: i128, chi: i128) -> i128 {
    10 * chi - 2 * k2
}

/// All tables produced while computing `H^q(S, T_S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentComputation {
    pub degree: i128,
    pub normal: CohomologyTable,
    pub restricted_tangent: CohomologyTable,
    pub tangent: CohomologyTable,
    /// Alternating sums of the three sequences, all zero.
    pub euler_characteristics: [i128; 3],
}

/// `H^q(S, T_S)` for a smooth surface of degree `d ≥ 5`.
pub fn tangent_cohomology(d: i128) -> Result<CohomologyTable> {
    tangent_computation(d).map(|c| c.tangent)
}

pub fn tangent_computation(d: i128) -> Result<TangentComputation> {
    if d < 5 {
        return Err(Error::DegreeTooSmall(d as i64));
    }
    let slot = LongExactSequence::slot;

    // 0 → O → O(d) → N_S → 0
    let o = line_bundle_cohomology_p3(0);
    let od = line_bundle_cohomology_p3(d);
    let mut normal_seq = LongExactSequence::of_short_exact(["O", "O(d)", "N_S"], 3);
    for q in 0..4 {
        normal_seq.set_dim(slot(q, 0), o.h(q));
        normal_seq.set_dim(slot(q, 1), od.h(q));
    }
    normal_seq.set_rank(slot(0, 0), 1);
    let normal_seq = normal_seq.solve()?;
    let normal = normal_seq.column(2);

    // 0 → T(−d) → T → T|_S → 0
    let t_minus = tangent_p3_cohomology(-d)?;
    let t0 = tangent_p3_cohomology(0)?;
    let mut restrict_seq = LongExactSequence::of_short_exact(["T(-d)", "T", "T|S"], 3);
    for q in 0..4 {
        restrict_seq.set_dim(slot(q, 0), t_minus.h(q));
        restrict_seq.set_dim(slot(q, 1), t0.h(q));
    }
    let restrict_seq = restrict_seq.solve()?;
    let restricted = restrict_seq.column(2);

    // 0 → T_S → T|_S → N_S → 0 on the surface
    let mut tangent_seq = LongExactSequence::of_short_exact(["T_S", "T|S", "N_S"], 2);
    for q in 0..3 {
        tangent_seq.set_dim(slot(q, 1), restricted[q]);
        tangent_seq.set_dim(slot(q, 2), normal[q]);
    }
    // general type: no vector fields
    tangent_seq.set_dim(slot(0, 0), 0);
    let tangent_seq: SolvedSequence = tangent_seq.solve()?;
    let tangent = tangent_seq.column(0);

    for (table, name) in [(&normal, "N_S"), (&restricted, "T|S")] {
        if table.get(3).is_some_and(|&h| h != 0) {
            return Err(Error::InconsistentSequence(format!("H^3({name}) on a surface is nonzero")));
        }
    }

    let inv = surface_invariants(d).expect("d >= 5");
    if tangent[1] - tangent[2] != virtual_dimension(inv.k2, inv.chi) {
        return Err(Error::InconsistentSequence(format!(
            "h1 - h2 = {} but 10 chi - 2 K^2 = {}",
            tangent[1] - tangent[2],
            virtual_dimension(inv.k2, inv.chi)
        )));
    }

    Ok(TangentComputation {
        degree: d,
        normal: CohomologyTable::new(format!("O_S({d})"), normal[..3].to_vec()),
        restricted_tangent: CohomologyTable::new("T_P3|S", restricted[..3].to_vec()),
        tangent: CohomologyTable::new("T_S", tangent),
        euler_characteristics: [
            normal_seq.euler_characteristic(),
            restrict_seq.euler_characteristic(),
            tangent_seq.euler_characteristic(),
        ],
    })
}
