//! ℤ/2 quotients of cusps: the B-matrix, the order of the universal
//! abelian cover group, the cover's complete-intersection equations and its
//! resolution cycle.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::Mat2;
use crate::cusp::CuspCycle;
use crate::error::{Error, Result};

/// Chain `e₁ … e_k` of a quotient-cusp resolution graph (`k ≥ 2`, every
/// `e_i ≥ 2`, some `e_j > 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCuspSpec {
    e: Vec<u64>,
}

impl QuotientCuspSpec {
    pub fn new(e: Vec<u64>) -> Result<Self> {
        if e.len() < 2 {
            return Err(Error::InvalidQuotientCuspData(format!(
                "need at least two chain vertices, got {}",
                e.len()
            )));
        }
        if let Some(x) = e.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidQuotientCuspData(format!("entry {x} is below 2")));
        }
        if e.iter().all(|&x| x == 2) {
            return Err(Error::InvalidQuotientCuspData("all entries equal 2".into()));
        }
        Ok(QuotientCuspSpec { e })
    }

    pub fn e(&self) -> &[u64] {
        &self.e
    }

    /// `B = [[0, 1], [−1, 0]] · M_{f_k} ⋯ M_{f_1}` where `f` is `e` with the
    /// first and last entries lowered by one.
    pub fn b_matrix(&self) -> Mat2 {
        let k = self.e.len();
        let product = self.e.iter().enumerate().fold(Mat2::identity(), |acc, (i, &x)| {
            let f = if i == 0 || i == k - 1 { x - 1 } else { x };
            Mat2::elementary(f).mul(&acc)
        });
        Mat2::new(0, 1, -1, 0).mul(&product)
    }

    /// `|D| = 16 b`.
    pub fn cover_group_order(&self) -> BigInt {
        self.b_matrix().b * 16
    }

    fn small_entries(&self) -> Result<(u64, u64, u64)> {
        let b = self.b_matrix();
        let get = |v: &BigInt, name: &str| {
            v.to_u64().filter(|&x| x >= 1).ok_or_else(|| {
                Error::InvalidQuotientCuspData(format!("B-matrix entry {name} = {v} is not a small positive integer"))
            })
        };
        let c = b.c.to_i64().ok_or_else(|| Error::InvalidQuotientCuspData("B-matrix entry c overflows".into()))?;
        Ok((get(&b.a, "a")?, get(&b.d, "d")?, c.rem_euclid(2) as u64))
    }

    /// All `(α, β, γ, δ) ≥ 0` with `α + β = 2a`, `γ + δ = 2d` and every
    /// component congruent to `c` mod 2.
    pub fn cover_equations(&self) -> Result<CoverData> {
        let b = self.b_matrix();
        let (a, d, parity) = self.small_entries()?;
        let split = |total: u64| -> Vec<(u64, u64)> {
            (0..=total).filter(|x| x % 2 == parity).map(|x| (x, total - x)).collect()
        };
        let mut tuples = Vec::new();
        for (alpha, beta) in split(2 * a) {
            for &(gamma, delta) in &split(2 * d) {
                tuples.push(ExponentTuple { alpha, beta, gamma, delta });
            }
        }
        Ok(CoverData {
            group_order: self.cover_group_order(),
            b,
            tuples,
        })
    }

    /// Resolution cycle of the universal abelian cover.
    pub fn cover_resolution_cycle(&self) -> Result<CuspCycle> {
        let (a, d, _) = self.small_entries()?;
        let run = |n: u64| std::iter::repeat_n(2, n as usize);
        let entries: Vec<u64> = match (a, d) {
            (1, 1) => return Err(Error::DegenerateCover),
            (x, 1) | (1, x) => {
                let mut v = Vec::new();
                for _ in 0..2 {
                    v.push(4);
                    v.extend(run(2 * x - 3));
                }
                v
            }
            (a, d) => {
                let mut v = Vec::new();
                for _ in 0..2 {
                    v.push(3);
                    v.extend(run(2 * a - 3));
                    v.push(3);
                    v.extend(run(2 * d - 3));
                }
                v
            }
        };
        CuspCycle::new(entries)
    }

    /// Dual of the cover's cycle as predicted in closed form: `(2a, 2d, 2a, 2d)`.
    pub fn expected_cover_dual(&self) -> Result<CuspCycle> {
        let (a, d, _) = self.small_entries()?;
        CuspCycle::new(vec![2 * a, 2 * d, 2 * a, 2 * d])
    }

    /// The `D`-equivariant smoothing of the cover for one admissible tuple.
    pub fn smoothing_family(&self, tuple: ExponentTuple) -> Result<SmoothingFamily> {
        let data = self.cover_equations()?;
        if !data.tuples.contains(&tuple) {
            return Err(Error::TupleNotValid(tuple.to_string()));
        }
        Ok(SmoothingFamily {
            equations: [
                format!("x^2 + y^2 - {} = t", monomial("u", tuple.alpha, "v", tuple.beta)),
                format!("u^2 + v^2 - {} = t", monomial("x", tuple.gamma, "y", tuple.delta)),
            ],
            parameter: "t".into(),
            parameter_invariant: true,
            tuple,
            group_order: data.group_order,
        })
    }
}

fn monomial(x: &str, i: u64, y: &str, j: u64) -> String {
    let factor = |v: &str, e: u64| match e {
        0 => None,
        1 => Some(v.to_string()),
        e => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [factor(x, i), factor(y, j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentTuple {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub delta: u64,
}

impl ExponentTuple {
    pub fn new(alpha: u64, beta: u64, gamma: u64, delta: u64) -> Self {
        ExponentTuple { alpha, beta, gamma, delta }
    }

    /// `x² + y² = u^α v^β`, `u² + v² = x^γ y^δ`.
    pub fn equations(&self) -> [String; 2] {
        [
            format!("x^2 + y^2 = {}", monomial("u", self.alpha, "v", self.beta)),
            format!("u^2 + v^2 = {}", monomial("x", self.gamma, "y", self.delta)),
        ]
    }
}

impl std::fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub b: Mat2,
    pub group_order: BigInt,
    pub tuples: Vec<ExponentTuple>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingFamily {
    pub equations: [String; 2],
    pub parameter: String,
    /// The cover group acts trivially on the deformation parameter.
    pub parameter_invariant: bool,
    pub tuple: ExponentTuple,
    pub group_order: BigInt,
}
