//! Hypersurface cusps `x^p + y^q + z^r + xyz = 0`.

use num_bigint::BigInt;

use crate::arith::{cokernel_torsion, AbGroup, IntMatrix};
use crate::cusp::CuspCycle;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriplePQR {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

impl TriplePQR {
    /// Requires `p, q, r ≥ 2` and `1/p + 1/q + 1/r < 1`.
    pub fn new(p: u64, q: u64, r: u64) -> Result<Self> {
        if p < 2 || q < 2 || r < 2 {
            return Err(Error::InvalidTriple(format!("({p}, {q}, {r}) has an entry below 2")));
        }
        let (bp, bq, br) = (BigInt::from(p), BigInt::from(q), BigInt::from(r));
        if &bq * &br + &bp * &br + &bp * &bq >= &bp * &bq * &br {
            return Err(Error::InvalidTriple(format!("1/{p} + 1/{q} + 1/{r} is not below 1")));
        }
        Ok(TriplePQR { p, q, r })
    }

    /// Dual cycle `(p − 1, q − 1, r − 1)`, canonicalized. Triples with an
    /// entry 2 give a weight-1 vertex and are rejected.
    pub fn dual_cycle(&self) -> Result<CuspCycle> {
        CuspCycle::new(vec![self.p - 1, self.q - 1, self.r - 1])
            .map(|c| c.canonicalize())
            .map_err(|_| {
                Error::InvalidTriple(format!(
                    "({}, {}, {}) gives a dual cycle entry below 2",
                    self.p, self.q, self.r
                ))
            })
    }

    /// Relation matrix of `λ^p = μ^q = ν^r = λμν` after abelianization.
    pub fn relation_matrix(&self) -> IntMatrix {
        let (p, q, r) = (self.p as i64, self.q as i64, self.r as i64);
        IntMatrix::from_rows(&[vec![p - 1, -1, -1], vec![-1, q - 1, -1], vec![-1, -1, r - 1]])
            .expect("3x3 matrix")
    }

    /// Abelianized link group. Its divisors are reported as computed; no
    /// identification with a particular decomposition is claimed.
    pub fn link_group(&self) -> AbGroup {
        cokernel_torsion(&self.relation_matrix()).expect("square")
    }

    pub fn group_order(&self) -> BigInt {
        self.link_group().torsion_order()
    }

    pub fn smoothing_record(&self) -> PinkhamSmoothing {
        PinkhamSmoothing {
            equation: format!("x^{} + y^{} + z^{} + x*y*z = t", self.p, self.q, self.r),
            exponents: (self.p, self.q, self.r),
            parameter: "t".into(),
            parameter_invariant: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinkhamSmoothing {
    pub equation: String,
    pub exponents: (u64, u64, u64),
    pub parameter: String,
    pub parameter_invariant: bool,
}
