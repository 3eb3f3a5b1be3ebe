//! Two-dimensional cyclic quotient singularities `1/m(1, q)`.
//!
//! A class T singularity is either an A-type rational double point or
//! `1/(d n²)(1, d n a − 1)` with `gcd(a, n) = 1`; Wahl singularities are
//! the class T ones with `d = 1`.
//!
//! `1/m(1, q)` and `1/m(1, q⁻¹)` are the same germ (swap the coordinates),
//! so [`CyclicQuotient`] always stores the smaller of the two. A pair written
//! `1/m(q, q⁻¹)`, e.g. `1/9(2, 5)`, is read as that inverse pair; see
//! [`CyclicQuotient::from_inverse_pair`]. Reading it instead as the weights
//! of `(x, y) ↦ (ζ² x, ζ⁵ y)` gives `1/9(1, 4)`, which is not of class T.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicQuotient {
    pub m: i64,
    pub q: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTWitness {
    pub d: i64,
    pub n: i64,
    pub a: i64,
}

fn inverse_mod(x: i64, m: i64) -> Option<i64> {
    let g = x.extended_gcd(&m);
    (g.gcd == 1).then(|| g.x.rem_euclid(m))
}

impl CyclicQuotient {
    /// `1/m(1, q)` in normalized form.
    pub fn new(m: i64, q: i64) -> Result<Self> {
        CyclicQuotient::normalize(m, q, None)
    }

    /// Normalizes `1/m(p, q)` (or `1/m(1, q)` when `p` is absent) to
    /// `1/m(1, q')` with `q' = min(q'', q''⁻¹ mod m)`.
    pub fn normalize(m: i64, q: i64, p: Option<i64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidCyclicQuotient(format!("order {m} is below 2")));
        }
        inverse_mod(q.rem_euclid(m), m).ok_or(Error::NotCoprime(m, q))?;
        let mut q = q.rem_euclid(m);
        if let Some(p) = p {
            let p_inv = inverse_mod(p.rem_euclid(m), m).ok_or(Error::NotCoprime(m, p))?;
            q = (q * p_inv).rem_euclid(m);
        }
        let q_inv = inverse_mod(q, m).expect("q is a unit");
        Ok(CyclicQuotient { m, q: q.min(q_inv) })
    }

    /// `1/m(q, q')` with `q q' ≡ 1 (mod m)`, i.e. `1/m(1, q)`.
    pub fn from_inverse_pair(m: i64, q: i64, q_inv: i64) -> Result<Self> {
        let c = CyclicQuotient::new(m, q)?;
        if (q * q_inv).rem_euclid(m) != 1 {
            return Err(Error::InvalidCyclicQuotient(format!("{q}·{q_inv} is not 1 mod {m}")));
        }
        Ok(c)
    }

    /// Only the A-type `1/m(1, m − 1)` is a rational double point among
    /// cyclic quotients.
    pub fn is_rdp(&self) -> bool {
        self.q == self.m - 1
    }

    /// First `(d, n, a)` in lexicographic `(n, a)` order with `m = d n²`,
    /// `1 ≤ a < n`, `gcd(a, n) = 1` and `q ≡ d n a − 1` up to inversion.
    pub fn class_t_witness(&self) -> Option<ClassTWitness> {
        if self.is_rdp() {
            return None;
        }
        let mut n = 2;
        while n * n <= self.m {
            if self.m % (n * n) == 0 {
                let d = self.m / (n * n);
                for a in (1..n).filter(|a| a.gcd(&n) == 1) {
                    let candidate = CyclicQuotient::new(self.m, d * n * a - 1).expect("d n a − 1 is a unit mod d n²");
                    if candidate == *self {
                        return Some(ClassTWitness { d, n, a });
                    }
                }
            }
            n += 1;
        }
        None
    }

    pub fn classify(&self) -> Result<ClassT> {
        if self.is_rdp() {
            return Ok(ClassT { witness: None, is_wahl: false, index: 1, cover: *self });
        }
        let w = self.class_t_witness().ok_or(Error::NotClassT(self.m, self.q))?;
        let dn = w.d * w.n;
        Ok(ClassT {
            witness: Some(w),
            is_wahl: w.d == 1,
            index: w.n,
            cover: CyclicQuotient { m: dn, q: dn - 1 },
        })
    }

    pub fn is_wahl(&self) -> Result<bool> {
        self.classify().map(|c| c.is_wahl)
    }

    pub fn index(&self) -> Result<i64> {
        self.classify().map(|c| c.index)
    }

    /// The index-one cover, an `A_{dn−1}` singularity.
    pub fn index_one_cover(&self) -> Result<CyclicQuotient> {
        self.classify().map(|c| c.cover)
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.m, self.q)
    }
}

impl FromStr for CyclicQuotient {
    type Err = Error;

    /// `m/q` or `m/p,q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCyclicQuotient(format!("cannot parse {s:?}; expected m/q or m/p,q"));
        let (m, rest) = s.split_once('/').ok_or_else(bad)?;
        let m: i64 = m.trim().parse().map_err(|_| bad())?;
        let weights: Vec<i64> = rest
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match weights.as_slice() {
            [q] => CyclicQuotient::normalize(m, *q, None),
            [p, q] => CyclicQuotient::normalize(m, *q, Some(*p)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassT {
    /// `None` for a rational double point.
    pub witness: Option<ClassTWitness>,
    pub is_wahl: bool,
    pub index: i64,
    pub cover: CyclicQuotient,
}

impl ClassT {
    /// `n` with the cover `A_{n}`.
    pub fn cover_a_type(&self) -> i64 {
        self.cover.m - 1
    }
}

/// Every non-RDP class T singularity with `4 ≤ m ≤ max_m`, sorted by `(m, q)`.
pub fn enumerate_class_t(max_m: i64) -> Vec<(CyclicQuotient, ClassTWitness)> {
    (4..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| {
            (1..m - 1).filter_map(move |q| {
                if q.gcd(&m) != 1 {
                    return None;
                }
                let c = CyclicQuotient::new(m, q).ok()?;
                if c.q != q {
                    return None;
                }
                c.class_t_witness().map(|w| (c, w))
            })
        })
        .collect()
}
