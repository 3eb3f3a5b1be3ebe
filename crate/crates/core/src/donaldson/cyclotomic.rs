//! The field `ℚ(ζ₆)`, elements `a + bζ` with `ζ² = ζ − 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo6 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Cyclo6 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Cyclo6 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo6 { a: BigRational::from_integer(BigInt::from(n)), b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Cyclo6::from_int(0)
    }

    pub fn one() -> Self {
        Cyclo6::from_int(1)
    }

    /// `ζ^k` for a primitive sixth root of unity `ζ`.
    pub fn zeta_pow(k: i64) -> Self {
        let (a, b) = match k.rem_euclid(6) {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            _ => (1, -1),
        };
        Cyclo6 {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cyclo6 { a: &self.a + &self.b, b: -self.b.clone() }
    }

    /// `N(a + bζ) = a² + ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Cyclo6 { a: c.a / &n, b: c.b / n })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo6 { a: &self.a * r, b: &self.b * r }
    }
}

impl Add for &Cyclo6 {
    type Output = Cyclo6;
    fn add(self, rhs: &Cyclo6) -> Cyclo6 {
        Cyclo6 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Cyclo6 {
    type Output = Cyclo6;
    fn sub(self, rhs: &Cyclo6) -> Cyclo6 {
        Cyclo6 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Cyclo6 {
    type Output = Cyclo6;
    fn mul(self, rhs: &Cyclo6) -> Cyclo6 {
        let bd = &self.b * &rhs.b;
        Cyclo6 {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl Neg for &Cyclo6 {
    type Output = Cyclo6;
    fn neg(self) -> Cyclo6 {
        Cyclo6 { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl fmt::Display for Cyclo6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})z", self.b),
            (false, false) => write!(f, "({} + ({})z)", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_close_up() {
        let z = Cyclo6::zeta_pow(1);
        let mut acc = Cyclo6::one();
        for k in 0..12 {
            assert_eq!(acc, Cyclo6::zeta_pow(k));
            acc = &acc * &z;
        }
        assert!(acc.is_one());
        // minimal polynomial ζ² − ζ + 1 = 0
        let lhs = &(&(&z * &z) - &z) + &Cyclo6::one();
        assert!(lhs.is_zero());
    }

    #[test]
    fn inverses() {
        for k in 0..6 {
            let x = &Cyclo6::zeta_pow(k) + &Cyclo6::from_int(2);
            assert!((&x * &x.inv().unwrap()).is_one());
            assert_eq!(Cyclo6::zeta_pow(k).inv().unwrap(), Cyclo6::zeta_pow(-k));
        }
        assert!(Cyclo6::zero().inv().is_none());
    }
}
