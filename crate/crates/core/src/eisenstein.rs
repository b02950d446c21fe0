//! Exact arithmetic in the ring Z[j] of Eisenstein integers, where j is a
//! primitive cube root of unity satisfying j^2 + j + 1 = 0.
//!
//! Complex evaluations at third roots of unity stay in this ring, so the
//! ternary hull identity |W(1,j)| = sqrt(3)^(k+h) can be checked exactly
//! through the integer norm N(a + bj) = a^2 - ab + b^2 = |a + bj|^2.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An Eisenstein integer a + b*j.
#[derive(Clone, PartialEq, Eq)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: BigInt, b: BigInt) -> EisensteinInt {
        EisensteinInt { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn zero() -> EisensteinInt {
        EisensteinInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> EisensteinInt {
        EisensteinInt::new(BigInt::one(), BigInt::zero())
    }

    /// The root j itself.
    pub fn j() -> EisensteinInt {
        EisensteinInt::from_i64(0, 1)
    }

    /// j^2 = -1 - j, the other primitive cube root.
    pub fn j_squared() -> EisensteinInt {
        EisensteinInt::from_i64(-1, -1)
    }

    pub fn from_int(a: BigInt) -> EisensteinInt {
        EisensteinInt::new(a, BigInt::zero())
    }

    /// The rational-integer part and the j part.
    pub fn parts(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> EisensteinInt {
        EisensteinInt::new(-&self.a, -&self.b)
    }

    /// Product, reduced by j^2 = -1 - j.
    pub fn mul(&self, rhs: &EisensteinInt) -> EisensteinInt {
        let a = &self.a * &rhs.a - &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a - &self.b * &rhs.b;
        EisensteinInt::new(a, b)
    }

    pub fn scale(&self, c: &BigInt) -> EisensteinInt {
        EisensteinInt::new(&self.a * c, &self.b * c)
    }

    pub fn pow(&self, e: u32) -> EisensteinInt {
        let mut acc = EisensteinInt::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The field norm N(a + bj) = a^2 - ab + b^2, which equals the squared
    /// complex modulus and is always nonnegative.
    pub fn norm(&self) -> BigInt {
        let n = &self.a * &self.a - &self.a * &self.b + &self.b * &self.b;
        debug_assert!(!n.is_negative());
        n
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*j", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*j", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*j", self.a, self.b)
        }
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
