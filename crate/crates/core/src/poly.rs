//! Exact multivariate polynomials in the fixed ambient variables X, Y, T
//! with arbitrary-precision integer coefficients.
//!
//! Terms are kept in a map ordered by graded lexicographic exponent order
//! (total degree first, then X > Y > T), with no zero coefficients, so
//! every polynomial has one canonical representation and Display output
//! is stable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::eisenstein::EisensteinInt;

/// One of the three ambient variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    T,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::T => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
            Var::T => "T",
        }
    }
}

/// Exponent triple (X, Y, T) ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exp(pub [u32; 3]);

impl Exp {
    fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in Z[X, Y, T].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> MultiPoly {
        MultiPoly::monomial(0, 0, 0, c)
    }

    pub fn constant_i64(c: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(c))
    }

    /// The term `c * X^ex * Y^ey * T^et`.
    pub fn monomial(ex: u32, ey: u32, et: u32, c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp([ex, ey, et]), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> MultiPoly {
        let mut e = [0u32; 3];
        e[v.index()] = 1;
        MultiPoly::monomial(e[0], e[1], e[2], BigInt::one())
    }

    pub fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    pub fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }

    pub fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    /// The coefficient of `X^ex * Y^ey * T^et` (zero when absent).
    pub fn coeff(&self, ex: u32, ey: u32, et: u32) -> BigInt {
        self.terms
            .get(&Exp([ex, ey, et]))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn insert(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|e| e.0[v.index()])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Exp::total).max().unwrap_or(0)
    }

    /// When every term has the same combined X,Y degree, returns it.
    pub fn homogeneous_xy_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.0[0] + e.0[1]);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Swaps the roles of X and Y (used for Tutte duality checks).
    pub fn swap_xy(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp([e.0[1], e.0[0], e.0[2]]), c.clone()))
                .collect(),
        }
    }

    /// Substitutes an integer for one variable, leaving the others.
    pub fn eval_var(&self, v: Var, value: &BigInt) -> MultiPoly {
        let vi = v.index();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = e.0;
            let exp = e2[vi];
            e2[vi] = 0;
            out.insert(Exp(e2), c * value.pow(exp));
        }
        out
    }

    /// Full evaluation at integer points.
    pub fn eval_int(&self, x: &BigInt, y: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            acc += c * x.pow(e.0[0]) * y.pow(e.0[1]) * t.pow(e.0[2]);
        }
        acc
    }

    /// Full evaluation at Eisenstein-integer points.
    pub fn eval_eisenstein(
        &self,
        x: &EisensteinInt,
        y: &EisensteinInt,
        t: &EisensteinInt,
    ) -> EisensteinInt {
        let mut acc = EisensteinInt::zero();
        for (e, c) in &self.terms {
            let term = x
                .pow(e.0[0])
                .mul(&y.pow(e.0[1]))
                .mul(&t.pow(e.0[2]))
                .scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact division by `v - 1`; `None` when the remainder is nonzero
    /// (equivalently, when substituting v = 1 does not annihilate self).
    pub fn div_by_var_minus_one(&self, v: Var) -> Option<MultiPoly> {
        let vi = v.index();
        // synthetic division viewing self in Z[others][v]:
        // quotient coefficient of v^i collects all a_j with j > i
        let mut quotient = MultiPoly::zero();
        let mut remainder = MultiPoly::zero();
        for (e, c) in &self.terms {
            let d = e.0[vi];
            let mut base = e.0;
            for i in 0..d {
                base[vi] = i;
                quotient.insert(Exp(base), c.clone());
            }
            let mut r = e.0;
            r[vi] = 0;
            remainder.insert(Exp(r), c.clone());
        }
        remainder.is_zero().then_some(quotient)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = Exp([
                    e1.0[0] + e2.0[0],
                    e1.0[1] + e2.0[1],
                    e1.0[2] + e2.0[2],
                ]);
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending graded-lex, leading term first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || e.total() == 0 {
                pieces.push(mag.to_string());
            }
            for (vi, var) in [Var::X, Var::Y, Var::T].iter().enumerate() {
                match e.0[vi] {
                    0 => {}
                    1 => pieces.push(var.name().to_string()),
                    p => pieces.push(format!("{}^{}", var.name(), p)),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xp(e: u32) -> MultiPoly {
        MultiPoly::x().pow(e)
    }

    #[test]
    fn display_matches_canonical_form() {
        // (X^2 + Y^2)^3 written out
        let p = (&(&xp(2) + &MultiPoly::y().pow(2))).pow(3);
        assert_eq!(p.to_string(), "X^6 + 3*X^4*Y^2 + 3*X^2*Y^4 + Y^6");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::constant_i64(-7).to_string(), "-7");
        let q = &(&MultiPoly::t() - &MultiPoly::one()) * &MultiPoly::y();
        assert_eq!(q.to_string(), "Y*T - Y");
    }

    #[test]
    fn graded_lex_order() {
        // total degree dominates; X beats Y beats T on ties
        let a = Exp([2, 0, 0]);
        let b = Exp([1, 1, 0]);
        let c = Exp([1, 0, 1]);
        let d = Exp([0, 0, 3]);
        assert!(d > a);
        assert!(a > b);
        assert!(b > c);
    }

    #[test]
    fn arithmetic_basics() {
        let x = MultiPoly::x();
        let y = MultiPoly::y();
        let sum = &x + &y;
        let diff = &x - &y;
        let prod = &sum * &diff;
        let expect = &xp(2) - &MultiPoly::y().pow(2);
        assert_eq!(prod, expect);
        assert!((&sum - &sum).is_zero());
        assert_eq!(sum.pow(0), MultiPoly::one());
    }

    #[test]
    fn eval_and_substitute() {
        // W = X^2 + (T-1) Y^2
        let w = &xp(2) + &(&(&MultiPoly::t() - &MultiPoly::one()) * &MultiPoly::y().pow(2));
        assert_eq!(
            w.eval_int(&BigInt::from(1), &BigInt::from(-1), &BigInt::from(4)),
            BigInt::from(4)
        );
        let at_t2 = w.eval_var(Var::T, &BigInt::from(2));
        assert_eq!(at_t2, &xp(2) + &MultiPoly::y().pow(2));
        assert_eq!(w.degree_in(Var::T), 1);
        assert_eq!(w.homogeneous_xy_degree(), Some(2));
        assert_eq!(w.eval_var(Var::T, &BigInt::from(1)), xp(2));
    }

    #[test]
    fn division_by_t_minus_one() {
        // (T-1)^2 * (X + 3) divides twice and leaves X + 3
        let tm1 = &MultiPoly::t() - &MultiPoly::one();
        let base = &MultiPoly::x() + &MultiPoly::constant_i64(3);
        let p = &tm1.pow(2) * &base;
        let q1 = p.div_by_var_minus_one(Var::T).unwrap();
        let q2 = q1.div_by_var_minus_one(Var::T).unwrap();
        assert_eq!(q2, base);
        // X + 3 does not vanish at T = 1, so a third division fails
        assert!(q2.div_by_var_minus_one(Var::T).is_none());
    }

    #[test]
    fn swap_xy_involution() {
        let p = &(&xp(3) * &MultiPoly::y()) + &MultiPoly::t();
        assert_eq!(p.swap_xy().swap_xy(), p);
        assert_eq!(
            p.swap_xy(),
            &(&MultiPoly::y().pow(3) * &MultiPoly::x()) + &MultiPoly::t()
        );
    }

    /// Small random polynomials: up to 4 terms, exponents below 4.
    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            ((0u32..4, 0u32..4, 0u32..4), -20i64..20),
            0..4,
        )
        .prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for ((ex, ey, et), c) in terms {
                p = &p + &MultiPoly::monomial(ex, ey, et, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, MultiPoly::zero());
            prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly()) {
            let tm1 = &MultiPoly::t() - &MultiPoly::one();
            let p = &a * &tm1;
            prop_assert_eq!(p.div_by_var_minus_one(Var::T), Some(a));
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(),
                                     x in -5i64..5, y in -5i64..5, t in -5i64..5) {
            let (x, y, t) = (BigInt::from(x), BigInt::from(y), BigInt::from(t));
            let lhs = (&a * &b).eval_int(&x, &y, &t);
            let rhs = a.eval_int(&x, &y, &t) * b.eval_int(&x, &y, &t);
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a + &b).eval_int(&x, &y, &t);
            let rhs = a.eval_int(&x, &y, &t) + b.eval_int(&x, &y, &t);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
