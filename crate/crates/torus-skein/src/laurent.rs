//! Exact arithmetic in Z[t, t^-1], the ring of integer Laurent polynomials
//! in the quantum parameter t.
//!
//! Every coefficient that appears anywhere in this crate lives here. The
//! representation is a sparse exponent-to-coefficient map with no zero
//! entries stored, so structural equality is ring equality and every
//! identity in the test suite can be checked exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An integer Laurent polynomial in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// exponent -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// The monomial `coeff * t^exp`.
    pub fn term(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The monomial `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::term(1, exp)
    }

    /// The constant polynomial `n`.
    pub fn constant(n: impl Into<BigInt>) -> Self {
        Self::term(n, 0)
    }

    /// `(-t^2 - t^-2)`, the value of a trivial loop.
    pub fn loop_value() -> Self {
        Self::term(-1, 2) + Self::term(-1, -2)
    }

    /// `-t^-3`, the factor picked up when a curve is given one twist of
    /// framing; it is the scalar in the relation (1,1) = -t^-3 (1,0) on
    /// the boundary of a solid torus.
    pub fn twist_coeff() -> Self {
        Self::term(-1, -3)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the polynomial is a unit of the ring: a single monomial
    /// with coefficient +1 or -1.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.magnitude().to_u32() == Some(1))
    }

    /// The coefficient of `t^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterator over `(exponent, coefficient)` pairs in increasing
    /// exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Exact division by a unit (a single term with coefficient +/-1).
    pub fn div_unit(&self, u: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if !u.is_unit() {
            return Err(Error::NotAUnit);
        }
        let (u_exp, u_coeff) = u.terms.iter().next().expect("unit has one term");
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            // u_coeff is +/-1, so multiplying by it is dividing by it.
            out.add_term(e - u_exp, &(c * u_coeff));
        }
        Ok(out)
    }

    /// Numerical evaluation at `t = z` in double precision.
    pub fn eval(&self, z: Complex64) -> Result<Complex64, Error> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroEvaluationPoint);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let e = i32::try_from(*e).expect("exponent fits in i32");
            let c = c.to_f64().expect("coefficient fits in f64");
            acc += c * z.powi(e);
        }
        Ok(acc)
    }
}

/// The quantum integer `[n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2})`,
/// expanded as `t^{2n-2} + t^{2n-6} + ... + t^{-2n+2}`; `[0] = 0`.
pub fn quantum_int(n: u64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let n = i64::try_from(n).expect("quantum integer index fits in i64");
    for j in 0..n {
        out.add_term(2 * n - 2 - 4 * j, &BigInt::from(1));
    }
    out
}

/// `delta_k = (-1)^k [k+1]`, the value of k parallel trivial loops
/// decorated by the k-th Jones-Wenzl idempotent.
pub fn delta(k: u64) -> LaurentPoly {
    let q = quantum_int(k + 1);
    if k.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form, highest exponent first: `t^4 + 2 + t^-4`,
    /// `-t^2 - t^-2`, `3 + 2t^-1`. This is exactly the coefficient
    /// syntax the CLI grammar accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag.to_u32() != Some(1) {
                    write!(f, "{mag}")?;
                }
                write!(f, "t")?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> LaurentPoly {
        LaurentPoly::t_pow(1)
    }

    #[test]
    fn difference_of_squares() {
        let a = &t() + &LaurentPoly::t_pow(-1);
        let b = &t() - &LaurentPoly::t_pow(-1);
        assert_eq!(&a * &b, &LaurentPoly::t_pow(2) - &LaurentPoly::t_pow(-2));
    }

    #[test]
    fn additive_identity() {
        let a = LaurentPoly::term(3, 5) + LaurentPoly::term(-2, -1);
        assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn loop_value_squared() {
        let d = LaurentPoly::loop_value();
        let expect = LaurentPoly::t_pow(4) + LaurentPoly::constant(2) + LaurentPoly::t_pow(-4);
        assert_eq!(&d * &d, expect);
    }

    #[test]
    fn div_unit_shifts_exponents() {
        let a = LaurentPoly::t_pow(3) + t();
        let q = a.div_unit(&t()).unwrap();
        assert_eq!(q, LaurentPoly::t_pow(2) + LaurentPoly::one());
    }

    #[test]
    fn div_unit_monomials() {
        let a = LaurentPoly::term(-1, -4);
        let u = LaurentPoly::term(-1, -3);
        assert_eq!(a.div_unit(&u).unwrap(), LaurentPoly::t_pow(-1));
    }

    #[test]
    fn div_by_non_unit_fails() {
        let a = &t() + &LaurentPoly::one();
        assert_eq!(a.div_unit(&a), Err(Error::NotAUnit));
        assert_eq!(t().div_unit(&LaurentPoly::term(2, 1)), Err(Error::NotAUnit));
    }

    #[test]
    fn eval_examples() {
        let a = LaurentPoly::t_pow(2) + LaurentPoly::t_pow(-2);
        let v = a.eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);

        // -t^2 - t^-2 vanishes at the primitive 8th root of unity.
        let z = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let v = LaurentPoly::loop_value().eval(z).unwrap();
        assert!(v.norm() < 1e-12);

        let v = t().eval(Complex64::new(-1.0, 0.0)).unwrap();
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-12);

        assert_eq!(t().eval(Complex64::new(0.0, 0.0)), Err(Error::ZeroEvaluationPoint));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(0), LaurentPoly::zero());
        assert_eq!(quantum_int(1), LaurentPoly::one());
        assert_eq!(quantum_int(2), LaurentPoly::t_pow(2) + LaurentPoly::t_pow(-2));
        assert_eq!(
            quantum_int(3),
            LaurentPoly::t_pow(4) + LaurentPoly::one() + LaurentPoly::t_pow(-4)
        );
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(0), LaurentPoly::one());
        assert_eq!(delta(1), LaurentPoly::loop_value());
        assert_eq!(delta(2), quantum_int(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(t().to_string(), "t");
        assert_eq!(LaurentPoly::t_pow(-1).to_string(), "t^-1");
        assert_eq!(LaurentPoly::term(2, 3).to_string(), "2t^3");
        assert_eq!(LaurentPoly::loop_value().to_string(), "-t^2 - t^-2");
        let a = LaurentPoly::constant(3) + LaurentPoly::term(2, -1);
        assert_eq!(a.to_string(), "3 + 2t^-1");
        let b = LaurentPoly::t_pow(4) + LaurentPoly::constant(2) + LaurentPoly::t_pow(-4);
        assert_eq!(b.to_string(), "t^4 + 2 + t^-4");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(|terms| {
            let mut out = LaurentPoly::zero();
            for (e, c) in terms {
                out = out + LaurentPoly::term(c, e);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
        }

        #[test]
        fn div_unit_round_trip(a in arb_poly(), exp in -5i64..=5, neg in proptest::bool::ANY) {
            let u = LaurentPoly::term(if neg { -1 } else { 1 }, exp);
            prop_assert_eq!((&a * &u).div_unit(&u).unwrap(), a);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_poly(), b in arb_poly(), angle in 0.0f64..std::f64::consts::TAU) {
            let z = Complex64::from_polar(1.0, angle);
            let lhs = (&a * &b).eval(z).unwrap();
            let rhs = a.eval(z).unwrap() * b.eval(z).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-9);
        }
    }
}
