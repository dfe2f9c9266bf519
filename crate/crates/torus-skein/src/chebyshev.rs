//! The normalized Chebyshev family T_n with T_0 = 2, T_1 = x and
//! T_{n+1} = x*T_n - T_{n-1}, together with the exact basis change
//! between the monomial basis {x^n} and {T_n}.
//!
//! This normalization (twice the classical first-kind polynomials after
//! x = 2cos(theta) rescaling) is the one under which a (p,q) torus curve
//! raised to the n-th "power" decomposes into parallel-copy classes, so
//! it is used exclusively throughout the crate.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// A univariate polynomial over Z, dense representation, index = degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(n: impl Into<BigInt>) -> Self {
        IntPoly { coeffs: vec![n.into()] }.trimmed()
    }

    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::from(1)] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly { coeffs }.trimmed()
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly { coeffs }.trimmed()
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.trimmed()
    }
}

/// T_n in the monomial basis, computed by the defining recurrence.
pub fn chebyshev(n: usize) -> IntPoly {
    let mut prev = IntPoly::constant(2);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPoly::x();
    let x = IntPoly::x();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The inverse basis change: coefficients c_k with x^n = sum c_k T_k,
/// where the k = 0 entry counts multiples of T_0 = 2.
///
/// Expanding x = 2cos(theta) binomially gives c_{n-2j} = C(n, j) for
/// n - 2j > 0 and, for even n, a constant C(n, n/2) = C(n, n/2)/2 * T_0.
/// For n >= 1 the central binomial coefficient C(2m, m) is even, so the
/// halving is exact; this is asserted at runtime. n = 0 is excluded:
/// x^0 = 1 is the half-multiple T_0/2 and has no integral expansion
/// (callers treat the empty power as the unit of their own algebra).
pub fn power_in_chebyshev(n: usize) -> BTreeMap<usize, BigInt> {
    assert!(n >= 1, "x^0 has no integral expansion in the T basis");
    let mut out = BTreeMap::new();
    let mut binom = BigInt::from(1); // C(n, j), starting at j = 0
    for j in 0..=n / 2 {
        let k = n - 2 * j;
        if k > 0 {
            out.insert(k, binom.clone());
        } else {
            let (half, rem) = num_integer::div_rem(binom.clone(), BigInt::from(2));
            assert!(rem.is_zero(), "central binomial coefficient must be even");
            out.insert(0, half);
        }
        // advance C(n, j) -> C(n, j+1)
        binom = binom * BigInt::from((n - j) as u64) / BigInt::from((j + 1) as u64);
    }
    out
}

/// Evaluate T_n at x = 2cos(theta) in double precision.
///
/// Uses the three-term recurrence directly at the evaluation point rather
/// than expanding into monomials first: Horner evaluation of the monomial
/// form loses all significant digits near n = 40 because the coefficients
/// grow exponentially while the value stays in [-2, 2].
pub fn eval_at_two_cos(n: usize, theta: f64) -> f64 {
    let x = 2.0 * theta.cos();
    let mut prev = 2.0;
    if n == 0 {
        return prev;
    }
    let mut cur = x;
    for _ in 1..n {
        let next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
