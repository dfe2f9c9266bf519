//! Jones-Wenzl idempotents threaded along simple closed curves on the
//! torus.
//!
//! Threading the n-th idempotent along a primitive (p, q) curve produces
//! the Chebyshev-like "second kind" family: where the (p, q)-basis
//! curves themselves realize the first-kind polynomials (n parallel
//! copies collapse through T_n to the single class (np, nq)), the
//! idempotent expands as the staircase sum
//!
//! ```text
//! JW_n(p, q) = sum_{j=0}^{floor(n/2)} ((n-2j)p, (n-2j)q)_T
//! ```
//!
//! with the j = n/2 term (for even n) contributing the empty link with
//! coefficient 1, not the folded 2. Both families satisfy the same
//! three-term recurrence f_{n+1} = (p,q)_T * f_n - f_{n-1}; they differ
//! only in the seed at n = 0 (2 versus 1 copies of the empty link).

use num_integer::Integer;

use crate::error::Error;
use crate::laurent::{delta, LaurentPoly};
use crate::skein::{CurveClass, SkeinElement};

fn require_primitive(p: i64, q: i64) -> Result<(), Error> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotPrimitive { p, q });
    }
    Ok(())
}

/// The expansion of the n-th Jones-Wenzl idempotent threaded along the
/// primitive curve (p, q), as the staircase sum over ((n-2j)p, (n-2j)q).
pub fn expansion(n: u64, p: i64, q: i64) -> Result<SkeinElement, Error> {
    require_primitive(p, q)?;
    let n = i64::try_from(n).expect("threading index fits in i64");
    let mut out = SkeinElement::zero();
    let mut m = n;
    while m > 0 {
        out = &out + &SkeinElement::curve(m * p, m * q);
        m -= 2;
    }
    if m == 0 {
        out = &out + &SkeinElement::empty();
    }
    Ok(out)
}

/// The same family computed through the recurrence
/// f_{n+1} = (p,q)_T * f_n - f_{n-1}, seeded by the empty link and
/// (p, q)_T. Agrees with `expansion` term by term; kept as an
/// independent construction for cross-checking.
pub fn by_recurrence(n: u64, p: i64, q: i64) -> Result<SkeinElement, Error> {
    require_primitive(p, q)?;
    let x = SkeinElement::curve(p, q);
    let mut prev = SkeinElement::empty();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The trace functional on the torus algebra: a class (a, b) with
/// gcd(|a|, |b|) = k (k parallel copies of a primitive curve) is sent to
/// (-t^2)^k + (-t^-2)^k, and the empty link to 1. On the threaded
/// idempotent this evaluates to the quantum dimension
/// (-1)^n [n+1] (see `trace_of_idempotent`).
pub fn trace(e: &SkeinElement) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (class, coeff) in e.terms() {
        let value = match class {
            CurveClass::Empty => LaurentPoly::one(),
            CurveClass::Curve { p, q } => {
                let k = p.gcd(&q);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                LaurentPoly::term(sign, 2 * k) + LaurentPoly::term(sign, -2 * k)
            }
        };
        out = &out + &(&value * coeff);
    }
    out
}

/// The closed form (-1)^n [n+1] for the trace of the n-th threaded
/// idempotent.
pub fn trace_of_idempotent(n: u64) -> LaurentPoly {
    delta(n)
}

/// At t = e^{i pi / (2r)} the idempotents JW_n exist only for
/// n <= r - 2; beyond that the construction divides by a vanishing
/// quantum integer.
pub fn check_defined_at_root(n: u64, r: u64) -> Result<(), Error> {
    if r >= 2 && n <= r - 2 {
        Ok(())
    } else {
        Err(Error::IdempotentUndefined { n, r })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::chebyshev;

    #[test]
    fn small_expansions() {
        let e = expansion(0, 1, 0).unwrap();
        assert_eq!(e, SkeinElement::empty());

        let e = expansion(1, 1, 0).unwrap();
        assert_eq!(e, SkeinElement::curve(1, 0));

        let e = expansion(2, 1, 1).unwrap();
        assert_eq!(e, &SkeinElement::curve(2, 2) + &SkeinElement::empty());

        let e = expansion(3, 2, 1).unwrap();
        assert_eq!(e, &SkeinElement::curve(6, 3) + &SkeinElement::curve(2, 1));

        let e = expansion(4, 1, -1).unwrap();
        let expect = &(&SkeinElement::curve(4, -4) + &SkeinElement::curve(2, -2))
            + &SkeinElement::empty();
        assert_eq!(e, expect);
    }

    #[test]
    fn requires_primitive_class() {
        assert_eq!(expansion(2, 2, 4), Err(Error::NotPrimitive { p: 2, q: 4 }));
        assert_eq!(expansion(1, 0, 0), Err(Error::NotPrimitive { p: 0, q: 0 }));
        assert_eq!(by_recurrence(2, 3, 3), Err(Error::NotPrimitive { p: 3, q: 3 }));
    }

    #[test]
    fn recurrence_matches_expansion() {
        for &(p, q) in &[(1, 0), (0, 1), (1, 1), (2, 1), (3, 2)] {
            for n in 0..=12 {
                assert_eq!(
                    by_recurrence(n, p, q).unwrap(),
                    expansion(n, p, q).unwrap(),
                    "n = {n}, class = ({p}, {q})"
                );
            }
        }
    }

    #[test]
    fn multiplication_telescopes() {
        // (p,q)_T * JW_n = JW_{n+1} + JW_{n-1}
        for &(p, q) in &[(1, 0), (1, 1), (3, 2)] {
            let x = SkeinElement::curve(p, q);
            for n in 1..=10 {
                let lhs = &x * &expansion(n, p, q).unwrap();
                let rhs = &expansion(n + 1, p, q).unwrap() + &expansion(n - 1, p, q).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, class = ({p}, {q})");
            }
        }
    }

    #[test]
    fn consecutive_expansions_differ_by_one_class() {
        // JW_n - JW_{n-2} = (np, nq)_T
        for n in 2..=10i64 {
            let d = &expansion(n as u64, 1, 1).unwrap() - &expansion(n as u64 - 2, 1, 1).unwrap();
            assert_eq!(d, SkeinElement::curve(n, n));
        }
    }

    #[test]
    fn chebyshev_first_kind_collapses_to_one_class() {
        // evaluating T_n at the curve (p,q)_T yields the single class
        // (np, nq)_T: the contrast between the two families is exactly
        // the seed, T_0 = 2 * empty versus JW_0 = 1 * empty
        for &(p, q) in &[(1, 0), (2, 1)] {
            let x = SkeinElement::curve(p, q);
            for n in 0..=10usize {
                let poly = chebyshev(n);
                let mut acc = SkeinElement::zero();
                let mut xpow = SkeinElement::empty(); // x^0 = unit
                for i in 0..=poly.degree().expect("T_n is nonzero") {
                    let c = LaurentPoly::term(poly.coeff(i), 0);
                    acc = &acc + &xpow.scale(&c);
                    xpow = &xpow * &x;
                }
                let expect = if n == 0 {
                    SkeinElement::empty_with_coeff(LaurentPoly::constant(2))
                } else {
                    SkeinElement::curve(n as i64 * p, n as i64 * q)
                };
                assert_eq!(acc, expect, "n = {n}, class = ({p}, {q})");
            }
        }
    }

    #[test]
    fn trace_matches_quantum_dimension() {
        for &(p, q) in &[(1, 0), (0, 1), (1, 1), (2, 1), (3, 2)] {
            for n in 0..=12 {
                let got = trace(&expansion(n, p, q).unwrap());
                assert_eq!(got, trace_of_idempotent(n), "n = {n}, class = ({p}, {q})");
            }
        }
    }

    #[test]
    fn trace_small_values() {
        assert_eq!(trace_of_idempotent(0), LaurentPoly::one());
        assert_eq!(trace_of_idempotent(1), LaurentPoly::loop_value());
        assert_eq!(
            trace_of_idempotent(2),
            LaurentPoly::t_pow(4) + LaurentPoly::one() + LaurentPoly::t_pow(-4)
        );
    }

    #[test]
    fn root_of_unity_guard() {
        assert!(check_defined_at_root(0, 2).is_ok());
        assert!(check_defined_at_root(2, 4).is_ok());
        assert_eq!(
            check_defined_at_root(3, 4),
            Err(Error::IdempotentUndefined { n: 3, r: 4 })
        );
        assert_eq!(
            check_defined_at_root(0, 1),
            Err(Error::IdempotentUndefined { n: 0, r: 1 })
        );
    }
}
