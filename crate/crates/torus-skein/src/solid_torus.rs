//! The skein module of the solid torus, presented as a quotient of the
//! torus algebra.
//!
//! The module is the polynomial ring C[alpha] on the core curve alpha.
//! The quotient map pi sends the torus basis class (p,q)_T to the
//! degree-|p| polynomial x_{p,q}, defined by x_{p,q} = t^{-pq} y_{p,q}
//! where
//!
//! ```text
//! y_{0,q} = (-t^2)^q + (-t^-2)^q,
//! y_{1,q} = (-t^-2)^q * alpha,
//! y_{p,q} = alpha * y_{p-1,q} - y_{p-2,q},
//! ```
//!
//! and x_{p,q} = x_{-p,-q} for p < 0. The seed for y_{1,q} is the one
//! forced by the twist relation (1,1)_T -> -t^-3 * alpha: each meridian
//! twist multiplies the core curve by -t^-3 after the t^{-pq} framing
//! correction, i.e. x_{1,q} = (-t^-3)^q * alpha. With this seed pi is a
//! module map, and its kernel is the ideal generated by
//! (0,1)_T + (t^2 + t^-2) and (1,1)_T + t^-3 (1,0)_T.
//!
//! The left action of the torus algebra is pi(A * lift(u)) where lift
//! sends alpha^n to the n-parallel-copy class of the (1,0) curve. In
//! particular the corrected action identity
//! (p,q)_T . alpha_n = t^{-nq} x_{p+n,q} + t^{nq} x_{p-n,q} holds, with
//! alpha_n = T_n(alpha).

use std::ops::{Add, Mul, Neg, Sub};

use crate::chebyshev;
use crate::laurent::LaurentPoly;
use crate::skein::{CurveClass, SkeinElement};

/// A polynomial in the core curve alpha with Laurent polynomial
/// coefficients; dense, index = degree, no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolidTorusElement {
    coeffs: Vec<LaurentPoly>,
}

impl SolidTorusElement {
    pub fn zero() -> Self {
        SolidTorusElement { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        SolidTorusElement { coeffs: vec![c] }.trimmed()
    }

    /// The core curve alpha.
    pub fn alpha() -> Self {
        Self::alpha_pow(1)
    }

    /// The monomial alpha^n.
    pub fn alpha_pow(n: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        coeffs[n] = LaurentPoly::one();
        SolidTorusElement { coeffs }
    }

    /// alpha_n = T_n(alpha), the n-th normalized Chebyshev polynomial of
    /// the core curve.
    pub fn alpha_chebyshev(n: usize) -> Self {
        let coeffs = chebyshev::chebyshev(n)
            .coeffs()
            .iter()
            .map(|c| LaurentPoly::term(c.clone(), 0))
            .collect();
        SolidTorusElement { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        SolidTorusElement { coeffs }.trimmed()
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

    /// Degree in alpha, or None for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&LaurentPoly> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        SolidTorusElement { coeffs: self.coeffs.iter().map(|k| k * c).collect() }.trimmed()
    }
}

impl Add for &SolidTorusElement {
    type Output = SolidTorusElement;
    fn add(self, rhs: &SolidTorusElement) -> SolidTorusElement {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        SolidTorusElement { coeffs }.trimmed()
    }
}

impl Sub for &SolidTorusElement {
    type Output = SolidTorusElement;
    fn sub(self, rhs: &SolidTorusElement) -> SolidTorusElement {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        SolidTorusElement { coeffs }.trimmed()
    }
}

impl Neg for &SolidTorusElement {
    type Output = SolidTorusElement;
    fn neg(self) -> SolidTorusElement {
        SolidTorusElement { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &SolidTorusElement {
    type Output = SolidTorusElement;
    fn mul(self, rhs: &SolidTorusElement) -> SolidTorusElement {
        if self.is_zero() || rhs.is_zero() {
            return SolidTorusElement::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        SolidTorusElement { coeffs }.trimmed()
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SolidTorusElement {
            type Output = SolidTorusElement;
            fn $method(self, rhs: SolidTorusElement) -> SolidTorusElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SolidTorusElement> for SolidTorusElement {
            type Output = SolidTorusElement;
            fn $method(self, rhs: &SolidTorusElement) -> SolidTorusElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<SolidTorusElement> for &SolidTorusElement {
            type Output = SolidTorusElement;
            fn $method(self, rhs: SolidTorusElement) -> SolidTorusElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// `(-t^2)^q + (-t^-2)^q` as a Laurent polynomial (q may be negative).
fn y_zero(q: i64) -> LaurentPoly {
    let sign = if q.rem_euclid(2) == 0 { 1 } else { -1 };
    LaurentPoly::term(sign, 2 * q) + LaurentPoly::term(sign, -2 * q)
}

/// The polynomial x_{p,q}, of degree |p| in alpha with unit leading
/// coefficient (-1)^q t^{-pq-2q} for p >= 1.
pub fn x_curve(p: i64, q: i64) -> SolidTorusElement {
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    if p == 0 {
        return SolidTorusElement::constant(y_zero(q));
    }
    let sign = if q.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut prev = SolidTorusElement::constant(y_zero(q));
    // y_{1,q} = (-t^-2)^q * alpha
    let mut cur = SolidTorusElement::alpha().scale(&LaurentPoly::term(sign, -2 * q));
    for _ in 1..p {
        let next = &(&SolidTorusElement::alpha() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur.scale(&LaurentPoly::t_pow(-p * q))
}

/// The quotient map pi: (p,q)_T -> x_{p,q}, Empty -> 1, extended
/// linearly.
pub fn project(a: &SkeinElement) -> SolidTorusElement {
    let mut out = SolidTorusElement::zero();
    for (class, coeff) in a.terms() {
        let image = match class {
            CurveClass::Empty => SolidTorusElement::one(),
            CurveClass::Curve { p, q } => x_curve(p, q),
        };
        out = &out + &image.scale(coeff);
    }
    out
}

/// A preimage of u under pi: alpha^n lifts to the n-parallel-copy class
/// of the (1,0) curve.
pub fn lift(u: &SolidTorusElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (n, c) in u.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let lifted = if n == 0 {
            SkeinElement::empty()
        } else {
            SkeinElement::parallel_copies(n as u64, 1, 0).expect("(1,0) is primitive")
        };
        out = &out + &lifted.scale(c);
    }
    out
}

/// The left action of the torus algebra on the solid torus:
/// A . u = pi(A * lift(u)).
pub fn act(a: &SkeinElement, u: &SolidTorusElement) -> SolidTorusElement {
    project(&(a * &lift(u)))
}

/// Membership in the kernel ideal of pi, which is generated by
/// (0,1)_T + (t^2 + t^-2) and (1,1)_T + t^-3 (1,0)_T.
pub fn in_kernel_ideal(a: &SkeinElement) -> bool {
    project(a).is_zero()
}
