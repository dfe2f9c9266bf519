//! The Kauffman bracket skein algebra of the thickened torus.
//!
//! The basis consists of the empty skein together with the classes
//! (p,q)_T: the gcd(p,q)-th normalized Chebyshev polynomial applied to
//! the primitive curve in direction (p,q)/gcd(p,q). Indices are
//! unoriented, so (p,q) and (-p,-q) name the same class; the stored
//! normal form has p > 0, or p = 0 and q > 0. The degenerate index
//! (0,0) means T_0 = 2 * Empty and is folded away on construction.
//!
//! Multiplication is the product-to-sum formula
//!
//! ```text
//! (p,q)_T * (r,s)_T = t^D (p+r, q+s)_T + t^-D (p-r, q-s)_T,  D = ps - qr,
//! ```
//!
//! and the map (p,q)_T -> e_{p,q} + e_{-p,-q} embeds the algebra
//! isomorphically onto the symmetric part of the noncommutative torus.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::chebyshev;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::nc_torus::{det, NcElement};

/// A basis class: the empty skein (the unit) or a normalized curve index.
///
/// The derived order puts `Empty` first and sorts curves by (p, q); maps
/// keyed by `CurveClass` therefore iterate deterministically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurveClass {
    Empty,
    Curve { p: i64, q: i64 },
}

/// Normal form of a raw index: `None` means the index was (0,0).
fn normalized_index(p: i64, q: i64) -> Option<(i64, i64)> {
    if p == 0 && q == 0 {
        None
    } else if p < 0 || (p == 0 && q < 0) {
        Some((-p, -q))
    } else {
        Some((p, q))
    }
}

/// An element of the skein algebra: a finite linear combination of basis
/// classes with Laurent polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<CurveClass, LaurentPoly>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        SkeinElement { terms: BTreeMap::new() }
    }

    /// The empty skein, the unit of the algebra.
    pub fn empty() -> Self {
        Self::empty_with_coeff(LaurentPoly::one())
    }

    pub fn empty_with_coeff(coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_class(CurveClass::Empty, &coeff);
        out
    }

    /// The basis class of the raw index (p, q) with unit coefficient.
    pub fn curve(p: i64, q: i64) -> Self {
        Self::curve_with_coeff(p, q, LaurentPoly::one())
    }

    /// `coeff * (p,q)_T` in normal form: (p,q) and (-p,-q) produce the
    /// same element, and (0,0) folds to `2 * coeff * Empty`.
    pub fn curve_with_coeff(p: i64, q: i64, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        match normalized_index(p, q) {
            None => out.add_class(CurveClass::Empty, &(&coeff * &LaurentPoly::constant(2))),
            Some((p, q)) => out.add_class(CurveClass::Curve { p, q }, &coeff),
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of a basis class (zero if absent). The raw index
    /// is normalized first, so `coeff_of(-1, 2)` reads the (1,-2) term;
    /// asking for (0,0) reads the Empty term.
    pub fn coeff_of(&self, p: i64, q: i64) -> LaurentPoly {
        let class = match normalized_index(p, q) {
            None => CurveClass::Empty,
            Some((p, q)) => CurveClass::Curve { p, q },
        };
        self.terms.get(&class).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn empty_coeff(&self) -> LaurentPoly {
        self.terms.get(&CurveClass::Empty).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Iterator over `(class, coefficient)` pairs, `Empty` first, curves
    /// in increasing (p, q) order.
    pub fn terms(&self) -> impl Iterator<Item = (CurveClass, &LaurentPoly)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_class(&mut self, class: CurveClass, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(class).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&class);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (class, coeff) in &self.terms {
            out.add_class(*class, &(coeff * c));
        }
        out
    }

    /// The embedding into the noncommutative torus:
    /// (p,q)_T -> e_{p,q} + e_{-p,-q} and Empty -> e_{0,0}. The image is
    /// always symmetric.
    pub fn embed(&self) -> NcElement {
        let mut out = NcElement::zero();
        for (class, coeff) in &self.terms {
            match class {
                CurveClass::Empty => out.add_term(0, 0, coeff),
                CurveClass::Curve { p, q } => {
                    out.add_term(*p, *q, coeff);
                    out.add_term(-p, -q, coeff);
                }
            }
        }
        out
    }

    /// The inverse of `embed` on the symmetric subalgebra.
    pub fn from_symmetric(n: &NcElement) -> Result<Self, Error> {
        if !n.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = Self::zero();
        for ((p, q), coeff) in n.terms() {
            if p == 0 && q == 0 {
                out.add_class(CurveClass::Empty, coeff);
            } else if normalized_index(p, q) == Some((p, q)) {
                // the mirrored key (-p,-q) carries the same coefficient
                // and is skipped
                out.add_class(CurveClass::Curve { p, q }, coeff);
            }
        }
        Ok(out)
    }

    /// `d` parallel copies of the primitive (p, q) curve, expanded in the
    /// basis: the d-th monomial power of the curve equals
    /// sum_k c_k (kp, kq)_T where x^d = sum_k c_k T_k.
    pub fn parallel_copies(d: u64, p: i64, q: i64) -> Result<Self, Error> {
        if num_integer::gcd(p, q) != 1 {
            return Err(Error::NotPrimitive { p, q });
        }
        if d == 0 {
            // the empty multicurve is the unit; its T-expansion is the
            // half-multiple T_0/2, which folds to exactly one empty link
            return Ok(Self::empty());
        }
        let d = usize::try_from(d).expect("copy count fits in usize");
        let mut out = Self::zero();
        for (k, c) in chebyshev::power_in_chebyshev(d) {
            let k = k as i64;
            out = out + Self::curve_with_coeff(k * p, k * q, LaurentPoly::term(c, 0));
        }
        Ok(out)
    }
}

impl Add for &SkeinElement {
    type Output = SkeinElement;
    fn add(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        for (class, coeff) in &rhs.terms {
            out.add_class(*class, coeff);
        }
        out
    }
}

impl Sub for &SkeinElement {
    type Output = SkeinElement;
    fn sub(self, rhs: &SkeinElement) -> SkeinElement {
        self + &-rhs
    }
}

impl Neg for &SkeinElement {
    type Output = SkeinElement;
    fn neg(self) -> SkeinElement {
        SkeinElement { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &SkeinElement {
    type Output = SkeinElement;
    fn mul(self, rhs: &SkeinElement) -> SkeinElement {
        let mut out = SkeinElement::zero();
        for (c1, k1) in &self.terms {
            for (c2, k2) in &rhs.terms {
                let coeff = k1 * k2;
                match (c1, c2) {
                    (CurveClass::Empty, other) | (other, CurveClass::Empty) => {
                        out.add_class(*other, &coeff);
                    }
                    (CurveClass::Curve { p, q }, CurveClass::Curve { p: r, q: s }) => {
                        let d = det(*p, *q, *r, *s);
                        out = &out
                            + &SkeinElement::curve_with_coeff(
                                p + r,
                                q + s,
                                &coeff * &LaurentPoly::t_pow(d),
                            );
                        out = &out
                            + &SkeinElement::curve_with_coeff(
                                p - r,
                                q - s,
                                &coeff * &LaurentPoly::t_pow(-d),
                            );
                    }
                }
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SkeinElement {
            type Output = SkeinElement;
            fn $method(self, rhs: SkeinElement) -> SkeinElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SkeinElement> for SkeinElement {
            type Output = SkeinElement;
            fn $method(self, rhs: &SkeinElement) -> SkeinElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<SkeinElement> for &SkeinElement {
            type Output = SkeinElement;
            fn $method(self, rhs: SkeinElement) -> SkeinElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// The geometric intersection number of two elements: the maximum of
/// |ps - qr| over pairs of curve classes from the two terms. Because the
/// stored indices already include the parallel-copy multiplicities
/// (class (mp', mq') for m copies of a primitive (p', q')), |ps - qr|
/// equals the multiplicity-scaled primitive intersection count. Empty
/// terms contribute 0.
pub fn intersection_number(a: &SkeinElement, b: &SkeinElement) -> u64 {
    let mut best: u64 = 0;
    for (c1, _) in a.terms() {
        for (c2, _) in b.terms() {
            if let (CurveClass::Curve { p, q }, CurveClass::Curve { p: r, q: s }) = (c1, c2) {
                best = best.max(det(p, q, r, s).unsigned_abs());
            }
        }
    }
    best
}

/// The classical evaluation of an element at t = 1 as a function on the
/// torus: each curve class (p,q)_T becomes 2cos(2pi(px + qy)) and the
/// empty skein becomes the constant 1, with coefficients evaluated at
/// t = 1. At t = 1 the algebra is commutative and this map is an algebra
/// morphism, which the test suite uses as a numerical oracle.
pub fn classical_eval(a: &SkeinElement, x: f64, y: f64) -> f64 {
    use num_complex::Complex64;
    use std::f64::consts::TAU;
    let one = Complex64::new(1.0, 0.0);
    let mut acc = 0.0;
    for (class, coeff) in a.terms() {
        let c = coeff.eval(one).expect("t = 1 is a valid point").re;
        match class {
            CurveClass::Empty => acc += c,
            CurveClass::Curve { p, q } => {
                acc += c * 2.0 * (TAU * ((p as f64) * x + (q as f64) * y)).cos();
            }
        }
    }
    acc
}

/// Convenience constructor used across the test suites: the element
/// `coeff * (p,q)_T` from plain integers.
pub fn curve_term(p: i64, q: i64, coeff: impl Into<BigInt>, exp: i64) -> SkeinElement {
    SkeinElement::curve_with_coeff(p, q, LaurentPoly::term(coeff, exp))
}
