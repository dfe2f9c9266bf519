//! The Laurent-polynomial algebra of the noncommutative torus.
//!
//! Basis vectors e_{p,q} indexed by integer winding pairs multiply by
//! e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}. The index-negation
//! involution Theta(e_{p,q}) = e_{-p,-q} singles out the symmetric
//! subalgebra, which is the isomorphic image of the torus skein algebra;
//! that makes this module the independent multiplication oracle against
//! which the skein product is tested.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::laurent::LaurentPoly;

/// A finite linear combination of basis vectors e_{p,q} with Laurent
/// polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcElement {
    /// (p, q) -> nonzero coefficient
    terms: BTreeMap<(i64, i64), LaurentPoly>,
}

impl NcElement {
    pub fn zero() -> Self {
        NcElement { terms: BTreeMap::new() }
    }

    /// The unit e_{0,0}.
    pub fn one() -> Self {
        Self::basis(0, 0)
    }

    /// The basis vector e_{p,q}.
    pub fn basis(p: i64, q: i64) -> Self {
        Self::basis_with_coeff(p, q, LaurentPoly::one())
    }

    pub fn basis_with_coeff(p: i64, q: i64, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of e_{p,q} (zero if absent).
    pub fn coeff(&self, p: i64, q: i64) -> LaurentPoly {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Iterator over `((p, q), coefficient)` in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &LaurentPoly)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub(crate) fn add_term(&mut self, p: i64, q: i64, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((p, q), coeff) in &self.terms {
            out.add_term(*p, *q, &(coeff * c));
        }
        out
    }

    /// The involution Theta: e_{p,q} -> e_{-p,-q}, extended linearly.
    pub fn theta(&self) -> Self {
        let mut out = Self::zero();
        for ((p, q), coeff) in &self.terms {
            out.add_term(-p, -q, coeff);
        }
        out
    }

    /// True iff the element lies in the Theta-invariant (symmetric)
    /// subalgebra.
    pub fn is_symmetric(&self) -> bool {
        self.theta() == *self
    }
}

impl Add for &NcElement {
    type Output = NcElement;
    fn add(self, rhs: &NcElement) -> NcElement {
        let mut out = self.clone();
        for ((p, q), coeff) in &rhs.terms {
            out.add_term(*p, *q, coeff);
        }
        out
    }
}

impl Sub for &NcElement {
    type Output = NcElement;
    fn sub(self, rhs: &NcElement) -> NcElement {
        self + &-rhs
    }
}

impl Neg for &NcElement {
    type Output = NcElement;
    fn neg(self) -> NcElement {
        NcElement { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &NcElement {
    type Output = NcElement;
    fn mul(self, rhs: &NcElement) -> NcElement {
        let mut out = NcElement::zero();
        for ((p, q), c1) in &self.terms {
            for ((r, s), c2) in &rhs.terms {
                let d = det(*p, *q, *r, *s);
                let coeff = &(c1 * c2) * &LaurentPoly::t_pow(d);
                out.add_term(p + r, q + s, &coeff);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NcElement {
            type Output = NcElement;
            fn $method(self, rhs: NcElement) -> NcElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&NcElement> for NcElement {
            type Output = NcElement;
            fn $method(self, rhs: &NcElement) -> NcElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<NcElement> for &NcElement {
            type Output = NcElement;
            fn $method(self, rhs: NcElement) -> NcElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// ps - qr, the determinant of the index pair, computed without overflow.
pub(crate) fn det(p: i64, q: i64, r: i64, s: i64) -> i64 {
    let d = i128::from(p) * i128::from(s) - i128::from(q) * i128::from(r);
    i64::try_from(d).expect("index determinant fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_products() {
        let lm = &NcElement::basis(1, 0) * &NcElement::basis(0, 1);
        assert_eq!(lm, NcElement::basis_with_coeff(1, 1, LaurentPoly::t_pow(1)));

        let ml = &NcElement::basis(0, 1) * &NcElement::basis(1, 0);
        assert_eq!(ml, NcElement::basis_with_coeff(1, 1, LaurentPoly::t_pow(-1)));
    }

    #[test]
    fn symmetric_square() {
        let a = &NcElement::basis(1, 0) + &NcElement::basis(-1, 0);
        let sq = &a * &a;
        let expect = &(&NcElement::basis(2, 0) + &NcElement::basis(-2, 0))
            + &NcElement::basis_with_coeff(0, 0, LaurentPoly::constant(2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(NcElement::basis(2, 3).theta(), NcElement::basis(-2, -3));
        assert_eq!(NcElement::one().theta(), NcElement::one());
        let a = &NcElement::basis_with_coeff(1, -1, LaurentPoly::t_pow(2)) + &NcElement::basis(0, 2);
        let expect =
            &NcElement::basis_with_coeff(-1, 1, LaurentPoly::t_pow(2)) + &NcElement::basis(0, -2);
        assert_eq!(a.theta(), expect);
    }

    #[test]
    fn symmetry_predicate() {
        assert!((&NcElement::basis(1, 2) + &NcElement::basis(-1, -2)).is_symmetric());
        assert!(!NcElement::basis(1, 0).is_symmetric());
        assert!(NcElement::zero().is_symmetric());
    }

    fn arb_element() -> impl Strategy<Value = NcElement> {
        proptest::collection::vec(((-5i64..=5, -5i64..=5), (-3i64..=3, -2i64..=2)), 0..5).prop_map(
            |terms| {
                let mut out = NcElement::zero();
                for ((p, q), (c, e)) in terms {
                    out.add_term(p, q, &LaurentPoly::term(c, e));
                }
                out
            },
        )
    }

    proptest! {
        #[test]
        fn associativity(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn commutation_relation(p in -8i64..=8, q in -8i64..=8, r in -8i64..=8, s in -8i64..=8) {
            let lhs = &NcElement::basis(p, q) * &NcElement::basis(r, s);
            let rhs = (&NcElement::basis(r, s) * &NcElement::basis(p, q))
                .scale(&LaurentPoly::t_pow(2 * det(p, q, r, s)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn theta_is_involutive_morphism(a in arb_element(), b in arb_element()) {
            prop_assert_eq!(a.theta().theta(), a.clone());
            prop_assert_eq!((&a * &b).theta(), &a.theta() * &b.theta());
        }

        #[test]
        fn symmetric_part_closed(a in arb_element(), b in arb_element()) {
            let sa = &a + &a.theta();
            let sb = &b + &b.theta();
            prop_assert!((&sa * &sb).is_symmetric());
        }
    }
}
