//! Canonical text and JSON rendering for elements of every kind.
//!
//! The text form is the same grammar `expr` parses, so formatting
//! followed by parsing is the identity on values. Terms are emitted
//! highest index first (curve classes in descending (p, q) order with
//! the empty link last, solid-torus powers in descending degree),
//! coefficients always parenthesized except for the bare empty link:
//!
//! ```text
//! (t)*T(1,1) + (t^-1)*T(1,-1)
//! (t^4 + 1)*a(2) + (-t^2)*a(0)
//! 1
//! ```
//!
//! JSON forms: a Laurent polynomial is `[[exponent, "coefficient"],
//! ...]` sorted by exponent (coefficients as decimal strings, since
//! they can exceed any float or fixed-width integer); skein and torus
//! elements are `[{p, q, coeff}, ...]` with the empty link carried as
//! the unit class p = q = 0; solid-torus elements are `[[degree,
//! coeff], ...]`; lens-module elements are `[[k, coeff], ...]` over the
//! full spanning set k = 0 ... floor(p/2).
//!
//! Every renderer also accepts a numeric mode that first evaluates
//! coefficients at a complex t (written `re+imi` in text, `[re, im]` in
//! JSON).

use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Value as Json};

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::lens::LensElement;
use crate::nc_torus::NcElement;
use crate::skein::{CurveClass, SkeinElement};
use crate::solid_torus::SolidTorusElement;

/// Coefficient rendering: exact Laurent polynomials, or values at t = z.
#[derive(Debug, Clone, Copy)]
pub enum CoeffMode {
    Exact,
    At(Complex64),
}

fn coeff_text(c: &LaurentPoly, mode: CoeffMode) -> Result<String, Error> {
    match mode {
        CoeffMode::Exact => Ok(c.to_string()),
        CoeffMode::At(z) => Ok(complex_text(c.eval(z)?)),
    }
}

fn coeff_json(c: &LaurentPoly, mode: CoeffMode) -> Result<Json, Error> {
    match mode {
        CoeffMode::Exact => Ok(laurent_json(c)),
        CoeffMode::At(z) => {
            let v = c.eval(z)?;
            Ok(json!([v.re, v.im]))
        }
    }
}

/// `re+imi` / `re-imi`, shortened to `re` for real values.
pub fn complex_text(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// `[[exponent, "coefficient"], ...]` sorted by exponent.
pub fn laurent_json(c: &LaurentPoly) -> Json {
    Json::Array(c.terms().map(|(e, n)| json!([e, n.to_string()])).collect())
}

pub fn skein_text(e: &SkeinElement, mode: CoeffMode) -> Result<String, Error> {
    if e.is_zero() {
        return Ok("0".to_string());
    }
    let terms: Vec<_> = e.terms().collect();
    let mut parts = Vec::with_capacity(terms.len());
    for (class, coeff) in terms.into_iter().rev() {
        match class {
            CurveClass::Curve { p, q } => {
                parts.push(format!("({})*T({p},{q})", coeff_text(coeff, mode)?));
            }
            CurveClass::Empty => {
                if matches!(mode, CoeffMode::Exact) && *coeff == LaurentPoly::one() {
                    parts.push("1".to_string());
                } else {
                    parts.push(format!("({})*1", coeff_text(coeff, mode)?));
                }
            }
        }
    }
    Ok(parts.join(" + "))
}

pub fn skein_json(e: &SkeinElement, mode: CoeffMode) -> Result<Json, Error> {
    let mut out = Vec::new();
    for (class, coeff) in e.terms() {
        let (p, q) = match class {
            CurveClass::Empty => (0, 0),
            CurveClass::Curve { p, q } => (p, q),
        };
        out.push(json!({ "p": p, "q": q, "coeff": coeff_json(coeff, mode)? }));
    }
    Ok(Json::Array(out))
}

pub fn nc_text(e: &NcElement, mode: CoeffMode) -> Result<String, Error> {
    if e.is_zero() {
        return Ok("0".to_string());
    }
    let terms: Vec<_> = e.terms().collect();
    let mut parts = Vec::with_capacity(terms.len());
    for ((p, q), coeff) in terms.into_iter().rev() {
        parts.push(format!("({})*e({p},{q})", coeff_text(coeff, mode)?));
    }
    Ok(parts.join(" + "))
}

pub fn nc_json(e: &NcElement, mode: CoeffMode) -> Result<Json, Error> {
    let mut out = Vec::new();
    for ((p, q), coeff) in e.terms() {
        out.push(json!({ "p": p, "q": q, "coeff": coeff_json(coeff, mode)? }));
    }
    Ok(Json::Array(out))
}

pub fn solid_text(u: &SolidTorusElement, mode: CoeffMode) -> Result<String, Error> {
    if u.is_zero() {
        return Ok("0".to_string());
    }
    let mut parts = Vec::new();
    for (n, coeff) in u.coeffs().iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        parts.push(format!("({})*a({n})", coeff_text(coeff, mode)?));
    }
    Ok(parts.join(" + "))
}

pub fn solid_json(u: &SolidTorusElement, mode: CoeffMode) -> Result<Json, Error> {
    let mut out = Vec::new();
    for (n, coeff) in u.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        out.push(json!([n, coeff_json(coeff, mode)?]));
    }
    Ok(Json::Array(out))
}

pub fn lens_text(l: &LensElement, mode: CoeffMode) -> Result<String, Error> {
    if l.is_zero() {
        return Ok("0".to_string());
    }
    let mut parts = Vec::new();
    for (k, coeff) in l.coeffs().iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        parts.push(format!("({})*(1 (x) a^{k})", coeff_text(coeff, mode)?));
    }
    Ok(parts.join(" + "))
}

pub fn lens_json(l: &LensElement, mode: CoeffMode) -> Result<Json, Error> {
    let mut out = Vec::new();
    for (k, coeff) in l.coeffs().iter().enumerate() {
        out.push(json!([k, coeff_json(coeff, mode)?]));
    }
    Ok(Json::Array(out))
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = skein_text(self, CoeffMode::Exact).expect("exact rendering cannot fail");
        write!(f, "{s}")
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = nc_text(self, CoeffMode::Exact).expect("exact rendering cannot fail");
        write!(f, "{s}")
    }
}

impl fmt::Display for SolidTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = solid_text(self, CoeffMode::Exact).expect("exact rendering cannot fail");
        write!(f, "{s}")
    }
}

impl fmt::Display for LensElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = lens_text(self, CoeffMode::Exact).expect("exact rendering cannot fail");
        write!(f, "{s}")
    }
}
