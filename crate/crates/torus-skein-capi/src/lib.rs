//! C ABI over the torus-skein library.
//!
//! Elements are exchanged as opaque handles created by the `ts_*_parse`
//! functions (which accept the same expression grammar as the CLI) and
//! released by the matching `ts_*_free`. Results are returned through
//! out-parameters; every function returns a [`TsStatus`] code and
//! leaves out-parameters null/untouched on failure. Formatting is
//! exact: coefficients are Laurent polynomials in `t` rendered in the
//! canonical text or JSON form.
//!
//! The generated header lives at `include/torus_skein.h`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use torus_skein::error::Error;
use torus_skein::expr::{self, Kind, Value};
use torus_skein::format::{
    lens_json, lens_text, nc_json, nc_text, skein_json, skein_text, solid_json, solid_text,
    CoeffMode,
};
use torus_skein::jones_wenzl;
use torus_skein::lens::{GluingMatrix, LensElement};
use torus_skein::nc_torus::NcElement;
use torus_skein::skein::{intersection_number, SkeinElement};
use torus_skein::solid_torus::{self, SolidTorusElement};

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The expression could not be parsed.
    SyntaxError = 3,
    /// The expression mixes atoms of different element kinds.
    KindMismatch = 4,
    /// The noncommutative-torus element is not symmetric under
    /// (p, q) -> (-p, -q), so it represents no skein element.
    NotSymmetric = 5,
    /// A curve class that must be primitive (gcd 1) was not.
    NotPrimitive = 6,
    /// The gluing matrix determinant is not -1.
    BadDeterminant = 7,
    /// The gluing matrix has p < 1.
    UnsupportedGluing = 8,
    /// Division by a non-unit coefficient.
    NotAUnit = 9,
    /// Numeric evaluation at t = 0.
    ZeroEvaluationPoint = 10,
    /// A Jones-Wenzl idempotent is undefined at the requested root of
    /// unity.
    IdempotentUndefined = 11,
    /// No (m, k) decomposition exists for a reduction step.
    NoDecomposition = 12,
    /// An internal invariant failed.
    InternalError = 13,
}

/// Opaque handle to a skein element of the torus.
pub struct TsSkein {
    inner: SkeinElement,
}

/// Opaque handle to a noncommutative-torus element.
pub struct TsNc {
    inner: NcElement,
}

/// Opaque handle to a solid-torus element (a polynomial in the core
/// curve).
pub struct TsSolid {
    inner: SolidTorusElement,
}

/// Opaque handle to a reduced lens-space element (coefficients over the
/// spanning set 1 (x) a^k, k = 0 ... floor(p/2)).
pub struct TsLens {
    inner: LensElement,
}

fn status_of(e: &Error) -> TsStatus {
    match e {
        Error::Syntax { .. } => TsStatus::SyntaxError,
        Error::KindMismatch { .. } => TsStatus::KindMismatch,
        Error::NotSymmetric => TsStatus::NotSymmetric,
        Error::NotPrimitive { .. } => TsStatus::NotPrimitive,
        Error::BadDeterminant { .. } => TsStatus::BadDeterminant,
        Error::UnsupportedGluing { .. } => TsStatus::UnsupportedGluing,
        Error::NotAUnit => TsStatus::NotAUnit,
        Error::ZeroEvaluationPoint => TsStatus::ZeroEvaluationPoint,
        Error::IdempotentUndefined { .. } => TsStatus::IdempotentUndefined,
        Error::NoDecomposition => TsStatus::NoDecomposition,
    }
}

fn guarded<F: FnOnce() -> TsStatus>(f: F) -> TsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(TsStatus::InternalError)
}

unsafe fn parse_into<T>(
    text: *const c_char,
    out: *mut *mut T,
    kind: Kind,
    wrap: impl FnOnce(Value) -> Option<T>,
) -> TsStatus {
    if text.is_null() || out.is_null() {
        return TsStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let s = match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(s) => s,
        Err(_) => return TsStatus::InvalidUtf8,
    };
    match expr::parse_value(s, kind) {
        Ok(v) => match wrap(v) {
            Some(handle) => {
                unsafe { *out = Box::into_raw(Box::new(handle)) };
                TsStatus::Ok
            }
            None => TsStatus::InternalError,
        },
        Err(e) => status_of(&e),
    }
}

unsafe fn string_out(out: *mut *mut c_char, s: String) -> TsStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            TsStatus::Ok
        }
        Err(_) => TsStatus::InternalError,
    }
}

unsafe fn format_out(
    out: *mut *mut c_char,
    render: impl FnOnce() -> Result<String, Error>,
) -> TsStatus {
    if out.is_null() {
        return TsStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    match render() {
        Ok(s) => unsafe { string_out(out, s) },
        Err(e) => status_of(&e),
    }
}

/// A static, human-readable description of a status code. The returned
/// string must not be freed.
#[no_mangle]
pub extern "C" fn ts_status_message(status: TsStatus) -> *const c_char {
    let msg: &[u8] = match status {
        TsStatus::Ok => b"ok\0",
        TsStatus::NullPointer => b"null pointer argument\0",
        TsStatus::InvalidUtf8 => b"string argument is not valid UTF-8\0",
        TsStatus::SyntaxError => b"expression syntax error\0",
        TsStatus::KindMismatch => b"expression mixes element kinds\0",
        TsStatus::NotSymmetric => b"element is not symmetric\0",
        TsStatus::NotPrimitive => b"curve class is not primitive\0",
        TsStatus::BadDeterminant => b"gluing matrix determinant is not -1\0",
        TsStatus::UnsupportedGluing => b"gluing matrix must have p >= 1\0",
        TsStatus::NotAUnit => b"division by a non-unit\0",
        TsStatus::ZeroEvaluationPoint => b"cannot evaluate at t = 0\0",
        TsStatus::IdempotentUndefined => b"idempotent undefined at this root of unity\0",
        TsStatus::NoDecomposition => b"no (m, k) decomposition exists\0",
        TsStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Frees a string returned by a `ts_*_format` function.
///
/// # Safety
/// `s` must be a pointer previously returned through a `ts_*_format`
/// out-parameter (or null, in which case this is a no-op).
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

// ---------------------------------------------------------------------------
// parsing and lifetime management
// ---------------------------------------------------------------------------

/// Parses a skein-kind expression (atoms `T(p,q)`, `P(d;p,q)`,
/// `JW(n;p,q)`, scalars) into a new handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to a writable
/// pointer slot. On success `*out` owns the element and must be
/// released with `ts_skein_free`.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_parse(text: *const c_char, out: *mut *mut TsSkein) -> TsStatus {
    guarded(|| unsafe {
        parse_into(text, out, Kind::Skein, |v| match v {
            Value::Skein(e) => Some(TsSkein { inner: e }),
            _ => None,
        })
    })
}

/// Parses a noncommutative-torus expression (atoms `e(p,q)`, scalars).
///
/// # Safety
/// As for `ts_skein_parse`; release with `ts_nc_free`.
#[no_mangle]
pub unsafe extern "C" fn ts_nc_parse(text: *const c_char, out: *mut *mut TsNc) -> TsStatus {
    guarded(|| unsafe {
        parse_into(text, out, Kind::Nc, |v| match v {
            Value::Nc(e) => Some(TsNc { inner: e }),
            _ => None,
        })
    })
}

/// Parses a solid-torus expression (atoms `a(n)`, scalars).
///
/// # Safety
/// As for `ts_skein_parse`; release with `ts_solid_free`.
#[no_mangle]
pub unsafe extern "C" fn ts_solid_parse(text: *const c_char, out: *mut *mut TsSolid) -> TsStatus {
    guarded(|| unsafe {
        parse_into(text, out, Kind::Solid, |v| match v {
            Value::Solid(e) => Some(TsSolid { inner: e }),
            _ => None,
        })
    })
}

/// Releases a skein handle.
///
/// # Safety
/// `e` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn ts_skein_free(e: *mut TsSkein) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Releases a noncommutative-torus handle.
///
/// # Safety
/// `e` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn ts_nc_free(e: *mut TsNc) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Releases a solid-torus handle.
///
/// # Safety
/// `e` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn ts_solid_free(e: *mut TsSolid) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// Releases a lens-space handle.
///
/// # Safety
/// `e` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn ts_lens_free(e: *mut TsLens) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

// ---------------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------------

/// Renders a skein element canonically (text grammar, or JSON when
/// `as_json` is set).
///
/// # Safety
/// `e` must be a live handle; `*out` receives a string to release with
/// `ts_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_format(
    e: *const TsSkein,
    as_json: bool,
    out: *mut *mut c_char,
) -> TsStatus {
    guarded(|| unsafe {
        let Some(e) = e.as_ref() else { return TsStatus::NullPointer };
        format_out(out, || {
            if as_json {
                skein_json(&e.inner, CoeffMode::Exact).map(|j| j.to_string())
            } else {
                skein_text(&e.inner, CoeffMode::Exact)
            }
        })
    })
}

/// Renders a noncommutative-torus element canonically.
///
/// # Safety
/// As for `ts_skein_format`.
#[no_mangle]
pub unsafe extern "C" fn ts_nc_format(
    e: *const TsNc,
    as_json: bool,
    out: *mut *mut c_char,
) -> TsStatus {
    guarded(|| unsafe {
        let Some(e) = e.as_ref() else { return TsStatus::NullPointer };
        format_out(out, || {
            if as_json {
                nc_json(&e.inner, CoeffMode::Exact).map(|j| j.to_string())
            } else {
                nc_text(&e.inner, CoeffMode::Exact)
            }
        })
    })
}

/// Renders a solid-torus element canonically.
///
/// # Safety
/// As for `ts_skein_format`.
#[no_mangle]
pub unsafe extern "C" fn ts_solid_format(
    e: *const TsSolid,
    as_json: bool,
    out: *mut *mut c_char,
) -> TsStatus {
    guarded(|| unsafe {
        let Some(e) = e.as_ref() else { return TsStatus::NullPointer };
        format_out(out, || {
            if as_json {
                solid_json(&e.inner, CoeffMode::Exact).map(|j| j.to_string())
            } else {
                solid_text(&e.inner, CoeffMode::Exact)
            }
        })
    })
}

/// Renders a reduced lens-space element canonically.
///
/// # Safety
/// As for `ts_skein_format`.
#[no_mangle]
pub unsafe extern "C" fn ts_lens_format(
    e: *const TsLens,
    as_json: bool,
    out: *mut *mut c_char,
) -> TsStatus {
    guarded(|| unsafe {
        let Some(e) = e.as_ref() else { return TsStatus::NullPointer };
        format_out(out, || {
            if as_json {
                lens_json(&e.inner, CoeffMode::Exact).map(|j| j.to_string())
            } else {
                lens_text(&e.inner, CoeffMode::Exact)
            }
        })
    })
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

/// Multiplies two skein elements (product-to-sum rule).
///
/// # Safety
/// `a` and `b` must be live handles; `*out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_mul(
    a: *const TsSkein,
    b: *const TsSkein,
    out: *mut *mut TsSkein,
) -> TsStatus {
    guarded(|| unsafe {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return TsStatus::NullPointer;
        };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        let prod = &a.inner * &b.inner;
        *out = Box::into_raw(Box::new(TsSkein { inner: prod }));
        TsStatus::Ok
    })
}

/// Multiplies two noncommutative-torus elements.
///
/// # Safety
/// As for `ts_skein_mul`.
#[no_mangle]
pub unsafe extern "C" fn ts_nc_mul(
    a: *const TsNc,
    b: *const TsNc,
    out: *mut *mut TsNc,
) -> TsStatus {
    guarded(|| unsafe {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return TsStatus::NullPointer;
        };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        let prod = &a.inner * &b.inner;
        *out = Box::into_raw(Box::new(TsNc { inner: prod }));
        TsStatus::Ok
    })
}

/// Multiplies two solid-torus elements.
///
/// # Safety
/// As for `ts_skein_mul`.
#[no_mangle]
pub unsafe extern "C" fn ts_solid_mul(
    a: *const TsSolid,
    b: *const TsSolid,
    out: *mut *mut TsSolid,
) -> TsStatus {
    guarded(|| unsafe {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return TsStatus::NullPointer;
        };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        let prod = &a.inner * &b.inner;
        *out = Box::into_raw(Box::new(TsSolid { inner: prod }));
        TsStatus::Ok
    })
}

/// Embeds a skein element into the noncommutative torus,
/// (p,q) -> e_{p,q} + e_{-p,-q}.
///
/// # Safety
/// `a` must be a live handle; `*out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_embed(a: *const TsSkein, out: *mut *mut TsNc) -> TsStatus {
    guarded(|| unsafe {
        let Some(a) = a.as_ref() else { return TsStatus::NullPointer };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = Box::into_raw(Box::new(TsNc { inner: a.inner.embed() }));
        TsStatus::Ok
    })
}

/// Recovers the skein element represented by a symmetric
/// noncommutative-torus element; fails with `NotSymmetric` otherwise.
///
/// # Safety
/// `n` must be a live handle; `*out` receives a new handle on success.
#[no_mangle]
pub unsafe extern "C" fn ts_nc_unembed(n: *const TsNc, out: *mut *mut TsSkein) -> TsStatus {
    guarded(|| unsafe {
        let Some(n) = n.as_ref() else { return TsStatus::NullPointer };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match SkeinElement::from_symmetric(&n.inner) {
            Ok(e) => {
                *out = Box::into_raw(Box::new(TsSkein { inner: e }));
                TsStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Projects a skein element of the torus to the solid-torus module.
///
/// # Safety
/// `a` must be a live handle; `*out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_project(a: *const TsSkein, out: *mut *mut TsSolid) -> TsStatus {
    guarded(|| unsafe {
        let Some(a) = a.as_ref() else { return TsStatus::NullPointer };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = Box::into_raw(Box::new(TsSolid { inner: solid_torus::project(&a.inner) }));
        TsStatus::Ok
    })
}

/// Acts by a skein element of the torus on a solid-torus element.
///
/// # Safety
/// `a` and `u` must be live handles; `*out` receives a new handle.
#[no_mangle]
pub unsafe extern "C" fn ts_skein_act(
    a: *const TsSkein,
    u: *const TsSolid,
    out: *mut *mut TsSolid,
) -> TsStatus {
    guarded(|| unsafe {
        let (Some(a), Some(u)) = (a.as_ref(), u.as_ref()) else {
            return TsStatus::NullPointer;
        };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = Box::into_raw(Box::new(TsSolid { inner: solid_torus::act(&a.inner, &u.inner) }));
        TsStatus::Ok
    })
}

/// Reduces a solid-torus element in the lens space glued by the matrix
/// with columns (a, b) and (p, q) (determinant must be -1, p >= 1).
///
/// # Safety
/// `u` must be a live handle; `*out` receives a new handle on success.
#[no_mangle]
pub unsafe extern "C" fn ts_lens_reduce(
    a: i64,
    b: i64,
    p: i64,
    q: i64,
    u: *const TsSolid,
    out: *mut *mut TsLens,
) -> TsStatus {
    guarded(|| unsafe {
        let Some(u) = u.as_ref() else { return TsStatus::NullPointer };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match GluingMatrix::new(a, b, p, q) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(TsLens { inner: m.reduce(&u.inner) }));
                TsStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Expands the n-th Jones-Wenzl idempotent threaded along the primitive
/// curve (p, q) into the curve-class basis.
///
/// # Safety
/// `out` must point to a writable pointer slot; `*out` receives a new
/// handle on success.
#[no_mangle]
pub unsafe extern "C" fn ts_jw_expand(
    n: u64,
    p: i64,
    q: i64,
    out: *mut *mut TsSkein,
) -> TsStatus {
    guarded(|| unsafe {
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match jones_wenzl::expansion(n, p, q) {
            Ok(e) => {
                *out = Box::into_raw(Box::new(TsSkein { inner: e }));
                TsStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The maximal geometric intersection number between the curve classes
/// of two skein elements.
///
/// # Safety
/// `a` and `b` must be live handles; `*out` receives the number.
#[no_mangle]
pub unsafe extern "C" fn ts_intersection_number(
    a: *const TsSkein,
    b: *const TsSkein,
    out: *mut u64,
) -> TsStatus {
    guarded(|| unsafe {
        let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
            return TsStatus::NullPointer;
        };
        if out.is_null() {
            return TsStatus::NullPointer;
        }
        *out = intersection_number(&a.inner, &b.inner);
        TsStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn parse_skein(s: &str) -> *mut TsSkein {
        let c = CString::new(s).unwrap();
        let mut out: *mut TsSkein = ptr::null_mut();
        assert_eq!(unsafe { ts_skein_parse(c.as_ptr(), &mut out) }, TsStatus::Ok);
        assert!(!out.is_null());
        out
    }

    unsafe fn format_skein(e: *const TsSkein, as_json: bool) -> String {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { ts_skein_format(e, as_json, &mut out) }, TsStatus::Ok);
        let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { ts_string_free(out) };
        s
    }

    #[test]
    fn mul_and_format_through_the_abi() {
        unsafe {
            let a = parse_skein("T(1,0)");
            let b = parse_skein("T(0,1)");
            let mut prod: *mut TsSkein = ptr::null_mut();
            assert_eq!(ts_skein_mul(a, b, &mut prod), TsStatus::Ok);
            assert_eq!(format_skein(prod, false), "(t)*T(1,1) + (t^-1)*T(1,-1)");
            ts_skein_free(a);
            ts_skein_free(b);
            ts_skein_free(prod);
        }
    }

    #[test]
    fn embed_unembed_roundtrip() {
        unsafe {
            let a = parse_skein("T(2,1) + (t^3)*1");
            let mut n: *mut TsNc = ptr::null_mut();
            assert_eq!(ts_skein_embed(a, &mut n), TsStatus::Ok);
            let mut back: *mut TsSkein = ptr::null_mut();
            assert_eq!(ts_nc_unembed(n, &mut back), TsStatus::Ok);
            assert_eq!(format_skein(back, false), format_skein(a, false));
            ts_skein_free(a);
            ts_nc_free(n);
            ts_skein_free(back);
        }
    }

    #[test]
    fn unembed_rejects_asymmetric_input() {
        unsafe {
            let c = CString::new("e(1,0)").unwrap();
            let mut n: *mut TsNc = ptr::null_mut();
            assert_eq!(ts_nc_parse(c.as_ptr(), &mut n), TsStatus::Ok);
            let mut back: *mut TsSkein = ptr::null_mut();
            assert_eq!(ts_nc_unembed(n, &mut back), TsStatus::NotSymmetric);
            assert!(back.is_null());
            ts_nc_free(n);
        }
    }

    #[test]
    fn lens_reduction_of_the_three_sphere() {
        unsafe {
            let c = CString::new("a(1)").unwrap();
            let mut u: *mut TsSolid = ptr::null_mut();
            assert_eq!(ts_solid_parse(c.as_ptr(), &mut u), TsStatus::Ok);
            let mut l: *mut TsLens = ptr::null_mut();
            assert_eq!(ts_lens_reduce(0, 1, 1, 0, u, &mut l), TsStatus::Ok);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(ts_lens_format(l, false, &mut s), TsStatus::Ok);
            assert_eq!(
                CStr::from_ptr(s).to_str().unwrap(),
                "(-t^2 - t^-2)*(1 (x) a^0)"
            );
            ts_string_free(s);
            // a bad matrix is reported, not asserted
            let mut l2: *mut TsLens = ptr::null_mut();
            assert_eq!(ts_lens_reduce(0, -1, 1, 0, u, &mut l2), TsStatus::BadDeterminant);
            assert!(l2.is_null());
            ts_solid_free(u);
            ts_lens_free(l);
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            let mut out: *mut TsSkein = ptr::null_mut();
            assert_eq!(ts_skein_parse(ptr::null(), &mut out), TsStatus::NullPointer);
            let bad = CString::new("T(1,").unwrap();
            assert_eq!(ts_skein_parse(bad.as_ptr(), &mut out), TsStatus::SyntaxError);
            assert!(out.is_null());
            let mixed = CString::new("T(1,0) + e(0,1)").unwrap();
            assert_eq!(ts_skein_parse(mixed.as_ptr(), &mut out), TsStatus::KindMismatch);
            let mut jw: *mut TsSkein = ptr::null_mut();
            assert_eq!(ts_jw_expand(2, 2, 4, &mut jw), TsStatus::NotPrimitive);
            assert!(jw.is_null());
            let msg = CStr::from_ptr(ts_status_message(TsStatus::NotPrimitive));
            assert_eq!(msg.to_str().unwrap(), "curve class is not primitive");
        }
    }

    #[test]
    fn intersection_through_the_abi() {
        unsafe {
            let a = parse_skein("T(1,0)");
            let b = parse_skein("T(2,3)");
            let mut n = 0u64;
            assert_eq!(ts_intersection_number(a, b, &mut n), TsStatus::Ok);
            assert_eq!(n, 3);
            ts_skein_free(a);
            ts_skein_free(b);
        }
    }

    #[test]
    fn json_format_through_the_abi() {
        unsafe {
            let a = parse_skein("(t)*T(1,1)");
            assert_eq!(format_skein(a, true), r#"[{"coeff":[[1,"1"]],"p":1,"q":1}]"#);
            ts_skein_free(a);
        }
    }
}
