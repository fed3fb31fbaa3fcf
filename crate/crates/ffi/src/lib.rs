//! C ABI over the `chromroots` library.
//!
//! Polynomials and graphs cross the boundary as opaque handles created by
//! `*_parse`/constructor functions and released with the matching `*_free`.
//! Every fallible function returns a [`CrStatus`]; on failure a message is
//! available from [`cr_last_error`] until the next call on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`cr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use chromroots::families;
use chromroots::galois;
use chromroots::graphs::{self, FamilySpec};
use chromroots::{factor, IntPoly};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Panic = 5,
}

/// Opaque integer polynomial.
pub struct CrPoly(IntPoly);

/// Opaque simple graph.
pub struct CrGraph(graphs::Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(CrStatus, String);

fn fail(status: CrStatus, msg: impl ToString) -> Fail {
    Fail(status, msg.to_string())
}

/// Run `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CrStatus::Ok,
        Ok(Err(Fail(s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            CrStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(fail(CrStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(CrStatus::InvalidUtf8, e))
}

unsafe fn poly_ref<'a>(p: *const CrPoly) -> Result<&'a IntPoly, Fail> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| fail(CrStatus::NullPointer, "null polynomial"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(CrStatus::NullPointer, "null out-parameter"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| fail(CrStatus::Domain, e))?;
    put(out, c.into_raw())
}

unsafe fn put_poly(out: *mut *mut CrPoly, p: IntPoly) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(CrPoly(p))))
}

/// Message for the last failure on this thread, or null. Owned by the
/// library.
#[no_mangle]
pub extern "C" fn cr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a polynomial such as `"x^2 - 7x + 11"`.
///
/// # Safety
/// `text_in` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_parse(text_in: *const c_char, out: *mut *mut CrPoly) -> CrStatus {
    guard(|| {
        let p = IntPoly::from_str(text(text_in)?).map_err(|e| fail(CrStatus::Parse, e))?;
        put_poly(out, p)
    })
}

/// Polynomial from `len` coefficients, lowest degree first.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_from_coeffs(coeffs: *const i64, len: usize, out: *mut *mut CrPoly) -> CrStatus {
    guard(|| {
        if coeffs.is_null() && len > 0 {
            return Err(fail(CrStatus::NullPointer, "null coefficients"));
        }
        let c = if len == 0 { &[][..] } else { std::slice::from_raw_parts(coeffs, len) };
        put_poly(out, IntPoly::from_i64s(c))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_free(p: *mut CrPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_degree(p: *const CrPoly) -> i64 {
    p.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as i64)
}

/// Canonical text in variable `var` (`'x'` or `'q'`).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_format(p: *const CrPoly, var: c_char, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let v = match var as u8 {
            b'x' => 'x',
            b'q' => 'q',
            _ => return Err(fail(CrStatus::Domain, "variable must be 'x' or 'q'")),
        };
        put_string(out, poly_ref(p)?.format_var(v))
    })
}

/// `a * b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_mul(a: *const CrPoly, b: *const CrPoly, out: *mut *mut CrPoly) -> CrStatus {
    guard(|| {
        let r = poly_ref(a)? * poly_ref(b)?;
        put_poly(out, r)
    })
}

/// Standard form of a monic polynomial; the shift `a` with
/// `standard(x) = p(x + a)` is written as decimal text.
///
/// # Safety
/// `p` must be a live handle; `out_std` and `out_shift` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_standardize(
    p: *const CrPoly,
    out_std: *mut *mut CrPoly,
    out_shift: *mut *mut c_char,
) -> CrStatus {
    guard(|| {
        let s = poly_ref(p)?.standardize().map_err(|e| fail(CrStatus::Domain, e))?;
        if out_std.is_null() || out_shift.is_null() {
            return Err(fail(CrStatus::NullPointer, "null out-parameter"));
        }
        put_string(out_shift, s.shift.to_string())?;
        put_poly(out_std, s.standard)
    })
}

/// Factorization over the integers as JSON:
/// `{"content":"c","factors":[{"poly":"...","mult":m},...]}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_factor_json(p: *const CrPoly, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let p = poly_ref(p)?;
        if p.is_zero() {
            return Err(fail(CrStatus::Domain, "cannot factor the zero polynomial"));
        }
        let json = serde_json::to_string(&factor(p).to_json()).map_err(|e| fail(CrStatus::Domain, e))?;
        put_string(out, json)
    })
}

/// Writes 1 if `p` is irreducible over the rationals, else 0.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_is_irreducible(p: *const CrPoly, out: *mut i32) -> CrStatus {
    guard(|| {
        let r = chromroots::is_irreducible(poly_ref(p)?);
        put(out, r as i32)
    })
}

/// Galois group of an irreducible polynomial as JSON (name, order,
/// method, samples, ambiguous_with).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_poly_galois_json(p: *const CrPoly, samples: usize, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let g = galois::classify(poly_ref(p)?, samples).map_err(|e| fail(CrStatus::Domain, e))?;
        put_string(out, serde_json::to_string(&g).map_err(|e| fail(CrStatus::Domain, e))?)
    })
}

/// Interesting factor of the ring `R(1, a_1, ..., a_len)`, in `q`.
///
/// # Safety
/// `sizes` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_ring_interesting_factor(
    sizes: *const usize,
    len: usize,
    out: *mut *mut CrPoly,
) -> CrStatus {
    guard(|| {
        if sizes.is_null() {
            return Err(fail(CrStatus::NullPointer, "null sizes"));
        }
        let a = std::slice::from_raw_parts(sizes, len);
        let h = families::ring_interesting_factor(a).map_err(|e| fail(CrStatus::Domain, e))?;
        put_poly(out, h)
    })
}

/// Closed-form chromatic polynomial (`full != 0`) or interesting factor of
/// a family given as text, e.g. `"ring:1,1,1,5"`, `"theta:3,2"`,
/// `"biclique:7:0,1;2,3;4,5,6"`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_family_polynomial(spec: *const c_char, full: i32, out: *mut *mut CrPoly) -> CrStatus {
    guard(|| {
        let spec = FamilySpec::from_str(text(spec)?).map_err(|e| fail(CrStatus::Parse, e))?;
        let p = if full != 0 { families::full_chromatic(&spec) } else { families::interesting_factor(&spec) };
        put_poly(out, p.map_err(|e| fail(CrStatus::Domain, e))?)
    })
}

/// Parse a graph: vertex count on the first line, then `u v` per edge.
///
/// # Safety
/// `text_in` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_graph_parse(text_in: *const c_char, out: *mut *mut CrGraph) -> CrStatus {
    guard(|| {
        let g = graphs::parse_graph(text(text_in)?).map_err(|e| fail(CrStatus::Parse, e))?;
        put(out, Box::into_raw(Box::new(CrGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_graph_free(g: *mut CrGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Chromatic polynomial by deletion-contraction, in `q`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cr_graph_chromatic(g: *const CrGraph, out: *mut *mut CrPoly) -> CrStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| fail(CrStatus::NullPointer, "null graph"))?;
        let p = graphs::chromatic_polynomial(&g.0).map_err(|e| fail(CrStatus::Domain, e))?;
        put_poly(out, p)
    })
}
