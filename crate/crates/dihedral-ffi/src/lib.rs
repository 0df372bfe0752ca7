//! C ABI over the dihedral library.
//!
//! Polynomials cross the boundary as opaque `DhPoly` handles; every
//! fallible call returns a `DhStatus` and writes its result through an out
//! pointer. Strings returned by this library are heap-allocated and must
//! be released with [`dh_string_free`]; handles with [`dh_poly_free`].
//! Symbolic content is exported as the same JSON term encoding the CLI
//! emits, so bindings can parse one format.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dihedral::dunkl::GroupParam;
use dihedral::harmonic::{f_coeff_form, Variant};
use dihedral::intertwine::intertwine_mono;
use dihedral::json::poly_to_dto;
use dihedral::kernels::{kernel_k, poisson_p};
use dihedral::multipoly::MultiPoly;
use dihedral::render;
use dihedral::report::summarize;
use dihedral::verify;

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DhStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    VerificationFailed = 3,
    InternalError = 4,
}

/// Opaque handle to an exact symbolic polynomial.
pub struct DhPoly {
    inner: MultiPoly,
}

fn export(out: *mut *mut DhPoly, poly: MultiPoly) -> DhStatus {
    if out.is_null() {
        return DhStatus::NullArgument;
    }
    let boxed = Box::new(DhPoly { inner: poly });
    unsafe {
        *out = Box::into_raw(boxed);
    }
    DhStatus::Ok
}

/// V(z^a zbar^b) for the group selected by s >= 1.
#[no_mangle]
pub extern "C" fn dh_intertwine(s: u32, a: u32, b: u32, out: *mut *mut DhPoly) -> DhStatus {
    if s < 1 {
        return DhStatus::InvalidArgument;
    }
    let g = GroupParam::new(s);
    export(out, intertwine_mono(&g, a, b))
}

/// The degree-n harmonic family member; variant is "f", "f0" or "f1".
///
/// # Safety
/// `variant` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn dh_harmonic(
    n: u32,
    variant: *const c_char,
    out: *mut *mut DhPoly,
) -> DhStatus {
    if variant.is_null() {
        return DhStatus::NullArgument;
    }
    let Ok(name) = unsafe { CStr::from_ptr(variant) }.to_str() else {
        return DhStatus::InvalidArgument;
    };
    let Some(var) = Variant::parse(name) else {
        return DhStatus::InvalidArgument;
    };
    export(out, f_coeff_form(n, var))
}

/// The Poisson kernel component P_N(z, w).
#[no_mangle]
pub extern "C" fn dh_poisson(s: u32, big_n: u32, out: *mut *mut DhPoly) -> DhStatus {
    if s < 1 {
        return DhStatus::InvalidArgument;
    }
    let g = GroupParam::new(s);
    export(out, poisson_p(&g, big_n))
}

/// The kernel K_n(z, w).
#[no_mangle]
pub extern "C" fn dh_kernel(s: u32, n: u32, out: *mut *mut DhPoly) -> DhStatus {
    if s < 1 {
        return DhStatus::InvalidArgument;
    }
    let g = GroupParam::new(s);
    export(out, kernel_k(&g, n))
}

/// Number of stored (nonzero) terms.
///
/// # Safety
/// `poly` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn dh_poly_num_terms(poly: *const DhPoly) -> usize {
    if poly.is_null() {
        return 0;
    }
    unsafe { &*poly }.inner.num_terms()
}

fn string_out(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// JSON term-list encoding (the CLI wire format). Free with dh_string_free.
///
/// # Safety
/// `poly` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn dh_poly_to_json(poly: *const DhPoly) -> *mut c_char {
    if poly.is_null() {
        return ptr::null_mut();
    }
    let dto = poly_to_dto(&unsafe { &*poly }.inner);
    match serde_json::to_string(&dto) {
        Ok(s) => string_out(s),
        Err(_) => ptr::null_mut(),
    }
}

/// Plain-text rendering. Free with dh_string_free.
///
/// # Safety
/// `poly` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn dh_poly_to_text(poly: *const DhPoly) -> *mut c_char {
    if poly.is_null() {
        return ptr::null_mut();
    }
    string_out(render::text_poly(&unsafe { &*poly }.inner))
}

/// Release a polynomial handle. NULL is ignored.
///
/// # Safety
/// `poly` must be a pointer previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn dh_poly_free(poly: *mut DhPoly) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn dh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Run a verification suite ("defining", "oracle", "identities",
/// "singular" or "all"). `max_degree < 0` selects the suite default.
/// Writes the number of failed checks through `failures` when non-NULL.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn dh_verify(
    suite: *const c_char,
    max_degree: i32,
    seed: u64,
    failures: *mut u64,
) -> DhStatus {
    if suite.is_null() {
        return DhStatus::NullArgument;
    }
    let Ok(name) = unsafe { CStr::from_ptr(suite) }.to_str() else {
        return DhStatus::InvalidArgument;
    };
    let md = if max_degree < 0 {
        None
    } else {
        Some(max_degree as u32)
    };
    let Some(reports) = verify::run_suite(name, md, seed, None) else {
        return DhStatus::InvalidArgument;
    };
    let (_, failed) = summarize(&reports);
    if !failures.is_null() {
        unsafe {
            *failures = failed as u64;
        }
    }
    if failed == 0 {
        DhStatus::Ok
    } else {
        DhStatus::VerificationFailed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    #[test]
    fn intertwine_roundtrip_through_handle() {
        let mut handle: *mut DhPoly = ptr::null_mut();
        assert_eq!(dh_intertwine(2, 2, 0, &mut handle), DhStatus::Ok);
        assert!(!handle.is_null());
        unsafe {
            assert_eq!(dh_poly_num_terms(handle), 2);
            let json = dh_poly_to_json(handle);
            assert!(!json.is_null());
            let text = CStr::from_ptr(json).to_str().unwrap().to_string();
            assert!(text.contains("exps"));
            let parsed: Vec<dihedral::json::PolyTermDto> =
                serde_json::from_str(&text).unwrap();
            let poly = dihedral::json::poly_from_dto(&parsed).unwrap();
            assert_eq!(
                poly,
                intertwine_mono(&GroupParam::new(2), 2, 0)
            );
            dh_string_free(json);
            dh_poly_free(handle);
        }
    }

    #[test]
    fn status_codes() {
        assert_eq!(
            dh_intertwine(0, 1, 0, &mut ptr::null_mut()),
            DhStatus::InvalidArgument
        );
        assert_eq!(dh_intertwine(1, 1, 0, ptr::null_mut()), DhStatus::NullArgument);
        unsafe {
            let bogus = CString::new("g7").unwrap();
            let mut h: *mut DhPoly = ptr::null_mut();
            assert_eq!(
                dh_harmonic(1, bogus.as_ptr(), &mut h),
                DhStatus::InvalidArgument
            );
            assert_eq!(dh_harmonic(1, ptr::null(), &mut h), DhStatus::NullArgument);
        }
    }

    #[test]
    fn verify_via_ffi() {
        unsafe {
            let suite = CString::new("defining").unwrap();
            let mut failures = u64::MAX;
            let status = dh_verify(suite.as_ptr(), 3, 42, &mut failures);
            assert_eq!(status, DhStatus::Ok);
            assert_eq!(failures, 0);
            let bogus = CString::new("nope").unwrap();
            assert_eq!(
                dh_verify(bogus.as_ptr(), -1, 42, &mut failures),
                DhStatus::InvalidArgument
            );
        }
    }

    #[test]
    fn null_tolerance() {
        unsafe {
            dh_poly_free(ptr::null_mut());
            dh_string_free(ptr::null_mut());
            assert_eq!(dh_poly_num_terms(ptr::null()), 0);
            assert!(dh_poly_to_json(ptr::null()).is_null());
        }
    }
}
