//! C ABI for the hypertree-spectra toolkit.
//!
//! Hypergraphs travel across the boundary as opaque handles; structured
//! results travel as JSON strings allocated by this library and released
//! with [`hts_string_free`]. Every fallible call returns a status code and
//! records a human-readable message retrievable via [`hts_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hypertree_spectra::charpoly::{self, OracleConfig};
use hypertree_spectra::matching::matching_polynomial;
use hypertree_spectra::report::{
    MatchingJson, MultiplicityJson, PendantGrowthJson, SpectrumJson,
};
use hypertree_spectra::spectrum::{distinct_real_eigenvalues, spectral_radius_exact};
use hypertree_spectra::tensor::nqz_spectral_radius;
use hypertree_spectra::{Error, Hypergraph};

/// Success.
pub const HTS_OK: i32 = 0;
/// A verification ran to completion and reported a mismatch.
pub const HTS_MISMATCH: i32 = 1;
/// A resource guard tripped (degree guard, bad-point budget, timeout,
/// iteration cap).
pub const HTS_GUARD: i32 = 2;
/// Invalid input: malformed JSON, inconsistent hypergraph, unknown vertex,
/// null pointer.
pub const HTS_INVALID: i32 = 3;

/// Opaque hypergraph handle. Create with [`hts_hypergraph_from_json`],
/// release with [`hts_hypergraph_free`].
pub struct HtsHypergraph {
    inner: Hypergraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn code_for(err: &Error) -> i32 {
    match err {
        Error::DegreeGuard { .. }
        | Error::TooManyBadPoints { .. }
        | Error::Timeout(_)
        | Error::NoConvergence { .. }
        | Error::EdgeGuard(_) => HTS_GUARD,
        _ => HTS_INVALID,
    }
}

fn fail(err: &Error) -> i32 {
    set_last_error(&err.to_string());
    code_for(err)
}

fn json_out(value: &impl serde::Serialize, out: *mut *mut c_char) -> i32 {
    let text = match serde_json::to_string_pretty(value) {
        Ok(t) => t,
        Err(e) => {
            set_last_error(&e.to_string());
            return HTS_INVALID;
        }
    };
    let c = CString::new(text).unwrap();
    unsafe { *out = c.into_raw() };
    HTS_OK
}

/// Guards against panics crossing the FFI boundary.
fn guarded(f: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => {
            set_last_error("internal panic");
            HTS_INVALID
        }
    }
}

unsafe fn handle<'a>(h: *const HtsHypergraph) -> Result<&'a Hypergraph, i32> {
    if h.is_null() {
        set_last_error("null hypergraph handle");
        return Err(HTS_INVALID);
    }
    Ok(&(*h).inner)
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, i32> {
    if s.is_null() {
        set_last_error(&format!("null {what} pointer"));
        return Err(HTS_INVALID);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_last_error(&format!("{what} is not valid UTF-8"));
        HTS_INVALID
    })
}

fn oracle_config(degree_guard: u64, timeout_per_point_ms: u64) -> OracleConfig {
    OracleConfig {
        degree_guard: if degree_guard == 0 {
            OracleConfig::default().degree_guard
        } else {
            degree_guard
        },
        timeout_per_point_ms: if timeout_per_point_ms == 0 {
            None
        } else {
            Some(timeout_per_point_ms)
        },
        ..OracleConfig::default()
    }
}

/// Returns the message for the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hts_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hts_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

/// Parses a hypergraph from its JSON form
/// `{"k": 3, "n": 5, "edges": [[0,1,2],[2,3,4]]}` and validates it. On
/// success writes a fresh handle to `out`.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` must be a valid
/// pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn hts_hypergraph_from_json(
    json: *const c_char,
    out: *mut *mut HtsHypergraph,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            set_last_error("null output pointer");
            return HTS_INVALID;
        }
        let text = match read_str(json, "json") {
            Ok(t) => t,
            Err(c) => return c,
        };
        let shape: hypertree_spectra::hypergraph::HypergraphJson =
            match serde_json::from_str(text) {
                Ok(s) => s,
                Err(e) => {
                    set_last_error(&e.to_string());
                    return HTS_INVALID;
                }
            };
        match Hypergraph::from_json(&shape) {
            Ok(h) => {
                *out = Box::into_raw(Box::new(HtsHypergraph { inner: h }));
                HTS_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Serializes a hypergraph back to JSON.
///
/// # Safety
/// `h` must be null or a live handle from this library; `out` must point
/// to writable storage. The written string is released with
/// [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_hypergraph_to_json(
    h: *const HtsHypergraph,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        json_out(&h.to_json(), out)
    })
}

/// Releases a hypergraph handle.
///
/// # Safety
/// `h` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hts_hypergraph_free(h: *mut HtsHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of vertices, or -1 on a null handle.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hts_vertex_count(h: *const HtsHypergraph) -> i64 {
    match handle(h) {
        Ok(h) => h.vertex_count() as i64,
        Err(_) => -1,
    }
}

/// Number of edges, or -1 on a null handle.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hts_edge_count(h: *const HtsHypergraph) -> i64 {
    match handle(h) {
        Ok(h) => h.edge_count() as i64,
        Err(_) => -1,
    }
}

/// 1 if the hypergraph is a hypertree, 0 if not, -1 on a null handle.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hts_is_hypertree(h: *const HtsHypergraph) -> i32 {
    match handle(h) {
        Ok(h) => h.is_hypertree() as i32,
        Err(_) => -1,
    }
}

/// Matching counts, matching polynomial and its z-reduction as JSON.
///
/// # Safety
/// `h` must be null or a live handle; `out` must point to writable
/// storage. The written string is released with [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_matching_json(
    h: *const HtsHypergraph,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        match matching_polynomial(h) {
            Ok(summary) => json_out(&MatchingJson::from(&summary), out),
            Err(e) => fail(&e),
        }
    })
}

/// Distinct real eigenvalues, per-subtree root data and the spectral radius
/// as JSON. The handle must hold a hypertree.
///
/// # Safety
/// `h` must be null or a live handle; `out` must point to writable
/// storage. The written string is released with [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_spectrum_json(
    h: *const HtsHypergraph,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        match distinct_real_eigenvalues(h) {
            Ok(report) => json_out(&SpectrumJson::from(&report), out),
            Err(e) => fail(&e),
        }
    })
}

/// Spectral radius by NQZ power iteration at tolerance `tol`. Writes the
/// estimate to `lambda_out`.
///
/// # Safety
/// `h` must be null or a live handle; `lambda_out` must be null or point
/// to writable storage.
#[no_mangle]
pub unsafe extern "C" fn hts_spectral_radius_nqz(
    h: *const HtsHypergraph,
    tol: f64,
    lambda_out: *mut f64,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        if lambda_out.is_null() {
            set_last_error("null output pointer");
            return HTS_INVALID;
        }
        match nqz_spectral_radius(h, tol, 1_000_000) {
            Ok(pair) => {
                *lambda_out = pair.lambda;
                HTS_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Spectral radius as the largest real matching-polynomial root, certified
/// to width 10^-12 and reported as f64. The handle must hold a hypertree.
///
/// # Safety
/// `h` must be null or a live handle; `lambda_out` must be null or point
/// to writable storage.
#[no_mangle]
pub unsafe extern "C" fn hts_spectral_radius_exact(
    h: *const HtsHypergraph,
    lambda_out: *mut f64,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        if lambda_out.is_null() {
            set_last_error("null output pointer");
            return HTS_INVALID;
        }
        match spectral_radius_exact(h, &hypertree_spectra::spectrum::default_width()) {
            Ok(iv) => {
                *lambda_out = iv.to_f64();
                HTS_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Exact characteristic polynomial via the resultant oracle, as JSON with
/// the per-sample log. `degree_guard` 0 means the default (500);
/// `timeout_per_point_ms` 0 disables the per-point timeout.
///
/// # Safety
/// `h` must be null or a live handle; `out` must point to writable
/// storage. The written string is released with [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_charpoly_json(
    h: *const HtsHypergraph,
    degree_guard: u64,
    timeout_per_point_ms: u64,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        let config = oracle_config(degree_guard, timeout_per_point_ms);
        match charpoly::charpoly(h, &config) {
            Ok(result) => json_out(
                &hypertree_spectra::report::CharPolyJson::from(&result),
                out,
            ),
            Err(e) => fail(&e),
        }
    })
}

/// Measures the algebraic multiplicity of the spectral radius in the exact
/// characteristic polynomial and compares it with k^(m(k-2)). Returns
/// `HTS_OK` on a match, `HTS_MISMATCH` on a completed run whose measured
/// multiplicity disagrees, and writes the full report JSON either way.
///
/// # Safety
/// `h` must be null or a live handle; `out` must point to writable
/// storage. The written string is released with [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_verify_multiplicity_json(
    h: *const HtsHypergraph,
    degree_guard: u64,
    timeout_per_point_ms: u64,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        let config = oracle_config(degree_guard, timeout_per_point_ms);
        match charpoly::verify_hypertree_multiplicity(h, &config) {
            Ok(report) => {
                let matched = report.matched;
                let code = json_out(&MultiplicityJson::from(&report), out);
                if code != HTS_OK {
                    code
                } else if matched {
                    HTS_OK
                } else {
                    set_last_error("multiplicity mismatch");
                    HTS_MISMATCH
                }
            }
            Err(e) => fail(&e),
        }
    })
}

/// Attaches a pendant edge at vertex `u` and checks that the measured
/// multiplicity grows by the factor k^(k-2). Same code convention as
/// [`hts_verify_multiplicity_json`].
///
/// # Safety
/// `h` must be null or a live handle; `out` must point to writable
/// storage. The written string is released with [`hts_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hts_pendant_growth_json(
    h: *const HtsHypergraph,
    u: usize,
    degree_guard: u64,
    timeout_per_point_ms: u64,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let h = match handle(h) {
            Ok(h) => h,
            Err(c) => return c,
        };
        let config = oracle_config(degree_guard, timeout_per_point_ms);
        match charpoly::pendant_growth_check(h, u, &config) {
            Ok(report) => {
                let matched = report.matched;
                let code = json_out(&PendantGrowthJson::from(&report), out);
                if code != HTS_OK {
                    code
                } else if matched {
                    HTS_OK
                } else {
                    set_last_error("pendant growth mismatch");
                    HTS_MISMATCH
                }
            }
            Err(e) => fail(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn make(json: &str) -> *mut HtsHypergraph {
        let c = CString::new(json).unwrap();
        let mut h: *mut HtsHypergraph = ptr::null_mut();
        let code = unsafe { hts_hypergraph_from_json(c.as_ptr(), &mut h) };
        assert_eq!(code, HTS_OK);
        h
    }

    fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
        unsafe { hts_string_free(s) };
        text
    }

    #[test]
    fn round_trip_and_counts() {
        let h = make(r#"{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#);
        unsafe {
            assert_eq!(hts_vertex_count(h), 5);
            assert_eq!(hts_edge_count(h), 2);
            assert_eq!(hts_is_hypertree(h), 1);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hts_hypergraph_to_json(h, &mut s), HTS_OK);
            let parsed: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(parsed["k"], 3);
            assert_eq!(parsed["n"], 5);
            hts_hypergraph_free(h);
        }
    }

    #[test]
    fn invalid_json_reports_error() {
        let c = CString::new(r#"{"k":3,"n":3,"edges":[[0,1]]}"#).unwrap();
        let mut h: *mut HtsHypergraph = ptr::null_mut();
        let code = unsafe { hts_hypergraph_from_json(c.as_ptr(), &mut h) };
        assert_eq!(code, HTS_INVALID);
        assert!(h.is_null());
        let msg = unsafe { CStr::from_ptr(hts_last_error()) }.to_str().unwrap();
        assert!(!msg.is_empty());
    }

    #[test]
    fn matching_and_spectrum() {
        let h = make(r#"{"k":3,"n":3,"edges":[[0,1,2]]}"#);
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hts_matching_json(h, &mut s), HTS_OK);
            let m: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(m["counts"], serde_json::json!(["1", "1"]));

            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hts_spectrum_json(h, &mut s), HTS_OK);
            let spec: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert!((spec["spectral_radius"]["approx"].as_f64().unwrap() - 1.0).abs() < 1e-9);
            hts_hypergraph_free(h);
        }
    }

    #[test]
    fn spectral_radius_routes_agree() {
        let h = make(r#"{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#);
        unsafe {
            let mut nqz = 0.0;
            let mut exact = 0.0;
            assert_eq!(hts_spectral_radius_nqz(h, 1e-12, &mut nqz), HTS_OK);
            assert_eq!(hts_spectral_radius_exact(h, &mut exact), HTS_OK);
            assert!((nqz - exact).abs() < 1e-8);
            assert!((exact - 2f64.powf(1.0 / 3.0)).abs() < 1e-9);
            hts_hypergraph_free(h);
        }
    }

    #[test]
    fn verify_multiplicity_single_edge() {
        let h = make(r#"{"k":3,"n":3,"edges":[[0,1,2]]}"#);
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hts_verify_multiplicity_json(h, 0, 0, &mut s), HTS_OK);
            let report: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(report["predicted"], "3");
            assert_eq!(report["measured"], "3");
            assert_eq!(report["match"], true);
            hts_hypergraph_free(h);
        }
    }

    #[test]
    fn degree_guard_maps_to_guard_code() {
        let h = make(r#"{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#);
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            // degree is 80, so a guard of 10 must trip
            assert_eq!(hts_charpoly_json(h, 10, 0, &mut s), HTS_GUARD);
            assert!(s.is_null());
            hts_hypergraph_free(h);
        }
    }

    #[test]
    fn null_handles_are_rejected() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hts_matching_json(ptr::null(), &mut s), HTS_INVALID);
            assert_eq!(hts_vertex_count(ptr::null()), -1);
            hts_hypergraph_free(ptr::null_mut());
            hts_string_free(ptr::null_mut());
        }
    }
}
