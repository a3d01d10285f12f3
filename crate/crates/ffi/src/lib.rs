//! C ABI over the core library: opaque handles, status codes, and
//! caller-freed strings, so other languages can bind without knowing any
//! Rust types.
//!
//! Conventions:
//! - every fallible call returns an [`HlStatus`] and writes its result
//!   through an out-pointer;
//! - strings returned through out-pointers are NUL-terminated, allocated
//!   by this library, and must be released with [`hl_string_free`];
//! - handles must be released with their matching `_free` function;
//! - `hl_last_error_message` returns the message of the most recent
//!   failure on the calling thread.

use hong_loewy::bounds::Thm31Variant;
use hong_loewy::report::{self, DocFormat, ReportConfig};
use hong_loewy::{charpoly, lattice, oracle, roots};
use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    /// A precondition on the arguments was violated.
    InvalidArgument = 1,
    /// The computation size exceeds a configured cap.
    Refused = 2,
    /// A null pointer was passed where a value was required.
    NullPointer = 3,
    /// Unexpected internal failure; see `hl_last_error_message`.
    Internal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &hong_loewy::Error) -> HlStatus {
    match e {
        hong_loewy::Error::Domain(_) => HlStatus::InvalidArgument,
        hong_loewy::Error::Refused(_) => HlStatus::Refused,
        _ => HlStatus::Internal,
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

/// Run a fallible body with panic containment and error capture.
fn guarded<T>(out: *mut T, body: impl FnOnce() -> hong_loewy::Result<T>) -> HlStatus {
    if out.is_null() {
        set_last_error("null out-pointer".into());
        return HlStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            // SAFETY: out checked non-null; caller guarantees writability
            unsafe { out.write(value) };
            HlStatus::Ok
        }
        Ok(Err(e)) => {
            let status = status_of(&e);
            set_last_error(e.to_string());
            status
        }
        Err(_) => {
            set_last_error("panic across the FFI boundary was contained".into());
            HlStatus::Internal
        }
    }
}

/// Message of the most recent failure on this thread, or NULL. The string
/// must be freed with `hl_string_free`.
#[no_mangle]
pub extern "C" fn hl_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(c) => c.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Free a string allocated by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by a function from this library and not
/// freed before.
#[no_mangle]
pub unsafe extern "C" fn hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opaque handle to a certified `c_n` enclosure.
pub struct HlCnResult {
    inner: roots::CnResult,
}

/// Compute a certified enclosure of `c_n` with relative width `10^-digits`.
/// On success writes a handle that must be freed with `hl_cn_free`.
#[no_mangle]
pub extern "C" fn hl_cn_compute(n: u32, digits: u32, out: *mut *mut HlCnResult) -> HlStatus {
    guarded(out, || {
        let r = roots::compute_cn(n as usize, digits)?;
        Ok(Box::into_raw(Box::new(HlCnResult { inner: r })))
    })
}

/// # Safety
/// `h` must come from `hl_cn_compute` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hl_cn_free(h: *mut HlCnResult) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Lower enclosure endpoint as an exact rational string "p/q".
///
/// # Safety
/// `h` must be a live handle from `hl_cn_compute`.
#[no_mangle]
pub unsafe extern "C" fn hl_cn_lo_str(h: *const HlCnResult) -> *mut c_char {
    if h.is_null() {
        return std::ptr::null_mut();
    }
    let r = &(*h).inner;
    into_c_string(format!("{}/{}", r.cn_lo.numer(), r.cn_lo.denom()))
}

/// Upper enclosure endpoint as an exact rational string "p/q".
///
/// # Safety
/// `h` must be a live handle from `hl_cn_compute`.
#[no_mangle]
pub unsafe extern "C" fn hl_cn_hi_str(h: *const HlCnResult) -> *mut c_char {
    if h.is_null() {
        return std::ptr::null_mut();
    }
    let r = &(*h).inner;
    into_c_string(format!("{}/{}", r.cn_hi.numer(), r.cn_hi.denom()))
}

/// Correctly rounded decimal rendering with `frac_digits` digits after the
/// point, or NULL if the enclosure is too wide for that rounding.
///
/// # Safety
/// `h` must be a live handle from `hl_cn_compute`.
#[no_mangle]
pub unsafe extern "C" fn hl_cn_decimal(h: *const HlCnResult, frac_digits: u32) -> *mut c_char {
    if h.is_null() {
        return std::ptr::null_mut();
    }
    let r = &(*h).inner;
    match report::decimal_from_bounds(&r.cn_lo, &r.cn_hi, frac_digits as usize) {
        Some(s) => into_c_string(s),
        None => std::ptr::null_mut(),
    }
}

fn cfg(digits: u32, precision_bits: u32, strict_variant: bool) -> ReportConfig {
    ReportConfig {
        digits,
        precision_bits,
        variant: if strict_variant {
            Thm31Variant::Strict
        } else {
            Thm31Variant::AsStated
        },
        cache_path: None,
    }
}

/// The table document (CSV, LF line endings) for `n` in `[from, to]`.
#[no_mangle]
pub extern "C" fn hl_table1_csv(
    from: u32,
    to: u32,
    digits: u32,
    precision_bits: u32,
    out: *mut *mut c_char,
) -> HlStatus {
    guarded(out, || {
        let doc = report::emit_table1(
            from as usize,
            to as usize,
            &cfg(digits, precision_bits, false),
            DocFormat::Csv,
        )?;
        Ok(into_c_string(doc))
    })
}

/// Error-figure data with fitted slopes (CSV).
#[no_mangle]
pub extern "C" fn hl_figures_csv(
    from: u32,
    to: u32,
    digits: u32,
    precision_bits: u32,
    out: *mut *mut c_char,
) -> HlStatus {
    guarded(out, || {
        let doc = report::emit_error_figures(
            from as usize,
            to as usize,
            &cfg(digits, precision_bits, false),
            DocFormat::Csv,
        )?;
        Ok(into_c_string(doc))
    })
}

/// One bounds row as a JSON document.
#[no_mangle]
pub extern "C" fn hl_bounds_json(
    n: u32,
    digits: u32,
    precision_bits: u32,
    strict_variant: bool,
    out: *mut *mut c_char,
) -> HlStatus {
    guarded(out, || {
        let doc = report::emit_table1(
            n as usize,
            n as usize,
            &cfg(digits, precision_bits, strict_variant),
            DocFormat::Json,
        )?;
        Ok(into_c_string(doc))
    })
}

/// Exact coefficients of `p_n`, comma-separated decimal, ascending degree.
#[no_mangle]
pub extern "C" fn hl_charpoly_coeffs(n: u32, out: *mut *mut c_char) -> HlStatus {
    guarded(out, || {
        let p = charpoly::charpoly_recurrence(n as usize)?;
        let joined = p
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Ok(into_c_string(joined))
    })
}

/// Brute-force scan of `K_n`. Writes the certified decimal value (at
/// `digits` relative digits) and the argmin bitmask.
///
/// # Safety
/// `out_argmin_bits` and `out_decimal` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hl_oracle_scan(
    n: u32,
    digits: u32,
    shards: u64,
    allow_large: bool,
    out_argmin_bits: *mut u64,
    out_decimal: *mut *mut c_char,
) -> HlStatus {
    if out_argmin_bits.is_null() {
        set_last_error("null out-pointer".into());
        return HlStatus::NullPointer;
    }
    guarded(out_decimal, || {
        let r = oracle::brute_force_cn(n as usize, digits, shards, allow_large)?;
        // checked non-null above
        unsafe { out_argmin_bits.write(r.argmin.bits()) };
        let frac = digits as usize + 4;
        let s = report::decimal_from_bounds(&r.cn_lo, &r.cn_hi, frac)
            .unwrap_or_else(|| report::decimal_fixed(&r.cn_lo, frac));
        Ok(into_c_string(s))
    })
}

/// Divisor-lattice bound check over `{1..n}` with the identity weight.
/// Writes 1 into `out_holds` when the certified bound holds.
#[no_mangle]
pub extern "C" fn hl_lattice_bound_holds(
    n: u64,
    digits: u32,
    precision_bits: u32,
    out_holds: *mut bool,
) -> HlStatus {
    guarded(out_holds, || {
        let r = lattice::gcd_matrix_bound_identity(n, digits, precision_bits)?;
        Ok(r.holds)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    unsafe fn take_string(p: *mut c_char) -> String {
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_string_lossy().into_owned();
        hl_string_free(p);
        s
    }

    #[test]
    fn cn_handle_round_trip() {
        let mut h: *mut HlCnResult = std::ptr::null_mut();
        let status = hl_cn_compute(2, 12, &mut h);
        assert_eq!(status, HlStatus::Ok);
        assert!(!h.is_null());
        unsafe {
            let lo = take_string(hl_cn_lo_str(h));
            assert!(lo.contains('/'), "rational form expected, got {lo}");
            let dec = take_string(hl_cn_decimal(h, 10));
            assert_eq!(dec, "0.3819660113");
            hl_cn_free(h);
        }
    }

    #[test]
    fn invalid_arguments_report_status() {
        let mut h: *mut HlCnResult = std::ptr::null_mut();
        assert_eq!(hl_cn_compute(0, 10, &mut h), HlStatus::InvalidArgument);
        let msg = hl_last_error_message();
        assert!(!msg.is_null());
        let text = unsafe { take_string(msg) };
        assert!(text.contains("n >= 1"), "unexpected message {text}");
        // null out-pointer
        assert_eq!(
            hl_cn_compute(2, 10, std::ptr::null_mut()),
            HlStatus::NullPointer
        );
    }

    #[test]
    fn refused_sizes_report_status() {
        let mut bits = 0u64;
        let mut dec: *mut c_char = std::ptr::null_mut();
        let status = unsafe { hl_oracle_scan(7, 10, 1, false, &mut bits, &mut dec) };
        assert_eq!(status, HlStatus::Refused);
    }

    #[test]
    fn table_document_through_ffi() {
        let mut doc: *mut c_char = std::ptr::null_mut();
        let status = hl_table1_csv(2, 3, 10, 512, &mut doc);
        assert_eq!(status, HlStatus::Ok);
        let text = unsafe { take_string(doc) };
        assert!(text.starts_with("n,c_n,"));
        assert!(text.contains("0.3819660113"));
        assert!(text.contains("0.1980622642"));
    }

    #[test]
    fn figures_document_through_ffi() {
        let mut doc: *mut c_char = std::ptr::null_mut();
        let status = hl_figures_csv(3, 6, 10, 512, &mut doc);
        assert_eq!(status, HlStatus::Ok);
        let text = unsafe { take_string(doc) };
        assert!(text.contains("6.06188e-3"));
        assert!(text.contains("# fitted log-slopes"));
    }

    #[test]
    fn bounds_json_through_ffi() {
        let mut doc: *mut c_char = std::ptr::null_mut();
        let status = hl_bounds_json(5, 10, 512, false, &mut doc);
        assert_eq!(status, HlStatus::Ok);
        let text = unsafe { take_string(doc) };
        assert!(text.contains("\"0.0370683347\""));
        assert!(text.contains("lb_thm41"));
    }

    #[test]
    fn charpoly_coeffs_through_ffi() {
        let mut s: *mut c_char = std::ptr::null_mut();
        assert_eq!(hl_charpoly_coeffs(4, &mut s), HlStatus::Ok);
        let text = unsafe { take_string(s) };
        assert_eq!(text, "1,-8,18,-13,1");
    }

    #[test]
    fn oracle_and_lattice_through_ffi() {
        let mut bits = u64::MAX;
        let mut dec: *mut c_char = std::ptr::null_mut();
        let status = unsafe { hl_oracle_scan(2, 10, 2, false, &mut bits, &mut dec) };
        assert_eq!(status, HlStatus::Ok);
        assert_eq!(bits, 1);
        let text = unsafe { take_string(dec) };
        assert!(text.starts_with("0.38196601"));

        let mut holds = false;
        assert_eq!(hl_lattice_bound_holds(4, 10, 256, &mut holds), HlStatus::Ok);
        assert!(holds);
    }
}
