//! C interface to `subdepth`.
//!
//! Every entry point returns an [`SdStatus`]. Results come back through out
//! pointers; objects are opaque handles released with their `*_free`
//! function, and strings handed out by the library are released with
//! [`sd_string_free`]. After a non-`Ok` status, [`sd_last_error`] describes
//! the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use subdepth::depth::{depth_quad, DepthQuad};
use subdepth::exact::IntMatrix;
use subdepth::hopf::HopfData;
use subdepth::pipelines::{DepthReport, Limits, Pipeline, Scenario};
use subdepth::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    LimitExceeded = 5,
    Computation = 6,
    Panic = 7,
}

/// Depths of an inclusion with their stabilization indices. `q` saturates
/// at `UINT64_MAX`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SdDepths {
    pub d_odd: usize,
    pub d_ev: usize,
    pub d_min: usize,
    pub d_h: usize,
    pub n_odd: usize,
    pub n_ev: usize,
    pub n_h: usize,
    pub q: u64,
}

impl From<&DepthQuad> for SdDepths {
    fn from(d: &DepthQuad) -> Self {
        Self {
            d_odd: d.d_odd,
            d_ev: d.d_ev,
            d_min: d.d_min,
            d_h: d.d_h,
            n_odd: d.n_odd,
            n_ev: d.n_ev,
            n_h: d.n_h,
            q: u64::try_from(&d.q).unwrap_or(u64::MAX),
        }
    }
}

/// Nonnegative integer induction matrix.
pub struct SdMatrix(IntMatrix);

/// Result of running one scenario.
pub struct SdReport(DepthReport);

/// Scenario runner with its own limits and character table cache.
pub struct SdPipeline(Pipeline);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => SdStatus::Parse,
        Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => SdStatus::LimitExceeded,
        Error::DimensionMismatch(_)
        | Error::NegativeEntry { .. }
        | Error::NotASubgroup(_)
        | Error::NotInGroup
        | Error::InvalidPermutation(_)
        | Error::UnknownGroup(_)
        | Error::InvalidMatrix(_)
        | Error::Io(_) => SdStatus::InvalidInput,
        _ => SdStatus::Computation,
    }
}

struct Failure(SdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SdStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SdStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(SdStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(SdStatus::InvalidUtf8, e.to_string()))
}

unsafe fn json_arg(s: *const c_char) -> Result<serde_json::Value, Failure> {
    serde_json::from_str(text(s)?).map_err(|e| Error::from(e).into())
}

unsafe fn put<T>(out: *mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(SdStatus::Computation, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failing call on this thread, or NULL. The pointer
/// stays valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Matrix from `rows * cols` row-major entries.
///
/// # Safety
/// `data` must point to `rows * cols` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sd_matrix_new(
    data: *const i64,
    rows: usize,
    cols: usize,
    out: *mut *mut SdMatrix,
) -> SdStatus {
    guard(|| {
        if out.is_null() || (data.is_null() && rows * cols > 0) {
            return Err(null());
        }
        let entries = if rows * cols == 0 { &[][..] } else { std::slice::from_raw_parts(data, rows * cols) };
        let m = IntMatrix::new(rows, cols, entries.iter().map(|&x| x.into()).collect())?;
        put(out, SdMatrix(m));
        Ok(())
    })
}

/// Matrix from JSON: a list of rows, or an object with `rows`, `cols` and
/// `entries`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_matrix_from_json(json: *const c_char, out: *mut *mut SdMatrix) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let m = IntMatrix::from_json(&json_arg(json)?)?;
        put(out, SdMatrix(m));
        Ok(())
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_matrix_free(m: *mut SdMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_matrix_depths(m: *const SdMatrix, out: *mut SdDepths) -> SdStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return Err(null());
        }
        *out = SdDepths::from(&depth_quad(&(*m).0)?);
        Ok(())
    })
}

/// Pipeline with the given limits; `prime_override` 0 means none.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_pipeline_new(
    max_group_order: usize,
    max_tensor_budget: usize,
    prime_override: u64,
    out: *mut *mut SdPipeline,
) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        if max_group_order == 0 || max_tensor_budget == 0 {
            return Err(Failure(SdStatus::InvalidInput, "limits must be positive".into()));
        }
        let limits = Limits {
            max_group_order,
            max_tensor_budget,
            prime_override: (prime_override != 0).then_some(prime_override),
        };
        put(out, SdPipeline(Pipeline::new(limits)));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_pipeline_free(p: *mut SdPipeline) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs the scenario described by `descriptor`, e.g.
/// `{"kind":"pair","group":"S3","subgroup":"A3"}`. A NULL pipeline uses
/// default limits.
///
/// # Safety
/// `p` must be NULL or a live handle, `descriptor` a nul-terminated string
/// and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_scenario_run(
    p: *const SdPipeline,
    descriptor: *const c_char,
    out: *mut *mut SdReport,
) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let s = Scenario::from_json(&json_arg(descriptor)?)?;
        let report = match p.as_ref() {
            Some(p) => p.0.run(&s)?,
            None => Pipeline::default().run(&s)?,
        };
        put(out, SdReport(report));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_report_free(r: *mut SdReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_report_depths(r: *const SdReport, out: *mut SdDepths) -> SdStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return Err(null());
        }
        *out = SdDepths::from(&(*r).0.quad);
        Ok(())
    })
}

/// Number of audited claims in the report and how many of them failed.
///
/// # Safety
/// `r` must be a live handle; `total` and `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_report_claims(r: *const SdReport, total: *mut usize, failed: *mut usize) -> SdStatus {
    guard(|| {
        if r.is_null() || total.is_null() || failed.is_null() {
            return Err(null());
        }
        let claims = &(*r).0.claims;
        *total = claims.len();
        *failed = claims.iter().filter(|c| !c.passed()).count();
        Ok(())
    })
}

/// Full report as JSON; free the result with `sd_string_free`.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_report_to_json(r: *const SdReport, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return Err(null());
        }
        put_string(out, (*r).0.to_json().to_string())
    })
}

/// Checks the Hopf algebra axioms on structure constants given as JSON.
/// `passed` receives 1 or 0; when `report` is not NULL it receives the
/// per-axiom report as JSON.
///
/// # Safety
/// `json` must be a nul-terminated string, `passed` writable and `report`
/// NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn sd_hopf_verify(json: *const c_char, passed: *mut i32, report: *mut *mut c_char) -> SdStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null());
        }
        let v = HopfData::from_json(&json_arg(json)?)?.verify();
        *passed = i32::from(v.passed());
        if !report.is_null() {
            put_string(report, v.to_json().to_string())?;
        }
        Ok(())
    })
}
