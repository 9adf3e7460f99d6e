//! C ABI over `spun-core`.
//!
//! Objects cross the boundary as opaque heap handles that the caller frees
//! with the matching `*_free` function. Every fallible call returns a
//! [`SpunStatus`]; on failure a message is available from
//! [`spun_last_error_message`] until the next call on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`spun_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spun::chart::eta_project;
use spun::flat::LinearSystemJson;
use spun::lap::{eta_inverse_lift, l_ap_equations, l_ap_flat};
use spun::rational::{self, RationalVector};
use spun::reduction::{run_reduction_with, PointConfig, ReductionOptions, ReductionReport};
use spun::{AlgebraError, Multivector};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpunStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    DimensionMismatch = 4,
    NotInSubspace = 5,
    ReductionFailed = 6,
    Panic = 7,
}

/// Opaque multivector handle.
pub struct SpunMultivector {
    inner: Multivector,
}

/// Opaque point configuration handle.
pub struct SpunPointConfig {
    inner: PointConfig,
}

/// Opaque reduction report handle.
pub struct SpunReport {
    inner: ReductionReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type FfiResult<T> = Result<T, (SpunStatus, String)>;

fn algebra_status(e: &AlgebraError) -> SpunStatus {
    match e {
        AlgebraError::DimensionMismatch { .. } | AlgebraError::LengthMismatch { .. } => {
            SpunStatus::DimensionMismatch
        }
        AlgebraError::UnsupportedDimension(_) => SpunStatus::InvalidArgument,
        AlgebraError::NotInZ0 | AlgebraError::OddGrade(_) => SpunStatus::NotInSubspace,
        AlgebraError::Parse { .. } => SpunStatus::ParseError,
    }
}

fn from_algebra(e: AlgebraError) -> (SpunStatus, String) {
    (algebra_status(&e), e.to_string())
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> SpunStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpunStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpunStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err((SpunStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SpunStatus::ParseError, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| (SpunStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err((SpunStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err((SpunStatus::NullPointer, "output pointer is null".into()));
    }
    let c = CString::new(s).map_err(|_| (SpunStatus::InvalidArgument, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, v: T) -> FfiResult<()> {
    if out.is_null() {
        return Err((SpunStatus::NullPointer, "output pointer is null".into()));
    }
    *out = v;
    Ok(())
}

fn parse_vec(s: &str, len: usize, what: &str) -> FfiResult<RationalVector> {
    let v = rational::parse_vector(s)
        .map_err(|(i, e)| (SpunStatus::ParseError, format!("{what}: entry {}: {e}", i + 1)))?;
    if v.len() != len {
        return Err((
            SpunStatus::DimensionMismatch,
            format!("{what}: expected {len} entries, got {}", v.len()),
        ));
    }
    Ok(v)
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn spun_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn spun_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"1 + 3/2 e1e2 - e1e4e5"` over `X_dim`.
#[no_mangle]
pub unsafe extern "C" fn spun_multivector_parse(
    dim: u32,
    text: *const c_char,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let src = read_str(text, "text")?;
        let mv = spun::parse_multivector(dim as usize, src).map_err(from_algebra)?;
        put(out, SpunMultivector { inner: mv })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_free(mv: *mut SpunMultivector) {
    if !mv.is_null() {
        drop(Box::from_raw(mv));
    }
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_dim(mv: *const SpunMultivector, out: *mut u32) -> SpunStatus {
    guard(|| {
        let m = handle(mv, "multivector")?;
        put_value(out, m.inner.dim() as u32)
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_to_string(
    mv: *const SpunMultivector,
    out: *mut *mut c_char,
) -> SpunStatus {
    guard(|| {
        let m = handle(mv, "multivector")?;
        put_string(out, m.inner.to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_add(
    a: *const SpunMultivector,
    b: *const SpunMultivector,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let (a, b) = (handle(a, "left operand")?, handle(b, "right operand")?);
        let r = a.inner.checked_add(&b.inner).map_err(from_algebra)?;
        put(out, SpunMultivector { inner: r })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_mul(
    a: *const SpunMultivector,
    b: *const SpunMultivector,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let (a, b) = (handle(a, "left operand")?, handle(b, "right operand")?);
        let r = a.inner.checked_mul(&b.inner).map_err(from_algebra)?;
        put(out, SpunMultivector { inner: r })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_conjugate(
    a: *const SpunMultivector,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let a = handle(a, "operand")?;
        put(out, SpunMultivector { inner: a.inner.conjugate() })
    })
}

/// `N(x) = x conj(x)`.
#[no_mangle]
pub unsafe extern "C" fn spun_multivector_norm(
    a: *const SpunMultivector,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let a = handle(a, "operand")?;
        put(out, SpunMultivector { inner: a.inner.norm() })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_multivector_equal(
    a: *const SpunMultivector,
    b: *const SpunMultivector,
    out: *mut bool,
) -> SpunStatus {
    guard(|| {
        let (a, b) = (handle(a, "left operand")?, handle(b, "right operand")?);
        put_value(out, a.inner == b.inner)
    })
}

/// Chart coordinates of `x / x_1` as comma-separated rationals.
#[no_mangle]
pub unsafe extern "C" fn spun_eta_project(mv: *const SpunMultivector, out: *mut *mut c_char) -> SpunStatus {
    guard(|| {
        let m = handle(mv, "multivector")?;
        let y = eta_project(&m.inner).map_err(|e| match e {
            spun::chart::EtaError::OnH0 => (SpunStatus::InvalidArgument, e.to_string()),
            spun::chart::EtaError::Algebra(a) => from_algebra(a),
        })?;
        put_string(out, rational::format_vector(&y))
    })
}

/// The element of `J_dim` with first coordinate one and chart point `y`
/// (comma-separated rationals, `C(dim+1, 2)` entries).
#[no_mangle]
pub unsafe extern "C" fn spun_eta_inverse_lift(
    dim: u32,
    y: *const c_char,
    out: *mut *mut SpunMultivector,
) -> SpunStatus {
    guard(|| {
        let d = dim as usize;
        let y = parse_vec(read_str(y, "y")?, d * (d + 1) / 2, "y")?;
        let j = eta_inverse_lift(d, &y).map_err(|e| (SpunStatus::InvalidArgument, e.to_string()))?;
        put(out, SpunMultivector { inner: j.value().clone() })
    })
}

/// JSON of the `d` explicit equations of `L_ap`; `consistent` reports
/// whether they cut out the independently constructed flat.
#[no_mangle]
pub unsafe extern "C" fn spun_l_ap_equations_json(
    dim: u32,
    a: *const c_char,
    p: *const c_char,
    out: *mut *mut c_char,
    consistent: *mut bool,
) -> SpunStatus {
    guard(|| {
        let d = dim as usize;
        if !(spun::blade::MIN_DIM..=spun::blade::MAX_DIM).contains(&d) {
            return Err((SpunStatus::InvalidArgument, format!("unsupported dimension {d}")));
        }
        let a = parse_vec(read_str(a, "a")?, d, "a")?;
        let p = parse_vec(read_str(p, "p")?, d, "p")?;
        let sys = l_ap_equations(&a, &p).map_err(from_algebra)?;
        let flat = l_ap_flat(&a, &p).map_err(from_algebra)?;
        let chart = spun::chart::CoordinateChart::new(d);
        let labels = (0..chart.len()).map(|i| chart.label(i)).collect();
        let json = serde_json::to_string(&LinearSystemJson::new(&sys, labels))
            .map_err(|e| (SpunStatus::InvalidArgument, e.to_string()))?;
        if !consistent.is_null() {
            *consistent = sys.solution_set() == flat;
        }
        put_string(out, json)
    })
}

/// Parses `{"dimension": d, "points": [["0","1"], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn spun_point_config_from_json(
    json: *const c_char,
    out: *mut *mut SpunPointConfig,
) -> SpunStatus {
    guard(|| {
        let s = read_str(json, "json")?;
        let c = PointConfig::from_json_str(s).map_err(|e| (SpunStatus::ParseError, e.to_string()))?;
        put(out, SpunPointConfig { inner: c })
    })
}

/// The grid `{0..side-1}^dim`.
#[no_mangle]
pub unsafe extern "C" fn spun_point_config_lattice(
    dim: u32,
    side: u32,
    out: *mut *mut SpunPointConfig,
) -> SpunStatus {
    guard(|| {
        let c = PointConfig::lattice(dim as usize, side as usize)
            .map_err(|e| (SpunStatus::InvalidArgument, e.to_string()))?;
        put(out, SpunPointConfig { inner: c })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_point_config_len(cfg: *const SpunPointConfig, out: *mut usize) -> SpunStatus {
    guard(|| {
        let c = handle(cfg, "point config")?;
        put_value(out, c.inner.len())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_point_config_free(cfg: *mut SpunPointConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Runs the full reduction. `threads == 0` uses the default pool size.
#[no_mangle]
pub unsafe extern "C" fn spun_run_reduction(
    cfg: *const SpunPointConfig,
    seed: u64,
    threads: u32,
    out: *mut *mut SpunReport,
) -> SpunStatus {
    guard(|| {
        let c = handle(cfg, "point config")?;
        let opts = ReductionOptions {
            threads: (threads > 0).then_some(threads as usize),
            ..Default::default()
        };
        let r = run_reduction_with(&c.inner, seed, &opts)
            .map_err(|e| (SpunStatus::ReductionFailed, e.to_string()))?;
        put(out, SpunReport { inner: r })
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_report_to_json(report: *const SpunReport, out: *mut *mut c_char) -> SpunStatus {
    guard(|| {
        let r = handle(report, "report")?;
        put_string(out, r.inner.to_json_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_report_all_pass(report: *const SpunReport, out: *mut bool) -> SpunStatus {
    guard(|| {
        let r = handle(report, "report")?;
        put_value(out, r.inner.all_pass())
    })
}

/// Ordered count of intersecting flat pairs after slicing.
#[no_mangle]
pub unsafe extern "C" fn spun_report_pair_count(report: *const SpunReport, out: *mut u64) -> SpunStatus {
    guard(|| {
        let r = handle(report, "report")?;
        let v = u64::try_from(r.inner.pair_count)
            .map_err(|_| (SpunStatus::InvalidArgument, "pair count exceeds u64".into()))?;
        put_value(out, v)
    })
}

#[no_mangle]
pub unsafe extern "C" fn spun_report_free(report: *mut SpunReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Runs the property suites for `dim` in `2..=6`; `passed` is true when
/// every check holds.
#[no_mangle]
pub unsafe extern "C" fn spun_verify(dim: u32, trials: u32, seed: u64, passed: *mut bool) -> SpunStatus {
    guard(|| {
        let d = dim as usize;
        if !(2..=6).contains(&d) {
            return Err((SpunStatus::InvalidArgument, format!("dimension {d} outside 2..=6")));
        }
        let ok = spun::verify::run_all(d, trials as usize, seed)
            .iter()
            .all(|s| s.ok());
        put_value(passed, ok)
    })
}
