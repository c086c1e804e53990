//! C interface to `eph-core`.
//!
//! Curves live behind the opaque [`EphCurve`] handle, created by the
//! `eph_curve_*`, `eph_hermite_*` and `eph_preimage_curve` constructors and
//! released with [`eph_curve_free`]. Every fallible call returns an
//! [`EphStatus`]; the message of the last failure on the calling thread is
//! available from [`eph_last_error`].
//!
//! Arrays are passed as pointer and length, points packed as `dim`
//! consecutive doubles. Output buffers are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eph_core::basis;
use eph_core::hermite::{self, AngleChoice, HermiteProblem, PlanarTag};
use eph_core::{EphError, EvalMethod, EvalMode, Order, Preimage, Quaternion, ShapeParam, Vector3};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EphStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    OverflowHazard = 4,
    ZeroVector = 5,
    DegenerateDirection = 6,
    SingularControlBlock = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

pub const EPH_METHOD_DIRECT: c_int = 0;
pub const EPH_METHOD_DECASTELJAU: c_int = 1;
pub const EPH_METHOD_WOZNY_CHUDY: c_int = 2;
pub const EPH_METHOD_NEW: c_int = 3;

pub const EPH_MODE_AUTO: c_int = 0;
pub const EPH_MODE_NAIVE: c_int = 1;
pub const EPH_MODE_STABLE: c_int = 2;
pub const EPH_MODE_TAYLOR: c_int = 3;

pub const EPH_TAG_PP: c_int = 0;
pub const EPH_TAG_PM: c_int = 1;
pub const EPH_TAG_MP: c_int = 2;
pub const EPH_TAG_MM: c_int = 3;

/// Opaque curve handle.
pub struct EphCurve(eph_core::EphCurve);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(EphStatus, String);

impl From<EphError> for Failure {
    fn from(e: EphError) -> Self {
        let status = match e {
            EphError::Domain { .. } => EphStatus::Domain,
            EphError::OverflowHazard(_) => EphStatus::OverflowHazard,
            EphError::ZeroVector(_) => EphStatus::ZeroVector,
            EphError::DegenerateDirection(_) => EphStatus::DegenerateDirection,
            EphError::SingularControlBlock => EphStatus::SingularControlBlock,
            EphError::Invalid { .. } => EphStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(EphStatus::InvalidArgument, msg.into())
}

fn null(name: &str) -> Failure {
    Failure(EphStatus::NullPointer, format!("{name} is null"))
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, recording the message of a failure or panic.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> EphStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EphStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EphStatus::Panic
        }
    }
}

unsafe fn slice<'a>(p: *const f64, n: usize, name: &str) -> Result<&'a [f64], Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn slice_mut<'a>(p: *mut f64, n: usize, name: &str) -> Result<&'a mut [f64], Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts_mut(p, n))
}

unsafe fn curve_ref<'a>(h: *const EphCurve) -> Result<&'a eph_core::EphCurve, Failure> {
    h.as_ref().map(|c| &c.0).ok_or_else(|| null("curve"))
}

unsafe fn put_curve(out: *mut *mut EphCurve, c: eph_core::EphCurve) {
    *out = Box::into_raw(Box::new(EphCurve(c)));
}

fn order(m: c_int) -> Result<Order, Failure> {
    u8::try_from(m)
        .ok()
        .and_then(|m| Order::try_from(m).ok())
        .ok_or_else(|| invalid(format!("invalid m: must be 1 or 2, got {m}")))
}

fn method(code: c_int) -> Result<EvalMethod, Failure> {
    match code {
        EPH_METHOD_DIRECT => Ok(EvalMethod::Direct),
        EPH_METHOD_DECASTELJAU => Ok(EvalMethod::DeCasteljau),
        EPH_METHOD_WOZNY_CHUDY => Ok(EvalMethod::WoznyChudy),
        EPH_METHOD_NEW => Ok(EvalMethod::NewProposal),
        _ => Err(invalid(format!("invalid method code {code}"))),
    }
}

fn mode(code: c_int) -> Result<EvalMode, Failure> {
    match code {
        EPH_MODE_AUTO => Ok(EvalMode::AUTO),
        EPH_MODE_NAIVE => Ok(EvalMode::Naive),
        EPH_MODE_STABLE => Ok(EvalMode::StableLargeOmega),
        EPH_MODE_TAYLOR => Ok(EvalMode::Taylor5),
        _ => Err(invalid(format!("invalid mode code {code}"))),
    }
}

fn tag(code: c_int) -> Result<PlanarTag, Failure> {
    match code {
        EPH_TAG_PP => Ok(PlanarTag::PlusPlus),
        EPH_TAG_PM => Ok(PlanarTag::PlusMinus),
        EPH_TAG_MP => Ok(PlanarTag::MinusPlus),
        EPH_TAG_MM => Ok(PlanarTag::MinusMinus),
        _ => Err(invalid(format!("invalid tag code {code}"))),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn eph_status_str(status: EphStatus) -> *const c_char {
    let s: &'static CStr = match status {
        EphStatus::Ok => c"ok",
        EphStatus::NullPointer => c"null pointer",
        EphStatus::InvalidArgument => c"invalid argument",
        EphStatus::Domain => c"parameter out of domain",
        EphStatus::OverflowHazard => c"naive evaluation overflows",
        EphStatus::ZeroVector => c"zero vector",
        EphStatus::DegenerateDirection => c"degenerate direction",
        EphStatus::SingularControlBlock => c"singular control block",
        EphStatus::BufferTooSmall => c"buffer too small",
        EphStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failure on this thread. Valid until the next failing
/// call on the same thread; empty if nothing failed yet.
#[no_mangle]
pub extern "C" fn eph_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Curve of order `m` with `2m + 2` control points of dimension `dim`
/// (2 or 3), packed in `points`.
///
/// # Safety
/// `points` must hold `n_values` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_new(
    m: c_int,
    omega: f64,
    dim: usize,
    points: *const f64,
    n_values: usize,
    out: *mut *mut EphCurve,
) -> EphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let order = order(m)?;
        let w = ShapeParam::new(omega)?;
        if dim != 2 && dim != 3 {
            return Err(invalid(format!("invalid dim: must be 2 or 3, got {dim}")));
        }
        let v = slice(points, n_values, "points")?;
        if n_values != dim * order.n_ctrl() {
            return Err(invalid(format!(
                "invalid points: expected {} values, got {n_values}",
                dim * order.n_ctrl()
            )));
        }
        let pts: Vec<Vec<f64>> = v.chunks(dim).map(<[f64]>::to_vec).collect();
        put_curve(out, eph_core::EphCurve::new(order, w, dim, &pts)?);
        Ok(())
    })
}

/// Curve from its JSON form `{"m", "omega", "dim", "control_points"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_from_json(
    json: *const c_char,
    out: *mut *mut EphCurve,
) -> EphStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| invalid(format!("invalid json: {e}")))?;
        let c =
            eph_core::EphCurve::from_json(s).map_err(|e| invalid(format!("invalid json: {e}")))?;
        put_curve(out, c);
        Ok(())
    })
}

/// Writes the JSON form, NUL-terminated, into `buf`. `needed` receives the
/// required capacity including the NUL; with a short buffer nothing is
/// written and [`EphStatus::BufferTooSmall`] is returned.
///
/// # Safety
/// `curve` must be a live handle, `buf` writable for `cap` bytes (may be null
/// when `cap` is 0), `needed` writable or null.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_to_json(
    curve: *const EphCurve,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> EphStatus {
    guard(|| {
        let json = curve_ref(curve)?.to_json();
        let n = json.len() + 1;
        if let Some(needed) = needed.as_mut() {
            *needed = n;
        }
        if cap < n {
            return Err(Failure(
                EphStatus::BufferTooSmall,
                format!("need {n} bytes, got {cap}"),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(json.as_ptr().cast::<c_char>(), buf, json.len());
        *buf.add(json.len()) = 0;
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `curve` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_free(curve: *mut EphCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Order m of the curve, 0 for a null handle.
///
/// # Safety
/// `curve` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_order(curve: *const EphCurve) -> c_int {
    curve.as_ref().map_or(0, |c| c.0.order().m() as c_int)
}

/// # Safety
/// `curve` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_dim(curve: *const EphCurve) -> usize {
    curve.as_ref().map_or(0, |c| c.0.dim())
}

/// # Safety
/// `curve` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_omega(curve: *const EphCurve) -> f64 {
    curve.as_ref().map_or(f64::NAN, |c| c.0.omega().get())
}

/// Copies the `(2m + 2) * dim` control point coordinates into `out`.
///
/// # Safety
/// `curve` must be a live handle and `out` writable for `cap` doubles.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_control_points(
    curve: *const EphCurve,
    out: *mut f64,
    cap: usize,
) -> EphStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let flat: Vec<f64> = c.control_points().concat();
        if cap < flat.len() {
            return Err(Failure(
                EphStatus::BufferTooSmall,
                format!("need {} values, got {cap}", flat.len()),
            ));
        }
        slice_mut(out, flat.len(), "out")?.copy_from_slice(&flat);
        Ok(())
    })
}

/// `r(t)` into `out[0..dim]`.
///
/// # Safety
/// `curve` must be a live handle and `out` writable for `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_eval(
    curve: *const EphCurve,
    t: f64,
    method_code: c_int,
    mode_code: c_int,
    out: *mut f64,
) -> EphStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let p = eph_core::eval::evaluate(c, t, method(method_code)?, mode(mode_code)?)?;
        slice_mut(out, c.dim(), "out")?.copy_from_slice(&p);
        Ok(())
    })
}

/// `r(k/(n-1))`, k = 0..n, packed into `out[0..n*dim]`.
///
/// # Safety
/// `curve` must be a live handle and `out` writable for `n * dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_eval_grid(
    curve: *const EphCurve,
    n: usize,
    method_code: c_int,
    mode_code: c_int,
    out: *mut f64,
) -> EphStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let rows = eph_core::eval::evaluate_grid(c, n, method(method_code)?, mode(mode_code)?)?;
        let dst = slice_mut(out, n * c.dim(), "out")?;
        for (chunk, (_, p)) in dst.chunks_mut(c.dim()).zip(rows) {
            chunk.copy_from_slice(&p);
        }
        Ok(())
    })
}

/// `r'(t)` into `out[0..dim]`.
///
/// # Safety
/// `curve` must be a live handle and `out` writable for `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn eph_curve_derivative(
    curve: *const EphCurve,
    t: f64,
    out: *mut f64,
) -> EphStatus {
    guard(|| {
        let c = curve_ref(curve)?;
        let d = c.derivative(t)?;
        slice_mut(out, c.dim(), "out")?.copy_from_slice(&d);
        Ok(())
    })
}

/// The `2m + 2` values `Φ_{i,m}(t)` into `out`.
///
/// # Safety
/// `out` must be writable for `2m + 2` doubles.
#[no_mangle]
pub unsafe extern "C" fn eph_basis_phi(
    m: c_int,
    omega: f64,
    t: f64,
    mode_code: c_int,
    out: *mut f64,
) -> EphStatus {
    guard(|| {
        let order = order(m)?;
        let p = basis::phi(order, ShapeParam::new(omega)?, t, mode(mode_code)?)?;
        slice_mut(out, p.len(), "out")?.copy_from_slice(&p);
        Ok(())
    })
}

unsafe fn read_vec(p: *const f64, dim: usize, name: &str) -> Result<Vector3, Failure> {
    let v = slice(p, dim, name)?;
    Ok(Vector3::new(v[0], v[1], if dim == 3 { v[2] } else { 0.0 }))
}

unsafe fn read_problem(
    dim: usize,
    r0: *const f64,
    r_end: *const f64,
    di: *const f64,
    df: *const f64,
    omega: f64,
) -> Result<HermiteProblem, Failure> {
    Ok(HermiteProblem::new(
        read_vec(r0, dim, "r0")?,
        read_vec(r_end, dim, "r_end")?,
        read_vec(di, dim, "di")?,
        read_vec(df, dim, "df")?,
        ShapeParam::new(omega)?,
    ))
}

/// Planar C¹ Hermite interpolant of order 2. All vectors have 2 entries; the
/// resulting curve has dim 2.
///
/// # Safety
/// Every vector must hold 2 doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eph_hermite_planar(
    r0: *const f64,
    r_end: *const f64,
    di: *const f64,
    df: *const f64,
    omega: f64,
    tag_code: c_int,
    out: *mut *mut EphCurve,
) -> EphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = read_problem(2, r0, r_end, di, df, omega)?;
        put_curve(out, hermite::solve_planar(&p, tag(tag_code)?)?.curve);
        Ok(())
    })
}

/// Spatial C¹ Hermite interpolant of order 2 with free angles
/// `eta0, eta1, eta2`. All vectors have 3 entries.
///
/// # Safety
/// Every vector must hold 3 doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eph_hermite_spatial(
    r0: *const f64,
    r_end: *const f64,
    di: *const f64,
    df: *const f64,
    omega: f64,
    eta0: f64,
    eta1: f64,
    eta2: f64,
    out: *mut *mut EphCurve,
) -> EphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = read_problem(3, r0, r_end, di, df, omega)?;
        let angles = AngleChoice::Explicit { eta0, eta1, eta2 };
        put_curve(out, hermite::solve_spatial(&p, angles)?.curve);
        Ok(())
    })
}

unsafe fn read_preimage(m: c_int, omega: f64, coeffs: *const f64) -> Result<Preimage, Failure> {
    let order = order(m)?;
    let v = slice(coeffs, 4 * (order.m() + 1), "coeffs")?;
    let qs = v
        .chunks(4)
        .map(|q| Quaternion::new(q[0], q[1], q[2], q[3]))
        .collect();
    Ok(Preimage::new(order, ShapeParam::new(omega)?, qs)?)
}

/// PH curve with hodograph `A i A*`, where the `m + 1` quaternion
/// coefficients of `A` are packed as `(w, x, y, z)` in `coeffs`, starting
/// at the point `r0` (3 entries).
///
/// # Safety
/// `coeffs` must hold `4(m + 1)` doubles, `r0` 3 doubles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eph_preimage_curve(
    m: c_int,
    omega: f64,
    coeffs: *const f64,
    r0: *const f64,
    out: *mut *mut EphCurve,
) -> EphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = read_preimage(m, omega, coeffs)?;
        put_curve(out, p.to_curve(read_vec(r0, 3, "r0")?));
        Ok(())
    })
}

/// Arc length `s(t)` of the PH curve of the preimage, in closed form.
///
/// # Safety
/// `coeffs` must hold `4(m + 1)` doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn eph_preimage_arc_length(
    m: c_int,
    omega: f64,
    coeffs: *const f64,
    t: f64,
    out: *mut f64,
) -> EphStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = read_preimage(m, omega, coeffs)?;
        *out = p.arc_length_coeffs().eval(t, EvalMode::AUTO)?;
        Ok(())
    })
}
