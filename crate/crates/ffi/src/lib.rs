//! C interface to `inexp`.
//!
//! Ideals and diagrams are opaque handles owned by the caller and released
//! with the matching `_free` function. Every entry point returns an
//! [`InexpStatus`]; on failure [`inexp_last_error`] describes what went
//! wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use inexp::determinacy::determinacy_bound;
use inexp::hilbert::{hs_function, verify_multiplicity_consistency};
use inexp::{compute_standard_basis, parse_polynomial, Diagram, Error, Exponent, IdealPresentation};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InexpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArg = 1,
    /// A generator or variable name did not parse.
    Parse = 2,
    /// Arguments were well-formed but violate a precondition.
    InvalidInput = 3,
    /// No normalizing coordinate change was found.
    NotCertified = 4,
    /// A consistency check failed.
    Falsified = 5,
    /// A panic or other internal failure.
    Internal = 6,
}

/// An ideal of `ℚ[x₁..x_m]` given by generators.
pub struct InexpIdeal {
    inner: IdealPresentation,
}

/// A diagram of initial exponents.
pub struct InexpDiagram {
    inner: Diagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> InexpStatus {
    match e {
        Error::Parse { .. } => InexpStatus::Parse,
        Error::NotCertified(_) => InexpStatus::NotCertified,
        Error::Falsified(_) => InexpStatus::Falsified,
        Error::ReductionBudget(_) | Error::CoefficientGrowth(_) => InexpStatus::Internal,
        _ => InexpStatus::InvalidInput,
    }
}

fn guard<F>(f: F) -> InexpStatus
where
    F: FnOnce() -> Result<(), (InexpStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            InexpStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            InexpStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (InexpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_arg(name: &str) -> (InexpStatus, String) {
    (InexpStatus::NullArg, format!("{name} is null"))
}

unsafe fn read_strings(ptrs: *const *const c_char, len: usize, name: &str) -> Result<Vec<String>, (InexpStatus, String)> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ptrs.is_null() {
        return Err(null_arg(name));
    }
    let slice = std::slice::from_raw_parts(ptrs, len);
    slice
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            if p.is_null() {
                return Err(null_arg(&format!("{name}[{i}]")));
            }
            CStr::from_ptr(p)
                .to_str()
                .map(str::to_owned)
                .map_err(|_| (InexpStatus::Parse, format!("{name}[{i}] is not UTF-8")))
        })
        .collect()
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn inexp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn inexp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse generators over the given variable names.
///
/// # Safety
/// `variables` and `generators` point to arrays of `n_variables` and
/// `n_generators` nul-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_ideal_new(
    variables: *const *const c_char,
    n_variables: usize,
    generators: *const *const c_char,
    n_generators: usize,
    out: *mut *mut InexpIdeal,
) -> InexpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        *out = ptr::null_mut();
        let names = read_strings(variables, n_variables, "variables")?;
        let sources = read_strings(generators, n_generators, "generators")?;
        inexp::parse::check_variables(&names).map_err(lib_err)?;
        if names.is_empty() {
            return Err((InexpStatus::InvalidInput, "no variables".into()));
        }
        let gens = sources
            .iter()
            .map(|s| parse_polynomial(s, &names))
            .collect::<Result<Vec<_>, _>>()
            .map_err(lib_err)?;
        let inner = IdealPresentation::new(names, gens).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(InexpIdeal { inner }));
        Ok(())
    })
}

/// # Safety
/// `ideal` is null or a handle from [`inexp_ideal_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn inexp_ideal_free(ideal: *mut InexpIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of variables of the ideal, 0 for a null handle.
///
/// # Safety
/// `ideal` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn inexp_ideal_dim(ideal: *const InexpIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.inner.dim())
}

/// The diagram of initial exponents of the localized ideal.
///
/// # Safety
/// `ideal` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_compute(ideal: *const InexpIdeal, out: *mut *mut InexpDiagram) -> InexpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        *out = ptr::null_mut();
        let ideal = ideal.as_ref().ok_or_else(|| null_arg("ideal"))?;
        let sb = compute_standard_basis(&ideal.inner).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(InexpDiagram { inner: sb.diagram().clone() }));
        Ok(())
    })
}

/// # Safety
/// `diagram` is null or a handle from [`inexp_diagram_compute`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_free(diagram: *mut InexpDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// Ambient dimension, 0 for a null handle.
///
/// # Safety
/// `diagram` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_dim(diagram: *const InexpDiagram) -> usize {
    diagram.as_ref().map_or(0, |d| d.inner.dim())
}

/// # Safety
/// `diagram` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_vertex_count(diagram: *const InexpDiagram, out: *mut usize) -> InexpStatus {
    guard(|| {
        let d = diagram.as_ref().ok_or_else(|| null_arg("diagram"))?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        *out = d.inner.vertices().len();
        Ok(())
    })
}

/// Copy vertex `index` (in increasing monomial order) into `buf`, which
/// holds `len` entries; `len` must equal the dimension.
///
/// # Safety
/// `diagram` is a live handle, `buf` has room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_vertex(
    diagram: *const InexpDiagram,
    index: usize,
    buf: *mut u32,
    len: usize,
) -> InexpStatus {
    guard(|| {
        let d = diagram.as_ref().ok_or_else(|| null_arg("diagram"))?;
        if buf.is_null() {
            return Err(null_arg("buf"));
        }
        if len != d.inner.dim() {
            return Err((InexpStatus::InvalidInput, format!("buffer length {len}, dimension {}", d.inner.dim())));
        }
        let v = d
            .inner
            .vertices()
            .get(index)
            .ok_or_else(|| (InexpStatus::InvalidInput, format!("vertex index {index} out of range")))?;
        std::slice::from_raw_parts_mut(buf, len).copy_from_slice(v.entries());
        Ok(())
    })
}

/// Whether the exponent `exp[0..len]` lies in the diagram.
///
/// # Safety
/// `diagram` is a live handle, `exp` has `len` readable values, `out` is
/// writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_contains(
    diagram: *const InexpDiagram,
    exp: *const u32,
    len: usize,
    out: *mut bool,
) -> InexpStatus {
    guard(|| {
        let d = diagram.as_ref().ok_or_else(|| null_arg("diagram"))?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        if exp.is_null() && len > 0 {
            return Err(null_arg("exp"));
        }
        if len != d.inner.dim() {
            return Err((InexpStatus::InvalidInput, format!("exponent length {len}, dimension {}", d.inner.dim())));
        }
        let e = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(exp, len).to_vec() };
        *out = d.inner.contains(&Exponent::new(e));
        Ok(())
    })
}

/// `H(η)`: complement points of length at most `eta`.
///
/// # Safety
/// `diagram` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_hs(diagram: *const InexpDiagram, eta: u64, out: *mut u64) -> InexpStatus {
    guard(|| {
        let d = diagram.as_ref().ok_or_else(|| null_arg("diagram"))?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        *out = hs_function(&d.inner, eta);
        Ok(())
    })
}

/// Vertices as a JSON array of arrays. Release with [`inexp_string_free`].
///
/// # Safety
/// `diagram` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_diagram_to_json(diagram: *const InexpDiagram, out: *mut *mut c_char) -> InexpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        *out = ptr::null_mut();
        let d = diagram.as_ref().ok_or_else(|| null_arg("diagram"))?;
        let text = serde_json::to_string(&d.inner).map_err(|e| (InexpStatus::Internal, e.to_string()))?;
        *out = CString::new(text).expect("json has no nul").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn inexp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Multiplicity of an ideal generated by a regular sequence of `k`
/// elements, after checking that all three computations agree.
///
/// # Safety
/// `ideal` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_multiplicity(
    ideal: *const InexpIdeal,
    k: usize,
    seed: u64,
    out: *mut u64,
) -> InexpStatus {
    guard(|| {
        let ideal = ideal.as_ref().ok_or_else(|| null_arg("ideal"))?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        let r = verify_multiplicity_consistency(&ideal.inner, k, seed).map_err(lib_err)?;
        if !r.consistent {
            let (a, b, c) = r.triple();
            return Err((InexpStatus::Falsified, format!("multiplicities disagree: {a}, {b}, {c}")));
        }
        *out = r.via_generic_level;
        Ok(())
    })
}

/// Jet order from which the diagram of the jet ideal equals that of the
/// ideal, for a certified regular sequence of `k` generators.
///
/// # Safety
/// `ideal` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn inexp_determinacy_bound(
    ideal: *const InexpIdeal,
    k: usize,
    seed: u64,
    out: *mut u32,
) -> InexpStatus {
    guard(|| {
        let ideal = ideal.as_ref().ok_or_else(|| null_arg("ideal"))?;
        let out = out.as_mut().ok_or_else(|| null_arg("out"))?;
        *out = determinacy_bound(&ideal.inner, k, seed).map_err(lib_err)?.mu0;
        Ok(())
    })
}
