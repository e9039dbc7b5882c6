//! C bindings for the certificate library.
//!
//! The surface follows the usual handle-and-status conventions: graphs
//! live behind the opaque [`EcGraph`] pointer, every fallible call
//! returns an [`EcStatus`], results come back through out-pointers, and
//! the message for the most recent failure on the current thread is
//! available from [`ec_last_error_message`]. Strings returned through
//! out-pointers are owned by the caller and must be released with
//! [`ec_string_free`]; graphs with [`ec_graph_free`].
//!
//! The generated header is committed at `include/eigencut.h` and kept in
//! sync by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Display;

use eigencut::bounds::{certify, rho};
use eigencut::connectivity::{edge_connectivity, vertex_connectivity};
use eigencut::graph::Multigraph;
use eigencut::spectral::{lambda2, mu2};

/// Result of every fallible call. Anything other than `Ok` leaves a
/// human-readable explanation in [`ec_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EcStatus {
    /// The call succeeded and the out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input text is not a valid graph.
    ParseError = 3,
    /// The arguments lie outside the operation's domain.
    Domain = 4,
}

/// Opaque handle to an undirected multigraph.
pub struct EcGraph {
    inner: Multigraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: EcStatus, message: impl Display) -> EcStatus {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(text).expect("interior NULs were replaced");
    });
    status
}

/// Message describing the most recent failure on the calling thread, or
/// an empty string if nothing failed yet. The pointer stays valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parse a graph from `.mg` text into a fresh handle.
///
/// On success writes the handle to `out` and returns `Ok`; on failure
/// `out` is untouched.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_parse_mg(
    text: *const c_char,
    out: *mut *mut EcGraph,
) -> EcStatus {
    if text.is_null() || out.is_null() {
        return fail(EcStatus::NullPointer, "text and out must be non-null");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(e) => return fail(EcStatus::InvalidUtf8, e),
    };
    match Multigraph::parse_mg(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(EcGraph { inner }));
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::ParseError, e),
    }
}

/// Release a handle returned by [`ec_graph_parse_mg`]. Null is ignored.
///
/// # Safety
/// `graph` must be a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_free(graph: *mut EcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 when the handle is null.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_order(graph: *const EcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// Serialize the graph back to `.mg` text.
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one
/// pointer; the result must be released with [`ec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ec_graph_to_mg(graph: *const EcGraph, out: *mut *mut c_char) -> EcStatus {
    let Some(g) = graph.as_ref() else {
        return fail(EcStatus::NullPointer, "graph must be non-null");
    };
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    let text = CString::new(g.inner.to_mg()).expect(".mg text has no interior NULs");
    *out = text.into_raw();
    EcStatus::Ok
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn spectral_value(
    graph: *const EcGraph,
    out: *mut f64,
    f: fn(&Multigraph) -> Result<f64, eigencut::spectral::SpectralError>,
) -> EcStatus {
    let Some(g) = graph.as_ref() else {
        return fail(EcStatus::NullPointer, "graph must be non-null");
    };
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    match f(&g.inner) {
        Ok(v) => {
            *out = v;
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::Domain, e),
    }
}

/// Second-largest adjacency eigenvalue. Needs at least 2 vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one f64.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_lambda2(graph: *const EcGraph, out: *mut f64) -> EcStatus {
    spectral_value(graph, out, lambda2)
}

/// Second-smallest Laplacian eigenvalue. Needs at least 2 vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one f64.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_mu2(graph: *const EcGraph, out: *mut f64) -> EcStatus {
    spectral_value(graph, out, mu2)
}

/// Exact vertex connectivity (0 for disconnected graphs).
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one u32.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_vertex_connectivity(
    graph: *const EcGraph,
    out: *mut u32,
) -> EcStatus {
    let Some(g) = graph.as_ref() else {
        return fail(EcStatus::NullPointer, "graph must be non-null");
    };
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    match vertex_connectivity(&g.inner) {
        Ok(k) => {
            *out = k;
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::Domain, e),
    }
}

/// Exact edge connectivity, multiplicities counted (0 if disconnected).
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one u64.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_edge_connectivity(
    graph: *const EcGraph,
    out: *mut u64,
) -> EcStatus {
    let Some(g) = graph.as_ref() else {
        return fail(EcStatus::NullPointer, "graph must be non-null");
    };
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    match edge_connectivity(&g.inner) {
        Ok(k) => {
            *out = k;
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::Domain, e),
    }
}

/// The refined cut-edge eigenvalue threshold rho(d, n) for odd d >= 3
/// and even n >= 6.
///
/// # Safety
/// `out` must be writable storage for one f64.
#[no_mangle]
pub unsafe extern "C" fn ec_rho(d: u32, n: usize, out: *mut f64) -> EcStatus {
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    match rho(d, n) {
        Ok(v) => {
            *out = v;
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::Domain, e),
    }
}

/// Evaluate every bound rule against the graph and return the full
/// certificate as a JSON document.
///
/// Pass `t` as -1 to sweep the parametric rules over their whole range,
/// or a non-negative value to pin them to that t.
///
/// # Safety
/// `graph` must be a live handle and `out` writable storage for one
/// pointer; the result must be released with [`ec_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ec_graph_certify_json(
    graph: *const EcGraph,
    t: i64,
    out: *mut *mut c_char,
) -> EcStatus {
    let Some(g) = graph.as_ref() else {
        return fail(EcStatus::NullPointer, "graph must be non-null");
    };
    if out.is_null() {
        return fail(EcStatus::NullPointer, "out must be non-null");
    }
    if g.inner.n() < 2 {
        return fail(
            EcStatus::Domain,
            format!(
                "certification needs at least 2 vertices, got {}",
                g.inner.n()
            ),
        );
    }
    let t_override = match t {
        t if t < 0 => None,
        t => match u32::try_from(t) {
            Ok(t) => Some(t),
            Err(_) => return fail(EcStatus::Domain, format!("t = {t} is out of range")),
        },
    };
    let cert = certify(&g.inner, t_override);
    let json = serde_json::to_string(&cert).expect("certificates serialize");
    let json = CString::new(json).expect("JSON has no interior NULs");
    *out = json.into_raw();
    EcStatus::Ok
}
