//! C ABI for `galekit`.
//!
//! Objects are opaque handles created by `gk_*_new`/`gk_*_from_*` and
//! released with the matching `gk_*_free`. Every fallible call returns a
//! [`GkStatus`]; on failure [`gk_last_error`] describes the problem. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`gk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use galekit::alternation::{alt_min, hypergraph_alternation, AltMode, Bijection, SearchBudget};
use galekit::bounds::{bound_report, BoundBudget};
use galekit::coloring::{chromatic_number, multichromatic_number, SolverCaps};
use galekit::family::FamilySpec;
use galekit::gale::{corollary_configuration, verify_auto, verify_exact, verify_sampled};
use galekit::graph::{kneser_graph, Graph};
use galekit::hypergraph::{colorability_defect, Hypergraph};
use galekit::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Capacity = 3,
    Internal = 4,
    NotFound = 5,
}

pub const GK_MODE_ALT: u32 = 0;
pub const GK_MODE_SALT: u32 = 1;

pub const GK_VERIFY_AUTO: u32 = 0;
pub const GK_VERIFY_EXACT: u32 = 1;
pub const GK_VERIFY_SAMPLED: u32 = 2;

/// Opaque hypergraph handle.
pub struct GkHypergraph(Hypergraph);

/// Opaque graph handle.
pub struct GkGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

struct Failure(GkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) | Error::Parse(_) => GkStatus::InvalidInput,
            Error::Capacity(_) => GkStatus::Capacity,
            Error::NotFound(_) => GkStatus::NotFound,
            Error::Invariant(_) => GkStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GkStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(GkStatus::InvalidInput, msg.into())
}

/// Run `body`, turning errors and panics into a status and a stored message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GkStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn hyper<'a>(h: *const GkHypergraph) -> Result<&'a Hypergraph, Failure> {
    h.as_ref().map(|h| &h.0).ok_or_else(|| null("hypergraph"))
}

unsafe fn graph<'a>(g: *const GkGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

fn mode(m: u32) -> Result<AltMode, Failure> {
    match m {
        GK_MODE_ALT => Ok(AltMode::Alt),
        GK_MODE_SALT => Ok(AltMode::Salt),
        other => Err(invalid(format!("unknown mode {other}"))),
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no nul bytes").into_raw()
}

/// The message for the most recent failure on this thread, or NULL. Valid
/// until the next `gk_*` call on the same thread.
#[no_mangle]
pub extern "C" fn gk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a hypergraph from a spec such as `"kneser:5,2"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_from_family(spec: *const c_char, out: *mut *mut GkHypergraph) -> GkStatus {
    guard(|| {
        let spec: FamilySpec = text(spec, "spec")?.parse()?;
        let h = spec.hypergraph()?;
        write(out, Box::into_raw(Box::new(GkHypergraph(h))), "out")
    })
}

/// Parse `{"vertices": [...], "edges": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_from_json(json: *const c_char, out: *mut *mut GkHypergraph) -> GkStatus {
    guard(|| {
        let h = Hypergraph::from_json_str(text(json, "json")?)?;
        write(out, Box::into_raw(Box::new(GkHypergraph(h))), "out")
    })
}

/// # Safety
/// `h` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_free(h: *mut GkHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_counts(h: *const GkHypergraph, vertices: *mut usize, edges: *mut usize) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        write(vertices, h.vertex_count(), "vertices")?;
        write(edges, h.edge_count(), "edges")
    })
}

/// `alt(H,σ)` or `salt(H,σ)`. `sigma` lists vertex indices in order; pass
/// NULL for the identity.
///
/// # Safety
/// `h` must be a live handle; `sigma` must point to `sigma_len` entries
/// unless NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_alternation(
    h: *const GkHypergraph,
    mode_code: u32,
    sigma: *const usize,
    sigma_len: usize,
    out: *mut usize,
) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        let sigma = if sigma.is_null() {
            Bijection::identity(h.vertex_count())
        } else {
            Bijection::new(std::slice::from_raw_parts(sigma, sigma_len).to_vec())?
        };
        if sigma.len() != h.vertex_count() {
            return Err(invalid("sigma length differs from the vertex count"));
        }
        let (value, _) = hypergraph_alternation(h, &sigma, mode(mode_code)?)?;
        write(out, value, "out")
    })
}

/// Minimum of `alt`/`salt` over orderings. `exact` is false when the value
/// comes from local search (then it is an upper bound).
///
/// # Safety
/// `h` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_alt_min(
    h: *const GkHypergraph,
    mode_code: u32,
    seed: u64,
    value: *mut usize,
    exact: *mut bool,
) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        let budget = SearchBudget { seed, ..SearchBudget::default() };
        let m = alt_min(h, mode(mode_code)?, &budget);
        write(value, m.value, "value")?;
        write(exact, m.exact, "exact")
    })
}

/// Colorability defect.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_hypergraph_defect(h: *const GkHypergraph, out: *mut usize) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        if h.vertex_count() > 24 {
            return Err(invalid("colorability defect is limited to 24 vertices"));
        }
        write(out, colorability_defect(h).value, "out")
    })
}

/// The full bound report as JSON; release with [`gk_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_bound_report_json(h: *const GkHypergraph, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        let report = bound_report(h, &BoundBudget::default());
        let json = serde_json::to_string(&report).map_err(|e| Failure(GkStatus::Internal, e.to_string()))?;
        write(out, into_c_string(json), "out")
    })
}

/// Build the moment-curve configuration at the identity ordering and verify
/// it. `ok` is false if a hemisphere misses the property.
///
/// # Safety
/// `h` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_gale_verify(
    h: *const GkHypergraph,
    mode_code: u32,
    verify: u32,
    trials: usize,
    seed: u64,
    dimension: *mut usize,
    ok: *mut bool,
) -> GkStatus {
    guard(|| {
        let h = hyper(h)?;
        let c = corollary_configuration(h, &Bijection::identity(h.vertex_count()), mode(mode_code)?)?;
        let verdict = match verify {
            GK_VERIFY_AUTO => verify_auto(&c.config, &c.property, trials, seed)?,
            GK_VERIFY_EXACT => verify_exact(&c.config, &c.property)?,
            GK_VERIFY_SAMPLED => verify_sampled(&c.config, &c.property, trials, seed)?,
            other => return Err(invalid(format!("unknown verification mode {other}"))),
        };
        write(dimension, c.d, "dimension")?;
        write(ok, verdict.ok, "ok")
    })
}

/// `KG(H)`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_kneser(h: *const GkHypergraph, out: *mut *mut GkGraph) -> GkStatus {
    guard(|| {
        let g = kneser_graph(hyper(h)?)?;
        write(out, Box::into_raw(Box::new(GkGraph(g))), "out")
    })
}

/// Parse `{"vertices": [...], "adjacency": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_from_json(json: *const c_char, out: *mut *mut GkGraph) -> GkStatus {
    guard(|| {
        let g = Graph::from_json_str(text(json, "json")?)?;
        write(out, Box::into_raw(Box::new(GkGraph(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_free(g: *mut GkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_counts(g: *const GkGraph, vertices: *mut usize, edges: *mut usize) -> GkStatus {
    guard(|| {
        let g = graph(g)?;
        write(vertices, g.vertex_count(), "vertices")?;
        write(edges, g.edge_count(), "edges")
    })
}

/// Exact chromatic number; refused above 120 vertices.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_chromatic_number(g: *const GkGraph, out: *mut usize) -> GkStatus {
    guard(|| {
        let c = chromatic_number(graph(g)?, &SolverCaps::default())?;
        write(out, c.count, "out")
    })
}

/// Smallest `n ≤ n_max` with an `m`-fold `n`-coloring.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_multichromatic_number(
    g: *const GkGraph,
    m: usize,
    n_max: usize,
    out: *mut usize,
) -> GkStatus {
    guard(|| {
        let r = multichromatic_number(graph(g)?, m, n_max, &SolverCaps::default())?;
        write(out, r.colors, "out")
    })
}
