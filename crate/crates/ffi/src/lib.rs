//! C ABI over `clusterfit`.
//!
//! Graphs cross the boundary as opaque `CfGraph` handles owned by the caller and
//! released with `cf_graph_free`. Every fallible call returns a `CfStatus`; on
//! failure `cf_last_error` describes what went wrong on the calling thread.
//! Subsets are passed as arrays of vertex ids and returned as 64-bit masks
//! (bit `i` = vertex `i`), which the exhaustive solvers require anyway.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clusterfit::solvers::{decide_with, optimize, SolveConfig};
use clusterfit::{
    build_conductance_instance, build_density_instance, build_editing_instance, measures,
    parse_graph, write_graph, DecisionInstance, Error, Graph, MeasureKind, Optimum, Problem,
    Rational, VertexSubset,
};

/// Opaque graph handle.
pub struct CfGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    NotCubic = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfMeasure {
    Conductance = 0,
    LocalDensity = 1,
    RelativeDensity = 2,
    Editing = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfProblem {
    Conductance = 0,
    LocalDensity = 1,
    RelativeDensity = 2,
    Editing = 3,
    MaxCut = 4,
    MinBisection = 5,
}

/// Reduced fraction, `den > 0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfRational {
    pub num: i64,
    pub den: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfOptimum {
    pub value: CfRational,
    pub witness_mask: u64,
    pub explored: u64,
    pub degenerate: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> CfStatus {
    match err {
        Error::Parse { .. } | Error::InvalidRational(_) => CfStatus::Parse,
        Error::NotCubic => CfStatus::NotCubic,
        Error::VertexOutOfRange { .. } | Error::TooManyVertices { .. } | Error::SubsetMismatch { .. } => {
            CfStatus::OutOfRange
        }
        Error::EmptySubset | Error::FullSubset | Error::InvalidArgument(_) => CfStatus::InvalidArgument,
    }
}

struct Failure(CfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CfStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            CfStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CfStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const CfGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn subset_from(n: usize, members: *const usize, len: usize) -> Result<VertexSubset, Failure> {
    if len == 0 {
        return Ok(VertexSubset::empty(n));
    }
    if members.is_null() {
        return Err(null("members"));
    }
    let ids = std::slice::from_raw_parts(members, len);
    Ok(VertexSubset::from_members(n, ids.iter().copied())?)
}

fn to_c(r: Rational) -> CfRational {
    CfRational { num: r.numer(), den: r.denom() }
}

fn from_c(r: CfRational) -> Result<Rational, Failure> {
    if r.den == 0 {
        return Err(Failure(CfStatus::InvalidArgument, "zero denominator".into()));
    }
    Ok(Rational::new(r.num, r.den))
}

fn optimum_to_c(o: &Optimum) -> CfOptimum {
    CfOptimum {
        value: to_c(o.value),
        witness_mask: o.witness.to_mask().expect("solver witnesses fit a mask"),
        explored: o.explored,
        degenerate: o.degenerate,
    }
}

fn problem_of(p: CfProblem) -> Problem {
    match p {
        CfProblem::Conductance => Problem::Conductance,
        CfProblem::LocalDensity => Problem::LocalDensity,
        CfProblem::RelativeDensity => Problem::RelativeDensity,
        CfProblem::Editing => Problem::Editing,
        CfProblem::MaxCut => Problem::MaxCut,
        CfProblem::MinBisection => Problem::MinBisection,
    }
}

fn boxed(g: Graph) -> *mut CfGraph {
    Box::into_raw(Box::new(CfGraph { inner: g }))
}

/// Message for the most recent failure on this thread, or NULL after a success.
/// The pointer stays valid until the next `cf_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses graph-file text (`p <n> <m>` header, `e <u> <v>` lines).
#[no_mangle]
pub unsafe extern "C" fn cf_graph_parse(text: *const c_char, out: *mut *mut CfGraph) -> CfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(CfStatus::InvalidUtf8, e.to_string()))?;
        *out = boxed(parse_graph(text)?);
        Ok(())
    })
}

/// Builds a graph from `n_edges` pairs laid out as `[u0, v0, u1, v1, ...]`.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_from_edges(
    n: usize,
    pairs: *const usize,
    n_edges: usize,
    out: *mut *mut CfGraph,
) -> CfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if n_edges == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * n_edges)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        *out = boxed(g);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_free(g: *mut CfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_vertex_count(g: *const CfGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.vertex_count())
}

/// Edge count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_edge_count(g: *const CfGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

#[no_mangle]
pub unsafe extern "C" fn cf_graph_is_cubic(g: *const CfGraph) -> bool {
    g.as_ref().is_some_and(|h| h.inner.is_cubic())
}

/// Canonical file text. Release with `cf_string_free`. NULL on a NULL handle.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_write(g: *const CfGraph) -> *mut c_char {
    match g.as_ref() {
        Some(h) => CString::new(write_graph(&h.inner)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn cf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates one measure on the subset given by `len` vertex ids.
#[no_mangle]
pub unsafe extern "C" fn cf_measure(
    g: *const CfGraph,
    kind: CfMeasure,
    members: *const usize,
    len: usize,
    out: *mut CfRational,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = subset_from(g.vertex_count(), members, len)?;
        let kind = match kind {
            CfMeasure::Conductance => MeasureKind::Conductance,
            CfMeasure::LocalDensity => MeasureKind::LocalDensity,
            CfMeasure::RelativeDensity => MeasureKind::RelativeDensity,
            CfMeasure::Editing => MeasureKind::Editing,
        };
        *out = to_c(measures::evaluate(g, &s, kind)?.value);
        Ok(())
    })
}

/// Exact optimum. `k` is the cardinality for density and editing problems and must
/// be 0 otherwise. `workers` of 0 or 1 searches on the calling thread.
#[no_mangle]
pub unsafe extern "C" fn cf_optimize(
    g: *const CfGraph,
    problem: CfProblem,
    k: usize,
    workers: usize,
    out: *mut CfOptimum,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let k = (k != 0).then_some(k);
        let opt = optimize(g, problem_of(problem), k, SolveConfig::parallel(workers))?;
        *out = optimum_to_c(&opt);
        Ok(())
    })
}

/// Decision query: `answer` is set to whether some subset meets `threshold`;
/// `optimum` (may be NULL) receives the optimum the answer was derived from.
#[no_mangle]
pub unsafe extern "C" fn cf_decide(
    g: *const CfGraph,
    problem: CfProblem,
    k: usize,
    threshold: CfRational,
    answer: *mut bool,
    optimum: *mut CfOptimum,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if answer.is_null() {
            return Err(null("answer"));
        }
        let inst = DecisionInstance {
            graph: g,
            problem: problem_of(problem),
            k: (k != 0).then_some(k),
            threshold: from_c(threshold)?,
        };
        let d = decide_with(&inst, SolveConfig::SEQUENTIAL)?;
        *answer = d.answer;
        if let Some(slot) = optimum.as_mut() {
            *slot = optimum_to_c(&d.optimum);
        }
        Ok(())
    })
}

/// Conductance gadget of a cubic source and its threshold. The new handle in
/// `target` must be released with `cf_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn cf_reduce_conductance(
    source: *const CfGraph,
    a: u64,
    target: *mut *mut CfGraph,
    phi: *mut CfRational,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(source)?;
        if target.is_null() || phi.is_null() {
            return Err(null("output"));
        }
        let red = build_conductance_instance(g, a)?;
        *phi = to_c(red.phi);
        *target = boxed(red.target);
        Ok(())
    })
}

/// Relative-density instance parameters; the target graph is the source itself.
#[no_mangle]
pub unsafe extern "C" fn cf_reduce_density(
    source: *const CfGraph,
    a: u64,
    k: *mut usize,
    r: *mut CfRational,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(source)?;
        if k.is_null() || r.is_null() {
            return Err(null("output"));
        }
        let red = build_density_instance(g, a)?;
        *k = red.k;
        *r = to_c(red.r);
        Ok(())
    })
}

/// Single-cluster-editing instance parameters; the target graph is the source itself.
#[no_mangle]
pub unsafe extern "C" fn cf_reduce_editing(
    source: *const CfGraph,
    a: u64,
    k: *mut usize,
    m: *mut CfRational,
) -> CfStatus {
    guard(|| {
        let g = graph_ref(source)?;
        if k.is_null() || m.is_null() {
            return Err(null("output"));
        }
        let red = build_editing_instance(g, a)?;
        *k = red.k;
        *m = to_c(red.m);
        Ok(())
    })
}
