//! C ABI over `old_digraphs`.
//!
//! Digraphs live behind an opaque `OldDigraph` handle created by one of the
//! constructors and released with `old_digraph_free`. Every fallible call
//! returns an `OldStatus`; on failure a message is available from
//! `old_last_error_message` on the same thread until the next failing call.
//! Strings returned by the library are freed with `old_string_free`.
//! Panics never cross the boundary; they surface as `OLD_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use old_digraphs::canon::canonical_form;
use old_digraphs::construct::{build_half_graph_digraph, build_tc_rooted_tree};
use old_digraphs::forcing::{forcing_decomposition, is_extremal_structural};
use old_digraphs::io::{parse_edge_list, to_edge_list};
use old_digraphs::{is_extremal, is_locatable, min_old_set, Digraph, GraphError};

/// Opaque digraph handle.
pub struct OldDigraph {
    inner: Digraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OldStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    /// Some two vertices share an in-neighbourhood, so no OLD set exists.
    NotLocatable = 4,
    /// The forcing arcs do not form disjoint cycles covering every vertex.
    NoForcingCycles = 5,
    CapExceeded = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(OldStatus, String);

impl From<GraphError> for Fail {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::CapExceeded { .. } | GraphError::OrderTooLarge { .. } => OldStatus::CapExceeded,
            _ => OldStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> OldStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OldStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            OldStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(OldStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(d: *const OldDigraph) -> Result<&'a Digraph, Fail> {
    d.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn emit(out: *mut *mut OldDigraph, d: Digraph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(Box::into_raw(Box::new(OldDigraph { inner: d })));
    Ok(())
}

/// Message for the last failing call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn old_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Arcless digraph of order `n` (at most 64).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_new(n: usize, out: *mut *mut OldDigraph) -> OldStatus {
    guard(|| emit(out, Digraph::try_new(n)?))
}

/// # Safety
/// `d` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_free(d: *mut OldDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Adds `u → v`; `*added` is false if the arc was already present.
///
/// # Safety
/// `d` must be a live handle; `added` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_add_arc(d: *mut OldDigraph, u: usize, v: usize, added: *mut bool) -> OldStatus {
    guard(|| {
        let h = d.as_mut().ok_or_else(null)?;
        let new = h.inner.try_add_arc(u, v)?;
        if !added.is_null() {
            added.write(new);
        }
        Ok(())
    })
}

/// Parses the edge-list text format (first line `n`, then `u v` per arc).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_parse(text: *const c_char, out: *mut *mut OldDigraph) -> OldStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(OldStatus::ParseError, "input is not UTF-8".into()))?;
        let d = parse_edge_list(text).map_err(|e| Fail(OldStatus::ParseError, e.to_string()))?;
        emit(out, d)
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_order(d: *const OldDigraph, out: *mut usize) -> OldStatus {
    guard(|| write(out, handle(d)?.order()))
}

/// Edge-list text; free the result with `old_string_free`.
///
/// # Safety
/// `d` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_digraph_to_edge_list(d: *const OldDigraph, out: *mut *mut c_char) -> OldStatus {
    guard(|| {
        let text = CString::new(to_edge_list(handle(d)?)).expect("edge lists contain no nul");
        write(out, text.into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn old_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_is_locatable(d: *const OldDigraph, out: *mut bool) -> OldStatus {
    guard(|| write(out, is_locatable(handle(d)?)))
}

/// Exact `γ_OL` and a minimum OLD set as a bitmask (bit `v` set for vertex
/// `v`). Returns `OLD_STATUS_NOT_LOCATABLE` when no OLD set exists.
///
/// # Safety
/// `d` must be a live handle; `gamma` must be valid for writes; `witness`
/// may be NULL.
#[no_mangle]
pub unsafe extern "C" fn old_min_old_set(d: *const OldDigraph, gamma: *mut usize, witness: *mut u64) -> OldStatus {
    guard(|| {
        let r = min_old_set(handle(d)?);
        let (Some(g), Some(w)) = (r.gamma, r.witness) else {
            return Err(Fail(OldStatus::NotLocatable, "two vertices share an in-neighbourhood".into()));
        };
        write(gamma, g)?;
        if !witness.is_null() {
            witness.write(w.bits());
        }
        Ok(())
    })
}

/// Whether `γ_OL = n`, by exhaustive check.
///
/// # Safety
/// `d` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_is_extremal(d: *const OldDigraph, out: *mut bool) -> OldStatus {
    guard(|| write(out, is_extremal(handle(d)?)))
}

/// Whether `γ_OL = n`, from the forcing structure alone.
///
/// # Safety
/// `d` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_is_extremal_structural(d: *const OldDigraph, out: *mut bool) -> OldStatus {
    guard(|| write(out, is_extremal_structural(handle(d)?)))
}

/// Writes `f⁺(v)` for every vertex into `out[0..n]` when the forcing arcs
/// form disjoint cycles covering the vertex set.
///
/// # Safety
/// `d` must be a live handle; `out` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn old_forcing_successors(d: *const OldDigraph, out: *mut usize, len: usize) -> OldStatus {
    guard(|| {
        let d = handle(d)?;
        if out.is_null() {
            return Err(null());
        }
        if len < d.order() {
            return Err(Fail(OldStatus::BufferTooSmall, format!("need {} entries, got {len}", d.order())));
        }
        let f = forcing_decomposition(d)
            .f_plus
            .ok_or_else(|| Fail(OldStatus::NoForcingCycles, "forcing arcs do not span disjoint cycles".into()))?;
        for (i, v) in f.into_iter().enumerate() {
            out.add(i).write(v);
        }
        Ok(())
    })
}

/// Isomorphism invariant: two digraphs of the same order are isomorphic iff
/// their codes are equal. Orders above 10 give `OLD_STATUS_CAP_EXCEEDED`.
///
/// # Safety
/// `d` must be a live handle; `hi` and `lo` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_canonical_form(d: *const OldDigraph, hi: *mut u64, lo: *mut u64) -> OldStatus {
    guard(|| {
        let code = canonical_form(handle(d)?)?.code();
        write(hi, (code >> 64) as u64)?;
        write(lo, code as u64)
    })
}

/// The half-graph `H_k` as a symmetric loop-free digraph of order `2k`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_half_graph(k: usize, out: *mut *mut OldDigraph) -> OldStatus {
    guard(|| emit(out, build_half_graph_digraph(k)?))
}

/// Transitive closure of a rooted tree given by `parents[0..n]`, where a
/// negative entry marks the root; loops are added when `loops` is true.
///
/// # Safety
/// `parents` must be valid for `n` reads; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn old_tc_tree(parents: *const isize, n: usize, loops: bool, out: *mut *mut OldDigraph) -> OldStatus {
    guard(|| {
        if parents.is_null() {
            return Err(null());
        }
        let parent: Vec<Option<usize>> = std::slice::from_raw_parts(parents, n)
            .iter()
            .map(|&p| usize::try_from(p).ok())
            .collect();
        emit(out, build_tc_rooted_tree(&parent, loops)?)
    })
}
