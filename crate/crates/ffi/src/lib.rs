//! C ABI over `bmres`.
//!
//! Objects are opaque handles returned through out-pointers and released
//! with the matching `bm_*_free`. Every fallible call returns a
//! `BmStatus`; on failure `bm_last_error()` describes the problem until the
//! next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bmres::graphs::Graph;
use bmres::homology::betti_table_homology;
use bmres::ideals::{closed_neighborhood_ideal, GeneratorOrder, MonomialIdeal};
use bmres::io::{graph_from_json, ideal_from_json};
use bmres::tree_bm::{pdim_tree, TreeBm};
use bmres::{BettiTable, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    TooLarge = 5,
    NotATree = 6,
    NotPrime = 7,
    Panic = 8,
}

pub struct BmGraph(Graph);
pub struct BmIdeal(MonomialIdeal);
pub struct BmBettiTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BmStatus {
    match e {
        Error::Parse(_) => BmStatus::Parse,
        Error::TooLarge { .. } => BmStatus::TooLarge,
        Error::NotATree => BmStatus::NotATree,
        Error::NotPrime(_) => BmStatus::NotPrime,
        _ => BmStatus::InvalidInput,
    }
}

fn fail(e: Error) -> BmStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn guard(f: impl FnOnce() -> BmStatus) -> BmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic".into());
            BmStatus::Panic
        }
    }
}

fn null(what: &str) -> BmStatus {
    set_error(format!("{what} is null"));
    BmStatus::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, BmStatus> {
    if s.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        BmStatus::InvalidUtf8
    })
}

unsafe fn put<T>(out: *mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

/// Message for the last failed call on this thread, or NULL. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn bm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Graph from `{"n": .., "edges": [[i, j], ..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_graph_from_json(
    json: *const c_char,
    out: *mut *mut BmGraph,
) -> BmStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match graph_from_json(s) {
            Ok(g) => {
                put(out, BmGraph(g));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Graph on `n` vertices from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bm_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BmGraph,
) -> BmStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if edges.is_null() && edge_count > 0 {
            return null("edges");
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0], p[1])).collect();
        match Graph::new(n, &pairs) {
            Ok(g) => {
                put(out, BmGraph(g));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bm_graph_free(g: *mut BmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Closed neighborhood ideal of a graph.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_ideal_from_graph(
    g: *const BmGraph,
    out: *mut *mut BmIdeal,
) -> BmStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return null("argument");
        };
        match closed_neighborhood_ideal(&g.0) {
            Ok(ni) => {
                put(out, BmIdeal(ni.ideal));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Ideal from `{"numvars": n, "generators": [[e1, ..], ..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_ideal_from_json(
    json: *const c_char,
    out: *mut *mut BmIdeal,
) -> BmStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match ideal_from_json(s) {
            Ok(i) => {
                put(out, BmIdeal(i));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of minimal generators; 0 for a null handle.
///
/// # Safety
/// `i` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bm_ideal_generator_count(i: *const BmIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.len())
}

/// # Safety
/// `i` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bm_ideal_free(i: *mut BmIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// Whether the order listing generator indices largest first is
/// bridge-friendly.
///
/// # Safety
/// `perm` must point to `len` values; `i` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bm_is_bridge_friendly(
    i: *const BmIdeal,
    perm: *const usize,
    len: usize,
    out: *mut bool,
) -> BmStatus {
    guard(|| {
        let (Some(i), false, false) = (i.as_ref(), perm.is_null() && len > 0, out.is_null()) else {
            return null("argument");
        };
        let p = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(perm, len).to_vec()
        };
        let order = match GeneratorOrder::from_perm(p) {
            Ok(o) => o,
            Err(e) => return fail(e),
        };
        match bmres::bm::is_bridge_friendly(&i.0, &order) {
            Ok(b) => {
                *out = b;
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Quotient Betti table of NI(T) from critical sets under the tree-lex
/// order with the given root.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_tree(
    t: *const BmGraph,
    root: usize,
    out: *mut *mut BmBettiTable,
) -> BmStatus {
    guard(|| {
        let (Some(t), false) = (t.as_ref(), out.is_null()) else {
            return null("argument");
        };
        if !t.0.is_tree() {
            return fail(Error::NotATree);
        }
        if root >= t.0.n() {
            return fail(Error::BadParams(format!("root {root} out of range")));
        }
        match TreeBm::new(&t.0, root).and_then(|c| c.critical_betti()) {
            Ok(b) => {
                put(out, BmBettiTable(b));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Quotient Betti table over F_p from Taylor-strand homology.
///
/// # Safety
/// `i` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_homology(
    i: *const BmIdeal,
    p: u64,
    out: *mut *mut BmBettiTable,
) -> BmStatus {
    guard(|| {
        let (Some(i), false) = (i.as_ref(), out.is_null()) else {
            return null("argument");
        };
        match betti_table_homology(&i.0, p) {
            Ok(b) => {
                put(out, BmBettiTable(b));
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `β_{i,j}`; 0 for a null handle.
///
/// # Safety
/// `b` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_get(b: *const BmBettiTable, i: usize, j: usize) -> u64 {
    b.as_ref().map_or(0, |b| b.0.get(i, j))
}

/// Projective dimension of the table (largest nonzero row index).
///
/// # Safety
/// `b` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_pdim(b: *const BmBettiTable, out: *mut usize) -> BmStatus {
    guard(|| {
        let (Some(b), false) = (b.as_ref(), out.is_null()) else {
            return null("argument");
        };
        *out = b.0.pdim().unwrap_or(0);
        BmStatus::Ok
    })
}

/// Table as JSON; free with `bm_string_free`. NULL on a null handle.
///
/// # Safety
/// `b` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_to_json(b: *const BmBettiTable) -> *mut c_char {
    match b.as_ref() {
        Some(b) => CString::new(b.0.to_json()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `b` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bm_betti_free(b: *mut BmBettiTable) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// `pdim(R/NI(T))`, which equals the independence number of the tree.
///
/// # Safety
/// `t` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bm_tree_pdim(t: *const BmGraph, out: *mut usize) -> BmStatus {
    guard(|| {
        let (Some(t), false) = (t.as_ref(), out.is_null()) else {
            return null("argument");
        };
        match pdim_tree(&t.0) {
            Ok(p) => {
                *out = p;
                BmStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}
