//! C ABI over the `rees` library.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_parse`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`ReesStatus`]; on failure, [`rees_last_error`] gives a message for the
//! calling thread. Outputs are written only on success. Panics never unwind
//! into C: they are caught and reported as `REES_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use rees::closure::Method;
use rees::{Budget, Error, ExponentVector, Graph, MonomialIdeal};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReesStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input or a violated precondition.
    InvalidArgument = 2,
    /// A budget counter ran out.
    Budget = 3,
    /// A degree cap was reached without a witness.
    CapExceeded = 4,
    /// A result does not fit the output type.
    Overflow = 5,
    /// Two independent computations disagreed.
    Inconsistent = 6,
    Panic = 7,
}

/// Normality test selector.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReesMethod {
    Hilbert = 0,
    Powers = 1,
    Both = 2,
}

/// Opaque monomial ideal.
pub struct ReesIdeal(MonomialIdeal);

/// Opaque simple graph or multigraph.
pub struct ReesGraph(Graph);

/// Opaque set of search limits; pass NULL wherever a default budget will do.
pub struct ReesBudget(Budget);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ReesStatus {
    match e {
        Error::Budget { .. } => ReesStatus::Budget,
        Error::CapExceeded(_) => ReesStatus::CapExceeded,
        Error::Overflow(_) => ReesStatus::Overflow,
        Error::Inconsistent(_) | Error::Unbounded | Error::Infeasible => ReesStatus::Inconsistent,
        _ => ReesStatus::InvalidArgument,
    }
}

/// Runs `f`, mapping errors and panics to a status and recording a message.
fn guard(f: impl FnOnce() -> Result<(), ReesStatusError>) -> ReesStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ReesStatus::Ok,
        Ok(Err(ReesStatusError(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ReesStatus::Panic
        }
    }
}

struct ReesStatusError(ReesStatus, String);

impl From<Error> for ReesStatusError {
    fn from(e: Error) -> Self {
        ReesStatusError(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> ReesStatusError {
    ReesStatusError(ReesStatus::NullPointer, format!("{what} is NULL"))
}

fn overflow(what: &str) -> ReesStatusError {
    ReesStatusError(ReesStatus::Overflow, format!("{what} does not fit the output type"))
}

unsafe fn budget_or_default<'a>(b: *const ReesBudget, slot: &'a mut Option<Budget>) -> &'a Budget {
    match b.as_ref() {
        Some(b) => &b.0,
        None => slot.insert(Budget::default()),
    }
}

unsafe fn ideal_ref<'a>(i: *const ReesIdeal) -> Result<&'a MonomialIdeal, ReesStatusError> {
    i.as_ref().map(|i| &i.0).ok_or_else(|| null("ideal"))
}

unsafe fn graph_ref<'a>(g: *const ReesGraph) -> Result<&'a Graph, ReesStatusError> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), ReesStatusError> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

/// Message describing the last failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rees_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rees_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Budget with explicit limits on lattice points, induced cycles and
/// codewords/subcodes.
#[no_mangle]
pub extern "C" fn rees_budget_new(points: u64, cycles: u64, subspaces: u64) -> *mut ReesBudget {
    Box::into_raw(Box::new(ReesBudget(Budget::new(points, cycles, subspaces))))
}

/// # Safety
/// `b` is NULL or a handle from `rees_budget_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rees_budget_free(b: *mut ReesBudget) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Ideal generated by `ngens` monomials in `nvars` variables; `exponents`
/// holds them row by row (`ngens * nvars` entries). Redundant generators
/// are discarded.
///
/// # Safety
/// `exponents` points to `ngens * nvars` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_new(
    nvars: usize,
    ngens: usize,
    exponents: *const u32,
    out: *mut *mut ReesIdeal,
) -> ReesStatus {
    guard(|| {
        if exponents.is_null() {
            return Err(null("exponents"));
        }
        let len = nvars.checked_mul(ngens).ok_or_else(|| overflow("nvars * ngens"))?;
        let flat = std::slice::from_raw_parts(exponents, len);
        let gens = flat
            .chunks(nvars.max(1))
            .take(ngens)
            .map(|row| ExponentVector::new(row.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = MonomialIdeal::new(gens)?;
        write(out, Box::into_raw(Box::new(ReesIdeal(ideal))))
    })
}

/// Parses the text format: one generator per line as exponents.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_parse(text: *const c_char, out: *mut *mut ReesIdeal) -> ReesStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| ReesStatusError(ReesStatus::InvalidArgument, "text is not UTF-8".into()))?;
        let ideal = rees::io::parse_ideal(s)?;
        write(out, Box::into_raw(Box::new(ReesIdeal(ideal))))
    })
}

/// # Safety
/// `i` is NULL or a live ideal handle.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_free(i: *mut ReesIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// Number of variables, or 0 for NULL.
///
/// # Safety
/// `i` is NULL or a live ideal handle.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_num_vars(i: *const ReesIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.nvars())
}

/// Number of minimal generators, or 0 for NULL.
///
/// # Safety
/// `i` is NULL or a live ideal handle.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_num_generators(i: *const ReesIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.len())
}

/// Copies the exponents of generator `k` (canonical order) into `out`,
/// which must hold `rees_ideal_num_vars` entries.
///
/// # Safety
/// `i` is a live handle; `out` has room for `nvars` values.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_generator(i: *const ReesIdeal, k: usize, out: *mut u32) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let g = i.generators().get(k).ok_or_else(|| {
            ReesStatusError(ReesStatus::InvalidArgument, format!("generator index {k} out of range"))
        })?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        ptr::copy_nonoverlapping(g.entries().as_ptr(), out, g.len());
        Ok(())
    })
}

/// Whether the ideal is normal (all powers integrally closed).
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_is_normal(
    i: *const ReesIdeal,
    method: ReesMethod,
    budget: *const ReesBudget,
    out: *mut bool,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        let m = match method {
            ReesMethod::Hilbert => Method::Hilbert,
            ReesMethod::Powers => Method::Powers,
            ReesMethod::Both => Method::Both,
        };
        write(out, rees::closure::is_normal(i, m, b)?.normal)
    })
}

/// Multiplicity e(I) of a zero-dimensional ideal.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_multiplicity(
    i: *const ReesIdeal,
    budget: *const ReesBudget,
    out: *mut u64,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        let e = rees::invariants::multiplicity(i, b)?;
        write(out, e.to_u64().ok_or_else(|| overflow("multiplicity"))?)
    })
}

/// ρ_ic(I) = numerator / denominator for a squarefree ideal.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_ic_resurgence(
    i: *const ReesIdeal,
    budget: *const ReesBudget,
    numerator: *mut u64,
    denominator: *mut u64,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        if numerator.is_null() || denominator.is_null() {
            return Err(null("output pointer"));
        }
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        let r = rees::symbolic::ic_resurgence(i, b)?;
        let n = r.rho_ic.numer().to_u64().ok_or_else(|| overflow("numerator"))?;
        let d = r.rho_ic.denom().to_u64().ok_or_else(|| overflow("denominator"))?;
        write(numerator, n)?;
        write(denominator, d)
    })
}

/// The n-th symbolic power of a squarefree ideal, as a new handle.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_symbolic_power(
    i: *const ReesIdeal,
    n: u32,
    budget: *const ReesBudget,
    out: *mut *mut ReesIdeal,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        let p = rees::symbolic::symbolic_power(i, n, b)?;
        write(out, Box::into_raw(Box::new(ReesIdeal(p))))
    })
}

/// Least n with I^(n) ⊆ I^r.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_containment(
    i: *const ReesIdeal,
    r: u32,
    budget: *const ReesBudget,
    out: *mut u32,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        write(out, rees::symbolic::containment_function(i, r, b)?)
    })
}

/// v-number through monomial witnesses of degree at most `cap`.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_ideal_v_number(
    i: *const ReesIdeal,
    cap: u32,
    budget: *const ReesBudget,
    out: *mut u32,
) -> ReesStatus {
    guard(|| {
        let i = ideal_ref(i)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        write(out, rees::codes::v_number_monomial(i, cap, b)?.v)
    })
}

/// Graph on `nvars` vertices with `nedges` edges given as 0-based pairs in
/// `ends` (`2 * nedges` entries). Loops need `multigraph`.
///
/// # Safety
/// `ends` points to `2 * nedges` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_new(
    nvars: usize,
    nedges: usize,
    ends: *const u32,
    multigraph: bool,
    out: *mut *mut ReesGraph,
) -> ReesStatus {
    guard(|| {
        if ends.is_null() && nedges > 0 {
            return Err(null("ends"));
        }
        let flat = if nedges == 0 { &[][..] } else { std::slice::from_raw_parts(ends, 2 * nedges) };
        let edges: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = if multigraph { Graph::new_multigraph(nvars, &edges)? } else { Graph::new(nvars, &edges)? };
        write(out, Box::into_raw(Box::new(ReesGraph(g))))
    })
}

/// # Safety
/// `g` is NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_free(g: *mut ReesGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Whether the edge ideal is normal (no two induced odd cycles at distance
/// at least two).
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_edge_ideal_normal(
    g: *const ReesGraph,
    budget: *const ReesBudget,
    out: *mut bool,
) -> ReesStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        write(out, rees::graphs::edge_ideal_normal(g, b)?)
    })
}

/// Whether the edge subring of a connected graph is normal.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_edge_subring_normal(
    g: *const ReesGraph,
    budget: *const ReesBudget,
    out: *mut bool,
) -> ReesStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        write(out, rees::graphs::edge_subring_normal(g, b)?)
    })
}

/// W₂ membership of a graph without isolated vertices.
///
/// # Safety
/// Handles are live or (for `budget`) NULL; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_is_w2(g: *const ReesGraph, budget: *const ReesBudget, out: *mut bool) -> ReesStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let mut slot = None;
        let b = budget_or_default(budget, &mut slot);
        write(out, rees::codes::w2_test(g, b)?.in_w2)
    })
}

/// Edge ideal of the graph as a new ideal handle.
///
/// # Safety
/// `g` is live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rees_graph_edge_ideal(g: *const ReesGraph, out: *mut *mut ReesIdeal) -> ReesStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write(out, Box::into_raw(Box::new(ReesIdeal(g.edge_ideal()?))))
    })
}
