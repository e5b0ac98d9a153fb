//! C ABI over `chaincorr`.
//!
//! Chains and states are opaque heap handles created by `cc_*_new`-style
//! functions and released with the matching `cc_*_free`. Every fallible
//! call returns a `CcStatus`; on failure `cc_last_error_message` describes
//! what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chaincorr::chain::{transition_amplitude, ChainSpec};
use chaincorr::channel::{evolve_at_time, evolve_pair};
use chaincorr::correlations::{discord_one_way, full_report_x, Side};
use chaincorr::states::{family_state, XState};
use chaincorr::Error;
use num_complex::Complex64;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An argument lies outside its domain (site index, |f| > 1, ...).
    Domain = 2,
    /// The request exceeds a size limit.
    Capacity = 3,
    /// An iterative computation did not converge.
    Computation = 4,
    /// A result failed an internal consistency check.
    Consistency = 5,
    /// A string argument was not valid UTF-8.
    InvalidString = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// Which qubit a one-way discord measures.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcSide {
    /// The chain-side qubit.
    A = 0,
    /// The detached qubit.
    B = 1,
}

/// Opaque chain description.
pub struct CcChain {
    spec: ChainSpec,
}

/// Opaque two-qubit X state.
pub struct CcXState {
    state: XState,
}

/// Plain copy of an X state's entries.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CcXStateData {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub c14_re: f64,
    pub c14_im: f64,
    pub c23_re: f64,
    pub c23_im: f64,
}

/// Every correlation measure of one state, in bits. `_ab` fields measure
/// the detached qubit, `_ba` fields the chain-side one.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CcReport {
    pub entropy_total: f64,
    pub entropy_a: f64,
    pub entropy_b: f64,
    pub mutual_info: f64,
    pub classical_ab: f64,
    pub classical_ba: f64,
    pub discord_ab: f64,
    pub discord_ba: f64,
    pub discord_two_way: f64,
    pub concurrence: f64,
    pub eof: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(err: &Error) -> CcStatus {
    match err {
        Error::Domain(_) => CcStatus::Domain,
        Error::Capacity { .. } => CcStatus::Capacity,
        Error::Computation { .. } => CcStatus::Computation,
        Error::Consistency(_) => CcStatus::Consistency,
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (CcStatus, String)>) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            CcStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("panic inside chaincorr");
            CcStatus::Panic
        }
    }
}

fn lib(err: Error) -> (CcStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (CcStatus, String) {
    (CcStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CcStatus, String)> {
    // SAFETY: the caller passes either NULL or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (CcStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-NULL and, by contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn boxed_state(state: XState) -> *mut CcXState {
    Box::into_raw(Box::new(CcXState { state }))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library from the
/// same thread.
#[no_mangle]
pub extern "C" fn cc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a chain of `n_sites` spins with coupling `coupling` and field
/// `field`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_chain_new(n_sites: usize, coupling: f64, field: f64, out: *mut *mut CcChain) -> CcStatus {
    guard(|| {
        let spec = ChainSpec::new(n_sites, coupling, field).map_err(lib)?;
        unsafe { write(out, Box::into_raw(Box::new(CcChain { spec })), "out") }
    })
}

/// # Safety
/// `chain` must be NULL or a handle from `cc_chain_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_chain_free(chain: *mut CcChain) {
    if !chain.is_null() {
        // SAFETY: created by Box::into_raw in cc_chain_new.
        drop(unsafe { Box::from_raw(chain) });
    }
}

/// Transition amplitude f_r(t) from site 1 to site `r` (1-based) at time `t`.
///
/// # Safety
/// `chain` must be a live handle; `re` and `im` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cc_amplitude(chain: *const CcChain, r: usize, t: f64, re: *mut f64, im: *mut f64) -> CcStatus {
    guard(|| {
        let chain = unsafe { deref(chain, "chain") }?;
        if re.is_null() || im.is_null() {
            return Err(null("output"));
        }
        let f = transition_amplitude(&chain.spec, r, t).map_err(lib)?.value();
        unsafe {
            write(re, f.re, "re")?;
            write(im, f.im, "im")
        }
    })
}

/// Creates an X state from its entries; fails with `Domain` when they do
/// not form a density matrix.
///
/// # Safety
/// `data` must point to a readable `CcXStateData`; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_xstate_new(data: *const CcXStateData, out: *mut *mut CcXState) -> CcStatus {
    guard(|| {
        let d = unsafe { deref(data, "data") }?;
        let state = XState::new(
            d.p1,
            d.p2,
            d.p3,
            d.p4,
            Complex64::new(d.c14_re, d.c14_im),
            Complex64::new(d.c23_re, d.c23_im),
        )
        .map_err(lib)?;
        unsafe { write(out, boxed_state(state), "out") }
    })
}

/// Creates a family member from text such as "werner:0.7" or
/// "mmm:0.53,0.34,0.035" (families pure, werner, mdms-p, mdms-r, mmm).
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writing
/// one pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_xstate_family(spec: *const c_char, out: *mut *mut CcXState) -> CcStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        // SAFETY: non-NULL and NUL-terminated by contract.
        let text = unsafe { CStr::from_ptr(spec) }
            .to_str()
            .map_err(|_| (CcStatus::InvalidString, "spec is not UTF-8".to_string()))?;
        let state = family_state(text).map_err(lib)?;
        unsafe { write(out, boxed_state(state), "out") }
    })
}

/// # Safety
/// `state` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_xstate_free(state: *mut CcXState) {
    if !state.is_null() {
        // SAFETY: created by Box::into_raw in boxed_state.
        drop(unsafe { Box::from_raw(state) });
    }
}

/// Copies the entries of a state.
///
/// # Safety
/// `state` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cc_xstate_get(state: *const CcXState, out: *mut CcXStateData) -> CcStatus {
    guard(|| {
        let x = unsafe { deref(state, "state") }?.state;
        let data = CcXStateData {
            p1: x.p1,
            p2: x.p2,
            p3: x.p3,
            p4: x.p4,
            c14_re: x.c14.re,
            c14_im: x.c14.im,
            c23_re: x.c23.re,
            c23_im: x.c23.im,
        };
        unsafe { write(out, data, "out") }
    })
}

/// Sends the chain-side qubit through the channel with amplitude
/// f = f_re + i f_im (|f| ≤ 1) and returns a new state.
///
/// # Safety
/// `state` must be a live handle; `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_evolve_pair(state: *const CcXState, f_re: f64, f_im: f64, out: *mut *mut CcXState) -> CcStatus {
    guard(|| {
        let x = unsafe { deref(state, "state") }?;
        let y = evolve_pair(&x.state, Complex64::new(f_re, f_im)).map_err(lib)?;
        unsafe { write(out, boxed_state(y), "out") }
    })
}

/// State of pair (r, 0) at time `t` when the chain-side qubit starts on
/// site 1.
///
/// # Safety
/// `chain` and `state` must be live handles; `out` must be valid for
/// writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_evolve_at_time(
    chain: *const CcChain,
    state: *const CcXState,
    r: usize,
    t: f64,
    out: *mut *mut CcXState,
) -> CcStatus {
    guard(|| {
        let chain = unsafe { deref(chain, "chain") }?;
        let x = unsafe { deref(state, "state") }?;
        let y = evolve_at_time(&chain.spec, &x.state, r, t).map_err(lib)?;
        unsafe { write(out, boxed_state(y), "out") }
    })
}

/// All correlation measures of a state.
///
/// # Safety
/// `state` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cc_report(state: *const CcXState, out: *mut CcReport) -> CcStatus {
    guard(|| {
        let x = unsafe { deref(state, "state") }?;
        let r = full_report_x(&x.state).map_err(lib)?;
        let report = CcReport {
            entropy_total: r.entropy_total,
            entropy_a: r.entropy_a,
            entropy_b: r.entropy_b,
            mutual_info: r.mutual_info,
            classical_ab: r.classical_ab,
            classical_ba: r.classical_ba,
            discord_ab: r.discord_ab,
            discord_ba: r.discord_ba,
            discord_two_way: r.discord_two_way,
            concurrence: r.concurrence,
            eof: r.eof,
        };
        unsafe { write(out, report, "out") }
    })
}

/// One-way discord with a projective measurement on `measured`.
///
/// # Safety
/// `state` must be a live handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn cc_discord_one_way(state: *const CcXState, measured: CcSide, out: *mut f64) -> CcStatus {
    guard(|| {
        let x = unsafe { deref(state, "state") }?;
        let side = match measured {
            CcSide::A => Side::A,
            CcSide::B => Side::B,
        };
        let d = discord_one_way(&x.state.to_dense(), side).map_err(lib)?;
        unsafe { write(out, d, "out") }
    })
}
