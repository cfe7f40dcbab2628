//! C ABI over the `cmwild` engine.
//!
//! Rings and family instances are opaque handles built from the same JSON
//! documents the command-line tool reads. Every entry point returns a
//! [`CmwildStatus`]; on failure [`cmwild_last_error`] holds a message for the
//! calling thread. Strings handed out by the library must be released with
//! [`cmwild_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cmwild::family::{self, FamilySpec};
use cmwild::io::{self, InstanceFile, ReportJson, RingFile};
use cmwild::{Error, QuotientRingSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmwildStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, non-homogeneous data, bad sequence, ...
    InvalidInput = 3,
    /// No regular sequence within the search budget, or an undecided test.
    Budget = 4,
    Internal = 5,
}

/// Opaque quotient ring `k[x]/I`.
pub struct CmwildRing {
    inner: QuotientRingSpec,
}

/// Opaque family instance: ring, regular sequence, degree and matrices.
pub struct CmwildInstance {
    inner: FamilySpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> CmwildStatus {
    match e {
        Error::NoRegularSequence(_) => CmwildStatus::Budget,
        Error::Internal(_) => CmwildStatus::Internal,
        _ => CmwildStatus::InvalidInput,
    }
}

fn fail(e: Error) -> CmwildStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> CmwildStatus) -> CmwildStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("panic inside cmwild");
            CmwildStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CmwildStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(CmwildStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        CmwildStatus::InvalidUtf8
    })
}

fn json_error(e: serde_json::Error) -> CmwildStatus {
    fail(Error::Input(e.to_string()))
}

fn hand_out(text: String, out: *mut *mut c_char) -> CmwildStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CmwildStatus::Ok
        }
        Err(_) => {
            set_error("report contained a NUL byte");
            CmwildStatus::Internal
        }
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! engine {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cmwild_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a ring document `{"vars": [...], "relations": [...], "p": 32003}`.
/// A nonzero `p` overrides the characteristic in the document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cmwild_ring_from_json(json: *const c_char, p: u32, out: *mut *mut CmwildRing) -> CmwildStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return CmwildStatus::NullPointer;
        }
        let text = tri!(read_str(json));
        let file: RingFile = tri!(serde_json::from_str(text).map_err(json_error));
        let ring = engine!(io::ring_from_file(&file, (p != 0).then_some(p)));
        *out = Box::into_raw(Box::new(CmwildRing { inner: ring }));
        CmwildStatus::Ok
    })
}

/// # Safety
/// `ring` must come from [`cmwild_ring_from_json`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cmwild_ring_free(ring: *mut CmwildRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Krull dimension of the ring (-1 for the zero ring).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmwild_ring_krull_dimension(ring: *const CmwildRing, out: *mut i64) -> CmwildStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            set_error("null pointer");
            return CmwildStatus::NullPointer;
        }
        *out = (*ring).inner.krull_dimension();
        CmwildStatus::Ok
    })
}

/// `dim_k R_t`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmwild_ring_hilbert_dim(ring: *const CmwildRing, t: i32, out: *mut u64) -> CmwildStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            set_error("null pointer");
            return CmwildStatus::NullPointer;
        }
        *out = (*ring).inner.hilbert_dim(t) as u64;
        CmwildStatus::Ok
    })
}

/// Runs the wildness scan and writes the JSON report to `out_json`.
/// `sequence` is a comma-separated list such as `"x^2,y^2"`, or NULL to
/// search for one with the given seed.
///
/// # Safety
/// `ring` and `out_json` must be valid; `sequence` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn cmwild_check(
    ring: *const CmwildRing,
    sequence: *const c_char,
    seed: u64,
    out_json: *mut *mut c_char,
) -> CmwildStatus {
    guard(|| {
        if ring.is_null() || out_json.is_null() {
            set_error("null pointer");
            return CmwildStatus::NullPointer;
        }
        let ring = &(*ring).inner;
        let y = if sequence.is_null() {
            None
        } else {
            let text = tri!(read_str(sequence));
            Some(engine!(io::parse_sequence(ring, &io::split_list(text))))
        };
        let report = engine!(cmwild::wildness::wildness_certificate(ring, y, None, seed));
        let json = serde_json::to_string(&ReportJson::from_report(&report, seed)).expect("serializable");
        hand_out(json, out_json)
    })
}

/// Parses an instance document (`ring`, `sequence`, `c`, `basis`, `n`,
/// `Ax`, `Ay`). A nonzero `p` overrides the characteristic.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cmwild_instance_from_json(json: *const c_char, p: u32, out: *mut *mut CmwildInstance) -> CmwildStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return CmwildStatus::NullPointer;
        }
        let text = tri!(read_str(json));
        let file: InstanceFile = tri!(serde_json::from_str(text).map_err(json_error));
        let spec = engine!(io::spec_from_instance(&file, (p != 0).then_some(p)));
        *out = Box::into_raw(Box::new(CmwildInstance { inner: spec }));
        CmwildStatus::Ok
    })
}

/// # Safety
/// `inst` must come from [`cmwild_instance_from_json`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cmwild_instance_free(inst: *mut CmwildInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Checks the family member: `mcm` that its top syzygy is maximal
/// Cohen-Macaulay, `shifted_copy` that the degree-`m` part of that syzygy
/// modulo `y` generates `M(-m)`, `koszul_split` that `n` copies of the
/// Koszul complex split off the resolution with the complement in degrees
/// `>= c + i - 1`. Each flag is set to 1 on success, 0 otherwise; any flag
/// pointer may be NULL.
///
/// # Safety
/// `inst` must be valid; non-NULL flag pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cmwild_family_verify(
    inst: *const CmwildInstance,
    mcm: *mut i32,
    shifted_copy: *mut i32,
    koszul_split: *mut i32,
) -> CmwildStatus {
    guard(|| {
        if inst.is_null() {
            set_error("null instance");
            return CmwildStatus::NullPointer;
        }
        let spec = &(*inst).inner;
        let module = engine!(family::mcm_module(spec));
        let l23 = engine!(family::verify_lemma23_with(spec, &module));
        let l25 = engine!(family::verify_lemma25_with(spec, &module.resolution));
        for (p, v) in [(mcm, module.mcm_verified), (shifted_copy, l23.pass), (koszul_split, l25.pass)] {
            if !p.is_null() {
                *p = v as i32;
            }
        }
        CmwildStatus::Ok
    })
}

/// Graded isomorphism test of two family members over the same frame.
/// Writes the certificate as JSON; `Budget` is returned (with the JSON
/// still written) when the outcome is undecided.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cmwild_iso_test(
    a: *const CmwildInstance,
    b: *const CmwildInstance,
    seed: u64,
    out_json: *mut *mut c_char,
) -> CmwildStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out_json.is_null() {
            set_error("null pointer");
            return CmwildStatus::NullPointer;
        }
        let cert = engine!(family::iso_test(&(*a).inner, &(*b).inner, seed));
        let undecided = matches!(cert.outcome, cmwild::intertwine::IsoOutcome::Undecided { .. });
        let json = serde_json::to_string(&cert).expect("serializable");
        let s = hand_out(json, out_json);
        if s == CmwildStatus::Ok && undecided {
            set_error("isomorphism test undecided");
            return CmwildStatus::Budget;
        }
        s
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cmwild_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
