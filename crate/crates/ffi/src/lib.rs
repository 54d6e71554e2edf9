//! C ABI over `pfaffian-ideals`.
//!
//! Every function returns a [`PfiStatus`]. On failure a message is kept for
//! the calling thread and can be read with [`pfi_last_error_message`].
//! Strings handed out by the library must be released with
//! [`pfi_string_free`]; specs with [`pfi_spec_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pfaffian_ideals::cli::{self, Command, SpecArgs};
use pfaffian_ideals::complex::enumerate_facets;
use pfaffian_ideals::ideals::{reduce_cogenerator, CogeneratorSpec};
use pfaffian_ideals::json;
use pfaffian_ideals::multiplicity::multiplicity;
use pfaffian_ideals::pfaffian::IndexTuple;
use pfaffian_ideals::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Precondition = 3,
    LimitExceeded = 4,
    Violation = 5,
    Internal = 6,
}

/// Opaque cogenerator spec `(alpha, n)`.
pub struct PfiSpec {
    inner: CogeneratorSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> PfiStatus {
    match e {
        Error::Precondition(_) => PfiStatus::Precondition,
        Error::LimitExceeded { .. } | Error::BudgetExceeded { .. } => PfiStatus::LimitExceeded,
        Error::Violation(_) => PfiStatus::Violation,
        _ => PfiStatus::InvalidInput,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PfiStatus, String)>) -> PfiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PfiStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            PfiStatus::Internal
        }
    }
}

fn lib<T>(r: pfaffian_ideals::Result<T>) -> Result<T, (PfiStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (PfiStatus, String) {
    (PfiStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_tuple(ptr_: *const u32, len: usize) -> Result<IndexTuple, (PfiStatus, String)> {
    if ptr_.is_null() {
        return Err(null("index array"));
    }
    let v = std::slice::from_raw_parts(ptr_, len).to_vec();
    lib(IndexTuple::new(v))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (PfiStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (PfiStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (PfiStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| (PfiStatus::Internal, "nul byte in output".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn spec_ref<'a>(spec: *const PfiSpec) -> Result<&'a PfiSpec, (PfiStatus, String)> {
    spec.as_ref().ok_or_else(|| null("spec"))
}

fn spec_args(s: &CogeneratorSpec) -> SpecArgs {
    SpecArgs {
        alpha: s.alpha().clone(),
        n: s.n(),
    }
}

unsafe fn run_json(command: Command, out: *mut *mut c_char) -> Result<(), (PfiStatus, String)> {
    let report = lib(cli::execute(&command))?;
    write_string(out, json::render(&report.value))
}

/// The message for the last failed call on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pfi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pfi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a spec from `alpha[0..len]` and `n`.
///
/// # Safety
/// `alpha` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_spec_new(alpha: *const u32, len: usize, n: u32, out: *mut *mut PfiSpec) -> PfiStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let inner = lib(CogeneratorSpec::new(read_tuple(alpha, len)?, n))?;
        *out = Box::into_raw(Box::new(PfiSpec { inner }));
        Ok(())
    })
}

/// # Safety
/// `spec` must come from [`pfi_spec_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pfi_spec_free(spec: *mut PfiSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// # Safety
/// `spec` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_spec_is_g_pfaffian(spec: *const PfiSpec, out: *mut bool) -> PfiStatus {
    guard(|| {
        let s = spec_ref(spec)?;
        *out.as_mut().ok_or_else(|| null("output pointer"))? = s.inner.is_g_pfaffian();
        Ok(())
    })
}

/// Multiplicity as a decimal string.
///
/// # Safety
/// `spec` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_multiplicity(spec: *const PfiSpec, out: *mut *mut c_char) -> PfiStatus {
    guard(|| {
        let r = lib(multiplicity(&spec_ref(spec)?.inner))?;
        write_string(out, r.multiplicity.to_string())
    })
}

/// Number of facets of the complex of the (reduced) spec.
///
/// # Safety
/// `spec` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_facet_count(spec: *const PfiSpec, out: *mut u64) -> PfiStatus {
    guard(|| {
        let s = spec_ref(spec)?;
        let facets = lib(enumerate_facets(&reduce_cogenerator(&s.inner)))?;
        *out.as_mut().ok_or_else(|| null("output pointer"))? = facets.len() as u64;
        Ok(())
    })
}

/// Initial-ideal generators as JSON.
///
/// # Safety
/// `spec` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_initial_ideal_json(
    spec: *const PfiSpec,
    minimal: bool,
    out: *mut *mut c_char,
) -> PfiStatus {
    guard(|| {
        let spec = spec_args(&spec_ref(spec)?.inner);
        run_json(Command::InitialIdeal { spec, minimal }, out)
    })
}

/// Counterexample element for a cogenerator that is not G-Pfaffian, as JSON.
///
/// # Safety
/// `spec` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_counterexample_json(spec: *const PfiSpec, out: *mut *mut c_char) -> PfiStatus {
    guard(|| {
        let spec = spec_args(&spec_ref(spec)?.inner);
        run_json(Command::Counterexample { spec }, out)
    })
}

/// Pfaffian of the principal submatrix `indices[0..len]` of an `n x n`
/// matrix, as JSON.
///
/// # Safety
/// `indices` must point to `len` readable integers; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_pfaffian_json(
    indices: *const u32,
    len: usize,
    n: u32,
    out: *mut *mut c_char,
) -> PfiStatus {
    guard(|| {
        let indices = read_tuple(indices, len)?;
        run_json(Command::Pfaffian { indices, n }, out)
    })
}

/// BKRS of `{"columns":[...]}`, as JSON.
///
/// # Safety
/// `tableau` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_bkrs_json(tableau: *const c_char, out: *mut *mut c_char) -> PfiStatus {
    guard(|| {
        let tableau = read_str(tableau, "tableau")?.to_string();
        run_json(Command::Bkrs { tableau }, out)
    })
}

/// KRS of two tableaux of equal shape, as JSON.
///
/// # Safety
/// `left` and `right` must be nul-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_krs_json(left: *const c_char, right: *const c_char, out: *mut *mut c_char) -> PfiStatus {
    guard(|| {
        let left = read_str(left, "left tableau")?.to_string();
        let right = read_str(right, "right tableau")?.to_string();
        run_json(Command::Krs { left, right }, out)
    })
}

/// Inverse BKRS of `{"pairs":[[u,v],...]}`, as JSON.
///
/// # Safety
/// `array` must be a nul-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_bkrs_inverse_json(array: *const c_char, out: *mut *mut c_char) -> PfiStatus {
    guard(|| {
        let array = read_str(array, "array")?.to_string();
        run_json(Command::BkrsInverse { array }, out)
    })
}

/// Runs the command line with `argv[0..argc]` (without the program name).
/// Writes the process exit status to `exit_status` and the captured
/// streams to `out_stdout` and `out_stderr`.
///
/// # Safety
/// `argv` must hold `argc` nul-terminated strings; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn pfi_cli_run(
    argv: *const *const c_char,
    argc: usize,
    exit_status: *mut i32,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> PfiStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(null("argv"));
        }
        let mut args = vec!["pfideal".to_string()];
        for i in 0..argc {
            args.push(read_str(*argv.add(i), "argument")?.to_string());
        }
        let outcome = cli::run(args);
        *exit_status.as_mut().ok_or_else(|| null("exit status pointer"))? = outcome.status;
        write_string(out_stdout, outcome.stdout)?;
        write_string(out_stderr, outcome.stderr)
    })
}
