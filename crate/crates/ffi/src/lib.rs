//! C ABI over `redcalc`.
//!
//! A session is an opaque handle built from the text of a symbol table and a
//! parameter. Commands take an argument vector (without program name) and
//! return the report as a newly allocated string. Every entry point returns a
//! [`RedcalcStatus`]; on failure [`redcalc_last_error_message`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use redcalc::{run, Command, Error, GroupForm, GroupKind, O2nFlags, Session};

/// Status codes. Values 1 and 2 mirror the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedcalcStatus {
    Ok = 0,
    /// Malformed or invalid input.
    Invalid = 1,
    /// Well-formed input that no cuspidal representation can have.
    Inadmissible = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedcalcGroup {
    Sp = 0,
    SoOdd = 1,
    OEven = 2,
}

impl From<RedcalcGroup> for GroupKind {
    fn from(g: RedcalcGroup) -> Self {
        match g {
            RedcalcGroup::Sp => GroupKind::Sp,
            RedcalcGroup::SoOdd => GroupKind::SOodd,
            RedcalcGroup::OEven => GroupKind::Oeven,
        }
    }
}

/// Opaque session handle.
pub struct RedcalcSession {
    inner: Session,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(code: i32) -> RedcalcStatus {
    match code {
        0 => RedcalcStatus::Ok,
        2 => RedcalcStatus::Inadmissible,
        _ => RedcalcStatus::Invalid,
    }
}

fn fail(status: RedcalcStatus, msg: &str) -> RedcalcStatus {
    set_last_error(msg);
    status
}

fn fail_with(err: &Error) -> RedcalcStatus {
    fail(status_of(err.exit_code()), &err.to_string())
}

/// Borrow a C string as UTF-8.
///
/// # Safety
/// `p` must be null or point to a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, RedcalcStatus> {
    if p.is_null() {
        return Err(fail(RedcalcStatus::NullPointer, &format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RedcalcStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

fn guarded(f: impl FnOnce() -> RedcalcStatus) -> RedcalcStatus {
    clear_last_error();
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(RedcalcStatus::Panic, "internal panic"))
}

/// Parses a symbol table and a parameter and validates the parameter.
///
/// On success `*out` receives a handle to release with
/// [`redcalc_session_free`]. Structural violations of the parameter do not
/// fail the load; commands that need a valid parameter report them.
///
/// # Safety
/// `table_text` and `param_text` must be NUL-terminated strings; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn redcalc_session_load(
    table_text: *const c_char,
    param_text: *const c_char,
    group: RedcalcGroup,
    n: u32,
    so_irreducible: bool,
    out: *mut *mut RedcalcSession,
) -> RedcalcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(RedcalcStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let table = match text(table_text, "table_text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let param = match text(param_text, "param_text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let flags = O2nFlags {
            so_restriction_irreducible: so_irreducible,
        };
        match Session::from_text(table, "table", param, "param", GroupForm::new(group.into(), n), flags)
        {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(RedcalcSession { inner }));
                RedcalcStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Releases a session. Null is ignored.
///
/// # Safety
/// `session` must be null or a handle from [`redcalc_session_load`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn redcalc_session_free(session: *mut RedcalcSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Runs one command, e.g. `{"red", "--rho", "rho"}`.
///
/// `input` (nullable) plays the role of standard input for `reconstruct`.
/// `*out_text` receives the report, to release with [`redcalc_string_free`],
/// even when the command fails. `*exit_code` receives the command-line exit
/// code. The status is `Ok` exactly when the exit code is 0.
///
/// # Safety
/// `session` must be a live handle; `argv` must point to `argc` NUL-terminated
/// strings; `out_text` and `exit_code` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn redcalc_run(
    session: *const RedcalcSession,
    argv: *const *const c_char,
    argc: usize,
    input: *const c_char,
    out_text: *mut *mut c_char,
    exit_code: *mut i32,
) -> RedcalcStatus {
    guarded(|| {
        if session.is_null() || out_text.is_null() || exit_code.is_null() {
            return fail(RedcalcStatus::NullPointer, "session, out_text or exit_code is null");
        }
        *out_text = ptr::null_mut();
        *exit_code = 1;
        if argc > 0 && argv.is_null() {
            return fail(RedcalcStatus::NullPointer, "argv is null");
        }
        let mut words = Vec::with_capacity(argc);
        for i in 0..argc {
            match text(*argv.add(i), "argv entry") {
                Ok(w) => words.push(w),
                Err(s) => return s,
            }
        }
        let stdin = if input.is_null() {
            None
        } else {
            match text(input, "input") {
                Ok(t) => Some(t),
                Err(s) => return s,
            }
        };
        let command = match Command::parse_words(words) {
            Ok(c) => c,
            Err(e) => return fail_with(&e),
        };
        let outcome = run(&(*session).inner, &command, stdin);
        *exit_code = outcome.code;
        *out_text = CString::new(outcome.stdout.replace('\0', " "))
            .expect("interior NULs removed")
            .into_raw();
        if outcome.code == 0 {
            RedcalcStatus::Ok
        } else {
            let msg = if outcome.stderr.is_empty() {
                outcome.stdout.as_str()
            } else {
                outcome.stderr.as_str()
            };
            fail(status_of(outcome.code), msg.trim_end())
        }
    })
}

/// Releases a string returned by [`redcalc_run`]. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from [`redcalc_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn redcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn redcalc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
