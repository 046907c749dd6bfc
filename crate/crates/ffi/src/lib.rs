//! C ABI for the powergraph library.
//!
//! The surface follows the usual handle-and-status-code conventions:
//! magmas live behind the opaque [`PgMagma`] pointer, every fallible call
//! returns a [`PgStatus`], and results are written through out-pointers.
//! Strings returned by this library are heap-allocated, NUL-terminated, and
//! must be released with [`pg_string_free`]; handles with [`pg_magma_free`].
//! All entry points catch panics and map them to [`PgStatus::Panic`], so no
//! unwind ever crosses the ABI boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use powergraph::coloring::paper_color_finite;
use powergraph::gen::{generate, parse_family_spec};
use powergraph::io::{parse_magma, serialize_magma};
use powergraph::magma::{check_power_associativity, Magma};
use powergraph::report::{analyze, ChiReport};

/// Opaque handle to a finite magma (a Cayley table with optional element
/// names). Create with [`pg_magma_from_spec`] or [`pg_magma_from_text`],
/// release with [`pg_magma_free`].
pub struct PgMagma(Magma);

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A Cayley-table document could not be parsed.
    Parse = 3,
    /// A family spec was malformed or out of range.
    InvalidSpec = 4,
    /// The magma is not power-associative, so the requested analysis is
    /// undefined on it.
    NotPowerAssociative = 5,
    /// An index or numeric argument was out of range.
    InvalidArgument = 6,
    /// The verification suite found a failing claim.
    VerificationFailed = 7,
    /// An internal panic was caught at the ABI boundary.
    Panic = 8,
}

/// Witness of a power-associativity failure: evaluating the element's
/// a+b-th power directly differs from combining its a-th and b-th powers.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct PgPowerWitness {
    pub element: u64,
    pub a: u64,
    pub b: u64,
}

fn guarded(f: impl FnOnce() -> PgStatus) -> PgStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PgStatus::Panic)
}

unsafe fn magma_ref<'a>(m: *const PgMagma) -> Option<&'a Magma> {
    m.as_ref().map(|h| &h.0)
}

/// Converts an owned string to a C string; `None` if it holds a NUL byte.
fn into_c_string(s: String) -> Option<*mut c_char> {
    CString::new(s).ok().map(CString::into_raw)
}

unsafe fn write_handle(out: *mut *mut PgMagma, magma: Magma) -> PgStatus {
    if out.is_null() {
        return PgStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(PgMagma(magma)));
    PgStatus::Ok
}

/// Builds a magma from a family spec such as `"cyclic(12)"`,
/// `"monogenic(3,2)"`, or `"product(dihedral(4),cyclic(3))"`.
///
/// On success writes a fresh handle to `out` and returns `Ok`.
///
/// # Safety
///
/// `spec` must point to a NUL-terminated string; `out` must be a valid
/// pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_from_spec(
    spec: *const c_char,
    out: *mut *mut PgMagma,
) -> PgStatus {
    guarded(|| {
        if spec.is_null() {
            return PgStatus::NullArgument;
        }
        let Ok(spec) = CStr::from_ptr(spec).to_str() else {
            return PgStatus::InvalidUtf8;
        };
        let Ok(parsed) = parse_family_spec(spec) else {
            return PgStatus::InvalidSpec;
        };
        match generate(&parsed) {
            Ok(magma) => write_handle(out, magma),
            Err(_) => PgStatus::InvalidSpec,
        }
    })
}

/// Builds a magma from a Cayley-table document in the plain-text format
/// (first line the element count N, then N rows of N zero-based indices;
/// `#` starts a comment, `# name: <index> <display>` names an element).
///
/// # Safety
///
/// `text` must point to a NUL-terminated string; `out` must be a valid
/// pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_from_text(
    text: *const c_char,
    out: *mut *mut PgMagma,
) -> PgStatus {
    guarded(|| {
        if text.is_null() {
            return PgStatus::NullArgument;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return PgStatus::InvalidUtf8;
        };
        match parse_magma(text) {
            Ok(magma) => write_handle(out, magma),
            Err(_) => PgStatus::Parse,
        }
    })
}

/// Releases a magma handle. NULL is ignored.
///
/// # Safety
///
/// `m` must be NULL or a handle obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_free(m: *mut PgMagma) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of elements, or 0 for a NULL handle.
///
/// # Safety
///
/// `m` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_size(m: *const PgMagma) -> u64 {
    magma_ref(m).map_or(0, |magma| magma.size() as u64)
}

/// Looks up one product: writes `a * b` to `out`.
///
/// # Safety
///
/// `m` must be a live handle; `out` must point to writable memory for one
/// `u64`.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_op(
    m: *const PgMagma,
    a: u64,
    b: u64,
    out: *mut u64,
) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if out.is_null() {
            return PgStatus::NullArgument;
        }
        let n = magma.size() as u64;
        if a >= n || b >= n {
            return PgStatus::InvalidArgument;
        }
        *out = magma.op(a as usize, b as usize) as u64;
        PgStatus::Ok
    })
}

/// Serializes the magma to the plain-text Cayley format. The returned
/// string must be released with [`pg_string_free`].
///
/// # Safety
///
/// `m` must be a live handle; `out` must point to writable memory for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_magma_serialize(
    m: *const PgMagma,
    out: *mut *mut c_char,
) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if out.is_null() {
            return PgStatus::NullArgument;
        }
        match into_c_string(serialize_magma(magma)) {
            Some(s) => {
                *out = s;
                PgStatus::Ok
            }
            None => PgStatus::InvalidArgument,
        }
    })
}

/// Checks power associativity. Returns `Ok` when every element's powers
/// are well-defined; otherwise returns `NotPowerAssociative` and, when
/// `witness` is non-NULL, fills it with a failing (element, a, b) triple.
///
/// # Safety
///
/// `m` must be a live handle; `witness` must be NULL or point to writable
/// memory for one `PgPowerWitness`.
#[no_mangle]
pub unsafe extern "C" fn pg_check_power_associativity(
    m: *const PgMagma,
    witness: *mut PgPowerWitness,
) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        match check_power_associativity(magma).witness() {
            None => PgStatus::Ok,
            Some(w) => {
                if !witness.is_null() {
                    *witness = PgPowerWitness {
                        element: w.element as u64,
                        a: w.a,
                        b: w.b,
                    };
                }
                PgStatus::NotPowerAssociative
            }
        }
    })
}

/// Runs the full analysis and writes the JSON report (element profiles,
/// coloring and clique statistics, claim verdicts) to `out`. The report is
/// written even when verification fails; the status then says
/// `VerificationFailed`. Release the string with [`pg_string_free`].
///
/// # Safety
///
/// `m` must be a live handle; `out` must point to writable memory for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pg_analyze_json(
    m: *const PgMagma,
    out: *mut *mut c_char,
) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if out.is_null() {
            return PgStatus::NullArgument;
        }
        let report = analyze(magma);
        let json = serde_json::to_string_pretty(&report)
            .expect("analysis reports always serialize");
        match into_c_string(json) {
            Some(s) => {
                *out = s;
                if report.passed() {
                    PgStatus::Ok
                } else {
                    PgStatus::VerificationFailed
                }
            }
            None => PgStatus::InvalidArgument,
        }
    })
}

/// Runs the claim suite: `Ok` when every claim passes,
/// `VerificationFailed` otherwise.
///
/// # Safety
///
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_verify(m: *const PgMagma) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if analyze(magma).passed() {
            PgStatus::Ok
        } else {
            PgStatus::VerificationFailed
        }
    })
}

/// Writes lower and upper bounds on the chromatic number of the power
/// graph. The bounds coincide when the exact value was computed; above the
/// solver's size limit they come from the largest clique found and the
/// greedy coloring. Requires a power-associative magma.
///
/// # Safety
///
/// `m` must be a live handle; `lower` and `upper` must point to writable
/// memory for one `u64` each.
#[no_mangle]
pub unsafe extern "C" fn pg_chromatic_bounds(
    m: *const PgMagma,
    lower: *mut u64,
    upper: *mut u64,
) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if lower.is_null() || upper.is_null() {
            return PgStatus::NullArgument;
        }
        match analyze(magma).chromatic_number {
            None => PgStatus::NotPowerAssociative,
            Some(ChiReport::Exact { exact }) => {
                *lower = exact as u64;
                *upper = exact as u64;
                PgStatus::Ok
            }
            Some(ChiReport::Bounded { lower: lo, upper: hi }) => {
                *lower = lo as u64;
                *upper = hi as u64;
                PgStatus::Ok
            }
        }
    })
}

/// Writes the number of distinct tags the structural coloring uses on
/// this magma's power graph. Requires a power-associative magma.
///
/// # Safety
///
/// `m` must be a live handle; `out` must point to writable memory for one
/// `u64`.
#[no_mangle]
pub unsafe extern "C" fn pg_palette_size(m: *const PgMagma, out: *mut u64) -> PgStatus {
    guarded(|| {
        let Some(magma) = magma_ref(m) else {
            return PgStatus::NullArgument;
        };
        if out.is_null() {
            return PgStatus::NullArgument;
        }
        if !check_power_associativity(magma).is_pass() {
            return PgStatus::NotPowerAssociative;
        }
        *out = paper_color_finite(magma).palette_size() as u64;
        PgStatus::Ok
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
///
/// `s` must be NULL or a string obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
