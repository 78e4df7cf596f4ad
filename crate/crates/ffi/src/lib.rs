//! C ABI over the ncc library.
//!
//! Conventions:
//!
//! - Every fallible function returns an [`NccStatus`] and writes its result
//!   through an out-pointer.
//! - Counts and sequence values are returned as NUL-terminated decimal
//!   strings, since they outgrow any fixed-width integer. Free them with
//!   [`ncc_string_free`].
//! - Enumerations are held behind the opaque [`NccEnumeration`] handle and
//!   released with [`ncc_enumeration_free`].
//!
//! The matching C header is generated into `include/ncc.h` at build time.

use std::ffi::{c_char, CStr, CString};

use ncc::composition::{compositions, compositions_with_parts, Composition};
use ncc::formulas::{binomial, count_a, fibonacci, lucas};
use ncc::genfunc::{expand, IntPolynomial, RationalSeries};
use ncc::identities::{sweep, IdentityKind};
use ncc::lattice::{b_total, d_count};
use ncc::sequences::{seq, seq_window, SequenceId};

/// Result of every fallible call in this API.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NccStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// An argument was outside the supported range.
    InvalidArgument = 2,
    /// An index below the first defined index of a sequence.
    Domain = 3,
    /// A string argument was not valid UTF-8.
    Utf8 = 4,
    /// A power-series coefficient was not exactly divisible.
    Inexact = 5,
}

/// Selector for the four counting sequences.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NccSequence {
    A = 0,
    B = 1,
    C = 2,
    D = 3,
}

impl From<NccSequence> for SequenceId {
    fn from(id: NccSequence) -> SequenceId {
        match id {
            NccSequence::A => SequenceId::A,
            NccSequence::B => SequenceId::B,
            NccSequence::C => SequenceId::C,
            NccSequence::D => SequenceId::D,
        }
    }
}

/// Opaque list of compositions produced by [`ncc_enumerate`].
pub struct NccEnumeration {
    items: Vec<Composition>,
}

/// Outcome of one exhaustive bijection check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NccBijectionSummary {
    pub n: u32,
    /// Sources assigned to each of the three classes.
    pub class_i: u64,
    pub class_ii: u64,
    pub class_iii: u64,
    /// Sources whose round trip through the inverse map failed.
    pub round_trip_failures: u64,
    /// True when all class counts match the expected size and every check
    /// passed.
    pub valid: bool,
}

fn string_out(value: String, out: *mut *mut c_char) -> NccStatus {
    let c = CString::new(value).expect("decimal strings contain no NUL");
    unsafe { *out = c.into_raw() };
    NccStatus::Ok
}

/// Enumerates compositions of weight `nu` into a new handle. Pass
/// `parts = -1` for any number of parts, and `self_inverse = true` to keep
/// only palindromic compositions.
///
/// # Safety
/// `out` must be a valid pointer. The handle must be released with
/// [`ncc_enumeration_free`].
#[no_mangle]
pub unsafe extern "C" fn ncc_enumerate(
    nu: u32,
    self_inverse: bool,
    parts: i64,
    out: *mut *mut NccEnumeration,
) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    let items: Vec<Composition> = match parts {
        -1 => compositions(nu)
            .filter(|c| !self_inverse || c.is_self_inverse())
            .collect(),
        m if m >= 0 && m <= i64::from(u32::MAX) => compositions_with_parts(nu, m as u32)
            .filter(|c| !self_inverse || c.is_self_inverse())
            .collect(),
        _ => return NccStatus::InvalidArgument,
    };
    *out = Box::into_raw(Box::new(NccEnumeration { items }));
    NccStatus::Ok
}

/// Number of compositions in the handle; 0 for NULL.
///
/// # Safety
/// `handle` must be NULL or a pointer returned by [`ncc_enumerate`].
#[no_mangle]
pub unsafe extern "C" fn ncc_enumeration_len(handle: *const NccEnumeration) -> usize {
    if handle.is_null() {
        return 0;
    }
    (*handle).items.len()
}

/// Writes the text form (`"2_1 1_1 2_1"`) of the composition at `index`.
///
/// # Safety
/// `handle` must come from [`ncc_enumerate`] and `out` must be valid. The
/// string must be released with [`ncc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ncc_enumeration_text(
    handle: *const NccEnumeration,
    index: usize,
    out: *mut *mut c_char,
) -> NccStatus {
    if handle.is_null() || out.is_null() {
        return NccStatus::NullArgument;
    }
    let enumeration = &*handle;
    match enumeration.items.get(index) {
        Some(c) => string_out(c.to_string(), out),
        None => NccStatus::InvalidArgument,
    }
}

/// Releases a handle returned by [`ncc_enumerate`]. NULL is a no-op.
///
/// # Safety
/// `handle` must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ncc_enumeration_free(handle: *mut NccEnumeration) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Releases a string returned by any function in this API. NULL is a no-op.
///
/// # Safety
/// `s` must have been allocated by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn ncc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of compositions of `nu`, as a decimal string.
///
/// # Safety
/// `out` must be valid; free the result with [`ncc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ncc_count_compositions(nu: u64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    match nu.checked_mul(2) {
        Some(index) => string_out(fibonacci(index).to_string(), out),
        None => NccStatus::InvalidArgument,
    }
}

/// Number of compositions of `nu` with exactly `m` parts.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_count_compositions_m(
    nu: u64,
    m: u64,
    out: *mut *mut c_char,
) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    if m == 0 || m > nu {
        return string_out("0".to_owned(), out);
    }
    match nu.checked_add(m - 1).filter(|&t| t <= i64::MAX as u64) {
        Some(top) => string_out(binomial(top as i64, (2 * m - 1) as i64).to_string(), out),
        None => NccStatus::InvalidArgument,
    }
}

/// Number of self-inverse compositions of `nu`.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_count_self_inverse(nu: u64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    let count = if nu == 0 {
        "0".to_owned()
    } else if nu % 2 == 1 {
        seq(SequenceId::A, (nu - 1) / 2).expect("index 0 is valid").to_string()
    } else {
        seq(SequenceId::D, nu / 2).expect("nu / 2 >= 1").to_string()
    };
    string_out(count, out)
}

/// Number of self-inverse compositions of `nu` with exactly `m` parts.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_count_self_inverse_m(
    nu: u64,
    m: u64,
    out: *mut *mut c_char,
) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    let count = if m == 0 || m > nu {
        "0".to_owned()
    } else {
        count_a(m, nu).to_string()
    };
    string_out(count, out)
}

/// `F_n` as a decimal string.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_fibonacci(n: u64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    string_out(fibonacci(n).to_string(), out)
}

/// `L_n` as a decimal string.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_lucas(n: u64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    string_out(lucas(n).to_string(), out)
}

/// Binomial coefficient with the zero convention for out-of-range indices.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_binomial(n: i64, k: i64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    string_out(binomial(n, k).to_string(), out)
}

/// Value of sequence `id` at index `n`.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_seq(id: NccSequence, n: u64, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    match seq(id.into(), n) {
        Ok(value) => string_out(value.to_string(), out),
        Err(_) => NccStatus::Domain,
    }
}

/// `len` consecutive values of sequence `id` from `start`, comma-joined.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_seq_window(
    id: NccSequence,
    start: u64,
    len: usize,
    out: *mut *mut c_char,
) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    match seq_window(id.into(), start, len) {
        Ok(window) => {
            let joined = window
                .values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            string_out(joined, out)
        }
        Err(_) => NccStatus::Domain,
    }
}

/// Expands `num / den` to `terms` power-series coefficients, comma-joined.
/// Coefficient arrays are ascending in degree.
///
/// # Safety
/// `num` and `den` must point to `num_len` and `den_len` readable values
/// (NULL is accepted for zero-length arrays); `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ncc_expand(
    num: *const i64,
    num_len: usize,
    den: *const i64,
    den_len: usize,
    terms: usize,
    out: *mut *mut c_char,
) -> NccStatus {
    if out.is_null() || (num.is_null() && num_len > 0) || (den.is_null() && den_len > 0) {
        return NccStatus::NullArgument;
    }
    let num = if num_len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(num, num_len)
    };
    let den = if den_len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(den, den_len)
    };
    let series = match RationalSeries::new(
        IntPolynomial::from_i64(num),
        IntPolynomial::from_i64(den),
    ) {
        Ok(series) => series,
        Err(_) => return NccStatus::InvalidArgument,
    };
    match expand(&series, terms) {
        Ok(coeffs) => {
            let joined = coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            string_out(joined, out)
        }
        Err(_) => NccStatus::Inexact,
    }
}

/// Number of restricted lattice paths to `(2*nu+1-k, k)`.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_path_count(nu: u32, k: u32, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    string_out(d_count(nu, k).count.to_string(), out)
}

/// Row total over all `k`, which equals `lucas(2*nu + 1)`.
///
/// # Safety
/// As for [`ncc_count_compositions`].
#[no_mangle]
pub unsafe extern "C" fn ncc_path_total(nu: u32, out: *mut *mut c_char) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    string_out(b_total(nu).to_string(), out)
}

/// Sweeps the identity named by `label` (T5.1, T6.1i, T6.1ii or T6.2b)
/// up to `max_index` and reports whether every instance held.
///
/// # Safety
/// `label` must be a NUL-terminated string and `all_hold` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncc_verify(
    label: *const c_char,
    max_index: u64,
    all_hold: *mut bool,
) -> NccStatus {
    if label.is_null() || all_hold.is_null() {
        return NccStatus::NullArgument;
    }
    let label = match CStr::from_ptr(label).to_str() {
        Ok(s) => s,
        Err(_) => return NccStatus::Utf8,
    };
    let kind: IdentityKind = match label.parse() {
        Ok(kind) => kind,
        Err(_) => return NccStatus::InvalidArgument,
    };
    *all_hold = sweep(kind, max_index).iter().all(|r| r.holds);
    NccStatus::Ok
}

/// Runs the exhaustive three-class bijection check for instance `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncc_bijection_check(
    n: u32,
    out: *mut NccBijectionSummary,
) -> NccStatus {
    if out.is_null() {
        return NccStatus::NullArgument;
    }
    match ncc::bijection::verify_bijection(n) {
        Ok(summary) => {
            *out = NccBijectionSummary {
                n,
                class_i: summary.class_counts[0] as u64,
                class_ii: summary.class_counts[1] as u64,
                class_iii: summary.class_counts[2] as u64,
                round_trip_failures: summary.round_trip_failures as u64,
                valid: summary.is_valid(),
            };
            NccStatus::Ok
        }
        Err(_) => NccStatus::Domain,
    }
}
