//! Exercises the C ABI from Rust: status codes, out-pointer discipline,
//! and handle/string lifecycles.

use std::ffi::{c_char, CStr};
use std::ptr;

use ncc_ffi::*;

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_owned();
    ncc_string_free(ptr);
    s
}

#[test]
fn enumeration_handle_lifecycle() {
    unsafe {
        let mut handle: *mut NccEnumeration = ptr::null_mut();
        assert_eq!(ncc_enumerate(5, true, -1, &mut handle), NccStatus::Ok);
        assert_eq!(ncc_enumeration_len(handle), 11);

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(ncc_enumeration_text(handle, 0, &mut text), NccStatus::Ok);
        assert_eq!(take_string(text), "5_1");

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(ncc_enumeration_text(handle, 10, &mut text), NccStatus::Ok);
        assert_eq!(take_string(text), "1_1 1_1 1_1 1_1 1_1");

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(
            ncc_enumeration_text(handle, 11, &mut text),
            NccStatus::InvalidArgument
        );

        ncc_enumeration_free(handle);
        ncc_enumeration_free(ptr::null_mut());
        ncc_string_free(ptr::null_mut());
    }
}

#[test]
fn enumeration_with_parts_filter() {
    unsafe {
        let mut handle: *mut NccEnumeration = ptr::null_mut();
        assert_eq!(ncc_enumerate(4, false, 2, &mut handle), NccStatus::Ok);
        assert_eq!(ncc_enumeration_len(handle), 10);
        ncc_enumeration_free(handle);

        assert_eq!(
            ncc_enumerate(4, false, -2, &mut handle),
            NccStatus::InvalidArgument
        );
        assert_eq!(ncc_enumerate(4, false, -1, ptr::null_mut()), NccStatus::NullArgument);
    }
}

#[test]
fn counts_and_sequences_as_strings() {
    unsafe {
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ncc_count_compositions(3, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "8");

        assert_eq!(ncc_count_self_inverse(5, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "11");

        assert_eq!(ncc_count_self_inverse_m(5, 3, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "5");

        assert_eq!(ncc_count_compositions_m(4, 2, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "10");

        assert_eq!(ncc_fibonacci(100, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "354224848179261915075");

        assert_eq!(ncc_lucas(7, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "29");

        assert_eq!(ncc_binomial(5, 2, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "10");

        assert_eq!(ncc_seq(NccSequence::A, 4, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "76");
        assert_eq!(ncc_seq(NccSequence::B, 0, &mut s), NccStatus::Domain);

        assert_eq!(ncc_seq_window(NccSequence::D, 1, 4, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "3,9,24,63");
    }
}

#[test]
fn series_expansion() {
    unsafe {
        let mut s: *mut c_char = ptr::null_mut();
        let num = [1i64, 1];
        let den = [1i64, -3, 1];
        assert_eq!(
            ncc_expand(num.as_ptr(), 2, den.as_ptr(), 3, 5, &mut s),
            NccStatus::Ok
        );
        assert_eq!(take_string(s), "1,4,11,29,76");

        let bad_den = [0i64, 1];
        assert_eq!(
            ncc_expand(num.as_ptr(), 2, bad_den.as_ptr(), 2, 5, &mut s),
            NccStatus::InvalidArgument
        );

        let inexact_den = [2i64, -1];
        assert_eq!(
            ncc_expand(num.as_ptr(), 1, inexact_den.as_ptr(), 2, 5, &mut s),
            NccStatus::Inexact
        );
    }
}

#[test]
fn lattice_and_identities() {
    unsafe {
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(ncc_path_count(2, 1, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "5");
        assert_eq!(ncc_path_total(3, &mut s), NccStatus::Ok);
        assert_eq!(take_string(s), "29");

        let mut all_hold = false;
        let label = c"T5.1";
        assert_eq!(ncc_verify(label.as_ptr(), 20, &mut all_hold), NccStatus::Ok);
        assert!(all_hold);

        let bad = c"T0.0";
        assert_eq!(
            ncc_verify(bad.as_ptr(), 20, &mut all_hold),
            NccStatus::InvalidArgument
        );
        assert_eq!(
            ncc_verify(ptr::null(), 20, &mut all_hold),
            NccStatus::NullArgument
        );
    }
}

#[test]
fn bijection_summary_struct() {
    unsafe {
        let mut summary = NccBijectionSummary {
            n: 0,
            class_i: 0,
            class_ii: 0,
            class_iii: 0,
            round_trip_failures: 0,
            valid: false,
        };
        assert_eq!(ncc_bijection_check(4, &mut summary), NccStatus::Ok);
        assert_eq!(summary.class_i, 29);
        assert_eq!(summary.class_ii, 29);
        assert_eq!(summary.class_iii, 29);
        assert_eq!(summary.round_trip_failures, 0);
        assert!(summary.valid);

        assert_eq!(ncc_bijection_check(1, &mut summary), NccStatus::Domain);
    }
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("ncc.h");
    let text = std::fs::read_to_string(header).expect("header exists");
    for symbol in [
        "ncc_enumerate",
        "ncc_seq_window",
        "ncc_expand",
        "ncc_verify",
        "ncc_bijection_check",
        "NccBijectionSummary",
    ] {
        assert!(text.contains(symbol), "header should declare {symbol}");
    }
}
