use std::ffi::{c_char, CStr, CString};
use std::ptr;

use spun_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { spun_string_free(p) };
    s
}

fn last_error() -> String {
    let p = spun_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(dim: u32, s: &str) -> *mut SpunMultivector {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { spun_multivector_parse(dim, c.as_ptr(), &mut out) }, SpunStatus::Ok);
    out
}

#[test]
fn multivector_roundtrip_and_norm() {
    unsafe {
        let x = parse(2, "e1 + e1e2");
        let mut n = ptr::null_mut();
        assert_eq!(spun_multivector_norm(x, &mut n), SpunStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(spun_multivector_to_string(n, &mut s), SpunStatus::Ok);
        assert_eq!(take_string(s), "2");

        let e1 = parse(2, "e1");
        let mut sq = ptr::null_mut();
        assert_eq!(spun_multivector_mul(e1, e1, &mut sq), SpunStatus::Ok);
        let minus_one = parse(2, "-1");
        let mut eq = false;
        assert_eq!(spun_multivector_equal(sq, minus_one, &mut eq), SpunStatus::Ok);
        assert!(eq);
        let mut d = 0;
        assert_eq!(spun_multivector_dim(sq, &mut d), SpunStatus::Ok);
        assert_eq!(d, 2);
        for h in [x, n, e1, sq, minus_one] {
            spun_multivector_free(h);
        }
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let bad = CString::new("1 + e9").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(spun_multivector_parse(2, bad.as_ptr(), &mut out), SpunStatus::ParseError);
        assert!(out.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            spun_multivector_parse(2, ptr::null(), &mut out),
            SpunStatus::NullPointer
        );
        let a = parse(2, "e1");
        let b = parse(3, "e1");
        let mut c = ptr::null_mut();
        assert_eq!(spun_multivector_mul(a, b, &mut c), SpunStatus::DimensionMismatch);
        let mut s = ptr::null_mut();
        assert_eq!(spun_eta_project(a, &mut s), SpunStatus::NotInSubspace);
        spun_multivector_free(a);
        spun_multivector_free(b);
        spun_multivector_free(ptr::null_mut());
        spun_string_free(ptr::null_mut());
        let mut ok = false;
        assert_eq!(spun_verify(7, 1, 0, &mut ok), SpunStatus::InvalidArgument);
    }
}

#[test]
fn eta_lift_and_equations() {
    unsafe {
        let y = CString::new("1,0,-2").unwrap();
        let mut j = ptr::null_mut();
        assert_eq!(spun_eta_inverse_lift(2, y.as_ptr(), &mut j), SpunStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(spun_eta_project(j, &mut s), SpunStatus::Ok);
        assert_eq!(take_string(s), "1,0,-2");
        spun_multivector_free(j);

        let a = CString::new("1,0,0").unwrap();
        let p = CString::new("0,1,0").unwrap();
        let mut json = ptr::null_mut();
        let mut consistent = false;
        assert_eq!(
            spun_l_ap_equations_json(3, a.as_ptr(), p.as_ptr(), &mut json, &mut consistent),
            SpunStatus::Ok
        );
        assert!(consistent);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert_eq!(v["rows"][0]["rhs"], "1");
    }
}

#[test]
fn reduction_through_handles() {
    unsafe {
        let mut cfg = ptr::null_mut();
        assert_eq!(spun_point_config_lattice(2, 2, &mut cfg), SpunStatus::Ok);
        let mut n = 0usize;
        assert_eq!(spun_point_config_len(cfg, &mut n), SpunStatus::Ok);
        assert_eq!(n, 4);
        let mut report = ptr::null_mut();
        assert_eq!(spun_run_reduction(cfg, 3, 2, &mut report), SpunStatus::Ok);
        let mut pass = false;
        assert_eq!(spun_report_all_pass(report, &mut pass), SpunStatus::Ok);
        assert!(pass);
        let mut json = ptr::null_mut();
        assert_eq!(spun_report_to_json(report, &mut json), SpunStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["Q"], "80");
        let mut pairs = 0u64;
        assert_eq!(spun_report_pair_count(report, &mut pairs), SpunStatus::Ok);
        assert_eq!(v["Q_prime_family"], pairs.to_string());
        spun_report_free(report);
        spun_point_config_free(cfg);

        let bad = CString::new("{\"dimension\": 2, \"points\": [[\"0\",\"0\"]]}").unwrap();
        let mut cfg = ptr::null_mut();
        assert_eq!(spun_point_config_from_json(bad.as_ptr(), &mut cfg), SpunStatus::ParseError);
        assert!(last_error().contains("two points"));
    }
}

#[test]
fn verify_entry_point() {
    let mut ok = false;
    assert_eq!(unsafe { spun_verify(2, 3, 5, &mut ok) }, SpunStatus::Ok);
    assert!(ok);
}
