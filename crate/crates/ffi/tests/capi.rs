use std::ffi::{CStr, CString};
use std::ptr;

use cmwild_ffi::*;

const QUARTIC: &str = r#"{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"]}"#;
const INSTANCE: &str = r#"{"ring":{"vars":["x","y","z"],"relations":["x^4+y^4+z^4"]},"sequence":["x^2","y^2"],"c":4,
    "basis":["x*y*z^2","x*z^3","y*z^3"],"n":2,"Ax":[[0,1],[0,0]],"Ay":[[0,0],[0,0]]}"#;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = cmwild_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn ring(doc: &str) -> *mut CmwildRing {
    let mut r = ptr::null_mut();
    let s = unsafe { cmwild_ring_from_json(cstr(doc).as_ptr(), 0, &mut r) };
    assert_eq!(s, CmwildStatus::Ok);
    r
}

fn instance(doc: &str) -> *mut CmwildInstance {
    let mut i = ptr::null_mut();
    let s = unsafe { cmwild_instance_from_json(cstr(doc).as_ptr(), 0, &mut i) };
    assert_eq!(s, CmwildStatus::Ok, "{}", last_error());
    i
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cmwild_string_free(s) };
    out
}

#[test]
fn ring_queries() {
    let r = ring(QUARTIC);
    let mut d = 0i64;
    let mut h = 0u64;
    unsafe {
        assert_eq!(cmwild_ring_krull_dimension(r, &mut d), CmwildStatus::Ok);
        assert_eq!(cmwild_ring_hilbert_dim(r, 4, &mut h), CmwildStatus::Ok);
        cmwild_ring_free(r);
    }
    assert_eq!(d, 2);
    // 15 monomials of degree 4 in three variables, minus the relation
    assert_eq!(h, 14);
}

#[test]
fn check_reports_json() {
    let r = ring(QUARTIC);
    let mut out = ptr::null_mut();
    let s = unsafe { cmwild_check(r, cstr("x^2,y^2").as_ptr(), 0, &mut out) };
    assert_eq!(s, CmwildStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["verdict"], "CMWild");
    assert_eq!(v["c"], 4);
    assert_eq!(v["dim_c"], 3);

    // searching for a sequence gives the same verdict
    let s = unsafe { cmwild_check(r, ptr::null(), 7, &mut out) };
    assert_eq!(s, CmwildStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["verdict"], "CMWild");
    unsafe { cmwild_ring_free(r) };
}

#[test]
fn errors_are_reported() {
    let mut r = ptr::null_mut();
    let s = unsafe { cmwild_ring_from_json(cstr(r#"{"vars":["x","y"],"relations":["x^4+y"]}"#).as_ptr(), 0, &mut r) };
    assert_eq!(s, CmwildStatus::InvalidInput);
    assert!(last_error().contains("homogeneous"));
    assert!(r.is_null());

    let s = unsafe { cmwild_ring_from_json(cstr("not json").as_ptr(), 0, &mut r) };
    assert_eq!(s, CmwildStatus::InvalidInput);

    let s = unsafe { cmwild_ring_from_json(ptr::null(), 0, &mut r) };
    assert_eq!(s, CmwildStatus::NullPointer);

    let bytes = [0xffu8, 0xfe, 0];
    let s = unsafe { cmwild_ring_from_json(bytes.as_ptr().cast(), 0, &mut r) };
    assert_eq!(s, CmwildStatus::InvalidUtf8);

    let q = ring(QUARTIC);
    let mut out = ptr::null_mut();
    // x and x^2 do not form a system of parameters
    let s = unsafe { cmwild_check(q, cstr("x,x^2").as_ptr(), 0, &mut out) };
    assert_eq!(s, CmwildStatus::InvalidInput);
    unsafe {
        cmwild_ring_free(q);
        cmwild_ring_free(ptr::null_mut());
        cmwild_string_free(ptr::null_mut());
    }
}

#[test]
fn family_verify_flags() {
    let i = instance(INSTANCE);
    let (mut a, mut b, mut c) = (-1, -1, -1);
    let s = unsafe { cmwild_family_verify(i, &mut a, &mut b, &mut c) };
    assert_eq!(s, CmwildStatus::Ok);
    assert_eq!((a, b, c), (1, 1, 1));
    let s = unsafe { cmwild_family_verify(i, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(s, CmwildStatus::Ok);
    unsafe { cmwild_instance_free(i) };
}

#[test]
fn iso_of_scaled_member() {
    let a = instance(INSTANCE);
    let b = instance(&INSTANCE.replace(r#""Ax":[[0,1],[0,0]]"#, r#""Ax":[[0,2],[0,0]]"#));
    let c = instance(&INSTANCE.replace(r#""Ax":[[0,1],[0,0]]"#, r#""Ax":[[0,0],[0,0]]"#));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cmwild_iso_test(a, b, 0, &mut out) }, CmwildStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["outcome"], "Isomorphic");
    assert_eq!(unsafe { cmwild_iso_test(a, c, 0, &mut out) }, CmwildStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["outcome"], "NotIsomorphic");
    unsafe {
        cmwild_instance_free(a);
        cmwild_instance_free(b);
        cmwild_instance_free(c);
    }
}

#[test]
fn header_declares_entry_points() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cmwild.h")).unwrap();
    for name in [
        "cmwild_ring_from_json",
        "cmwild_ring_free",
        "cmwild_ring_krull_dimension",
        "cmwild_ring_hilbert_dim",
        "cmwild_check",
        "cmwild_instance_from_json",
        "cmwild_instance_free",
        "cmwild_family_verify",
        "cmwild_iso_test",
        "cmwild_string_free",
        "cmwild_last_error",
        "typedef struct CmwildRing CmwildRing",
        "CMWILD_STATUS_INVALID_INPUT = 3",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}

/// Compiles and runs a small C program against the static library.
#[test]
fn c_program_links_against_staticlib() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let lib = tmp.parent().unwrap().join("debug").join("libcmwild_ffi.a");
    if !lib.exists() || std::process::Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let exe = tmp.join("cmwild_smoke");
    let status = std::process::Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"c\":4"));
}
