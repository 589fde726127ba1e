//! Drives the exported functions through their C signatures, then compiles
//! and runs a small C program against the generated header and static library.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use rees_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(rees_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn ideal_round_trip_and_queries() {
    let rows: [u32; 12] = [1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1];
    let mut i = ptr::null_mut();
    unsafe {
        assert_eq!(rees_ideal_new(3, 4, rows.as_ptr(), &mut i), ReesStatus::Ok);
        // (1,1,1) is redundant.
        assert_eq!(rees_ideal_num_generators(i), 3);
        assert_eq!(rees_ideal_num_vars(i), 3);
        let mut g = [0u32; 3];
        assert_eq!(rees_ideal_generator(i, 0, g.as_mut_ptr()), ReesStatus::Ok);
        assert_eq!(g, [1, 1, 0]);
        assert_eq!(rees_ideal_generator(i, 9, g.as_mut_ptr()), ReesStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));

        let (mut num, mut den) = (0u64, 0u64);
        assert_eq!(rees_ideal_ic_resurgence(i, ptr::null(), &mut num, &mut den), ReesStatus::Ok);
        assert_eq!((num, den), (4, 3));
        let mut normal = false;
        assert_eq!(rees_ideal_is_normal(i, ReesMethod::Both, ptr::null(), &mut normal), ReesStatus::Ok);
        assert!(normal);
        let mut f = 0u32;
        assert_eq!(rees_ideal_containment(i, 2, ptr::null(), &mut f), ReesStatus::Ok);
        assert_eq!(f, 3);
        let mut sym = ptr::null_mut();
        assert_eq!(rees_ideal_symbolic_power(i, 2, ptr::null(), &mut sym), ReesStatus::Ok);
        // I² + (t₁t₂t₃) is minimally generated by the squared edges and t₁t₂t₃.
        assert_eq!(rees_ideal_num_generators(sym), 4);
        rees_ideal_free(sym);
        let mut v = 0u32;
        assert_eq!(rees_ideal_v_number(i, 3, ptr::null(), &mut v), ReesStatus::Ok);
        assert_eq!(v, 1);
        rees_ideal_free(i);
    }
}

#[test]
fn parse_errors_and_budgets() {
    let mut i = ptr::null_mut();
    let bad = CString::new("1 1\n1 x\n").unwrap();
    unsafe {
        assert_eq!(rees_ideal_parse(bad.as_ptr(), &mut i), ReesStatus::InvalidArgument);
        assert!(i.is_null());
        assert!(last_error().starts_with("line 2, column 3"));
        let text = CString::new("6 0\n2 2\n3 1\n0 5\n").unwrap();
        assert_eq!(rees_ideal_parse(text.as_ptr(), &mut i), ReesStatus::Ok);
        let mut e = 0u64;
        assert_eq!(rees_ideal_multiplicity(i, ptr::null(), &mut e), ReesStatus::Ok);
        assert_eq!(e, 20);
        let tiny = rees_budget_new(2, 2, 2);
        assert_eq!(rees_ideal_multiplicity(i, tiny, &mut e), ReesStatus::Budget);
        rees_budget_free(tiny);
        assert_eq!(rees_ideal_multiplicity(i, ptr::null(), ptr::null_mut()), ReesStatus::NullPointer);
        assert_eq!(rees_ideal_multiplicity(ptr::null(), ptr::null(), &mut e), ReesStatus::NullPointer);
        rees_ideal_free(i);
        rees_ideal_free(ptr::null_mut());
    }
}

#[test]
fn graphs() {
    let triangles: [u32; 12] = [0, 1, 1, 2, 0, 2, 3, 4, 4, 5, 3, 5];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(rees_graph_new(6, 6, triangles.as_ptr(), false, &mut g), ReesStatus::Ok);
        let mut b = true;
        assert_eq!(rees_graph_edge_ideal_normal(g, ptr::null(), &mut b), ReesStatus::Ok);
        assert!(!b);
        // Disconnected input violates the subring precondition.
        assert_eq!(rees_graph_edge_subring_normal(g, ptr::null(), &mut b), ReesStatus::InvalidArgument);
        assert_eq!(rees_graph_is_w2(g, ptr::null(), &mut b), ReesStatus::Ok);
        assert!(b);
        let mut i = ptr::null_mut();
        assert_eq!(rees_graph_edge_ideal(g, &mut i), ReesStatus::Ok);
        assert_eq!(rees_ideal_num_generators(i), 6);
        rees_ideal_free(i);
        rees_graph_free(g);
        let looped: [u32; 2] = [0, 0];
        assert_eq!(rees_graph_new(2, 1, looped.as_ptr(), false, &mut g), ReesStatus::InvalidArgument);
        assert_eq!(rees_graph_new(2, 1, looped.as_ptr(), true, &mut g), ReesStatus::Ok);
        rees_graph_free(g);
    }
}

#[test]
fn version_is_a_c_string() {
    let v = unsafe { CStr::from_ptr(rees_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps/
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = target_dir().join("librees_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let src = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/smoke.c");
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("rees_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program failed: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "rho_ic 4/3\nnormal 1\nerror line 1, column 3: expected an exponent, found \"q\"\n");
}
