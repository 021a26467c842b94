use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use bmres_ffi::*;

#[test]
fn tree_table_round_trip() {
    let json = CString::new(r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]}"#).unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(bm_graph_from_json(json.as_ptr(), &mut g), BmStatus::Ok);
        let mut t = ptr::null_mut();
        assert_eq!(bm_betti_tree(g, 0, &mut t), BmStatus::Ok);
        assert_eq!(bm_betti_get(t, 2, 4), 3);
        let mut pd = 0;
        assert_eq!(bm_betti_pdim(t, &mut pd), BmStatus::Ok);
        assert_eq!(pd, 3);
        let mut pd2 = 0;
        assert_eq!(bm_tree_pdim(g, &mut pd2), BmStatus::Ok);
        assert_eq!(pd2, 3);
        let s = bm_betti_to_json(t);
        assert!(CStr::from_ptr(s)
            .to_str()
            .unwrap()
            .starts_with(r#"{"kind":"quotient""#));
        bm_string_free(s);
        bm_betti_free(t);
        bm_graph_free(g);
    }
}

#[test]
fn edges_ideal_and_orders() {
    let edges = [0usize, 1, 1, 2];
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            bm_graph_from_edges(3, edges.as_ptr(), 2, &mut g),
            BmStatus::Ok
        );
        let mut i = ptr::null_mut();
        assert_eq!(bm_ideal_from_graph(g, &mut i), BmStatus::Ok);
        assert_eq!(bm_ideal_generator_count(i), 2);
        let mut ok = false;
        let perm = [1usize, 0];
        assert_eq!(
            bm_is_bridge_friendly(i, perm.as_ptr(), 2, &mut ok),
            BmStatus::Ok
        );
        assert!(ok);
        let bad = [0usize, 0];
        assert_eq!(
            bm_is_bridge_friendly(i, bad.as_ptr(), 2, &mut ok),
            BmStatus::InvalidInput
        );
        bm_ideal_free(i);
        bm_graph_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            bm_graph_from_json(ptr::null(), &mut g),
            BmStatus::NullPointer
        );
        let junk = CString::new("{").unwrap();
        assert_eq!(bm_graph_from_json(junk.as_ptr(), &mut g), BmStatus::Parse);
        assert!(!bm_last_error().is_null());
        let cyc = CString::new(r#"{"n":3,"edges":[[0,1],[1,2],[2,0]]}"#).unwrap();
        assert_eq!(bm_graph_from_json(cyc.as_ptr(), &mut g), BmStatus::Ok);
        assert!(bm_last_error().is_null());
        let mut t = ptr::null_mut();
        assert_eq!(bm_betti_tree(g, 0, &mut t), BmStatus::NotATree);
        let mut i = ptr::null_mut();
        assert_eq!(bm_ideal_from_graph(g, &mut i), BmStatus::Ok);
        assert_eq!(bm_betti_homology(i, 6, &mut t), BmStatus::NotPrime);
        let json = CString::new(r#"{"numvars":2,"generators":[[1,1]]}"#).unwrap();
        let mut j = ptr::null_mut();
        assert_eq!(bm_ideal_from_json(json.as_ptr(), &mut j), BmStatus::Ok);
        assert_eq!(bm_ideal_generator_count(j), 1);
        bm_ideal_free(j);
        bm_ideal_free(i);
        bm_graph_free(g);
        assert_eq!(bm_betti_get(ptr::null(), 0, 0), 0);
    }
}

#[test]
fn header_lists_the_api() {
    let h =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bmres.h")).unwrap();
    for name in [
        "bm_graph_from_json",
        "bm_betti_tree",
        "bm_last_error",
        "BM_STATUS_NOT_A_TREE",
        "typedef struct BmGraph BmGraph",
    ] {
        assert!(h.contains(name), "{name} missing from header");
    }
}

/// Compiles and runs the C example against the static library when a C
/// compiler and the library are available.
#[test]
fn c_program_links_and_runs() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| root.join("../../target"));
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let lib = target.join(profile).join("libbmres_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(root.join("examples/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "beta_3,6 = 4");
}
