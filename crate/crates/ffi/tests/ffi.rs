use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use old_digraphs_ffi::*;

fn parse(text: &str) -> *mut OldDigraph {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { old_digraph_parse(c.as_ptr(), &mut d) }, OldStatus::Ok);
    d
}

fn last_error() -> String {
    let p = old_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn build_and_query() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(old_digraph_new(2, &mut d), OldStatus::Ok);
        let mut added = false;
        assert_eq!(old_digraph_add_arc(d, 0, 1, &mut added), OldStatus::Ok);
        assert!(added);
        assert_eq!(old_digraph_add_arc(d, 0, 1, &mut added), OldStatus::Ok);
        assert!(!added);
        assert_eq!(old_digraph_add_arc(d, 1, 0, ptr::null_mut()), OldStatus::Ok);

        let mut n = 0;
        assert_eq!(old_digraph_order(d, &mut n), OldStatus::Ok);
        assert_eq!(n, 2);
        let mut loc = false;
        assert_eq!(old_is_locatable(d, &mut loc), OldStatus::Ok);
        assert!(loc);
        let (mut gamma, mut witness) = (0, 0u64);
        assert_eq!(old_min_old_set(d, &mut gamma, &mut witness), OldStatus::Ok);
        assert_eq!((gamma, witness), (2, 0b11));
        let mut ext = false;
        assert_eq!(old_is_extremal(d, &mut ext), OldStatus::Ok);
        assert!(ext);
        assert_eq!(old_is_extremal_structural(d, &mut ext), OldStatus::Ok);
        assert!(ext);
        let mut f = [9usize; 2];
        assert_eq!(old_forcing_successors(d, f.as_mut_ptr(), 2), OldStatus::Ok);
        assert_eq!(f, [1, 0]);

        let mut s = ptr::null_mut();
        assert_eq!(old_digraph_to_edge_list(d, &mut s), OldStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "2\n0 1\n1 0\n");
        old_string_free(s);
        old_digraph_free(d);
    }
}

#[test]
fn construct_example_successors() {
    let d = parse("4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
    let mut f = [0usize; 4];
    unsafe {
        assert_eq!(old_forcing_successors(d, f.as_mut_ptr(), 3), OldStatus::BufferTooSmall);
        assert_eq!(old_forcing_successors(d, f.as_mut_ptr(), 4), OldStatus::Ok);
        old_digraph_free(d);
    }
    assert_eq!(f, [2, 0, 1, 3]);
}

#[test]
fn error_statuses() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(old_digraph_new(65, &mut d), OldStatus::CapExceeded);
        assert_eq!(old_digraph_new(2, ptr::null_mut()), OldStatus::NullPointer);

        let bad = CString::new("2\n0 5\n").unwrap();
        assert_eq!(old_digraph_parse(bad.as_ptr(), &mut d), OldStatus::ParseError);
        assert!(last_error().contains("line 2"), "{}", last_error());

        let d = parse("2\n0 0\n0 1\n");
        let mut gamma = 0;
        assert_eq!(old_min_old_set(d, &mut gamma, ptr::null_mut()), OldStatus::NotLocatable);
        let mut f = [0usize; 2];
        assert_eq!(old_forcing_successors(d, f.as_mut_ptr(), 2), OldStatus::NoForcingCycles);
        assert_eq!(old_digraph_add_arc(d, 0, 7, ptr::null_mut()), OldStatus::InvalidArgument);
        old_digraph_free(d);

        let mut out = false;
        assert_eq!(old_is_locatable(ptr::null(), &mut out), OldStatus::NullPointer);
        old_digraph_free(ptr::null_mut());
        old_string_free(ptr::null_mut());
    }
}

#[test]
fn generators_and_canonical_form() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(old_half_graph(2, &mut h), OldStatus::Ok);
        let mut gamma = 0;
        assert_eq!(old_min_old_set(h, &mut gamma, ptr::null_mut()), OldStatus::Ok);
        assert_eq!(gamma, 4);

        // The same tree closure under two labellings.
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(old_tc_tree([-1, 0, 0].as_ptr(), 3, true, &mut a), OldStatus::Ok);
        assert_eq!(old_tc_tree([1, -1, 1].as_ptr(), 3, true, &mut b), OldStatus::Ok);
        let mut ext = false;
        assert_eq!(old_is_extremal(a, &mut ext), OldStatus::Ok);
        assert!(ext);
        let (mut ah, mut al, mut bh, mut bl) = (0, 0, 0, 0);
        assert_eq!(old_canonical_form(a, &mut ah, &mut al), OldStatus::Ok);
        assert_eq!(old_canonical_form(b, &mut bh, &mut bl), OldStatus::Ok);
        assert_eq!((ah, al), (bh, bl));
        assert_eq!(old_canonical_form(h, &mut bh, &mut bl), OldStatus::Ok);
        assert_ne!((ah, al), (bh, bl));

        let mut bad = ptr::null_mut();
        assert_eq!(old_tc_tree([-1, -1].as_ptr(), 2, false, &mut bad), OldStatus::InvalidArgument);

        let mut big = ptr::null_mut();
        assert_eq!(old_digraph_new(12, &mut big), OldStatus::Ok);
        assert_eq!(old_canonical_form(big, &mut ah, &mut al), OldStatus::CapExceeded);
        for d in [h, a, b, big] {
            old_digraph_free(d);
        }
    }
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/old_digraphs.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "typedef struct OldDigraph OldDigraph;",
        "OLD_STATUS_NOT_LOCATABLE = 4",
        "old_digraph_new(",
        "old_digraph_free(",
        "old_min_old_set(",
        "old_forcing_successors(",
        "old_canonical_form(",
        "old_tc_tree(",
        "old_last_error_message(",
    ] {
        assert!(text.contains(name), "header is missing {name}");
    }
    // Compile-check the header when a C compiler is around.
    if let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99"]).arg(&header).status() {
        assert!(status.success(), "header does not compile as C99");
    }
}
