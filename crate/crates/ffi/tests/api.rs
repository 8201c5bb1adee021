use std::ffi::{CStr, CString};
use std::ptr;

use clusterfit_ffi::*;

fn parse(text: &str) -> *mut CfGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cf_graph_parse(c.as_ptr(), &mut g) }, CfStatus::Ok);
    g
}

fn last_error() -> String {
    let p = cf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

const K4: &str = "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";

#[test]
fn parse_measure_write_free() {
    let g = parse(K4);
    unsafe {
        assert_eq!(cf_graph_vertex_count(g), 4);
        assert_eq!(cf_graph_edge_count(g), 6);
        assert!(cf_graph_is_cubic(g));

        let members = [0usize, 1];
        let mut out = CfRational { num: 0, den: 0 };
        assert_eq!(cf_measure(g, CfMeasure::RelativeDensity, members.as_ptr(), 2, &mut out), CfStatus::Ok);
        assert_eq!(out, CfRational { num: 1, den: 5 });
        assert_eq!(cf_measure(g, CfMeasure::Editing, members.as_ptr(), 2, &mut out), CfStatus::Ok);
        assert_eq!(out, CfRational { num: 4, den: 1 });
        assert!(cf_last_error().is_null());

        let text = cf_graph_write(g);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), K4);
        cf_string_free(text);
        cf_graph_free(g);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("p 3 1\ne 0 0\n").unwrap();
        assert_eq!(cf_graph_parse(bad.as_ptr(), &mut g), CfStatus::Parse);
        assert!(last_error().contains("self-loop"));
        assert!(g.is_null());

        assert_eq!(cf_graph_parse(ptr::null(), &mut g), CfStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(cf_graph_parse(invalid.as_ptr().cast(), &mut g), CfStatus::InvalidUtf8);

        let k4 = parse(K4);
        let mut out = CfRational { num: 0, den: 0 };
        assert_eq!(cf_measure(k4, CfMeasure::Conductance, ptr::null(), 0, &mut out), CfStatus::InvalidArgument);
        assert!(last_error().contains("nonempty"));
        let far = [7usize];
        assert_eq!(cf_measure(k4, CfMeasure::Conductance, far.as_ptr(), 1, &mut out), CfStatus::OutOfRange);
        assert_eq!(cf_measure(ptr::null(), CfMeasure::Conductance, far.as_ptr(), 1, &mut out), CfStatus::NullPointer);

        let mut answer = false;
        let zero_den = CfRational { num: 1, den: 0 };
        assert_eq!(
            cf_decide(k4, CfProblem::MaxCut, 0, zero_den, &mut answer, ptr::null_mut()),
            CfStatus::InvalidArgument
        );

        let c4 = parse("p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
        let mut target = ptr::null_mut();
        let mut phi = out;
        assert_eq!(cf_reduce_conductance(c4, 1, &mut target, &mut phi), CfStatus::NotCubic);
        assert!(target.is_null());
        cf_graph_free(c4);
        cf_graph_free(k4);
        cf_graph_free(ptr::null_mut());
    }
}

#[test]
fn solvers_and_reductions() {
    let k4 = parse(K4);
    unsafe {
        let mut opt = std::mem::zeroed::<CfOptimum>();
        assert_eq!(cf_optimize(k4, CfProblem::Conductance, 0, 1, &mut opt), CfStatus::Ok);
        assert_eq!(opt.value, CfRational { num: 2, den: 3 });
        assert_eq!(opt.witness_mask, 0b0011);
        assert_eq!(cf_optimize(k4, CfProblem::Editing, 0, 1, &mut opt), CfStatus::InvalidArgument);
        assert_eq!(cf_optimize(k4, CfProblem::Editing, 2, 4, &mut opt), CfStatus::Ok);
        assert_eq!(opt.value, CfRational { num: 4, den: 1 });

        let mut target = ptr::null_mut();
        let mut phi = CfRational { num: 0, den: 0 };
        assert_eq!(cf_reduce_conductance(k4, 4, &mut target, &mut phi), CfStatus::Ok);
        assert_eq!(phi, CfRational { num: 1, den: 2 });
        assert_eq!(cf_graph_vertex_count(target), 8);
        assert_eq!(cf_graph_edge_count(target), 16);

        let mut answer = false;
        assert_eq!(cf_decide(target, CfProblem::Conductance, 0, phi, &mut answer, &mut opt), CfStatus::Ok);
        assert!(answer);
        assert_eq!(opt.value, phi);

        let mut k = 0usize;
        let mut r = phi;
        assert_eq!(cf_reduce_density(k4, 4, &mut k, &mut r), CfStatus::Ok);
        assert_eq!((k, r), (2, CfRational { num: 1, den: 5 }));
        assert_eq!(cf_reduce_editing(k4, 4, &mut k, &mut r), CfStatus::Ok);
        assert_eq!((k, r), (2, CfRational { num: 4, den: 1 }));

        cf_graph_free(target);
        cf_graph_free(k4);
    }
}

#[test]
fn from_edges_builds_graph() {
    let pairs = [0usize, 1, 1, 2];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(cf_graph_from_edges(3, pairs.as_ptr(), 2, &mut g), CfStatus::Ok);
        assert_eq!(cf_graph_edge_count(g), 2);
        cf_graph_free(g);
        let dup = [0usize, 1, 1, 0];
        assert_eq!(cf_graph_from_edges(3, dup.as_ptr(), 2, &mut g), CfStatus::InvalidArgument);
        assert!(last_error().contains("duplicate"));
    }
}
