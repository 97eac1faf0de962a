use std::time::Instant;

use klr_workbench::quiver_orbits::*;
use klr_workbench::root_data::{root_vectors_up_to, CartanDatum};

fn data() -> Vec<CartanDatum> {
    vec![CartanDatum::type_a(2), CartanDatum::type_a(3), CartanDatum::type_d(4)]
}

#[test]
fn orbit_counts_match_kostant() {
    let t = Instant::now();
    for d in data() {
        for nu in root_vectors_up_to(d.rank(), 4) {
            let c = compare_kostant(&d, &nu, 2).unwrap();
            assert!(c.passed, "{:?}: {:?}", nu.0, c.witness);
        }
    }
    eprintln!("kostant: {:?}", t.elapsed());
}

#[test]
fn counts_independent_of_orientation_and_q() {
    let t = Instant::now();
    for d in data() {
        for nu in root_vectors_up_to(d.rank(), 4) {
            let c = orientation_and_q_check(&d, &nu, &[2, 3]).unwrap();
            assert!(c.passed, "{:?}: {:?}", nu.0, c.witness);
        }
    }
    eprintln!("orientations: {:?}", t.elapsed());
}

#[test]
fn burnside_agrees_where_feasible() {
    let t = Instant::now();
    let mut checked = 0;
    for d in data() {
        for nu in root_vectors_up_to(d.rank(), 4) {
            for q in [2, 3] {
                let r = enumerate_orbits(&d, &nu, q, true).unwrap();
                let c = orbit_report_check(&r);
                assert!(c.passed, "{:?} q={q}: {:?}", nu.0, c.witness);
                checked += usize::from(r.burnside.is_some());
            }
        }
    }
    assert!(checked > 100);
    eprintln!("burnside ({checked} cases): {:?}", t.elapsed());
}

#[test]
fn non_prime_field_and_e6() {
    let d = CartanDatum::type_a(3);
    let r = enumerate_orbits(&d, &klr_workbench::RootVector(vec![1, 2, 1]), 4, true).unwrap();
    assert!(orbit_report_check(&r).passed);
    assert_eq!(r.count(), klr_workbench::root_data::kostant_count(&d, &r.nu).unwrap());
    let e6 = CartanDatum::type_e(6);
    let nu = klr_workbench::RootVector(vec![1, 1, 1, 1, 1, 1]);
    assert!(compare_kostant(&e6, &nu, 2).unwrap().passed);
}
