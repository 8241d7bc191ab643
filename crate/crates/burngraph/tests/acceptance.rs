//! Acceptance battery: one test per criterion, each printing its pass/fail
//! line (visible with `--nocapture`; `burn suite` prints the same table).

use burngraph::suite;

fn check(id: usize) {
    let outcome = suite::run(id);
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn c01_path_closed_form() {
    check(1);
}

#[test]
fn c02_cycle_closed_form() {
    check(2);
}

#[test]
fn c03_clique_burning() {
    check(3);
}

#[test]
fn c04_matching_union() {
    check(4);
}

#[test]
fn c05_wheel_vs_cycle() {
    check(5);
}

#[test]
fn c06_spider_tightness() {
    check(6);
}

#[test]
fn c07_b_equals_two_characterization() {
    check(7);
}

#[test]
fn c08_solver_vs_brute_force() {
    check(8);
}

#[test]
fn c09_checker_equivalence() {
    check(9);
}

#[test]
fn c10_bound_sandwich() {
    check(10);
}

#[test]
fn c11_nordhaus_gaddum() {
    check(11);
}

#[test]
fn c12_ilt_verification() {
    check(12);
}

#[test]
fn c13_partition_round_trip() {
    check(13);
}

#[test]
fn c14_spanning_tree_identity() {
    check(14);
}

#[test]
fn c15_conjecture_reports() {
    check(15);
}
