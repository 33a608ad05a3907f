//! Acceptance gate: each test covers one claim group end to end and
//! prints a single pass/fail line.

use twocc::verify::{self, all_pass, Fault};

fn report(name: &str, rows: &[verify::Row]) {
    let failed: Vec<_> = rows.iter().filter(|r| !r.pass).collect();
    if failed.is_empty() {
        println!("criterion {name}: pass ({} rows)", rows.len());
    } else {
        println!("criterion {name}: FAIL");
        for r in failed {
            println!("  {} | {} | expected {} | got {}", r.claim, r.instance, r.expected, r.computed);
        }
    }
    assert!(all_pass(rows), "criterion {name} failed");
}

#[test]
fn criterion_01_formula_exactness() {
    report("1 formula-exactness", &verify::formula_exactness(false, Fault::None));
}

#[test]
fn criterion_02_eulerian_exact_values() {
    report("2 eulerian-exact-values", &verify::eulerian_exact_values(false));
}

#[test]
fn criterion_03_u_acyclic_bounds() {
    report("3 u-acyclic-bounds", &verify::u_acyclic_bounds(false));
}

#[test]
fn criterion_04_brute_u_acyclic() {
    report("4 brute-u-acyclic-optimal", &verify::brute_u_acyclic_exists(false));
}

#[test]
fn criterion_05_extremal_tightness() {
    report("5 extremal-tightness", &verify::extremal_tightness(false));
}

#[test]
fn criterion_06_decomposition_additivity() {
    report("6 decomposition-additivity", &verify::decomposition_additivity(false));
}

#[test]
fn criterion_07_defect_bounds() {
    report("7 defect-bounds", &verify::defect_pipeline(false));
}

#[test]
fn criterion_08_lower_bound_family() {
    report("8 lower-bound-family", &verify::lower_bound_family(false));
}

#[test]
fn criterion_09_deletion_sandwich() {
    report("9 deletion-sandwich", &verify::deletion_sandwich(false));
}

#[test]
fn criterion_10_equality_characterization() {
    report("10 equality-characterization", &verify::equality_characterization(false, Fault::None));
}

#[test]
fn fault_injection_is_detected() {
    // a corrupted formula must flip at least one row in both claim
    // groups that consume it
    assert!(!all_pass(&verify::formula_exactness(true, Fault::OffsetMValue)));
    assert!(!all_pass(&verify::equality_characterization(true, Fault::OffsetMValue)));
}
