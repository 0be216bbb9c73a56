//! Acceptance criterion 1: `table --n-from 5 --n-to 8` must reproduce the
//! twelve classified rows exactly — weight matrices in lexicographic
//! order, anticanonical classes, and the published first plurigenera —
//! within the stated time budgets (60s with the h^0 column, 5s without).
//!
//! One pass/fail line is printed per row; every comparison is exact.
//!
//! KNOWN RED: the published h^0 for row 3 (n = 6, k = 6) is 3750, but the
//! dimension of the (4,2)-component of that Cox ring is 3150. The value
//! 3150 is confirmed by three independent routes (the chain-count dynamic
//! program, the Weyl/hook-content dimension of the branching piece, and
//! brute-force enumeration of pairwise-comparable pair multisets), and the
//! remaining eleven h^0 values match the published table with the same
//! code path. This test pins the published list verbatim, so it fails on
//! exactly that cell rather than papering over the discrepancy.

use std::process::Command;
use std::time::Instant;

const EXPECTED_MATRICES: [&str; 12] = [
    "1 1 1 0 1 1 0 1 0 0; 0 0 0 1 0 0 1 0 1 1",
    "1 1 0 0 1 0 0 0 0 -1; 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 1 0 1 1 1 0 1 1 0 1 0 0; 0 0 0 0 1 0 0 0 1 0 0 1 0 1 1",
    "1 1 1 0 0 1 1 0 0 1 0 0 0 0 -1; 0 0 0 1 1 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 1 1 0 1 1 1 1 0 1 1 1 0 1 1 0 1 0 0; 0 0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 0 1 0 1 1",
    "1 1 1 1 0 0 1 1 1 0 0 1 1 0 0 1 0 0 0 0 -1; 0 0 0 0 1 1 0 0 0 1 1 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 1 0 1 1 1 1 0 1 1 1 0 1 1 0 1 0 1 0; 0 0 0 0 1 1 0 0 0 1 1 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 0 0 0 1 1 0 0 0 1 0 0 0 0 0 0 -1 -1 -1; 0 0 0 1 1 1 0 0 1 1 1 0 1 1 1 1 1 1 2 2 2",
    "1 1 1 1 1 1 0 1 1 1 1 1 0 1 1 1 1 0 1 1 1 0 1 1 0 1 0 0; 0 0 0 0 0 0 1 0 0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 0 1 0 1 1",
    "1 1 1 1 1 0 0 1 1 1 1 0 0 1 1 1 0 0 1 1 0 0 1 0 0 0 0 -1; 0 0 0 0 0 1 1 0 0 0 0 1 1 0 0 0 1 1 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 1 1 0 1 1 1 1 1 0 1 1 1 1 0 1 1 1 0 1 1 0 1 0 1 0; 0 0 0 0 0 1 1 0 0 0 0 1 1 0 0 0 1 1 0 0 1 1 0 1 1 1 1 2",
    "1 1 1 1 0 0 0 1 1 1 0 0 0 1 1 0 0 0 1 0 0 0 0 0 0 -1 -1 -1; 0 0 0 0 1 1 1 0 0 0 1 1 1 0 0 1 1 1 0 1 1 1 1 1 1 2 2 2",
];
const EXPECTED_N: [u32; 12] = [5, 5, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8];
const EXPECTED_ANTICAN: [(i64, i64); 12] = [
    (3, 2),
    (1, 4),
    (4, 2),
    (2, 4),
    (5, 2),
    (3, 4),
    (5, 4),
    (1, 6),
    (6, 2),
    (4, 4),
    (6, 4),
    (2, 6),
];
const EXPECTED_H0: [&str; 12] = [
    "280", "266", "3750", "2745", "37422", "31251", "48206", "30030", "462462", "376376",
    "640333", "348985",
];

fn run_table(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_igrass"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "table run failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

/// Splits one CSV line respecting the quoted matrix field.
fn split_csv(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            ',' if !quoted => fields.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    fields.push(cur);
    fields
}

#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();
    let csv = run_table(&["table", "--n-from", "5", "--n-to", "8", "--format", "csv"]);
    let with_h0 = start.elapsed();

    let start = Instant::now();
    let _ = run_table(&[
        "table", "--n-from", "5", "--n-to", "8", "--format", "csv", "--no-h0",
    ]);
    let without_h0 = start.elapsed();

    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "no,n,matrix,antican_x,antican_y,fano,h0");
    let rows = &lines[1..];
    assert_eq!(rows.len(), 12, "expected 12 table rows, got {}", rows.len());

    let mut mismatches: Vec<String> = Vec::new();
    for (idx, line) in rows.iter().enumerate() {
        let fields = split_csv(line);
        let (no, n, matrix, ax, ay, h0) = (
            &fields[0], &fields[1], &fields[2], &fields[3], &fields[4], &fields[6],
        );
        let mut row_issues: Vec<String> = Vec::new();
        if no != &(idx + 1).to_string() {
            row_issues.push(format!("row number {no}"));
        }
        if n != &EXPECTED_N[idx].to_string() {
            row_issues.push(format!("n = {n}, expected {}", EXPECTED_N[idx]));
        }
        if matrix != EXPECTED_MATRICES[idx] {
            row_issues.push(format!(
                "matrix {matrix:?}, expected {:?}",
                EXPECTED_MATRICES[idx]
            ));
        }
        let (eax, eay) = EXPECTED_ANTICAN[idx];
        if (ax.as_str(), ay.as_str()) != (eax.to_string().as_str(), eay.to_string().as_str()) {
            row_issues.push(format!("-K = ({ax},{ay}), expected ({eax},{eay})"));
        }
        if h0 != EXPECTED_H0[idx] {
            row_issues.push(format!("h0 = {h0}, expected {}", EXPECTED_H0[idx]));
        }
        if row_issues.is_empty() {
            println!("ACCEPTANCE 1 row {:>2}: PASS", idx + 1);
        } else {
            println!("ACCEPTANCE 1 row {:>2}: FAIL ({})", idx + 1, row_issues.join("; "));
            mismatches.push(format!("row {}: {}", idx + 1, row_issues.join("; ")));
        }
    }
    assert!(
        with_h0.as_secs() < 60,
        "table with h0 took {with_h0:?} (budget 60s)"
    );
    assert!(
        without_h0.as_secs() < 5,
        "table without h0 took {without_h0:?} (budget 5s)"
    );
    println!(
        "ACCEPTANCE 1 timings: {with_h0:?} with h0 (< 60s), {without_h0:?} without (< 5s)"
    );
    if mismatches.is_empty() {
        println!("ACCEPTANCE 1 table reproduction: PASS");
    } else {
        println!("ACCEPTANCE 1 table reproduction: FAIL");
    }
    assert!(
        mismatches.is_empty(),
        "table reproduction mismatches (see the module docs for the row 3 \
         h^0 analysis: the computed 3150 is cross-verified three independent \
         ways against the published 3750):\n{}",
        mismatches.join("\n")
    );
}
