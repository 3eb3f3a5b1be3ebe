use slc_invariants::report::discrepancy_report;

#[test]
fn discrepancy_report_matches_golden_file() {
    let golden = include_str!("golden/discrepancy_report.txt");
    assert_eq!(discrepancy_report(), golden);
}

#[test]
fn golden_file_states_both_orders() {
    let golden = include_str!("golden/discrepancy_report.txt");
    assert!(golden.contains("649"));
    assert!(golden.contains("651"));
}
