//! Byte-exact command outputs. Each directory under `tests/golden` holds
//! `args` (one argument per line), `stdout`, `stderr` and `status`. Run with
//! `UPDATE_GOLDEN=1` to rewrite the expected files.

mod common;

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let failures = common::check_goldens(update);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn repeated_runs_are_identical() {
    std::env::set_current_dir(common::crate_dir()).expect("crate dir");
    for dir in common::golden_cases() {
        let args = common::golden_args(&dir);
        assert_eq!(
            fpalg::run(args.clone()),
            fpalg::run(args),
            "{}",
            dir.display()
        );
    }
}
