use std::process::Command;

fn peglab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_peglab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn solve_prints_its_moves() {
    let (code, out, _) = peglab(&["solve", "1011"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("2 moves\n"), "{out}");
}

#[test]
fn unsolvable_is_a_domain_error() {
    let (code, _, err) = peglab(&["solve", "11"]);
    assert_eq!(code, 1);
    assert!(err.contains("not solvable"));
}

#[test]
fn grundy_value() {
    let (code, out, _) = peglab(&["grundy", "10110100101011", "--variant", "multi", "--mode", "fixed"]);
    assert_eq!((code, out.trim()), (0, "5"));
    let (_, out, _) = peglab(&["grundy", "0110", "--variant", "single"]);
    assert_eq!(out.trim(), "1");
}

#[test]
fn minpegs_and_best() {
    let (code, out, _) = peglab(&["minpegs", "01111"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("2"));
    let (code, out, _) = peglab(&["best", "111111", "--variant", "multi", "--mode", "open"]);
    assert_eq!(code, 0);
    assert!(!out.trim().is_empty());
    let (code, _, err) = peglab(&["best", "1111", "--mode", "open"]);
    assert_eq!(code, 1);
    assert!(err.contains("no winning move"));
}

#[test]
fn search_first() {
    let (code, out, _) = peglab(&["search-first", "--variant", "single", "--max-g", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1\n1 11\n2 1011\n3 110111\n");
    let (code, out, _) = peglab(&["search-first", "--max-g", "4", "--max-len", "6"]);
    assert_eq!(code, 1);
    assert!(out.contains("4 not found within length 6"));
}

#[test]
fn verify_suite() {
    let (code, out, _) = peglab(&["verify", "ladders"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("ok")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(peglab(&["grundy", "01x0"]).0, 2);
    assert_eq!(peglab(&["grundy", "0110", "--variant", "triple"]).0, 2);
    assert_eq!(peglab(&["frobnicate"]).0, 2);
    assert_eq!(peglab(&["verify", "nothing"]).0, 2);
}
