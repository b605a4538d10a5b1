use std::process::{Command, Output};

fn lemnisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lemnisc"))
        .args(args)
        .env_remove("LEMNISC_PRECISION")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn doubling_the_tip_reaches_the_origin() {
    let o = lemnisc(&["arc", "double", "1.0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("radius"));
}

#[test]
fn halving_the_origin_is_a_domain_error() {
    let o = lemnisc(&["arc", "halve", "0"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("domain"), "{}", stderr(&o));
}

#[test]
fn radicals_verify_at_forty_digits() {
    let o = lemnisc(&["--precision", "40", "verify", "radicals"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn nonagon_is_refused() {
    let o = lemnisc(&["ngon", "9", "--construct"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("not constructible"));
}

#[test]
fn numeric_decagon_as_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ten.svg");
    let o = lemnisc(&["ngon", "10", "--numeric", "--format", "svg", "-o", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn precision_floor() {
    let o = lemnisc(&["--precision", "14", "arc", "double", "0.5"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("15"));
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lemnisc"))
        .args(["arc", "double", "0.5"])
        .env("LEMNISC_PRECISION", "10")
        .output()
        .unwrap();
    assert!(!o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_lemnisc"))
        .args(["arc", "double", "0.5"])
        .env("LEMNISC_PRECISION", "50")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn trace_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("double.json");
    let p = path.to_str().unwrap();
    let o = lemnisc(&["trace", "double", "0.5", "-o", p]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = lemnisc(&["replay", p]);
    assert!(o.status.success(), "{}", stderr(&o));

    let mut text = std::fs::read_to_string(&path).unwrap();
    text = text.replacen("lemniscate-trace/1", "lemniscate-trace/0", 1);
    std::fs::write(&path, text).unwrap();
    assert!(!lemnisc(&["replay", p]).status.success());
}
