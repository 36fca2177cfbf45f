use std::process::{Command, Output};

fn bforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bforms")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn symbolic_quadratic_discriminant() {
    let o = bforms(&["disc", "--form", "p0*Z^2+p1*Z+p2", "--symbolic", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4*p0*p2 - p1^2");
}

#[test]
fn generic_cubic_discriminant() {
    let o = bforms(&["disc", "--symbolic", "--n", "3"]);
    assert_eq!(stdout(&o), "27*p0^2*p3^2 - 18*p0*p1*p2*p3 + 4*p0*p2^3 + 4*p1^3*p3 - p1^2*p2^2");
}

#[test]
fn numeric_resultants() {
    let o = bforms(&["res", "--f", "Z - 1", "--g", "Z - 1"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "0".to_string()));
    let o = bforms(&["res", "--f", "Z^2 - 3Z + 2", "--g", "Z^2 - 7Z + 12"]);
    assert_eq!(stdout(&o), "12");
    let o = bforms(&["res", "--f", "Z^2 + 1", "--g", "Z - 3", "--field", "5"]);
    assert_eq!(stdout(&o), "0");
    let o = bforms(&["res", "--f", "X^2 - Y^2", "--g", "X + 2Y", "--homog", "--json"]);
    assert_eq!(json(&o)["resultant"], "3");
}

#[test]
fn symbolic_resultant_with_declared_order() {
    let o = bforms(&["res", "--f", "a*Z + b", "--g", "c*Z + d", "--symbolic", "--vars", "a,b,c,d"]);
    assert_eq!(stdout(&o), "a*d - b*c");
}

#[test]
fn sylvester_rows() {
    let o = bforms(&["sylvester", "--f", "Z^2 - 3Z + 2", "--g", "Z - 2", "--json"]);
    let rows = json(&o)["rows"].clone();
    assert_eq!(rows, serde_json::json!([["1", "-3", "2"], ["1", "-2", "0"], ["0", "1", "-2"]]));
}

#[test]
fn generators_and_viete() {
    let o = bforms(&["ehsp", "--n", "2", "--json"]);
    assert_eq!(json(&o)["p"], serde_json::json!(["x01*x02", "x01*x12 + x11*x02", "x11*x12"]));
    assert_eq!(stdout(&bforms(&["viete", "--points", "1:1, 1:2"])), "(1:3:2)");
    assert_eq!(stdout(&bforms(&["viete", "--points", "1:0,1:0"])), "(1:0:0)");
}

#[test]
fn express_symmetric_polynomials() {
    let o = bforms(&["express", "--poly", "x11^2*x12^2", "--n", "2"]);
    assert_eq!(stdout(&o), "P2^2");
    let o = bforms(&["express", "--poly", "x11*x02", "--n", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn membership_exit_codes() {
    let yes = bforms(&["member", "rnm", "--x", "1:-3:2", "--y", "1:-5:6"]);
    assert_eq!((yes.status.code(), stdout(&yes)), (Some(0), "true".to_string()));
    let no = bforms(&["member", "dn", "--x", "1:-3:2"]);
    assert_eq!((no.status.code(), stdout(&no)), (Some(1), "false".to_string()));
    let o = bforms(&["member", "xn", "--x", "1:2, 2:4", "--json"]);
    assert_eq!(json(&o)["member"], true);
    let o = bforms(&["member", "xnm", "--x", "1:2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verification_suites() {
    let o = bforms(&["verify", "resth", "--n", "2", "--m", "2"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "OK".to_string()));
    for check in ["resdisc", "ind", "inv"] {
        let o = bforms(&["verify", check, "--n", "3", "--json"]);
        assert_eq!(o.status.code(), Some(0), "{check}");
        assert_eq!(json(&o)["ok"], true);
    }
}

#[test]
fn scan_reports() {
    let o = bforms(&["scan", "quotient", "--q", "5", "--n", "2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&o);
    let keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "q", "n", "m", "points_scanned", "violations", "split_covered", "split_missed", "fiber_count", "orbit_histogram",
        "elapsed_ms",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(report["violations"], 0);
    let o = bforms(&["scan", "res", "--q", "5", "--n", "1", "--m", "1"]);
    assert_eq!(json(&o)["points_scanned"], 36);
    let o = bforms(&["scan", "disc", "--q", "5", "--n", "2"]);
    assert_eq!(json(&o)["m"], serde_json::Value::Null);
}

#[test]
fn error_exit_codes() {
    assert_eq!(bforms(&["nonsense"]).status.code(), Some(2));
    assert_eq!(bforms(&["res", "--f", "Z +", "--g", "Z"]).status.code(), Some(2));
    assert_eq!(bforms(&["res", "--f", "a*Z", "--g", "Z"]).status.code(), Some(2));
    assert_eq!(bforms(&["viete", "--points", "0:0"]).status.code(), Some(2));
    assert_eq!(bforms(&["scan", "disc", "--q", "9", "--n", "2"]).status.code(), Some(2));
    let o = bforms(&["disc", "--form", "0*Z^2 + Z + 1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("leading coefficient zero"));
    assert_eq!(bforms(&["scan", "quotient", "--q", "101", "--n", "4", "--m", "4"]).status.code(), Some(3));
}
