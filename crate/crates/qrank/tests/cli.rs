use std::process::{Command, Output};

use qrank::format::series_from_json;
use qrank::report::RunReport;
use qrank_core::appell::o_d_direct;
use qrank_core::{Monomial, Rat};

fn qrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrank"))
        .args(args)
        .env_remove("QRANK_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_prints_exact_coefficients() {
    let o = qrank(&["expand", "--series", "W2", "--order", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "9 + 108*q^1 + 810*q^2 + O(q^3)");
    let o = qrank(&["expand", "--series", "Od", "--d", "1", "--z", "zeta5^1", "--order", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("@zeta5"), "{}", stdout(&o));
}

#[test]
fn expand_writes_json_that_reads_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    let o = qrank(&[
        "expand",
        "--series",
        "Od",
        "--d",
        "2",
        "--z",
        "zeta5^2*q^1/2",
        "--order",
        "6",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = series_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let z = Monomial::zeta(2, 5).times_q(Rat::new(1, 2));
    assert_eq!(s, o_d_direct(2, &z, Rat::from_integer(6)).unwrap());
}

#[test]
fn expand_reaches_minus_one() {
    let o = qrank(&["expand", "--series", "Od", "--d", "1", "--z", "-1", "--order", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn environment_order_is_the_default() {
    let o = Command::new(env!("CARGO_BIN_EXE_qrank"))
        .args(["expand", "--series", "I-lhs"])
        .env("QRANK_DEFAULT_ORDER", "4")
        .output()
        .unwrap();
    assert!(stdout(&o).trim_end().ends_with("O(q^4)"), "{}", stdout(&o));
}

#[test]
fn deviation_both_reports_a_verdict() {
    let o = qrank(&[
        "deviation",
        "--d",
        "1",
        "--a",
        "2",
        "--M",
        "3",
        "--order",
        "12",
        "--pair",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("definition: ") && text.contains("formula: "));
    assert!(text.lines().last().unwrap().starts_with("pass"), "{text}");
    let o = qrank(&[
        "deviation",
        "--d",
        "2",
        "--a",
        "1",
        "--M",
        "2",
        "--order",
        "10",
        "--method",
        "definition",
    ]);
    assert!(o.status.success());
}

#[test]
fn dissect_prints_each_component() {
    let o = qrank(&["dissect", "--series", "I-lhs", "--parts", "3", "--order", "12"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("0: "));
}

#[test]
fn verify_writes_reports_and_exits_zero_on_pass() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let o = qrank(&[
        "verify",
        "--filter",
        "theta-*",
        "--order",
        "8",
        "--jobs",
        "2",
        "--quiet",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let rep: RunReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(rep.run.failed, 0);
    assert_eq!(rep.run.checks, rep.entries.len());
    assert!(rep.entries.iter().all(|e| e.id.starts_with("theta-") && e.order == "8"));
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows, rep.entries.len() + 1);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("r.json");
        let o = qrank(&[
            "verify",
            "--filter",
            "appell-s*",
            "--order",
            "6",
            "--quiet",
            "--json",
            json.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        let mut rep: RunReport = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
        rep.run.wall_time_ms = 0;
        rep.run.jobs = 0;
        rep.entries.iter_mut().for_each(|e| e.wall_time_ms = None);
        rep
    };
    assert_eq!(run(), run());
}

#[test]
fn tables_export_csv() {
    let o = qrank(&["tables", "--d", "2", "--maxN", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("d,m,n,count\n2,0,0,1\n"), "{text}");
    let total: u64 = text
        .lines()
        .skip(1)
        .filter(|l| l.split(',').nth(2) == Some("4"))
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 14);
    let e = qrank(&["tables", "--d", "2", "--maxN", "4", "--route", "enumeration"]);
    assert_eq!(stdout(&e), text);
}

#[test]
fn errors_exit_two() {
    assert_eq!(
        qrank(&["expand", "--series", "nope", "--order", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qrank(&["verify", "--filter", "[", "--order", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qrank(&["deviation", "--d", "0", "--a", "1", "--M", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn list_shows_every_entry() {
    let o = qrank(&["list"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), qrank_core::catalog::entries().len());
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("o3-dissection\tL=3\tD=1\torder=60")));
}
