//! One pass/fail line per acceptance criterion. Every comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use qrank::report::line;
use qrank::{run_suite, SuiteOptions};
use qrank_core::{IdentityReport, Rat, Verdict};

fn run(filter: &str, order: i64) -> Vec<IdentityReport> {
    let opts = SuiteOptions {
        filter: filter.into(),
        order: Some(Rat::from_integer(order)),
        jobs: 0,
    };
    run_suite(&opts).expect("suite runs").reports
}

fn matches(r: &IdentityReport, want: &[(&str, String)]) -> bool {
    want.iter()
        .all(|(k, v)| r.instantiation.iter().any(|(a, b)| a == k && b == v))
}

fn dam(d: i64, a: i64, m: i64) -> Vec<(&'static str, String)> {
    vec![("d", d.to_string()), ("a", a.to_string()), ("M", m.to_string())]
}

fn dm(d: i64, m: i64) -> Vec<(&'static str, String)> {
    vec![("d", d.to_string()), ("M", m.to_string())]
}

fn dz(d: i64, z: &str) -> Vec<(&'static str, String)> {
    vec![("d", d.to_string()), ("z", z.to_string())]
}

struct Outcome {
    reports: Vec<IdentityReport>,
    missing: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            reports: Vec::new(),
            missing: Vec::new(),
        }
    }

    fn add(&mut self, filter: &str, order: i64) -> &mut Self {
        let got = run(filter, order);
        if got.is_empty() {
            self.missing.push(format!("no entry matches `{filter}`"));
        }
        self.reports.extend(got);
        self
    }

    fn at_least(&mut self, filter: &str, order: i64, n: usize) -> &mut Self {
        let got = run(filter, order);
        if got.len() < n {
            self.missing
                .push(format!("`{filter}` has {} instantiations, wanted {n}", got.len()));
        }
        self.reports.extend(got);
        self
    }

    fn require(&mut self, cases: Vec<Vec<(&'static str, String)>>) -> &mut Self {
        for c in cases {
            if !self.reports.iter().any(|r| matches(r, &c)) {
                let s: Vec<String> = c.iter().map(|(k, v)| format!("{k}={v}")).collect();
                self.missing.push(format!("no check for {}", s.join(", ")));
            }
        }
        self
    }

    fn passed(&self) -> bool {
        self.missing.is_empty() && !self.reports.is_empty() && self.reports.iter().all(|r| r.verdict == Verdict::Pass)
    }
}

fn criterion(n: u32, title: &str, build: impl FnOnce(&mut Outcome)) -> bool {
    let t = Instant::now();
    let mut o = Outcome::new();
    build(&mut o);
    let ok = o.passed();
    println!(
        "criterion {n:>2} {}  {title} ({} checks, {:.1} s)",
        if ok { "PASS" } else { "FAIL" },
        o.reports.len(),
        t.elapsed().as_secs_f64()
    );
    if !ok {
        for m in &o.missing {
            println!("    {m}");
        }
        for r in o.reports.iter().filter(|r| r.verdict != Verdict::Pass) {
            println!("    {}", line(r));
        }
    }
    ok
}

fn main() -> ExitCode {
    let mut all = true;
    all &= criterion(
        1,
        "pair formula, d odd, a and M even, equals the definition to q^30",
        |o| {
            o.add("pair-even-even", 30)
                .require(vec![dam(1, 2, 2), dam(3, 2, 4), dam(1, 4, 6), dam(3, 4, 4)]);
        },
    );
    all &= criterion(
        2,
        "pair formula, d odd, a even, M odd, equals the definition to q^30",
        |o| {
            o.add("pair-even-odd", 30)
                .require(vec![dam(1, 2, 3), dam(3, 2, 3), dam(1, 2, 5)]);
        },
    );
    all &= criterion(
        3,
        "pair formula, d, a and M odd, with the a = M constant, to q^30",
        |o| {
            o.add("pair-odd-odd", 30)
                .require(vec![dam(1, 1, 3), dam(1, 3, 3), dam(3, 3, 3), dam(1, 3, 5)]);
        },
    );
    all &= criterion(4, "pair formula, d even, with the a = 1 constant, to q^30", |o| {
        o.add("pair-even-d", 30)
            .require(vec![dam(2, 1, 2), dam(2, 1, 3), dam(2, 2, 3), dam(4, 1, 3)]);
    });
    all &= criterion(
        5,
        "normalized generating function at two (z_0, z') choices, d <= 4, to q^40",
        |o| {
            o.add("normalized-gf-odd", 40).add("normalized-gf-even", 40);
            let cases = (1..=4).flat_map(|d| [dz(d, "zeta5^1"), dz(d, "zeta7^2")]).collect();
            o.require(cases);
        },
    );
    all &= criterion(
        6,
        "enumeration of overpartitions n <= 20 matches the Fourier tables; pbar(4) = 14",
        |o| {
            o.add("rank-statistic", 21)
                .add("m2-rank-statistic", 21)
                .add("gf-column-sum", 21);
            o.require(vec![
                vec![("d", "1".into())],
                vec![("d", "2".into())],
                vec![("route", "enumeration, n <= 12".into())],
            ]);
        },
    );
    all &= criterion(7, "five 3-dissections of eta quotients to q^120", |o| {
        for id in [
            "dissection-w",
            "dissection-f",
            "dissection-g",
            "dissection-h",
            "dissection-i",
        ] {
            o.add(id, 120);
        }
    });
    all &= criterion(
        8,
        "3-dissection of O_3(zeta_3;q) to q^60; residue counts to n = 30",
        |o| {
            o.add("o3-dissection", 60).add("o3-residues", 31);
            o.require(vec![
                vec![("class", "all".into())],
                vec![("route", "rank tables".into())],
            ]);
        },
    );
    all &= criterion(9, "Appell-Lerch and theta identities at >= 3 instantiations to q^30; combinations to q^60; Psi vanishing to q^100", |o| {
        for id in [
            "appell-flip-inverse",
            "appell-flip-shift",
            "appell-special-value",
            "appell-switch",
            "appell-lambert-form",
            "theta-quasi-period",
            "theta-inversion",
            "theta-product-shift",
            "theta-reflection-quotient",
            "theta-cubic-sum",
            "theta-quadratic-product",
            "theta-quotient-difference",
            "cube-root-theta",
            "cube-root-theta-negative",
            "cube-root-theta-square-base",
            "cube-root-theta-cube-base",
            "cube-root-theta-sixth-base",
            "cube-root-product",
        ] {
            o.at_least(id, 30, 3);
        }
        o.at_least("appell-orthogonality", 30, 15).at_least("theta-multisection", 30, 3).at_least("theta-quotient-multisection", 30, 3);
        let nk = (2..=3i64).flat_map(|n| (0..n).map(move |k| vec![("n", n.to_string()), ("k", k.to_string())])).collect();
        o.require(nk);
        for id in ["theta-quotient-combination", "eta-quotient-combination", "psi-combination"] {
            o.add(id, 60);
        }
        o.add("psi-vanishing", 100);
    });
    all &= criterion(
        10,
        "residue sums and reflection to q^30 for d <= 4, M <= 6; single deviations to q^25",
        |o| {
            o.add("deviation-residue-sum", 30).add("deviation-symmetry", 30);
            o.require((1..=4).map(|d| vec![("d", d.to_string())]).collect());
            o.add("single-*-modulus*", 25);
            o.require(vec![dm(1, 3), dm(2, 3), dm(1, 2), dm(2, 2), dm(3, 3)]);
        },
    );
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "some criteria fail" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
