use qrank_core::appell::{appell_expr, lambda_expr, psi_expr};
use qrank_core::exactnum::BigInt;
use qrank_core::exactnum::{Cyclotomic, Rat};
use qrank_core::expr::Expr;
use qrank_core::overpartitions::*;
use qrank_core::qseries::{Monomial, QSeries};

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn spec(d: i64, a: i64, m: i64) -> DeviationSpec {
    DeviationSpec::new(d, a, m).unwrap()
}

fn same(a: &QSeries, b: &QSeries, o: Rat) {
    assert_eq!(a.first_difference(b, o).unwrap(), None, "\n{a}\n{b}");
}

/// The case (i) display with `q^{-a²/4 + a(1-d²)/2}`, `q^{M²/2}` and `Ψ(…; q²)`.
fn e1_as_printed(d: i64, a: i64, m: i64, p: &GenericParams) -> Expr {
    let d2 = d * d;
    let mut terms = Vec::new();
    if a == m {
        terms.push(Expr::int(1));
    }
    let s = |e: i64| Monomial::minus_one().pow(e.rem_euclid(2));
    let pref = s(a / 2).times_q(Rat::new(-a * a, 4) + Rat::new(a * (1 - d2), 2));
    let x = s(m / 2 + 1).times_q(Rat::new(m * m, 4) - Rat::new(a * m, 2) + Rat::new(m * (1 - d2), 2));
    terms.push(
        appell_expr(&x, Rat::new(m * m, 2), &p.z1)
            .unwrap()
            .times_mono(pref)
            .scale_int(2),
    );
    terms.push(
        psi_expr(a / 2 - 1, m / 2, &Monomial::q(-d2), &Monomial::minus_one(), &p.z1, r(2))
            .unwrap()
            .times_mono(Monomial::q(-d2))
            .scale_int(-2),
    );
    let mut tail = Vec::new();
    for j in 1..m {
        let c =
            Cyclotomic::root_of_unity(-a * j, m as u32) * (Cyclotomic::one() - Cyclotomic::root_of_unity(j, m as u32));
        tail.push(
            lambda_expr(d, &Monomial::zeta(j, m), &p.z0, &Monomial::minus_one())
                .unwrap()
                .scale(c),
        );
    }
    terms.push(Expr::sum(tail).scale(Cyclotomic::from_ratio(2, m)));
    Expr::sum(terms)
}

#[test]
fn printed_case_one_holds_only_for_d_one() {
    let o = r(20);
    for (d, a, m, holds) in [(1, 2, 2, true), (1, 4, 6, true), (3, 2, 4, false), (3, 4, 4, false)] {
        let p = GenericParams::default_for(&spec(d, a, m));
        let printed = e1_as_printed(d, a, m, &p).eval(o).unwrap();
        let truth = deviation_pair_by_definition(spec(d, a, m), o).unwrap();
        let diff = printed.first_difference(&truth, o).unwrap();
        println!("({d},{a},{m}) {diff:?}");
        assert_eq!(diff.is_none(), holds, "({d},{a},{m})");
    }
}

#[test]
fn verbatim_odd_case_at_a_one_misses_the_constant() {
    let o = r(20);
    let s = spec(1, 1, 3);
    let p = GenericParams::default_for(&s);
    let verbatim = pair_formula_expr(s, PairCase::OddOdd, &p).unwrap().eval(o).unwrap();
    let truth = deviation_pair_by_definition(s, o).unwrap();
    same(&(truth - verbatim), &QSeries::from_integer(1).truncate(o), o);
}

#[test]
fn enumeration_matches_generating_function() {
    for d in [1, 2] {
        assert_eq!(
            rank_tables(d, 14).unwrap(),
            rank_tables_by_enumeration(d, 14).unwrap(),
            "d={d}"
        );
    }
    let t = rank_tables(1, 4).unwrap();
    assert_eq!(t.count(0, 1), BigInt::from(2));
    assert_eq!(t.total(4), BigInt::from(14));
}

#[test]
fn table_invariants() {
    let p = pbar(24);
    for d in 1..=4 {
        let t = rank_tables(d, 24).unwrap();
        for n in 0..=24u32 {
            assert_eq!(t.total(n), p[n as usize], "d={d} n={n}");
            assert!(row_width(&t, n) <= n as i64);
            for m in 0..=n as i64 {
                assert_eq!(t.count(m, n), t.count(-m, n), "d={d} m={m} n={n}");
            }
        }
    }
}

#[test]
fn pair_formulas_match_definition() {
    let o = r(24);
    let cases = [
        (1, 2, 2),
        (3, 2, 4),
        (1, 4, 6),
        (3, 4, 4),
        (1, 2, 3),
        (3, 2, 3),
        (1, 2, 5),
        (1, 1, 3),
        (1, 3, 3),
        (3, 3, 3),
        (1, 3, 5),
        (2, 1, 2),
        (2, 1, 3),
        (2, 2, 3),
        (4, 1, 3),
    ];
    for (d, a, m) in cases {
        let s = spec(d, a, m);
        let truth = deviation_pair_by_definition(s, o).unwrap();
        for p in [GenericParams::default_for(&s), GenericParams::roots(13)] {
            let f = deviation_pair_by_formula(s, &p, o).unwrap();
            same(&f, &truth, o);
        }
    }
}

#[test]
fn every_residue_reaches_a_formula() {
    let o = r(12);
    for d in 1..=4 {
        for m in 2..=5 {
            for a in 0..=m {
                let s = spec(d, a, m);
                let f = deviation_pair_by_formula(s, &GenericParams::default_for(&s), o).unwrap();
                same(&f, &deviation_pair_by_definition(s, o).unwrap(), o);
            }
        }
    }
}

#[test]
fn single_deviations() {
    let o = r(16);
    for (d, m) in [(1, 3), (2, 3), (1, 2), (2, 2), (3, 3), (1, 4), (2, 4), (1, 5)] {
        for a in 0..m {
            let s = spec(d, a, m);
            let truth = deviation_by_definition(s, o).unwrap();
            let f = single_deviation(s, &GenericParams::default_for(&s), o).unwrap();
            same(&f, &truth, o);
            same(&deviation_by_fourier(s, o).unwrap(), &truth, o);
        }
    }
}

#[test]
fn middle_residues_agree_for_odd_moduli() {
    let o = r(20);
    for d in 1..=3 {
        for m in [3, 5, 7] {
            let a = deviation_by_definition(spec(d, (m + 1) / 2, m), o).unwrap();
            let b = deviation_by_definition(spec(d, (m - 1) / 2, m), o).unwrap();
            same(&a, &b, o);
        }
    }
}

#[test]
fn deviations_sum_to_zero_and_reflect() {
    let o = r(20);
    for d in 1..=4u32 {
        let t = rank_tables(d, 19).unwrap();
        for m in 2..=6 {
            let devs: Vec<QSeries> = (0..m).map(|a| deviation_from_table(&t, a, m, o).unwrap()).collect();
            let total = devs.iter().cloned().fold(QSeries::zero_to(o), |x, y| x + y);
            assert!(total.is_zero());
            for a in 1..m {
                same(&devs[a as usize], &devs[(m - a) as usize], o);
            }
        }
    }
}

#[test]
fn modulus_two_by_enumeration() {
    let o = r(21);
    let ops: Vec<Vec<Overpartition>> = (0..=20).map(enumerate_overpartitions).collect();
    let d0 = deviation_by_definition(spec(1, 0, 2), o).unwrap();
    let d1 = deviation_by_definition(spec(1, 1, 2), o).unwrap();
    assert!((d0.clone() + d1).is_zero());
    for (n, list) in ops.iter().enumerate() {
        let even = list.iter().filter(|p| p.rank().rem_euclid(2) == 0).count() as i64;
        let c = Cyclotomic::from_ratio(2 * even - list.len() as i64, 2);
        assert_eq!(d0.coeff(r(n as i64)).unwrap(), c, "n={n}");
    }
}

#[test]
fn rejects_out_of_range_specs() {
    assert!(DeviationSpec::new(1, 5, 4).is_err());
    assert!(DeviationSpec::new(0, 1, 4).is_err());
    assert!(DeviationSpec::new(1, 1, 1).is_err());
}
