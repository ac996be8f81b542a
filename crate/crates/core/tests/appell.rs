use qrank_core::appell::*;
use qrank_core::exactnum::{Cyclotomic, Rat};
use qrank_core::expr::Expr;
use qrank_core::qseries::{Monomial, QSeries};

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn same(a: &QSeries, b: &QSeries, o: Rat) {
    assert_eq!(a.first_difference(b, o).unwrap(), None, "\n{a}\n{b}");
}

fn samples() -> Vec<(Monomial, Monomial)> {
    vec![
        (Monomial::zeta(1, 5).times_q(1), Monomial::zeta(2, 5)),
        (Monomial::zeta(3, 7), Monomial::zeta(1, 7).times_q(Rat::new(1, 2))),
        (Monomial::zeta(2, 11).times_q(-1), Monomial::zeta(5, 11).times_q(2)),
    ]
}

#[test]
fn eval_special_value() {
    let m = appell_m(&Monomial::q(1), r(2), &Monomial::minus_one(), r(30)).unwrap();
    same(&m, &QSeries::constant(Cyclotomic::from_ratio(1, 2)), r(30));
}

#[test]
fn flip_laws() {
    let o = r(20);
    for (x, z) in samples() {
        let m = appell_m(&x, r(1), &z, o).unwrap();
        let f1 = appell_expr(&x.inv(), r(1), &z.inv())
            .unwrap()
            .times_mono(x.inv())
            .eval(o)
            .unwrap();
        same(&m, &f1, o);
        let f2 = (Expr::mono(x.inv()) - appell_expr(&x.times_q(1), r(1), &z).unwrap().times_mono(x.inv()))
            .eval(o)
            .unwrap();
        same(&m, &f2, o);
    }
}

#[test]
fn switching_formula() {
    let o = r(20);
    for (x, z1) in samples() {
        let z0 = Monomial::minus_one().times_q(Rat::new(1, 3));
        for p in [r(1), r(2)] {
            let lhs = (appell_expr(&x, p, &z1).unwrap() - appell_expr(&x, p, &z0).unwrap())
                .eval(o)
                .unwrap();
            let rhs = delta(&x, &z1, &z0, p, o).unwrap();
            same(&lhs, &rhs, o);
        }
    }
}

#[test]
fn orthogonality_relation() {
    let o = r(16);
    let zp = Monomial::zeta(1, 3).times_q(Rat::new(1, 2));
    for (x, z) in samples().into_iter().take(2) {
        for n in 2..=3i64 {
            for k in 0..n {
                let mut lhs = Vec::new();
                for t in 0..n {
                    let m = appell_expr(&(&Monomial::zeta(t, n) * &x), r(1), &z).unwrap();
                    lhs.push(m.times_mono(Monomial::zeta(-k * t, n)));
                }
                let lhs = Expr::sum(lhs).eval(o).unwrap();
                let arg = (-(-&x).pow(n)).times_q(n * (n - 1) / 2 - n * k);
                let pref = (-&x).pow(k).times_q(-(k + 1) * k / 2);
                let rhs = (appell_expr(&arg, r(n * n), &zp).unwrap().times_mono(pref)
                    + psi_expr(k, n, &x, &z, &zp, r(1)).unwrap())
                .scale_int(n)
                .eval(o)
                .unwrap();
                same(&lhs, &rhs, o);
            }
        }
    }
}

#[test]
fn lambert_form_instances() {
    assert!(lambert_form_check(&Monomial::zeta(1, 5), r(25)).passed());
    assert!(lambert_form_check(&Monomial::zeta(1, 7).times_q(1), r(25)).passed());
    let bad = lambert_form_check(&Monomial::q(1), r(10));
    assert_eq!(bad.verdict, qrank_core::Verdict::NonGeneric);
}

#[test]
fn generating_function_forms_agree() {
    let o = r(25);
    for d in 1..=4 {
        for z in [Monomial::zeta(1, 5), Monomial::zeta(2, 7)] {
            same(&o_d_direct(d, &z, o).unwrap(), &o_d_gen(d, &z, o).unwrap(), o);
        }
        let a = o_d_at_minus_one_expr(d).unwrap().eval(o).unwrap();
        let b = o_d_gen(d, &Monomial::minus_one(), o).unwrap();
        same(&a, &b, o);
    }
}

#[test]
fn normalized_generating_function_via_appell() {
    let o = r(20);
    for d in 1..=4 {
        let z = Monomial::zeta(1, 5);
        let direct = (Expr::int(1) + Expr::mono(z.clone()))
            .mul(o_d_direct_expr(d, &z).unwrap())
            .eval(o)
            .unwrap();
        let z0 = Monomial::zeta(2, 5).times_q(Rat::new(1, 2));
        let zp = Monomial::minus_one();
        let s = s_bar_d(d, &z, &z0, &zp, o).unwrap();
        same(&direct, &s, o);
    }
}

#[test]
fn psi_vanishing_instance() {
    let v = psi(
        0,
        3,
        &Monomial::q(9),
        &Monomial::minus_one(),
        &Monomial::minus_one(),
        r(18),
        r(60),
    )
    .unwrap();
    assert!(v.is_zero());
}
