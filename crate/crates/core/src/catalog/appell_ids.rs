//! Appell-Lerch sums: definition, symmetries, special value, switching and orthogonality.

use alloc::vec;
use alloc::vec::Vec;

use super::{denom_of, kv, level_of, pair, r, Check, Entry, Sides};
use crate::appell::{appell_expr, appell_m, delta, lambert_form_sides, psi_expr};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rat};
use crate::expr::Expr;
use crate::qseries::{geometric, Monomial, QSeries};
use crate::theta::{theta_product, theta_valuation};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "appell-definition",
            family: "Appell-Lerch sums",
            anchor: "m(x,q,z) = j(z;q)^{-1} sum_r (-1)^r q^{r(r-1)/2} z^r / (1 - q^{r-1} x z)",
            parameters: "three (x, z) samples at bases q and q^2; base substitution q -> q^s, s in {2,3}",
            default_order: 30,
            checks: definition_checks,
        },
        Entry {
            id: "appell-flip-inverse",
            family: "Appell-Lerch sums",
            anchor: "m(x,q,z) = x^{-1} m(1/x,q,1/z)",
            parameters: "three (x, z) samples",
            default_order: 30,
            checks: || sample_checks(|x, z, o| pair(|| appell_m(x, r(1), z, o), || {
                Expr::mono(x.inv()).mul(appell_expr(&x.inv(), r(1), &z.inv())?).eval(o)
            })),
        },
        Entry {
            id: "appell-flip-shift",
            family: "Appell-Lerch sums",
            anchor: "m(x,q,z) = x^{-1} - x^{-1} m(qx,q,z)",
            parameters: "three (x, z) samples",
            default_order: 30,
            checks: || sample_checks(|x, z, o| pair(|| appell_m(x, r(1), z, o), || {
                let xi = Expr::mono(x.inv());
                (xi.clone() - xi.mul(appell_expr(&x.times_q(1), r(1), z)?)).eval(o)
            })),
        },
        Entry {
            id: "appell-special-value",
            family: "Appell-Lerch sums",
            anchor: "m(q,q^2,-1) = 1/2",
            parameters: "q -> q^s for s in {1,2,3}",
            default_order: 30,
            checks: special_value_checks,
        },
        Entry {
            id: "appell-switch",
            family: "Appell-Lerch sums",
            anchor: "m(x,q,z1) - m(x,q,z0) = z0 J_1^3 j(z1/z0;q) j(x z0 z1;q) / (j(z0;q) j(z1;q) j(x z0;q) j(x z1;q))",
            parameters: "three (x, z1, z0) samples at bases q and q^2",
            default_order: 30,
            checks: switch_checks,
        },
        Entry {
            id: "appell-orthogonality",
            family: "Appell-Lerch sums",
            anchor: "sum_t zeta_n^{-kt} m(zeta_n^t x,q,z) = n q^{-k(k+1)/2} (-x)^k m(-q^{n(n-1)/2 - nk} (-x)^n, q^{n^2}, z') + n Psi_k^n(x,z,z';q)",
            parameters: "n in {2,3}, 0 <= k < n, three (x, z, z') samples",
            default_order: 30,
            checks: orthogonality_checks,
        },
        Entry {
            id: "appell-lambert-form",
            family: "Appell-Lerch sums",
            anchor: "j(q;q^2)^{-1} sum_n (-1)^n q^{n^2+n} / (1 - x q^n) = -x^{-1} m(q/x^2, q^2, x)",
            parameters: "x in {zeta_5, zeta_7 q, zeta_9^2 q^(1/2)}",
            default_order: 30,
            checks: lambert_checks,
        },
    ]
}

fn samples() -> [(Monomial, Monomial); 3] {
    [
        (Monomial::zeta(1, 5), Monomial::zeta(1, 7)),
        (
            Monomial::zeta(3, 7).times_q(Rat::new(1, 2)),
            Monomial::zeta(1, 3).times_q(Rat::new(1, 3)),
        ),
        (
            Monomial::zeta(2, 11).times_q(Rat::new(-1, 3)),
            -Monomial::q(Rat::new(1, 2)),
        ),
    ]
}

fn sample_checks(f: fn(&Monomial, &Monomial, Rat) -> Sides) -> Vec<Check> {
    samples()
        .into_iter()
        .map(|(x, z)| {
            let level = level_of(&[&x, &z], 1);
            let denom = denom_of(&[&x, &z], 1);
            Check::new(vec![kv("x", &x), kv("z", &z)], level, denom, move |o| {
                vec![f(&x, &z, o)]
            })
        })
        .collect()
}

/// `m(x, q^p, z)` summed term by term with the triple product in the denominator.
fn appell_naive(x: &Monomial, p: Rat, z: &Monomial, order: Rat) -> Result<QSeries> {
    let vj = theta_valuation(z, p).ok_or_else(|| Error::NonGenericParameter("j(z) vanishes".into()))?;
    let xz = x * z;
    let lead = |k: i64| -> Rat {
        let u = xz.times_q(p * (k - 1)).exp();
        p * (k * (k - 1) / 2) + z.exp() * k - u.min(r(0))
    };
    let mut slack = r(0);
    loop {
        let target = order + vj + slack;
        let mut sum = QSeries::zero_to(target);
        for dir in [1i64, -1] {
            let mut k = if dir == 1 { 0 } else { -1 };
            loop {
                let e = lead(k);
                if e >= target && lead(k + dir) > e {
                    break;
                }
                let mono = Monomial::minus_one().pow(k).times_q(p * (k * (k - 1) / 2)) * z.pow(k);
                let u = xz.times_q(p * (k - 1));
                let g = geometric(&u, target - mono.exp())?;
                sum = sum + g.mul_monomial(&mono);
                k += dir;
            }
        }
        let j = theta_product(z, p, target + vj + r(1));
        let m = sum.div(&j)?;
        if m.order().is_none_or(|x| x >= order) {
            return Ok(m.truncate(order));
        }
        slack += r(2) + if vj < r(0) { -vj } else { vj };
    }
}

fn definition_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1i64, 2] {
        for (x, z) in samples() {
            let level = level_of(&[&x, &z], 1);
            let denom = denom_of(&[&x, &z], 1);
            let inst = vec![kv("x", &x), kv("z", &z), kv("base", Monomial::q(p))];
            out.push(Check::new(inst, level, denom, move |o| {
                vec![pair(|| appell_m(&x, r(p), &z, o), || appell_naive(&x, r(p), &z, o))]
            }));
        }
    }
    for s in [2i64, 3] {
        let (x, z) = samples()[1].clone();
        let level = level_of(&[&x, &z], 1);
        let denom = denom_of(&[&x, &z], 1);
        let inst = vec![
            kv("x", &x),
            kv("z", &z),
            kv("substitution", alloc::format!("q -> q^{s}")),
        ];
        out.push(Check::new(inst, level, denom, move |o| {
            let sub = |m: &Monomial| m.pow(1).times_q(m.exp() * (s - 1));
            vec![pair(
                || appell_expr(&x, r(1), &z)?.substitute_q_power(r(s))?.eval(o),
                || appell_m(&sub(&x), r(s), &sub(&z), o),
            )]
        }));
    }
    out
}

fn special_value_checks() -> Vec<Check> {
    (1..=3i64)
        .map(|s| {
            Check::new(vec![kv("base", Monomial::q(2 * s))], 1, 1, move |o| {
                vec![pair(
                    || appell_m(&Monomial::q(s), r(2 * s), &Monomial::minus_one(), o),
                    || Ok(QSeries::constant(Cyclotomic::from_ratio(1, 2))),
                )]
            })
        })
        .collect()
}

fn switch_checks() -> Vec<Check> {
    let triples = [
        (
            Monomial::zeta(1, 5).times_q(1),
            Monomial::zeta(1, 7),
            Monomial::minus_one(),
            1i64,
        ),
        (
            Monomial::zeta(1, 5).times_q(1),
            Monomial::zeta(1, 7),
            Monomial::minus_one(),
            2,
        ),
        (
            Monomial::zeta(2, 9).times_q(Rat::new(1, 2)),
            Monomial::zeta(1, 4),
            Monomial::zeta(3, 7).times_q(Rat::new(1, 3)),
            1,
        ),
        (
            Monomial::zeta(3, 7),
            -Monomial::q(Rat::new(2, 3)),
            Monomial::zeta(1, 3),
            2,
        ),
    ];
    triples
        .into_iter()
        .map(|(x, z1, z0, p)| {
            let level = level_of(&[&x, &z1, &z0], 1);
            let denom = denom_of(&[&x, &z1, &z0], 1);
            let inst = vec![kv("x", &x), kv("z1", &z1), kv("z0", &z0), kv("base", Monomial::q(p))];
            Check::new(inst, level, denom, move |o| {
                vec![pair(
                    || (appell_expr(&x, r(p), &z1)? - appell_expr(&x, r(p), &z0)?).eval(o),
                    || delta(&x, &z1, &z0, r(p), o),
                )]
            })
        })
        .collect()
}

fn orthogonality_lhs(k: i64, n: i64, x: &Monomial, z: &Monomial) -> Result<Expr> {
    let mut terms = Vec::new();
    for t in 0..n {
        let m = appell_expr(&(Monomial::zeta(t, n) * x.clone()), r(1), z)?;
        terms.push(m.scale(Cyclotomic::root_of_unity(-k * t, n as u32)));
    }
    Ok(Expr::sum(terms))
}

fn orthogonality_rhs(k: i64, n: i64, x: &Monomial, z: &Monomial, zp: &Monomial) -> Result<Expr> {
    let mx = -x;
    let arg = (-mx.pow(n)).times_q(n * (n - 1) / 2 - n * k);
    let m = appell_expr(&arg, r(n * n), zp)?;
    let pref = mx.pow(k).times_q(-(k * (k + 1) / 2));
    Ok((m.times_mono(pref) + psi_expr(k, n, x, z, zp, r(1))?).scale_int(n))
}

fn orthogonality_checks() -> Vec<Check> {
    let triples = [
        (Monomial::zeta(1, 5), Monomial::zeta(1, 7), Monomial::zeta(2, 7)),
        (
            Monomial::zeta(3, 7).times_q(Rat::new(1, 2)),
            Monomial::zeta(1, 5).times_q(Rat::new(1, 3)),
            Monomial::minus_one(),
        ),
        (
            Monomial::zeta(2, 11).times_q(Rat::new(-1, 3)),
            -Monomial::q(Rat::new(1, 2)),
            Monomial::zeta(1, 5).times_q(Rat::new(1, 4)),
        ),
    ];
    let mut out = Vec::new();
    for n in [2i64, 3] {
        for k in 0..n {
            for (x, z, zp) in triples.clone() {
                let level = level_of(&[&x, &z, &zp], (2 * n) as u32);
                let denom = denom_of(&[&x, &z, &zp], 1);
                let inst = vec![kv("n", n), kv("k", k), kv("x", &x), kv("z", &z), kv("z'", &zp)];
                out.push(Check::new(inst, level, denom, move |o| {
                    vec![pair(
                        || orthogonality_lhs(k, n, &x, &z)?.eval(o),
                        || orthogonality_rhs(k, n, &x, &z, &zp)?.eval(o),
                    )]
                }));
            }
        }
    }
    out
}

fn lambert_checks() -> Vec<Check> {
    [
        Monomial::zeta(1, 5),
        Monomial::zeta(1, 7).times_q(1),
        Monomial::zeta(2, 9).times_q(Rat::new(1, 2)),
    ]
    .into_iter()
    .map(|x| {
        let level = level_of(&[&x], 1);
        let denom = denom_of(&[&x], 1);
        Check::new(vec![kv("x", &x)], level, denom, move |o| {
            vec![lambert_form_sides(&x, o)]
        })
    })
    .collect()
}
