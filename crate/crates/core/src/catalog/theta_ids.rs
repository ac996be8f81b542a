//! Identities among theta functions `j(z; q)`.

use alloc::vec;
use alloc::vec::Vec;

use super::{denom_of, kv, level_of, r, Check, Entry, Sides};
use crate::error::Result;
use crate::exactnum::Rat;
use crate::expr::Expr;
use crate::qseries::{Monomial, QSeries};
use crate::theta::{theta_j, theta_product};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "theta-triple-product",
            family: "theta functions",
            anchor: "j(z;q) = (z)_inf (q/z)_inf (q)_inf = sum_n (-1)^n q^{n(n-1)/2} z^n",
            parameters: "five z samples at bases q, q^2, q^3",
            default_order: 30,
            checks: triple_product_checks,
        },
        Entry {
            id: "theta-vanishing",
            family: "theta functions",
            anchor: "j(q^n;q) = 0",
            parameters: "n in {-2, 0, 1, 3} at bases q and q^2",
            default_order: 30,
            checks: vanishing_checks,
        },
        Entry {
            id: "theta-quasi-period",
            family: "theta functions",
            anchor: "j(q^n x;q) = (-1)^n q^{-n(n-1)/2} x^{-n} j(x;q)",
            parameters: "three x samples, n in {-2, 1, 3}, bases q and q^2",
            default_order: 30,
            checks: quasi_period_checks,
        },
        Entry {
            id: "theta-inversion",
            family: "theta functions",
            anchor: "j(x;q) = j(q/x;q) = -x j(1/x;q)",
            parameters: "three x samples at bases q and q^2",
            default_order: 30,
            checks: inversion_checks,
        },
        Entry {
            id: "theta-closed-forms",
            family: "theta functions",
            anchor: "j(q;q^2) = J_1^2/J_2, j(q;q^3) = J_1, j(q;q^6) = J_1 J_6^2/(J_2 J_3), j(-1;q) = 2 J_2^2/J_1, j(-q;q^3) = J_2 J_3^2/(J_1 J_6), j(-q;q^6) = J_2^2 J_3 J_12/(J_1 J_4 J_6)",
            parameters: "q -> q^s for s in {1,2,3}",
            default_order: 30,
            checks: closed_form_checks,
        },
        Entry {
            id: "theta-product-shift",
            family: "theta functions",
            anchor: "j(x/q;q^2) j(q^2/x;q^2) = x^2 q^{-1} j(1/x;q) J_2^2/J_1",
            parameters: "three x samples",
            default_order: 30,
            checks: || x_checks(|x, o| {
                let lhs = Expr::theta(x.times_q(-1), 2) * Expr::theta(x.inv().times_q(2), 2);
                let rhs = Expr::product([
                    Expr::mono(x.pow(2).times_q(-1)),
                    Expr::theta(x.inv(), 1),
                    Expr::eta(&[(2, 2), (1, -1)]),
                ]);
                (lhs.eval(o), rhs.eval(o))
            }),
        },
        Entry {
            id: "theta-reflection-quotient",
            family: "theta functions",
            anchor: "j(-x;q)/(j(-x^2 q;q^2) j(x;q)) = -j(-1/x;q)/(j(-q/x^2;q^2) j(1/x;q))",
            parameters: "three x samples",
            default_order: 30,
            checks: || x_checks(|x, o| {
                let side = |y: &Monomial| {
                    Expr::theta(-y, 1)
                        .div(Expr::theta((-y.pow(2)).times_q(1), 2) * Expr::theta(y.clone(), 1))
                };
                (side(x).eval(o), side(&x.inv()).scale_int(-1).eval(o))
            }),
        },
        Entry {
            id: "theta-multisection",
            family: "theta functions",
            anchor: "j(z;q) = sum_{k<n} (-1)^k q^{k(k-1)/2} z^k j((-1)^{n+1} q^{n(n-1)/2 + nk} z^n; q^{n^2})",
            parameters: "n in {2,3}, three z samples",
            default_order: 30,
            checks: multisection_checks,
        },
        Entry {
            id: "theta-cubic-sum",
            family: "theta functions",
            anchor: "j(q x^3;q^3) + x j(q^2 x^3;q^3) = J_1 j(x^2;q)/j(x;q)",
            parameters: "three x samples",
            default_order: 30,
            checks: || x_checks(|x, o| {
                let x3 = x.pow(3);
                let lhs = Expr::theta(x3.times_q(1), 3) + Expr::mono(x.clone()) * Expr::theta(x3.times_q(2), 3);
                let rhs = Expr::eta(&[(1, 1)]) * Expr::theta(x.pow(2), 1).div(Expr::theta(x.clone(), 1));
                (lhs.eval(o), rhs.eval(o))
            }),
        },
        Entry {
            id: "theta-quadratic-product",
            family: "theta functions",
            anchor: "j(x;q) j(y;q) = j(-xy;q^2) j(-qy/x;q^2) - x j(-qxy;q^2) j(-y/x;q^2)",
            parameters: "three (x, y) samples",
            default_order: 30,
            checks: || xy_checks(|x, y, o| {
                let xy = x * y;
                let yx = y * &x.inv();
                let lhs = Expr::theta(x.clone(), 1) * Expr::theta(y.clone(), 1);
                let rhs = Expr::theta(-&xy, 2) * Expr::theta((-&yx).times_q(1), 2)
                    - Expr::product([
                        Expr::mono(x.clone()),
                        Expr::theta((-&xy).times_q(1), 2),
                        Expr::theta(-&yx, 2),
                    ]);
                (lhs.eval(o), rhs.eval(o))
            }),
        },
        Entry {
            id: "theta-quotient-difference",
            family: "theta functions",
            anchor: "j(y;q)/j(-y;q) - j(x;q)/j(-x;q) = 2x j(y/x;q^2) j(qxy;q^2)/(j(-x;q) j(-y;q))",
            parameters: "three (x, y) samples",
            default_order: 30,
            checks: || xy_checks(|x, y, o| {
                let ratio = |u: &Monomial| Expr::theta(u.clone(), 1).div(Expr::theta(-u, 1));
                let lhs = ratio(y) - ratio(x);
                let rhs = Expr::product([
                    Expr::mono(x.clone()),
                    Expr::theta(y * &x.inv(), 2),
                    Expr::theta((x * y).times_q(1), 2),
                    (Expr::theta(-x, 1) * Expr::theta(-y, 1)).inv(),
                ])
                .scale_int(2);
                (lhs.eval(o), rhs.eval(o))
            }),
        },
        Entry {
            id: "theta-quotient-multisection",
            family: "theta functions",
            anchor: "j(zx;q)/j(x;q) = J_n^3 j(z;q)/(J_1^3 j(x^n;q^n)) sum_{k<n} x^k j(z x^n q^k;q^n)/j(z q^k;q^n)",
            parameters: "n in {2,3}, three (x, z) samples",
            default_order: 30,
            checks: quotient_multisection_checks,
        },
        Entry {
            id: "cube-root-theta",
            family: "theta functions at cube roots of unity",
            anchor: "j(w;q) = (1-w) J_3",
            parameters: "w in {zeta_3, zeta_3^2}, q -> q^s for s in {1,2}",
            default_order: 30,
            checks: || cube_root_checks(|w| {
                (Expr::theta(w.clone(), 1), (Expr::int(1) - Expr::mono(w.clone())) * Expr::eta(&[(3, 1)]))
            }),
        },
        Entry {
            id: "cube-root-theta-negative",
            family: "theta functions at cube roots of unity",
            anchor: "j(-w;q) = (1+w) J_1^2 J_6/(J_2 J_3)",
            parameters: "w in {zeta_3, zeta_3^2}, q -> q^s for s in {1,2}",
            default_order: 30,
            checks: || cube_root_checks(|w| {
                (
                    Expr::theta(-w, 1),
                    (Expr::int(1) + Expr::mono(w.clone())) * Expr::eta(&[(1, 2), (6, 1), (2, -1), (3, -1)]),
                )
            }),
        },
        Entry {
            id: "cube-root-theta-square-base",
            family: "theta functions at cube roots of unity",
            anchor: "j(-wq;q^2) = J_1 J_4 J_6^2/(J_2 J_3 J_12)",
            parameters: "w in {zeta_3, zeta_3^2}, q -> q^s for s in {1,2}",
            default_order: 30,
            checks: || cube_root_checks(|w| {
                (
                    Expr::theta((-w).times_q(1), 2),
                    Expr::eta(&[(1, 1), (4, 1), (6, 2), (2, -1), (3, -1), (12, -1)]),
                )
            }),
        },
        Entry {
            id: "cube-root-theta-cube-base",
            family: "theta functions at cube roots of unity",
            anchor: "j(-wq;q^3) = J_9 (j(q^2;q^9)/j(-q;q^9) - w^2 q j(q^8;q^9)/j(-q^4;q^9))",
            parameters: "w in {zeta_3, zeta_3^2}, q -> q^s for s in {1,2}",
            default_order: 30,
            checks: || cube_root_checks(|w| {
                let t = |e: i64, p: i64| Expr::theta(Monomial::q(e), p);
                let tm = |e: i64, p: i64| Expr::theta(-Monomial::q(e), p);
                let rhs = Expr::eta(&[(9, 1)])
                    * (t(2, 9).div(tm(1, 9)) - Expr::mono(w.pow(2).times_q(1)) * t(8, 9).div(tm(4, 9)));
                (Expr::theta((-w).times_q(1), 3), rhs)
            }),
        },
        Entry {
            id: "cube-root-theta-sixth-base",
            family: "theta functions at cube roots of unity",
            anchor: "j(-wq;q^6) = J_18 (j(q^10;q^18)/j(-q^5;q^18) + wq j(q^14;q^18)/j(-q^7;q^18))",
            parameters: "w in {zeta_3, zeta_3^2}, q -> q^s for s in {1,2}",
            default_order: 30,
            checks: || cube_root_checks(|w| {
                let t = |e: i64, p: i64| Expr::theta(Monomial::q(e), p);
                let tm = |e: i64, p: i64| Expr::theta(-Monomial::q(e), p);
                let rhs = Expr::eta(&[(18, 1)])
                    * (t(10, 18).div(tm(5, 18)) + Expr::mono(w.times_q(1)) * t(14, 18).div(tm(7, 18)));
                (Expr::theta((-w).times_q(1), 6), rhs)
            }),
        },
        Entry {
            id: "cube-root-product",
            family: "theta functions at cube roots of unity",
            anchor: "j(x;q) j(xw;q) j(xw^2;q) = J_1^3 j(x^3;q^3)/J_3",
            parameters: "w in {zeta_3, zeta_3^2}, three x samples",
            default_order: 30,
            checks: product_checks,
        },
    ]
}

fn x_samples() -> [Monomial; 3] {
    [
        Monomial::zeta(1, 5),
        Monomial::zeta(3, 7).times_q(Rat::new(1, 2)),
        Monomial::zeta(2, 11).times_q(Rat::new(-1, 3)),
    ]
}

fn y_samples() -> [Monomial; 3] {
    [
        Monomial::zeta(2, 7),
        Monomial::zeta(1, 5).times_q(Rat::new(1, 4)),
        -Monomial::zeta(1, 3).times_q(Rat::new(2, 3)),
    ]
}

fn x_checks(f: fn(&Monomial, Rat) -> Sides) -> Vec<Check> {
    x_samples()
        .into_iter()
        .map(|x| {
            let level = level_of(&[&x], 4);
            let denom = denom_of(&[&x], 1);
            Check::new(vec![kv("x", &x)], level, denom, move |o| vec![f(&x, o)])
        })
        .collect()
}

fn xy_checks(f: fn(&Monomial, &Monomial, Rat) -> Sides) -> Vec<Check> {
    x_samples()
        .into_iter()
        .zip(y_samples())
        .map(|(x, y)| {
            let level = level_of(&[&x, &y], 4);
            let denom = denom_of(&[&x, &y], 1);
            Check::new(vec![kv("x", &x), kv("y", &y)], level, denom, move |o| {
                vec![f(&x, &y, o)]
            })
        })
        .collect()
}

fn triple_product_checks() -> Vec<Check> {
    let zs = [
        Monomial::zeta(1, 5),
        Monomial::zeta(3, 7).times_q(Rat::new(1, 2)),
        Monomial::zeta(2, 11).times_q(Rat::new(-1, 3)),
        Monomial::minus_one(),
        Monomial::q(Rat::new(1, 2)),
    ];
    let mut out = Vec::new();
    for p in 1..=3i64 {
        for z in zs.clone() {
            let level = level_of(&[&z], 1);
            let denom = denom_of(&[&z], 1);
            out.push(Check::new(
                vec![kv("z", &z), kv("base", Monomial::q(p))],
                level,
                denom,
                move |o| vec![(Ok(theta_j(&z, r(p), o)), Ok(theta_product(&z, r(p), o)))],
            ));
        }
    }
    out
}

/// `Σ_n (-1)^n q^{p n(n-1)/2} z^n` with no vanishing shortcut.
fn bilateral(z: &Monomial, p: Rat, order: Rat) -> QSeries {
    let f = |n: i64| p * (n * (n - 1) / 2) + z.exp() * n;
    let mut terms = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        while !(f(n) >= order && f(n + dir) > f(n)) {
            let m = (-z).pow(n).times_q(p * (n * (n - 1) / 2));
            terms.push((m.exp(), m.coeff()));
            n += dir;
        }
    }
    QSeries::from_terms(terms, Some(order))
}

fn vanishing_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1i64, 2] {
        for n in [-2i64, 0, 1, 3] {
            let z = Monomial::q(p * n);
            out.push(Check::new(
                vec![kv("z", &z), kv("base", Monomial::q(p))],
                1,
                1,
                move |o| vec![(Ok(bilateral(&z, r(p), o)), Ok(QSeries::zero()))],
            ));
        }
    }
    out
}

fn quasi_period_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1i64, 2] {
        for n in [-2i64, 1, 3] {
            for x in x_samples() {
                let level = level_of(&[&x], 1);
                let denom = denom_of(&[&x], 1);
                let inst = vec![kv("x", &x), kv("n", n), kv("base", Monomial::q(p))];
                out.push(Check::new(inst, level, denom, move |o| {
                    let lhs = Expr::theta(x.times_q(r(p) * n), p);
                    let pref = Monomial::minus_one().pow(n).times_q(-r(p) * (n * (n - 1) / 2)) * x.pow(-n);
                    let rhs = Expr::mono(pref) * Expr::theta(x.clone(), p);
                    vec![(lhs.eval(o), rhs.eval(o))]
                }));
            }
        }
    }
    out
}

fn inversion_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1i64, 2] {
        for x in x_samples() {
            let level = level_of(&[&x], 1);
            let denom = denom_of(&[&x], 1);
            out.push(Check::new(
                vec![kv("x", &x), kv("base", Monomial::q(p))],
                level,
                denom,
                move |o| {
                    let j = || Expr::theta(x.clone(), p).eval(o);
                    vec![
                        (j(), Expr::theta(x.inv().times_q(p), p).eval(o)),
                        (j(), (Expr::mono(-&x) * Expr::theta(x.inv(), p)).eval(o)),
                    ]
                },
            ));
        }
    }
    out
}

fn closed_forms() -> Vec<(Expr, Expr)> {
    let q = |e: i64| Monomial::q(e);
    vec![
        (Expr::theta(q(1), 2), Expr::eta(&[(1, 2), (2, -1)])),
        (Expr::theta(q(1), 3), Expr::eta(&[(1, 1)])),
        (Expr::theta(q(1), 6), Expr::eta(&[(1, 1), (6, 2), (2, -1), (3, -1)])),
        (
            Expr::theta(Monomial::minus_one(), 1),
            Expr::eta(&[(2, 2), (1, -1)]).scale_int(2),
        ),
        (Expr::theta(-q(1), 3), Expr::eta(&[(2, 1), (3, 2), (1, -1), (6, -1)])),
        (
            Expr::theta(-q(1), 6),
            Expr::eta(&[(2, 2), (3, 1), (12, 1), (1, -1), (4, -1), (6, -1)]),
        ),
    ]
}

fn substituted(e: &Expr, s: i64, o: Rat) -> Result<QSeries> {
    e.substitute_q_power(r(s))?.eval(o)
}

fn closed_form_checks() -> Vec<Check> {
    (1..=3i64)
        .map(|s| {
            Check::new(vec![kv("substitution", alloc::format!("q -> q^{s}"))], 1, 1, move |o| {
                closed_forms()
                    .iter()
                    .map(|(l, rt)| (substituted(l, s, o), substituted(rt, s, o)))
                    .collect::<Vec<Sides>>()
            })
        })
        .collect()
}

fn multisection_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in [2i64, 3] {
        for z in x_samples() {
            let level = level_of(&[&z], 4);
            let denom = denom_of(&[&z], 1);
            out.push(Check::new(vec![kv("n", n), kv("z", &z)], level, denom, move |o| {
                let mut terms = Vec::new();
                for k in 0..n {
                    let arg = (Monomial::minus_one().pow(n + 1) * z.pow(n)).times_q(n * (n - 1) / 2 + n * k);
                    let pref = Monomial::minus_one().pow(k).times_q(k * (k - 1) / 2) * z.pow(k);
                    terms.push(Expr::mono(pref) * Expr::theta(arg, n * n));
                }
                vec![(Expr::theta(z.clone(), 1).eval(o), Expr::sum(terms).eval(o))]
            }));
        }
    }
    out
}

fn quotient_multisection_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in [2i64, 3] {
        for (x, z) in x_samples().into_iter().zip(y_samples()) {
            let level = level_of(&[&x, &z], 4);
            let denom = denom_of(&[&x, &z], 1);
            out.push(Check::new(
                vec![kv("n", n), kv("x", &x), kv("z", &z)],
                level,
                denom,
                move |o| {
                    let lhs = Expr::theta(&z * &x, 1).div(Expr::theta(x.clone(), 1));
                    let xn = x.pow(n);
                    let mut terms = Vec::new();
                    for k in 0..n {
                        let num = Expr::theta((&z * &xn).times_q(k), n);
                        let den = Expr::theta(z.times_q(k), n);
                        terms.push(Expr::mono(x.pow(k)) * num.div(den));
                    }
                    let rhs = Expr::product([
                        Expr::eta(&[(n, 3), (1, -3)]),
                        Expr::theta(z.clone(), 1),
                        Expr::theta(xn.clone(), n).inv(),
                        Expr::sum(terms),
                    ]);
                    vec![(lhs.eval(o), rhs.eval(o))]
                },
            ));
        }
    }
    out
}

fn cube_root_checks(f: fn(&Monomial) -> (Expr, Expr)) -> Vec<Check> {
    let mut out = Vec::new();
    for w in [Monomial::zeta(1, 3), Monomial::zeta(2, 3)] {
        for s in [1i64, 2] {
            let inst = vec![kv("w", &w), kv("substitution", alloc::format!("q -> q^{s}"))];
            let w = w.clone();
            out.push(Check::new(inst, 3, 1, move |o| {
                let (l, rt) = f(&w);
                vec![(substituted(&l, s, o), substituted(&rt, s, o))]
            }));
        }
    }
    out
}

fn product_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for w in [Monomial::zeta(1, 3), Monomial::zeta(2, 3)] {
        for x in x_samples() {
            let level = level_of(&[&x, &w], 1);
            let denom = denom_of(&[&x], 1);
            let inst = vec![kv("w", &w), kv("x", &x)];
            let w = w.clone();
            out.push(Check::new(inst, level, denom, move |o| {
                let lhs = Expr::product([
                    Expr::theta(x.clone(), 1),
                    Expr::theta(&x * &w, 1),
                    Expr::theta(&x * &w.pow(2), 1),
                ]);
                let rhs = Expr::eta(&[(1, 3), (3, -1)]) * Expr::theta(x.pow(3), 3);
                vec![(lhs.eval(o), rhs.eval(o))]
            }));
        }
    }
    out
}
