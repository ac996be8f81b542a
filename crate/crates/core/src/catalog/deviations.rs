//! Closed formulas for rank deviations and the generating-function identities behind them.

use alloc::vec;
use alloc::vec::Vec;

use super::{kv, level_of, pair, Check, Entry, Sides};
use crate::appell::{o_d_at_minus_one_expr, o_d_direct, o_d_direct_expr, o_d_gen, o_d_gen_expr, s_bar_d};
use crate::error::Result;
use crate::exactnum::{BigRational, Cyclotomic, Rat};
use crate::expr::Expr;
use crate::overpartitions::{
    deviation_by_fourier, deviation_from_table, deviation_pair_by_formula, rank_tables, single_deviation,
    DeviationSpec, GenericParams, RankTables,
};
use crate::qseries::{Monomial, QSeries};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "pair-even-even",
            family: "rank deviations",
            anchor: "D_d(a,M) + D_d(a-1,M) for d odd, a and M even: Appell-Lerch sum in q^{d^2 M^2/2}, Psi^{M/2}, and the Lambda tail, plus [a = M]",
            parameters: "(d,a,M) in {(1,2,2), (3,2,4), (1,4,6), (3,4,4)}; z', z'', z_0 at two prime levels",
            default_order: 40,
            checks: || pair_checks(&[(1, 2, 2), (3, 2, 4), (1, 4, 6), (3, 4, 4)]),
        },
        Entry {
            id: "pair-even-odd",
            family: "rank deviations",
            anchor: "D_d(a,M) + D_d(a-1,M) for d odd, a even, M odd",
            parameters: "(d,a,M) in {(1,2,3), (3,2,3), (1,2,5), (3,4,5)}",
            default_order: 40,
            checks: || pair_checks(&[(1, 2, 3), (3, 2, 3), (1, 2, 5), (3, 4, 5)]),
        },
        Entry {
            id: "pair-odd-odd",
            family: "rank deviations",
            anchor: "D_d(a,M) + D_d(a-1,M) for d odd, a and M odd, plus [a = M]",
            parameters: "(d,a,M) in {(1,1,3), (1,3,3), (3,3,3), (1,3,5)}",
            default_order: 40,
            checks: || pair_checks(&[(1, 1, 3), (1, 3, 3), (3, 3, 3), (1, 3, 5)]),
        },
        Entry {
            id: "pair-even-d",
            family: "rank deviations",
            anchor: "D_d(a,M) + D_d(a-1,M) for d even, plus [a = 1]",
            parameters: "(d,a,M) in {(2,1,2), (2,1,3), (2,2,3), (4,1,3), (2,3,4)}",
            default_order: 40,
            checks: || pair_checks(&[(2, 1, 2), (2, 1, 3), (2, 2, 3), (4, 1, 3), (2, 3, 4)]),
        },
        Entry {
            id: "pair-reflection",
            family: "rank deviations",
            anchor: "D_d(a,M) + D_d(a-1,M) for d odd, a odd, M even, through a -> M + 1 - a",
            parameters: "(d,a,M) in {(1,1,2), (1,3,4), (3,1,4), (1,5,6)}",
            default_order: 40,
            checks: || pair_checks(&[(1, 1, 2), (1, 3, 4), (3, 1, 4), (1, 5, 6)]),
        },
        Entry {
            id: "normalized-gf-odd",
            family: "generating functions",
            anchor: "(1+z) O_d(z;q) = (1-z)(1 - 2m(q^{d^2}/z^2, q^{2d^2}, z') + 2 Lambda(d, z, z_0, z'))",
            parameters: "d in {1,3}, z in {zeta_5, zeta_7^2}, two (z_0, z') choices",
            default_order: 40,
            checks: || normalized_checks(&[1, 3]),
        },
        Entry {
            id: "normalized-gf-even",
            family: "generating functions",
            anchor: "(1+z) O_d(z;q) = (1-z)(-1 + 2m(...) + 2(-1)^{d/2} z q^{-d^2/4} Psi_0^{d/2}(z^{2/d} q^{1-d}, q, z'; q^2))",
            parameters: "d in {2,4}, z in {zeta_5, zeta_7^2}, two z' choices",
            default_order: 40,
            checks: || normalized_checks(&[2, 4]),
        },
        Entry {
            id: "gf-single-sum",
            family: "generating functions",
            anchor: "O_d(z;q) from the single bilateral sum equals the one-sided double-divisor form",
            parameters: "d in 1..=4, z in {zeta_5, zeta_7^2, zeta_9^4 q^(1/3)}",
            default_order: 40,
            checks: single_sum_checks,
        },
        Entry {
            id: "fourier-pair",
            family: "generating functions",
            anchor: "(1/M) sum_{j=1}^{M-1} zeta_M^{-aj} (1 + zeta_M^j) O_d(zeta_M^j) = D_d(a,M) + D_d(a-1,M)",
            parameters: "(d,a,M) in {(1,2,3), (2,1,3), (3,2,4), (2,2,4), (1,0,5)}",
            default_order: 40,
            checks: fourier_pair_checks,
        },
        Entry {
            id: "root-of-unity-sum",
            family: "generating functions",
            anchor: "sum_{j<n} zeta_n^{sj} = n if n | s, else 0",
            parameters: "n in 1..=12, s in -n..=2n",
            default_order: 1,
            checks: root_sum_checks,
        },
        Entry {
            id: "single-odd-modulus",
            family: "single deviations",
            anchor: "D_d((M+1)/2 + n, M) = (D_n - D_{n-1})/2 with D_n a sum of pair formulas",
            parameters: "(d,M) in {(1,3), (2,3), (3,3), (1,5), (2,5)}, every residue",
            default_order: 40,
            checks: || single_checks(&[(1, 3), (2, 3), (3, 3), (1, 5), (2, 5)]),
        },
        Entry {
            id: "telescoping-reindex",
            family: "single deviations",
            anchor: "sum_{i<=n} (D((M+1)/2 + i) + D((M-1)/2 - i)) = sum_{i<=n} (D((M+1)/2 - n + 2i) + D((M+1)/2 - n + 2i - 1))",
            parameters: "(d,M) in {(1,5), (2,7), (3,3)}, 0 <= n <= (M-1)/2",
            default_order: 40,
            checks: reindex_checks,
        },
        Entry {
            id: "single-even-modulus-odd-d",
            family: "single deviations",
            anchor: "D_d(n,M) = (-1)^n O_d(-1)/M + (1/M) sum_{k<M/2} (1-zeta_M^k)/(1+zeta_M^k) (zeta_M^{-kn} + zeta_M^{kn}) (1 - 2m + 2 Lambda)",
            parameters: "(d,M) in {(1,2), (1,4), (3,2), (3,4), (1,6)}, every residue",
            default_order: 40,
            checks: || single_checks(&[(1, 2), (1, 4), (3, 2), (3, 4), (1, 6)]),
        },
        Entry {
            id: "single-even-modulus-even-d",
            family: "single deviations",
            anchor: "D_d(n,M) = (-1)^n O_d(-1)/M + (1/M) sum_{k<M/2} (1-zeta_M^k)/(1+zeta_M^k) (zeta_M^{-kn} + zeta_M^{kn}) (-1 + 2m + 2 Psi term)",
            parameters: "(d,M) in {(2,2), (2,4), (4,2), (4,4)}, every residue",
            default_order: 40,
            checks: || single_checks(&[(2, 2), (2, 4), (4, 2), (4, 4)]),
        },
        Entry {
            id: "single-fourier",
            family: "single deviations",
            anchor: "D_d(n,M) = (1/M) sum_{k=1}^{M-1} O_d(zeta_M^k;q) zeta_M^{-kn}",
            parameters: "(d,M) in {(1,3), (2,4), (3,5), (4,6)}, every residue",
            default_order: 40,
            checks: fourier_single_checks,
        },
        Entry {
            id: "single-fourier-halved",
            family: "single deviations",
            anchor: "D_d(n,M) = (-1)^n O_d(-1;q)/M + (1/M) sum_{k=1}^{M/2-1} (zeta_M^{-kn} + zeta_M^{kn}) O_d(zeta_M^k;q)",
            parameters: "(d,M) in {(1,2), (2,4), (3,4), (1,6)}, every residue",
            default_order: 40,
            checks: halved_checks,
        },
    ]
}

fn spec(d: i64, a: i64, m: i64) -> DeviationSpec {
    DeviationSpec::new(d, a, m).expect("catalog spec in range")
}

fn max_n(order: Rat) -> u32 {
    (order.ceil().to_integer() - 1).max(0) as u32
}

fn table(d: i64, order: Rat) -> Result<RankTables> {
    rank_tables(d as u32, max_n(order))
}

fn params_level(p: &GenericParams) -> u32 {
    level_of(&[&p.z1, &p.z2, &p.z0], 1)
}

/// The level reached by the formulas: roots of order `M`, `Md`, `2d`, and the
/// parameters.
fn formula_level(d: i64, m: i64, p: &GenericParams) -> u32 {
    let l = crate::exactnum::ntheory::lcm(4 * (m * d) as u64, params_level(p) as u64);
    l as u32
}

fn alternative(s: &DeviationSpec) -> GenericParams {
    let l = 2 * s.d * s.modulus;
    let p = [13, 17, 19].into_iter().find(|p| l % p != 0).unwrap_or(23);
    GenericParams::roots(p)
}

fn pair_checks(cases: &[(i64, i64, i64)]) -> Vec<Check> {
    cases
        .iter()
        .map(|&(d, a, m)| {
            let s = spec(d, a, m);
            let p1 = GenericParams::default_for(&s);
            let p2 = alternative(&s);
            let level =
                crate::exactnum::ntheory::lcm(formula_level(d, m, &p1) as u64, formula_level(d, m, &p2) as u64) as u32;
            let inst = vec![
                kv("d", d),
                kv("a", a),
                kv("M", m),
                kv("z'", &p1.z1),
                kv("z''", &p1.z2),
                kv("z_0", &p1.z0),
                kv("alternative", alternative_label(&p2)),
            ];
            Check::new(inst, level, 1, move |o| {
                let def = table(d, o)
                    .and_then(|t| Ok(deviation_from_table(&t, a, m, o)? + deviation_from_table(&t, a - 1, m, o)?));
                let f1 = deviation_pair_by_formula(s, &p1, o);
                let f2 = deviation_pair_by_formula(s, &p2, o);
                vec![(f1.clone(), def), (f1, f2)]
            })
        })
        .collect()
}

fn alternative_label(p: &GenericParams) -> alloc::string::String {
    alloc::format!("z' = {}, z'' = {}, z_0 = {}", p.z1, p.z2, p.z0)
}

fn one_plus(z: &Monomial) -> Expr {
    Expr::int(1) + Expr::mono(z.clone())
}

fn normalized_checks(ds: &[i64]) -> Vec<Check> {
    let zs = [Monomial::zeta(1, 5), Monomial::zeta(2, 7)];
    let mut out = Vec::new();
    for &d in ds {
        for z in &zs {
            let choices = [
                (Monomial::zeta(2, 11).times_q(Rat::new(1, 2)), Monomial::minus_one()),
                (
                    -Monomial::q(Rat::new(1, 3)),
                    Monomial::zeta(3, 11).times_q(Rat::new(1, 2)),
                ),
            ];
            let level = level_of(&[z, &choices[0].0, &choices[1].1], (4 * d) as u32);
            let inst = vec![
                kv("d", d),
                kv("z", z),
                kv(
                    "(z_0, z') first",
                    alloc::format!("({}, {})", choices[0].0, choices[0].1),
                ),
                kv(
                    "(z_0, z') second",
                    alloc::format!("({}, {})", choices[1].0, choices[1].1),
                ),
            ];
            let z = z.clone();
            out.push(Check::new(inst, level, 6, move |o| {
                let direct = || (one_plus(&z) * o_d_direct_expr(d, &z)?).eval(o);
                let first = s_bar_d(d, &z, &choices[0].0, &choices[0].1, o);
                let second = s_bar_d(d, &z, &choices[1].0, &choices[1].1, o);
                vec![(first.clone(), direct()), (second.clone(), direct()), (first, second)]
            }));
        }
    }
    out
}

fn single_sum_checks() -> Vec<Check> {
    let zs = [
        Monomial::zeta(1, 5),
        Monomial::zeta(2, 7),
        Monomial::zeta(4, 9).times_q(Rat::new(1, 3)),
    ];
    let mut out = Vec::new();
    for d in 1..=4 {
        for z in &zs {
            let inst = vec![kv("d", d), kv("z", z)];
            let level = level_of(&[z], 1);
            let denom = *z.exp().denom();
            let z = z.clone();
            out.push(Check::new(inst, level, denom, move |o| {
                vec![pair(|| o_d_direct(d, &z, o), || o_d_gen(d, &z, o))]
            }));
        }
    }
    out
}

fn fourier_pair_checks() -> Vec<Check> {
    [(1, 2, 3), (2, 1, 3), (3, 2, 4), (2, 2, 4), (1, 0, 5)]
        .into_iter()
        .map(|(d, a, m)| {
            let inst = vec![kv("d", d), kv("a", a), kv("M", m)];
            Check::new(inst, m as u32, 1, move |o| {
                let lhs = || -> Result<QSeries> {
                    let mut terms = Vec::new();
                    for j in 1..m {
                        let z = Monomial::zeta(j, m);
                        terms.push(
                            (one_plus(&z) * o_d_gen_expr(d, &z)?).scale(Cyclotomic::root_of_unity(-a * j, m as u32)),
                        );
                    }
                    Expr::sum(terms).scale(Cyclotomic::from_ratio(1, m)).eval(o)
                };
                let rhs = || -> Result<QSeries> {
                    let t = table(d, o)?;
                    Ok(deviation_from_table(&t, a, m, o)? + deviation_from_table(&t, a - 1, m, o)?)
                };
                vec![pair(lhs, rhs)]
            })
        })
        .collect()
}

fn root_sum_checks() -> Vec<Check> {
    (1..=12i64)
        .map(|n| {
            Check::new(vec![kv("n", n)], n as u32, 1, move |_| {
                (-n..=2 * n)
                    .map(|s| {
                        let mut acc = Cyclotomic::zero();
                        for j in 0..n {
                            acc = &acc + &Cyclotomic::root_of_unity(s * j, n as u32);
                        }
                        let want = if s % n == 0 { n } else { 0 };
                        (Ok(QSeries::constant(acc)), Ok(QSeries::from_integer(want)))
                    })
                    .collect()
            })
        })
        .collect()
}

fn single_checks(cases: &[(i64, i64)]) -> Vec<Check> {
    cases
        .iter()
        .map(|&(d, m)| {
            let p = GenericParams::default_for(&spec(d, 0, m));
            let level = formula_level(d, m, &p);
            let inst = vec![kv("d", d), kv("M", m), kv("z'", &p.z1), kv("z_0", &p.z0)];
            Check::new(inst, level, 1, move |o| {
                let t = table(d, o);
                (0..m)
                    .map(|a| {
                        let def = match &t {
                            Ok(t) => deviation_from_table(t, a, m, o),
                            Err(e) => Err(e.clone()),
                        };
                        (single_deviation(spec(d, a, m), &p, o), def)
                    })
                    .collect()
            })
        })
        .collect()
}

fn reindex_checks() -> Vec<Check> {
    [(1, 5), (2, 7), (3, 3)]
        .into_iter()
        .map(|(d, m)| {
            Check::new(vec![kv("d", d), kv("M", m)], 1, 1, move |o| -> Vec<Sides> {
                let t = match table(d, o) {
                    Ok(t) => t,
                    Err(e) => return vec![(Err(e.clone()), Err(e))],
                };
                let dev = |a: i64| deviation_from_table(&t, a.rem_euclid(m), m, o);
                let h = (m + 1) / 2;
                (0..h)
                    .map(|n| {
                        let outward = (0..=n).try_fold(QSeries::zero_to(o), |acc, i| {
                            Ok::<_, crate::Error>(acc + dev(h + i)? + dev(h - 1 - i)?)
                        });
                        let reindexed = (0..=n).try_fold(QSeries::zero_to(o), |acc, i| {
                            Ok::<_, crate::Error>(acc + dev(h - n + 2 * i)? + dev(h - n + 2 * i - 1)?)
                        });
                        (outward, reindexed)
                    })
                    .collect()
            })
        })
        .collect()
}

fn fourier_single_checks() -> Vec<Check> {
    [(1, 3), (2, 4), (3, 5), (4, 6)]
        .into_iter()
        .map(|(d, m)| {
            Check::new(vec![kv("d", d), kv("M", m)], m as u32, 1, move |o| {
                let t = table(d, o);
                (0..m)
                    .map(|a| {
                        let def = match &t {
                            Ok(t) => deviation_from_table(t, a, m, o),
                            Err(e) => Err(e.clone()),
                        };
                        (deviation_by_fourier(spec(d, a, m), o), def)
                    })
                    .collect()
            })
        })
        .collect()
}

fn halved_expr(d: i64, n: i64, m: i64) -> Result<Expr> {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut terms = vec![o_d_at_minus_one_expr(d)?.scale_int(sign)];
    for k in 1..m / 2 {
        let c = Cyclotomic::root_of_unity(-k * n, m as u32) + Cyclotomic::root_of_unity(k * n, m as u32);
        terms.push(o_d_direct_expr(d, &Monomial::zeta(k, m))?.scale(c));
    }
    Ok(Expr::sum(terms).scale(Cyclotomic::from_rational(&BigRational::new(1.into(), m.into()))))
}

fn halved_checks() -> Vec<Check> {
    [(1, 2), (2, 4), (3, 4), (1, 6)]
        .into_iter()
        .map(|(d, m)| {
            Check::new(vec![kv("d", d), kv("M", m)], m as u32, 1, move |o| {
                let t = table(d, o);
                (0..m)
                    .map(|n| {
                        let def = match &t {
                            Ok(t) => deviation_from_table(t, n, m, o),
                            Err(e) => Err(e.clone()),
                        };
                        (halved_expr(d, n, m).and_then(|e| e.eval(o)), def)
                    })
                    .collect()
            })
        })
        .collect()
}
