//! Rank statistics, residue counts and deviations from their definitions.

use alloc::vec;
use alloc::vec::Vec;

use super::{kv, Check, Comparison, Entry, Sides};
use crate::exactnum::{BigInt, Rat};
use crate::overpartitions::{
    deviation_from_table, enumerate_overpartitions, pbar, rank_tables, rank_tables_by_enumeration, RankTables,
};
use crate::qseries::{eta_quotient, QSeries};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        Entry {
            id: "rank-statistic",
            family: "overpartitions",
            anchor: "O_1(z;q) = sum over overpartitions of z^{largest part - number of parts} q^{size}",
            parameters: "every m, n below the order",
            default_order: 21,
            checks: || statistic_checks(1),
        },
        Entry {
            id: "m2-rank-statistic",
            family: "overpartitions",
            anchor: "O_2(z;q) = sum over overpartitions of z^{M2-rank} q^{size}",
            parameters: "every m, n below the order",
            default_order: 21,
            checks: || statistic_checks(2),
        },
        Entry {
            id: "rank-deviation",
            family: "overpartitions",
            anchor: "D(a,M) = sum_n (N(a,M,n) - pbar(n)/M) q^n for the rank",
            parameters: "M in 2..=6, every residue",
            default_order: 21,
            checks: || deviation_checks(1),
        },
        Entry {
            id: "m2-rank-deviation",
            family: "overpartitions",
            anchor: "D_2(a,M) = sum_n (N_2(a,M,n) - pbar(n)/M) q^n for the M2-rank",
            parameters: "M in 2..=6, every residue",
            default_order: 21,
            checks: || deviation_checks(2),
        },
        Entry {
            id: "deviation-residue-sum",
            family: "overpartitions",
            anchor: "sum_{a<M} D_d(a,M) = 0",
            parameters: "d in 1..=4, M in 2..=6",
            default_order: 30,
            checks: residue_sum_checks,
        },
        Entry {
            id: "deviation-symmetry",
            family: "overpartitions",
            anchor: "D_d(a,M) = D_d(M-a,M)",
            parameters: "d in 1..=4, M in 2..=6, 0 <= a <= M",
            default_order: 30,
            checks: symmetry_checks,
        },
        Entry {
            id: "gf-column-sum",
            family: "overpartitions",
            anchor: "sum_m N_d(m,n) = pbar(n), the coefficients of (-q)_inf/(q)_inf",
            parameters: "d in 1..=4; pbar also by enumeration",
            default_order: 31,
            checks: column_sum_checks,
        },
    ]
}

fn max_n(order: Rat) -> u32 {
    (order.ceil().to_integer() - 1).max(0) as u32
}

/// `Σ_n N_d(m, n) q^n` for each `m` in `-width..=width`.
fn columns(t: &RankTables, width: i64, order: Rat) -> Vec<QSeries> {
    (-width..=width)
        .map(|m| {
            let c: Vec<BigInt> = (0..=t.max_n()).map(|n| t.count(m, n)).collect();
            QSeries::from_integers(0, &c, Some(order))
        })
        .collect()
}

fn statistic_checks(d: u32) -> Vec<Check> {
    vec![Check::new(vec![kv("d", d)], 1, 1, move |o| -> Vec<Sides> {
        let n = max_n(o);
        let (e, g) = match (rank_tables_by_enumeration(d, n), rank_tables(d, n)) {
            (Ok(e), Ok(g)) => (e, g),
            (Err(x), _) | (_, Err(x)) => return vec![(Err(x.clone()), Err(x))],
        };
        let w = n as i64 + 1;
        columns(&e, w, o)
            .into_iter()
            .zip(columns(&g, w, o))
            .map(|(a, b)| (Ok(a), Ok(b)))
            .collect()
    })]
}

fn deviation_checks(d: u32) -> Vec<Check> {
    (2..=6i64)
        .map(|m| {
            Check::new(vec![kv("d", d), kv("M", m)], 1, 1, move |o| -> Vec<Sides> {
                let n = max_n(o);
                let (e, g) = match (rank_tables_by_enumeration(d, n), rank_tables(d, n)) {
                    (Ok(e), Ok(g)) => (e, g),
                    (Err(x), _) | (_, Err(x)) => return vec![(Err(x.clone()), Err(x))],
                };
                (0..m)
                    .map(|a| (deviation_from_table(&e, a, m, o), deviation_from_table(&g, a, m, o)))
                    .collect()
            })
        })
        .collect()
}

fn per_table(d: u32, o: Rat, f: impl Fn(&RankTables) -> Vec<Sides>) -> Vec<Sides> {
    match rank_tables(d, max_n(o)) {
        Ok(t) => f(&t),
        Err(e) => vec![(Err(e.clone()), Err(e))],
    }
}

fn residue_sum_checks() -> Vec<Check> {
    (1..=4u32)
        .map(|d| {
            Check::new(vec![kv("d", d), kv("M", "2..=6")], 1, 1, move |o| {
                per_table(d, o, |t| {
                    (2..=6i64)
                        .map(|m| {
                            let sum = (0..m).try_fold(QSeries::zero_to(o), |acc, a| {
                                Ok::<_, crate::Error>(acc + deviation_from_table(t, a, m, o)?)
                            });
                            (sum, Ok(QSeries::zero()))
                        })
                        .collect()
                })
            })
        })
        .collect()
}

fn symmetry_checks() -> Vec<Check> {
    (1..=4u32)
        .map(|d| {
            Check::new(vec![kv("d", d), kv("M", "2..=6")], 1, 1, move |o| {
                per_table(d, o, |t| {
                    let mut out = Vec::new();
                    for m in 2..=6i64 {
                        for a in 0..=m {
                            out.push((deviation_from_table(t, a, m, o), deviation_from_table(t, m - a, m, o)));
                        }
                    }
                    out
                })
            })
        })
        .collect()
}

fn pbar_series(max: u32, order: Rat) -> QSeries {
    QSeries::from_integers(0, &pbar(max), Some(order))
}

fn column_sum_checks() -> Vec<Check> {
    let mut out: Vec<Check> = (1..=4u32)
        .map(|d| {
            Check::new(vec![kv("d", d)], 1, 1, move |o| {
                per_table(d, o, |t| {
                    let sums: Vec<BigInt> = (0..=t.max_n()).map(|n| t.total(n)).collect();
                    vec![(
                        Ok(QSeries::from_integers(0, &sums, Some(o))),
                        Ok(eta_quotient(&[(2, 1), (1, -2)], o)),
                    )]
                })
            })
        })
        .collect();
    out.push(Check::new(vec![kv("route", "enumeration, n <= 12")], 1, 1, |o| {
        let top = max_n(o).min(12);
        let counts: Vec<BigInt> = (0..=top)
            .map(|n| BigInt::from(enumerate_overpartitions(n).len()))
            .collect();
        let cut = Rat::from_integer(top as i64 + 1);
        let four = enumerate_overpartitions(4).len() as i64;
        vec![
            Comparison::at(
                Ok(QSeries::from_integers(0, &counts, Some(cut))),
                Ok(pbar_series(top, cut)),
                cut,
            )
            .with_note(alloc::format!("enumeration compared below q^{cut}")),
            (Ok(QSeries::from_integer(four)), Ok(QSeries::from_integer(14))).into(),
        ]
    }));
    out
}
