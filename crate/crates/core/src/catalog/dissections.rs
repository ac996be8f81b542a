//! 3-dissections of eta quotients and of `O_3(ζ_3; q)`.

use alloc::vec;
use alloc::vec::Vec;

use super::named::{
    build_named_series, dissection_component, dissection_lhs, psi_combination, psi_combination_closed_form,
};
use super::{kv, r, Check, Comparison, Entry};
use crate::appell::{o_d_direct, psi};
use crate::error::Result;
use crate::exactnum::{BigInt, Cyclotomic, Rat};
use crate::expr::Expr;
use crate::overpartitions::{deviation_pair_by_formula, rank_tables, DeviationSpec, GenericParams};
use crate::qseries::{Monomial, QSeries};

pub(super) fn entries() -> Vec<Entry> {
    vec![
        dissection_entry("dissection-w", 'W', "1/J_1^3 = W_0(q^3) + q W_1(q^3) + q^2 W_2(q^3), W_k built from w = J_1 J_6^3/(J_2 J_3^3)"),
        dissection_entry("dissection-f", 'f', "J_1 J_6/(J_2 J_3^2) = f_0(q^3) + q f_1(q^3) + q^2 f_2(q^3), f_0 = j(q^7;q^18)/(J_1 J_2), f_1 = -j(q^5;q^18)/(J_1 J_2), f_2 = -q j(q;q^18)/(J_1 J_2)"),
        dissection_entry("dissection-g", 'g', "J_2^4 J_8/(J_1 J_4^3) = g_0(q^3) + q g_1(q^3) + q^2 g_2(q^3)"),
        dissection_entry("dissection-h", 'h', "J_2^3/(J_1 J_8) = h_0(q^3) + q h_1(q^3) + q^2 h_2(q^3)"),
        dissection_entry("dissection-i", 'I', "J_2/J_4^2 = I_0(q^3) + q I_1(q^3) + q^2 I_2(q^3)"),
        Entry {
            id: "triple-sum-g",
            family: "3-dissections",
            anchor: "G_N = sum_{k+l+m = N mod 3} q^{k+l+m} g_k(q^3) W_l(q^3) f_m(q^3) is the class-N part of the product of the dissected series",
            parameters: "N in {0,1,2}",
            default_order: 60,
            checks: || triple_sum_checks('g'),
        },
        Entry {
            id: "triple-sum-h",
            family: "3-dissections",
            anchor: "H_N = sum_{k+l+m = N mod 3} q^{k+l+m} h_k(q^3) W_l(q^3) f_m(q^3) is the class-N part of the product of the dissected series",
            parameters: "N in {0,1,2}",
            default_order: 60,
            checks: || triple_sum_checks('h'),
        },
        Entry {
            id: "o3-dissection",
            family: "3-dissections",
            anchor: "O_3(zeta_3;q) = Bbar_0(q^3) + q B_1(q^3) + q^2 B_2(q^3), with A..G theta quotients and G_N, H_N triple sums",
            parameters: "each residue class separately and the full sum",
            default_order: 60,
            checks: o3_checks,
        },
        Entry {
            id: "o3-residues",
            family: "3-dissections",
            anchor: "O_3(zeta_3;q) = sum_n (N_3(0,3,n) - N_3(2,3,n)) q^n = (D_3(3,3) + D_3(2,3)) - (D_3(2,3) + D_3(1,3))",
            parameters: "rank tables and pair formulas",
            default_order: 31,
            checks: o3_residue_checks,
        },
        Entry {
            id: "theta-quotient-combination",
            family: "3-dissections",
            anchor: "j(zeta_3 q^15;q^18)/j(-zeta_3 q^15;q^18) + j(zeta_3 q^21;q^18)/j(-zeta_3 q^21;q^18) = -2 q^3 zeta_3^2 (1 - zeta_3^2) J_6^2 J_9^2 J_36^2 J_54^2/(J_3 J_18^6 J_27)",
            parameters: "none",
            default_order: 60,
            checks: || vec![Check::new(vec![], 3, 1, |o| vec![combine_sides(o)])],
        },
        Entry {
            id: "eta-quotient-combination",
            family: "3-dissections",
            anchor: "-(zeta_3 - zeta_3^2) J_2 J_6 J_18^4/(2 J_4^2 J_36^2 j(-zeta_3 q^9;q^18)) (theta quotient sum) = 3 q^3 J_2 J_6^3 J_9 J_108/(J_3 J_4^2 J_18 J_36)",
            parameters: "none",
            default_order: 60,
            checks: || vec![Check::new(vec![], 3, 1, |o| vec![inter_sides(o)])],
        },
        Entry {
            id: "psi-combination",
            family: "3-dissections",
            anchor: "4 Psi_2^3(q^9,-1,-1;q^18) - 2 Psi_1^3(q^9,-1,-1;q^18) = -(3/2) q^{-9} J_18 J_27 J_108 J_162^5/(J_36^2 J_54 J_81 J_324^3) (j(q^27;q^162)/j(-q^27;q^162) + j(q^81;q^162)/j(-q^81;q^162))",
            parameters: "none",
            default_order: 60,
            checks: || {
                vec![Check::new(vec![], 1, 1, |o| {
                    vec![(psi_combination().and_then(|e| e.eval(o)), psi_combination_closed_form().eval(o))]
                })]
            },
        },
        Entry {
            id: "psi-vanishing",
            family: "3-dissections",
            anchor: "Psi_0^3(q^9,-1,-1;q^18) = 0",
            parameters: "none",
            default_order: 100,
            checks: || {
                vec![Check::new(vec![], 1, 1, |o| {
                    let m1 = Monomial::minus_one();
                    vec![(psi(0, 3, &Monomial::q(9), &m1, &m1, r(18), o), Ok(QSeries::zero()))]
                })]
            },
        },
    ]
}

fn dissection_entry(id: &'static str, family: char, anchor: &'static str) -> Entry {
    let checks: fn() -> Vec<Check> = match family {
        'W' => || dissection_checks('W'),
        'f' => || dissection_checks('f'),
        'g' => || dissection_checks('g'),
        'h' => || dissection_checks('h'),
        _ => || dissection_checks('I'),
    };
    Entry {
        id,
        family: "3-dissections",
        anchor,
        parameters: "components k in {0,1,2}",
        default_order: 120,
        checks,
    }
}

/// Order to which component `k` of a 3-dissection is known when the series is known below `order`.
fn component_order(order: Rat, k: i64) -> Rat {
    let c = ((order - k) / 3).ceil();
    c.max(r(0))
}

fn dissection_checks(family: char) -> Vec<Check> {
    vec![Check::new(vec![kv("family", family)], 1, 1, move |o| {
        let parts = dissection_lhs(family).eval(o).and_then(|s| s.dissect(3));
        (0..3)
            .map(|k| {
                let co = component_order(o, k);
                let lhs = parts.clone().map(|p| p[k as usize].truncate(co));
                let rhs = dissection_component(family, k as usize).eval(co);
                Comparison::at(lhs, rhs, co)
            })
            .collect::<Vec<_>>()
    })]
}

/// `q^k F(q^3)` for the `k`-th component `F` of `s`.
fn residue_class(s: &QSeries, k: usize, order: Rat) -> Result<QSeries> {
    let parts = s.dissect(3)?;
    Ok(parts[k].substitute_q_power(r(3))?.shift(r(k as i64)).truncate(order))
}

fn triple_sum_checks(x: char) -> Vec<Check> {
    let name = if x == 'g' { 'G' } else { 'H' };
    (0..3usize)
        .map(|n| {
            Check::new(vec![kv("N", n)], 1, 1, move |o| {
                let prod = Expr::product([dissection_lhs(x), dissection_lhs('W'), dissection_lhs('f')]).eval(o);
                vec![(
                    build_named_series(&alloc::format!("{name}{n}"), o),
                    prod.and_then(|p| residue_class(&p, n, o)),
                )]
            })
        })
        .collect()
}

fn o3_direct(order: Rat) -> Result<QSeries> {
    o_d_direct(3, &Monomial::zeta(1, 3), order)
}

fn o3_checks() -> Vec<Check> {
    let mut out: Vec<Check> = ["Bbar0", "B1", "B2"]
        .into_iter()
        .enumerate()
        .map(|(n, name)| {
            Check::new(vec![kv("class", n)], 3, 1, move |o| {
                vec![(
                    o3_direct(o).and_then(|s| residue_class(&s, n, o)),
                    build_named_series(name, o),
                )]
            })
        })
        .collect();
    out.push(Check::new(vec![kv("class", "all")], 3, 1, |o| {
        vec![(o3_direct(o), build_named_series("B-rhs", o))]
    }));
    out
}

fn o3_residue_checks() -> Vec<Check> {
    vec![
        Check::new(vec![kv("route", "rank tables")], 3, 1, |o| {
            let max_n = (o.ceil().to_integer() - 1).max(0) as u32;
            let table = rank_tables(3, max_n).map(|t| {
                let c: Vec<BigInt> = (0..=max_n)
                    .map(|n| t.residue_count(0, 3, n) - t.residue_count(2, 3, n))
                    .collect();
                QSeries::from_integers(0, &c, Some(o))
            });
            vec![(o3_direct(o), table)]
        }),
        Check::new(
            vec![kv("route", "pair formulas (d,a,M) = (3,3,3) and (3,2,3)")],
            252,
            1,
            |o| {
                let p = |a: i64| {
                    let s = DeviationSpec::new(3, a, 3)?;
                    deviation_pair_by_formula(s, &GenericParams::default_for(&s), o)
                };
                vec![(o3_direct(o), p(3).and_then(|x| Ok(x - p(2)?)))]
            },
        ),
    ]
}

fn w() -> Monomial {
    Monomial::zeta(1, 3)
}

fn combine_lhs() -> Expr {
    let part = |e: i64| Expr::theta(w().times_q(e), 18).div(Expr::theta((-w()).times_q(e), 18));
    part(15) + part(21)
}

fn combine_sides(o: Rat) -> (Result<QSeries>, Result<QSeries>) {
    let z2 = Cyclotomic::root_of_unity(2, 3);
    let c = &(&z2 * &(&Cyclotomic::one() - &z2)) * &Cyclotomic::from_integer(-2);
    let rhs = Expr::product([
        Expr::mono(Monomial::q(3)),
        Expr::eta(&[(6, 2), (9, 2), (36, 2), (54, 2), (3, -1), (18, -6), (27, -1)]),
    ])
    .scale(c);
    (combine_lhs().eval(o), rhs.eval(o))
}

fn inter_sides(o: Rat) -> (Result<QSeries>, Result<QSeries>) {
    let c = (Cyclotomic::root_of_unity(1, 3) - Cyclotomic::root_of_unity(2, 3)) * Cyclotomic::from_ratio(-1, 2);
    let lhs = Expr::product([
        Expr::eta(&[(2, 1), (6, 1), (18, 4), (4, -2), (36, -2)]),
        Expr::theta((-w()).times_q(9), 18).inv(),
        combine_lhs(),
    ])
    .scale(c);
    let rhs = Expr::product([
        Expr::mono(Monomial::q(3)),
        Expr::eta(&[(2, 1), (6, 3), (9, 1), (108, 1), (3, -1), (4, -2), (18, -1), (36, -1)]),
    ])
    .scale_int(3);
    (lhs.eval(o), rhs.eval(o))
}
