//! Named eta and theta combinations used by the dissection entries.

use alloc::vec::Vec;

use crate::appell::{appell_expr, psi_expr};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rat};
use crate::expr::Expr;
use crate::qseries::{Monomial, QSeries};

/// Every name accepted by [`named_expr`].
pub const NAMES: &[&str] = &[
    "w", "W0", "W1", "W2", "f0", "f1", "f2", "g0", "g1", "g2", "h0", "h1", "h2", "I0", "I1", "I2", "A", "B", "C", "D",
    "E", "F", "G", "G0", "G1", "G2", "H0", "H1", "H2", "Bbar0", "B0", "B1", "B2", "W-lhs", "W-rhs", "f-lhs", "f-rhs",
    "g-lhs", "g-rhs", "h-lhs", "h-rhs", "I-lhs", "I-rhs", "B-rhs",
];

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn eta(fs: &[(i64, i64)]) -> Expr {
    Expr::eta(fs)
}

fn q(e: i64) -> Expr {
    Expr::mono(Monomial::q(e))
}

fn j(e: i64, p: i64) -> Expr {
    Expr::theta(Monomial::q(e), r(p))
}

fn jm(e: i64, p: i64) -> Expr {
    Expr::theta(-Monomial::q(e), r(p))
}

fn w_pow(k: i64) -> Expr {
    eta(&[(1, k), (6, 3 * k), (2, -k), (3, -3 * k)])
}

fn w_base() -> Expr {
    eta(&[(3, 9), (1, -12)])
}

/// Component `k` of the named family, as a series in `q`.
fn component(family: char, k: usize) -> Expr {
    match (family, k) {
        ('W', 0) => {
            w_base()
                * Expr::sum([
                    w_pow(-2),
                    (q(1) * w_pow(1)).scale_int(8),
                    (q(2) * w_pow(4)).scale_int(16),
                ])
        }
        ('W', 1) => w_base() * Expr::sum([w_pow(-1).scale_int(3), (q(1) * w_pow(2)).scale_int(12)]),
        ('W', 2) => w_base().scale_int(9),
        ('f', 0) => j(7, 18) * eta(&[(1, -1), (2, -1)]),
        ('f', 1) => (j(5, 18) * eta(&[(1, -1), (2, -1)])).scale_int(-1),
        ('f', 2) => (q(1) * j(1, 18) * eta(&[(1, -1), (2, -1)])).scale_int(-1),
        ('g', 0) => eta(&[(1, 1), (2, 2), (8, 2), (12, 2), (4, -5), (24, -1)]),
        ('g', 1) => eta(&[(2, 7), (3, 1), (8, 2), (12, 4), (1, -2), (4, -7), (6, -3), (24, -1)]),
        ('g', 2) => eta(&[(2, 2), (6, 2), (8, 3), (3, -1), (4, -5)]).scale_int(-2),
        ('h', 0) => eta(&[(4, 4), (6, 2), (2, -1), (3, -1), (8, -3)]),
        ('h', 1) => eta(&[(1, 1), (4, 1), (6, 1), (24, 1), (8, -2), (12, -1)]),
        ('h', 2) => eta(&[(2, 5), (3, 1), (12, 1), (24, 1), (1, -2), (4, -1), (6, -2), (8, -2)]).scale_int(-1),
        ('I', 0) => eta(&[(2, 2), (6, 3), (4, -6)]),
        ('I', 1) => q(1) * eta(&[(2, 4), (12, 6), (4, -8), (6, -3)]),
        ('I', 2) => eta(&[(2, 3), (12, 3), (4, -7)]).scale_int(-1),
        _ => unreachable!("component index out of range"),
    }
}

/// The series each family dissects.
fn dissected(family: char) -> Expr {
    match family {
        'W' => eta(&[(1, -3)]),
        'f' => eta(&[(1, 1), (6, 1), (2, -1), (3, -2)]),
        'g' => eta(&[(2, 4), (8, 1), (1, -1), (4, -3)]),
        'h' => eta(&[(2, 3), (1, -1), (8, -1)]),
        'I' => eta(&[(2, 1), (4, -2)]),
        _ => unreachable!("unknown family"),
    }
}

/// `F(q^3)` for a series expression `F(q)`.
fn at_cube(e: Expr) -> Result<Expr> {
    e.substitute_q_power(r(3))
}

/// `Σ_k q^k F_k(q^3)` for a family of components.
pub fn reassembled(family: char) -> Result<Expr> {
    let mut terms = Vec::new();
    for k in 0..3 {
        terms.push(q(k as i64) * at_cube(component(family, k))?);
    }
    Ok(Expr::sum(terms))
}

/// The series dissected by `family`, as an expression in `q`.
pub fn dissection_lhs(family: char) -> Expr {
    dissected(family)
}

/// Component `k` of `family`, as an expression in `q`.
pub fn dissection_component(family: char, k: usize) -> Expr {
    component(family, k)
}

fn abc(name: char) -> Expr {
    match name {
        'A' => jm(12, 27),
        'B' => q(1) * jm(21, 27),
        'C' => q(2) * jm(3, 27),
        'D' => j(60, 108).div(jm(30, 108)),
        'E' => q(6) * j(84, 108).div(jm(42, 108)),
        'F' => j(24, 108).div(jm(12, 108)),
        'G' => q(12) * j(96, 108).div(jm(48, 108)),
        _ => unreachable!("unknown constant"),
    }
}

/// `Σ_{k+l+m ≡ n (mod 3)} q^{k+l+m} x_k(q^3) W_l(q^3) f_m(q^3)` with `x = g` or `h`.
fn triple_sum(x: char, n: i64) -> Result<Expr> {
    let mut terms = Vec::new();
    for k in 0..3 {
        for l in 0..3 {
            for m in 0..3 {
                if (k + l + m - n).rem_euclid(3) != 0 {
                    continue;
                }
                terms.push(Expr::product([
                    q(k + l + m),
                    at_cube(component(x, k as usize))?,
                    at_cube(component('W', l as usize))?,
                    at_cube(component('f', m as usize))?,
                ]));
            }
        }
    }
    Ok(Expr::sum(terms))
}

/// `Σ_{k+l ≡ n (mod 3)} q^{k+l} x_k(q^3) W_l(q^3)`.
fn double_sum(x: char, n: i64) -> Result<Expr> {
    let mut terms = Vec::new();
    for k in 0..3 {
        for l in 0..3 {
            if (k + l - n).rem_euclid(3) != 0 {
                continue;
            }
            terms.push(Expr::product([
                q(k + l),
                at_cube(component(x, k as usize))?,
                at_cube(component('W', l as usize))?,
            ]));
        }
    }
    Ok(Expr::sum(terms))
}

fn lin(terms: &[(i64, char, char)]) -> Expr {
    Expr::sum(terms.iter().map(|&(c, a, b)| (abc(a) * abc(b)).scale_int(c)))
}

/// The residue-class-`n` part of the dissection of `O_3(ζ_3; q)`, excluding the
/// Appell-Lerch and `Ψ` contributions that only enter at `n = 0`.
fn b_part(n: i64) -> Result<Expr> {
    let gs = |k: i64| triple_sum('g', k.rem_euclid(3));
    let hs = |k: i64| triple_sum('h', k.rem_euclid(3));
    let first = Expr::product([
        q(3 + n),
        eta(&[(6, 3), (9, 1), (108, 1), (3, -1), (18, -1), (36, -1)]),
        at_cube(component('I', n as usize))?,
    ])
    .scale_int(3);
    let g_terms = Expr::sum([
        lin(&[(2, 'A', 'D'), (-1, 'A', 'E')]) * gs(n + 1)?,
        lin(&[(-1, 'B', 'D'), (-1, 'B', 'E')]) * gs(n)?,
        lin(&[(2, 'C', 'E'), (-1, 'C', 'D')]) * gs(n + 2)?,
    ]);
    let h_terms = Expr::sum([
        lin(&[(2, 'A', 'G'), (1, 'A', 'F')]) * hs(n + 2)?,
        lin(&[(-2, 'B', 'F'), (-1, 'B', 'G')]) * hs(n + 1)?,
        lin(&[(-1, 'C', 'G'), (1, 'C', 'F')]) * hs(n)?,
    ]);
    let inner = Expr::sum([
        eta(&[
            (3, 3),
            (12, 2),
            (18, 2),
            (72, 1),
            (108, 2),
            (6, -4),
            (9, -1),
            (24, -1),
            (36, -1),
            (54, -1),
            (216, -1),
        ]) * double_sum('g', n)?,
        Expr::product([q(2), eta(&[(12, 2), (108, 1), (6, -1), (24, -1)]), g_terms]).scale_int(-2),
        Expr::product([
            q(5),
            eta(&[
                (3, 3),
                (18, 1),
                (24, 1),
                (36, 2),
                (216, 1),
                (6, -3),
                (9, -1),
                (12, -1),
                (72, -1),
                (108, -1),
            ]),
            double_sum('h', (n + 1).rem_euclid(3))?,
        ]),
        Expr::product([q(1), eta(&[(24, 1), (108, 1), (12, -1)]), h_terms]).scale_int(-2),
    ]);
    Ok(first + eta(&[(3, 2), (6, 2), (36, 1), (12, -1), (18, -2)]) * inner)
}

/// `-(3/2) q^{-9} J_18 J_27 J_108 J_162^5 / (J_36^2 J_54 J_81 J_324^3) · (j(q^27;q^162)/j(-q^27;q^162) + j(q^81;q^162)/j(-q^81;q^162))`.
pub fn psi_combination_closed_form() -> Expr {
    Expr::product([
        q(-9),
        eta(&[
            (18, 1),
            (27, 1),
            (108, 1),
            (162, 5),
            (36, -2),
            (54, -1),
            (81, -1),
            (324, -3),
        ]),
        j(27, 162).div(jm(27, 162)) + j(81, 162).div(jm(81, 162)),
    ])
    .scale(Cyclotomic::from_ratio(-3, 2))
}

/// `4Ψ_2^3(q^9,-1,-1;q^18) - 2Ψ_1^3(q^9,-1,-1;q^18)`.
pub fn psi_combination() -> Result<Expr> {
    let x = Monomial::q(9);
    let m1 = Monomial::minus_one();
    Ok(psi_expr(2, 3, &x, &m1, &m1, r(18))?.scale_int(4) - psi_expr(1, 3, &x, &m1, &m1, r(18))?.scale_int(2))
}

/// `6 q^{-36} m(q^{-27}, q^{162}, -1)`.
fn appell_part() -> Result<Expr> {
    Ok(appell_expr(&Monomial::q(-27), r(162), &Monomial::minus_one())?
        .times_mono(Monomial::q(-36))
        .scale_int(6))
}

/// The expression registered under `name`.
pub fn named_expr(name: &str) -> Result<Expr> {
    let unknown = || Error::UnknownName(name.into());
    let chars: Vec<char> = name.chars().collect();
    if let Some(family) = name.strip_suffix("-lhs") {
        let f = single_family(family).ok_or_else(unknown)?;
        return Ok(dissected(f));
    }
    if name == "B-rhs" {
        return Ok(Expr::sum([named_expr("Bbar0")?, b_part(1)?, b_part(2)?]));
    }
    if let Some(family) = name.strip_suffix("-rhs") {
        let f = single_family(family).ok_or_else(unknown)?;
        return reassembled(f);
    }
    match name {
        "w" => return Ok(w_pow(1)),
        "Bbar0" => return Ok(Expr::sum([appell_part()?, psi_combination_closed_form(), b_part(0)?])),
        _ => {}
    }
    match chars.as_slice() {
        [c] if "ABCDEFG".contains(*c) => Ok(abc(*c)),
        [c, d] if "WfghIGHB".contains(*c) && ('0'..='2').contains(d) => {
            let k = d.to_digit(10).unwrap() as usize;
            match c {
                'G' => triple_sum('g', k as i64),
                'H' => triple_sum('h', k as i64),
                'B' => b_part(k as i64),
                _ => Ok(component(*c, k)),
            }
        }
        _ => Err(unknown()),
    }
}

fn single_family(s: &str) -> Option<char> {
    match s {
        "W" | "f" | "g" | "h" | "I" => s.chars().next(),
        _ => None,
    }
}

pub fn build_named_series(name: &str, order: Rat) -> Result<QSeries> {
    named_expr(name)?.eval(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_builds() {
        for n in NAMES {
            assert!(named_expr(n).is_ok(), "{n}");
        }
        assert!(matches!(named_expr("W3"), Err(Error::UnknownName(_))));
        assert!(matches!(named_expr("x-lhs"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn w2_is_nine_times_the_eta_quotient() {
        let o = r(20);
        let a = build_named_series("W2", o).unwrap();
        let b = crate::qseries::eta_quotient(&[(3, 9), (1, -12)], o).scale_int(9);
        assert_eq!(a.first_difference(&b, o).unwrap(), None);
    }

    #[test]
    fn triple_sum_is_a_residue_class_of_the_product() {
        let o = r(27);
        let prod = Expr::product([dissected('g'), dissected('W'), dissected('f')])
            .eval(o)
            .unwrap();
        let parts = prod.dissect(3).unwrap();
        for n in 0..3 {
            let g = build_named_series(["G0", "G1", "G2"][n], o).unwrap();
            let want = parts[n]
                .substitute_q_power(r(3))
                .unwrap()
                .shift(r(n as i64))
                .truncate(o);
            assert_eq!(g.first_difference(&want, o).unwrap(), None, "G{n}");
        }
    }
}
