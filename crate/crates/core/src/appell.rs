//! Appell-Lerch sums `m(x, q, z)` and the theta quotients built around them.
//!
//! Every function has an `_expr` form returning an unevaluated [`Expr`] so that larger
//! formulas can be planned as a whole, and an evaluating form taking an order.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{invalid, non_generic, Result};
use crate::exactnum::{Cyclotomic, Rat};
use crate::expr::Expr;
use crate::lambert::{Divisor, LambertSum};
use crate::qseries::{Monomial, QSeries};
use crate::report::{self, IdentityReport};

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn check_base(p: Rat) -> Result<()> {
    if p <= r(0) {
        return Err(invalid("base must be a positive power of q"));
    }
    Ok(())
}

/// `m(x, q^p, z)`.
pub fn appell_expr(x: &Monomial, p: Rat, z: &Monomial) -> Result<Expr> {
    check_base(p)?;
    if z.is_integral_power_of(p) {
        return Err(non_generic(alloc::format!("z = {z} is an integral power of q^{p}")));
    }
    let xz = x * z;
    if xz.is_integral_power_of(p) {
        return Err(non_generic(alloc::format!("xz = {xz} is an integral power of q^{p}")));
    }
    let half = p / 2;
    let sum = LambertSum {
        lead: Monomial::one(),
        ratio: (-z).times_q(-half),
        quad: half,
        divisors: vec![Divisor {
            w: xz.times_q(-p),
            s: p,
            power: 1,
        }],
        lower: None,
    };
    Ok(Expr::leaf(sum).div(Expr::theta(z.clone(), p)))
}

pub fn appell_m(x: &Monomial, p: Rat, z: &Monomial, order: Rat) -> Result<QSeries> {
    appell_expr(x, p, z)?.eval(order)
}

/// `Δ(x, z1, z0; q^p)`.
pub fn delta_expr(x: &Monomial, z1: &Monomial, z0: &Monomial, p: Rat) -> Result<Expr> {
    check_base(p)?;
    let j = |m: Monomial| Expr::theta(m, p);
    Ok(Expr::product([
        Expr::mono(z0.clone()),
        Expr::eta_rational(vec![(p, 3)]),
        j(z1 * &z0.inv()),
        j(&(x * z0) * z1),
        j(z0.clone()).inv(),
        j(z1.clone()).inv(),
        j(x * z0).inv(),
        j(x * z1).inv(),
    ]))
}

pub fn delta(x: &Monomial, z1: &Monomial, z0: &Monomial, p: Rat, order: Rat) -> Result<QSeries> {
    delta_expr(x, z1, z0, p)?.eval(order)
}

/// `Ψ_k^n(x, z, z'; q^p)`.
pub fn psi_expr(k: i64, n: i64, x: &Monomial, z: &Monomial, zp: &Monomial, p: Rat) -> Result<Expr> {
    check_base(p)?;
    if n < 1 {
        return Err(invalid("psi needs n >= 1"));
    }
    let big = p * (n * n);
    let jb = |m: Monomial| Expr::theta(m, big);
    let mz_n = (-z).pow(n);
    let xz_n = (x * z).pow(n);
    let mx_n = (-x).pow(n);
    let zpi = zp.inv();
    let mut terms = Vec::new();
    for t in 0..n {
        let pref = (-z).pow(t).times_q(p * (binom2(t + 1) + k * t));
        let a = (-(&mz_n * &zpi)).times_q(p * (binom2(n + 1) + n * k + n * t));
        let b = (&xz_n * zp).times_q(p * (n * t));
        let c = (-(&mx_n * zp)).times_q(p * (binom2(n) - n * k));
        let d = xz_n.times_q(p * (n * t));
        terms.push(Expr::product([
            Expr::mono(pref),
            jb(a),
            jb(b),
            jb(c).inv(),
            jb(d).inv(),
        ]));
    }
    let pref = -(&x.pow(k) * &z.pow(k + 1));
    Ok(Expr::product([
        Expr::mono(pref),
        Expr::eta_rational(vec![(big, 3)]),
        Expr::theta(z.clone(), p).inv(),
        jb(zp.clone()).inv(),
        Expr::sum(terms),
    ]))
}

pub fn psi(k: i64, n: i64, x: &Monomial, z: &Monomial, zp: &Monomial, p: Rat, order: Rat) -> Result<QSeries> {
    psi_expr(k, n, x, z, zp, p)?.eval(order)
}

/// `Λ(d, z, z0, z')` for odd `d`, with `z^{1/d}` on the canonical branch.
pub fn lambda_expr(d: i64, z: &Monomial, z0: &Monomial, zp: &Monomial) -> Result<Expr> {
    if d < 1 || d % 2 == 0 {
        return Err(invalid("lambda needs an odd positive d"));
    }
    let w = z.root_pow(1, d)?;
    let wm2 = w.pow(-2);
    let two = r(2);
    let psi_part = psi_expr((d - 1) / 2, d, &wm2.times_q(d), z0, zp, two)?;
    let mut deltas = Vec::new();
    for t in 0..d {
        let zt = Monomial::zeta(-t, d);
        let x = (&Monomial::zeta(-2 * t, d) * &wm2).times_q(d);
        let z1 = (&Monomial::zeta(t, d) * &w).times_q(Rat::new(-(d - 1), 2));
        deltas.push(Expr::product([Expr::mono(zt), delta_expr(&x, &z1, z0, two)?]));
    }
    let pref = Monomial::minus_one()
        .pow((d + 1) / 2)
        .times_q(Rat::new(-(d - 1) * (d - 1), 4))
        * w.pow(d - 1);
    Ok(Expr::product([
        Expr::mono(pref),
        psi_part + Expr::sum(deltas).scale(Cyclotomic::from_ratio(1, d)),
    ]))
}

pub fn lambda(d: i64, z: &Monomial, z0: &Monomial, zp: &Monomial, order: Rat) -> Result<QSeries> {
    lambda_expr(d, z, z0, zp)?.eval(order)
}

fn one_minus(z: &Monomial) -> Expr {
    Expr::int(1) - Expr::mono(z.clone())
}

/// `(1+z) O_d(z; q)` through Appell-Lerch sums: the `Λ` form for odd `d`, the `Ψ`
/// form for even `d`. `z0` is only used when `d` is odd.
pub fn s_bar_expr(d: i64, z: &Monomial, z0: &Monomial, zp: &Monomial) -> Result<Expr> {
    if d < 1 {
        return Err(invalid("d must be positive"));
    }
    let inner = if d % 2 == 1 {
        let m = appell_expr(&z.pow(-2).times_q(d * d), r(2 * d * d), zp)?;
        Expr::int(1) - m.scale_int(2) + lambda_expr(d, z, z0, zp)?.scale_int(2)
    } else {
        let h = d / 2;
        let sign = if h % 2 == 0 { 1 } else { -1 };
        let x = (Monomial::minus_one().pow(h + 1) * z.clone()).times_q(Rat::new(d * d, 4));
        let m = appell_expr(&x, Rat::new(d * d, 2), zp)?;
        let psi_x = z.root_pow(2, d)?.times_q(1 - d);
        let ps = psi_expr(0, h, &psi_x, &Monomial::q(1), zp, r(2))?;
        let pref = z.times_q(Rat::new(-d * d, 4));
        Expr::int(-1) + m.scale_int(2) + Expr::product([Expr::mono(pref), ps]).scale_int(2 * sign)
    };
    Ok(one_minus(z) * inner)
}

pub fn s_bar_d(d: i64, z: &Monomial, z0: &Monomial, zp: &Monomial, order: Rat) -> Result<QSeries> {
    s_bar_expr(d, z, z0, zp)?.eval(order)
}

/// `(1-z)/(1+z)` as an expression; poles at `z = ±1`.
fn mobius_factor(z: &Monomial) -> Result<Expr> {
    if z.exp().is_zero() {
        let c = z.coeff();
        let one = Cyclotomic::one();
        let den = &one + &c;
        if den.is_zero() || c.is_one() {
            return Err(non_generic(alloc::format!(
                "z = {z} is a pole of the generating function"
            )));
        }
        return Ok(Expr::constant((&one - &c).checked_div(&den)?));
    }
    Ok(one_minus(z).div(Expr::int(1) + Expr::mono(z.clone())))
}

/// `Σ_n (-1)^n q^{n² + dn} / (1 - z q^{dn})` over all integers `n`.
fn gen1_sum(d: i64, z: &Monomial) -> LambertSum {
    LambertSum {
        lead: Monomial::one(),
        ratio: Monomial::minus_one().times_q(d),
        quad: r(1),
        divisors: vec![Divisor {
            w: z.clone(),
            s: r(d),
            power: 1,
        }],
        lower: None,
    }
}

/// `O_d(z; q)` from the single bilateral sum
/// `(1-z)/(1+z) (1 + 2z/j(q;q²) Σ_n (-1)^n q^{n²+dn} / (1 - z q^{dn}))`.
pub fn o_d_direct_expr(d: i64, z: &Monomial) -> Result<Expr> {
    if d < 1 {
        return Err(invalid("d must be positive"));
    }
    let sum = Expr::product([
        Expr::mono(z.clone()),
        Expr::eta(&[(2, 1), (1, -2)]),
        Expr::leaf(gen1_sum(d, z)),
    ]);
    Ok(mobius_factor(z)? * (Expr::int(1) + sum.scale_int(2)))
}

pub fn o_d_direct(d: i64, z: &Monomial, order: Rat) -> Result<QSeries> {
    o_d_direct_expr(d, z)?.eval(order)
}

/// `O_d(z; q)` from the one-sided double-divisor form
/// `(-q)_∞/(q)_∞ (1 + 2 Σ_{n≥1} (1-z)(1-z^{-1}) (-1)^n q^{n²+dn} / ((1-zq^{dn})(1-z^{-1}q^{dn})))`.
///
/// Unlike [`o_d_direct`] this form is regular at `z = -1` and `z = 1`.
pub fn o_d_gen_expr(d: i64, z: &Monomial) -> Result<Expr> {
    if d < 1 {
        return Err(invalid("d must be positive"));
    }
    let zi = z.inv();
    let sum = LambertSum {
        lead: Monomial::one(),
        ratio: Monomial::minus_one().times_q(d),
        quad: r(1),
        divisors: vec![
            Divisor {
                w: z.clone(),
                s: r(d),
                power: 1,
            },
            Divisor {
                w: zi.clone(),
                s: r(d),
                power: 1,
            },
        ],
        lower: Some(1),
    };
    let factor = one_minus(z) * one_minus(&zi);
    Ok(Expr::eta(&[(2, 1), (1, -2)]) * (Expr::int(1) + (factor * Expr::leaf(sum)).scale_int(2)))
}

pub fn o_d_gen(d: i64, z: &Monomial, order: Rat) -> Result<QSeries> {
    o_d_gen_expr(d, z)?.eval(order)
}

/// `O_d(-1; q) = (-q)_∞/(q)_∞ (1 + 8 Σ_{n≥1} (-1)^n q^{n²+dn} / (1+q^{dn})²)`.
pub fn o_d_at_minus_one_expr(d: i64) -> Result<Expr> {
    if d < 1 {
        return Err(invalid("d must be positive"));
    }
    let sum = LambertSum {
        lead: Monomial::one(),
        ratio: Monomial::minus_one().times_q(d),
        quad: r(1),
        divisors: vec![Divisor {
            w: Monomial::minus_one(),
            s: r(d),
            power: 2,
        }],
        lower: Some(1),
    };
    Ok(Expr::eta(&[(2, 1), (1, -2)]) * (Expr::int(1) + Expr::leaf(sum).scale_int(8)))
}

/// Both sides of `(1/j(q;q²)) Σ_n (-1)^n q^{n²+n}/(1 - x q^n) = -x^{-1} m(x^{-2}q, q², x)`.
pub fn lambert_form_sides(x: &Monomial, order: Rat) -> (Result<QSeries>, Result<QSeries>) {
    let lhs = {
        let sum = LambertSum {
            lead: Monomial::one(),
            ratio: Monomial::minus_one().times_q(1),
            quad: r(1),
            divisors: vec![Divisor {
                w: x.clone(),
                s: r(1),
                power: 1,
            }],
            lower: None,
        };
        Expr::leaf(sum).div(Expr::theta(Monomial::q(1), 2)).eval(order)
    };
    let rhs = (|| -> Result<QSeries> {
        let m = appell_expr(&x.pow(-2).times_q(1), r(2), x)?;
        Expr::product([Expr::mono(-x.inv()), m]).eval(order)
    })();
    (lhs, rhs)
}

/// Checks the Lambert-series form of `m(x^{-2}q, q², x)`.
pub fn lambert_form_check(x: &Monomial, order: Rat) -> IdentityReport {
    let inst = vec![("x".to_string(), x.to_string())];
    let (lhs, rhs) = lambert_form_sides(x, order);
    report::compare("appell-lambert-form", inst, lhs, rhs, order)
}
