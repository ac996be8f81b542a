//! Theta functions `j(z; q^p)` and their elementary rewriting laws.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::exactnum::Rat;
use crate::expr::Expr;
use crate::qseries::{convex_window, Monomial, QSeries};
use crate::report::{self, IdentityReport};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// True when `z` is an integral power of the base `q^p`, where `j(z; q^p)` vanishes.
pub fn theta_vanishes(z: &Monomial, p: Rat) -> bool {
    z.is_integral_power_of(p)
}

/// Exponent of the lowest term of `j(z; q^p)`, or `None` if it vanishes identically.
pub fn theta_valuation(z: &Monomial, p: Rat) -> Option<Rat> {
    if theta_vanishes(z, p) {
        return None;
    }
    let e = z.exp();
    let f = |n: i64| p * binom2(n) + e * n;
    let mut n = (Rat::new(1, 2) - e / p).round().to_integer();
    while f(n - 1) < f(n) {
        n -= 1;
    }
    while f(n + 1) < f(n) {
        n += 1;
    }
    Some(f(n))
}

/// `j(z; q^p) = Σ_n (-1)^n q^{p·n(n-1)/2} z^n` below `order`.
pub fn theta_j(z: &Monomial, p: Rat, order: Rat) -> QSeries {
    assert!(p > Rat::from_integer(0), "theta base must be a positive power of q");
    if theta_vanishes(z, p) {
        return QSeries::zero();
    }
    let e = z.exp();
    let f = |n: i64| p * binom2(n) + e * n;
    let start = (Rat::new(1, 2) - e / p).round().to_integer();
    let window = convex_window(f, start, None, order).expect("quadratic growth");
    let mut terms = Vec::new();
    if let Some((lo, hi)) = window {
        let mz = -z;
        for n in lo..=hi {
            let m = mz.pow(n).times_q(p * binom2(n));
            terms.push((m.exp(), m.coeff()));
        }
    }
    QSeries::from_terms(terms, Some(order))
}

/// `j(z1; q^p) j(z2; q^p)`.
pub fn theta_j2(z1: &Monomial, z2: &Monomial, p: Rat, order: Rat) -> Result<QSeries> {
    Expr::theta(z1.clone(), p).mul(Expr::theta(z2.clone(), p)).eval(order)
}

/// The triple product `(z;Q)_∞ (Q/z;Q)_∞ (Q;Q)_∞` with `Q = q^p`, multiplied out factor
/// by factor. Independent of [`theta_j`].
pub fn theta_product(z: &Monomial, p: Rat, order: Rat) -> QSeries {
    let zi = z.inv();
    let e = z.exp();
    let zero = Rat::from_integer(0);
    let mut neg = zero;
    for k in 0.. {
        let a = e + p * k;
        let b = -e + p * (k + 1);
        if a >= zero && b >= zero {
            break;
        }
        neg += a.min(zero) + b.min(zero);
    }
    let limit = order - neg;
    let mut factors: Vec<Monomial> = Vec::new();
    for k in 0.. {
        let ws = [z.times_q(p * k), zi.times_q(p * (k + 1)), Monomial::q(p * (k + 1))];
        if ws.iter().all(|w| w.exp() >= limit) {
            break;
        }
        factors.extend(ws.into_iter().filter(|w| w.exp() < limit));
    }
    factors.sort_by_key(|w| w.exp());
    let mut acc = QSeries::one();
    for w in factors {
        let f = &QSeries::one() - &QSeries::from_monomial(&w);
        acc = &acc * &f;
        if w.exp() > Rat::from_integer(0) {
            acc = acc.truncate(order);
        }
    }
    acc.truncate(order)
}

/// Checks `j(Q^n x; Q) = (-1)^n Q^{-n(n-1)/2} x^{-n} j(x; Q)` and `j(x; Q) = j(Q/x; Q)`.
pub fn theta_shift_check(x: &Monomial, n: i64, p: Rat, order: Rat) -> IdentityReport {
    let inst = vec![
        ("x".to_string(), x.to_string()),
        ("n".to_string(), n.to_string()),
        ("base".to_string(), Monomial::q(p).to_string()),
    ];
    let lhs1 = Expr::theta(x.times_q(p * n), p);
    let pref = Monomial::minus_one().pow(n).times_q(-p * binom2(n)) * x.pow(-n);
    let rhs1 = Expr::mono(pref).mul(Expr::theta(x.clone(), p));
    let first = report::compare(
        "theta-quasi-period",
        inst.clone(),
        lhs1.eval(order),
        rhs1.eval(order),
        order,
    );
    let lhs2 = Expr::theta(x.clone(), p);
    let rhs2 = Expr::theta(x.inv().times_q(p), p);
    let second = report::compare("theta-inversion", inst, lhs2.eval(order), rhs2.eval(order), order);
    let mut out = first.merge(second);
    out.id = "theta-shift".to_string();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Cyclotomic;
    use crate::qseries::eta_quotient;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn vanishing_instances() {
        assert!(theta_j(&Monomial::q(1), r(1), r(20)).is_exact());
        assert!(theta_j(&Monomial::q(-3), r(1), r(20)).is_zero());
        assert_eq!(theta_valuation(&Monomial::q(2), r(1)), None);
    }

    #[test]
    fn minus_one_closed_form() {
        let o = r(40);
        let lhs = theta_j(&Monomial::minus_one(), r(1), o);
        let rhs = eta_quotient(&[(2, 2), (1, -1)], o).scale_int(2);
        assert_eq!(lhs.first_difference(&rhs, o).unwrap(), None);
    }

    #[test]
    fn cube_root_closed_form() {
        let o = r(40);
        let w = Monomial::zeta(1, 3);
        let lhs = theta_j(&w, r(1), o);
        let rhs = eta_quotient(&[(3, 1)], o).scale(&(&Cyclotomic::one() - &w.coeff()));
        assert_eq!(lhs.first_difference(&rhs, o).unwrap(), None);
    }

    #[test]
    fn sum_matches_product() {
        let o = r(25);
        for z in [
            Monomial::zeta(2, 5).times_q(Rat::new(1, 2)),
            Monomial::zeta(1, 7).times_q(-3),
            Monomial::minus_one().times_q(2),
            Monomial::zeta(3, 4),
        ] {
            for p in [r(1), r(2), Rat::new(3, 2)] {
                let a = theta_j(&z, p, o);
                let b = theta_product(&z, p, o);
                assert_eq!(a.first_difference(&b, o).unwrap(), None, "z={z} p={p}");
                assert_eq!(a.valuation(), theta_valuation(&z, p));
            }
        }
    }

    #[test]
    fn shift_laws() {
        let o = r(20);
        assert!(theta_shift_check(&Monomial::zeta(1, 5).times_q(1), 2, r(1), o).passed());
        assert!(theta_shift_check(&Monomial::zeta(1, 7), 0, r(1), o).passed());
        assert!(theta_shift_check(&Monomial::q(1), 3, r(1), o).passed());
        assert!(theta_shift_check(&Monomial::zeta(2, 7).times_q(-1), -2, r(2), o).passed());
    }
}
