use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, QSeries};
use crate::error::{non_generic, Result};
use crate::exactnum::{Cyclotomic, Rat};

fn term_count(order: Rat) -> usize {
    order.ceil().to_integer().max(0) as usize
}

/// `J_m = (q^m; q^m)_∞` below `order`, by multiplying out the finitely many
/// factors `1 - q^{mk}` with `mk < order`.
pub fn eta_j(m: u32, order: Rat) -> QSeries {
    assert!(m >= 1, "eta index must be positive");
    let n = term_count(order);
    let mut c = vec![BigInt::zero(); n.max(1)];
    c[0] = BigInt::one();
    let step = m as usize;
    let mut k = step;
    while k < n {
        for i in (k..n).rev() {
            if !c[i - k].is_zero() {
                let t = c[i - k].clone();
                c[i] -= t;
            }
        }
        k += step;
    }
    c.truncate(n);
    QSeries::from_integers(0, &c, Some(order))
}

/// `Π J_m^{e_m}` below `order`, via the logarithmic-derivative recurrence
/// `n f_n = -Σ_{k=1}^{n} σ(k) f_{n-k}` with `σ(N) = Σ_{j | N} j Σ_{m | j} e_m`.
pub fn eta_quotient(factors: &[(u32, i64)], order: Rat) -> QSeries {
    let n = term_count(order);
    if n == 0 {
        return QSeries::zero_to(order);
    }
    let mut c = vec![0i64; n];
    for &(m, e) in factors {
        assert!(m >= 1, "eta index must be positive");
        let mut j = m as usize;
        while j < n {
            c[j] += e;
            j += m as usize;
        }
    }
    let mut sigma = vec![BigInt::zero(); n];
    for (j, &cj) in c.iter().enumerate().skip(1) {
        if cj == 0 {
            continue;
        }
        let w = BigInt::from(j as i64 * cj);
        let mut nn = j;
        while nn < n {
            sigma[nn] += &w;
            nn += j;
        }
    }
    let mut f = vec![BigInt::zero(); n];
    f[0] = BigInt::one();
    for k in 1..n {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            if !sigma[i].is_zero() && !f[k - i].is_zero() {
                acc += &sigma[i] * &f[k - i];
            }
        }
        f[k] = -acc / BigInt::from(k as i64);
    }
    QSeries::from_integers(0, &f, Some(order))
}

/// `1 / (1 - u)` expanded in the direction that converges for `|q| < 1`.
///
/// A positive q-power expands as a geometric series, a negative one through
/// `-u^{-1} / (1 - u^{-1})`, and a pure constant `c ≠ 1` gives `1/(1-c)`.
pub fn geometric(u: &Monomial, order: Rat) -> Result<QSeries> {
    let e = u.exp();
    if e.is_zero() {
        let c = u.coeff();
        if c.is_one() {
            return Err(non_generic("pole: 1/(1-u) with u = 1"));
        }
        return Ok(QSeries::constant((&Cyclotomic::one() - &c).inv()?));
    }
    let (w, first, sign) = if e > Rat::zero() {
        (u.clone(), 0i64, 1i64)
    } else {
        (u.inv(), 1i64, -1i64)
    };
    let step = w.exp();
    let mut terms: Vec<(Rat, Cyclotomic)> = Vec::new();
    let mut k = first;
    while step * k < order {
        let p = w.pow(k);
        let c = p.coeff();
        terms.push((p.exp(), if sign < 0 { -c } else { c }));
        k += 1;
    }
    Ok(QSeries::from_terms(terms, Some(order)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries, n: i64) -> Vec<i64> {
        (0..n)
            .map(|e| {
                let r = s.coeff(Rat::from_integer(e)).unwrap().to_rational().unwrap();
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn pentagonal_pattern() {
        let j1 = eta_j(1, Rat::from_integer(13));
        assert_eq!(ints(&j1, 13), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        let j2 = eta_j(2, Rat::from_integer(5));
        assert_eq!(ints(&j2, 5), [1, 0, -1, 0, -1]);
        assert_eq!(
            eta_j(9, Rat::from_integer(5)),
            QSeries::one().truncate(Rat::from_integer(5))
        );
    }

    #[test]
    fn quotient_recurrence_agrees_with_products() {
        let o = Rat::from_integer(40);
        let direct = (&eta_j(2, o).pow_unsigned(5) * &eta_j(1, o).pow_unsigned(2))
            .div(&(&eta_j(4, o).pow_unsigned(2) * &eta_j(3, o)))
            .unwrap();
        let rec = eta_quotient(&[(2, 5), (1, 2), (4, -2), (3, -1)], o);
        assert_eq!(direct.first_difference(&rec, o).unwrap(), None);
    }

    #[test]
    fn geometric_branches() {
        let o = Rat::from_integer(6);
        let g = geometric(&Monomial::q(2), o).unwrap();
        assert_eq!(ints(&g, 6), [1, 0, 1, 0, 1, 0]);
        // 1/(1 - q^{-1}) = -q/(1 - q)
        let g = geometric(&Monomial::q(-1), o).unwrap();
        assert_eq!(ints(&g, 6), [0, -1, -1, -1, -1, -1]);
        let g = geometric(&Monomial::minus_one(), o).unwrap();
        assert_eq!(g, QSeries::constant(Cyclotomic::from_ratio(1, 2)));
        assert!(geometric(&Monomial::one(), o).is_err());
    }
}
