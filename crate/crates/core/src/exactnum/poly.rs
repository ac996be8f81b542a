use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The `l`-th cyclotomic polynomial, coefficients listed from the constant term up.
///
/// Computed by exact division of `x^l - 1` by every `Φ_d` with `d | l`, `d < l`.
pub fn cyclo_polynomial(l: u32) -> Vec<BigInt> {
    assert!(l >= 1, "cyclotomic index must be positive");
    let mut memo = BTreeMap::new();
    build(l, &mut memo)
}

fn build(n: u32, memo: &mut BTreeMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let f = build(d, memo);
            p = div_exact_monic(&p, &f);
        }
    }
    memo.insert(n, p.clone());
    p
}

/// Quotient of `num` by the monic polynomial `den`; the division must be exact.
pub(crate) fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn known_small_cases() {
        assert_eq!(ints(&cyclo_polynomial(1)), [-1, 1]);
        assert_eq!(ints(&cyclo_polynomial(2)), [1, 1]);
        assert_eq!(ints(&cyclo_polynomial(3)), [1, 1, 1]);
        assert_eq!(ints(&cyclo_polynomial(4)), [1, 0, 1]);
        assert_eq!(ints(&cyclo_polynomial(6)), [1, -1, 1]);
        assert_eq!(ints(&cyclo_polynomial(12)), [1, 0, -1, 0, 1]);
    }

    #[test]
    fn product_over_divisors_is_x_pow_n_minus_one() {
        // independent check: multiply the factors back together
        for n in 1..=60u32 {
            let mut acc = vec![BigInt::one()];
            for d in 1..=n {
                if n % d == 0 {
                    let f = cyclo_polynomial(d);
                    let mut out = vec![BigInt::zero(); acc.len() + f.len() - 1];
                    for (i, a) in acc.iter().enumerate() {
                        for (j, b) in f.iter().enumerate() {
                            out[i + j] += a * b;
                        }
                    }
                    acc = out;
                }
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = -BigInt::one();
            expect[n as usize] = BigInt::one();
            assert_eq!(acc, expect, "n={n}");
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        assert!(cyclo_polynomial(105).iter().any(|c| *c == BigInt::from(-2)));
    }
}
