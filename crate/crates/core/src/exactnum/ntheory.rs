//! Small integer number theory helpers.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    lcm(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = prime_factors(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan sum c_n(k): the sum of the k-th powers of the primitive n-th roots of unity.
pub fn ramanujan_sum(n: u64, k: i64) -> i64 {
    let g = gcd(n, k.rem_euclid(n as i64) as u64);
    let g = if g == 0 { n } else { g };
    let m = n / g;
    mobius(m) * (euler_phi(n) / euler_phi(m)) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(ramanujan_sum(3, 1), -1);
        assert_eq!(ramanujan_sum(3, 3), 2);
        assert_eq!(ramanujan_sum(4, 2), -2);
    }

    #[test]
    fn ramanujan_sum_matches_brute_force() {
        // sum of cos(2 pi j k / n) over primitive j, compared by rounding
        for n in 1..40u64 {
            for k in 0..(2 * n as i64) {
                let mut s = 0.0f64;
                for j in 1..=n {
                    if gcd(j, n) == 1 {
                        let t = 2.0 * core::f64::consts::PI * (j as f64) * (k as f64) / (n as f64);
                        s += t.cos();
                    }
                }
                assert_eq!(ramanujan_sum(n, k), s.round() as i64, "n={n} k={k}");
            }
        }
    }
}
