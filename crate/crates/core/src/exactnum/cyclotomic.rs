use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{field, CyclotomicField};
use super::ntheory;
use crate::error::{Error, Result};

/// An element of Q(ζ_L) in reduced power-basis form.
///
/// Stored as an integer coefficient vector over a common positive denominator, with
/// the whole fraction in lowest terms. Equality across different levels embeds both
/// sides into the lcm level first.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::zero_at(1)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn zero_at(level: u32) -> Self {
        let f = field(level);
        let num = vec![BigInt::zero(); f.degree()];
        Cyclotomic {
            field: f,
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Cyclotomic {
            field: field(1),
            num: vec![n.into()],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Cyclotomic {
            field: field(1),
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    /// Element Σ c_i ζ_L^i for an arbitrary-length list; reduced mod Φ_L.
    pub fn from_coeffs(level: u32, coeffs: &[BigRational]) -> Self {
        let f = field(level);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        if num.len() < f.degree() {
            num.resize(f.degree(), BigInt::zero());
        }
        f.reduce(&mut num);
        let mut out = Cyclotomic { field: f, num, den };
        out.normalize();
        out
    }

    /// ζ_den^num as an element of Q(ζ_den).
    pub fn root_of_unity(num: i64, den: u32) -> Self {
        assert!(den >= 1, "root of unity order must be positive");
        let f = field(den);
        let p = f.power(num);
        Cyclotomic {
            field: f,
            num: p,
            den: BigInt::one(),
        }
    }

    pub(crate) fn from_parts(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = Cyclotomic { field, num, den };
        out.normalize();
        out
    }

    pub fn level(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Power-basis coefficients, length φ(L).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Image in Q(ζ_level); `level` must be a multiple of the current level.
    pub fn embed(&self, level: u32) -> Result<Self> {
        let here = self.level();
        if level == here {
            return Ok(self.clone());
        }
        if level == 0 || !level.is_multiple_of(here) {
            return Err(Error::InvalidArgument(alloc::format!(
                "cannot embed level {here} into level {level}"
            )));
        }
        let s = (level / here) as usize;
        let f = field(level);
        let mut num = vec![BigInt::zero(); ((self.num.len() - 1) * s + 1).max(f.degree())];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                num[i * s] = c.clone();
            }
        }
        f.reduce(&mut num);
        Ok(Cyclotomic {
            field: f,
            num,
            den: self.den.clone(),
        })
    }

    fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        let l = ntheory::lcm(a.level() as u64, b.level() as u64) as u32;
        (a.embed(l).expect("lcm level"), b.embed(l).expect("lcm level"))
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    /// Multiply by a rational number.
    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.field.degree() == 1 {
            let num = vec![&self.num[0] * &other.num[0]];
            return Self::from_parts(self.field.clone(), num, &self.den * &other.den);
        }
        let deg = self.field.degree();
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&mut prod);
        Self::from_parts(self.field.clone(), prod, &self.den * &other.den)
    }

    fn add_same(&self, other: &Self, sign: i8) -> Self {
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                let (x, y) = (a * &fa, b * &fb);
                if sign > 0 {
                    x + y
                } else {
                    x - y
                }
            })
            .collect();
        Self::from_parts(self.field.clone(), num, l)
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        if self.level() == other.level() {
            self.add_same(other, sign)
        } else {
            let (a, b) = Self::lift_pair(self, other);
            a.add_same(&b, sign)
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.level() == other.level() {
            self.mul_same(other)
        } else if other.level() == 1 {
            self.scale(&BigRational::new(other.num[0].clone(), other.den.clone()))
        } else if self.level() == 1 {
            other.scale(&BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            let (a, b) = Self::lift_pair(self, other);
            a.mul_same(&b)
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against Φ_L.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InverseOfZero);
        }
        if let Some(r) = self.to_rational() {
            return Self::from_rational(&r.recip()).embed(self.level());
        }
        let a: Vec<BigRational> = self.coeffs();
        let m: Vec<BigRational> = self
            .field
            .modulus()
            .iter()
            .map(|c| BigRational::from_integer((*c).into()))
            .collect();
        let u = rational_poly_inverse(&a, &m);
        Ok(Self::from_coeffs(self.level(), &u))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one().embed(self.level())?;
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Image under the automorphism ζ_L ↦ ζ_L^k (k coprime to L).
    pub fn conjugate(&self, k: i64) -> Self {
        let f = &self.field;
        let mut out = vec![BigInt::zero(); f.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = f.power(k * i as i64);
            for (o, pj) in out.iter_mut().zip(&p) {
                if !pj.is_zero() {
                    *o += c * pj;
                }
            }
        }
        Self::from_parts(f.clone(), out, self.den.clone())
    }

    /// Trace from Q(ζ_L) down to Q.
    pub fn trace(&self) -> BigRational {
        let l = self.level() as u64;
        let mut t = BigInt::zero();
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                t += c * ntheory::ramanujan_sum(l, i as i64);
            }
        }
        BigRational::new(t, self.den.clone())
    }
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Inverse of `a` modulo the irreducible `m` over Q.
fn rational_poly_inverse(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    // invariant: r0 = s0*a (mod m), r1 = s1*a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let s2 = poly_sub(&s0, &qs);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    let c = r1[0].recip();
    let mut out: Vec<BigRational> = s1.iter().map(|x| x * &c).collect();
    poly_trim(&mut out);
    out
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let lead = b[db].recip();
    let mut q = vec![BigRational::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    poly_trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.level() == other.level() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::lift_pair(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(r: BigRational) -> Self {
        Self::from_rational(&r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, 1));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, -1));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.product(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, 1);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, -1);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.product(rhs);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Writes a rational as `p` or `p/q`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&fmt_rational(c))?;
        }
        write!(f, "]@zeta{}", self.level())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Running sum of products at a fixed level, reduced once at the end.
pub struct Accumulator {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
    dirty: bool,
}

impl Accumulator {
    pub fn new(field: Arc<CyclotomicField>) -> Self {
        let len = 2 * field.degree() - 1;
        Accumulator {
            field,
            num: vec![BigInt::zero(); len],
            den: BigInt::one(),
            dirty: false,
        }
    }

    fn rebase(&mut self, d: &BigInt) -> BigInt {
        if *d == self.den {
            return BigInt::one();
        }
        let l = self.den.lcm(d);
        if l != self.den {
            let f = &l / &self.den;
            if self.dirty {
                for c in &mut self.num {
                    if !c.is_zero() {
                        *c *= &f;
                    }
                }
            }
            self.den = l;
        }
        &self.den / d
    }

    pub fn add(&mut self, a: &Cyclotomic) {
        self.add_scaled(a, 1);
    }

    pub fn sub(&mut self, a: &Cyclotomic) {
        self.add_scaled(a, -1);
    }

    fn add_scaled(&mut self, a: &Cyclotomic, sign: i8) {
        debug_assert_eq!(a.level(), self.field.order());
        let f = self.rebase(&a.den);
        let unit = f.is_one();
        for (o, c) in self.num.iter_mut().zip(&a.num) {
            if c.is_zero() {
                continue;
            }
            let t = if unit { c.clone() } else { c * &f };
            if sign > 0 {
                *o += t;
            } else {
                *o -= t;
            }
        }
        self.dirty = true;
    }

    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic) {
        self.add_product_signed(a, b, 1);
    }

    pub fn sub_product(&mut self, a: &Cyclotomic, b: &Cyclotomic) {
        self.add_product_signed(a, b, -1);
    }

    fn add_product_signed(&mut self, a: &Cyclotomic, b: &Cyclotomic, sign: i8) {
        debug_assert_eq!(a.level(), self.field.order());
        debug_assert_eq!(b.level(), self.field.order());
        let pd = if b.den.is_one() { a.den.clone() } else { &a.den * &b.den };
        let f = self.rebase(&pd);
        let unit = f.is_one();
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xf = if unit { x.clone() } else { x * &f };
            for (j, y) in b.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if sign > 0 {
                    self.num[i + j] += &xf * y;
                } else {
                    self.num[i + j] -= &xf * y;
                }
            }
        }
        self.dirty = true;
    }

    pub fn finish(mut self) -> Cyclotomic {
        self.field.reduce(&mut self.num);
        Cyclotomic::from_parts(self.field, self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64, d: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, d)
    }

    fn q(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_ratio(n, d)
    }

    #[test]
    fn roots_of_unity_examples() {
        assert!(z(1, 1).is_one());
        assert_eq!(z(3, 6), q(-1, 1));
        assert_eq!(z(1, 3).embed(12).unwrap(), z(4, 12));
        assert_eq!(&z(1, 3) * &z(2, 3), Cyclotomic::one());
        assert_eq!(&z(1, 3) + &z(2, 3), q(-1, 1));
        assert_eq!(z(5, 5), Cyclotomic::one());
        assert_eq!(z(-1, 7), z(6, 7));
    }

    #[test]
    fn inverse_of_one_minus_zeta3() {
        // (1 - w)(2 + w) = 2 - w - w^2 = 3 when 1 + w + w^2 = 0
        let a = &Cyclotomic::one() - &z(1, 3);
        let expect = (&q(2, 1) + &z(1, 3)).scale(&BigRational::new(1.into(), 3.into()));
        assert_eq!(a.inv().unwrap(), expect);
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::InverseOfZero));
        assert_eq!(Cyclotomic::zero_at(7).inv(), Err(Error::InverseOfZero));
    }

    #[test]
    fn character_sums() {
        for n in 1..=12u32 {
            for s in -13..=13i64 {
                let mut acc = Cyclotomic::zero_at(n);
                for j in 0..n as i64 {
                    acc += &z(s * j, n);
                }
                let expect = if s % n as i64 == 0 { n as i64 } else { 0 };
                assert_eq!(acc, q(expect, 1), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn trace_and_conjugates() {
        let a = &(&z(1, 5) * &q(3, 2)) + &q(1, 7);
        let mut sum = Cyclotomic::zero_at(5);
        for k in 1..5 {
            sum += &a.conjugate(k);
        }
        assert_eq!(sum.to_rational().unwrap(), a.trace());
        assert_eq!(z(1, 9).trace(), BigRational::zero());
        assert_eq!(z(3, 9).trace(), BigRational::from_integer((-3).into()));
    }

    #[test]
    fn accumulator_matches_plain_arithmetic() {
        let f = field(12);
        let a = (&z(1, 12) * &q(2, 3)).embed(12).unwrap();
        let b = (&z(5, 12) + &q(1, 5)).embed(12).unwrap();
        let c = q(7, 4).embed(12).unwrap();
        let mut acc = Accumulator::new(f);
        acc.add_product(&a, &b);
        acc.sub_product(&b, &c);
        acc.add(&c);
        let expect = &(&(&a * &b) - &(&b * &c)) + &c;
        assert_eq!(acc.finish(), expect);
    }

    #[test]
    fn display_format() {
        let a = &z(1, 3) * &q(1, 2);
        assert_eq!(alloc::format!("{a}"), "[0,1/2]@zeta3");
        assert_eq!(alloc::format!("{}", q(-3, 1)), "[-3]@zeta1");
    }

    #[test]
    fn pow_and_negative_pow() {
        let a = &Cyclotomic::one() + &z(1, 7);
        let p = a.pow(-3).unwrap();
        assert!((&p * &a.pow(3).unwrap()).is_one());
        assert_eq!(z(1, 8).pow(4).unwrap(), q(-1, 1));
    }
}
