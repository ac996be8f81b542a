use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Monomial;
use crate::error::{invalid, non_generic, Error, Result};
use crate::exactnum::ntheory::{gcd_i64, lcm, lcm_i64};
use crate::exactnum::{field, Accumulator, Cyclotomic, Rat};

/// A truncated Laurent series in `q^{1/D}` with cyclotomic coefficients.
///
/// Coefficient `i` belongs to the exponent `(val + i) / D`. Coefficients at exponents
/// `>= order` are unknown; `order = None` marks an exact (finite) series.
#[derive(Clone)]
pub struct QSeries {
    denom: i64,
    val: i64,
    coeffs: Vec<Cyclotomic>,
    order: Option<Rat>,
    level: u32,
}

/// First exponent where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Rat,
    pub left: Cyclotomic,
    pub right: Cyclotomic,
}

fn min_order(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn ceil_i64(r: Rat) -> i64 {
    r.ceil().to_integer()
}

impl QSeries {
    fn raw(denom: i64, val: i64, coeffs: Vec<Cyclotomic>, order: Option<Rat>, level: u32) -> Self {
        let mut s = QSeries {
            denom,
            val,
            coeffs,
            order,
            level,
        };
        s.normalize();
        s
    }

    /// The exact zero series.
    pub fn zero() -> Self {
        Self::raw(1, 0, Vec::new(), None, 1)
    }

    /// Zero, known only below `order`.
    pub fn zero_to(order: Rat) -> Self {
        Self::raw(1, 0, Vec::new(), Some(order), 1)
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        let level = c.level();
        Self::raw(1, 0, vec![c], None, level)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Cyclotomic::from_integer(n))
    }

    /// `c · q^e`.
    pub fn monomial(c: Cyclotomic, e: Rat) -> Self {
        let level = c.level();
        Self::raw(*e.denom(), *e.numer(), vec![c], None, level)
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::monomial(m.coeff(), m.exp())
    }

    /// Series with the given nonzero terms; repeated exponents are summed.
    pub fn from_terms<I>(terms: I, order: Option<Rat>) -> Self
    where
        I: IntoIterator<Item = (Rat, Cyclotomic)>,
    {
        let terms: Vec<(Rat, Cyclotomic)> = terms.into_iter().collect();
        let mut denom = 1i64;
        let mut level = 1u64;
        for (e, c) in &terms {
            denom = lcm_i64(denom, *e.denom());
            level = lcm(level, c.level() as u64);
        }
        let level = level as u32;
        if terms.is_empty() {
            return Self::raw(1, 0, Vec::new(), order, 1);
        }
        let units: Vec<i64> = terms.iter().map(|(e, _)| (e * denom).to_integer()).collect();
        let lo = *units.iter().min().unwrap();
        let hi = *units.iter().max().unwrap();
        let mut coeffs = vec![Cyclotomic::zero_at(level); (hi - lo + 1) as usize];
        for ((_, c), u) in terms.iter().zip(&units) {
            let slot = &mut coeffs[(u - lo) as usize];
            *slot = &*slot + &c.embed(level).expect("lcm level");
        }
        Self::raw(denom, lo, coeffs, order, level)
    }

    /// Integer coefficients for `q^val, q^{val+1}, …`.
    pub fn from_integers(val: i64, coeffs: &[BigInt], order: Option<Rat>) -> Self {
        let coeffs = coeffs.iter().map(|c| Cyclotomic::from_integer(c.clone())).collect();
        Self::raw(1, val, coeffs, order, 1)
    }

    /// Rational coefficients for `q^val, q^{val+1}, …`.
    pub fn from_rationals(val: i64, coeffs: &[BigRational], order: Option<Rat>) -> Self {
        let coeffs = coeffs.iter().map(Cyclotomic::from_rational).collect();
        Self::raw(1, val, coeffs, order, 1)
    }

    /// Coefficients for integer exponents `val, val+1, …` at a common level.
    pub fn from_coeff_vec(val: i64, coeffs: Vec<Cyclotomic>, order: Option<Rat>) -> Self {
        let level = coeffs.iter().fold(1u64, |l, c| lcm(l, c.level() as u64)) as u32;
        let coeffs = coeffs.into_iter().map(|c| c.embed(level).expect("lcm level")).collect();
        Self::raw(1, val, coeffs, order, level)
    }

    fn normalize(&mut self) {
        if let Some(o) = self.order {
            let keep = (ceil_i64(o * self.denom) - self.val).max(0) as usize;
            if keep < self.coeffs.len() {
                self.coeffs.truncate(keep);
            }
        }
        while self.coeffs.last().is_some_and(Cyclotomic::is_zero) {
            self.coeffs.pop();
        }
        let lead = match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => {
                self.coeffs.clear();
                self.val = 0;
                self.denom = 1;
                return;
            }
        };
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        if self.denom > 1 {
            let mut g = gcd_i64(self.denom, self.val);
            for (i, c) in self.coeffs.iter().enumerate() {
                if g == 1 {
                    break;
                }
                if !c.is_zero() {
                    g = gcd_i64(g, self.val + i as i64);
                }
            }
            if g > 1 {
                let g = g as usize;
                let coeffs = core::mem::take(&mut self.coeffs);
                self.coeffs = coeffs.into_iter().step_by(g).collect();
                self.val /= g as i64;
                self.denom /= g as i64;
            }
        }
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Truncation order; `None` for an exact series.
    pub fn order(&self) -> Option<Rat> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<Rat> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(Rat::new(self.val, self.denom))
        }
    }

    /// Lower bound for the valuation: the true valuation, or the order when zero.
    pub fn valuation_bound(&self) -> Option<Rat> {
        self.valuation().or(self.order)
    }

    pub fn leading_coeff(&self) -> Option<&Cyclotomic> {
        self.coeffs.first()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &Cyclotomic)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (Rat::new(self.val + i as i64, self.denom), c))
    }

    /// Coefficient of `q^e`; `None` if `e` is at or beyond the order.
    pub fn coeff(&self, e: Rat) -> Option<Cyclotomic> {
        if self.order.is_some_and(|o| e >= o) {
            return None;
        }
        let zero = || Some(Cyclotomic::zero_at(self.level));
        let u = e * self.denom;
        if !u.is_integer() {
            return zero();
        }
        let i = u.to_integer() - self.val;
        if i < 0 || i as usize >= self.coeffs.len() {
            return zero();
        }
        Some(self.coeffs[i as usize].clone())
    }

    /// Lower the truncation order to `order` (never raises it).
    pub fn truncate(&self, order: Rat) -> Self {
        Self::raw(
            self.denom,
            self.val,
            self.coeffs.clone(),
            min_order(self.order, Some(order)),
            self.level,
        )
    }

    /// Same series with every coefficient moved into Q(ζ_level).
    pub fn embed(&self, level: u32) -> Result<Self> {
        if level == self.level {
            return Ok(self.clone());
        }
        let coeffs = self.coeffs.iter().map(|c| c.embed(level)).collect::<Result<Vec<_>>>()?;
        Ok(QSeries {
            coeffs,
            level,
            ..self.clone()
        })
    }

    fn with_denom(&self, denom: i64) -> Self {
        if denom == self.denom {
            return self.clone();
        }
        let f = (denom / self.denom) as usize;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * f);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for _ in 1..f {
                    coeffs.push(Cyclotomic::zero_at(self.level));
                }
            }
            coeffs.push(c.clone());
        }
        QSeries {
            denom,
            val: self.val * f as i64,
            coeffs,
            order: self.order,
            level: self.level,
        }
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        let d = lcm_i64(a.denom, b.denom);
        let l = lcm(a.level as u64, b.level as u64) as u32;
        let a = a.with_denom(d).embed(l).expect("lcm level");
        let b = b.with_denom(d).embed(l).expect("lcm level");
        (a, b)
    }

    fn add_signed(&self, other: &Self, sign: i8) -> Self {
        let (a, b) = Self::align(self, other);
        let order = min_order(a.order, b.order);
        if b.coeffs.is_empty() {
            return Self::raw(a.denom, a.val, a.coeffs, order, a.level);
        }
        if a.coeffs.is_empty() {
            let coeffs = if sign > 0 {
                b.coeffs
            } else {
                b.coeffs.iter().map(|c| -c).collect()
            };
            return Self::raw(b.denom, b.val, coeffs, order, b.level);
        }
        let lo = a.val.min(b.val);
        let hi = (a.val + a.coeffs.len() as i64).max(b.val + b.coeffs.len() as i64);
        let mut out = vec![Cyclotomic::zero_at(a.level); (hi - lo) as usize];
        for (i, c) in a.coeffs.into_iter().enumerate() {
            out[(a.val - lo) as usize + i] = c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            let slot = &mut out[(b.val - lo) as usize + i];
            if c.is_zero() {
                continue;
            }
            *slot = if sign > 0 { &*slot + c } else { &*slot - c };
        }
        Self::raw(a.denom, lo, out, order, a.level)
    }

    /// Order of a product given the two factors' orders and valuation bounds.
    fn product_order(a: &Self, b: &Self) -> Option<Rat> {
        let lhs = a.order.map(|o| o + b.valuation_bound().unwrap_or(Rat::zero()));
        let rhs = b.order.map(|o| o + a.valuation_bound().unwrap_or(Rat::zero()));
        min_order(lhs, rhs)
    }

    fn multiply(&self, other: &Self) -> Self {
        if (self.is_zero() && self.is_exact()) || (other.is_zero() && other.is_exact()) {
            return Self::zero();
        }
        let order = Self::product_order(self, other);
        if self.is_zero() || other.is_zero() {
            return Self::zero_to(order.expect("inexact zero has an order"));
        }
        let (a, b) = Self::align(self, other);
        let val = a.val + b.val;
        let full = a.coeffs.len() + b.coeffs.len() - 1;
        let n = match order {
            Some(o) => ((ceil_i64(o * a.denom) - val).max(0) as usize).min(full),
            None => full,
        };
        let coeffs = convolve(&a.coeffs, &b.coeffs, n, a.level);
        Self::raw(a.denom, val, coeffs, order, a.level)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return match self.order {
                None => Self::zero(),
                Some(_) => Self::zero_to(self.valuation_bound().unwrap()),
            };
        }
        let level = lcm(self.level as u64, c.level() as u64) as u32;
        let c = c.embed(level).expect("lcm level");
        let s = self.embed(level).expect("lcm level");
        let coeffs = s.coeffs.iter().map(|x| x * &c).collect();
        Self::raw(s.denom, s.val, coeffs, s.order, level)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&Cyclotomic::from_rational(r))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Cyclotomic::from_integer(n))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: Rat) -> Self {
        let d = lcm_i64(self.denom, *e.denom());
        let s = self.with_denom(d);
        Self::raw(
            d,
            s.val + (e * d).to_integer(),
            s.coeffs,
            self.order.map(|o| o + e),
            s.level,
        )
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.scale(&m.coeff()).shift(m.exp())
    }

    /// Reciprocal up to `limit` (the natural order `order - 2v` caps it further).
    pub fn invert_to(&self, limit: Rat) -> Result<Self> {
        Self::one().div_to(self, limit)
    }

    /// Reciprocal at its natural order; requires an inexact input.
    pub fn invert(&self) -> Result<Self> {
        match self.order {
            Some(o) => {
                let v = self.valuation_bound().unwrap();
                self.invert_to(o - v - v)
            }
            None if self.coeffs.len() == 1 => {
                let c = self.coeffs[0].inv()?;
                Ok(Self::monomial(c, -self.valuation().unwrap()))
            }
            None => Err(invalid("reciprocal of an exact series needs an explicit order")),
        }
    }

    /// Quotient `self / divisor` computed by the division recurrence, truncated at
    /// `limit` or at the natural order, whichever is lower.
    pub fn div_to(&self, divisor: &Self, limit: Rat) -> Result<Self> {
        if divisor.is_zero() {
            return Err(non_generic("division by a series vanishing to its order"));
        }
        let vb = divisor.valuation().unwrap();
        let mut order = limit;
        if let Some(o) = self.order {
            order = order.min(o - vb);
        }
        if let Some(o) = divisor.order {
            let va = self.valuation_bound().unwrap_or(o);
            if !(self.is_zero() && self.is_exact()) {
                order = order.min(o - vb - vb + va);
            }
        }
        if self.is_zero() {
            return Ok(if self.is_exact() {
                Self::zero()
            } else {
                Self::zero_to(order)
            });
        }
        let (a, b) = Self::align(self, divisor);
        let val = a.val - b.val;
        let n = (ceil_i64(order * a.denom) - val).max(0) as usize;
        let inv0 = b.coeffs[0].inv()?;
        let bt: Vec<(usize, Cyclotomic)> = b
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c * &inv0))
            .collect();
        let f = field(a.level);
        let mut out: Vec<Cyclotomic> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = Accumulator::new(f.clone());
            if let Some(ak) = a.coeffs.get(k) {
                if !ak.is_zero() {
                    acc.add(&(ak * &inv0));
                }
            }
            for (i, bi) in &bt {
                if *i > k {
                    break;
                }
                let c = &out[k - i];
                if !c.is_zero() {
                    acc.sub_product(bi, c);
                }
            }
            out.push(acc.finish());
        }
        Ok(Self::raw(a.denom, val, out, Some(order), a.level))
    }

    /// Quotient at the natural order.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_exact() && divisor.coeffs.len() == 1 {
            let c = divisor.coeffs[0].inv()?;
            return Ok(self.scale(&c).shift(-divisor.valuation().unwrap()));
        }
        let vb = divisor
            .valuation()
            .ok_or_else(|| non_generic("division by zero series"))?;
        let mut order: Option<Rat> = self.order.map(|o| o - vb);
        if let Some(o) = divisor.order {
            let va = self.valuation_bound().unwrap_or(o);
            order = min_order(order, Some(o - vb - vb + va));
        }
        match order {
            Some(o) => self.div_to(divisor, o),
            None => Err(invalid("quotient of exact series needs an explicit order")),
        }
    }

    /// Integer power; negative powers need an inexact base or an explicit order.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        Ok(base.pow_unsigned(n.unsigned_abs()))
    }

    pub(crate) fn pow_unsigned(&self, mut n: u64) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Substitute `q -> q^r` for a positive rational `r`.
    pub fn substitute_q_power(&self, r: Rat) -> Result<Self> {
        if r <= Rat::zero() {
            return Err(invalid("substitution power must be positive"));
        }
        let p = *r.numer();
        let d = self.denom * r.denom();
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for _ in 1..p {
                    coeffs.push(Cyclotomic::zero_at(self.level));
                }
            }
            coeffs.push(c.clone());
        }
        Ok(Self::raw(
            d,
            self.val * p,
            coeffs,
            self.order.map(|o| o * r),
            self.level,
        ))
    }

    /// Components `F_0, …, F_{n-1}` with `self = Σ q^k F_k(q^n)`.
    pub fn dissect(&self, n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(invalid("dissection needs at least one part"));
        }
        if self.denom != 1 {
            return Err(Error::FractionalExponents);
        }
        let ni = n as i64;
        let mut parts: Vec<Vec<(Rat, Cyclotomic)>> = vec![Vec::new(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.val + i as i64;
            let k = e.rem_euclid(ni);
            parts[k as usize].push((Rat::from_integer((e - k) / ni), c.clone()));
        }
        Ok(parts
            .into_iter()
            .enumerate()
            .map(|(k, terms)| {
                let order = self.order.map(|o| Rat::from_integer(ceil_i64((o - k as i64) / ni)));
                let mut s = Self::from_terms(terms, order);
                if s.level < self.level {
                    s = s.embed(self.level).expect("level multiple");
                }
                s
            })
            .collect())
    }

    /// First exponent below `order` where the series differ.
    pub fn first_difference(&self, other: &Self, order: Rat) -> Result<Option<Mismatch>> {
        for s in [self, other] {
            if let Some(o) = s.order {
                if o < order {
                    return Err(Error::Precision {
                        wanted: alloc::format!("{order}"),
                        reached: alloc::format!("{o}"),
                    });
                }
            }
        }
        let diff = (self - other).truncate(order);
        Ok(diff.valuation().map(|e| Mismatch {
            exponent: e,
            left: self.coeff(e).unwrap(),
            right: other.coeff(e).unwrap(),
        }))
    }

    /// Exponent numerators (over `denom`) with their coefficients, zeros skipped.
    pub fn raw_terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }
}

/// Truncated product of two dense coefficient vectors, skipping zero entries.
fn convolve(a: &[Cyclotomic], b: &[Cyclotomic], n: usize, level: u32) -> Vec<Cyclotomic> {
    let (a, b) = if nonzero_count(a) <= nonzero_count(b) {
        (a, b)
    } else {
        (b, a)
    };
    let nz: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
    let f = field(level);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = Accumulator::new(f.clone());
        for &i in &nz {
            if i > k {
                break;
            }
            let j = k - i;
            if j < b.len() && !b[j].is_zero() {
                acc.add_product(&a[i], &b[j]);
            }
        }
        out.push(acc.finish());
    }
    out
}

fn nonzero_count(v: &[Cyclotomic]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.denom == other.denom && self.val == other.val && self.coeffs == other.coeffs
    }
}

macro_rules! series_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                $body(self, rhs)
            }
        }
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                $body(&self, rhs)
            }
        }
    };
}

series_binop!(Add, add, |a: &QSeries, b: &QSeries| a.add_signed(b, 1));
series_binop!(Sub, sub, |a: &QSeries, b: &QSeries| a.add_signed(b, -1));
series_binop!(Mul, mul, |a: &QSeries, b: &QSeries| a.multiply(b));

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

fn fmt_exp(e: Rat) -> String {
    if e.is_integer() {
        alloc::format!("{}", e.numer())
    } else {
        alloc::format!("({}/{})", e.numer(), e.denom())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match c.to_rational() {
                Some(r) => f.write_str(&crate::exactnum::fmt_rational(&r))?,
                None => write!(f, "{c}")?,
            }
            if !e.is_zero() {
                write!(f, "*q^{}", fmt_exp(e))?;
            }
        }
        if let Some(o) = self.order {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "O(q^{})", fmt_exp(o))?;
        } else if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries::one()
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries::zero()
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
}
