//! Expression trees over series with automatic precision planning.
//!
//! Each node can report a bound on its valuation. Products use those bounds to pick
//! how far each factor must be expanded so that the result is exact below the
//! requested order.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{invalid, non_generic, Error, Result};
use crate::exactnum::{Cyclotomic, Rat};
use crate::qseries::{eta_quotient, Monomial, QSeries};
use crate::theta::{theta_j, theta_valuation};

/// What is known about the valuation of an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValBound {
    /// Identically zero.
    Zero,
    Exact(Rat),
    AtLeast(Rat),
}

impl ValBound {
    fn lower(self) -> Option<Rat> {
        match self {
            ValBound::Zero => None,
            ValBound::Exact(v) | ValBound::AtLeast(v) => Some(v),
        }
    }
}

/// A series-valued node evaluated by custom code.
pub trait Leaf: Send + Sync {
    fn bound(&self) -> Result<ValBound>;
    /// Expansion valid at least below `order`.
    fn eval(&self, order: Rat) -> Result<QSeries>;
    /// The same leaf with `q` replaced by `q^r`.
    fn substitute_q_power(&self, r: Rat) -> Result<Arc<dyn Leaf>> {
        let _ = r;
        Err(invalid("this leaf does not support substitution"))
    }
}

#[derive(Clone)]
pub enum Expr {
    Const(Cyclotomic),
    Mono(Monomial),
    /// A precomputed series; must be known to the requested order.
    Series(QSeries),
    /// `j(z; q^p)`.
    Theta {
        z: Monomial,
        p: Rat,
    },
    /// `Π J_m^{e}` with rational `m`, where `J_m = (q^m; q^m)_∞`.
    Eta(Vec<(Rat, i64)>),
    Sum(Vec<Expr>),
    Product(Vec<(Expr, i64)>),
    Leaf(Arc<dyn Leaf>),
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Mono(m) => write!(f, "{m}"),
            Expr::Series(s) => write!(f, "series({s})"),
            Expr::Theta { z, p } => write!(f, "j({z}; q^{p})"),
            Expr::Eta(fs) => write!(f, "eta{fs:?}"),
            Expr::Sum(ts) => f.debug_tuple("Sum").field(ts).finish(),
            Expr::Product(ts) => f.debug_tuple("Product").field(ts).finish(),
            Expr::Leaf(_) => f.write_str("leaf"),
        }
    }
}

const PROBE_ROUNDS: u32 = 8;

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Const(Cyclotomic::from_integer(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Expr::Const(Cyclotomic::from_ratio(n, d))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Expr::Const(c)
    }

    pub fn mono(m: Monomial) -> Self {
        Expr::Mono(m)
    }

    pub fn series(s: QSeries) -> Self {
        Expr::Series(s)
    }

    pub fn theta(z: Monomial, p: impl Into<Rat>) -> Self {
        Expr::Theta { z, p: p.into() }
    }

    /// `J_m` for an integer `m`.
    pub fn j(m: i64) -> Self {
        Expr::Eta(vec![(Rat::from_integer(m), 1)])
    }

    pub fn eta(factors: &[(i64, i64)]) -> Self {
        Expr::Eta(factors.iter().map(|&(m, e)| (Rat::from_integer(m), e)).collect())
    }

    pub fn eta_rational(factors: Vec<(Rat, i64)>) -> Self {
        Expr::Eta(factors)
    }

    pub fn leaf(l: impl Leaf + 'static) -> Self {
        Expr::Leaf(Arc::new(l))
    }

    pub fn sum(terms: impl IntoIterator<Item = Expr>) -> Self {
        let mut out = Vec::new();
        for t in terms {
            match t {
                Expr::Sum(inner) => out.extend(inner),
                t => out.push(t),
            }
        }
        Expr::Sum(out)
    }

    pub fn product(factors: impl IntoIterator<Item = Expr>) -> Self {
        let mut out = Vec::new();
        for f in factors {
            match f {
                Expr::Product(inner) => out.extend(inner),
                f => out.push((f, 1)),
            }
        }
        Expr::Product(out)
    }

    pub fn pow(self, n: i64) -> Self {
        match self {
            Expr::Product(fs) if n != 0 => Expr::Product(fs.into_iter().map(|(f, e)| (f, e * n)).collect()),
            e => Expr::Product(vec![(e, n)]),
        }
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Expr) -> Self {
        Expr::product([self, other])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Expr) -> Self {
        Expr::product([self, other.inv()])
    }

    pub fn scale(self, c: Cyclotomic) -> Self {
        Expr::product([Expr::Const(c), self])
    }

    pub fn scale_int(self, n: i64) -> Self {
        self.scale(Cyclotomic::from_integer(n))
    }

    pub fn times_mono(self, m: Monomial) -> Self {
        Expr::product([Expr::Mono(m), self])
    }

    /// The same expression with `q` replaced by `q^r`, `r > 0`.
    pub fn substitute_q_power(&self, r: Rat) -> Result<Expr> {
        if r <= Rat::from_integer(0) {
            return Err(invalid("substitution power must be positive"));
        }
        let mono = |m: &Monomial| m.times_q(m.exp() * (r - 1));
        Ok(match self {
            Expr::Const(c) => Expr::Const(c.clone()),
            Expr::Mono(m) => Expr::Mono(mono(m)),
            Expr::Series(s) => Expr::Series(s.substitute_q_power(r)?),
            Expr::Theta { z, p } => Expr::Theta { z: mono(z), p: *p * r },
            Expr::Eta(fs) => Expr::Eta(fs.iter().map(|(m, e)| (*m * r, *e)).collect()),
            Expr::Sum(ts) => Expr::Sum(ts.iter().map(|t| t.substitute_q_power(r)).collect::<Result<Vec<_>>>()?),
            Expr::Product(fs) => Expr::Product(
                fs.iter()
                    .map(|(f, e)| Ok((f.substitute_q_power(r)?, *e)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            Expr::Leaf(l) => Expr::Leaf(l.substitute_q_power(r)?),
        })
    }

    /// Bound on the valuation, probing subexpressions where needed.
    pub fn bound(&self) -> Result<ValBound> {
        Ok(match self {
            Expr::Const(c) => {
                if c.is_zero() {
                    ValBound::Zero
                } else {
                    ValBound::Exact(Rat::from_integer(0))
                }
            }
            Expr::Mono(m) => ValBound::Exact(m.exp()),
            Expr::Series(s) => match (s.valuation(), s.order()) {
                (Some(v), _) => ValBound::Exact(v),
                (None, None) => ValBound::Zero,
                (None, Some(o)) => ValBound::AtLeast(o),
            },
            Expr::Theta { z, p } => match theta_valuation(z, *p) {
                Some(v) => ValBound::Exact(v),
                None => ValBound::Zero,
            },
            Expr::Eta(_) => ValBound::Exact(Rat::from_integer(0)),
            Expr::Sum(ts) => {
                let mut low: Option<Rat> = None;
                for t in ts {
                    if let Some(v) = t.bound()?.lower() {
                        low = Some(low.map_or(v, |l: Rat| l.min(v)));
                    }
                }
                match low {
                    None => ValBound::Zero,
                    Some(v) => ValBound::AtLeast(v),
                }
            }
            Expr::Product(fs) => {
                let mut total = Rat::from_integer(0);
                let mut exact = true;
                for (f, e) in fs {
                    if *e == 0 {
                        continue;
                    }
                    if *e > 0 {
                        match f.bound()? {
                            ValBound::Zero => return Ok(ValBound::Zero),
                            ValBound::Exact(v) => total += v * *e,
                            ValBound::AtLeast(v) => {
                                exact = false;
                                total += v * *e;
                            }
                        }
                    } else {
                        match f.exact_valuation()? {
                            None => return Err(non_generic("reciprocal of an identically zero factor")),
                            Some(v) => total += v * *e,
                        }
                    }
                }
                if exact {
                    ValBound::Exact(total)
                } else {
                    ValBound::AtLeast(total)
                }
            }
            Expr::Leaf(l) => l.bound()?,
        })
    }

    /// The exact valuation, or `None` for an identically zero expression.
    pub fn exact_valuation(&self) -> Result<Option<Rat>> {
        match self.bound()? {
            ValBound::Zero => Ok(None),
            ValBound::Exact(v) => Ok(Some(v)),
            ValBound::AtLeast(v) => {
                let mut step = Rat::from_integer(1);
                for _ in 0..PROBE_ROUNDS {
                    let s = self.eval_inner(v + step)?;
                    if let Some(val) = s.valuation() {
                        return Ok(Some(val));
                    }
                    if s.is_exact() {
                        return Ok(None);
                    }
                    step *= 4;
                }
                Err(non_generic(alloc::format!("divisor vanishes below q^{}", v + step)))
            }
        }
    }

    /// Expansion that is exact below `order`.
    pub fn eval(&self, order: Rat) -> Result<QSeries> {
        let s = self.eval_inner(order)?;
        if let Some(o) = s.order() {
            if o < order {
                return Err(Error::Precision {
                    wanted: alloc::format!("{order}"),
                    reached: alloc::format!("{o}"),
                });
            }
        }
        Ok(s.truncate(order))
    }

    fn eval_inner(&self, order: Rat) -> Result<QSeries> {
        match self {
            Expr::Const(c) => Ok(QSeries::constant(c.clone())),
            Expr::Mono(m) => Ok(QSeries::from_monomial(m)),
            Expr::Series(s) => Ok(s.clone()),
            Expr::Theta { z, p } => Ok(theta_j(z, *p, order)),
            Expr::Eta(fs) => eval_eta(fs, order),
            Expr::Sum(ts) => {
                let mut acc = QSeries::zero();
                for t in ts {
                    acc = &acc + &t.eval_inner(order)?;
                }
                Ok(acc)
            }
            Expr::Product(fs) => eval_product(fs, order),
            Expr::Leaf(l) => l.eval(order),
        }
    }
}

fn eval_eta(fs: &[(Rat, i64)], order: Rat) -> Result<QSeries> {
    let d = fs
        .iter()
        .fold(1i64, |acc, (m, _)| crate::exactnum::ntheory::lcm_i64(acc, *m.denom()));
    let ints: Vec<(u32, i64)> = fs.iter().map(|(m, e)| ((*m * d).to_integer() as u32, *e)).collect();
    let s = eta_quotient(&ints, order * d);
    if d == 1 {
        Ok(s)
    } else {
        s.substitute_q_power(Rat::new(1, d))
    }
}

fn eval_product(fs: &[(Expr, i64)], order: Rat) -> Result<QSeries> {
    let mut vals = Vec::with_capacity(fs.len());
    for (f, e) in fs {
        let v = if *e == 0 {
            Rat::from_integer(0)
        } else if *e > 0 {
            match f.bound()?.lower() {
                None => return Ok(QSeries::zero()),
                Some(v) => v,
            }
        } else {
            match f.exact_valuation()? {
                None => return Err(non_generic("reciprocal of an identically zero factor")),
                Some(v) => v,
            }
        };
        vals.push(v);
    }
    let total: Rat = fs
        .iter()
        .zip(&vals)
        .fold(Rat::from_integer(0), |acc, ((_, e), v)| acc + *v * *e);
    if total >= order {
        return Ok(QSeries::zero_to(order));
    }
    let mut acc = QSeries::one();
    let mut remaining = total;
    for ((f, e), v) in fs.iter().zip(&vals) {
        let e = *e;
        if e == 0 {
            continue;
        }
        let v = *v;
        let need_power = order - (total - v * e);
        let s = if e > 0 {
            let need = need_power - v * (e - 1);
            f.eval_inner(need)?.pow_unsigned(e as u64)
        } else {
            let k = -e;
            let need = need_power + v * (k + 1);
            let g = f.eval_inner(need)?;
            g.invert_to(need - v - v)?.pow_unsigned(k as u64)
        };
        acc = &acc * &s;
        remaining -= v * e;
        if !acc.is_exact() || remaining != Rat::from_integer(0) {
            acc = acc.truncate(order - remaining);
        }
    }
    Ok(acc)
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::sum([self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sum([self, -rhs])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        self.scale_int(-1)
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::product([self, rhs])
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::product([self, rhs.inv()])
    }
}

impl From<QSeries> for Expr {
    fn from(s: QSeries) -> Self {
        Expr::Series(s)
    }
}

impl From<Monomial> for Expr {
    fn from(m: Monomial) -> Self {
        Expr::Mono(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta_j;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn substitution_commutes_with_evaluation() {
        let z = Monomial::zeta(1, 5).times_q(Rat::new(1, 2));
        let e = Expr::theta(z.clone(), 2)
            .div(Expr::eta(&[(1, 2)]))
            .times_mono(Monomial::q(-1));
        let direct = e.eval(r(8)).unwrap().substitute_q_power(r(3)).unwrap();
        let subbed = e.substitute_q_power(r(3)).unwrap().eval(r(24)).unwrap();
        assert_eq!(direct.first_difference(&subbed, r(24)).unwrap(), None);
        let m = crate::appell::appell_expr(&Monomial::zeta(2, 7), r(1), &z).unwrap();
        let direct = m.eval(r(6)).unwrap().substitute_q_power(r(2)).unwrap();
        let subbed = m.substitute_q_power(r(2)).unwrap().eval(r(12)).unwrap();
        assert_eq!(direct.first_difference(&subbed, r(12)).unwrap(), None);
    }

    #[test]
    fn products_vanishing_below_the_order() {
        let den = QSeries::from_integers(40, &[1.into(), 1.into()], None);
        let e = Expr::mono(Monomial::q(50)) * Expr::series(den).inv();
        assert!(e.eval(r(5)).unwrap().is_zero());
        let s = e.eval(r(12)).unwrap();
        assert_eq!(s.coeff(r(10)), Some(Cyclotomic::one()));
        assert_eq!(s.coeff(r(11)), Some(Cyclotomic::from_integer(-1)));
    }

    #[test]
    fn negative_valuation_quotients_reach_the_target() {
        // j(q^{-2}ζ; q) / j(ζ q^3; q) has a nontrivial valuation shift
        let z1 = Monomial::zeta(1, 5).times_q(-2);
        let z2 = Monomial::zeta(2, 5).times_q(3);
        let e = Expr::theta(z1.clone(), 1).div(Expr::theta(z2.clone(), 1));
        let o = r(15);
        let s = e.eval(o).unwrap();
        assert_eq!(s.order(), Some(o));
        let check = &s * &theta_j(&z2, r(1), r(40));
        let direct = theta_j(&z1, r(1), r(40));
        let v2 = theta_valuation(&z2, r(1)).unwrap();
        assert_eq!(check.first_difference(&direct, o + v2).unwrap(), None);
    }

    #[test]
    fn eta_with_fractional_index() {
        let a = Expr::eta_rational(vec![(Rat::new(2, 3), 1)]).eval(r(10)).unwrap();
        let b = eta_j(2, r(30)).substitute_q_power(Rat::new(1, 3)).unwrap();
        assert_eq!(a.first_difference(&b, r(10)).unwrap(), None);
    }

    #[test]
    fn zero_factor_short_circuits() {
        let e = Expr::theta(Monomial::q(1), 1).mul(Expr::j(1).inv());
        assert!(e.eval(r(10)).unwrap().is_zero());
        let bad = Expr::j(1).div(Expr::theta(Monomial::q(2), 1));
        assert!(matches!(bad.eval(r(10)), Err(Error::NonGenericParameter(_))));
    }

    #[test]
    fn cancelling_sum_is_probed_before_division() {
        // (J_1 - 1) has valuation 1, only visible by probing
        let f = Expr::j(1) - Expr::int(1);
        assert_eq!(f.exact_valuation().unwrap(), Some(r(1)));
        let g = Expr::mono(Monomial::q(1)).div(f);
        let s = g.eval(r(5)).unwrap();
        assert_eq!(s.valuation(), Some(r(0)));
        assert_eq!(s.coeff(r(0)).unwrap(), Cyclotomic::from_integer(-1));
    }
}
