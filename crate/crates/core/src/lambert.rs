//! Bilateral (or one-sided) sums of monomials over products of geometric divisors.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{non_generic, Result};
use crate::exactnum::Rat;
use crate::expr::{Leaf, ValBound};
use crate::qseries::{convex_window, geometric, Monomial, QSeries};

/// One divisor `(1 - w q^{s r})^power` of a [`LambertSum`] term.
#[derive(Clone, Debug)]
pub struct Divisor {
    pub w: Monomial,
    pub s: Rat,
    pub power: u32,
}

/// `Σ_r lead · ratio^r · q^{quad·r²} / Π_i (1 - w_i q^{s_i r})^{power_i}` over all
/// integers `r`, or over `r >= lower`.
///
/// Each divisor is expanded with [`geometric`], so the exponent of a term's lowest
/// coefficient is a convex function of `r`; that fixes the summation window.
#[derive(Clone, Debug)]
pub struct LambertSum {
    pub lead: Monomial,
    pub ratio: Monomial,
    pub quad: Rat,
    pub divisors: Vec<Divisor>,
    pub lower: Option<i64>,
}

fn zero() -> Rat {
    Rat::from_integer(0)
}

impl LambertSum {
    fn numerator(&self, r: i64) -> Monomial {
        (&self.lead * &self.ratio.pow(r)).times_q(self.quad * (r * r))
    }

    fn divisor_value(d: &Divisor, r: i64) -> Monomial {
        d.w.times_q(d.s * r)
    }

    fn geometric_valuation(u: &Monomial) -> Rat {
        (-u.exp()).max(zero())
    }

    fn term_valuation(&self, r: i64) -> Rat {
        let mut v = self.numerator(r).exp();
        for d in &self.divisors {
            v += Self::geometric_valuation(&Self::divisor_value(d, r)) * d.power as i64;
        }
        v
    }

    fn start(&self) -> i64 {
        let b = self.ratio.exp();
        let s = if self.quad > zero() {
            (-b / (self.quad * 2)).round().to_integer()
        } else {
            0
        };
        match self.lower {
            Some(l) => s.max(l),
            None => s,
        }
    }

    /// Rejects parameter values for which some divisor vanishes.
    pub fn check_poles(&self) -> Result<()> {
        for d in &self.divisors {
            if !d.w.is_pure_power() {
                continue;
            }
            let e = d.w.exp();
            let hit = if d.s.is_zero() {
                e.is_zero()
            } else {
                let r = -e / d.s;
                r.is_integer() && self.lower.is_none_or(|l| r.to_integer() >= l)
            };
            if hit {
                return Err(non_generic(alloc::format!(
                    "pole: divisor 1 - ({})q^({}r) vanishes",
                    d.w,
                    d.s
                )));
            }
        }
        Ok(())
    }

    fn term(&self, r: i64, order: Rat) -> Result<QSeries> {
        let num = self.numerator(r);
        let us: Vec<Monomial> = self.divisors.iter().map(|d| Self::divisor_value(d, r)).collect();
        let vals: Vec<Rat> = us.iter().map(Self::geometric_valuation).collect();
        let total: Rat = self
            .divisors
            .iter()
            .zip(&vals)
            .fold(zero(), |acc, (d, v)| acc + *v * d.power as i64);
        let mut acc = QSeries::from_monomial(&num);
        for ((d, u), v) in self.divisors.iter().zip(&us).zip(&vals) {
            let need = order - num.exp() - total + *v;
            let g = geometric(u, need)?;
            acc = &acc * &g.pow_unsigned(d.power as u64);
        }
        Ok(acc.truncate(order))
    }
}

impl Leaf for LambertSum {
    fn bound(&self) -> Result<ValBound> {
        self.check_poles()?;
        let f = |r: i64| self.term_valuation(r);
        let mut n = self.start();
        let lo = self.lower.unwrap_or(i64::MIN);
        while n > lo && f(n - 1) < f(n) {
            n -= 1;
        }
        while f(n + 1) < f(n) {
            n += 1;
        }
        Ok(ValBound::AtLeast(f(n)))
    }

    fn substitute_q_power(&self, r: Rat) -> Result<Arc<dyn Leaf>> {
        let mono = |m: &Monomial| m.times_q(m.exp() * (r - 1));
        Ok(Arc::new(LambertSum {
            lead: mono(&self.lead),
            ratio: mono(&self.ratio),
            quad: self.quad * r,
            divisors: self
                .divisors
                .iter()
                .map(|d| Divisor {
                    w: mono(&d.w),
                    s: d.s * r,
                    power: d.power,
                })
                .collect(),
            lower: self.lower,
        }))
    }

    fn eval(&self, order: Rat) -> Result<QSeries> {
        self.check_poles()?;
        let window = convex_window(|r| self.term_valuation(r), self.start(), self.lower, order)?;
        let mut acc = QSeries::zero_to(order);
        if let Some((lo, hi)) = window {
            for r in lo..=hi {
                acc = &acc + &self.term(r, order)?;
            }
        }
        Ok(acc)
    }
}
