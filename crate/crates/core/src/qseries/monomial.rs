use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Mul, Neg};
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactnum::{fmt_rational, Cyclotomic, Rat};

/// A parameter value `s · ζ^r · q^e` with `s` a positive rational, `r` in `[0, 1)` and
/// `e` rational.
///
/// Signs live in the root part (`-1 = ζ^{1/2}`), so fractional powers always use the
/// stored root as the branch.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    scale: BigRational,
    root: Rat,
    exp: Rat,
}

fn frac(r: Rat) -> Rat {
    r - r.floor()
}

impl Monomial {
    pub fn new(scale: BigRational, root: Rat, exp: Rat) -> Result<Self> {
        if scale.is_zero() {
            return Err(invalid("monomial coefficient must be nonzero"));
        }
        let (scale, root) = if scale.is_negative() {
            (-scale, root + Rat::new(1, 2))
        } else {
            (scale, root)
        };
        Ok(Monomial {
            scale,
            root: frac(root),
            exp,
        })
    }

    /// `q^e`.
    pub fn q(e: impl Into<Rat>) -> Self {
        Monomial {
            scale: BigRational::one(),
            root: Rat::zero(),
            exp: e.into(),
        }
    }

    /// `ζ_den^num`.
    pub fn zeta(num: i64, den: i64) -> Self {
        Monomial {
            scale: BigRational::one(),
            root: frac(Rat::new(num, den)),
            exp: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        Self::q(0)
    }

    pub fn minus_one() -> Self {
        Self::zeta(1, 2)
    }

    pub fn constant(r: BigRational) -> Result<Self> {
        Self::new(r, Rat::zero(), Rat::zero())
    }

    /// Multiply by `q^e`.
    pub fn times_q(&self, e: impl Into<Rat>) -> Self {
        Monomial {
            exp: self.exp + e.into(),
            ..self.clone()
        }
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn root(&self) -> Rat {
        self.root
    }

    pub fn exp(&self) -> Rat {
        self.exp
    }

    /// True when the constant part is exactly 1.
    pub fn is_pure_power(&self) -> bool {
        self.scale.is_one() && self.root.is_zero()
    }

    /// Whether this equals `base^n` for some integer `n`, `base = q^p`.
    pub fn is_integral_power_of(&self, p: Rat) -> bool {
        self.is_pure_power() && (self.exp / p).is_integer()
    }

    /// Smallest level L with the constant part in Q(ζ_L).
    pub fn level(&self) -> u32 {
        let b = *self.root.denom() as u32;
        if b % 4 == 2 {
            b / 2
        } else {
            b
        }
    }

    /// The constant part as a field element at its minimal level.
    pub fn coeff(&self) -> Cyclotomic {
        let a = *self.root.numer();
        let b = *self.root.denom();
        let root = if b % 4 == 2 {
            let m = b / 2;
            let z = Cyclotomic::root_of_unity(a * (m + 1) / 2, m as u32);
            if a % 2 == 0 {
                z
            } else {
                -z
            }
        } else {
            Cyclotomic::root_of_unity(a, b as u32)
        };
        if self.scale.is_one() {
            root
        } else {
            root.scale(&self.scale)
        }
    }

    pub fn inv(&self) -> Self {
        Monomial {
            scale: self.scale.recip(),
            root: frac(-self.root),
            exp: -self.exp,
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let scale = if n >= 0 {
            num_traits::pow(self.scale.clone(), n as usize)
        } else {
            num_traits::pow(self.scale.recip(), n.unsigned_abs() as usize)
        };
        Monomial {
            scale,
            root: frac(self.root * n),
            exp: self.exp * n,
        }
    }

    /// The power `self^(num/den)` on the canonical branch.
    pub fn root_pow(&self, num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(invalid("root index must be positive"));
        }
        let r = Rat::new(num, den);
        if !self.scale.is_one() {
            let n = self.scale.numer();
            let d = self.scale.denom();
            let (rn, rd) = (n.nth_root(den as u32), d.nth_root(den as u32));
            if num_traits::pow(rn.clone(), den as usize) != *n || num_traits::pow(rd.clone(), den as usize) != *d {
                return Err(invalid("fractional power of a non-power rational scale"));
            }
            let base = BigRational::new(rn, rd);
            let scale = if num >= 0 {
                num_traits::pow(base, num as usize)
            } else {
                num_traits::pow(base.recip(), num.unsigned_abs() as usize)
            };
            return Ok(Monomial {
                scale,
                root: frac(self.root * r),
                exp: self.exp * r,
            });
        }
        Ok(Monomial {
            scale: BigRational::one(),
            root: frac(self.root * r),
            exp: self.exp * r,
        })
    }
}

impl Mul<&Monomial> for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial {
            scale: &self.scale * &rhs.scale,
            root: frac(self.root + rhs.root),
            exp: self.exp + rhs.exp,
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl Neg for &Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial {
            scale: self.scale.clone(),
            root: frac(self.root + Rat::new(1, 2)),
            exp: self.exp,
        }
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        -&self
    }
}

fn fmt_rat(r: Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("({}/{})", r.numer(), r.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        let mut sign = "";
        let mut root = self.root;
        if root >= Rat::new(1, 2) && (root * 2).is_integer() {
            sign = "-";
            root = Rat::zero();
        }
        if !self.scale.is_one() {
            parts.push(fmt_rational(&self.scale));
        }
        if !root.is_zero() {
            parts.push(alloc::format!("zeta{}^{}", root.denom(), root.numer()));
        }
        if !self.exp.is_zero() {
            parts.push(alloc::format!("q^{}", fmt_rat(self.exp)));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{sign}{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || invalid(alloc::format!("bad rational `{s}`"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Parses a rational written `p`, `p/q` or `(p/q)`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    parse_rat(s)
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts products such as `zeta7^3`, `-zeta5*q^2`, `2*q^(1/2)`, `-1`, `q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut m = Monomial::one();
        for tok in body.split('*') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(invalid(alloc::format!("bad monomial `{s}`")));
            }
            if let Some(rest) = tok.strip_prefix("zeta") {
                let (ord, pow) = match rest.split_once('^') {
                    Some((o, p)) => (
                        o,
                        p.trim()
                            .parse::<i64>()
                            .map_err(|_| invalid(alloc::format!("bad root power in `{tok}`")))?,
                    ),
                    None => (rest, 1),
                };
                let ord: i64 = ord
                    .trim()
                    .parse()
                    .map_err(|_| invalid(alloc::format!("bad root order in `{tok}`")))?;
                if ord <= 0 {
                    return Err(invalid("root order must be positive"));
                }
                m = &m * &Monomial::zeta(pow, ord);
            } else if let Some(rest) = tok.strip_prefix('q') {
                let e = match rest.strip_prefix('^') {
                    Some(e) => parse_rat(e)?,
                    None if rest.is_empty() => Rat::one(),
                    None => return Err(invalid(alloc::format!("bad q power `{tok}`"))),
                };
                m = m.times_q(e);
            } else {
                let r = parse_rat(tok)?;
                let c = Monomial::constant(BigRational::new((*r.numer()).into(), (*r.denom()).into()))?;
                m = &m * &c;
            }
        }
        Ok(if neg { -m } else { m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_live_in_the_root() {
        let m = Monomial::minus_one();
        assert_eq!(m.coeff(), Cyclotomic::from_integer(-1));
        assert_eq!(m.level(), 1);
        let z6 = Monomial::zeta(1, 6);
        assert_eq!(z6.level(), 3);
        assert_eq!(z6.coeff(), Cyclotomic::root_of_unity(1, 6));
        assert_eq!((-Monomial::zeta(1, 3)).coeff(), -Cyclotomic::root_of_unity(1, 3));
    }

    #[test]
    fn canonical_coefficient_agrees_with_literal_root() {
        for b in 1..=30i64 {
            for a in 0..b {
                let m = Monomial::zeta(a, b);
                assert_eq!(m.coeff(), Cyclotomic::root_of_unity(a, b as u32), "{a}/{b}");
            }
        }
    }

    #[test]
    fn root_branch() {
        let z = Monomial::zeta(1, 4).times_q(3);
        let w = z.root_pow(1, 3).unwrap();
        assert_eq!(w, Monomial::zeta(1, 12).times_q(1));
        assert_eq!(w.pow(3), z);
        let m = Monomial::minus_one().root_pow(1, 3).unwrap();
        assert_eq!(m.coeff(), Cyclotomic::root_of_unity(1, 6));
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["zeta7^3", "-zeta5^2*q^2", "2*q^(1/2)", "-1", "q", "1", "-q^(-3/2)"] {
            let m: Monomial = s.parse().unwrap();
            let back: Monomial = m.to_string().parse().unwrap();
            assert_eq!(m, back, "{s}");
        }
        let m: Monomial = "zeta6^3*q^2".parse().unwrap();
        assert_eq!(m, -Monomial::q(2));
    }

    #[test]
    fn integral_powers() {
        assert!(Monomial::q(4).is_integral_power_of(Rat::from_integer(2)));
        assert!(!Monomial::q(3).is_integral_power_of(Rat::from_integer(2)));
        assert!(!(-Monomial::q(2)).is_integral_power_of(Rat::from_integer(2)));
        assert!(Monomial::one().is_integral_power_of(Rat::from_integer(5)));
    }
}
