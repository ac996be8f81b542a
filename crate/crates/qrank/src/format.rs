//! Text forms of exact values and the JSON form of a series.
//!
//! Rationals are written `p/q` (or `p`), cyclotomic numbers `[c0,c1,...]@zeta<L>` in the
//! power basis of `Q(ζ_L)`. A series document carries the header `(D, order, L)` and a list
//! of `[exponent numerator, coefficient vector]` pairs, exponents being `numerator / D`.

use qrank_core::exactnum::{fmt_rational, BigInt};
use qrank_core::qseries::parse_rational;
use qrank_core::{BigRational, Cyclotomic, QSeries, Rat};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn rat(r: Rat) -> String {
    r.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    Ok(parse_rational(s)?)
}

pub fn cyclotomic(c: &Cyclotomic) -> String {
    c.to_string()
}

/// A coefficient as an exact rational when it is one, else in cyclotomic form.
pub fn coefficient(c: &Cyclotomic) -> String {
    match c.to_rational() {
        Some(r) => fmt_rational(&r),
        None => c.to_string(),
    }
}

fn parse_big_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("bad rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses `[c0,c1,...]@zeta<L>` or a plain rational.
pub fn parse_cyclotomic(s: &str) -> Result<Cyclotomic> {
    let s = s.trim();
    let Some(body) = s.strip_prefix('[') else {
        return Ok(Cyclotomic::from_rational(&parse_big_rational(s)?));
    };
    let (list, level) = body
        .split_once("]@zeta")
        .ok_or_else(|| Error::Format(format!("bad cyclotomic `{s}`")))?;
    let level: u32 = level
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad level in `{s}`")))?;
    let coeffs = coefficient_list(list)?;
    from_coeffs(level, &coeffs)
}

fn coefficient_list(list: &str) -> Result<Vec<BigRational>> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',').map(parse_big_rational).collect()
}

fn from_coeffs(level: u32, coeffs: &[BigRational]) -> Result<Cyclotomic> {
    if level == 0 {
        return Err(Error::Format("level must be positive".into()));
    }
    let phi = Cyclotomic::zero_at(level).coeffs().len();
    if coeffs.len() > phi {
        return Err(Error::Format(format!(
            "{} coefficients exceed the degree {phi} of zeta{level}",
            coeffs.len()
        )));
    }
    Ok(Cyclotomic::from_coeffs(level, coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    /// Puiseux denominator `D`.
    pub denom: i64,
    /// Truncation order, absent for exact series.
    pub order: Option<String>,
    /// Cyclotomic order `L` of every coefficient.
    pub level: u32,
    /// `[n, [c0, c1, ...]]` for the term `(c0 + c1 ζ_L + ...) q^{n/D}`.
    pub terms: Vec<(i64, Vec<String>)>,
}

impl SeriesDoc {
    pub fn from_series(s: &QSeries) -> Result<Self> {
        let level = s.level();
        let terms = s
            .raw_terms()
            .map(|(n, c)| {
                let c = c.embed(level)?;
                Ok((n, c.coeffs().iter().map(fmt_rational).collect()))
            })
            .collect::<Result<_>>()?;
        Ok(SeriesDoc {
            denom: s.denom(),
            order: s.order().map(rat),
            level,
            terms,
        })
    }

    pub fn to_series(&self) -> Result<QSeries> {
        if self.denom <= 0 {
            return Err(Error::Format("denominator must be positive".into()));
        }
        let order = self.order.as_deref().map(parse_rat).transpose()?;
        let terms = self
            .terms
            .iter()
            .map(|(n, c)| {
                let coeffs = c.iter().map(|x| parse_big_rational(x)).collect::<Result<Vec<_>>>()?;
                Ok((Rat::new(*n, self.denom), from_coeffs(self.level, &coeffs)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::from_terms(terms, order))
    }
}

pub fn series_to_json(s: &QSeries) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SeriesDoc::from_series(s)?)?)
}

pub fn series_from_json(text: &str) -> Result<QSeries> {
    serde_json::from_str::<SeriesDoc>(text)?.to_series()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qrank_core::Monomial;

    #[test]
    fn cyclotomic_text_roundtrips() {
        for c in [
            Cyclotomic::root_of_unity(2, 7),
            Cyclotomic::from_ratio(-3, 4),
            Cyclotomic::root_of_unity(1, 12) + Cyclotomic::from_ratio(1, 2),
        ] {
            assert_eq!(parse_cyclotomic(&cyclotomic(&c)).unwrap(), c);
        }
        assert_eq!(parse_cyclotomic("5/2").unwrap(), Cyclotomic::from_ratio(5, 2));
        assert!(parse_cyclotomic("[1,2,3]@zeta3").is_err());
        assert!(parse_cyclotomic("[1@zeta3").is_err());
    }

    #[test]
    fn series_json_roundtrips() {
        let s = qrank_core::appell::appell_m(
            &Monomial::zeta(1, 5).times_q(Rat::new(1, 2)),
            Rat::from_integer(1),
            &Monomial::zeta(1, 3),
            Rat::from_integer(6),
        )
        .unwrap();
        let text = series_to_json(&s).unwrap();
        let back = series_from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.order(), s.order());
        let doc: SeriesDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.denom, 2);
        assert_eq!(doc.level, 15);
        assert!(doc.terms.iter().all(|(_, c)| c.len() == 8));
    }
}
