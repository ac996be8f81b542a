//! Overpartitions, their rank statistics, rank tables and rank deviations.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::appell::{appell_expr, lambda_expr, o_d_at_minus_one_expr, o_d_direct, o_d_gen, psi_expr};
use crate::error::{invalid, Error, Result};
use crate::exactnum::ntheory::{divisors, ramanujan_sum};
use crate::exactnum::{Cyclotomic, Rat};
use crate::expr::Expr;
use crate::qseries::{eta_quotient, Monomial, QSeries};

/// An overpartition as non-increasing `(value, overlined)` parts; among equal values
/// the overlined copy comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<(u32, bool)>,
}

impl Overpartition {
    pub fn new(mut parts: Vec<(u32, bool)>) -> Result<Self> {
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        for w in parts.windows(2) {
            if w[0].0 == w[1].0 && w[1].1 {
                return Err(invalid("a part value may be overlined at most once"));
            }
        }
        if parts.iter().any(|p| p.0 == 0) {
            return Err(invalid("parts must be positive"));
        }
        Ok(Overpartition { parts })
    }

    pub fn parts(&self) -> &[(u32, bool)] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| p.0 as u64).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.0)
    }

    /// Largest part minus number of parts; 0 for the empty overpartition.
    pub fn rank(&self) -> i64 {
        self.largest() as i64 - self.parts.len() as i64
    }

    /// `⌈ℓ/2⌉ − #π + #π_o − χ`, with `π_o` the odd non-overlined parts and `χ = 1` when
    /// the largest part is odd and carries no overline.
    pub fn m2_rank(&self) -> i64 {
        let Some(&(l, over)) = self.parts.first() else {
            return 0;
        };
        let odd_plain = self.parts.iter().filter(|p| p.0 % 2 == 1 && !p.1).count() as i64;
        let chi = (l % 2 == 1 && !over) as i64;
        (l as i64 + 1) / 2 - self.parts.len() as i64 + odd_plain - chi
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (i, (v, o)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if *o {
                write!(f, "{v}'")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Every overpartition of `n`, each exactly once.
pub fn enumerate_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    walk(n, n, &mut cur, &mut out);
    out
}

fn walk(rest: u32, max: u32, cur: &mut Vec<(u32, bool)>, out: &mut Vec<Overpartition>) {
    if rest == 0 {
        out.push(Overpartition { parts: cur.clone() });
        return;
    }
    for v in (1..=max.min(rest)).rev() {
        let len = cur.len();
        for k in 1..=rest / v {
            for over in [true, false] {
                cur.truncate(len);
                if over {
                    cur.push((v, true));
                    cur.extend(core::iter::repeat_n((v, false), k as usize - 1));
                } else {
                    cur.extend(core::iter::repeat_n((v, false), k as usize));
                }
                walk(rest - k * v, v - 1, cur, out);
            }
        }
        cur.truncate(len);
    }
}

/// `p̄(0), …, p̄(max_n)` from `(-q)_∞/(q)_∞ = J_2/J_1²`.
pub fn pbar(max_n: u32) -> Vec<BigInt> {
    let s = eta_quotient(&[(2, 1), (1, -2)], Rat::from_integer(max_n as i64 + 1));
    (0..=max_n as i64)
        .map(|n| {
            let c = s.coeff(Rat::from_integer(n)).expect("within order");
            c.to_rational().expect("rational").to_integer()
        })
        .collect()
}

/// Which combinatorial statistic realizes `N̄_d` for `d ∈ {1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Rank,
    M2Rank,
}

impl Statistic {
    pub fn for_d(d: u32) -> Option<Self> {
        match d {
            1 => Some(Statistic::Rank),
            2 => Some(Statistic::M2Rank),
            _ => None,
        }
    }

    pub fn eval(self, p: &Overpartition) -> i64 {
        match self {
            Statistic::Rank => p.rank(),
            Statistic::M2Rank => p.m2_rank(),
        }
    }
}

/// `N̄_d(m, n)` for `0 ≤ n ≤ max_n`; row `n` holds `m = -n, …, n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTables {
    d: u32,
    max_n: u32,
    rows: Vec<Vec<BigInt>>,
}

impl RankTables {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn count(&self, m: i64, n: u32) -> BigInt {
        let row = &self.rows[n as usize];
        let i = m + n as i64;
        if i < 0 || i as usize >= row.len() {
            BigInt::zero()
        } else {
            row[i as usize].clone()
        }
    }

    /// `p̄(n) = Σ_m N̄_d(m, n)`.
    pub fn total(&self, n: u32) -> BigInt {
        self.rows[n as usize].iter().sum()
    }

    /// `N̄_d(a, M, n)`.
    pub fn residue_count(&self, a: i64, modulus: i64, n: u32) -> BigInt {
        let r = a.rem_euclid(modulus);
        (-(n as i64)..=n as i64)
            .filter(|m| m.rem_euclid(modulus) == r)
            .map(|m| self.count(m, n))
            .sum()
    }

    /// Nonzero entries as `(m, n, count)`, ordered by `n` then `m`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i as i64 - n as i64, n as u32, c))
        })
    }
}

/// `N̄_d(m, n)` by inverse discrete Fourier transform of `O_d(ζ_K^j; q)` over
/// `K = 2·max_n + 3`, grouping the `j` by the order of `ζ_K^j` into field traces.
pub fn rank_tables(d: u32, max_n: u32) -> Result<RankTables> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let k = 2 * max_n as u64 + 3;
    let order = Rat::from_integer(max_n as i64 + 1);
    let p = pbar(max_n);
    let mut acc: Vec<Vec<BigInt>> = (0..=max_n as usize).map(|n| vec![p[n].clone(); 2 * n + 1]).collect();
    for e in divisors(k).into_iter().filter(|&e| e > 1) {
        let s = o_d_direct(d as i64, &Monomial::zeta(1, e as i64), order)?;
        let sums: Vec<i64> = (0..e as i64).map(|t| ramanujan_sum(e, t)).collect();
        for (n, row) in acc.iter_mut().enumerate() {
            let c = s
                .coeff(Rat::from_integer(n as i64))
                .expect("within order")
                .embed(e as u32)?;
            let (num, den) = (c.numerators(), c.denominator());
            for (i, slot) in row.iter_mut().enumerate() {
                let m = i as i64 - n as i64;
                let mut t = BigInt::zero();
                for (idx, ci) in num.iter().enumerate() {
                    if !ci.is_zero() {
                        t += ci * sums[(idx as i64 - m).rem_euclid(e as i64) as usize];
                    }
                }
                let (q, r) = t.div_rem(den);
                if !r.is_zero() {
                    return Err(invalid("non-integral trace in rank table extraction"));
                }
                *slot += q;
            }
        }
    }
    let kb = BigInt::from(k);
    for row in acc.iter_mut() {
        for slot in row.iter_mut() {
            let (q, r) = slot.div_rem(&kb);
            if !r.is_zero() {
                return Err(invalid("rank table count is not an integer"));
            }
            *slot = q;
        }
    }
    Ok(RankTables { d, max_n, rows: acc })
}

/// `N̄_d(m, n)` by enumerating overpartitions, for `d = 1` (rank) and `d = 2` (M2-rank).
pub fn rank_tables_by_enumeration(d: u32, max_n: u32) -> Result<RankTables> {
    let stat = Statistic::for_d(d).ok_or_else(|| invalid("no combinatorial statistic for this d"))?;
    let rows = (0..=max_n)
        .map(|n| {
            let mut row = vec![BigInt::zero(); 2 * n as usize + 1];
            for p in enumerate_overpartitions(n) {
                let m = stat.eval(&p);
                row[(m + n as i64) as usize] += 1;
            }
            row
        })
        .collect();
    Ok(RankTables { d, max_n, rows })
}

/// The data `(d, a, M)` naming a rank deviation `D̄_d(a, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeviationSpec {
    pub d: i64,
    pub a: i64,
    pub modulus: i64,
}

impl DeviationSpec {
    pub fn new(d: i64, a: i64, modulus: i64) -> Result<Self> {
        if d < 1 || modulus < 2 || a < 0 || a > modulus {
            return Err(Error::UnsupportedCase { d, a, modulus });
        }
        Ok(DeviationSpec { d, a, modulus })
    }

    fn with_a(self, a: i64) -> Self {
        DeviationSpec { a, ..self }
    }
}

/// Generic auxiliary parameters `z'`, `z''` and `z_0` of the closed formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericParams {
    pub z1: Monomial,
    pub z2: Monomial,
    pub z0: Monomial,
}

impl GenericParams {
    /// `ζ_P, ζ_P², ζ_P³` for the first prime `P ∈ {7, 11, 13}` not dividing `2dM`.
    pub fn default_for(spec: &DeviationSpec) -> Self {
        let l = 2 * spec.d * spec.modulus;
        let p = [7, 11, 13].into_iter().find(|p| l % p != 0).unwrap_or(17);
        Self::roots(p)
    }

    /// `ζ_p, ζ_p², ζ_p³`.
    pub fn roots(p: i64) -> Self {
        GenericParams {
            z1: Monomial::zeta(1, p),
            z2: Monomial::zeta(2, p),
            z0: Monomial::zeta(3, p),
        }
    }
}

fn max_n_for(order: Rat) -> u32 {
    let c = order.ceil().to_integer();
    (c - 1).max(0) as u32
}

/// `Σ_n (N̄_d(a, M, n) − p̄(n)/M) q^n` read off a table, truncated at `order`.
pub fn deviation_from_table(t: &RankTables, a: i64, modulus: i64, order: Rat) -> Result<QSeries> {
    let top = max_n_for(order);
    if top > t.max_n() {
        return Err(Error::Precision {
            wanted: order.to_string(),
            reached: (t.max_n() + 1).to_string(),
        });
    }
    let m = BigInt::from(modulus);
    let coeffs: Vec<BigRational> = (0..=top)
        .map(|n| BigRational::from_integer(t.residue_count(a, modulus, n)) - BigRational::new(t.total(n), m.clone()))
        .collect();
    Ok(QSeries::from_rationals(0, &coeffs, Some(order)))
}

/// `D̄_d(a, M)` by definition, from [`rank_tables`].
pub fn deviation_by_definition(spec: DeviationSpec, order: Rat) -> Result<QSeries> {
    let t = rank_tables(spec.d as u32, max_n_for(order))?;
    deviation_from_table(&t, spec.a, spec.modulus, order)
}

/// `D̄_d(a, M) + D̄_d(a−1, M)` by definition.
pub fn deviation_pair_by_definition(spec: DeviationSpec, order: Rat) -> Result<QSeries> {
    let t = rank_tables(spec.d as u32, max_n_for(order))?;
    Ok(deviation_from_table(&t, spec.a, spec.modulus, order)?
        + deviation_from_table(&t, spec.a - 1, spec.modulus, order)?)
}

/// `D̄_d(a, M) = (1/M) Σ_{k=1}^{M−1} O_d(ζ_M^k; q) ζ_M^{−ka}`.
pub fn deviation_by_fourier(spec: DeviationSpec, order: Rat) -> Result<QSeries> {
    let m = spec.modulus;
    let mut total = QSeries::zero_to(order);
    for k in 1..m {
        let z = Monomial::zeta(k, m);
        let o = if 2 * k == m {
            o_d_gen(spec.d, &z, order)?
        } else {
            o_d_direct(spec.d, &z, order)?
        };
        total = total + o.scale(&Cyclotomic::root_of_unity(-k * spec.a, m as u32));
    }
    Ok(total.scale_rational(&BigRational::new(1.into(), m.into())))
}

/// Which closed formula evaluates a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairCase {
    /// `d` odd, `a` and `M` even.
    EvenEven,
    /// `d` odd, `a` even, `M` odd.
    EvenOdd,
    /// `d` odd, `a` and `M` odd.
    OddOdd,
    /// `d` even.
    EvenD,
}

/// The residue and formula that evaluate `D̄_d(a, M) + D̄_d(a−1, M)`, using
/// `a ↦ a mod M` and the reflection `a ↦ M + 1 − a`.
pub fn pair_case(spec: DeviationSpec) -> Result<(i64, PairCase)> {
    let DeviationSpec { d, a, modulus: m } = spec;
    if d < 1 || m < 2 {
        return Err(Error::UnsupportedCase { d, a, modulus: m });
    }
    let mut a = a.rem_euclid(m);
    if d % 2 == 0 {
        if a == 0 {
            a = 1;
        }
        return Ok((a, PairCase::EvenD));
    }
    if a == 0 {
        a = m;
    }
    if a == 1 || (m % 2 == 0 && a % 2 == 1) {
        a = m + 1 - a;
    }
    let case = match (a % 2 == 0, m % 2 == 0) {
        (true, true) => PairCase::EvenEven,
        (true, false) => PairCase::EvenOdd,
        (false, false) => PairCase::OddOdd,
        (false, true) => return Err(Error::UnsupportedCase { d, a, modulus: m }),
    };
    Ok((a, case))
}

fn q(e: impl Into<Rat>) -> Monomial {
    Monomial::q(e)
}

fn sign(e: i64) -> Monomial {
    Monomial::minus_one().pow(e.rem_euclid(2))
}

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn c_int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

/// `(2/M) Σ_{j=1}^{M−1} ζ_M^{−aj} (1−ζ_M^j) Λ(d, ζ_M^j, z_0, −1)`.
fn lambda_tail(d: i64, a: i64, m: i64, z0: &Monomial) -> Result<Expr> {
    let mut terms = Vec::new();
    for j in 1..m {
        let c =
            Cyclotomic::root_of_unity(-a * j, m as u32) * (Cyclotomic::one() - Cyclotomic::root_of_unity(j, m as u32));
        terms.push(lambda_expr(d, &Monomial::zeta(j, m), z0, &Monomial::minus_one())?.scale(c));
    }
    Ok(Expr::sum(terms).scale(Cyclotomic::from_ratio(2, m)))
}

/// `c · q^e · m(x, q^p, z)` as an expression.
fn appell_term(c: Monomial, x: Monomial, p: Rat, z: &Monomial) -> Result<Expr> {
    Ok(appell_expr(&x, p, z)?.times_mono(c))
}

/// The closed formula for `D̄_d(a, M) + D̄_d(a−1, M)` as an unevaluated expression.
/// The residue must already be one handled by `case` (see [`pair_case`]).
pub fn pair_formula_expr(spec: DeviationSpec, case: PairCase, params: &GenericParams) -> Result<Expr> {
    let DeviationSpec { d, a, modulus: m } = spec;
    let GenericParams { z1, z2, z0 } = params;
    let d2 = d * d;
    let neg1 = Monomial::minus_one();
    let two = Monomial::constant(BigRational::from_integer(2.into()))?;
    let mut terms = Vec::new();
    match case {
        PairCase::EvenEven => {
            if a == m {
                terms.push(Expr::int(1));
            }
            let h = m / 2;
            terms.push(appell_term(
                &two * &sign(a / 2).times_q(Rat::new(-d2 * a * a, 4)),
                sign(h + 1).times_q(Rat::new(d2 * (m * m - 2 * a * m), 4)),
                Rat::new(d2 * m * m, 2),
                z1,
            )?);
            terms.push(
                psi_expr(a / 2 - 1, h, &q(-d2), &neg1, z1, r(2 * d2))?
                    .times_mono(q(-d2))
                    .scale_int(-2),
            );
            terms.push(lambda_tail(d, a, m, z0)?);
        }
        PairCase::EvenOdd => {
            let base = r(2 * d2 * m * m);
            let u = (2 * m - a) / 2;
            let v = (m + 1 - a) / 2;
            terms.push(appell_term(
                &two * &sign(a / 2).times_q(-d2 * u * u),
                q(d2 * m * (a - m)),
                base,
                z1,
            )?);
            terms.push(appell_term(
                &two * &sign(v).times_q(-d2 * v * v),
                q(d2 * m * (a - 1)),
                base,
                z2,
            )?);
            terms.push(psi_expr(u, m, &q(d2), &neg1, z1, r(2 * d2))?.scale_int(-2));
            terms.push(psi_expr(v, m, &q(d2), &neg1, z2, r(2 * d2))?.scale_int(2));
            terms.push(lambda_tail(d, a, m, z0)?);
        }
        PairCase::OddOdd => {
            if a == m {
                terms.push(Expr::int(1));
            }
            let base = r(2 * d2 * m * m);
            let u = (m - a) / 2;
            let v = (2 * m - a + 1) / 2;
            terms.push(appell_term(
                -(&two * &sign(u).times_q(-d2 * u * u)),
                q(d2 * m * a),
                base,
                z1,
            )?);
            terms.push(appell_term(
                &two * &sign((a + 1) / 2).times_q(-d2 * v * v),
                q(d2 * m * (a - m - 1)),
                base,
                z2,
            )?);
            terms.push(psi_expr(u, m, &q(d2), &neg1, z1, r(2 * d2))?.scale_int(-2));
            terms.push(psi_expr(v, m, &q(d2), &neg1, z2, r(2 * d2))?.scale_int(2));
            terms.push(lambda_tail(d, a, m, z0)?);
        }
        PairCase::EvenD => {
            if a == 1 {
                terms.push(Expr::int(1));
            }
            let h = d / 2;
            let x_sign = sign(1 + d * m / 2);
            let base = Rat::new(d2 * m * m, 2);
            terms.push(appell_term(
                &two * &sign(d * a / 2).times_q(Rat::new(-d2 * a * a, 4)),
                x_sign.times_q(Rat::new(d2 * (m * m - 2 * m * a), 4)),
                base,
                z1,
            )?);
            terms.push(appell_term(
                &two * &sign(h * (a - 1) + 1).times_q(Rat::new(-d2 * (a - 1) * (a - 1), 4)),
                x_sign.times_q(Rat::new(d2 * (m * m - 2 * m * (a - 1)), 4)),
                base,
                z2,
            )?);
            let px = sign(h + 1).times_q(Rat::new(d2, 4));
            let pb = Rat::new(d2, 2);
            terms.push(psi_expr(a, m, &px, &neg1, z1, pb)?.scale_int(2));
            terms.push(psi_expr(a - 1, m, &px, &neg1, z2, pb)?.scale_int(-2));
            let mut tail = Vec::new();
            for j in 1..m {
                let c = Cyclotomic::root_of_unity(j - a * j, m as u32)
                    * (Cyclotomic::one() - Cyclotomic::root_of_unity(j, m as u32));
                let x = Monomial::zeta(2 * j, m * d).times_q(1 - d);
                tail.push(psi_expr(0, h, &x, &q(1), &neg1, r(2))?.scale(c));
            }
            terms.push(
                Expr::sum(tail)
                    .times_mono(sign(h).times_q(Rat::new(-d2, 4)))
                    .scale(Cyclotomic::from_ratio(2, m)),
            );
        }
    }
    Ok(Expr::sum(terms))
}

/// `D̄_d(a, M) + D̄_d(a−1, M)` through the Appell-Lerch closed formulas, reaching
/// every residue through `a ↦ a mod M` and the reflection `a ↦ M + 1 − a`.
pub fn deviation_pair_by_formula(spec: DeviationSpec, params: &GenericParams, order: Rat) -> Result<QSeries> {
    let (a, case) = pair_case(spec)?;
    pair_formula_expr(spec.with_a(a), case, params)?.eval(order)
}

/// A single `D̄_d(a, M)`: telescoping pair formulas for odd `M`, the split Fourier
/// sum through Appell-Lerch series for even `M`.
pub fn single_deviation(spec: DeviationSpec, params: &GenericParams, order: Rat) -> Result<QSeries> {
    let m = spec.modulus;
    if m % 2 == 1 {
        let h = (m + 1) / 2;
        let mut a = spec.a.rem_euclid(m);
        if a < h {
            a = m - a;
        }
        let n = a - h;
        let big_d = |n: i64| -> Result<QSeries> {
            let mut s = QSeries::zero_to(order);
            for i in 0..=n {
                s = s + deviation_pair_by_formula(spec.with_a(h - n + 2 * i), params, order)?;
            }
            Ok(s)
        };
        let hi = big_d(n)?;
        let lo = if n == 0 { QSeries::zero_to(order) } else { big_d(n - 1)? };
        return Ok((hi - lo).scale_rational(&BigRational::new(1.into(), 2.into())));
    }
    single_even_expr(spec, params)?.eval(order)
}

fn single_even_expr(spec: DeviationSpec, params: &GenericParams) -> Result<Expr> {
    let DeviationSpec { d, a: n, modulus: m } = spec;
    let GenericParams { z1, z0, .. } = params;
    let d2 = d * d;
    let mut terms = vec![o_d_at_minus_one_expr(d)?.scale(c_int(if n % 2 == 0 { 1 } else { -1 }))];
    for k in 1..m / 2 {
        let zk = Cyclotomic::root_of_unity(k, m as u32);
        let one = Cyclotomic::one();
        let factor = (&one - &zk).checked_div(&(&one + &zk))?
            * (Cyclotomic::root_of_unity(-k * n, m as u32) + Cyclotomic::root_of_unity(k * n, m as u32));
        let zeta = Monomial::zeta(k, m);
        let inner = if d % 2 == 1 {
            Expr::int(1) - appell_expr(&Monomial::zeta(-2 * k, m).times_q(d2), r(2 * d2), z1)?.scale_int(2)
                + lambda_expr(d, &zeta, z0, z1)?.scale_int(2)
        } else {
            let h = d / 2;
            let x = (&sign(h + 1) * &zeta).times_q(Rat::new(d2, 4));
            let px = Monomial::zeta(2 * k, m * d).times_q(1 - d);
            Expr::int(-1)
                + appell_expr(&x, Rat::new(d2, 2), z1)?.scale_int(2)
                + psi_expr(0, h, &px, &q(1), z1, r(2))?
                    .times_mono((&sign(h) * &zeta).times_q(Rat::new(-d2, 4)))
                    .scale_int(2)
        };
        terms.push(inner.scale(factor));
    }
    Ok(Expr::sum(terms).scale(Cyclotomic::from_ratio(1, m)))
}

/// Largest `|m|` with a nonzero `N̄_d(m, n)` in row `n`.
pub fn row_width(t: &RankTables, n: u32) -> i64 {
    t.rows[n as usize]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| (i as i64 - n as i64).abs())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_overpartitions(0).len(), 1);
        assert_eq!(enumerate_overpartitions(2).len(), 4);
        assert_eq!(enumerate_overpartitions(4).len(), 14);
        let p = pbar(10);
        for n in 0..=10 {
            assert_eq!(BigInt::from(enumerate_overpartitions(n).len()), p[n as usize]);
        }
    }

    #[test]
    fn statistics() {
        let p = Overpartition::new(vec![(3, false), (1, false)]).unwrap();
        assert_eq!(p.rank(), 1);
        let p = Overpartition::new(vec![(1, true), (1, false), (1, false), (1, false)]).unwrap();
        assert_eq!(p.rank(), -3);
        assert_eq!(Overpartition::new(vec![(3, false)]).unwrap().m2_rank(), 1);
        assert_eq!(Overpartition::new(vec![(3, true)]).unwrap().m2_rank(), 1);
        assert!(Overpartition::new(vec![(2, true), (2, true)]).is_err());
    }

    #[test]
    fn pair_cases() {
        let s = |d, a, m| pair_case(DeviationSpec { d, a, modulus: m }).unwrap();
        assert_eq!(s(1, 1, 3), (3, PairCase::OddOdd));
        assert_eq!(s(1, 3, 4), (2, PairCase::EvenEven));
        assert_eq!(s(1, 0, 4), (4, PairCase::EvenEven));
        assert_eq!(s(2, 0, 3), (1, PairCase::EvenD));
        assert_eq!(s(3, 2, 5), (2, PairCase::EvenOdd));
    }
}
