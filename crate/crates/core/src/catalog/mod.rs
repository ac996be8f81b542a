//! The identity catalog: every checked identity with its sampled instantiations.
//!
//! Each [`Entry`] produces a list of [`Check`]s. A check evaluates one or more pairs of
//! independently computed sides to a requested order; the pairs are compared
//! coefficient by coefficient and folded into one [`IdentityReport`].

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Result;
use crate::exactnum::ntheory::lcm;
use crate::exactnum::Rat;
use crate::qseries::{Monomial, QSeries};
use crate::report::{self, IdentityReport, Verdict};

mod appell_ids;
mod combinatorics;
mod deviations;
mod dissections;
pub mod named;
mod theta_ids;

/// Two independently computed sides of one comparison.
pub type Sides = (Result<QSeries>, Result<QSeries>);

/// A comparison, optionally at its own order and with a note for the report.
pub struct Comparison {
    pub lhs: Result<QSeries>,
    pub rhs: Result<QSeries>,
    pub order: Option<Rat>,
    pub note: Option<String>,
}

impl Comparison {
    /// Compare below `order` instead of the check order.
    pub fn at(lhs: Result<QSeries>, rhs: Result<QSeries>, order: Rat) -> Self {
        Comparison {
            lhs,
            rhs,
            order: Some(order),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl From<Sides> for Comparison {
    fn from((lhs, rhs): Sides) -> Self {
        Comparison {
            lhs,
            rhs,
            order: None,
            note: None,
        }
    }
}

type Runner = Box<dyn Fn(Rat) -> Vec<Comparison> + Send + Sync>;

/// One instantiation of an entry.
pub struct Check {
    pub instantiation: Vec<(String, String)>,
    /// Cyclotomic order that every coefficient must live in.
    pub level: u32,
    /// Puiseux denominator that every exponent must respect.
    pub denom: i64,
    run: Runner,
}

impl Check {
    pub fn new<T: Into<Comparison>>(
        instantiation: Vec<(String, String)>,
        level: u32,
        denom: i64,
        run: impl Fn(Rat) -> Vec<T> + Send + Sync + 'static,
    ) -> Self {
        Check {
            instantiation,
            level,
            denom,
            run: Box::new(move |o| run(o).into_iter().map(Into::into).collect()),
        }
    }

    /// Evaluates every pair of sides below `order` and folds the comparisons.
    pub fn run(&self, id: &str, order: Rat) -> IdentityReport {
        let mut out = IdentityReport::new(id, self.instantiation.clone(), order);
        for Comparison {
            lhs,
            rhs,
            order: own,
            note,
        } in (self.run)(order)
        {
            let at = own.unwrap_or(order);
            let shape = match (&lhs, &rhs) {
                (Ok(l), Ok(r)) => self.shape_note(l).or_else(|| self.shape_note(r)),
                _ => None,
            };
            let mut rep = report::compare(id, self.instantiation.clone(), lhs, rhs, at);
            rep.notes.extend(note);
            if let Some(n) = shape {
                rep.verdict = Verdict::Fail;
                rep.notes.push(n);
            }
            out = out.merge(rep);
        }
        out
    }

    fn shape_note(&self, s: &QSeries) -> Option<String> {
        if s.is_zero() {
            return None;
        }
        if !normalized(self.level).is_multiple_of(normalized(s.level())) {
            return Some(alloc::format!(
                "coefficients need level {} but the entry declares {}",
                s.level(),
                self.level
            ));
        }
        if self.denom % s.denom() != 0 {
            return Some(alloc::format!(
                "exponents need denominator {} but the entry declares {}",
                s.denom(),
                self.denom
            ));
        }
        None
    }
}

fn normalized(l: u32) -> u32 {
    if l % 4 == 2 {
        l / 2
    } else {
        l
    }
}

/// A catalog entry.
pub struct Entry {
    pub id: &'static str,
    pub family: &'static str,
    /// The identity in plain formula text.
    pub anchor: &'static str,
    /// The sampled parameter domain.
    pub parameters: &'static str,
    pub default_order: i64,
    checks: fn() -> Vec<Check>,
}

impl Entry {
    pub fn checks(&self) -> Vec<Check> {
        (self.checks)()
    }

    /// Cyclotomic order covering every instantiation.
    pub fn level(&self) -> u32 {
        self.checks()
            .iter()
            .fold(1, |a, c| lcm(a as u64, c.level as u64) as u32)
    }

    /// Puiseux denominator covering every instantiation.
    pub fn denom(&self) -> i64 {
        self.checks()
            .iter()
            .fold(1, |a, c| lcm(a as u64, c.denom as u64) as i64)
    }

    /// Runs every instantiation, at `order` or the entry default.
    pub fn verify(&self, order: Option<Rat>) -> Vec<IdentityReport> {
        let o = order.unwrap_or_else(|| Rat::from_integer(self.default_order));
        self.checks().iter().map(|c| c.run(self.id, o)).collect()
    }
}

/// Every entry, in catalog order.
pub fn entries() -> Vec<Entry> {
    let mut v = Vec::new();
    v.extend(deviations::entries());
    v.extend(combinatorics::entries());
    v.extend(appell_ids::entries());
    v.extend(theta_ids::entries());
    v.extend(dissections::entries());
    v
}

pub fn find(id: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.id == id)
}

/// Every verified display, paired with the entry that checks it.
pub const MANIFEST: &[(&str, &str)] = &[
    ("O_d(z;q) = (-q)_inf/(q)_inf (1 + 2 sum_{n>=1} (1-z)(1-1/z)(-1)^n q^{n^2+dn} / ((1-zq^{dn})(1-q^{dn}/z)))", "gf-column-sum"),
    ("rank generating function at d = 1", "rank-statistic"),
    ("M2-rank generating function at d = 2", "m2-rank-statistic"),
    ("D_d(a,M) = sum_n (N_d(a,M,n) - pbar(n)/M) q^n", "rank-deviation"),
    ("N_d(a,M,n) = sum_{k = a mod M} N_d(k,n)", "deviation-residue-sum"),
    ("rank deviation D(a,M) for the rank", "rank-deviation"),
    ("rank deviation D_2(a,M) for the M2-rank", "m2-rank-deviation"),
    ("D_d(a,M) = D_d(M-a,M)", "deviation-symmetry"),
    ("pair deviation, d odd, a and M even", "pair-even-even"),
    ("pair deviation, d odd, a even, M odd", "pair-even-odd"),
    ("pair deviation, d odd, a and M odd", "pair-odd-odd"),
    ("pair deviation, d even", "pair-even-d"),
    ("pair deviation, d odd, a odd, M even, by reflection", "pair-reflection"),
    ("m(x,q,z) = j(z;q)^{-1} sum_r (-1)^r q^{r(r-1)/2} z^r / (1 - q^{r-1} x z)", "appell-definition"),
    ("m(x,q,z) = x^{-1} m(1/x,q,1/z)", "appell-flip-inverse"),
    ("m(x,q,z) = 1/x - m(qx,q,z)/x", "appell-flip-shift"),
    ("m(q,q^2,-1) = 1/2", "appell-special-value"),
    ("m(x,q,z1) - m(x,q,z0) = Delta(x,z1,z0;q)", "appell-switch"),
    ("sum_t zeta_n^{-kt} m(zeta_n^t x,q,z) = n q^{-k(k+1)/2} (-x)^k m(...) + n Psi_k^n(x,z,z';q)", "appell-orthogonality"),
    ("j(q;q^2)^{-1} sum_n (-1)^n q^{n^2+n}/(1 - x q^n) = -x^{-1} m(q/x^2,q^2,x)", "appell-lambert-form"),
    ("sum_{j<n} zeta_n^{sj} = n [n | s]", "root-of-unity-sum"),
    ("(1/M) sum_{j=1}^{M-1} zeta_M^{-aj} Sbar_d(zeta_M^j) = D_d(a,M) + D_d(a-1,M)", "fourier-pair"),
    ("Sbar_d(z) = (1+z) O_d(z), d odd, through Lambda", "normalized-gf-odd"),
    ("Sbar_d(z) = (1+z) O_d(z), d even, through Psi_0^{d/2}", "normalized-gf-even"),
    ("O_d(z;q) = (1-z)/(1+z) (1 + 2z/j(q;q^2) sum_n (-1)^n q^{n^2+dn}/(1 - z q^{dn}))", "gf-single-sum"),
    ("j(z;q) = (z)_inf (q/z)_inf (q)_inf = sum_n (-1)^n q^{n(n-1)/2} z^n", "theta-triple-product"),
    ("j(q^n;q) = 0", "theta-vanishing"),
    ("j(q^n x;q) = (-1)^n q^{-n(n-1)/2} x^{-n} j(x;q)", "theta-quasi-period"),
    ("j(x;q) = j(q/x;q) = -x j(1/x;q)", "theta-inversion"),
    ("closed forms of j(q;q^2), j(q;q^3), j(q;q^6), j(-1;q), j(-q;q^3), j(-q;q^6)", "theta-closed-forms"),
    ("j(x/q;q^2) j(q^2/x;q^2) = x^2 q^{-1} j(1/x;q) J_2^2/J_1", "theta-product-shift"),
    ("j(-x;q)/(j(-x^2 q;q^2) j(x;q)) = -j(-1/x;q)/(j(-q/x^2;q^2) j(1/x;q))", "theta-reflection-quotient"),
    ("j(z;q) = sum_{k<n} (-1)^k q^{k(k-1)/2} z^k j((-1)^{n+1} q^{n(n-1)/2+nk} z^n; q^{n^2})", "theta-multisection"),
    ("j(qx^3;q^3) + x j(q^2x^3;q^3) = J_1 j(x^2;q)/j(x;q)", "theta-cubic-sum"),
    ("j(x;q) j(y;q) = j(-xy;q^2) j(-qy/x;q^2) - x j(-qxy;q^2) j(-y/x;q^2)", "theta-quadratic-product"),
    ("j(y;q)/j(-y;q) - j(x;q)/j(-x;q) = 2x j(y/x;q^2) j(qxy;q^2)/(j(-x;q) j(-y;q))", "theta-quotient-difference"),
    ("j(zx;q)/j(x;q) = J_n^3 j(z;q)/(J_1^3 j(x^n;q^n)) sum_{k<n} x^k j(z x^n q^k;q^n)/j(z q^k;q^n)", "theta-quotient-multisection"),
    ("j(w;q) = (1-w) J_3", "cube-root-theta"),
    ("j(-w;q) = (1+w) J_1^2 J_6/(J_2 J_3)", "cube-root-theta-negative"),
    ("j(-wq;q^2) = J_1 J_4 J_6^2/(J_2 J_3 J_12)", "cube-root-theta-square-base"),
    ("j(-wq;q^3) = J_9 (j(q^2;q^9)/j(-q;q^9) - w^2 q j(q^8;q^9)/j(-q^4;q^9))", "cube-root-theta-cube-base"),
    ("j(-wq;q^6) = J_18 (j(q^10;q^18)/j(-q^5;q^18) + wq j(q^14;q^18)/j(-q^7;q^18))", "cube-root-theta-sixth-base"),
    ("j(x;q) j(xw;q) j(xw^2;q) = J_1^3 j(x^3;q^3)/J_3", "cube-root-product"),
    ("1/J_1^3 = W_0(q^3) + q W_1(q^3) + q^2 W_2(q^3)", "dissection-w"),
    ("J_1 J_6/(J_2 J_3^2) = f_0(q^3) + q f_1(q^3) + q^2 f_2(q^3)", "dissection-f"),
    ("J_2^4 J_8/(J_1 J_4^3) = g_0(q^3) + q g_1(q^3) + q^2 g_2(q^3)", "dissection-g"),
    ("J_2^3/(J_1 J_8) = h_0(q^3) + q h_1(q^3) + q^2 h_2(q^3)", "dissection-h"),
    ("J_2/J_4^2 = I_0(q^3) + q I_1(q^3) + q^2 I_2(q^3)", "dissection-i"),
    ("D_d((M+1)/2 + n, M) = (D_n - D_{n-1})/2", "single-odd-modulus"),
    ("D_n = sum_{i<=n} (D_d((M+1)/2 - n + 2i) + D_d((M+1)/2 - n + 2i - 1))", "telescoping-reindex"),
    ("D_d(n,M), M even, d odd, through Lambda", "single-even-modulus-odd-d"),
    ("D_d(n,M), M even, d even, through Psi_0^{d/2}", "single-even-modulus-even-d"),
    ("D_d(n,M) = (1/M) sum_{k=1}^{M-1} O_d(zeta_M^k) zeta_M^{-kn}", "single-fourier"),
    ("D_d(n,M) = (-1)^n O_d(-1)/M + (1/M) sum_{k<M/2} (zeta_M^{-kn} + zeta_M^{kn}) O_d(zeta_M^k)", "single-fourier-halved"),
    ("G_N = sum_{k+l+m = N mod 3} q^{k+l+m} g_k(q^3) W_l(q^3) f_m(q^3)", "triple-sum-g"),
    ("H_N = sum_{k+l+m = N mod 3} q^{k+l+m} h_k(q^3) W_l(q^3) f_m(q^3)", "triple-sum-h"),
    ("A, ..., G theta quotients and O_3(zeta_3;q) = Bbar_0(q^3) + q B_1(q^3) + q^2 B_2(q^3)", "o3-dissection"),
    ("O_3(zeta_3;q) = sum_n (N_3(0,3,n) - N_3(2,3,n)) q^n", "o3-residues"),
    ("j(zeta_3 q^15;q^18)/j(-zeta_3 q^15;q^18) + j(zeta_3 q^21;q^18)/j(-zeta_3 q^21;q^18) = -2 q^3 zeta_3^2 (1 - zeta_3^2) J_6^2 J_9^2 J_36^2 J_54^2/(J_3 J_18^6 J_27)", "theta-quotient-combination"),
    ("Lambda terms at zeta_3 and zeta_3^2 combine into 3 q^3 J_2 J_6^3 J_9 J_108/(J_3 J_4^2 J_18 J_36)", "eta-quotient-combination"),
    ("4 Psi_2^3(q^9,-1,-1;q^18) - 2 Psi_1^3(q^9,-1,-1;q^18) = closed theta form", "psi-combination"),
    ("Psi_0^3(q^9,-1,-1;q^18) = 0", "psi-vanishing"),
];

pub(crate) fn kv(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

pub(crate) fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Least common level of the roots in `ms`, times `extra`.
pub(crate) fn level_of(ms: &[&Monomial], extra: u32) -> u32 {
    ms.iter().fold(extra as u64, |a, m| lcm(a, m.level() as u64)) as u32
}

/// Least common denominator of the exponents in `ms`, times `extra`.
pub(crate) fn denom_of(ms: &[&Monomial], extra: i64) -> i64 {
    ms.iter().fold(extra as u64, |a, m| lcm(a, *m.exp().denom() as u64)) as i64
}

/// Both sides evaluated to `order`.
pub(crate) fn pair(lhs: impl FnOnce() -> Result<QSeries>, rhs: impl FnOnce() -> Result<QSeries>) -> Sides {
    (lhs(), rhs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_manifest_is_complete() {
        let es = entries();
        let ids: BTreeSet<&str> = es.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), es.len());
        let displays: BTreeSet<&str> = MANIFEST.iter().map(|(d, _)| *d).collect();
        assert_eq!(displays.len(), MANIFEST.len());
        for (d, id) in MANIFEST {
            assert!(ids.contains(id), "{d} -> {id}");
        }
        let covered: BTreeSet<&str> = MANIFEST.iter().map(|(_, id)| *id).collect();
        for id in &ids {
            assert!(covered.contains(id), "{id} has no display");
        }
    }

    #[test]
    fn every_entry_has_checks() {
        for e in entries() {
            assert!(!e.checks().is_empty(), "{}", e.id);
        }
    }
}
