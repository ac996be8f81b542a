use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::cyclo_polynomial;

/// The field Q(ζ_L), represented by the power basis 1, ζ, …, ζ^{φ(L)-1}.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: Vec<i64>,
    support: Vec<(usize, i64)>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus: Vec<i64> = cyclo_polynomial(order)
            .iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient exceeds i64"))
            .collect();
        let degree = modulus.len() - 1;
        let support = modulus[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i, *c))
            .collect();
        CyclotomicField {
            order,
            degree,
            modulus,
            support,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Φ_L, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Reduce an integer polynomial in ζ modulo Φ_L, in place.
    pub(crate) fn reduce(&self, p: &mut Vec<BigInt>) {
        let deg = self.degree;
        if p.len() > deg {
            for idx in (deg..p.len()).rev() {
                let c = core::mem::take(&mut p[idx]);
                if c.is_zero() {
                    continue;
                }
                let base = idx - deg;
                for &(j, m) in &self.support {
                    p[base + j] -= &c * m;
                }
            }
        }
        p.resize(deg, BigInt::zero());
    }

    /// ζ_L^k in the power basis.
    pub(crate) fn power(&self, k: i64) -> Vec<BigInt> {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut p = vec![BigInt::zero(); (e + 1).max(self.degree)];
        p[e] = BigInt::from(1);
        self.reduce(&mut p);
        p
    }
}

#[cfg(feature = "std")]
fn cache() -> &'static std::sync::Mutex<alloc::collections::BTreeMap<u32, Arc<CyclotomicField>>> {
    static CACHE: std::sync::OnceLock<std::sync::Mutex<alloc::collections::BTreeMap<u32, Arc<CyclotomicField>>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared handle to Q(ζ_order).
pub fn field(order: u32) -> Arc<CyclotomicField> {
    #[cfg(feature = "std")]
    {
        let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
        map.entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::new(order)))
            .clone()
    }
    #[cfg(not(feature = "std"))]
    {
        Arc::new(CyclotomicField::new(order))
    }
}
