use proptest::prelude::*;
use qrank_core::{BigRational, Cyclotomic, QSeries, Rat};

fn cyclotomic(level: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-9i64..=9, 1i64..=4), level as usize).prop_map(move |v| {
        let c: Vec<BigRational> = v
            .into_iter()
            .map(|(n, d)| BigRational::new(n.into(), d.into()))
            .collect();
        Cyclotomic::from_coeffs(level, &c)
    })
}

fn series() -> impl Strategy<Value = QSeries> {
    series_with(1..=3)
}

fn series_with(dens: core::ops::RangeInclusive<i64>) -> impl Strategy<Value = QSeries> {
    (prop::collection::vec(cyclotomic(12), 1..6), -2i64..=2, dens).prop_map(|(c, v, den)| {
        let terms = c
            .into_iter()
            .enumerate()
            .map(move |(i, x)| (Rat::new(v * den + i as i64, den), x));
        QSeries::from_terms(terms, Some(Rat::from_integer(8)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyclotomic(15), b in cyclotomic(15), c in cyclotomic(15)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn mixed_levels_embed(a in cyclotomic(4), b in cyclotomic(6)) {
        let s = &a + &b;
        prop_assert_eq!(&s - &b, a.clone());
        prop_assert_eq!(12 % s.level(), 0);
    }

    #[test]
    fn conjugates_multiply(a in cyclotomic(7), b in cyclotomic(7), k in 1i64..7) {
        prop_assert_eq!((&a * &b).conjugate(k), &a.conjugate(k) * &b.conjugate(k));
    }

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn division_inverts_multiplication(a in series(), b in series()) {
        prop_assume!(!b.is_zero());
        let o = Rat::from_integer(4);
        let q = (&a * &b).div(&b).unwrap();
        prop_assert_eq!(q.first_difference(&a, o).unwrap(), None);
    }

    #[test]
    fn dissection_reassembles(a in series_with(1..=1), n in 2usize..=4) {
        let parts = a.dissect(n).unwrap();
        let mut sum = QSeries::zero();
        for (k, p) in parts.iter().enumerate() {
            sum = sum + p.substitute_q_power(Rat::from_integer(n as i64)).unwrap().shift(Rat::from_integer(k as i64));
        }
        prop_assert_eq!(sum.first_difference(&a, Rat::from_integer(8)).unwrap(), None);
    }
}
