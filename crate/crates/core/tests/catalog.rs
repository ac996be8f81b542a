use qrank_core::catalog::{entries, find, Check, Comparison, MANIFEST};
use qrank_core::{Error, Monomial, QSeries, Rat, Verdict};

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

#[test]
fn every_entry_passes_at_a_small_order() {
    for e in entries() {
        let o = r(e.default_order.min(18));
        for rep in e.verify(Some(o)) {
            assert_eq!(
                rep.verdict,
                Verdict::Pass,
                "{} {:?} {:?} {:?}",
                rep.id,
                rep.instantiation,
                rep.first_mismatch,
                rep.notes
            );
        }
    }
}

#[test]
fn manifest_points_at_entries() {
    for (display, id) in MANIFEST {
        assert!(find(id).is_some(), "{display} -> {id}");
    }
    for e in entries() {
        assert!(
            MANIFEST.iter().any(|(_, id)| *id == e.id),
            "{} missing from manifest",
            e.id
        );
        assert!(e.level() >= 1 && e.denom() >= 1);
    }
}

#[test]
fn a_false_identity_fails_with_its_first_mismatch() {
    let c = Check::new(vec![], 1, 1, |o| {
        let a = QSeries::from_monomial(&Monomial::q(3)).truncate(o);
        vec![(Ok(a), Ok(QSeries::zero()))]
    });
    let rep = c.run("bogus", r(10));
    assert_eq!(rep.verdict, Verdict::Fail);
    assert_eq!(rep.first_mismatch.unwrap().exponent, r(3));
}

#[test]
fn missing_precision_fails() {
    let c = Check::new(vec![], 1, 1, |_| {
        vec![(Ok(QSeries::zero_to(r(2))), Ok(QSeries::zero()))]
    });
    assert_eq!(c.run("short", r(10)).verdict, Verdict::Fail);
}

#[test]
fn non_generic_parameters_are_reported_separately() {
    let c = Check::new(vec![], 1, 1, |_| {
        vec![(
            Err(Error::NonGenericParameter("j(z) vanishes".into())),
            Ok(QSeries::zero()),
        )]
    });
    assert_eq!(c.run("pole", r(10)).verdict, Verdict::NonGeneric);
}

#[test]
fn undeclared_levels_fail() {
    let c = Check::new(vec![], 5, 1, |o| {
        vec![(
            Ok(QSeries::from_monomial(&Monomial::zeta(1, 7)).truncate(o)),
            Ok(QSeries::from_monomial(&Monomial::zeta(1, 7))),
        )]
    });
    assert_eq!(c.run("level", r(4)).verdict, Verdict::Fail);
}

#[test]
fn per_comparison_orders_are_respected() {
    let c = Check::new(vec![], 1, 1, |_| {
        vec![Comparison::at(Ok(QSeries::zero_to(r(3))), Ok(QSeries::zero()), r(3)).with_note("cut")]
    });
    let rep = c.run("cut", r(10));
    assert_eq!(rep.verdict, Verdict::Pass);
    assert!(rep.notes.iter().any(|n| n == "cut"));
}
