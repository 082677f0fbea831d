use sl3_billiards_core::billiards::build_ztilde;
use sl3_billiards_core::treegen::{build_zprime, verify_lemma, LambdaVariant};
use sl3_billiards_core::LabelledPoint;

#[test]
fn lemma_holds_at_desk_scale() {
    for (ell, n) in [(3, 120), (5, 120), (7, 90)] {
        let r = verify_lemma(ell, n, LambdaVariant::Corrected).unwrap();
        assert!(
            r.is_equal(),
            "ell={ell}: {:?}",
            &r.discrepancies[..r.discrepancies.len().min(5)]
        );
        assert!(r.rejected_seeds.is_empty());
        assert_eq!(r.ztilde_total, r.zprime_total);
    }
}

#[test]
fn multiplicity_two_point_on_both_sides() {
    let p = LabelledPoint::at(3, 7, 88, 8);
    assert_eq!(build_ztilde(5, 90).unwrap().multiplicity(&p), 2);
    assert_eq!(
        build_zprime(5, 90, LambdaVariant::Corrected)
            .unwrap()
            .points
            .multiplicity(&p),
        2
    );
}

#[test]
fn printed_roots_break_the_lemma() {
    let r = verify_lemma(5, 60, LambdaVariant::Printed).unwrap();
    assert!(!r.rejected_seeds.is_empty());
    assert!(!r.is_equal());
}

#[test]
fn doubling_family() {
    let z = build_ztilde(5, 133).unwrap();
    assert_eq!(z.multiplicity(&LabelledPoint::at(3, 7, 88, 8)), 2);
    assert!(z.multiplicity(&LabelledPoint::at(3, 7, 133, 13)) >= 4);
}
