mod common;

use annulus::data::classify_all;
use annulus::obstructions::{
    classify, lm_check, meridian_test, Cell, Computed, External, ExternalInvariants, MeridianResult, ObstructionError,
};

#[test]
fn meridian_is_inconclusive() {
    let fx = common::fixtures();
    for b in &fx.beta_links {
        let k = fx.knot(&b.name).unwrap();
        let alpha = k.add_meridian(k.labels()[0], 1).unwrap();
        assert_eq!(meridian_test(k, &alpha).unwrap(), MeridianResult::Inconclusive, "{}", b.name);
        let flipped = alpha.flip_component(1).unwrap();
        assert_eq!(meridian_test(k, &flipped).unwrap(), MeridianResult::Inconclusive, "{} reversed", b.name);
    }
}

#[test]
fn meridian_test_rejects_bad_links() {
    let fx = common::fixtures();
    let k = fx.knot("3_1").unwrap();
    assert!(matches!(meridian_test(k, k), Err(ObstructionError::Components(1))));
    let twice = k.add_meridian(k.labels()[0], 1).unwrap();
    let e = twice.labels()[0];
    let double = twice.add_meridian(e, 1).unwrap().sublink(&[0, 1]).unwrap();
    if double.linking_number(0, 1).abs() != 1 {
        assert!(matches!(meridian_test(k, &double), Err(ObstructionError::Linking(_))));
    }
}

#[test]
fn lm_check_holds_on_beta_links() {
    for b in common::fixtures().beta_links {
        assert!(lm_check(&b.link).unwrap().pass, "{}", b.name);
    }
}

#[test]
fn mirroring_swaps_chiralities() {
    let fx = common::fixtures();
    for r in classify_all(&fx, false).unwrap() {
        let k = fx.knot(&r.name).unwrap();
        let m = Computed::of(&k.mirror()).unwrap();
        // mirroring negates s and the signature
        let mut ext = fx.external.clone();
        if let Some(e) = ext.rows.get_mut(&r.name) {
            e.s = e.s.map(|s| -s);
        }
        let rm = classify(&r.name, &m, &ext, fx.yes_set.contains(&r.name)).unwrap();
        assert_eq!(rm.cell, r.cell, "{}", r.name);
        assert_eq!(rm.decided_by, r.decided_by, "{}", r.name);
        assert_eq!(rm.verdict.positive_ruled_out, r.verdict.negative_ruled_out, "{}", r.name);
    }
}

#[test]
fn obstructed_u1_knot_is_a_hard_error() {
    let fx = common::fixtures();
    let c = Computed::of(fx.knot("8_18").unwrap()).unwrap();
    let mut ext = ExternalInvariants::default();
    ext.rows.insert("8_18".into(), External { u: Some(1), g4: Some(1), s: Some(0) });
    match classify("8_18", &c, &ext, false) {
        Err(ObstructionError::Inconsistent { name, cell, reasons }) => {
            assert_eq!(name, "8_18");
            assert_eq!(cell, Cell::UnknottingOne);
            assert!(reasons.contains("jones-three"));
        }
        other => panic!("expected an inconsistency, got {other:?}"),
    }
    assert!(matches!(classify("8_18", &c, &fx.external, true), Err(ObstructionError::Inconsistent { .. })));
}

#[test]
fn genus_gate_rejects_inconsistent_data() {
    let fx = common::fixtures();
    let c = Computed::of(fx.knot("8_19").unwrap()).unwrap();
    let mut ext = ExternalInvariants::default();
    ext.rows.insert("8_19".into(), External { u: Some(3), g4: Some(1), s: None });
    assert!(matches!(classify("8_19", &c, &ext, false), Err(ObstructionError::GenusGate { .. })));
}

#[test]
fn missing_data_leaves_cells_unknown() {
    let fx = common::fixtures();
    let c = Computed::of(fx.knot("3_1").unwrap()).unwrap();
    let r = classify("3_1", &c, &ExternalInvariants::default(), false).unwrap();
    assert_eq!(r.cell, Cell::Unknown);
    assert!(r.decided_by.is_empty());
    assert!(r.verdict.positive_ruled_out != r.verdict.negative_ruled_out);
}
