mod common;

use annulus::algebra::{LaurentPoly, QuadraticInt, Var, GOLDEN, OMEGA};
use annulus::diagram::Diagram;
use annulus::invariants::{self, Engine};
use common::braid_closure;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..6, -9i64..9), 0..6).prop_map(|t| LaurentPoly::from_terms(Var::T, t))
}

fn quad(ring: annulus::algebra::QRing) -> impl Strategy<Value = QuadraticInt> {
    (-50i64..50, -50i64..50).prop_map(move |(a, b)| QuadraticInt::new(ring, a, b))
}

fn braid() -> impl Strategy<Value = Diagram> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            (Just(n), prop::collection::vec(letter, 0..=8))
        })
        .prop_map(|(n, w)| braid_closure(n, &w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero(Var::T));
        prop_assert_eq!(&a * &LaurentPoly::one(Var::T), a.clone());
    }

    #[test]
    fn render_parse_round_trip(a in poly()) {
        // `t` text is read as q = t^{1/2}, so round-trip through z and q
        let z = a.clone().with_var(Var::Z);
        prop_assert_eq!(LaurentPoly::parse(&z.render()).unwrap(), z);
        let q = a.with_var(Var::Q);
        prop_assert_eq!(LaurentPoly::parse(&q.render()).unwrap().with_var(Var::Q), q);
    }

    #[test]
    fn quadratic_ring_axioms(a in quad(OMEGA), b in quad(OMEGA), c in quad(OMEGA), g in quad(GOLDEN), h in quad(GOLDEN)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!((&g * &h).norm(), g.norm() * h.norm());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly()) {
        for ring in [OMEGA, GOLDEN] {
            let r = QuadraticInt::root(ring);
            let ev = |p: &LaurentPoly| p.eval_quadratic(&r).unwrap();
            prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
            prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
        }
    }

    #[test]
    fn cache_and_parallelism_do_not_change_results(d in braid()) {
        let plain = Engine::new(false, false);
        let full = Engine::new(true, true);
        prop_assert_eq!(plain.jones(&d), full.jones(&d));
        prop_assert_eq!(plain.q_poly(&d).unwrap(), full.q_poly(&d).unwrap());
        prop_assert_eq!(plain.conway_skein(&d).unwrap(), full.conway_skein(&d).unwrap());
    }

    #[test]
    fn simplification_preserves_invariants(d in braid()) {
        let s = d.simplify().diagram;
        prop_assert!(s.n_crossings() <= d.n_crossings());
        prop_assert_eq!(invariants::jones(&s), invariants::jones(&d));
        prop_assert_eq!(invariants::q_poly(&s).unwrap(), invariants::q_poly(&d).unwrap());
        prop_assert_eq!(invariants::conway(&s).unwrap(), invariants::conway(&d).unwrap());
    }

    #[test]
    fn independent_routes_agree(d in braid()) {
        prop_assert_eq!(invariants::jones_skein(&d).unwrap(), invariants::jones(&d));
        prop_assert_eq!(invariants::conway_skein(&d).unwrap(), invariants::conway(&d).unwrap());
    }

    #[test]
    fn mirror_inverts_jones(d in braid()) {
        let v = invariants::jones(&d);
        let inverted = LaurentPoly::from_terms(Var::Q, v.terms().map(|(e, c)| (-e, c.clone())));
        prop_assert_eq!(invariants::jones(&d.mirror()), inverted);
    }
}

#[test]
fn trefoil_braid_matches_table() {
    let fx = common::fixtures();
    let t = braid_closure(2, &[1, 1, 1]);
    let k = fx.knot("3_1").unwrap();
    let v = invariants::jones(&t);
    assert!(v == invariants::jones(k) || v == invariants::jones(&k.mirror()));
    assert_eq!(t.component_count(), 1);
    assert!(t.faces().is_ok());
}
