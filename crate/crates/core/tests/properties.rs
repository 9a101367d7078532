use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use csline::lie::{adjoint, exp_map, log_map, trace_form, Su2Element, Su2Vector};
use csline::prequantum::{cocycle_exact, gauge_action, GaugeCharacter, TorusModuliPoint};
use csline::quotient::{quotient_map, regular_preimages, torus_distance};
use csline::repvar::{sample_flat, sample_rng, Letter, Word};
use csline::twisted::{TwistedCochain, TwistedComplex};

fn vector() -> impl Strategy<Value = Su2Vector> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(x, y, z)| Su2Vector::new(x, y, z))
}

fn element() -> impl Strategy<Value = Su2Element> {
    any::<u64>().prop_map(|s| Su2Element::random(&mut ChaCha8Rng::seed_from_u64(s)))
}

fn character() -> impl Strategy<Value = GaugeCharacter> {
    (-5i64..=5, -5i64..=5).prop_map(|(m, n)| GaugeCharacter::lattice(m, n))
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..4, prop::bool::ANY), 0..12)
        .prop_map(|ls| Word::new(ls.into_iter().map(|(g, inv)| Letter::new(g, if inv { -1 } else { 1 }))))
}

proptest! {
    #[test]
    fn exp_log_round_trip(v in vector()) {
        prop_assume!(v.norm() < std::f64::consts::PI - 1e-3);
        let back = log_map(&exp_map(&v)).unwrap();
        prop_assert!((back - v).max_abs() < 1e-10);
    }

    #[test]
    fn adjoint_preserves_trace_form(g in element(), v in vector(), w in vector()) {
        let before = trace_form(&v, &w);
        let after = trace_form(&adjoint(&g, &v), &adjoint(&g, &w));
        prop_assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn adjoint_is_a_homomorphism(g in element(), h in element(), v in vector()) {
        let lhs = adjoint(&g.multiply(&h), &v);
        let rhs = adjoint(&g, &adjoint(&h, &v));
        prop_assert!((lhs - rhs).max_abs() < 1e-12);
    }

    #[test]
    fn words_cancel_with_inverses(w in word()) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn cocycle_identity(a in -3.0..3.0f64, b in -3.0..3.0f64, c1 in character(), c2 in character()) {
        let p = TorusModuliPoint::new(a, b);
        let lhs = cocycle_exact(&p, &c1).unwrap() * cocycle_exact(&gauge_action(&p, &c1), &c2).unwrap();
        let rhs = cocycle_exact(&p, &c2.compose(&c1)).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn quotient_map_is_invariant(a in -3.0..3.0f64, b in -3.0..3.0f64, c in character(), reflect in prop::bool::ANY) {
        let p = TorusModuliPoint::new(a, b);
        let c = if reflect { GaugeCharacter::with_reflection(c.m, c.n) } else { c };
        prop_assert!(quotient_map(&gauge_action(&p, &c)).distance(&quotient_map(&p)) < 1e-10);
    }

    #[test]
    fn preimages_contain_the_point(a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let p = TorusModuliPoint::new(a, b);
        if let Ok(pre) = regular_preimages(&quotient_map(&p)) {
            prop_assert_eq!(pre.len(), 2);
            prop_assert!(pre.iter().any(|x| torus_distance(x, &p) < 1e-8));
        }
    }

    #[test]
    fn coboundary_squares_to_zero(genus in 1usize..=3, seed in 0u64..1000, coords in prop::collection::vec(-1.0..1.0f64, 6)) {
        let rho = sample_flat(genus, &mut sample_rng(seed, 0)).unwrap();
        let tc = TwistedComplex::new(&rho);
        let phi = TwistedCochain::from_coords(0, &coords);
        let dd = tc.coboundary(&tc.coboundary(&phi).unwrap()).unwrap();
        prop_assert!(dd.max_norm() < 1e-9);
    }
}
