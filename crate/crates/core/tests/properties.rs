use proptest::prelude::*;

use topolab::filters::{lift_map, lift_space, mult, unit, FilterKind};
use topolab::frame::{opens_frame, pseudocomplement};
use topolab::io::{parse_map, parse_space, map_to_json, space_to_json};
use topolab::map::{are_homeomorphic, enumerate_continuous_maps, ContinuousMap};
use topolab::reflect::{factor_through, sobrify, t0_reflect};
use topolab::{FiniteSpace, ReflectorKind};

fn space(max: usize) -> impl Strategy<Value = FiniteSpace> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), 0..6).prop_map(move |g| FiniteSpace::from_generators(n, &g).unwrap())
    })
}

fn kind() -> impl Strategy<Value = FilterKind> {
    prop::sample::select(FilterKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn space_json_round_trips(x in space(5)) {
        prop_assert_eq!(parse_space(&space_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn map_json_round_trips(x in space(3), y in space(3), pick in any::<prop::sample::Index>()) {
        let maps = enumerate_continuous_maps(&x, &y);
        let f = &maps[pick.index(maps.len())];
        prop_assert_eq!(&parse_map(&map_to_json(f)).unwrap(), f);
    }

    #[test]
    fn closure_is_a_closure_operator(x in space(5), a in any::<u64>()) {
        let a = a & x.full();
        let c = x.closure(a);
        prop_assert!(a & !c == 0);
        prop_assert!(x.is_closed(c));
        prop_assert_eq!(x.closure(c), c);
        prop_assert_eq!(x.interior(x.full() & !a), x.full() & !c);
    }

    #[test]
    fn specialization_is_a_preorder(x in space(5)) {
        let s = x.specialization();
        prop_assert!(s.is_reflexive() && s.is_transitive());
        prop_assert_eq!(s.is_antisymmetric(), x.is_t0());
    }

    #[test]
    fn reflections_land_in_their_class(x in space(5)) {
        for kind in ReflectorKind::ALL {
            let r = kind.reflect(&x);
            prop_assert!(kind.admits(&r.space));
            prop_assert!(r.unit.is_surjective());
            if kind.admits(&x) {
                prop_assert!(r.unit.is_homeomorphism());
            }
        }
    }

    #[test]
    fn sobrification_agrees_with_t0_reflection(x in space(5)) {
        prop_assert!(are_homeomorphic(&sobrify(&x).space, &t0_reflect(&x).space));
    }

    #[test]
    fn maps_factor_through_the_t0_reflection(x in space(4), y in space(3), pick in any::<prop::sample::Index>()) {
        let y = t0_reflect(&y).space;
        let maps = enumerate_continuous_maps(&x, &y);
        let f = &maps[pick.index(maps.len())];
        let r = t0_reflect(&x);
        let phi = factor_through(f, &r.unit).unwrap();
        let composite = r.unit.then(&phi).unwrap();
        prop_assert_eq!(composite.values(), f.values());
    }

    #[test]
    fn lifts_are_stably_compact_and_embed_t0_spaces(x in space(4), kind in kind()) {
        let l = lift_space(kind, &x).unwrap();
        let e = unit(kind, &x).unwrap();
        if kind != FilterKind::Ultra {
            prop_assert!(l.space().is_stably_compact());
            prop_assert_eq!(e.is_embedding(), x.is_t0());
        } else {
            prop_assert!(are_homeomorphic(l.space(), &x));
        }
    }

    #[test]
    fn sigma_and_closed_prime_lifts_agree(x in space(4)) {
        let s = lift_space(FilterKind::OpenPrime, &x).unwrap();
        let p = lift_space(FilterKind::ClosedPrime, &x).unwrap();
        prop_assert!(are_homeomorphic(s.space(), p.space()));
    }

    #[test]
    fn unit_laws_hold(x in space(3), kind in kind()) {
        let l = lift_space(kind, &x).unwrap();
        let m = mult(kind, &x).unwrap();
        let id = ContinuousMap::identity(l.space());
        let left = unit(kind, l.space()).unwrap().then(&m).unwrap();
        let right = lift_map(kind, &unit(kind, &x).unwrap()).unwrap().then(&m).unwrap();
        prop_assert_eq!(left.values(), id.values());
        prop_assert_eq!(right.values(), id.values());
    }

    #[test]
    fn opens_form_a_pseudocomplemented_lattice(x in space(4)) {
        let l = opens_frame(&x);
        for a in 0..l.len() {
            let p = pseudocomplement(&l, a);
            prop_assert_eq!(l.meet(a, p), l.bottom());
            for b in 0..l.len() {
                prop_assert_eq!(l.meet(a, b) == l.bottom(), l.le(b, p));
            }
        }
    }
}
