use proptest::collection::vec;
use proptest::prelude::*;

use super::*;
use crate::game::GameTree;

fn d(n: i64, e: u32) -> Dyadic {
    Dyadic::new(n, e)
}

fn arb_tree(depth: u32) -> impl Strategy<Value = GameTree> {
    Just(GameTree::zero()).prop_recursive(depth, 40, 3, |inner| {
        (vec(inner.clone(), 0..3), vec(inner, 0..3)).prop_map(|(l, r)| GameTree::new(l, r))
    })
}

fn both(s: &GameStore, text: &str) -> (Dyadic, Dyadic) {
    let g = s.parse(text).unwrap();
    let scaffold = (s.temperature(g), s.mast_value(g));
    assert_eq!(s.direct_temperature(g), scaffold, "{text}");
    scaffold
}

#[test]
fn hand_scaffolds() {
    let s = GameStore::new();
    assert_eq!(both(&s, "{2|-2}"), (Dyadic::integer(2), Dyadic::ZERO));
    assert_eq!(both(&s, "0"), (Dyadic::MINUS_ONE, Dyadic::ZERO));
    assert_eq!(both(&s, "{2|1}"), (d(1, 1), d(3, 1)));
    assert_eq!(both(&s, "±(2*)"), (Dyadic::integer(2), Dyadic::ZERO));
    assert_eq!(both(&s, "1/2"), (d(-1, 1), d(1, 1)));
    assert_eq!(both(&s, "±2"), (Dyadic::integer(2), Dyadic::ZERO));
    assert_eq!(both(&s, "5"), (Dyadic::MINUS_ONE, Dyadic::integer(5)));
    assert_eq!(both(&s, "-3/8"), (d(-1, 3), d(-3, 3)));
    assert_eq!(both(&s, "*"), (Dyadic::ZERO, Dyadic::ZERO));
    assert_eq!(both(&s, "{0|*}"), (Dyadic::ZERO, Dyadic::ZERO));
    // Right scaffold is 1 below t = 1 (inner switch) and t above; 3 - t meets t.
    assert_eq!(both(&s, "{3|±1}"), (d(3, 1), d(3, 1)));
}

#[test]
fn walls_of_a_switch() {
    let s = GameStore::new();
    let g = s.parse("{2|1}").unwrap();
    let th = s.thermograph(g);
    assert_eq!(th.left_wall.value_at(Dyadic::ZERO), Dyadic::integer(2));
    assert_eq!(th.right_wall.value_at(Dyadic::ZERO), Dyadic::integer(1));
    assert_eq!(th.left_wall.critical_temperatures(), alloc::vec![d(1, 1)]);
    assert_eq!(th.left_wall.mast(), Some(d(3, 1)));
    assert_eq!(th.right_wall.value_at(Dyadic::integer(7)), d(3, 1));
}

#[test]
fn star_on_integers_is_tepid() {
    let s = GameStore::new();
    for n in -4..=4 {
        let g = s.add(s.integer(n), s.star());
        assert_eq!(s.temperature(g), Dyadic::ZERO);
        assert_eq!(s.direct_temperature(g), (Dyadic::ZERO, Dyadic::integer(n)));
    }
}

#[test]
fn number_temperatures() {
    let s = GameStore::new();
    for e in 1..6 {
        for m in [-7i64, -1, 1, 3, 5] {
            let x = d(m, e);
            let g = s.number(x);
            let expected = -Dyadic::new(1, e);
            assert_eq!(s.temperature(g), expected, "{x}");
            assert_eq!(s.direct_temperature(g), (expected, x));
            assert_eq!(s.mast_value(g), x);
        }
    }
}

fn check_walls(s: &GameStore, g: CanonicalForm) -> Result<(), TestCaseError> {
    let th = s.thermograph(g);
    for seg in th.left_wall.segments() {
        prop_assert!((-1..=1).contains(&seg.slope));
    }
    for seg in th.right_wall.segments() {
        prop_assert!((-1..=1).contains(&seg.slope));
    }
    let mut probes: alloc::vec::Vec<Dyadic> = th.left_wall.critical_temperatures();
    probes.extend(th.right_wall.critical_temperatures());
    probes.extend([Dyadic::MINUS_ONE, d(-1, 1), Dyadic::ZERO, th.temperature()]);
    for t in probes {
        prop_assert!(th.left_wall.value_at(t) >= th.right_wall.value_at(t));
    }
    let above = th.temperature() + Dyadic::ONE;
    prop_assert_eq!(th.left_wall.value_at(above), th.mast());
    prop_assert_eq!(th.right_wall.value_at(above), th.mast());
    prop_assert_eq!(th.left_wall.mast(), Some(th.mast()));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn methods_agree(t in arb_tree(4)) {
        let s = GameStore::new();
        let g = s.canonical_of(&t);
        prop_assert_eq!(s.direct_temperature(g), (s.temperature(g), s.mast_value(g)));
        prop_assert_eq!(
            s.temperature_with(g, ThermographMethod::Direct),
            s.temperature_with(g, ThermographMethod::Scaffold)
        );
    }

    #[test]
    fn negation_reflects(t in arb_tree(4)) {
        let s = GameStore::new();
        let g = s.canonical_of(&t);
        prop_assert_eq!(s.thermograph(s.neg(g)), &s.thermograph(g).reflected());
        prop_assert_eq!(s.temperature(s.neg(g)), s.temperature(g));
    }

    #[test]
    fn walls_are_ordered_with_unit_slopes(t in arb_tree(4)) {
        let s = GameStore::new();
        check_walls(&s, s.canonical_of(&t))?;
    }

    #[test]
    fn sums_are_no_hotter(a in arb_tree(3), b in arb_tree(3)) {
        let s = GameStore::new();
        let (g, h) = (s.canonical_of(&a), s.canonical_of(&b));
        let sum = s.add(g, h);
        prop_assert!(s.temperature(sum) <= s.temperature(g).max(s.temperature(h)));
        prop_assert_eq!(s.mast_value(sum), s.mast_value(g) + s.mast_value(h));
    }

    #[test]
    fn integer_translation(t in arb_tree(3), n in -5i64..5) {
        let s = GameStore::new();
        let g = s.canonical_of(&t);
        let shifted = s.add(g, s.integer(n));
        prop_assert_eq!(s.temperature(shifted), s.temperature(g));
        prop_assert_eq!(s.mast_value(shifted), s.mast_value(g) + Dyadic::integer(n));
    }
}
