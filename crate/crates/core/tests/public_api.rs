use cgt_core::domineering::evaluate;
use cgt_core::families::fixtures::{DRUMMOND_COLE, HOOK_WITH_TWO_SQUARES};
use cgt_core::families::{build_family, verify_proposition, FamilyKind, TallEvaluator};
use cgt_core::{Dyadic, GameStore, GridPosition, Outcome, ThermographMethod, TranspositionTable};

#[test]
fn values_from_notation() {
    let store = GameStore::new();
    let g = store.parse("{2|-2}").unwrap();
    assert_eq!(store.display(g), "±2");
    assert_eq!(store.temperature(g), Dyadic::integer(2));
    assert_eq!(store.mast_value(g), Dyadic::ZERO);
    assert_eq!(store.outcome(g), Outcome::First);
    let half = store.parse("1/2").unwrap();
    assert_eq!(store.display(store.add(half, half)), "1");
    assert_eq!(store.temperature_with(half, ThermographMethod::Direct), Dyadic::new(-1, 1));
    assert!(store.parse("{1|").is_err());
    assert_eq!("3/8".parse::<Dyadic>().unwrap(), Dyadic::new(3, 3));
    assert!("1/3".parse::<Dyadic>().is_err());
}

#[test]
fn domineering_values() {
    let store = GameStore::new();
    let table = TranspositionTable::new();
    let dc: GridPosition = DRUMMOND_COLE.parse().unwrap();
    let g = evaluate(&store, &table, &dc);
    assert_eq!(store.display(g), "±(2*)");
    assert_eq!(store.temperature(g), Dyadic::integer(2));
    let hooked: GridPosition = HOOK_WITH_TWO_SQUARES.parse().unwrap();
    assert_eq!(store.display(evaluate(&store, &table, &hooked)), "2*");
    // transposing swaps the players
    assert_eq!(evaluate(&store, &table, &dc.transpose()), store.neg(g));
}

#[test]
fn tall_family_members() {
    let store = GameStore::new();
    let table = TranspositionTable::new();
    let dcl3 = build_family(FamilyKind::Dcl, 3).unwrap();
    assert_eq!((dcl3.width(), dcl3.height()), (5, 10));
    assert!(dcl3.to_position().is_none());
    let g = TallEvaluator::new(&store, &table).evaluate(&dcl3);
    assert_eq!(store.display(g), "±2");
    assert!(verify_proposition(&store, &table, 3).unwrap().iter().all(|c| c.passed()));
    assert!(build_family(FamilyKind::L, 0).is_err());
    assert!("Lcup".parse::<FamilyKind>().is_ok());
}
