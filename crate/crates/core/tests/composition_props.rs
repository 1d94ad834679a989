use std::collections::BTreeSet;

use proptest::prelude::*;
use qsc_core::{compositions_of, Composition};

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=4, 0..=5).prop_map(|p| Composition::new(p).unwrap())
}

#[test]
fn reverse_is_an_involution() {
    for n in 0..=10 {
        for a in compositions_of(n, None) {
            assert_eq!(a.reverse().reverse(), a);
        }
    }
}

#[test]
fn descent_sets_biject_with_compositions() {
    for n in 1..=10 {
        let all = compositions_of(n, None);
        assert_eq!(all.len(), 1 << (n - 1));
        let mut seen = BTreeSet::new();
        for a in &all {
            let set = a.descent_set();
            assert!(set.iter().all(|&d| 1 <= d && d < n));
            assert_eq!(&Composition::from_descent_set(&set, n).unwrap(), a);
            assert!(seen.insert(set));
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=7 {
        let all = compositions_of(n, None);
        let dom = |a: &Composition, b: &Composition| a.dominates(b).unwrap();
        for a in &all {
            assert!(dom(a, a));
            for b in &all {
                if dom(a, b) && dom(b, a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if dom(a, b) && dom(b, c) {
                        assert!(dom(a, c), "{a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn sorted_rearrangement_dominates_its_length_class() {
    for n in 1..=8 {
        for len in 1..=n as usize {
            for a in compositions_of(n, Some(len)) {
                assert!(a.sorted_decreasing().dominates(&a).unwrap());
                for b in compositions_of(n, Some(len)) {
                    if a.is_rearrangement(&b) {
                        assert!(a.sorted_decreasing().dominates(&b).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_order_is_sorted_and_complete() {
    for n in 0..=8 {
        let all = compositions_of(n, None);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for len in 0..=n as usize {
            let some = compositions_of(n, Some(len));
            assert!(some.iter().all(|c| c.len() == len));
            assert_eq!(some.len(), all.iter().filter(|c| c.len() == len).count());
        }
    }
}

proptest! {
    #[test]
    fn refinement_count(a in composition()) {
        let expected: usize = a.parts().iter().map(|&p| 1usize << (p - 1)).product();
        let refs = a.refinements();
        prop_assert_eq!(refs.len(), expected);
        prop_assert!(refs.contains(&a));
        for r in &refs {
            prop_assert_eq!(r.size(), a.size());
            prop_assert!(a.descent_set().is_subset(&r.descent_set()));
        }
    }

    #[test]
    fn text_and_json_round_trip(a in composition()) {
        prop_assert_eq!(a.to_string().parse::<Composition>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(&json, &format!("\"{a}\""));
        prop_assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), a);
    }

    #[test]
    fn rearrangement_is_symmetric(a in composition(), b in composition()) {
        prop_assert_eq!(a.is_rearrangement(&b), b.is_rearrangement(&a));
        prop_assert!(a.is_rearrangement(&a.reverse()));
    }
}
