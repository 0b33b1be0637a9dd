mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use quintperm::permcore::{collect_class_par, contains_pattern, count_class_par, enumerate_class, statistics};
use quintperm::{classes, Pattern, PatternSet, Word};

use common::{all_perms, contained_patterns, counts, quintuple};

fn word(v: &[u32]) -> Word {
    Word::new(v.to_vec()).unwrap()
}

fn all_patterns(kmax: usize) -> Vec<Vec<u32>> {
    (1..=kmax).flat_map(all_perms).collect()
}

#[test]
fn containment_agrees_with_subsequence_oracle() {
    let patterns: Vec<(Vec<u32>, Pattern)> =
        all_patterns(5).into_iter().map(|p| (p.clone(), Pattern::new(word(&p)).unwrap())).collect();
    for n in 1..=8 {
        for w in all_perms(n) {
            let inside = contained_patterns(&w, 5);
            for (p, pat) in &patterns {
                assert_eq!(pat.is_contained_in(&w), inside.contains(p), "{w:?} / {p:?}");
            }
        }
    }
}

#[test]
fn containment_rejects_bad_patterns() {
    let w = word(&[1, 2, 3]);
    assert!(Pattern::from_digits("11").is_err());
    assert!(contains_pattern(&w, &word(&[1, 3])).is_err());
    assert!(!contains_pattern(&w, &word(&[2, 1])).unwrap());
}

#[test]
fn pruned_enumeration_matches_filtering() {
    let mut sets: Vec<(&str, PatternSet)> = vec![
        ("type one", classes::type_one().clone()),
        ("type two", classes::type_two().clone()),
        ("alpha source", classes::alpha_source().clone()),
        ("alpha target", classes::alpha_target().clone()),
        ("ms", classes::ms_class().clone()),
        ("inverse target", classes::inverse_target().clone()),
    ];
    sets.push(("21", PatternSet::from_digit_strs(&["21"])));
    sets.push(("K07", classes::thirteen()[6].clone()));
    for n in 1..=8 {
        let perms = all_perms(n);
        let inside: Vec<BTreeSet<Vec<u32>>> = perms.iter().map(|w| contained_patterns(w, 5)).collect();
        for (name, ps) in &sets {
            let expected: Vec<Vec<u32>> = perms
                .iter()
                .zip(&inside)
                .filter(|(_, c)| ps.patterns().iter().all(|p| !c.contains(p.word().letters())))
                .map(|(w, _)| w.clone())
                .collect();
            let got: Vec<Vec<u32>> = enumerate_class(n, ps).map(Word::into_letters).collect();
            assert_eq!(got, expected, "{name}, n = {n}");
            let par: Vec<Vec<u32>> = collect_class_par(n, ps).into_iter().map(Word::into_letters).collect();
            assert_eq!(par, expected, "{name}, n = {n}");
            assert_eq!(count_class_par(n, ps), expected.len() as u64);
        }
    }
}

#[test]
fn small_class_sizes() {
    assert_eq!(enumerate_class(1, &PatternSet::from_digit_strs(&["21"])).count(), 1);
    assert_eq!(enumerate_class(4, classes::type_one()).count(), 22);
    assert_eq!(enumerate_class(7, classes::alpha_source()).count(), 3720);
}

#[test]
fn statistics_agree_with_definitions() {
    for n in 1..=8 {
        for p in all_perms(n) {
            let w = word(&p);
            let st = statistics(&w).unwrap();
            let c = counts(&p);
            let q = quintuple(&p);
            assert_eq!(st.des.len() + st.asc, n - 1);
            assert_eq!(st.ides.len() + st.iasc, n - 1);
            assert_eq!((st.asc, st.iasc, st.exc, st.lmaxz), (c.asc, c.iasc, c.exc, c.lmaxz), "{w}");
            assert_eq!((st.lrmax.len(), st.lrmin.len(), st.rlmax.len(), st.rlmin.len()), (c.lrmax, c.lrmin, c.rlmax, c.rlmin));
            assert_eq!((&st.ides, &st.lrmax, &st.lrmin, &st.rlmax, &st.iar, &st.br), (&q.ides, &q.lrmax, &q.lrmin, &q.rlmax, &q.iar, &q.br));
            // Ides as the descent set of the inverse, read as values.
            let inv_des: BTreeSet<u32> = statistics(&w.inverse().unwrap()).unwrap().des.iter().map(|&i| i as u32).collect();
            assert_eq!(st.ides, inv_des, "{w}");
        }
    }
}

#[test]
fn statistics_examples() {
    let w: Word = "2 6 4 7 10 14 9 15 17 20 19 16 18 11 12 13 8 3 5 1".parse().unwrap();
    let st = statistics(&w).unwrap();
    assert_eq!(st.lrmax, BTreeSet::from([2, 6, 7, 10, 14, 15, 17, 20]));
    assert_eq!(st.iar, BTreeSet::from([2, 6]));
    assert_eq!(st.br, BTreeSet::from([6, 14, 20]));
    let st = statistics(&"5 8 2 9 3 7 4 1 6".parse().unwrap()).unwrap();
    assert_eq!((st.exc, st.lmaxz), (4, 4));
    assert_eq!(st.rlmin, BTreeSet::from([1, 6]));
    assert!(statistics(&Word::empty()).is_err());
}

#[test]
fn inverse_carries_statistics_between_classes() {
    for n in 1..=8 {
        let source = enumerate_class(n, classes::inverse_target()).collect::<Vec<_>>();
        let mut image = BTreeSet::new();
        for p in &source {
            let q = p.inverse().unwrap();
            let (a, b) = (statistics(p).unwrap(), statistics(&q).unwrap());
            assert_eq!((a.iasc, a.rlmax.len(), a.lrmax.len()), (b.asc, b.rlmax.len(), b.rlmin.len()), "{p}");
            image.insert(q);
        }
        let target: BTreeSet<Word> = enumerate_class(n, classes::alpha_target()).collect();
        assert_eq!(image, target, "n = {n}");
    }
}

fn distinct_word() -> impl Strategy<Value = Word> {
    prop::collection::btree_set(0u32..60, 0..12)
        .prop_flat_map(|set| Just(set.into_iter().collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Word::new(v).unwrap())
}

proptest! {
    #[test]
    fn symmetries_are_involutions(w in distinct_word()) {
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        let p = w.standardize();
        prop_assert_eq!(p.inverse().unwrap().inverse().unwrap(), p.clone());
        prop_assert_eq!(p.complement().unwrap().complement().unwrap(), p.clone());
    }

    #[test]
    fn word_statistics_follow_the_letters(w in distinct_word()) {
        prop_assume!(!w.is_empty());
        let (a, b) = (statistics(&w).unwrap(), statistics(&w.standardize()).unwrap());
        let mut sorted = w.letters().to_vec();
        sorted.sort_unstable();
        let rank = |set: &BTreeSet<u32>| -> BTreeSet<u32> {
            set.iter().map(|y| sorted.iter().position(|z| z == y).unwrap() as u32 + 1).collect()
        };
        prop_assert_eq!(&a.des, &b.des);
        prop_assert_eq!(&a.ides, &b.ides);
        prop_assert_eq!(rank(&a.lrmax), b.lrmax);
        prop_assert_eq!(rank(&a.rlmin), b.rlmin);
        prop_assert_eq!(rank(&a.iar), b.iar);
        prop_assert_eq!(rank(&a.br), b.br);
        prop_assert_eq!(a.exc, b.exc);
    }

    #[test]
    fn containment_survives_appending(w in distinct_word(), extra in 100u32..200) {
        let p = Word::new(vec![2, 1]).unwrap();
        let mut longer = w.letters().to_vec();
        longer.push(extra);
        let longer = Word::new(longer).unwrap();
        if contains_pattern(&w, &p).unwrap() {
            prop_assert!(contains_pattern(&longer, &p).unwrap());
        }
    }
}

#[test]
fn symmetry_examples() {
    assert_eq!(word(&[2, 3, 1]).inverse().unwrap(), word(&[3, 1, 2]));
    assert_eq!(word(&[1, 2, 3]).reverse(), word(&[3, 2, 1]));
    assert_eq!(word(&[1, 3, 2]).complement().unwrap(), word(&[3, 1, 2]));
    assert!(word(&[1, 4]).inverse().is_err());
}
