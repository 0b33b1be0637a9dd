mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use quintperm::bijections::{
    alpha, beta, classify, decompose_type_one, decompose_type_two, phi, psi, CaseTag, Side,
};
use quintperm::{classes, permcore::enumerate_class, Word};

use common::{alpha_structure, lrmax_count, phi_descents_glued, quintuple, Violation};

const N: usize = 7;

fn word(v: &[u32]) -> Word {
    Word::new(v.to_vec()).unwrap()
}

#[test]
fn phi_is_a_bijection_preserving_five_statistics() {
    for n in 0..=N {
        let mut image = BTreeSet::new();
        for w in enumerate_class(n, classes::type_one()) {
            let v = phi(&w).unwrap();
            assert!(classes::type_two().is_avoided_by(v.letters()), "{w} -> {v}");
            let (a, b) = (quintuple(w.letters()), quintuple(v.letters()));
            assert_eq!((&a.br, &a.ides, &a.lrmax, &a.lrmin, &a.iar), (&b.br, &b.ides, &b.lrmax, &b.lrmin, &b.iar), "{w}");
            assert_eq!(psi(&v).unwrap(), w);
            phi_descents_glued(w.letters(), v.letters()).unwrap();
            image.insert(v);
        }
        let target: BTreeSet<Word> = enumerate_class(n, classes::type_two()).collect();
        assert_eq!(image, target, "n = {n}");
    }
}

#[test]
fn decompositions_reassemble() {
    for n in 1..=N {
        for w in enumerate_class(n, classes::type_one()) {
            let d = decompose_type_one(&w).unwrap();
            assert_eq!(d.reassemble(&w.letters()[..d.max_position]), w);
            assert_eq!(d.block_count(), quintuple(w.letters()).br.len(), "{w}");
        }
        for v in enumerate_class(n, classes::type_two()) {
            let d = decompose_type_two(&v).unwrap();
            let mut rebuilt = Vec::new();
            for (&(start, len), gap) in d.runs.iter().zip(&d.gap_blocks) {
                rebuilt.extend_from_slice(&v.letters()[start - 1..start - 1 + len]);
                rebuilt.extend_from_slice(gap.letters());
            }
            assert_eq!(rebuilt, v.letters());
            assert!(d.gap_blocks[..d.k()].iter().all(|g| !g.is_empty()), "{v}");
        }
    }
}

#[test]
fn alpha_round_trips_and_preserves_statistics() {
    for n in 0..=N {
        let mut image = BTreeSet::new();
        for w in enumerate_class(n, classes::alpha_source()) {
            let v = alpha(&w).unwrap();
            assert!(classes::alpha_target().is_avoided_by(v.letters()));
            assert_eq!(beta(&v).unwrap(), w);
            let (a, b) = (quintuple(w.letters()), quintuple(v.letters()));
            assert_eq!((&a.ides, &a.lrmax, &a.lrmin, &a.rlmax, &a.iar), (&b.ides, &b.lrmax, &b.lrmin, &b.rlmax, &b.iar));
            image.insert(v);
        }
        for v in enumerate_class(n, classes::alpha_target()) {
            assert_eq!(alpha(&beta(&v).unwrap()).unwrap(), v);
        }
        assert_eq!(image.len() as u64, quintperm::permcore::count_class_par(n, classes::alpha_target()));
    }
}

#[test]
fn every_word_has_one_case_and_the_structure_holds() {
    for n in 1..=N {
        for w in enumerate_class(n, classes::alpha_source()) {
            let tag = classify(&w, Side::Source).unwrap();
            let v = alpha(&w).unwrap();
            let violations = alpha_structure(w.letters(), v.letters(), tag);
            // The only failure is the descent at l_{s-1} when the maximum is last.
            let s = lrmax_count(w.letters());
            for f in &violations {
                assert_eq!(tag, CaseTag::TrivialRlmax1, "{w} -> {v}: {f:?}");
                assert_eq!(*f, Violation::Split { i: s - 1, descent: true }, "{w} -> {v}");
            }
            if n >= 5 && w.letters() == [3, 1, 4, 2, 5] {
                assert_eq!(violations, vec![Violation::Split { i: 2, descent: true }]);
            }
        }
        for v in enumerate_class(n, classes::alpha_target()) {
            classify(&v, Side::Target).unwrap();
        }
    }
}

#[test]
fn every_case_occurs() {
    let mut seen = BTreeSet::new();
    for w in enumerate_class(7, classes::alpha_source()) {
        seen.insert(classify(&w, Side::Source).unwrap());
    }
    for v in enumerate_class(7, classes::alpha_target()) {
        seen.insert(classify(&v, Side::Target).unwrap());
    }
    let all: BTreeSet<CaseTag> = CaseTag::ALL.into_iter().collect();
    assert_eq!(seen, all);
}

#[test]
fn general_words_behave_like_their_standardization() {
    let w = word(&[40, 10, 30, 0, 20, 50]);
    assert_eq!(alpha(&w).unwrap().standardize(), alpha(&w.standardize()).unwrap());
    assert_eq!(beta(&w).unwrap().standardize(), beta(&w.standardize()).unwrap());
    assert_eq!(phi(&word(&[7, 3, 9])).unwrap().standardize(), phi(&word(&[2, 1, 3])).unwrap());
}

#[test]
fn boundary_descents_can_split() {
    // The descent right after the maximum is not kept by the block map ...
    let w = word(&[3, 1, 4, 2]);
    assert_eq!(phi(&w).unwrap(), word(&[3, 1, 2, 4]));
    // ... and so neither is the descent at l_{s-1} when the maximum is last.
    let w = word(&[3, 1, 4, 2, 5]);
    assert_eq!(classify(&w, Side::Source).unwrap(), CaseTag::TrivialRlmax1);
    assert_eq!(alpha(&w).unwrap(), word(&[3, 1, 2, 4, 5]));
}

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn alpha_beta_inverse_on_random_avoiders(p in perm_strategy(12)) {
        let w = word(&p);
        if classes::alpha_source().is_avoided_by(&p) {
            let v = alpha(&w).unwrap();
            prop_assert_eq!(beta(&v).unwrap(), w.clone());
            let (a, b) = (quintuple(&p), quintuple(v.letters()));
            prop_assert_eq!((a.ides, a.lrmax, a.lrmin, a.rlmax, a.iar), (b.ides, b.lrmax, b.lrmin, b.rlmax, b.iar));
        } else {
            prop_assert!(alpha(&w).is_err());
        }
    }
}
