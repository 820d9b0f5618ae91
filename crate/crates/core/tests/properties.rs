use std::collections::BTreeSet;

use proptest::prelude::*;
use weylbrick::weyl::RootSequence;
use weylbrick::{BinvMethod, Root, RootSystem, WeylElement, Word};

const SYSTEMS: [&str; 6] = ["A3", "A4", "D4", "D5", "E6", "E7"];

fn system_and_word() -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
    (0..SYSTEMS.len()).prop_flat_map(|k| {
        let rs = RootSystem::preset(SYSTEMS[k]).unwrap();
        let n = rs.rank();
        (Just(rs), prop::collection::vec(0..n, 0..30))
    })
}

fn element(rs: &RootSystem, letters: &[usize]) -> WeylElement {
    rs.evaluate(&Word::new(letters.to_vec())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exchange_property((rs, letters) in system_and_word(), i in 0usize..8) {
        let i = i % rs.rank();
        let w = element(&rs, &letters);
        let l = rs.length(&w);
        let ws = rs.right_mul_simple(&w, i);
        let down = rs.length(&ws) < l;
        prop_assert_eq!(rs.length(&ws).abs_diff(l), 1);
        prop_assert_eq!(down, rs.is_right_descent(&w, i));
        prop_assert_eq!(down, w.apply(&rs.simple_root(i)).is_negative());
    }

    #[test]
    fn length_is_inversion_count((rs, letters) in system_and_word()) {
        let w = element(&rs, &letters);
        let canon = rs.canonical_reduced_word(&w);
        prop_assert_eq!(canon.len(), rs.inversion_set(&w).len());
        prop_assert_eq!(rs.evaluate(&canon).unwrap(), w.clone());
        prop_assert!(rs.is_reduced(&canon).unwrap());
        prop_assert!(letters.len() >= canon.len());
        prop_assert_eq!(rs.inverse(&rs.inverse(&w)), w);
    }

    #[test]
    fn inversions_compose_along_reduced_products(
        (rs, a) in system_and_word(),
        b in prop::collection::vec(0usize..8, 0..20),
    ) {
        let b: Vec<usize> = b.into_iter().map(|x| x % rs.rank()).collect();
        let v = element(&rs, &a);
        let w = element(&rs, &b);
        let vw = v.compose(&w);
        if rs.length(&vw) == rs.length(&v) + rs.length(&w) {
            let mut expected = rs.inversion_set(&v);
            expected.extend(rs.inversion_set(&w).iter().map(|r| v.apply(r)));
            prop_assert_eq!(rs.inversion_set(&vw), expected);
        }
    }

    #[test]
    fn root_sequences_pass_papi((rs, letters) in system_and_word()) {
        let w = element(&rs, &letters);
        let word = rs.canonical_reduced_word(&w);
        let seq = rs.root_sequence(&word).unwrap();
        prop_assert!(rs.papi_check(&seq).is_ok());
        let as_set: BTreeSet<Root> = seq.0.iter().cloned().collect();
        prop_assert_eq!(as_set, rs.inversion_set(&w));
    }

    #[test]
    fn swapped_sequences_fail_papi((rs, letters) in system_and_word(), k in 0usize..40) {
        let w = element(&rs, &letters);
        let seq = rs.root_sequence(&rs.canonical_reduced_word(&w)).unwrap().0;
        if seq.len() >= 2 {
            let k = k % (seq.len() - 1);
            let mut swapped = seq.clone();
            swapped.swap(k, k + 1);
            // a swap of neighbours stays a root sequence iff they are orthogonal
            let orthogonal = rs.pairing(&seq[k], &seq[k + 1]).unwrap() == 0;
            prop_assert_eq!(rs.papi_check(&RootSequence(swapped)).is_ok(), orthogonal);
        }
    }

    #[test]
    fn binv_methods_agree((rs, letters) in system_and_word()) {
        let w = element(&rs, &letters);
        let def = rs.bruhat_inversions(&w, BinvMethod::Definition);
        prop_assert_eq!(&def, &rs.bruhat_inversions(&w, BinvMethod::Deletion));
        prop_assert_eq!(&def, &rs.bruhat_inversions(&w, BinvMethod::Sum));
        let deleted = rs.bruhat_inversions_deletion(&Word::new(letters.clone()));
        if rs.is_reduced(&Word::new(letters.clone())).unwrap() {
            prop_assert_eq!(&deleted.unwrap(), &def);
        }
        let jhp = rs.jhp_check(&w).unwrap();
        prop_assert_eq!(jhp.verdict, jhp.linearly_independent);
        prop_assert!(def.len() <= rs.inversion_set(&w).len());
        prop_assert!(!w.is_identity() || def.is_empty());
    }

    #[test]
    fn bruhat_covers_drop_length_by_one((rs, letters) in system_and_word()) {
        let w = element(&rs, &letters);
        let l = rs.length(&w);
        for (_, u) in rs.bruhat_covers_down(&w) {
            prop_assert_eq!(rs.length(&u) + 1, l);
        }
    }
}

fn all_systems() -> Vec<RootSystem> {
    ["A1", "A2", "A3", "A5", "D4", "D6", "E6", "E7", "E8"]
        .iter()
        .map(|n| RootSystem::preset(n).unwrap())
        .collect()
}

#[test]
fn pairings_of_distinct_roots_are_small() {
    for rs in all_systems() {
        let pos = rs.positive_roots();
        for a in pos {
            for b in pos {
                let p = rs.pairing(a, b).unwrap();
                if a == b {
                    assert_eq!(p, 2);
                } else {
                    assert!((-1..=1).contains(&p), "{} {:?} {:?}", rs.diagram(), a, b);
                    let neg = -b;
                    assert_eq!(rs.pairing(a, &neg).unwrap(), -p);
                }
            }
        }
    }
}

#[test]
fn sums_of_roots_have_pairing_minus_one() {
    for rs in all_systems() {
        let pos = rs.positive_roots();
        for a in pos {
            for b in pos {
                if rs.is_root(&(a + b)) {
                    assert_eq!(rs.pairing(a, b).unwrap(), -1);
                }
            }
        }
    }
}

#[test]
fn reflections_permute_roots() {
    for rs in all_systems() {
        let mut all: Vec<Root> = rs.positive_roots().to_vec();
        all.extend(rs.positive_roots().iter().map(|r| -r));
        let set: BTreeSet<Root> = all.iter().cloned().collect();
        for a in rs.positive_roots() {
            let image: BTreeSet<Root> = all.iter().map(|b| rs.reflect(a, b).unwrap()).collect();
            assert_eq!(image, set);
            for b in &all {
                assert_eq!(&rs.reflect(a, &rs.reflect(a, b).unwrap()).unwrap(), b);
            }
        }
    }
}

#[test]
fn poincare_polynomials_of_small_groups() {
    for name in ["A2", "A3"] {
        let rs = RootSystem::preset(name).unwrap();
        for w in rs.all_elements(weylbrick::DEFAULT_CAP).unwrap() {
            let a = rs
                .bruhat_interval_poincare(&w, weylbrick::DEFAULT_CAP)
                .unwrap();
            let l = rs.length(&w);
            assert_eq!(a.len(), l + 1);
            assert_eq!(a[0], 1);
            assert_eq!(a[l], 1);
            if l >= 1 {
                assert_eq!(a[1], rs.support(&w).len());
                assert_eq!(a[l - 1], rs.bruhat_inversions_def(&w).len());
            }
        }
    }
}
