use proptest::prelude::*;

use braidforge::garside;
use braidforge::simple;
use braidforge::word::{self, BraidWord, Canonicalizer};

fn braid_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(1..n, 0..=max_len)
            .prop_map(move |idx| BraidWord::from_indices(n, &idx).expect("in range"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rewrites_preserve_length_and_strands(w in braid_word(6, 9)) {
        for nb in word::rewrite_neighbors(&w) {
            prop_assert_eq!(nb.len(), w.len());
            prop_assert_eq!(nb.strands(), w.strands());
        }
    }

    #[test]
    fn canonical_form_is_minimal_class_member(w in braid_word(5, 8)) {
        let mut canon = Canonicalizer::default();
        let class = canon.equivalence_class(&w).unwrap();
        let c = canon.canonical_form(&w).unwrap();
        prop_assert!(class.contains(c.word()));
        prop_assert!(class.iter().all(|m| word::length_lex(c.word().letters(), m.letters()).is_le()));
        prop_assert_eq!(canon.canonical_form(c.word()).unwrap(), c);
    }

    #[test]
    fn canonical_form_is_class_invariant(w in braid_word(5, 7)) {
        let mut canon = Canonicalizer::default();
        let c = canon.canonical_form(&w).unwrap();
        for m in canon.equivalence_class(&w).unwrap() {
            prop_assert_eq!(&canon.canonical_form(&m).unwrap(), &c);
        }
    }

    #[test]
    fn equality_is_a_congruence(a in braid_word(4, 5), b in prop::collection::vec(1usize..4, 0..4)) {
        let mut canon = Canonicalizer::default();
        let n = a.strands();
        let b = BraidWord::from_indices(n, &b.into_iter().filter(|&i| i < n).collect::<Vec<_>>()).unwrap();
        let a2 = canon.canonical_form(&a).unwrap().into_word();
        prop_assert!(canon.braids_equal(&a.concat(&b).unwrap(), &a2.concat(&b).unwrap()).unwrap());
        prop_assert!(canon.braids_equal(&b.concat(&a).unwrap(), &b.concat(&a2).unwrap()).unwrap());
    }

    #[test]
    fn permutation_is_an_invariant(w in braid_word(6, 8)) {
        let mut canon = Canonicalizer::default();
        let p = word::underlying_permutation(&w);
        for m in canon.equivalence_class(&w).unwrap() {
            prop_assert_eq!(word::underlying_permutation(&m), p.clone());
        }
    }

    #[test]
    fn delta_decomposition_recomposes(idx in prop::collection::vec(1usize..3, 0..10)) {
        let mut canon = Canonicalizer::default();
        let w = BraidWord::from_indices(3, &idx).unwrap();
        let (k, rest) = garside::delta_decompose(&w, &mut canon).unwrap();
        let delta = garside::delta_word(3).unwrap();
        prop_assert!(!canon.contains_factor(rest.word(), &delta).unwrap());
        prop_assert!(canon.braids_equal(&delta.power(k).concat(rest.word()).unwrap(), &w).unwrap());
        prop_assert_eq!(3 * k + rest.len(), w.len());
    }

    #[test]
    fn simple_braids_have_distinct_letter_members(n in 2usize..7, pick in any::<prop::sample::Index>()) {
        let mut canon = Canonicalizer::default();
        let all = simple::enumerate_simple(n).unwrap();
        let b = &all[pick.index(all.len())];
        prop_assert!(b.expand().has_distinct_letters());
        prop_assert_eq!(canon.canonical_form(&b.expand()).unwrap(), b.to_canonical());
        let a = simple::conjugacy_representative(b);
        prop_assert_eq!(a.braid_length(), b.len());
        prop_assert_eq!(simple::conjugacy_representative(&simple::beta_a(&a)), a);
    }

    #[test]
    fn display_parse_round_trip(w in braid_word(9, 12)) {
        prop_assert_eq!(BraidWord::parse(w.strands(), &w.to_string()).unwrap(), w);
    }
}
