use std::collections::BTreeSet;

use braidforge::counting;
use braidforge::garside;
use braidforge::simple;
use braidforge::word::{self, Canonicalizer};

#[test]
fn rewrite_neighbours_are_symmetric() {
    for n in 2..=5 {
        let max_len = if n <= 3 { 8 } else { 6 };
        for w in word::enumerate_words_up_to(n, max_len).unwrap() {
            for nb in word::rewrite_neighbors(&w) {
                assert!(
                    word::rewrite_neighbors(&nb).contains(&w),
                    "{w} -> {nb} not reversible"
                );
            }
        }
    }
}

/// Images of the free generators under the Artin action of a braid word;
/// the action is faithful, so distinct tuples mean distinct braids.
fn artin_images(n: usize, letters: &[usize]) -> Vec<Vec<i32>> {
    fn reduce_push(out: &mut Vec<i32>, g: i32) {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    for &i in letters {
        let (a, b) = (i as i32, i as i32 + 1);
        for img in images.iter_mut() {
            let mut out = Vec::new();
            for &g in img.iter() {
                let sub: Vec<i32> = match g {
                    g if g == a => vec![a, b, -a],
                    g if g == b => vec![a],
                    g if g == -a => vec![a, -b, -a],
                    g if g == -b => vec![-a],
                    g => vec![g],
                };
                for h in sub {
                    reduce_push(&mut out, h);
                }
            }
            *img = out;
        }
    }
    images
}

#[test]
fn distinct_braid_counts_match_free_group_action() {
    let mut canon = Canonicalizer::default();
    for (n, max_k) in [(3usize, 7usize), (4, 5), (5, 4)] {
        for k in 0..=max_k {
            let words = word::enumerate_words(n, k).unwrap();
            let by_action: BTreeSet<_> = words
                .iter()
                .map(|w| artin_images(n, &w.indices()))
                .collect();
            let by_rewriting: BTreeSet<_> = words
                .iter()
                .map(|w| canon.canonical_form(w).unwrap())
                .collect();
            assert_eq!(by_action.len(), by_rewriting.len(), "n = {n}, k = {k}");
            for w in &words {
                let c = canon.canonical_form(w).unwrap();
                assert_eq!(
                    artin_images(n, &w.indices()),
                    artin_images(n, &c.word().indices())
                );
            }
        }
    }
}

#[test]
fn divisor_forms_are_canonical() {
    let mut canon = Canonicalizer::default();
    for n in 2..=6 {
        let forms = garside::enumerate_divisors(n).unwrap();
        assert_eq!(
            garside::first_noncanonical_divisor(&forms, &mut canon).unwrap(),
            None
        );
    }
}

#[test]
fn simple_forms_are_canonical_and_distinct() {
    let mut canon = Canonicalizer::default();
    for n in 1..=7 {
        let forms = simple::enumerate_simple(n).unwrap();
        let mut seen = BTreeSet::new();
        for f in &forms {
            let c = canon.canonical_form(&f.expand()).unwrap();
            assert_eq!(c.word(), &f.expand());
            assert!(seen.insert(c));
        }
    }
}

#[test]
fn simple_braids_are_the_divisors_with_distinct_letters() {
    let mut canon = Canonicalizer::default();
    for n in 2..=5 {
        let mut from_divisors = BTreeSet::new();
        for d in garside::divisor_set(n).unwrap() {
            if simple::is_simple(d.word(), &mut canon).unwrap() {
                from_divisors.insert(d);
            }
        }
        assert_eq!(from_divisors, simple::simple_set(n).unwrap());
    }
}

#[test]
fn s_table_matches_length_profile() {
    let s = counting::s_table(11);
    for n in 1..=11 {
        let mut profile = vec![0u128; n];
        for b in simple::enumerate_simple(n).unwrap() {
            profile[b.len()] += 1;
        }
        assert_eq!(profile, s[n], "n = {n}");
    }
}

#[test]
fn c_table_matches_grouped_cycle_types() {
    for n in 1..=9 {
        let mut seen = BTreeSet::new();
        for b in simple::enumerate_simple(n).unwrap() {
            seen.insert((
                b.len(),
                simple::conjugacy_representative(&b).parts().to_vec(),
            ));
        }
        let grouped: Vec<u128> = (0..n)
            .map(|i| seen.iter().filter(|(l, _)| *l == i).count() as u128)
            .collect();
        assert_eq!(grouped, counting::c_table(n), "n = {n}");
    }
}

#[test]
fn partition_table_matches_direct_enumeration() {
    fn count(m: usize, k: usize, max_part: usize) -> u128 {
        if k == 0 {
            return u128::from(m == 0);
        }
        (1..=max_part.min(m)).map(|p| count(m - p, k - 1, p)).sum()
    }
    let table = counting::PartitionTable::new(18);
    for m in 0..=18 {
        for k in 0..=m {
            assert_eq!(table.get(m, k), count(m, k, m), "P({m},{k})");
        }
    }
}
