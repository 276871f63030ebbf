//! Property tests for the algebraic invariants shared across modules.

use gracelab::certificate::{eisenstein_norm_sq, extract_expansion, vander_det, verify_expansion};
use gracelab::endograph::EndoFunction;
use gracelab::labeling::{edge_labels, search_graceful, SearchOptions};
use gracelab::monoid::{compose_sequence, factorial, tree_functions, Permutation};
use proptest::prelude::*;

fn arb_endofunction(max_n: usize) -> impl Strategy<Value = EndoFunction> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n).prop_map(|values| {
            EndoFunction::new(values.into_iter().map(|v| v as u8).collect()).unwrap()
        })
    })
}

fn arb_permutation_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).map(|i| i as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|image| Permutation::from_image(image).unwrap())
}

fn arb_pair(max_n: usize) -> impl Strategy<Value = (EndoFunction, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n).prop_map(|values| {
                EndoFunction::new(values.into_iter().map(|v| v as u8).collect()).unwrap()
            }),
            arb_permutation_of(n),
        )
    })
}

fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = EndoFunction> {
    (min_n..=max_n).prop_flat_map(|n| {
        (0..factorial(n - 1)).prop_map(move |k| tree_functions(n).nth(k as usize).unwrap())
    })
}

proptest! {
    #[test]
    fn iteration_is_additive(f in arb_endofunction(6), a in 0usize..6, b in 0usize..6) {
        let lhs = f.iterate(a + b);
        let rhs = f.iterate(a).compose(&f.iterate(b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complement_preserves_edge_labels((f, sigma) in arb_pair(6)) {
        let phi = Permutation::complement(f.n());
        let flipped = phi.compose(&sigma).unwrap();
        prop_assert_eq!(
            edge_labels(&f, &sigma).unwrap(),
            edge_labels(&f, &flipped).unwrap()
        );
    }

    #[test]
    fn conjugation_preserves_graph_structure((f, sigma) in arb_pair(6)) {
        let conj = sigma.conjugate(&f).unwrap();
        prop_assert_eq!(f.summarize(), conj.summarize());
    }

    #[test]
    fn edge_labels_match_difference_vector((f, sigma) in arb_pair(6)) {
        let mut from_diffs: Vec<u8> = f
            .label_differences(&sigma)
            .unwrap()
            .iter()
            .map(|d| d.unsigned_abs() as u8)
            .collect();
        from_diffs.sort_unstable();
        let labels = edge_labels(&f, &sigma).unwrap();
        prop_assert_eq!(labels.labels(), &from_diffs[..]);
    }

    #[test]
    fn signed_incidence_rows_sum_to_zero(f in arb_endofunction(8)) {
        let m = f.signed_incidence();
        for i in 0..f.n() {
            prop_assert_eq!(m.row(i).iter().sum::<i64>(), 0);
        }
        let ones = vec![1i64; f.n()];
        prop_assert!(m.apply(&ones).iter().all(|&x| x == 0));
    }

    #[test]
    fn tree_incidence_kernel_is_one_dimensional(f in arb_tree(2, 8)) {
        prop_assert_eq!(f.signed_incidence().rank(), f.n() - 1);
        prop_assert!(f.has_attractive_fixed_point());
        prop_assert_eq!(f.summarize().component_count, 1);
    }

    #[test]
    fn enough_tree_compositions_collapse_to_zero(
        n in 2usize..=6,
        extra in 0usize..5,
        picks in proptest::collection::vec(any::<u64>(), 10),
    ) {
        // Any sequence of at least n-1 tree functions composes to the
        // constant zero map.
        let trees: Vec<EndoFunction> = tree_functions(n).collect();
        let tuple: Vec<EndoFunction> = picks
            .iter()
            .cycle()
            .take(n - 1 + extra)
            .map(|&k| trees[(k % trees.len() as u64) as usize].clone())
            .collect();
        let composed = compose_sequence(&tuple).unwrap();
        prop_assert_eq!(composed, EndoFunction::constant(n, 0));
    }

    #[test]
    fn vander_det_square_is_signflip_and_permutation_invariant(
        d in proptest::collection::vec(-30i64..30, 1..=5),
        flips in proptest::collection::vec(any::<bool>(), 5),
        shuffled in Just(()).prop_perturb(|_, mut rng| rng.random::<u64>()),
    ) {
        let det = vander_det(&d);
        let mut other: Vec<i64> = d
            .iter()
            .zip(flips.iter().chain(std::iter::repeat(&false)))
            .map(|(&x, &flip)| if flip { -x } else { x })
            .collect();
        // A deterministic shuffle driven by the perturbation seed.
        let mut seed = shuffled;
        for i in (1..other.len()).rev() {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            other.swap(i, (seed % (i as u64 + 1)) as usize);
        }
        let other_det = vander_det(&other);
        prop_assert_eq!(&det * &det, &other_det * &other_det);
    }

    #[test]
    fn eisenstein_norm_is_symmetric_and_nonnegative(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let n = eisenstein_norm_sq(a, b, c);
        prop_assert!(n >= 0);
        prop_assert_eq!(n, eisenstein_norm_sq(b, c, a));
        prop_assert_eq!(n, eisenstein_norm_sq(c, a, b));
        prop_assert_eq!(n == 0, a == b && b == c);
    }

    #[test]
    fn lex_rank_round_trips(n in 1usize..=8, k in any::<u64>()) {
        let rank = gracelab::monoid::LexRank(k % factorial(n));
        let p = Permutation::lex_unrank(rank, n).unwrap();
        prop_assert_eq!(p.lex_rank(), rank);
    }

    #[test]
    fn graceful_witnesses_expand_and_reconstruct(f in arb_tree(2, 7)) {
        let res = search_graceful(&f, SearchOptions::default()).unwrap();
        prop_assert!(res.found);
        let witness = res.witness.unwrap();
        let expansion = extract_expansion(&f, &witness).unwrap();
        prop_assert!(verify_expansion(&expansion, &f));
        prop_assert_eq!(expansion.sign.iter().filter(|&&s| s == 0).count(), 1);
    }
}
