mod common;

use std::sync::OnceLock;

use notpowers::io::{parse_group, write_cayley};
use notpowers::{analyze_powers, builtin_corpus, FiniteGroup, Limits, PermutationGenSet};
use proptest::prelude::*;

use common::{is_normal_naive, naive_closure, naive_non_power_count, naive_power};

fn corpus() -> &'static [FiniteGroup] {
    static CORPUS: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    CORPUS.get_or_init(|| builtin_corpus(48).unwrap())
}

fn any_group() -> impl Strategy<Value = &'static FiniteGroup> {
    (0..corpus().len()).prop_map(|i| &corpus()[i])
}

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn power_maps_factor_through_the_exponent(g in any_group(), k in 1u64..200) {
        let e = g.exponent();
        let a = analyze_powers(g, k).unwrap();
        if k % e == 0 {
            prop_assert_eq!(a.power_image, vec![g.identity()]);
        } else {
            let reduced = analyze_powers(g, k % e).unwrap();
            prop_assert_eq!(&a.power_image, &reduced.power_image);
            prop_assert_eq!(&a.non_powers, &reduced.non_powers);
            prop_assert!(a.power_image.len() > 1);
        }
    }

    #[test]
    fn non_power_count_matches_direct_evaluation(g in any_group(), k in 1u64..30) {
        let a = analyze_powers(g, k).unwrap();
        prop_assert_eq!(a.n(), naive_non_power_count(g, k));
        prop_assert_eq!(a.theta_excess(), a.n());
        let total: usize = a.theta.values().sum();
        prop_assert_eq!(total, g.order());
        for (&x, &roots) in &a.theta {
            let direct = g.elements().filter(|&y| naive_power(g, y, k) == x).count();
            prop_assert_eq!(roots, direct);
        }
    }

    #[test]
    fn class_equation(g in any_group()) {
        let classes = g.conjugacy_classes();
        let sizes: usize = classes.iter().map(|c| c.size()).sum();
        prop_assert_eq!(sizes, g.order());
        for c in &classes {
            prop_assert_eq!(g.order() % c.size(), 0);
            prop_assert_eq!(c.size() * g.centralizer(c.representative).order(), g.order());
        }
    }

    #[test]
    fn lagrange_and_normality(g in any_group()) {
        prop_assume!(g.order() <= 32);
        for h in g.all_subgroups(400).unwrap() {
            prop_assert_eq!(g.order() % h.order(), 0);
            let closed = naive_closure(g, h.members());
            prop_assert_eq!(closed.iter().filter(|&&b| b).count(), h.order());
            prop_assert_eq!(g.is_normal(&h), is_normal_naive(g, h.members()));
        }
    }

    #[test]
    fn quotient_map_is_a_homomorphism_with_the_right_kernel(g in any_group()) {
        prop_assume!(g.order() <= 32);
        for nsub in g.normal_subgroups(400).unwrap() {
            let (q, proj) = g.quotient(&nsub).unwrap();
            prop_assert_eq!(q.order() * nsub.order(), g.order());
            for a in g.elements() {
                prop_assert_eq!(proj[a] == q.identity(), nsub.contains(a));
                for b in g.elements() {
                    prop_assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
                }
            }
        }
    }

    #[test]
    fn cayley_export_round_trips(g in any_group()) {
        let text = write_cayley(g);
        let back = parse_group(&text, &Limits::default()).unwrap();
        prop_assert_eq!(back.rows(), g.rows());
        prop_assert_eq!(back.label(), g.label());
    }

    #[test]
    fn permutation_closure_matches_oracle(p in permutation(5), q in permutation(5)) {
        let gens = PermutationGenSet::new(5, vec![p.clone(), q.clone()]).unwrap();
        let g = FiniteGroup::from_permutations(&gens, &Limits::default()).unwrap();
        // Oracle: BFS over composed permutations.
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![(0..5).collect::<Vec<usize>>()];
        while let Some(x) = stack.pop() {
            if seen.insert(x.clone()) {
                for s in [&p, &q] {
                    stack.push((0..5).map(|i| s[x[i]]).collect());
                }
            }
        }
        prop_assert_eq!(g.order(), seen.len());
        prop_assert_eq!(120 % g.order(), 0);
    }
}
