use std::collections::{BTreeSet, HashSet};

use nokwidth::essential::{
    default_root_vectors, essential_set_in, kostant_partitions, lowest_term_valuation, ExponentTuple,
    SparseExponentPolynomial,
};
use nokwidth::linalg::{q, q_frac, Q};
use nokwidth::repmod::{build_module, pbw_monomial_vector};
use nokwidth::rootsys::{RootSystem, RootVec, Weight};
use nokwidth::weyl::{
    enumeration_from_word, good_ordering, is_good_ordering, is_reduced, longest_element, Enumeration, WeylElement,
    WordVariant,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const DESK: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"];

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn desk_type() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(DESK.to_vec()).prop_map(rs)
}

fn weight_for(sys: &RootSystem, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, sys.rank()).prop_map(Weight)
}

fn nonzero_dominant(sys: RootSystem, hi: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    weight_for(&sys, 0, hi)
        .prop_filter("nonzero", |w| !w.is_zero())
        .prop_map(move |w| (sys.clone(), w))
}

/// ⟨λ, β^∨⟩ = 2(λ, β)/(β, β) with (ϖ_i, α_j) = δ_ij d_j, as an exact rational.
fn pairing_oracle(sys: &RootSystem, lambda: &Weight, beta: &RootVec) -> Q {
    let d = sys.symmetrizer();
    let n = sys.rank();
    let a = sys.cartan();
    let lb: i64 = (0..n).map(|i| lambda.0[i] * beta.0[i] * d[i]).sum();
    // (β, β) = Σ c_i c_j d_i A[i][j]
    let bb: i64 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| beta.0[i] * beta.0[j] * d[i] * a[i][j])
        .sum();
    q_frac(2 * lb, bb)
}

/// Random reduced word of w0 by random ascent from the identity.
fn random_longest_word(sys: &RootSystem, picks: &[usize]) -> Vec<usize> {
    let n = sys.rank();
    let mut w = WeylElement::identity(n);
    let mut word = Vec::new();
    let mut step = 0;
    loop {
        let ups: Vec<usize> = (0..n)
            .filter(|&i| w.apply_root(&sys.simple_root(i)).is_positive())
            .collect();
        if ups.is_empty() {
            return word;
        }
        let i = ups[picks[step % picks.len()] % ups.len()];
        step += 1;
        w = w.mul(&WeylElement::from_word(sys, &[i]).unwrap());
        word.push(i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coroot_pairing_is_the_exact_rational_value(
        (sys, lambda) in desk_type().prop_flat_map(|s| { let w = weight_for(&s, -5, 5); (Just(s), w) }),
        pick in any::<prop::sample::Index>(),
    ) {
        let beta = pick.get(sys.positive_roots()).clone();
        let exact = pairing_oracle(&sys, &lambda, &beta);
        prop_assert!(exact.is_integer());
        prop_assert_eq!(q(sys.coroot_pairing(&lambda, &beta).unwrap()), exact);
        prop_assert_eq!(sys.pairing(&lambda, &beta.neg()), -sys.pairing(&lambda, &beta));
    }

    #[test]
    fn width_is_homogeneous(
        (sys, lambda) in desk_type().prop_flat_map(|s| nonzero_dominant(s, 4)),
        l in 1i64..6,
    ) {
        prop_assert_eq!(sys.gromov_width(&lambda.scale(l)).unwrap(), l * sys.gromov_width(&lambda).unwrap());
    }

    #[test]
    fn width_over_all_roots_equals_the_parabolic_minimum(
        (sys, lambda) in desk_type().prop_flat_map(|s| nonzero_dominant(s, 4)),
    ) {
        let mut all: Vec<RootVec> = sys.positive_roots().to_vec();
        all.extend(sys.positive_roots().iter().map(|b| b.neg()));
        let brute = all
            .iter()
            .map(|b| pairing_oracle(&sys, &lambda, b).abs())
            .filter(|p| !p.is_zero())
            .min()
            .unwrap();
        let parabolic = sys
            .phi_p_plus(&lambda.support())
            .unwrap()
            .iter()
            .map(|b| sys.pairing(&lambda, b))
            .min()
            .unwrap();
        prop_assert_eq!(q(sys.gromov_width(&lambda).unwrap()), brute);
        prop_assert_eq!(sys.gromov_width(&lambda).unwrap(), parabolic);
    }

    #[test]
    fn type_a_width_matches_epsilon_differences(eps in prop::collection::vec(-6i64..6, 2..6)) {
        let n = eps.len() - 1;
        let sys = rs(&format!("A{n}"));
        let lambda = Weight(eps.windows(2).map(|w| w[0] - w[1]).collect());
        prop_assume!(!lambda.is_zero());
        let mut best = i64::MAX;
        for i in 0..=n {
            for j in i + 1..=n {
                let d = (eps[i] - eps[j]).abs();
                if d != 0 {
                    best = best.min(d);
                }
            }
        }
        prop_assert_eq!(sys.gromov_width(&lambda).unwrap(), best);
    }

    #[test]
    fn random_longest_words_induce_bijections(
        sys in desk_type(),
        picks in prop::collection::vec(0usize..8, 1..16),
        prefix in any::<bool>(),
    ) {
        let word = random_longest_word(&sys, &picks);
        prop_assert_eq!(word.len(), sys.num_positive_roots());
        prop_assert!(is_reduced(&sys, &word).unwrap());
        let full: Vec<usize> = (0..sys.rank()).collect();
        let variant = if prefix { WordVariant::Prefix } else { WordVariant::Suffix };
        let e = enumeration_from_word(&sys, &full, &word, variant).unwrap();
        let set: HashSet<RootVec> = e.roots().iter().cloned().collect();
        prop_assert_eq!(set.len(), sys.num_positive_roots());
        prop_assert!(e.roots().iter().all(|b| sys.is_positive_root(b)));
    }

    #[test]
    fn weyl_action_is_a_composition_of_reflections(
        sys in desk_type(),
        word in prop::collection::vec(0usize..4, 0..10),
        pick in any::<prop::sample::Index>(),
    ) {
        let word: Vec<usize> = word.into_iter().map(|i| i % sys.rank()).collect();
        let w = WeylElement::from_word(&sys, &word).unwrap();
        let beta = pick.get(sys.positive_roots()).clone();
        let mut step = beta.clone();
        for &i in word.iter().rev() {
            step = nokwidth::weyl::simple_reflection(&sys, i, &step).unwrap();
        }
        prop_assert_eq!(w.apply_root(&beta), step);
        prop_assert!(sys.is_root(&w.apply_root(&beta)));
        prop_assert!(w.mul(&w.inverse(&sys)).is_identity());
    }

    #[test]
    fn misplacing_a_larger_root_breaks_a_good_ordering(
        sys in desk_type(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let full: Vec<usize> = (0..sys.rank()).collect();
        let e = good_ordering(&sys, &full).unwrap();
        prop_assert!(is_good_ordering(&e));
        let (a, b) = (i.index(e.len()), j.index(e.len()));
        let (lo, hi) = (a.min(b), a.max(b));
        let mut roots = e.roots().to_vec();
        roots.swap(lo, hi);
        let swapped = Enumeration::custom(&sys, &full, roots.clone()).unwrap();
        // the later root is now earlier; it breaks the order exactly when it was larger
        let larger = nokwidth::rootsys::root_partial_order(&roots[lo], &roots[hi]);
        let between = (lo + 1..hi).any(|k| {
            nokwidth::rootsys::root_partial_order(&roots[lo], &roots[k])
                || nokwidth::rootsys::root_partial_order(&roots[k], &roots[hi])
        });
        if larger {
            prop_assert!(!is_good_ordering(&swapped));
        } else if !between {
            prop_assert!(is_good_ordering(&swapped));
        }
    }

    #[test]
    fn kostant_partitions_are_exact_and_distinct(
        sys in prop::sample::select(vec!["A2", "B2", "G2", "A3"]).prop_map(rs),
        coeffs in prop::collection::vec(0i64..4, 3),
    ) {
        let nu = RootVec(coeffs[..sys.rank()].to_vec());
        let roots = sys.positive_roots().to_vec();
        let parts = kostant_partitions(&nu, &roots);
        let distinct: BTreeSet<ExponentTuple> = parts.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), parts.len());
        for m in &parts {
            prop_assert_eq!(m.depth(&roots), nu.clone());
        }
        if nu.is_zero() {
            prop_assert_eq!(parts.len(), 1);
        }
    }

    #[test]
    fn valuation_is_multiplicative(
        p in prop::collection::btree_map(prop::collection::vec(0u32..4, 3), -5i64..5, 1..5),
        r in prop::collection::btree_map(prop::collection::vec(0u32..4, 3), -5i64..5, 1..5),
    ) {
        let build = |terms: &std::collections::BTreeMap<Vec<u32>, i64>| {
            let mut out = SparseExponentPolynomial::zero(3);
            for (m, c) in terms {
                out.add_term(ExponentTuple(m.clone()), q(*c));
            }
            out
        };
        let (p, r) = (build(&p), build(&r));
        prop_assume!(!p.is_zero() && !r.is_zero());
        let vp = lowest_term_valuation(&p).unwrap();
        let vr = lowest_term_valuation(&r).unwrap();
        prop_assert_eq!(lowest_term_valuation(&p.mul(&r)).unwrap(), vp.add(&vr));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn essential_sets_ignore_root_vector_scaling(
        t in prop::sample::select(vec!["A2", "B2", "G2"]),
        lam in prop::collection::vec(0i64..=1, 2),
        scales in prop::collection::vec((1i64..9, 1i64..9, any::<bool>()), 6),
    ) {
        let sys = rs(t);
        let lambda = Weight(lam);
        let full: Vec<usize> = (0..sys.rank()).collect();
        let e = good_ordering(&sys, &full).unwrap();
        let m = build_module(&sys, &lambda).unwrap();
        let base = default_root_vectors(&sys, &e).unwrap();
        let reference = essential_set_in(&m, &e, base.clone()).unwrap();
        let scaled = base
            .iter()
            .zip(&scales)
            .map(|(x, (n, d, neg))| x.scaled(&q_frac(if *neg { -n } else { *n }, *d)))
            .collect();
        let got = essential_set_in(&m, &e, scaled).unwrap();
        prop_assert_eq!(got.tuples(), reference.tuples());
        prop_assert_eq!(reference.len() as u128, sys.weyl_dim(&lambda).unwrap());
        for entry in reference.entries() {
            prop_assert!(!pbw_monomial_vector(&m, e.roots(), &entry.tuple.0).unwrap().is_zero());
        }
    }

    #[test]
    fn module_dimensions_match_the_weyl_formula(
        (sys, lambda) in prop::sample::select(vec!["A2", "B2", "G2", "A3", "C3"])
            .prop_map(rs)
            .prop_flat_map(|s| { let w = weight_for(&s, 0, 1); (Just(s), w) }),
    ) {
        let m = build_module(&sys, &lambda).unwrap();
        prop_assert_eq!(m.total_dim(), sys.weyl_dim(&lambda).unwrap());
        prop_assert!(m.grams_positive_definite());
    }
}

#[test]
fn longest_element_negates_positive_roots() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
        let sys = rs(t);
        let full: Vec<usize> = (0..sys.rank()).collect();
        let (w0, word) = longest_element(&sys, &full).unwrap();
        assert_eq!(word.len(), sys.num_positive_roots(), "{t}");
        for b in sys.positive_roots() {
            assert!(sys.is_positive_root(&w0.apply_root(b).neg()), "{t}");
        }
    }
}
