use pairstab::gitweights::Condition;
use pairstab::{
    brute_force_verdict_on, check_sectional, condition_rows, cone_coefficients, critical_indices,
    critical_mu, eta_delta_conversion, hilbert_verdict, mu_hat, special_weight_vector,
    subspace_criterion, BasisProfile, Direction, Mode, PairProblem, Rational, RationalPolynomial,
    SubobjectWitness, TargetSheafDescriptor, VarietyContext, WeightLattice, WeightVector,
};
use proptest::prelude::*;

fn eta() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=10).prop_map(|(n, d)| Rational::new(n, d))
}

fn profile(max_p: usize) -> impl Strategy<Value = BasisProfile> {
    (2..=max_p)
        .prop_flat_map(|p| (Just(p), 1..=p))
        .prop_flat_map(|(p, r)| {
            let all = BasisProfile::all(p, r);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

/// Sorted, zero-sum, non-constant rational weights of length `p`.
fn weight_vector(p: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec((-50i64..=50, 1i64..=7), p)
        .prop_map(|raw| {
            let mut v: Vec<Rational> = raw.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
            v.sort();
            let mean = v.iter().sum::<Rational>() / Rational::from(v.len());
            v.iter().map(|x| x - &mean).collect::<Vec<_>>()
        })
        .prop_filter_map("constant", |v| WeightVector::new(v).ok())
}

fn reconstruct(gamma: &WeightVector) -> Vec<Rational> {
    let p = gamma.len();
    let mut acc = vec![Rational::zero(); p];
    for (i, c) in cone_coefficients(gamma).iter().enumerate() {
        let special = special_weight_vector(p, i + 1).unwrap();
        for (a, g) in acc.iter_mut().zip(special.as_slice()) {
            *a += &(c * g);
        }
    }
    acc
}

#[test]
fn cone_decomposition_on_small_lattices() {
    for p in 2..=5 {
        for g in WeightLattice::new(p, 1).unwrap().iter() {
            let ints: Vec<i64> = g.iter().map(|&x| i64::from(x)).collect();
            let gamma = WeightVector::from_integers(&ints).unwrap();
            assert_eq!(reconstruct(&gamma), gamma.as_slice());
            assert!(cone_coefficients(&gamma).iter().all(|c| !c.is_negative()));
        }
    }
}

#[test]
fn table_matches_enumeration_for_small_p() {
    let etas = [
        Rational::new(1, 4),
        Rational::new(2, 3),
        Rational::one(),
        Rational::new(7, 3),
    ];
    for p in 2..=4 {
        let lattice = WeightLattice::new(p, p as i64).unwrap();
        for r in 1..=p {
            for profile in BasisProfile::all(p, r) {
                for eta in &etas {
                    for mode in [Mode::Semistable, Mode::Stable] {
                        let fast = hilbert_verdict(&profile, eta, mode).unwrap().verdict;
                        let slow = brute_force_verdict_on(&lattice, &profile, eta, mode).unwrap();
                        assert_eq!(fast.satisfied, slow.satisfied, "{profile:?} η={eta} {mode}");
                        assert_eq!(fast.strict, slow.strict, "{profile:?} η={eta} {mode}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn cone_decomposition_at_large_p(gamma in weight_vector(20)) {
        prop_assert_eq!(reconstruct(&gamma), gamma.as_slice());
    }

    #[test]
    fn critical_mu_is_mu_hat_on_special_vectors(profile in profile(8), eta in eta()) {
        for i in 1..profile.p() {
            let gamma = special_weight_vector(profile.p(), i).unwrap();
            prop_assert_eq!(
                mu_hat(&profile, &gamma, &eta).unwrap(),
                critical_mu(&profile, &eta, i).unwrap()
            );
        }
    }

    #[test]
    fn mu_hat_is_linear_on_the_cone(profile in profile(7), eta in eta(), seed in prop::collection::vec(0i64..=5, 6)) {
        let p = profile.p();
        let coeffs: Vec<Rational> = (0..p - 1).map(|i| Rational::from(seed[i % seed.len()])).collect();
        prop_assume!(coeffs.iter().any(Rational::is_positive));
        let mut gamma = vec![Rational::zero(); p];
        let mut expected = Rational::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let special = special_weight_vector(p, i + 1).unwrap();
            for (a, g) in gamma.iter_mut().zip(special.as_slice()) {
                *a += &(c * g);
            }
            expected += &(c * &critical_mu(&profile, &eta, i + 1).unwrap());
        }
        let gamma = WeightVector::new(gamma).unwrap();
        prop_assert_eq!(mu_hat(&profile, &gamma, &eta).unwrap(), expected);
    }

    #[test]
    fn critical_values_decrease_between_jumps(profile in profile(9), eta in eta()) {
        let jumps = critical_indices(&profile);
        for i in 1..profile.p() - 1 {
            if !jumps.contains(&i) {
                prop_assert!(
                    critical_mu(&profile, &eta, i + 1).unwrap() <= critical_mu(&profile, &eta, i).unwrap()
                );
            }
        }
    }

    #[test]
    fn minimum_is_attained_on_jumps_or_last_index(profile in profile(9), eta in eta()) {
        let p = profile.p();
        let all = (1..p).map(|i| critical_mu(&profile, &eta, i).unwrap()).min().unwrap();
        let mut candidates = critical_indices(&profile);
        candidates.push(p - 1);
        let reduced = candidates
            .into_iter()
            .map(|i| critical_mu(&profile, &eta, i).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(all, reduced);
    }

    #[test]
    fn jump_indices_decide_the_sign(profile in profile(9), eta in eta()) {
        let p = profile.p();
        let all: Vec<Rational> = (1..p).map(|i| critical_mu(&profile, &eta, i).unwrap()).collect();
        let jumps: Vec<Rational> = critical_indices(&profile)
            .into_iter()
            .map(|i| critical_mu(&profile, &eta, i).unwrap())
            .collect();
        prop_assert_eq!(
            all.iter().all(|m| !m.is_negative()),
            jumps.iter().all(|m| !m.is_negative())
        );
        prop_assert_eq!(
            all.iter().all(Rational::is_positive),
            jumps.iter().all(Rational::is_positive)
        );
    }

    #[test]
    fn table_agrees_with_critical_values(profile in profile(9), eta in eta()) {
        let values: Vec<Rational> = (1..profile.p()).map(|i| critical_mu(&profile, &eta, i).unwrap()).collect();
        let semi = hilbert_verdict(&profile, &eta, Mode::Semistable).unwrap().verdict;
        prop_assert_eq!(semi.satisfied, values.iter().all(|m| !m.is_negative()));
        prop_assert_eq!(semi.strict, values.iter().all(Rational::is_positive));
    }

    #[test]
    fn rows_move_monotonically_in_eta(profile in profile(8), a in eta(), b in eta()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let before = condition_rows(&profile, &lo);
        let after = condition_rows(&profile, &hi);
        prop_assert_eq!(before.len(), after.len());
        for (x, y) in before.iter().zip(&after) {
            prop_assert_eq!((x.condition, x.j), (y.condition, y.j));
            match x.condition {
                Condition::Framing => prop_assert!(y.value <= x.value),
                Condition::Generation => prop_assert!(y.value >= x.value),
            }
        }
    }

    #[test]
    fn eta_round_trips(p in 2usize..=30, r in 1usize..=6, eta in eta()) {
        let delta_bar = eta_delta_conversion(p, r, &eta, Direction::EtaToDeltaBar).unwrap();
        prop_assert!(delta_bar.is_positive() && delta_bar < Rational::from(p));
        prop_assert_eq!(eta_delta_conversion(p, r, &delta_bar, Direction::DeltaBarToEta).unwrap(), eta);
    }

    #[test]
    fn subspace_form_matches_sectional_form(
        p in 2usize..=12,
        r in 1u32..=4,
        eta in eta(),
        dim_frac in 0usize..=12,
        rank_frac in 0u32..=4,
        in_kernel in any::<bool>(),
        mode in prop_oneof![Just(Mode::Semistable), Just(Mode::Stable)],
    ) {
        let dim_w = dim_frac.min(p);
        let rank = rank_frac.min(r);
        let problem = PairProblem::new(
            VarietyContext::curve(2, Rational::one()).unwrap(),
            r,
            Rational::from(10),
            &[],
            RationalPolynomial::constant(Rational::one()),
            TargetSheafDescriptor::structure_sheaf(),
        )
        .unwrap();
        let witness = SubobjectWitness::new(rank, Rational::zero(), in_kernel).with_sections(dim_w as u64);
        let delta_bar = eta_delta_conversion(p, r as usize, &eta, Direction::EtaToDeltaBar).unwrap();
        let sectional = check_sectional(&problem, &witness, &delta_bar, &Rational::from(p), mode).unwrap();
        let subspace = subspace_criterion(p, r as usize, &eta, dim_w, rank as usize, in_kernel, mode).unwrap();
        prop_assert_eq!(sectional.satisfied, subspace.satisfied);
        prop_assert_eq!(sectional.strict, subspace.strict);
    }
}
