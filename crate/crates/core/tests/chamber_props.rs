use pairstab::{
    chamber_of, check_mu, discriminant_bound, mu_interval_criterion, mu_margin, rank2_chamber,
    series_indices, wall_set, ChamberLocation, Mode, PairProblem, Rational, RationalPolynomial,
    SubobjectWitness, TargetSheafDescriptor, VarietyContext,
};
use proptest::prelude::*;

fn curve_problem(r: u32, d: i64, delta1: Rational) -> PairProblem {
    PairProblem::new(
        VarietyContext::curve(2, Rational::one()).unwrap(),
        r,
        Rational::from(d),
        &[],
        RationalPolynomial::constant(delta1),
        TargetSheafDescriptor::structure_sheaf(),
    )
    .unwrap()
}

/// Every integer-degree witness with `0 < rank < r` and `|deg| ≤ |d| + r`.
fn witnesses(r: u32, d: i64) -> Vec<SubobjectWitness> {
    let span = d.abs() + i64::from(r);
    let mut out = Vec::new();
    for s in 1..r {
        for m in -span..=span {
            for in_kernel in [true, false] {
                out.push(SubobjectWitness::new(s, Rational::from(m), in_kernel));
            }
        }
    }
    out
}

/// `k/n`-points strictly inside `(lo, hi)`.
fn samples(lo: &Rational, hi: &Rational, n: i64) -> Vec<Rational> {
    (1..n)
        .map(|k| lo + &((hi - lo) * Rational::new(k, n)))
        .collect()
}

#[test]
fn verdicts_are_constant_on_chambers() {
    for r in 2..=4u32 {
        for d in -9..=-1i64 {
            let walls = wall_set(r, &Rational::from(d)).unwrap();
            let ws = witnesses(r, d);
            for chamber in walls.chambers() {
                let hi = chamber.hi.clone().unwrap();
                let mut reference: Option<Vec<bool>> = None;
                for x in samples(&chamber.lo, &hi, 7) {
                    let problem = curve_problem(r, d, x.clone());
                    let verdicts: Vec<bool> = ws
                        .iter()
                        .map(|w| check_mu(&problem, w, Mode::Stable).unwrap().satisfied)
                        .collect();
                    match &reference {
                        None => reference = Some(verdicts),
                        Some(v) => assert_eq!(v, &verdicts, "r={r} d={d} δ₁={x}"),
                    }
                    let ChamberLocation::Chamber(found) = chamber_of(&walls, &x).unwrap() else {
                        panic!("{x} should be interior");
                    };
                    assert_eq!(found, chamber);
                }
            }
        }
    }
}

#[test]
fn verdict_flips_lie_on_walls() {
    for r in 2..=5u32 {
        for d in -12..=-1i64 {
            let d_q = Rational::from(d);
            let walls = wall_set(r, &d_q).unwrap();
            for w in witnesses(r, d) {
                // the μ-margin is affine in δ₁: margin(0) + δ₁·(ε − s/r)
                let at_zero = mu_margin(r, &d_q, &Rational::zero(), &w);
                let slope = mu_margin(r, &d_q, &Rational::one(), &w) - at_zero.clone();
                let flip = -(at_zero / slope);
                if flip.is_positive() && flip < walls.range_hi {
                    assert!(
                        walls.walls.binary_search(&flip).is_ok(),
                        "flip {flip} of {w:?} missing from walls of ({r}, {d})"
                    );
                }
            }
        }
    }
}

#[test]
fn rank2_chambers_tile_the_series() {
    for d in (-21..=-1i64).step_by(2) {
        let d_q = Rational::from(d);
        let range = series_indices(&d_q).unwrap();
        for i in range.i_min..range.i_max {
            let a = rank2_chamber(i, &d_q).unwrap();
            let b = rank2_chamber(i + 1, &d_q).unwrap();
            assert!(a.hi.unwrap() >= b.lo);
        }
        assert!(range.is_empty_at(-d));
        assert!(!range.is_empty_at(-d - 1));
    }
}

proptest! {
    #[test]
    fn criterion_avoids_interior_walls(r in 2u32..=5, d in -12i64..=-1, k in 1i64..=199) {
        let d_q = Rational::from(d);
        let walls = wall_set(r, &d_q).unwrap();
        let delta1 = &walls.range_hi * &Rational::new(k, 200);
        if mu_interval_criterion(r, &d_q, &delta1).unwrap() {
            prop_assert!(walls.interior().all(|w| w != &delta1));
        }
    }

    #[test]
    fn discriminant_bound_weakens_with_delta(
        a in 0i64..=40, b in 0i64..=40, den in 1i64..=6, h2 in 1i64..=9,
    ) {
        let (lo, hi) = (Rational::new(a.min(b), den), Rational::new(a.max(b), den));
        let h2 = Rational::from(h2);
        let x = discriminant_bound(&lo, &h2).unwrap();
        let y = discriminant_bound(&hi, &h2).unwrap();
        prop_assert!(y.stated <= x.stated);
        prop_assert!(y.proof_derived <= x.proof_derived);
    }

    #[test]
    fn chamber_of_matches_chamber_list(r in 2u32..=4, d in -10i64..=-1, k in 1i64..=300) {
        let walls = wall_set(r, &Rational::from(d)).unwrap();
        let delta1 = &walls.range_hi * &Rational::new(k, 250);
        match chamber_of(&walls, &delta1).unwrap() {
            ChamberLocation::OnWall { value } => {
                prop_assert!(walls.walls.contains(&value) || value == walls.range_hi);
            }
            ChamberLocation::Chamber(c) if c.beyond_range => {
                prop_assert!(delta1 > walls.range_hi);
            }
            ChamberLocation::Chamber(c) => {
                prop_assert!(walls.chambers().contains(&c));
                prop_assert!(c.contains(&delta1));
            }
        }
    }
}
