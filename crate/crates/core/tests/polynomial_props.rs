use pairstab::polynomial::difference;
use pairstab::{
    eventually_leq, eventually_lt, hilbert_polynomial, Rational, RationalPolynomial, VarietyContext,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = RationalPolynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(RationalPolynomial::new)
}

/// Pairs that often share leading terms, so ties deep in the coefficient list are exercised.
fn close_pair() -> impl Strategy<Value = (RationalPolynomial, RationalPolynomial)> {
    (polynomial(5), prop::collection::vec(rational(), 0..=3)).prop_map(|(p, tail)| {
        let mut coeffs = p.coefficients().to_vec();
        for (c, t) in coeffs.iter_mut().zip(&tail) {
            *c = c.clone() + t.clone();
        }
        (p, RationalPolynomial::new(coeffs))
    })
}

/// Pointwise check past the Cauchy bound of `q − p`.
fn pointwise_leq(p: &RationalPolynomial, q: &RationalPolynomial) -> bool {
    let h = q - p;
    let start = Rational::from_bigint(h.root_bound().floor()) + Rational::one();
    (0..4).all(|k| !h.evaluate(&(&start + &Rational::from(k))).is_negative())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn eventual_order_matches_evaluation(p in polynomial(5), q in polynomial(5)) {
        prop_assert_eq!(eventually_leq(&p, &q), pointwise_leq(&p, &q));
        prop_assert_eq!(eventually_lt(&p, &q), !pointwise_leq(&q, &p));
    }

    #[test]
    fn eventual_order_on_close_pairs((p, q) in close_pair()) {
        prop_assert_eq!(eventually_leq(&p, &q), pointwise_leq(&p, &q));
    }

    #[test]
    fn eventual_order_is_total_and_antisymmetric(p in polynomial(4), q in polynomial(4)) {
        prop_assert!(eventually_leq(&p, &q) || eventually_leq(&q, &p));
        if eventually_leq(&p, &q) && eventually_leq(&q, &p) {
            prop_assert_eq!(&p, &q);
        }
        prop_assert_eq!(p.eventual_cmp(&q), q.eventual_cmp(&p).reverse());
    }

    #[test]
    fn difference_is_linear(p in polynomial(5), q in polynomial(5), a in rational(), b in rational()) {
        let combined = &p.scale(&a) + &q.scale(&b);
        let expected = &difference(&p).scale(&a) + &difference(&q).scale(&b);
        prop_assert_eq!(difference(&combined), expected);
    }

    #[test]
    fn difference_is_backward_step(p in polynomial(5), n in rational()) {
        let step = p.evaluate(&n) - p.evaluate(&(&n - &Rational::one()));
        prop_assert_eq!(difference(&p).evaluate(&n), step);
    }

    #[test]
    fn difference_lowers_degree(p in polynomial(6)) {
        let dp = difference(&p);
        match p.degree() {
            None | Some(0) => prop_assert!(dp.is_zero()),
            Some(n) => prop_assert_eq!(dp.degree(), Some(n - 1)),
        }
    }

    #[test]
    fn hilbert_polynomial_is_additive(
        h2 in 1i64..=6,
        k in -6i64..=6,
        (r1, r2) in (0i64..=4, 0i64..=4),
        (d1, d2) in (rational(), rational()),
        (c1, c2) in (rational(), rational()),
    ) {
        let ctx = VarietyContext::surface(Rational::from(h2), Rational::from(k)).unwrap();
        let a = hilbert_polynomial(&ctx, &Rational::from(r1), &d1, std::slice::from_ref(&c1)).unwrap();
        let b = hilbert_polynomial(&ctx, &Rational::from(r2), &d2, std::slice::from_ref(&c2)).unwrap();
        let sum = hilbert_polynomial(&ctx, &Rational::from(r1 + r2), &(d1 + d2), &[c1 + c2]).unwrap();
        prop_assert_eq!(&a + &b, sum);
    }

    #[test]
    fn sign_is_eventual_past_root_bound(p in polynomial(4)) {
        if p.degree().unwrap_or(0) > 0 {
            let b = p.root_bound();
            let lead = p.eventual_sign();
            for k in 0..6 {
                let x = &b + &Rational::new(k, 2);
                prop_assert_eq!(p.evaluate(&x).signum(), lead);
            }
        } else {
            prop_assert_eq!(p.evaluate(&Rational::zero()).signum(), p.eventual_sign());
        }
    }
}
