//! Deterministic inputs shared by the benchmarks.

use pairstab::{BasisProfile, Rational, RationalPolynomial};

/// Every profile with `r ≤ p` for the given `p`.
pub fn profiles(p: usize) -> Vec<BasisProfile> {
    (1..=p).flat_map(|r| BasisProfile::all(p, r)).collect()
}

/// A handful of rational `η` spread over `(0, 3]`.
pub fn etas() -> Vec<Rational> {
    [(1, 3), (1, 2), (1, 1), (3, 2), (5, 2), (3, 1)]
        .into_iter()
        .map(|(n, d)| Rational::new(n, d))
        .collect()
}

/// Pairs of polynomials of degree `deg` that agree on all but the constant term.
pub fn near_equal_pair(deg: usize) -> (RationalPolynomial, RationalPolynomial) {
    let coeffs: Vec<Rational> = (0..=deg).map(|i| Rational::new(i as i64 + 1, 7)).collect();
    let mut other = coeffs.clone();
    other[0] = Rational::new(-1, 3);
    (
        RationalPolynomial::new(coeffs),
        RationalPolynomial::new(other),
    )
}
