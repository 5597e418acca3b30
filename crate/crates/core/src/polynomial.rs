//! Exact rational polynomials in one variable `z`, ordered "for large integers n".
//!
//! The eventual order is decided lexicographically from the top coefficient of
//! the difference downwards; nothing here ever samples or uses floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::VarietyContext;
use crate::rational::Rational;

/// Coefficients are stored lowest degree first; the highest stored
/// coefficient is never zero, and the zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · z^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^power` (zero beyond the degree).
    pub fn coefficient(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, n: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * n + c)
    }

    /// `Δp(z) = p(z) − p(z − 1)`.
    pub fn difference(&self) -> Self {
        self - &self.shift(&-Rational::one())
    }

    /// `p(z + t)`, by repeated synthetic expansion.
    pub fn shift(&self, t: &Rational) -> Self {
        // Horner in the ring of polynomials: acc ← acc·(z + t) + c.
        let linear = RationalPolynomial::new(vec![t.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(RationalPolynomial::zero(), |acc, c| {
                &(&acc * &linear) + &RationalPolynomial::constant(c.clone())
            })
    }

    /// Sign of `self(n)` for all sufficiently large `n`.
    pub fn eventual_sign(&self) -> Ordering {
        self.leading_coefficient().signum()
    }

    /// Total order on polynomials by their values at large integers.
    pub fn eventual_cmp(&self, other: &Self) -> Ordering {
        (self - other).eventual_sign()
    }

    /// `true` iff `self` is eventually positive.
    pub fn is_eventually_positive(&self) -> bool {
        self.eventual_sign() == Ordering::Greater
    }

    /// Cauchy bound `1 + max |a_i / a_n|`: every real root lies strictly below it,
    /// so past it the sign is the eventual sign. Zero for constants.
    pub fn root_bound(&self) -> Rational {
        let Some(n) = self.degree().filter(|&n| n > 0) else {
            return Rational::zero();
        };
        let lead = self.coeffs[n].abs();
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

/// `p(n) ≤ q(n)` for all sufficiently large integers `n`.
pub fn eventually_leq(p: &RationalPolynomial, q: &RationalPolynomial) -> bool {
    p.eventual_cmp(q) != Ordering::Greater
}

/// `p(n) < q(n)` for all sufficiently large integers `n`.
pub fn eventually_lt(p: &RationalPolynomial, q: &RationalPolynomial) -> bool {
    p.eventual_cmp(q) == Ordering::Less
}

pub fn difference(p: &RationalPolynomial) -> RationalPolynomial {
    p.difference()
}

pub fn evaluate(p: &RationalPolynomial, n: &Rational) -> Rational {
    p.evaluate(n)
}

fn factorial(e: u32) -> Rational {
    (1..=e as i64)
        .map(Rational::from)
        .fold(Rational::one(), |a, b| a * b)
}

/// Hilbert polynomial of rank `r` and degree `d` on the given variety:
/// `deg X · r · z^e / e! + (d − deg K_X · r / 2) · z^(e−1) + lower`.
///
/// `lower` carries the `e − 1` trailing coefficients, lowest degree first
/// (empty on a curve, the constant term `χ(0)` on a surface).
pub fn hilbert_polynomial(
    ctx: &VarietyContext,
    r: &Rational,
    d: &Rational,
    lower: &[Rational],
) -> Result<RationalPolynomial> {
    let e = ctx.dimension();
    if !(1..=2).contains(&e) {
        return Err(Error::UnsupportedDimension(e));
    }
    let expected = (e - 1) as usize;
    if lower.len() != expected {
        return Err(Error::LowerCoefficientCount {
            expected,
            got: lower.len(),
        });
    }
    let leading = ctx.degree() * r / factorial(e);
    let next = d - &(ctx.canonical_degree() * r / Rational::from(2));
    let mut coeffs = lower.to_vec();
    coeffs.push(next);
    coeffs.push(leading);
    Ok(RationalPolynomial::new(coeffs))
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|i| self.coefficient(i) + rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|i| self.coefficient(i) - rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self + &rhs
    }
}

impl Sub for RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self - &rhs
    }
}

impl fmt::Display for RationalPolynomial {
    /// Renders as `a·z^2 + b·z + c`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = magnitude == Rational::one();
            match power {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("z")?,
                1 => write!(f, "{magnitude}·z")?,
                _ if unit => write!(f, "z^{power}")?,
                _ => write!(f, "{magnitude}·z^{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(RationalPolynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn poly(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn eventual_order_examples() {
        assert!(eventually_leq(&poly(&[0, 1]), &poly(&[0, 0, 1])));
        let p = poly(&[3, -2, 7]);
        assert!(eventually_leq(&p, &p));
        assert!(!eventually_lt(&p, &p));
        assert!(!eventually_leq(&poly(&[5, 2]), &poly(&[3, 2])));

        assert!(eventually_lt(&poly(&[0, 1]), &poly(&[1, 1])));
        assert!(eventually_lt(
            &RationalPolynomial::zero(),
            &poly(&[0, -100, 1])
        ));
        assert!(eventually_leq(
            &RationalPolynomial::zero(),
            &RationalPolynomial::zero()
        ));
    }

    #[test]
    fn difference_examples() {
        assert_eq!(poly(&[0, 0, 1]).difference(), poly(&[-1, 2]));
        assert_eq!(poly(&[7]).difference(), RationalPolynomial::zero());
        assert_eq!(poly(&[0, 1]).difference(), poly(&[1]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(poly(&[0, 0, 1]).evaluate(&q(3, 1)), q(9, 1));
        assert_eq!(RationalPolynomial::zero().evaluate(&q(17, 3)), q(0, 1));
        assert_eq!(poly(&[5, 2]).evaluate(&q(-1, 1)), q(3, 1));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = RationalPolynomial::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(RationalPolynomial::new(vec![q(0, 1)]).degree(), None);
    }

    #[test]
    fn hilbert_polynomial_on_a_curve_matches_riemann_roch() {
        // genus 3, deg X = 2: h·r·z + d + r(1 − g)
        let ctx = VarietyContext::curve(3, q(2, 1)).unwrap();
        let chi = hilbert_polynomial(&ctx, &q(2, 1), &q(5, 1), &[]).unwrap();
        assert_eq!(chi, poly(&[5 + 2 * (1 - 3), 4]));
    }

    #[test]
    fn hilbert_polynomial_on_a_surface() {
        let ctx = VarietyContext::surface(q(3, 1), q(-9, 1)).unwrap();
        let chi = hilbert_polynomial(&ctx, &q(2, 1), &q(1, 1), &[q(4, 1)]).unwrap();
        // H²·z² + (d − r·K/2)·z + c
        assert_eq!(
            chi,
            RationalPolynomial::new(vec![q(4, 1), q(10, 1), q(3, 1)])
        );
    }

    #[test]
    fn hilbert_polynomial_of_torsion_on_a_curve() {
        let ctx = VarietyContext::curve(2, q(1, 1)).unwrap();
        let chi = hilbert_polynomial(&ctx, &q(0, 1), &q(3, 1), &[]).unwrap();
        assert_eq!(chi.coefficient(1), q(0, 1));
        assert_eq!(chi.coefficient(0), q(3, 1));
    }

    #[test]
    fn hilbert_polynomial_rejects_wrong_lower_length() {
        let ctx = VarietyContext::surface(q(1, 1), q(0, 1)).unwrap();
        assert!(matches!(
            hilbert_polynomial(&ctx, &q(1, 1), &q(0, 1), &[]),
            Err(Error::LowerCoefficientCount {
                expected: 1,
                got: 0
            })
        ));
    }

    #[test]
    fn display_renders_exact_fractions() {
        let p = RationalPolynomial::new(vec![q(-1, 2), q(0, 1), q(3, 1)]);
        assert_eq!(p.to_string(), "3·z^2 - 1/2");
        assert_eq!(poly(&[1, -1]).to_string(), "-z + 1");
    }

    #[test]
    fn serializes_as_coefficient_strings() {
        let p = RationalPolynomial::new(vec![q(1, 2), q(-3, 1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1/2","-3/1"]"#);
        let back: RationalPolynomial = serde_json::from_str(r#"["1/2", -3, "0"]"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn cauchy_root_bound() {
        let p = RationalPolynomial::from_integers(&[-4, 0, 1]);
        assert_eq!(p.root_bound(), q(5, 1));
        assert!(p.evaluate(&p.root_bound()).is_positive());
        let half = RationalPolynomial::from_integers(&[3, -2]);
        assert_eq!(half.root_bound(), q(5, 2));
        assert_eq!(
            RationalPolynomial::from_integers(&[7]).root_bound(),
            q(0, 1)
        );
    }
}
