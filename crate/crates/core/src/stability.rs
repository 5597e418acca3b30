//! Stability predicates evaluated on one witness at a time.
//!
//! Three levels are exposed: Hilbert-polynomial (`χ`) conditions, their
//! degree-level shadow (`μ`, governed by `δ₁` alone) and the section-count
//! variant with scalar parameter `δ̄`. Every check returns a [`Verdict`] that
//! carries both the non-strict and the strict outcome.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{PairProblem, Regime, SubobjectWitness};
use crate::polynomial::RationalPolynomial;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Semistable,
    Stable,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Semistable => "semistable",
            Mode::Stable => "stable",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semistable" => Ok(Mode::Semistable),
            "stable" => Ok(Mode::Stable),
            other => Err(Error::OutOfRange(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Margin {
    Polynomial(RationalPolynomial),
    Scalar(Rational),
}

impl fmt::Display for Margin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Margin::Polynomial(p) => write!(f, "{p}"),
            Margin::Scalar(q) => write!(f, "{q}"),
        }
    }
}

/// Outcome of one inequality `LHS (≤) RHS`.
///
/// `satisfied` is the outcome in the requested mode; `strict` records whether
/// the strict form holds, so `strict ⇒ satisfied` in both modes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub mode: Mode,
    pub satisfied: bool,
    pub strict: bool,
    /// `RHS − LHS`.
    pub margin: Margin,
}

impl Verdict {
    pub(crate) fn from_sign(mode: Mode, sign: Ordering, margin: Margin) -> Self {
        let strict = sign == Ordering::Greater;
        let weak = sign != Ordering::Less;
        Verdict {
            mode,
            satisfied: match mode {
                Mode::Semistable => weak,
                Mode::Stable => strict,
            },
            strict,
            margin,
        }
    }

    pub(crate) fn scalar(mode: Mode, margin: Rational) -> Self {
        Self::from_sign(mode, margin.signum(), Margin::Scalar(margin))
    }

    /// Whether the non-strict form holds, regardless of the requested mode.
    pub fn weak(&self) -> bool {
        match &self.margin {
            Margin::Polynomial(p) => p.eventual_sign() != Ordering::Less,
            Margin::Scalar(q) => !q.is_negative(),
        }
    }

    pub fn holds(&self, mode: Mode) -> bool {
        match mode {
            Mode::Semistable => self.weak(),
            Mode::Stable => self.strict,
        }
    }
}

/// `P(ρ, ε) = (ρ / r)(χ − δ) + ε·δ`.
pub fn standard_polynomial(
    problem: &PairProblem,
    rho: u32,
    eps: u32,
) -> Result<RationalPolynomial> {
    if rho > problem.rank() {
        return Err(Error::OutOfRange(format!(
            "ρ = {rho} exceeds rank {}",
            problem.rank()
        )));
    }
    if eps > 1 {
        return Err(Error::OutOfRange(format!("ε must be 0 or 1, got {eps}")));
    }
    let ratio = Rational::from(rho) / Rational::from(problem.rank());
    let base = (problem.chi() - problem.delta()).scale(&ratio);
    Ok(if eps == 1 {
        &base + problem.delta()
    } else {
        base
    })
}

fn check_proper(witness: &SubobjectWitness, mode: Mode) -> Result<()> {
    if !witness.proper && mode == Mode::Stable {
        return Err(Error::NonProperInStableMode);
    }
    Ok(())
}

/// `χ_G (≤) P(rk G, ε(G))` in the eventual order.
///
/// On a curve a missing `χ_G` is derived from the witness's rank and degree.
pub fn check_chi(problem: &PairProblem, witness: &SubobjectWitness, mode: Mode) -> Result<Verdict> {
    if problem.regime() == Regime::Quot {
        return Err(Error::QuotRegime);
    }
    check_proper(witness, mode)?;
    if witness.rank > problem.rank() {
        return Err(Error::InvalidWitness(format!(
            "rank {} exceeds rank E = {}",
            witness.rank,
            problem.rank()
        )));
    }
    let chi_g = witness.effective_chi(problem).ok_or(Error::MissingChi)?;
    let bound = standard_polynomial(problem, witness.rank, witness.epsilon())?;
    let margin = &bound - &chi_g;
    Ok(Verdict::from_sign(
        mode,
        margin.eventual_sign(),
        Margin::Polynomial(margin),
    ))
}

/// Degree-level conditions with `δ₁`, normalized by `rk E`:
/// `deg G (≤) rk G·(d − δ₁)/r + ε(G)·δ₁`.
pub fn check_mu(problem: &PairProblem, witness: &SubobjectWitness, mode: Mode) -> Result<Verdict> {
    if witness.rank == 0 {
        return Err(Error::TorsionWitness);
    }
    let r = problem.rank();
    if witness.rank > r {
        return Err(Error::InvalidWitness(format!(
            "rank {} exceeds rank E = {r}",
            witness.rank
        )));
    }
    if !witness.in_kernel && witness.rank >= r {
        return Err(Error::FullRankWitness {
            rank_g: witness.rank,
            rank: r,
        });
    }
    let margin = mu_margin(r, problem.degree(), &problem.delta1(), witness);
    Ok(Verdict::scalar(mode, margin))
}

/// `rk G·(d − δ₁)/r + ε·δ₁ − deg G`.
pub fn mu_margin(r: u32, d: &Rational, delta1: &Rational, witness: &SubobjectWitness) -> Rational {
    let slope_part = Rational::from(witness.rank) * (d - delta1) / Rational::from(r);
    let eps_part = if witness.in_kernel {
        Rational::zero()
    } else {
        delta1.clone()
    };
    slope_part + eps_part - &witness.degree
}

/// `r·dim(V ∩ H⁰G) (≤) rk G·(p − δ̄) + ε·r·δ̄`, reported normalized by `r`.
pub fn check_sectional(
    problem: &PairProblem,
    witness: &SubobjectWitness,
    delta_bar: &Rational,
    p: &Rational,
    mode: Mode,
) -> Result<Verdict> {
    check_proper(witness, mode)?;
    let sections = witness.section_count.ok_or(Error::MissingSectionCount)?;
    if !delta_bar.is_positive() || delta_bar >= p {
        return Err(Error::OutOfRange(format!(
            "δ̄ = {delta_bar} must lie in (0, {p})"
        )));
    }
    let r = Rational::from(problem.rank());
    let lhs = &r * &Rational::from(sections);
    let mut rhs = Rational::from(witness.rank) * (p - delta_bar);
    if !witness.in_kernel {
        rhs += &(&r * delta_bar);
    }
    Ok(Verdict::scalar(mode, (rhs - lhs) / r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub mu: Verdict,
    pub chi: Verdict,
    /// Empty unless the verdicts contradict `μ-stable ⇒ stable ⇒ semistable ⇒ μ-semistable`.
    pub violations: Vec<String>,
}

impl ChainReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cross-checks the `μ`- and `χ`-verdicts of one witness against the
/// implication chain `μ-stable ⇒ stable ⇒ semistable ⇒ μ-semistable`.
pub fn implication_chain(problem: &PairProblem, witness: &SubobjectWitness) -> Result<ChainReport> {
    if witness.rank == 0 {
        return Err(Error::TorsionWitness);
    }
    if witness.rank >= problem.rank() {
        return Err(Error::FullRankWitness {
            rank_g: witness.rank,
            rank: problem.rank(),
        });
    }
    let mu = check_mu(problem, witness, Mode::Semistable)?;
    let chi = check_chi(problem, witness, Mode::Semistable)?;
    let mut violations = Vec::new();

    let (Margin::Scalar(mu_margin), Margin::Polynomial(chi_margin)) = (&mu.margin, &chi.margin)
    else {
        unreachable!("μ-margins are scalar and χ-margins polynomial");
    };
    let e = problem.ctx().dimension() as usize;
    if !chi_margin.coefficient(e).is_zero() || chi_margin.degree().is_some_and(|d| d > e) {
        violations.push(format!(
            "χ-margin {chi_margin} has a nonzero leading term; witness rank and χ_G disagree"
        ));
    }
    if &chi_margin.coefficient(e - 1) != mu_margin {
        violations.push(format!(
            "degree-level coefficient {} of the χ-margin differs from the μ-margin {mu_margin}",
            chi_margin.coefficient(e - 1)
        ));
    }
    if mu.strict && !chi.strict {
        violations.push("strict μ-inequality without strict χ-inequality".into());
    }
    if chi.weak() && !mu.weak() {
        violations.push("χ-semistable witness fails the μ-semistable inequality".into());
    }
    if mu_margin.is_negative() && chi.weak() {
        violations.push("reversed strict μ-inequality but χ-condition holds".into());
    }
    Ok(ChainReport {
        mu,
        chi,
        violations,
    })
}

/// `r(2g − 1) + δ`: above this degree, (semi)stability on a curve agrees with
/// sectional (semi)stability and `E` is globally generated with `h¹ = 0`.
pub fn curve_threshold(r: u32, g: &Rational, delta: &Rational) -> Result<Rational> {
    if r == 0 {
        return Err(Error::RankTooSmall { min: 1, got: 0 });
    }
    Ok(Rational::from(r) * (Rational::from(2) * g - Rational::one()) + delta)
}
