//! Numerical records for a moduli problem of pairs `(E, α: E → E₀)`.
//!
//! Nothing here is sheaf-theoretic: a problem is its Hilbert polynomial, the
//! stability parameter `δ` and a descriptor of the target `E₀`; candidate
//! subobjects are supplied as [`SubobjectWitness`] records and certified one
//! at a time, never enumerated.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{hilbert_polynomial, RationalPolynomial};
use crate::rational::Rational;

/// Numerical invariants of the ambient curve or surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVariety", into = "RawVariety")]
pub struct VarietyContext {
    dimension: u32,
    degree: Rational,
    canonical_degree: Rational,
}

#[derive(Serialize, Deserialize)]
struct RawVariety {
    dimension: u32,
    degree: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    canonical_degree: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<Rational>,
}

impl TryFrom<RawVariety> for VarietyContext {
    type Error = Error;

    fn try_from(raw: RawVariety) -> Result<Self> {
        let canonical = match (raw.canonical_degree, raw.genus) {
            (Some(k), None) => k,
            (None, Some(g)) if raw.dimension == 1 => Rational::from(2) * g - Rational::from(2),
            (None, Some(_)) => {
                return Err(Error::InvalidVariety(
                    "genus is only meaningful on a curve".into(),
                ))
            }
            (Some(k), Some(g)) => {
                if raw.dimension != 1 || k != Rational::from(2) * g - Rational::from(2) {
                    return Err(Error::InvalidVariety(
                        "canonical_degree and genus disagree".into(),
                    ));
                }
                k
            }
            (None, None) => {
                return Err(Error::InvalidVariety(
                    "one of canonical_degree or genus is required".into(),
                ))
            }
        };
        VarietyContext::new(raw.dimension, raw.degree, canonical)
    }
}

impl From<VarietyContext> for RawVariety {
    fn from(ctx: VarietyContext) -> Self {
        RawVariety {
            dimension: ctx.dimension,
            degree: ctx.degree,
            canonical_degree: Some(ctx.canonical_degree),
            genus: None,
        }
    }
}

impl VarietyContext {
    pub fn new(dimension: u32, degree: Rational, canonical_degree: Rational) -> Result<Self> {
        if !(1..=2).contains(&dimension) {
            return Err(Error::UnsupportedDimension(dimension));
        }
        if !degree.is_positive() {
            return Err(Error::InvalidVariety(format!(
                "degree must be positive, got {degree}"
            )));
        }
        Ok(VarietyContext {
            dimension,
            degree,
            canonical_degree,
        })
    }

    /// A smooth curve of the given genus embedded with degree `degree`.
    pub fn curve(genus: i64, degree: Rational) -> Result<Self> {
        Self::new(1, degree, Rational::from(2 * genus - 2))
    }

    /// A surface with `H² = h_squared` and `K_X · H = canonical_degree`.
    pub fn surface(h_squared: Rational, canonical_degree: Rational) -> Result<Self> {
        Self::new(2, h_squared, canonical_degree)
    }

    /// `e = dim X`.
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// `deg X = H^e`.
    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    /// `deg K_X = K_X · H^(e−1)`.
    pub fn canonical_degree(&self) -> &Rational {
        &self.canonical_degree
    }

    /// `H²`, surfaces only.
    pub fn h_squared(&self) -> Option<&Rational> {
        (self.dimension == 2).then_some(&self.degree)
    }

    /// `g = 1 + deg K_X / 2`, curves only.
    pub fn genus(&self) -> Option<Rational> {
        (self.dimension == 1).then(|| Rational::one() + &self.canonical_degree / &Rational::from(2))
    }

    pub fn is_curve(&self) -> bool {
        self.dimension == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetKind {
    /// `E₀ ≅ O_X`.
    StructureSheaf,
    /// `E₀` a bundle on an effective divisor, e.g. `O_D^{⊕r}`.
    TorsionOnDivisor,
    General,
}

/// The fixed target sheaf `E₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSheafDescriptor {
    pub kind: TargetKind,
    /// Rank as a sheaf on `X`.
    pub rank: u32,
    pub degree: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<RationalPolynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0: Option<u64>,
    /// Length `l(D)` of the divisor carrying a level structure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_length: Option<u64>,
}

impl TargetSheafDescriptor {
    pub fn structure_sheaf() -> Self {
        TargetSheafDescriptor {
            kind: TargetKind::StructureSheaf,
            rank: 1,
            degree: Rational::zero(),
            chi: None,
            h0: None,
            level_length: None,
        }
    }

    /// `E₀ = O_D^{⊕r}` on a curve, `D` of length `level_length`.
    pub fn level_structure(r: u32, level_length: u64) -> Self {
        let length = Rational::from(u64::from(r) * level_length);
        TargetSheafDescriptor {
            kind: TargetKind::TorsionOnDivisor,
            rank: 0,
            degree: length.clone(),
            chi: Some(RationalPolynomial::constant(length)),
            h0: Some(u64::from(r) * level_length),
            level_length: Some(level_length),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            TargetKind::StructureSheaf if self.rank != 1 => Err(Error::InvalidTarget(
                "structure sheaf must have rank 1".into(),
            )),
            TargetKind::TorsionOnDivisor if self.rank != 0 => Err(Error::InvalidTarget(
                "torsion target must have rank 0 on X".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_torsion(&self) -> bool {
        self.rank == 0
    }
}

/// Whether the stability predicates carry content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `deg δ ≤ e − 1`.
    Pair,
    /// `deg δ ≥ e`: every semistable `α` is injective, all pairs are stable
    /// and parametrized by a Quot scheme.
    Quot,
}

/// The numerical datum of one moduli problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPairProblem", into = "RawPairProblem")]
pub struct PairProblem {
    ctx: VarietyContext,
    rank: u32,
    degree: Rational,
    chi: RationalPolynomial,
    delta: RationalPolynomial,
    target: TargetSheafDescriptor,
    c1_squared: Option<Rational>,
    c2: Option<Rational>,
    integral_degrees: bool,
}

#[derive(Serialize, Deserialize)]
struct RawPairProblem {
    variety: VarietyContext,
    rank: u32,
    degree: Rational,
    chi: RationalPolynomial,
    delta: RationalPolynomial,
    target: TargetSheafDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c1_squared: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c2: Option<Rational>,
    #[serde(default)]
    integral_degrees: bool,
}

impl TryFrom<RawPairProblem> for PairProblem {
    type Error = Error;

    fn try_from(raw: RawPairProblem) -> Result<Self> {
        let mut problem = PairProblem::with_chi(
            raw.variety,
            raw.rank,
            raw.degree,
            raw.chi,
            raw.delta,
            raw.target,
        )?;
        problem.c1_squared = raw.c1_squared;
        problem.c2 = raw.c2;
        problem.integral_degrees = raw.integral_degrees;
        Ok(problem)
    }
}

impl From<PairProblem> for RawPairProblem {
    fn from(p: PairProblem) -> Self {
        RawPairProblem {
            variety: p.ctx,
            rank: p.rank,
            degree: p.degree,
            chi: p.chi,
            delta: p.delta,
            target: p.target,
            c1_squared: p.c1_squared,
            c2: p.c2,
            integral_degrees: p.integral_degrees,
        }
    }
}

impl PairProblem {
    /// Builds the problem with `χ = hilbert_polynomial(ctx, r, d, chi_lower)`.
    pub fn new(
        ctx: VarietyContext,
        rank: u32,
        degree: Rational,
        chi_lower: &[Rational],
        delta: RationalPolynomial,
        target: TargetSheafDescriptor,
    ) -> Result<Self> {
        let chi = hilbert_polynomial(&ctx, &Rational::from(rank), &degree, chi_lower)?;
        Self::with_chi(ctx, rank, degree, chi, delta, target)
    }

    /// Builds the problem from an explicit `χ`, checking its two top
    /// coefficients against `(r, d)`.
    pub fn with_chi(
        ctx: VarietyContext,
        rank: u32,
        degree: Rational,
        chi: RationalPolynomial,
        delta: RationalPolynomial,
        target: TargetSheafDescriptor,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidProblem("rank must be at least 1".into()));
        }
        target.validate()?;
        if !delta.is_eventually_positive() {
            return Err(Error::InvalidProblem(format!(
                "δ must be eventually positive, got {delta}"
            )));
        }
        let e = ctx.dimension() as usize;
        let lower: Vec<Rational> = (0..e - 1).map(|i| chi.coefficient(i)).collect();
        let expected = hilbert_polynomial(&ctx, &Rational::from(rank), &degree, &lower)?;
        if chi != expected {
            return Err(Error::InvalidProblem(format!(
                "χ = {chi} does not have the shape of rank {rank}, degree {degree} (expected {expected})"
            )));
        }
        Ok(PairProblem {
            ctx,
            rank,
            degree,
            chi,
            delta,
            target,
            c1_squared: None,
            c2: None,
            integral_degrees: false,
        })
    }

    pub fn with_chern_classes(mut self, c1_squared: Rational, c2: Rational) -> Self {
        self.c1_squared = Some(c1_squared);
        self.c2 = Some(c2);
        self
    }

    pub fn with_integral_degrees(mut self, integral: bool) -> Self {
        self.integral_degrees = integral;
        self
    }

    pub fn ctx(&self) -> &VarietyContext {
        &self.ctx
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    pub fn chi(&self) -> &RationalPolynomial {
        &self.chi
    }

    pub fn delta(&self) -> &RationalPolynomial {
        &self.delta
    }

    pub fn target(&self) -> &TargetSheafDescriptor {
        &self.target
    }

    pub fn c1_squared(&self) -> Option<&Rational> {
        self.c1_squared.as_ref()
    }

    pub fn c2(&self) -> Option<&Rational> {
        self.c2.as_ref()
    }

    pub fn integral_degrees(&self) -> bool {
        self.integral_degrees
    }

    /// `δ₁`, the coefficient of `z^(e−1)` in `δ`.
    pub fn delta1(&self) -> Rational {
        self.delta.coefficient(self.ctx.dimension() as usize - 1)
    }

    pub fn regime(&self) -> Regime {
        classify_regime(self)
    }

    /// Hilbert polynomial a witness of this rank and degree has, when it is
    /// determined by them (always on a curve).
    pub fn derived_chi(&self, rank: u32, degree: &Rational) -> Option<RationalPolynomial> {
        if self.ctx.is_curve() {
            hilbert_polynomial(&self.ctx, &Rational::from(rank), degree, &[]).ok()
        } else {
            None
        }
    }
}

pub fn classify_regime(problem: &PairProblem) -> Regime {
    match problem.delta.degree() {
        Some(d) if d >= problem.ctx.dimension() as usize => Regime::Quot,
        _ => Regime::Pair,
    }
}

/// Numerical data of one candidate subobject `G ⊆ E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubobjectWitness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub rank: u32,
    pub degree: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<RationalPolynomial>,
    /// `ε(G) = 0`, i.e. `G ⊆ Ker α`.
    pub in_kernel: bool,
    /// `dim(V ∩ H⁰(G))`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_count: Option<u64>,
    /// `G ≠ E`.
    #[serde(default = "default_true")]
    pub proper: bool,
}

fn default_true() -> bool {
    true
}

impl SubobjectWitness {
    pub fn new(rank: u32, degree: Rational, in_kernel: bool) -> Self {
        SubobjectWitness {
            label: None,
            rank,
            degree,
            chi: None,
            in_kernel,
            section_count: None,
            proper: true,
        }
    }

    /// A witness whose torsion part has length `torsion_length`; its degree
    /// counts the torsion: `deg G = deg(free part) + t`.
    pub fn with_torsion(
        rank: u32,
        free_degree: Rational,
        torsion_length: u64,
        in_kernel: bool,
    ) -> Self {
        Self::new(
            rank,
            free_degree + Rational::from(torsion_length),
            in_kernel,
        )
    }

    /// `G = E` itself, with `ε = 1`.
    pub fn whole(problem: &PairProblem) -> Self {
        SubobjectWitness {
            label: Some("E".into()),
            rank: problem.rank,
            degree: problem.degree.clone(),
            chi: Some(problem.chi.clone()),
            in_kernel: false,
            section_count: None,
            proper: false,
        }
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_chi(mut self, chi: RationalPolynomial) -> Self {
        self.chi = Some(chi);
        self
    }

    pub fn with_sections(mut self, count: u64) -> Self {
        self.section_count = Some(count);
        self
    }

    /// `ε(G)` as 0 or 1.
    pub fn epsilon(&self) -> u32 {
        u32::from(!self.in_kernel)
    }

    /// The witness's Hilbert polynomial, supplied or derived from `(rank, degree)`.
    pub fn effective_chi(&self, problem: &PairProblem) -> Option<RationalPolynomial> {
        self.chi
            .clone()
            .or_else(|| problem.derived_chi(self.rank, &self.degree))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    RankExceedsAmbient,
    LeadingCoefficientMismatch,
    /// A torsion subsheaf inside `Ker α`; semistability forces `Ker α` torsion free.
    KernelTorsion,
    /// `G ⊆ Ker α` of full rank with `χ_G = χ_E`: then `α = 0`, so `l(E/Ker α) = 0`.
    TrivialHomomorphism,
    /// Torsion of `E` longer than `h⁰(T(E₀))`, which `α` must embed it into.
    TorsionExceedsTarget,
    MalformedWholeWitness,
    /// Full-rank witness inside `Ker α`; legal but suspicious.
    FullRankKernelWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub severity: Severity,
    pub message: String,
}

impl Violation {
    fn error(kind: ViolationKind, message: impl Into<String>) -> Self {
        Violation {
            kind,
            severity: Severity::Error,
            message: message.into(),
        }
    }

    fn warning(kind: ViolationKind, message: impl Into<String>) -> Self {
        Violation {
            kind,
            severity: Severity::Warning,
            message: message.into(),
        }
    }
}

/// Structural inconsistencies of a witness relative to its problem.
pub fn validate_witness(problem: &PairProblem, witness: &SubobjectWitness) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = problem.rank;
    if witness.rank > r {
        out.push(Violation::error(
            ViolationKind::RankExceedsAmbient,
            format!("rank {} exceeds rank E = {r}", witness.rank),
        ));
    }

    let chi = witness.effective_chi(problem);
    if let Some(chi) = &witness.chi {
        let e = problem.ctx.dimension() as usize;
        let expected =
            problem.chi.coefficient(e) * Rational::from(witness.rank) / Rational::from(r);
        let lead = chi.coefficient(e);
        if lead != expected || chi.degree().is_some_and(|d| d > e) {
            out.push(Violation::error(
                ViolationKind::LeadingCoefficientMismatch,
                format!(
                    "χ_G leading coefficient {lead} does not match rank {} (expected {expected})",
                    witness.rank
                ),
            ));
        }
    }

    if !witness.proper
        && (witness.rank != r
            || witness.in_kernel
            || chi.as_ref().is_some_and(|c| c != &problem.chi))
    {
        out.push(Violation::error(
            ViolationKind::MalformedWholeWitness,
            "a non-proper witness must be E itself (full rank, χ_E, not in Ker α)",
        ));
    }

    if witness.in_kernel && witness.rank == 0 {
        if chi.as_ref().is_none_or(|c| !c.is_zero()) {
            out.push(Violation::error(
                ViolationKind::KernelTorsion,
                "kernel torsion: a rank-0 subsheaf of Ker α must have χ_G = 0",
            ));
        }
    } else if !witness.in_kernel && witness.rank == 0 {
        let bound = match problem.target.kind {
            TargetKind::TorsionOnDivisor => problem.target.h0,
            TargetKind::StructureSheaf => Some(0),
            TargetKind::General => None,
        };
        if let (Some(bound), Some(c)) = (bound, &chi) {
            if c.degree().unwrap_or(0) == 0 && c.coefficient(0) > Rational::from(bound) {
                out.push(Violation::error(
                    ViolationKind::TorsionExceedsTarget,
                    format!(
                        "torsion of length {} cannot embed into T(E₀) with h⁰ = {bound}",
                        c.coefficient(0)
                    ),
                ));
            }
        }
    }

    if witness.in_kernel && witness.rank == r && r > 0 {
        if chi.as_ref() == Some(&problem.chi) {
            out.push(Violation::error(
                ViolationKind::TrivialHomomorphism,
                "quotient length l(E/Ker α) = 0: α would be the zero map",
            ));
        } else {
            out.push(Violation::warning(
                ViolationKind::FullRankKernelWitness,
                "full-rank subsheaf of Ker α: only possible for a torsion target",
            ));
        }
    }
    out
}
