use pairstab::{
    PairProblem, Rational, RationalPolynomial, SubobjectWitness, TargetSheafDescriptor,
    VarietyContext,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA: &str = "pairstab/1";

/// On-disk problem description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: String,
    pub variety: VarietyContext,
    pub pair: PairSpec,
    pub delta: RationalPolynomial,
    pub target: TargetSheafDescriptor,
    #[serde(default)]
    pub witnesses: Vec<SubobjectWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sectional: Option<SectionalSpec>,
    /// Rank of `Ker α` for the general form of the `δ` bound.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_rank: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub rank: u32,
    pub degree: Rational,
    /// Lower Hilbert-polynomial coefficients, lowest degree first.
    #[serde(default)]
    pub chi_lower: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_squared: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<Rational>,
    #[serde(default)]
    pub integral_degrees: bool,
}

/// Data for sectional checks: `p = χ(0)` and `δ̄ = δ(0)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionalSpec {
    pub p: Rational,
    pub delta_bar: Rational,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        if file.schema != SCHEMA {
            return Err(CliError::Schema(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                file.schema
            )));
        }
        Ok(file)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn problem(&self) -> Result<PairProblem, CliError> {
        let mut problem = PairProblem::new(
            self.variety.clone(),
            self.pair.rank,
            self.pair.degree.clone(),
            &self.pair.chi_lower,
            self.delta.clone(),
            self.target.clone(),
        )?;
        match (&self.pair.c1_squared, &self.pair.c2) {
            (Some(c1), Some(c2)) => problem = problem.with_chern_classes(c1.clone(), c2.clone()),
            (None, None) => {}
            _ => {
                return Err(CliError::Schema(
                    "c1_squared and c2 must be given together".into(),
                ))
            }
        }
        Ok(problem.with_integral_degrees(self.pair.integral_degrees))
    }
}
