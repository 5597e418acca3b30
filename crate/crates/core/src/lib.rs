//! Exact-arithmetic toolkit for stability of pairs `(E, α: E → E₀)` with a
//! polynomial stability parameter.
//!
//! Modules build on each other: [`polynomial`] supplies the eventual order on
//! rational polynomials, [`model`] the problem and witness types, [`stability`]
//! the subsheaf inequalities, [`chambers`] wall and chamber bookkeeping, and
//! [`gitweights`] the Hilbert–Mumford weight calculus.

pub mod chambers;
pub mod error;
pub mod gitweights;
pub mod model;
pub mod polynomial;
pub mod rational;
pub mod stability;

pub use chambers::{
    chamber_of, delta_upper_bound, discriminant_bound, framed_delta_window,
    level_structure_dimension, level_structure_window, mu_interval_criterion,
    point_level_strictly_semistable_dimension, rank2_chamber, restriction_degree, series_indices,
    wall_set, Chamber, ChamberLocation, DeltaBound, DiscriminantBound, FramedWindow,
    FramingComponent, LeftOpenInterval, RestrictionDegree, SeriesRange, WallSet,
};
pub use error::{Error, Result};
pub use gitweights::{
    brute_force_verdict, brute_force_verdict_on, brute_force_verdicts_on, condition_rows,
    cone_coefficients, critical_indices, critical_mu, eta_delta_conversion, hilbert_verdict,
    mu_hat, special_weight_vector, subspace_criterion, BasisProfile, Condition, ConditionRow,
    Direction, GitVerdict, WeightLattice, WeightVector,
};
pub use model::{
    classify_regime, validate_witness, PairProblem, Regime, Severity, SubobjectWitness, TargetKind,
    TargetSheafDescriptor, VarietyContext, Violation, ViolationKind,
};
pub use polynomial::{eventually_leq, eventually_lt, hilbert_polynomial, RationalPolynomial};
pub use rational::{q, Rational};
pub use stability::{
    check_chi, check_mu, check_sectional, curve_threshold, implication_chain, mu_margin,
    standard_polynomial, ChainReport, Margin, Mode, Verdict,
};
