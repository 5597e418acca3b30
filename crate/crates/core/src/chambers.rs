//! Parameter analysis for `δ`: upper bounds, walls and chambers, the rank-2
//! chamber series, and the closed-form windows for level structures and
//! framed bundles.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{PairProblem, TargetKind};
use crate::polynomial::{hilbert_polynomial, RationalPolynomial};
use crate::rational::Rational;

/// Result of [`delta_upper_bound`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DeltaBound {
    Bounded {
        /// Polynomial bound on `δ`, when `χ_{E₀}` is known.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        polynomial: Option<RationalPolynomial>,
        /// Bound on the leading coefficient `δ₁`.
        delta1: Rational,
    },
    Unbounded,
}

impl DeltaBound {
    pub fn delta1(&self) -> Option<&Rational> {
        match self {
            DeltaBound::Bounded { delta1, .. } => Some(delta1),
            DeltaBound::Unbounded => None,
        }
    }

    /// Whether some `δ₁ > 0` is compatible with the bound.
    pub fn admits_positive_delta1(&self) -> bool {
        self.delta1().is_none_or(Rational::is_positive)
    }
}

/// Upper bound on `δ` forced by the existence of a semistable pair with
/// nonzero kernel.
///
/// `kernel_rank` selects the general form
/// `δ (≤) χ_E − (r / rk Ker α)(χ_E − χ_{E₀})`; without it the structure-sheaf
/// and torsion-target specializations are used.
pub fn delta_upper_bound(problem: &PairProblem, kernel_rank: Option<u32>) -> Result<DeltaBound> {
    let e = problem.ctx().dimension() as usize;
    let r = problem.rank();
    let target = problem.target();
    let chi_e = problem.chi();
    let top = |p: &RationalPolynomial| p.coefficient(e - 1);

    if let Some(k) = kernel_rank {
        if k == 0 || k > r {
            return Err(Error::OutOfRange(format!(
                "kernel rank must lie in [1, {r}], got {k}"
            )));
        }
        let Some(chi_0) = target_chi(problem) else {
            return Ok(DeltaBound::Unbounded);
        };
        let ratio = Rational::from(r) / Rational::from(k);
        let poly = chi_e - &(chi_e - &chi_0).scale(&ratio);
        let delta1 = top(&poly);
        return Ok(DeltaBound::Bounded {
            polynomial: Some(poly),
            delta1,
        });
    }

    match target.kind {
        TargetKind::StructureSheaf => {
            if r < 2 {
                return Err(Error::RankTooSmall { min: 2, got: r });
            }
            let r_minus_1 = Rational::from(r - 1);
            let delta1 = -(problem.degree() / &r_minus_1);
            let polynomial = target_chi(problem)
                .map(|chi_o| (&chi_o.scale(&Rational::from(r)) - chi_e).scale(&r_minus_1.recip()));
            Ok(DeltaBound::Bounded { polynomial, delta1 })
        }
        TargetKind::TorsionOnDivisor => Ok(DeltaBound::Bounded {
            polynomial: target.chi.clone(),
            delta1: target.degree.clone(),
        }),
        TargetKind::General => Ok(DeltaBound::Unbounded),
    }
}

/// `χ_{E₀}`, supplied or (for `O_X` on a curve) derived.
fn target_chi(problem: &PairProblem) -> Option<RationalPolynomial> {
    let target = problem.target();
    if let Some(chi) = &target.chi {
        return Some(chi.clone());
    }
    if target.kind == TargetKind::StructureSheaf && problem.ctx().is_curve() {
        return hilbert_polynomial(problem.ctx(), &Rational::one(), &Rational::zero(), &[]).ok();
    }
    None
}

/// Candidate walls for `δ₁`: `[0, −d/(r−1)) ∩ {(a·r − s·d)/(r − s) : a ∈ ℤ, 0 ≤ s < r}`,
/// with `0` always included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSet {
    pub walls: Vec<Rational>,
    pub range_hi: Rational,
    /// The defining interval `[0, −d/(r−1))` is empty.
    pub degenerate: bool,
}

pub fn wall_set(r: u32, d: &Rational) -> Result<WallSet> {
    if r < 2 {
        return Err(Error::RankTooSmall { min: 2, got: r });
    }
    let r_q = Rational::from(r);
    let range_hi = -(d / &Rational::from(r - 1));
    let degenerate = !range_hi.is_positive();
    let mut walls = BTreeSet::from([Rational::zero()]);
    if !degenerate {
        for s in 0..r {
            let s_q = Rational::from(s);
            let width = Rational::from(r - s);
            // 0 ≤ (a·r − s·d)/(r − s) < range_hi  ⇔  s·d/r ≤ a < (s·d + (r − s)·range_hi)/r
            let lo = &s_q * d / &r_q;
            let hi = (&s_q * d + &width * &range_hi) / &r_q;
            let mut a = lo.ceil();
            while Rational::from(a.clone()) < hi {
                let wall = (Rational::from(a.clone()) * &r_q - &s_q * d) / &width;
                walls.insert(wall);
                a += 1;
            }
        }
    }
    Ok(WallSet {
        walls: walls.into_iter().collect(),
        range_hi,
        degenerate,
    })
}

/// An open interval `(lo, hi)` of `δ₁` values; `hi = None` is `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub lo: Rational,
    pub hi: Option<Rational>,
    pub index: i64,
    /// The chamber extends past the range where pairs with kernel exist.
    #[serde(default)]
    pub beyond_range: bool,
}

impl Chamber {
    pub fn contains(&self, x: &Rational) -> bool {
        x > &self.lo && self.hi.as_ref().is_none_or(|hi| x < hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "location", rename_all = "snake_case")]
pub enum ChamberLocation {
    Chamber(Chamber),
    OnWall { value: Rational },
}

impl WallSet {
    /// Open chambers between consecutive walls; the last one ends at `range_hi`.
    pub fn chambers(&self) -> Vec<Chamber> {
        if self.degenerate {
            return Vec::new();
        }
        let mut ends: Vec<Rational> = self.walls.iter().skip(1).cloned().collect();
        ends.push(self.range_hi.clone());
        self.walls
            .iter()
            .zip(ends)
            .enumerate()
            .map(|(i, (lo, hi))| Chamber {
                lo: lo.clone(),
                hi: Some(hi),
                index: i as i64,
                beyond_range: false,
            })
            .collect()
    }

    /// Interior walls, i.e. those strictly above 0.
    pub fn interior(&self) -> impl Iterator<Item = &Rational> {
        self.walls.iter().filter(|w| w.is_positive())
    }
}

pub fn chamber_of(walls: &WallSet, delta1: &Rational) -> Result<ChamberLocation> {
    if !delta1.is_positive() {
        return Err(Error::OutOfRange(format!("δ₁ = {delta1} must be positive")));
    }
    let on_range_end = !walls.degenerate && delta1 == &walls.range_hi;
    if on_range_end || walls.walls.binary_search(delta1).is_ok() {
        return Ok(ChamberLocation::OnWall {
            value: delta1.clone(),
        });
    }
    // walls always contains 0 < δ₁
    let index = walls.walls.partition_point(|w| w < delta1) - 1;
    let lo = walls.walls[index].clone();
    let chamber = if walls.degenerate {
        Chamber {
            lo,
            hi: None,
            index: index as i64,
            beyond_range: true,
        }
    } else if delta1 > &walls.range_hi {
        Chamber {
            lo: walls.range_hi.clone(),
            hi: None,
            index: index as i64 + 1,
            beyond_range: true,
        }
    } else {
        Chamber {
            lo,
            hi: Some(
                walls
                    .walls
                    .get(index + 1)
                    .cloned()
                    .unwrap_or_else(|| walls.range_hi.clone()),
            ),
            index: index as i64,
            beyond_range: false,
        }
    };
    Ok(ChamberLocation::Chamber(chamber))
}

/// `(max{0, 2i + d}, 2i + d + 2)`: the `i`-th rank-2 chamber for a line-bundle
/// target, inside which every semistable pair is μ-stable and the conditions
/// do not depend on `δ`.
pub fn rank2_chamber(i: i64, d: &Rational) -> Result<Chamber> {
    let base = Rational::from(2 * i) + d;
    let lo = base.clone().max(Rational::zero());
    let hi = base + Rational::from(2);
    if hi <= lo {
        return Err(Error::EmptyInterval {
            lo: Box::new(lo),
            hi: Box::new(hi),
        });
    }
    Ok(Chamber {
        lo,
        hi: Some(hi),
        index: i,
        beyond_range: false,
    })
}

/// `[lo, hi) ∩ ℤ ≠ ∅`
fn half_open_has_integer(lo: &Rational, hi: &Rational) -> bool {
    Rational::from(lo.ceil()) < *hi
}

/// Integer-free interval test: `true` iff for every `0 < s < r` both
/// `[sd/r, sd/r + δ₁(r−s)/r)` and `[sd/r − δ₁/r, sd/r)` contain no integer.
pub fn mu_interval_criterion(r: u32, d: &Rational, delta1: &Rational) -> Result<bool> {
    if r < 2 {
        return Err(Error::RankTooSmall { min: 2, got: r });
    }
    if !delta1.is_positive() {
        return Err(Error::OutOfRange(format!("δ₁ = {delta1} must be positive")));
    }
    let r_q = Rational::from(r);
    Ok((1..r).all(|s| {
        let center = Rational::from(s) * d / &r_q;
        let up = &center + &(delta1 * &Rational::from(r - s) / &r_q);
        let down = &center - &(delta1 / &r_q);
        !half_open_has_integer(&center, &up) && !half_open_has_integer(&down, &center)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantBound {
    /// `−δ₁ / (4H²)`
    pub stated: Rational,
    /// `−δ₁² / H²`, from the Hodge-index chain.
    pub proof_derived: Rational,
}

/// Lower bounds for `4c₂ − c₁²` of a μ-semistable rank-2 pair on a surface.
pub fn discriminant_bound(delta1: &Rational, h_squared: &Rational) -> Result<DiscriminantBound> {
    if !h_squared.is_positive() {
        return Err(Error::OutOfRange(format!(
            "H² = {h_squared} must be positive"
        )));
    }
    if delta1.is_negative() {
        return Err(Error::OutOfRange(format!(
            "δ₁ = {delta1} must be non-negative"
        )));
    }
    Ok(DiscriminantBound {
        stated: -(delta1 / &(Rational::from(4) * h_squared)),
        proof_derived: -(delta1 * delta1 / h_squared),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionDegree {
    /// Gap `ε` between `d/2 + δ₁/2` and the largest integer below it.
    pub gap: Rational,
    /// `(1/ε)(c₂ − c₁²/4 + δ₁²/(4H²))`.
    pub threshold: Rational,
    #[serde(with = "crate::rational::bigint_string")]
    pub n0: BigInt,
}

/// Least `n₀` such that locally free μ-stable rank-2 pairs restrict to
/// μ-stable pairs on smooth curves in `|nH|` for `n ≥ n₀`, with parameter `n·δ₁`.
///
/// Errors with [`Error::OnWall`] when `d/2 + δ₁/2` is an integer.
pub fn restriction_degree(
    d: &Rational,
    c1_squared: &Rational,
    c2: &Rational,
    delta1: &Rational,
    h_squared: &Rational,
) -> Result<RestrictionDegree> {
    if !d.is_integer() {
        return Err(Error::NotIntegral(Box::new(d.clone())));
    }
    if !delta1.is_positive() {
        return Err(Error::OutOfRange(format!("δ₁ = {delta1} must be positive")));
    }
    if !h_squared.is_positive() {
        return Err(Error::OutOfRange(format!(
            "H² = {h_squared} must be positive"
        )));
    }
    let half = Rational::new(1, 2);
    let bound = (d + delta1) * &half;
    if bound.is_integer() {
        return Err(Error::OnWall(Box::new(bound)));
    }
    let gap = bound.fract();
    let excess =
        c2 - &(c1_squared / &Rational::from(4)) + delta1 * delta1 / (Rational::from(4) * h_squared);
    let threshold = excess / &gap;
    let n0 = (threshold.floor() + BigInt::from(1)).max(BigInt::from(1));
    Ok(RestrictionDegree { gap, threshold, n0 })
}

/// Index range of the nonempty rank-2 chamber series for `d < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRange {
    pub i_min: i64,
    pub i_max: i64,
}

impl SeriesRange {
    pub fn contains(&self, i: i64) -> bool {
        (self.i_min..=self.i_max).contains(&i)
    }

    /// Moduli spaces with index `i ≥ −d` are empty.
    pub fn is_empty_at(&self, i: i64) -> bool {
        i > self.i_max
    }
}

/// `(⌊−d/2 − 1⌋ + 1, −d − 1)`.
pub fn series_indices(d: &Rational) -> Result<SeriesRange> {
    let d_int = d
        .to_i64()
        .ok_or_else(|| Error::NotIntegral(Box::new(d.clone())))?;
    if d_int >= 0 {
        return Err(Error::OutOfRange(format!(
            "degree must be negative, got {d}"
        )));
    }
    let lo = Rational::new(-d_int, 2) - Rational::one();
    let i_min = lo.floor().to_i64().expect("fits") + 1;
    Ok(SeriesRange {
        i_min,
        i_max: -d_int - 1,
    })
}

/// Half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftOpenInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl LeftOpenInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        x > &self.lo && x <= &self.hi
    }
}

/// `(0, r·l(D)]`: the `δ` for which semistable pairs with target `O_D^{⊕r}`
/// exist on a curve of genus at least 2.
pub fn level_structure_window(r: u32, level_length: u64) -> Result<LeftOpenInterval> {
    if level_length == 0 {
        return Err(Error::OutOfRange("level length must be at least 1".into()));
    }
    Ok(LeftOpenInterval {
        lo: Rational::zero(),
        hi: Rational::from(u64::from(r) * level_length),
    })
}

/// Generic dimension `r²(g − 1) + r²·l(D)`.
pub fn level_structure_dimension(r: u32, g: i64, level_length: u64) -> i64 {
    let r2 = i64::from(r) * i64::from(r);
    r2 * (g - 1) + r2 * level_length as i64
}

/// Dimension of the strictly semistable locus for rank 2, degree 0, `δ = 1`
/// and a level structure at one reduced point: `P¹ × U(−1, 2)`, i.e.
/// `1 + (4(g − 1) + 1)`.
pub fn point_level_strictly_semistable_dimension(g: i64) -> i64 {
    1 + (4 * (g - 1) + 1)
}

/// One prime component `C_i` of the framing divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingComponent {
    /// Multiplicity `a_i` in `H = Σ a_i C_i`.
    pub multiplicity: u64,
    /// `ν_s(E₀, C_i)` for `s = 1, …, r − 1`.
    pub nu: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedWindow {
    /// `max_{0<s<r} r·s/(r−s) · Σ a_i ν_s`, before clamping at 0.
    pub lower_bound: Rational,
    /// Effective open window `(max(lower_bound, 0), (r − 1)·C.H)`; `None` when empty.
    pub window: Option<(Rational, Rational)>,
}

impl FramedWindow {
    pub fn is_empty(&self) -> bool {
        self.window.is_none()
    }

    pub fn contains(&self, delta1: &Rational) -> bool {
        self.window
            .as_ref()
            .is_some_and(|(lo, hi)| delta1 > lo && delta1 < hi)
    }
}

/// `δ₁` window inside which every strongly framed bundle is a μ-stable pair.
pub fn framed_delta_window(
    r: u32,
    c_dot_h: &Rational,
    components: &[FramingComponent],
) -> Result<FramedWindow> {
    if r < 1 {
        return Err(Error::RankTooSmall { min: 1, got: r });
    }
    if !c_dot_h.is_positive() {
        return Err(Error::OutOfRange(format!(
            "C.H = {c_dot_h} must be positive"
        )));
    }
    let expected = (r - 1) as usize;
    for c in components {
        if c.nu.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: c.nu.len(),
            });
        }
    }
    let r_q = Rational::from(r);
    let lower_bound = (1..r)
        .map(|s| {
            let weighted: Rational = components
                .iter()
                .map(|c| Rational::from(c.multiplicity) * &c.nu[(s - 1) as usize])
                .sum();
            &r_q * &Rational::from(s) / Rational::from(r - s) * weighted
        })
        .max()
        .unwrap_or_else(Rational::zero);
    let lo = lower_bound.clone().max(Rational::zero());
    let hi = Rational::from(r - 1) * c_dot_h;
    Ok(FramedWindow {
        lower_bound,
        window: (lo < hi).then_some((lo, hi)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{TargetSheafDescriptor, VarietyContext};
    use crate::rational::q;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn wall_set_examples() {
        let w = wall_set(2, &q(-5, 1)).unwrap();
        assert_eq!(w.walls, ints(&[0, 1, 2, 3, 4]));
        assert_eq!(w.range_hi, q(5, 1));
        assert!(!w.degenerate);

        assert_eq!(wall_set(2, &q(-1, 1)).unwrap().walls, ints(&[0]));

        let w = wall_set(2, &q(0, 1)).unwrap();
        assert!(w.degenerate);
        assert_eq!(w.walls, ints(&[0]));

        assert!(wall_set(1, &q(-1, 1)).is_err());
    }

    #[test]
    fn wall_set_rank_three() {
        // [0, 2) ∩ {a, (3a + 4)/2, 3a + 8}
        let w = wall_set(3, &q(-4, 1)).unwrap();
        assert_eq!(w.walls, vec![q(0, 1), q(1, 2), q(1, 1)]);
    }

    #[test]
    fn chamber_of_examples() {
        let w = wall_set(2, &q(-5, 1)).unwrap();
        let ChamberLocation::Chamber(c) = chamber_of(&w, &q(3, 2)).unwrap() else {
            panic!()
        };
        assert_eq!((c.lo, c.hi, c.index), (q(1, 1), Some(q(2, 1)), 1));
        assert_eq!(
            chamber_of(&w, &q(2, 1)).unwrap(),
            ChamberLocation::OnWall { value: q(2, 1) }
        );
        assert!(chamber_of(&w, &q(0, 1)).is_err());

        let w = wall_set(2, &q(-1, 1)).unwrap();
        let ChamberLocation::Chamber(c) = chamber_of(&w, &q(1, 2)).unwrap() else {
            panic!()
        };
        assert_eq!((c.lo, c.hi), (q(0, 1), Some(q(1, 1))));
    }

    #[test]
    fn chamber_of_past_range() {
        let w = wall_set(2, &q(-1, 1)).unwrap();
        let ChamberLocation::Chamber(c) = chamber_of(&w, &q(3, 1)).unwrap() else {
            panic!()
        };
        assert!(c.beyond_range && c.hi.is_none());
        let w = wall_set(2, &q(0, 1)).unwrap();
        let ChamberLocation::Chamber(c) = chamber_of(&w, &q(1, 2)).unwrap() else {
            panic!()
        };
        assert!(c.beyond_range);
    }

    #[test]
    fn rank2_chamber_examples() {
        let d = q(-5, 1);
        let c = rank2_chamber(2, &d).unwrap();
        assert_eq!((c.lo, c.hi), (q(0, 1), Some(q(1, 1))));
        let c = rank2_chamber(3, &d).unwrap();
        assert_eq!((c.lo, c.hi), (q(1, 1), Some(q(3, 1))));
        let c = rank2_chamber(4, &d).unwrap();
        assert_eq!((c.lo, c.hi), (q(3, 1), Some(q(5, 1))));
        assert!(matches!(
            rank2_chamber(1, &d),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn mu_interval_criterion_examples() {
        assert!(mu_interval_criterion(2, &q(-1, 1), &q(2, 5)).unwrap());
        assert!(!mu_interval_criterion(2, &q(0, 1), &q(1, 2)).unwrap());
        assert!(!mu_interval_criterion(2, &q(-1, 1), &q(6, 5)).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        let b = discriminant_bound(&q(0, 1), &q(3, 1)).unwrap();
        assert_eq!((b.stated, b.proof_derived), (q(0, 1), q(0, 1)));
        let b = discriminant_bound(&q(2, 1), &q(1, 1)).unwrap();
        assert_eq!(b.stated, q(-1, 2));
        assert_eq!(b.proof_derived, q(-4, 1));
    }

    #[test]
    fn restriction_degree_examples() {
        let r = restriction_degree(&q(0, 1), &q(0, 1), &q(2, 1), &q(1, 1), &q(1, 1)).unwrap();
        assert_eq!(r.gap, q(1, 2));
        assert_eq!(r.threshold, q(9, 2));
        assert_eq!(r.n0, BigInt::from(5));

        let r = restriction_degree(&q(0, 1), &q(4, 1), &q(1, 1), &q(1, 1000), &q(1, 1)).unwrap();
        assert_eq!(r.n0, BigInt::from(1));

        assert_eq!(
            restriction_degree(&q(0, 1), &q(0, 1), &q(2, 1), &q(2, 1), &q(1, 1)),
            Err(Error::OnWall(Box::new(q(1, 1))))
        );
    }

    #[test]
    fn series_examples() {
        let s = series_indices(&q(-5, 1)).unwrap();
        assert_eq!((s.i_min, s.i_max), (2, 4));
        assert!(s.is_empty_at(5));
        let s = series_indices(&q(-2, 1)).unwrap();
        assert_eq!((s.i_min, s.i_max), (1, 1));
        assert!(series_indices(&q(0, 1)).is_err());
        assert!(series_indices(&q(-1, 2)).is_err());
    }

    #[test]
    fn level_structure_examples() {
        let w = level_structure_window(2, 1).unwrap();
        assert!(w.contains(&q(1, 1)));
        assert!(!w.contains(&q(5, 2)));
        assert!(w.contains(&q(2, 1)));
        assert!(!w.contains(&q(0, 1)));
        assert_eq!(level_structure_dimension(2, 2, 1), 8);
        for g in 2..10 {
            assert_eq!(level_structure_dimension(2, g, 1), 4 * g);
            assert_eq!(
                level_structure_dimension(2, g, 1) - point_level_strictly_semistable_dimension(g),
                2
            );
        }
    }

    #[test]
    fn framed_window_examples() {
        let trivial = FramingComponent {
            multiplicity: 2,
            nu: vec![q(0, 1); 2],
        };
        let w = framed_delta_window(3, &q(4, 1), &[trivial]).unwrap();
        assert_eq!(w.window, Some((q(0, 1), q(8, 1))));

        let c = FramingComponent {
            multiplicity: 1,
            nu: vec![q(1, 1)],
        };
        let w = framed_delta_window(2, &q(3, 1), std::slice::from_ref(&c)).unwrap();
        assert_eq!(w.window, Some((q(2, 1), q(3, 1))));
        let w = framed_delta_window(2, &q(2, 1), &[c]).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn delta_upper_bound_examples() {
        let ctx = VarietyContext::curve(2, q(1, 1)).unwrap();
        let p = PairProblem::new(
            ctx.clone(),
            2,
            q(-3, 1),
            &[],
            RationalPolynomial::constant(q(1, 1)),
            TargetSheafDescriptor::structure_sheaf(),
        )
        .unwrap();
        let b = delta_upper_bound(&p, None).unwrap();
        assert_eq!(b.delta1(), Some(&q(3, 1)));
        // (2·χ_O − χ_E)/1 with χ_O = z − 1, χ_E = 2z − 3 − 2
        assert_eq!(
            b,
            DeltaBound::Bounded {
                polynomial: Some(RationalPolynomial::constant(q(3, 1))),
                delta1: q(3, 1)
            }
        );

        let p = PairProblem::new(
            ctx.clone(),
            2,
            q(1, 1),
            &[],
            RationalPolynomial::constant(q(1, 1)),
            TargetSheafDescriptor::structure_sheaf(),
        )
        .unwrap();
        assert!(!delta_upper_bound(&p, None)
            .unwrap()
            .admits_positive_delta1());

        let p = PairProblem::new(
            ctx.clone(),
            2,
            q(0, 1),
            &[],
            RationalPolynomial::constant(q(1, 1)),
            TargetSheafDescriptor::level_structure(2, 3),
        )
        .unwrap();
        assert_eq!(
            delta_upper_bound(&p, None).unwrap().delta1(),
            Some(&q(6, 1))
        );

        let p1 = PairProblem::new(
            ctx,
            1,
            q(0, 1),
            &[],
            RationalPolynomial::constant(q(1, 1)),
            TargetSheafDescriptor::structure_sheaf(),
        )
        .unwrap();
        assert!(delta_upper_bound(&p1, None).is_err());
    }

    #[test]
    fn general_bound_with_kernel_rank_matches_structure_sheaf_case() {
        let ctx = VarietyContext::curve(3, q(2, 1)).unwrap();
        let p = PairProblem::new(
            ctx,
            3,
            q(-7, 1),
            &[],
            RationalPolynomial::constant(q(1, 1)),
            TargetSheafDescriptor::structure_sheaf(),
        )
        .unwrap();
        let special = delta_upper_bound(&p, None).unwrap();
        let general = delta_upper_bound(&p, Some(2)).unwrap();
        assert_eq!(special, general);
    }
}
