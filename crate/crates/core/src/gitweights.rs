//! Hilbert–Mumford weights for the point `([a], [T])` under a 1-parameter
//! subgroup of `SL(V)`, `dim V = p`.
//!
//! A 1-PS is a nondecreasing zero-sum weight vector `γ`. For a fixed basis the
//! numerical data reduce to a [`BasisProfile`] `(ℓ, K)`, and the combined weight
//! is `μ̂ = −(γ_K + η·γ_ℓ)`. Since `μ̂` is linear in `γ` and the weight vectors
//! form the cone over the special vectors `γ⁽ⁱ⁾`, the sign of `μ̂` on the cone
//! is decided by the critical values `μ⁽ⁱ⁾ = μ̂(γ⁽ⁱ⁾)`.
//! [`brute_force_verdict`] decides the same question by enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::stability::{Mode, Verdict};

/// Nondecreasing weights `γ₁ ≤ … ≤ γ_p` with `Σγ = 0` and `γ₁ < γ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(gamma: Vec<Rational>) -> Result<Self> {
        if gamma.len() < 2 {
            return Err(Error::InvalidWeights("need at least two weights".into()));
        }
        if gamma.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeights(
                "weights must be nondecreasing".into(),
            ));
        }
        if !gamma.iter().sum::<Rational>().is_zero() {
            return Err(Error::InvalidWeights("weights must sum to zero".into()));
        }
        if gamma.first() == gamma.last() {
            return Err(Error::InvalidWeights(
                "trivial 1-parameter subgroup (γ₁ = γ_p)".into(),
            ));
        }
        Ok(WeightVector(gamma))
    }

    pub fn from_integers(gamma: &[i64]) -> Result<Self> {
        Self::new(gamma.iter().map(|&g| Rational::from(g)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    /// `γ_i`, 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidWeights("scale must be positive".into()));
        }
        Ok(WeightVector(self.0.iter().map(|g| g * c).collect()))
    }
}

impl TryFrom<Vec<Rational>> for WeightVector {
    type Error = Error;
    fn try_from(v: Vec<Rational>) -> Result<Self> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<Rational> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

/// The basis summary `(p, r, ℓ, K)`: `ℓ = min{i | a(v_i) ≠ 0}` and `k_ρ` the
/// first index at which the generated subsheaf reaches rank `ρ`. 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisProfile {
    p: usize,
    r: usize,
    ell: usize,
    k: Vec<usize>,
}

impl BasisProfile {
    pub fn new(p: usize, r: usize, ell: usize, k: Vec<usize>) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidProfile(format!("p = {p} must be at least 2")));
        }
        if r == 0 || r > p {
            return Err(Error::InvalidProfile(format!(
                "r = {r} must lie in [1, {p}]"
            )));
        }
        if !(1..=p).contains(&ell) {
            return Err(Error::InvalidProfile(format!(
                "ℓ = {ell} must lie in [1, {p}]"
            )));
        }
        if k.len() != r {
            return Err(Error::LengthMismatch {
                expected: r,
                got: k.len(),
            });
        }
        if k.first().is_some_and(|&k1| k1 < 1)
            || k.last().is_some_and(|&kr| kr > p)
            || k.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidProfile(format!(
                "K = {k:?} must be strictly increasing in [1, {p}]"
            )));
        }
        Ok(BasisProfile { p, r, ell, k })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    /// Every valid profile for the given `(p, r)`.
    pub fn all(p: usize, r: usize) -> Vec<BasisProfile> {
        let mut out = Vec::new();
        for k in combinations(p, r) {
            for ell in 1..=p {
                out.push(BasisProfile {
                    p,
                    r,
                    ell,
                    k: k.clone(),
                });
            }
        }
        out
    }

    /// `max{j | k_j ≤ i}`, zero when no `k_j ≤ i`.
    fn rank_at(&self, i: usize) -> usize {
        self.k.iter().take_while(|&&kj| kj <= i).count()
    }
}

/// Strictly increasing `r`-subsets of `{1, …, p}`, lexicographic.
fn combinations(p: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, p: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..=p {
            if p - x + 1 < r - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, p, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, p, r, &mut Vec::new(), &mut out);
    out
}

/// `μ̂ = η·μ + μ′ = −(γ_K + η·γ_ℓ)`.
pub fn mu_hat(profile: &BasisProfile, gamma: &WeightVector, eta: &Rational) -> Result<Rational> {
    if gamma.len() != profile.p {
        return Err(Error::LengthMismatch {
            expected: profile.p,
            got: gamma.len(),
        });
    }
    let gamma_k: Rational = profile.k.iter().map(|&kj| gamma.get(kj)).sum();
    Ok(-(gamma_k + eta * gamma.get(profile.ell)))
}

/// `γ⁽ⁱ⁾ = (i − p, …, i − p, i, …, i)` with `i` leading entries equal to `i − p`.
pub fn special_weight_vector(p: usize, i: usize) -> Result<WeightVector> {
    if p < 2 || !(1..p).contains(&i) {
        return Err(Error::OutOfRange(format!(
            "i = {i} must lie in [1, {}]",
            p.saturating_sub(1)
        )));
    }
    let low = Rational::from(i as i64 - p as i64);
    let high = Rational::from(i as i64);
    let gamma = (1..=p)
        .map(|m| if m <= i { low.clone() } else { high.clone() })
        .collect();
    WeightVector::new(gamma)
}

/// `c_i = (γ_{i+1} − γ_i)/p`, so that `γ = Σ c_i γ⁽ⁱ⁾` with all `c_i ≥ 0`.
pub fn cone_coefficients(gamma: &WeightVector) -> Vec<Rational> {
    let p = Rational::from(gamma.len());
    gamma
        .as_slice()
        .windows(2)
        .map(|w| (&w[1] - &w[0]) / &p)
        .collect()
}

/// `μ⁽ⁱ⁾ = p·(max{j | k_j ≤ i} + η·[ℓ ≤ i]) − i·(r + η)`.
pub fn critical_mu(profile: &BasisProfile, eta: &Rational, i: usize) -> Result<Rational> {
    if !(1..profile.p).contains(&i) {
        return Err(Error::OutOfRange(format!(
            "i = {i} must lie in [1, {}]",
            profile.p - 1
        )));
    }
    let p = Rational::from(profile.p);
    let mut inner = Rational::from(profile.rank_at(i));
    if profile.ell <= i {
        inner += eta;
    }
    let r_eta = Rational::from(profile.r) + eta;
    Ok(p * inner - Rational::from(i) * r_eta)
}

/// The indices just before a jump of `μ⁽ⁱ⁾`: `{ℓ − 1} ∪ {k_j − 1}` within `[1, p − 1]`.
pub fn critical_indices(profile: &BasisProfile) -> Vec<usize> {
    let mut out: Vec<usize> = std::iter::once(profile.ell)
        .chain(profile.k.iter().copied())
        .filter_map(|x| x.checked_sub(1))
        .filter(|&i| (1..profile.p).contains(&i))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `0 (≤) p·(j − 1) − (ℓ_j − 1)·(r + η)`, `1 ≤ j ≤ r + 1`, `ℓ_j > 1`.
    Framing,
    /// `0 (≤) p·(j − 1 + η) − (k_j − 1)·(r + η)`, `1 ≤ j ≤ r`.
    Generation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub condition: Condition,
    pub j: usize,
    /// Right-hand side of `0 (≤) value`.
    pub value: Rational,
}

/// All applicable rows of the two-condition table for `(profile, η)`.
///
/// `ℓ_j = min{k_j, ℓ}` with `k_{r+1} = p + 1`, so the row `j = r + 1` of
/// condition (1) always reads with `ℓ_{r+1} = ℓ`.
pub fn condition_rows(profile: &BasisProfile, eta: &Rational) -> Vec<ConditionRow> {
    let p = Rational::from(profile.p);
    let r_eta = Rational::from(profile.r) + eta;
    let k_at = |j: usize| {
        if j <= profile.r {
            profile.k[j - 1]
        } else {
            profile.p + 1
        }
    };
    let mut rows = Vec::with_capacity(2 * profile.r + 1);
    for j in 1..=profile.r + 1 {
        let ell_j = k_at(j).min(profile.ell);
        if ell_j > 1 {
            rows.push(ConditionRow {
                condition: Condition::Framing,
                j,
                value: &p * &Rational::from(j - 1) - Rational::from(ell_j - 1) * &r_eta,
            });
        }
    }
    for j in 1..=profile.r {
        rows.push(ConditionRow {
            condition: Condition::Generation,
            j,
            value: &p * &(Rational::from(j - 1) + eta) - Rational::from(k_at(j) - 1) * &r_eta,
        });
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitVerdict {
    pub verdict: Verdict,
    pub rows: Vec<ConditionRow>,
}

/// Decides (semi)stability of the profile from the condition table.
pub fn hilbert_verdict(profile: &BasisProfile, eta: &Rational, mode: Mode) -> Result<GitVerdict> {
    if !eta.is_positive() {
        return Err(Error::OutOfRange(format!("η = {eta} must be positive")));
    }
    let rows = condition_rows(profile, eta);
    let min = rows
        .iter()
        .map(|row| &row.value)
        .min()
        .cloned()
        .expect("condition (2) contributes r ≥ 1 rows");
    Ok(GitVerdict {
        verdict: Verdict::scalar(mode, min),
        rows,
    })
}

/// All nondecreasing integer weight vectors of length `p` with entries in
/// `[−bound·p, bound·p]`, zero sum and `γ₁ < γ_p`, stored row-major.
#[derive(Clone, Debug)]
pub struct WeightLattice {
    p: usize,
    bound: i64,
    entries: Vec<i32>,
}

impl WeightLattice {
    pub fn new(p: usize, bound: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::OutOfRange(format!("p = {p} must be at least 2")));
        }
        if bound < 1 {
            return Err(Error::OutOfRange(format!(
                "bound = {bound} must be at least 1"
            )));
        }
        let limit = bound * p as i64;
        if limit > i64::from(i32::MAX) / p as i64 {
            return Err(Error::OutOfRange("enumeration bound too large".into()));
        }
        let mut entries = Vec::new();
        let mut cur = Vec::with_capacity(p);
        enumerate(p, -limit, limit, 0, &mut cur, &mut entries);
        Ok(WeightLattice { p, bound, entries })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.entries.len() / self.p
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[i32]> {
        self.entries.chunks_exact(self.p)
    }
}

/// Depth-first fill of `cur` with entries in `[lo, limit]`, nondecreasing,
/// whose total must come out to zero.
fn enumerate(p: usize, lo: i64, limit: i64, sum: i64, cur: &mut Vec<i32>, out: &mut Vec<i32>) {
    let left = (p - cur.len()) as i64;
    if left == 0 {
        if sum == 0 && cur.first() != cur.last() {
            out.extend_from_slice(cur);
        }
        return;
    }
    for v in lo..=limit {
        // the remaining entries are all ≥ v and ≤ limit
        if sum + v * left > 0 {
            break;
        }
        if sum + v + limit * (left - 1) < 0 {
            continue;
        }
        cur.push(v as i32);
        enumerate(p, v, limit, sum + v, cur, out);
        cur.pop();
    }
}

/// Oracle: minimizes `μ̂` over every vector of a freshly built [`WeightLattice`].
pub fn brute_force_verdict(
    profile: &BasisProfile,
    eta: &Rational,
    bound: i64,
    mode: Mode,
) -> Result<Verdict> {
    let lattice = WeightLattice::new(profile.p, bound)?;
    brute_force_verdict_on(&lattice, profile, eta, mode)
}

/// As [`brute_force_verdict`], reusing an enumerated lattice.
///
/// The margin is the minimum of `μ̂` over the lattice.
pub fn brute_force_verdict_on(
    lattice: &WeightLattice,
    profile: &BasisProfile,
    eta: &Rational,
    mode: Mode,
) -> Result<Verdict> {
    let mut out = brute_force_verdicts_on(lattice, profile, std::slice::from_ref(eta), mode)?;
    Ok(out.pop().expect("one verdict per η"))
}

/// One enumeration pass shared by several values of `η`.
pub fn brute_force_verdicts_on(
    lattice: &WeightLattice,
    profile: &BasisProfile,
    etas: &[Rational],
    mode: Mode,
) -> Result<Vec<Verdict>> {
    if lattice.p != profile.p {
        return Err(Error::LengthMismatch {
            expected: profile.p,
            got: lattice.p,
        });
    }
    if let Some(eta) = etas.iter().find(|eta| !eta.is_positive()) {
        return Err(Error::OutOfRange(format!("η = {eta} must be positive")));
    }
    let pairs = distinct_weight_pairs(lattice, profile);
    let verdicts = etas
        .iter()
        .map(|eta| {
            let min = match eta.to_i64_parts() {
                Some((num, den)) => {
                    // den·μ̂ = −(den·γ_K + num·γ_ℓ), exact in i128
                    let (num, den) = (i128::from(num), i128::from(den));
                    let scaled = pairs
                        .iter()
                        .map(|&(gk, gl)| -(den * i128::from(gk) + num * i128::from(gl)))
                        .min()
                        .expect("lattice contains every γ⁽ⁱ⁾");
                    Rational::from(num_bigint::BigInt::from(scaled))
                        / Rational::from(num_bigint::BigInt::from(den))
                }
                None => pairs
                    .iter()
                    .map(|&(gk, gl)| -(Rational::from(gk) + eta * &Rational::from(gl)))
                    .min()
                    .expect("lattice contains every γ⁽ⁱ⁾"),
            };
            Verdict::scalar(mode, min)
        })
        .collect();
    Ok(verdicts)
}

/// The distinct values of `(γ_K, γ_ℓ)` over the lattice; `μ̂` depends on `γ`
/// only through this pair.
fn distinct_weight_pairs(lattice: &WeightLattice, profile: &BasisProfile) -> Vec<(i64, i64)> {
    let ell = profile.ell - 1;
    let k: Vec<usize> = profile.k.iter().map(|&kj| kj - 1).collect();
    let limit = lattice.bound * lattice.p as i64;
    let r = k.len() as i64;
    let width = (2 * limit + 1) as usize;
    let height = (2 * r * limit + 1) as usize;
    let pair_of =
        |g: &[i32]| -> (i64, i64) { (k.iter().map(|&i| i64::from(g[i])).sum(), i64::from(g[ell])) };
    if width.saturating_mul(height) <= 1 << 24 {
        let mut seen = vec![false; width * height];
        for g in lattice.iter() {
            let (gk, gl) = pair_of(g);
            seen[(gk + r * limit) as usize * width + (gl + limit) as usize] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| ((i / width) as i64 - r * limit, (i % width) as i64 - limit))
            .collect()
    } else {
        let set: std::collections::BTreeSet<(i64, i64)> = lattice.iter().map(pair_of).collect();
        set.into_iter().collect()
    }
}

/// The subspace form: `dim W·(r + η) (≤) p·rk E_(W)` for `W ⊆ Ker a`, and
/// `dim W·(r + η) (≤) p·(rk E_(W) + η)` otherwise.
///
/// Evaluates the inequality as given; excluding `W = V` in stable mode is the
/// caller's concern.
#[allow(clippy::too_many_arguments)]
pub fn subspace_criterion(
    p: usize,
    r: usize,
    eta: &Rational,
    dim_w: usize,
    rank_ew: usize,
    in_ker_a: bool,
    mode: Mode,
) -> Result<Verdict> {
    if dim_w > p {
        return Err(Error::OutOfRange(format!(
            "dim W = {dim_w} exceeds p = {p}"
        )));
    }
    if rank_ew > r {
        return Err(Error::OutOfRange(format!(
            "rk E_(W) = {rank_ew} exceeds r = {r}"
        )));
    }
    if !eta.is_positive() {
        return Err(Error::OutOfRange(format!("η = {eta} must be positive")));
    }
    let lhs = Rational::from(dim_w) * (Rational::from(r) + eta);
    let mut rhs_factor = Rational::from(rank_ew);
    if !in_ker_a {
        rhs_factor += eta;
    }
    let rhs = Rational::from(p) * rhs_factor;
    Ok(Verdict::scalar(mode, rhs - lhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    EtaToDeltaBar,
    DeltaBarToEta,
}

/// `δ̄ = p·η/(r + η)` and its inverse `η = r·δ̄/(p − δ̄)`.
pub fn eta_delta_conversion(
    p: usize,
    r: usize,
    value: &Rational,
    direction: Direction,
) -> Result<Rational> {
    let p_q = Rational::from(p);
    let r_q = Rational::from(r);
    match direction {
        Direction::EtaToDeltaBar => {
            if !value.is_positive() {
                return Err(Error::OutOfRange(format!("η = {value} must be positive")));
            }
            Ok(&p_q * value / (r_q + value))
        }
        Direction::DeltaBarToEta => {
            if !value.is_positive() || value >= &p_q {
                return Err(Error::OutOfRange(format!(
                    "δ̄ = {value} must lie in (0, {p})"
                )));
            }
            Ok(r_q * value / (p_q - value))
        }
    }
}
