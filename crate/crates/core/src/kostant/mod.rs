//! Kostant partitions, τ-orbit partitions and the combinatorial counts
//! `R`, `𝔪`, `𝔭` that decide `Ext¹` vanishing over the preprojective algebra.

mod closed;
mod zab;

pub use closed::{interval_closed_forms, ClosedForms};
pub use zab::{commutator_nullity, CommutatorNullity};

use std::fmt;

use crate::error::{Error, Result};
use crate::quiverrep::HomTable;
use crate::rootsys::{Root, RootSystem};

/// Roots listed weakly decreasing in word order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KostantPartition {
    parts: Vec<Root>,
}

impl KostantPartition {
    /// Sorts the parts.
    pub fn new(mut parts: Vec<Root>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        KostantPartition { parts }
    }

    pub fn parts(&self) -> &[Root] {
        &self.parts
    }

    pub fn weight(&self, rs: &RootSystem) -> Vec<i64> {
        let mut w = vec![0; rs.rank()];
        for &p in &self.parts {
            for (acc, c) in w.iter_mut().zip(rs.coords(p)) {
                *acc += c;
            }
        }
        w
    }

    /// `parts=[a;b;...]`, each part in root notation.
    pub fn parse(rs: &RootSystem, text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix("parts=")
            .and_then(|s| s.trim().strip_prefix('['))
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidInput(format!("expected parts=[..;..], got '{t}'")))?;
        let parts = inner
            .split(';')
            .filter(|p| !p.trim().is_empty())
            .map(|p| rs.parse_root(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(parts))
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        let labels: Vec<String> = self.parts.iter().map(|&p| rs.root_label(p)).collect();
        format!("parts=[{}]", labels.join(";"))
    }
}

/// `(τ^u β, ..., τβ, β)` of length `u + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TauOrbitPartition {
    base: Root,
    parts: Vec<Root>,
    assumption: bool,
}

impl TauOrbitPartition {
    pub fn new(rs: &RootSystem, base: Root, length: usize) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidInput("orbit length must be at least 1".into()));
        }
        let mut parts = vec![base];
        for _ in 1..length {
            let next = rs.tau_root(*parts.last().unwrap()).ok_or_else(|| {
                Error::InvalidInput(format!("τ^{} of {} is not a positive root", parts.len(), rs.root_label(base)))
            })?;
            parts.push(next);
        }
        parts.reverse();
        let assumption = rs.tau_root(parts[0]).is_some();
        Ok(TauOrbitPartition { base, parts, assumption })
    }

    /// All orbits, ordered by (base position, length). With `valid_only`,
    /// only those whose largest part is not projective.
    pub fn enumerate(rs: &RootSystem, valid_only: bool) -> Vec<Self> {
        let mut out = Vec::new();
        for base in rs.roots() {
            for len in 1.. {
                let Ok(p) = Self::new(rs, base, len) else { break };
                if p.assumption || !valid_only {
                    out.push(p);
                }
            }
        }
        out
    }

    /// `tau-orbit base=<root> len=<k>`
    pub fn parse(rs: &RootSystem, text: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("expected 'tau-orbit base=<root> len=<k>', got '{}'", text.trim()));
        let rest = text.trim().strip_prefix("tau-orbit").ok_or_else(bad)?.trim();
        let rest = rest.strip_prefix("base=").ok_or_else(bad)?;
        let (root, len) = rest.rsplit_once("len=").ok_or_else(bad)?;
        let len: usize = len.trim().parse().map_err(|_| bad())?;
        Self::new(rs, rs.parse_root(root)?, len)
    }

    pub fn display(&self, rs: &RootSystem) -> String {
        format!("tau-orbit base={} len={}", rs.root_label(self.base), self.parts.len())
    }

    pub fn base(&self) -> Root {
        self.base
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Decreasing: `parts[0] = τ^u β`, the last part is `β`.
    pub fn parts(&self) -> &[Root] {
        &self.parts
    }

    /// `τ^{u+1} β ∈ R⁺`.
    pub fn assumption(&self) -> bool {
        self.assumption
    }

    /// The whole orbit from an injective root to a projective one; its
    /// determinantal module is projective-injective.
    pub fn is_frozen(&self, rs: &RootSystem) -> bool {
        !self.assumption && rs.is_injective(self.base)
    }

    /// `(τ^{u+1} β, ..., τβ)` when defined.
    pub fn tau(&self, rs: &RootSystem) -> Option<Self> {
        rs.tau_root(self.base).and_then(|b| Self::new(rs, b, self.len()).ok())
    }

    pub fn as_kostant(&self) -> KostantPartition {
        KostantPartition { parts: self.parts.clone() }
    }
}

/// Combinatorial data for an ordered pair `(λ, κ)`, 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionStats {
    pub r_set: Vec<usize>,
    /// `#(R ∩ window)`
    pub r_windowed: usize,
    /// `Σ [λ_1, κ_k]` over the window; equals `r_windowed` when the values are 0/1.
    pub r_weighted: usize,
    pub m_count: usize,
    pub p_count: usize,
    /// `𝔪 - 𝔭 = r_weighted`
    pub surjective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStats {
    pub forward: DirectionStats,
    pub backward: DirectionStats,
    pub criterion_holds: bool,
    /// Verdict with the windows swapped between directions (the exponent
    /// form's pairing), if it differs from `criterion_holds`.
    pub printed_window_verdict: Option<bool>,
    /// Verdict counting `R` as a plain set, if it differs from `criterion_holds`.
    pub set_reading_verdict: Option<bool>,
    /// Some table value used by the criterion exceeds 1.
    pub multiplicity_flag: bool,
}

/// `{k : [λ_1, κ_k] ≠ 0}`
pub fn r_set(table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> Vec<usize> {
    let top = lam.parts[0];
    kap.parts.iter().enumerate().filter(|&(_, &k)| table.hom(top, k) != 0).map(|(i, _)| i + 1).collect()
}

pub fn m_count(rs: &RootSystem, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> usize {
    pairs_ge(lam, kap).filter(|&(a, b)| rs.diff_is_root_or_zero(a, b)).count()
}

pub fn p_count(rs: &RootSystem, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> usize {
    pairs_ge(lam, kap).filter(|&(a, b)| rs.sum_is_root(a, b)).count()
}

fn pairs_ge<'a>(lam: &'a TauOrbitPartition, kap: &'a TauOrbitPartition) -> impl Iterator<Item = (Root, Root)> + 'a {
    lam.parts.iter().flat_map(move |&a| kap.parts.iter().filter(move |&&b| a >= b).map(move |&b| (a, b)))
}

/// `Σ [λ_i, κ_j] - Σ [λ_i, τκ_j]`
pub fn hom_minus_tauhom(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> Result<i64> {
    if !kap.assumption {
        return Err(Error::AssumptionViolated(format!("τ of {} leaves the positive roots", kap.display(rs))));
    }
    let mut total = 0i64;
    for &a in &lam.parts {
        for &b in &kap.parts {
            total += i64::from(table.hom(a, b)) - i64::from(table.hom_to_tau(rs, a, b));
        }
    }
    Ok(total)
}

fn count_in(set: &[usize], lo: usize, hi: usize) -> usize {
    set.iter().filter(|&&k| k >= lo && k <= hi).count()
}

/// `[1, t]` if `r ≥ t`, else `[t-r+1, t]`.
pub fn window(r: usize, t: usize) -> (usize, usize) {
    if r >= t {
        (1, t)
    } else {
        (t - r + 1, t)
    }
}

/// `#R(λ,κ)` if `|λ| ≥ |κ|`, else `#(R(λ,κ) ∩ [t-r+1, t])`.
pub fn windowed_r(r_set: &[usize], r: usize, t: usize) -> usize {
    let (lo, hi) = window(r, t);
    count_in(r_set, lo, hi)
}

/// `Σ_{k ∈ [lo, hi]} [λ_1, κ_k]`
fn weight_in(table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition, lo: usize, hi: usize) -> usize {
    (lo..=hi).map(|k| table.hom(lam.parts[0], kap.parts[k - 1]) as usize).sum()
}

fn require(rs: &RootSystem, p: &TauOrbitPartition) -> Result<()> {
    if p.assumption {
        Ok(())
    } else {
        Err(Error::AssumptionViolated(format!("{} has a projective top part", p.display(rs))))
    }
}

fn direction(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> DirectionStats {
    let r_set = r_set(table, lam, kap);
    let (lo, hi) = window(lam.len(), kap.len());
    let r_windowed = count_in(&r_set, lo, hi);
    let r_weighted = weight_in(table, lam, kap, lo, hi);
    let m_count = m_count(rs, lam, kap);
    let p_count = p_count(rs, lam, kap);
    let surjective = m_count as i64 - p_count as i64 == r_weighted as i64;
    DirectionStats { r_set, r_windowed, r_weighted, m_count, p_count, surjective }
}

pub fn surjectivity_criterion(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> Result<bool> {
    require(rs, lam)?;
    require(rs, kap)?;
    Ok(direction(rs, table, lam, kap).surjective)
}

pub fn ext_vanishing_criterion(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> Result<bool> {
    Ok(pair_stats(rs, table, lam, kap)?.criterion_holds)
}

pub fn pair_stats(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> Result<PairStats> {
    require(rs, lam)?;
    require(rs, kap)?;
    let forward = direction(rs, table, lam, kap);
    let backward = direction(rs, table, kap, lam);
    let criterion_holds = forward.surjective && backward.surjective;
    let printed = printed_window_verdict(table, lam, kap, &forward, &backward);
    let mp = |d: &DirectionStats| d.m_count as i64 - d.p_count as i64;
    let set_reading = [&forward, &backward].iter().all(|d| mp(d) == d.r_windowed as i64);
    let multiplicity_flag = lam
        .parts
        .iter()
        .chain(&kap.parts)
        .any(|&a| lam.parts.iter().chain(&kap.parts).any(|&b| table.hom(a, b) > 1));
    Ok(PairStats {
        forward,
        backward,
        criterion_holds,
        printed_window_verdict: (printed != criterion_holds).then_some(printed),
        set_reading_verdict: (set_reading != criterion_holds).then_some(set_reading),
        multiplicity_flag,
    })
}

/// Swapped windows with exponents `u, v`: `[u-v+1, u]` on `R(κ,λ)` when
/// `u ≥ v`, `[v-u+1, v]` on `R(λ,κ)` otherwise.
fn printed_window_verdict(
    table: &HomTable,
    lam: &TauOrbitPartition,
    kap: &TauOrbitPartition,
    fwd: &DirectionStats,
    bwd: &DirectionStats,
) -> bool {
    let mp = |d: &DirectionStats| d.m_count as i64 - d.p_count as i64;
    let (u, v) = (lam.len() - 1, kap.len() - 1);
    let (fwd_w, bwd_w) = if u >= v {
        (weight_in(table, lam, kap, 1, kap.len()), weight_in(table, kap, lam, u - v + 1, u))
    } else {
        (weight_in(table, lam, kap, v - u + 1, v), weight_in(table, kap, lam, 1, lam.len()))
    };
    fwd_w as i64 == mp(fwd) && bwd_w as i64 == mp(bwd)
}

impl fmt::Display for DirectionStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R={:?} windowed={} weighted={} m={} p={} surjective={}",
            self.r_set, self.r_windowed, self.r_weighted, self.m_count, self.p_count, self.surjective
        )
    }
}
