use super::TauOrbitPartition;
use crate::quiverrep::HomTable;
use crate::rootsys::RootSystem;

/// `(R, 𝔪, 𝔭)` from the interval decomposition of
/// `T(λ,κ) = {j ∈ Z : [λ_1, κ_j] = 1}`, where `κ_j = τ^{u+1-j} β` for every
/// integer `j` and non-roots contribute 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForms {
    Value { r_set: Vec<usize>, m_count: usize, p_count: usize, intervals: Vec<(i64, i64)> },
    HypothesisFailed(String),
}

pub fn interval_closed_forms(rs: &RootSystem, table: &HomTable, lam: &TauOrbitPartition, kap: &TauOrbitPartition) -> ClosedForms {
    let fail = |why: &str| ClosedForms::HypothesisFailed(why.to_string());
    if lam.len() != kap.len() {
        return fail("lengths differ");
    }
    if !lam.assumption() || !kap.assumption() {
        return fail("assumption violated");
    }
    let u = lam.len() as i64 - 1;
    let top = lam.parts()[0];
    let beta = kap.base();
    let kappa_j = |j: i64| rs.tau_shift(beta, u + 1 - j);
    // Every j with κ_j a root lies in a contiguous range around [1, u+1].
    let mut lo = 1;
    while kappa_j(lo - 1).is_some() {
        lo -= 1;
    }
    let mut hi = u + 1;
    while kappa_j(hi + 1).is_some() {
        hi += 1;
    }
    let mut t = Vec::new();
    for j in lo..=hi {
        match table.hom(top, kappa_j(j).unwrap()) {
            0 => {}
            1 => t.push(j),
            _ => return fail("hom multiplicity exceeds 1"),
        }
    }
    if t.iter().any(|&j| j < 0) {
        return fail("T meets the negative integers");
    }
    for (i, &a) in lam.parts().iter().enumerate() {
        for (j, &b) in kap.parts().iter().enumerate() {
            if (j as i64) - (i as i64) < -1 && table.hom(a, b) != 0 {
                return fail("[λ_i, κ_j] ≠ 0 for some j - i < -1");
            }
        }
    }
    let mut intervals: Vec<(i64, i64)> = Vec::new();
    for &j in &t {
        match intervals.last_mut() {
            Some(last) if last.1 + 1 == j => last.1 = j,
            _ => intervals.push((j, j)),
        }
    }
    let r_set = t.iter().filter(|&&j| (1..=u + 1).contains(&j)).map(|&j| j as usize).collect();
    let m_count = (1..=u + 1)
        .map(|i| intervals.iter().filter(|&&(up, _)| 2 - up <= i && i <= u - up + 2).count())
        .sum();
    // 𝔭 = Σ_{p ≤ m'} p (v_{p+1} - v_p) with v_{m'+1} read as u + 1.
    let ends: Vec<i64> = intervals.iter().map(|&(_, v)| v).filter(|&v| v <= u + 1).collect();
    let p_count = (0..ends.len())
        .map(|p| {
            let next = ends.get(p + 1).copied().unwrap_or(u + 1);
            (p as i64 + 1) * (next - ends[p])
        })
        .sum::<i64>() as usize;
    ClosedForms::Value { r_set, m_count, p_count, intervals }
}
