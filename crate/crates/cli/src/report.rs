//! Serializable reports. Field order is the JSON key order and is part of
//! the `schema: 1` contract.

use serde::{Deserialize, Serialize};

use dynkin_ar::kostant::DirectionStats;
use dynkin_ar::{PairOracle, PairStats};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionReport {
    pub r_set: Vec<usize>,
    pub r_windowed: usize,
    pub r_weighted: usize,
    pub m_count: usize,
    pub p_count: usize,
    pub surjective: bool,
}

impl From<&DirectionStats> for DirectionReport {
    fn from(d: &DirectionStats) -> Self {
        DirectionReport {
            r_set: d.r_set.clone(),
            r_windowed: d.r_windowed,
            r_weighted: d.r_weighted,
            m_count: d.m_count,
            p_count: d.p_count,
            surjective: d.surjective,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub forward: DirectionReport,
    pub backward: DirectionReport,
    pub criterion_holds: bool,
    pub multiplicity_flag: bool,
}

impl From<&PairStats> for StatsReport {
    fn from(s: &PairStats) -> Self {
        StatsReport {
            forward: (&s.forward).into(),
            backward: (&s.backward).into(),
            criterion_holds: s.criterion_holds,
            multiplicity_flag: s.multiplicity_flag,
        }
    }
}

/// Pairs are `[forward, backward]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub via_forms: usize,
    pub via_coker: usize,
    pub hom_lambda: [usize; 2],
    pub kernel: [usize; 2],
    pub cokernel: [usize; 2],
}

impl From<PairOracle> for OracleReport {
    fn from(o: PairOracle) -> Self {
        OracleReport {
            via_forms: o.via_forms,
            via_coker: o.via_coker,
            hom_lambda: [o.hom_lambda.0, o.hom_lambda.1],
            kernel: [o.kernel.0, o.kernel.1],
            cokernel: [o.cokernel.0, o.cokernel.1],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExtVanishes,
    ExtNonzero,
    /// A whole τ-orbit from an injective to a projective root.
    Frozen,
    /// Some top part is projective without the orbit being frozen, or a
    /// partition is not a τ-orbit; only the oracle applies.
    OutsideHypotheses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub schema: u32,
    pub quiver: String,
    pub lambda: String,
    pub kappa: String,
    pub verdict: Verdict,
    pub criterion: Option<bool>,
    pub stats: Option<StatsReport>,
    pub oracle: OracleReport,
    /// `criterion ⟺ Ext = 0` (for frozen input: `Ext = 0`); absent outside the hypotheses.
    pub agreement: Option<bool>,
    /// Verdict under the swapped window pairing, when it differs.
    pub window_ambiguity: Option<bool>,
    /// Verdict counting `R` without multiplicities, when it differs.
    pub set_reading: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: usize,
    pub agreements: usize,
    pub mismatches: usize,
    pub multiplicity_flags: usize,
    pub hypothesis_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub quiver: String,
    pub item: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<Box<PairReport>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub scope: Vec<String>,
    pub seed: u64,
    pub counts: Counts,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
    pub exit_status: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub seed: u64,
    pub field: String,
    pub suites: Vec<SuiteReport>,
    pub exit_status: i32,
}

impl VerifyReport {
    pub fn new(seed: u64, field: String, suites: Vec<SuiteReport>) -> Self {
        let exit_status = i32::from(suites.iter().any(|s| s.exit_status != 0));
        VerifyReport { schema: crate::SCHEMA, seed, field, suites, exit_status }
    }
}
