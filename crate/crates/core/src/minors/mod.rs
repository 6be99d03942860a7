//! Quantum minors `D(j,l)` as τ-orbit partitions, and quasi-commutation of
//! cluster monomials decided pairwise by the Ext-vanishing criterion.

use std::fmt;

use crate::error::{Error, Result};
use crate::kostant::{ext_vanishing_criterion, TauOrbitPartition};
use crate::quiverrep::HomTable;
use crate::rootsys::{Root, RootSystem};

/// `D(j,l)` with 1-based word positions; `j = 0` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorIndex {
    pub j: usize,
    pub l: usize,
}

/// A minor's partition; `frozen` when its top part is a projective root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorPartition {
    pub partition: TauOrbitPartition,
    pub frozen: bool,
}

/// Next occurrence of the letter at 1-based position `k`.
pub fn next_occurrence(rs: &RootSystem, k: usize) -> Option<usize> {
    let w = rs.word();
    (k + 1..=w.len()).find(|&m| w[m - 1] == w[k - 1])
}

/// Previous occurrence of the letter at 1-based position `k` (`k⁻`), or 0.
pub fn previous_occurrence(rs: &RootSystem, k: usize) -> usize {
    let w = rs.word();
    (1..k).rev().find(|&m| w[m - 1] == w[k - 1]).unwrap_or(0)
}

impl MinorIndex {
    pub fn new(j: usize, l: usize) -> Self {
        MinorIndex { j, l }
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let n = rs.num_roots();
        let w = rs.word();
        if self.l == 0 || self.l > n {
            return Err(Error::InvalidIndex(format!("{self}: l must lie in [1,{n}]")));
        }
        if self.j >= self.l {
            return Err(Error::InvalidIndex(format!("{self}: needs j < l")));
        }
        if self.j >= 1 {
            if w[self.j - 1] != w[self.l - 1] {
                return Err(Error::InvalidIndex(format!("{self}: letters at j and l differ")));
            }
            if next_occurrence(rs, self.l).is_none() {
                return Err(Error::InvalidIndex(format!("{self}: run ends at a projective root")));
            }
        }
        Ok(())
    }

    /// `D(j,l)^e` or `D(j,l)`.
    pub fn parse_factor(text: &str) -> Result<(Self, u32)> {
        let t = text.trim();
        let bad = || Error::InvalidIndex(format!("expected D(j,l)^e, got '{t}'"));
        let (minor, exp) = match t.split_once('^') {
            Some((m, e)) => (m.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (t, 1),
        };
        if exp == 0 {
            return Err(bad());
        }
        let inner = minor.strip_prefix("D(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
        let (j, l) = inner.split_once(',').ok_or_else(bad)?;
        let j = j.trim().parse().map_err(|_| bad())?;
        let l = l.trim().parse().map_err(|_| bad())?;
        Ok((MinorIndex { j, l }, exp))
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{})", self.j, self.l)
    }
}

/// The orbit `β_{j⁺}, ..., β_l` (or from the first occurrence when `j = 0`).
pub fn minor_to_partition(rs: &RootSystem, idx: MinorIndex) -> Result<MinorPartition> {
    idx.validate(rs)?;
    let w = rs.word();
    let letter = w[idx.l - 1];
    let run: Vec<usize> = (idx.j + 1..=idx.l).filter(|&m| w[m - 1] == letter).collect();
    let base = Root(run[0] - 1);
    let partition = TauOrbitPartition::new(rs, base, run.len())?;
    debug_assert_eq!(partition.parts()[0], Root(idx.l - 1));
    let frozen = !partition.assumption();
    Ok(MinorPartition { partition, frozen })
}

/// Product of minors with positive exponents, one entry per distinct minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterMonomial {
    factors: Vec<(MinorIndex, u32)>,
}

impl ClusterMonomial {
    /// Repeated minors are merged by adding exponents.
    pub fn new(factors: Vec<(MinorIndex, u32)>) -> Result<Self> {
        let mut merged: Vec<(MinorIndex, u32)> = Vec::new();
        for (m, e) in factors {
            if e == 0 {
                return Err(Error::InvalidIndex(format!("{m}: exponent must be positive")));
            }
            match merged.iter_mut().find(|(x, _)| *x == m) {
                Some((_, acc)) => *acc += e,
                None => merged.push((m, e)),
            }
        }
        if merged.is_empty() {
            return Err(Error::InvalidIndex("empty monomial".into()));
        }
        Ok(ClusterMonomial { factors: merged })
    }

    /// `D(j,l)^e * D(j',l')^e' ...`
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.split('*').map(MinorIndex::parse_factor).collect::<Result<_>>()?)
    }

    pub fn factors(&self) -> &[(MinorIndex, u32)] {
        &self.factors
    }
}

impl fmt::Display for ClusterMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{m}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiCommuteVerdict {
    pub quasi_commuting: bool,
    /// Frozen factors, passed without applying the criterion.
    pub frozen: Vec<MinorIndex>,
    /// Factor pairs for which the criterion fails.
    pub failing: Vec<(MinorIndex, MinorIndex)>,
}

pub fn quasi_commute(rs: &RootSystem, table: &HomTable, z1: &ClusterMonomial, z2: &ClusterMonomial) -> Result<QuasiCommuteVerdict> {
    let resolve = |z: &ClusterMonomial| -> Result<Vec<(MinorIndex, MinorPartition)>> {
        z.factors.iter().map(|&(m, _)| Ok((m, minor_to_partition(rs, m)?))).collect()
    };
    let (x, y) = (resolve(z1)?, resolve(z2)?);
    let mut frozen: Vec<MinorIndex> = x.iter().chain(&y).filter(|(_, p)| p.frozen).map(|(m, _)| *m).collect();
    frozen.sort();
    frozen.dedup();
    let mut failing = Vec::new();
    for (a, pa) in x.iter().filter(|(_, p)| !p.frozen) {
        for (b, pb) in y.iter().filter(|(_, p)| !p.frozen) {
            if !ext_vanishing_criterion(rs, table, &pa.partition, &pb.partition)? {
                failing.push((*a, *b));
            }
        }
    }
    Ok(QuasiCommuteVerdict { quasi_commuting: failing.is_empty(), frozen, failing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::rootsys::{DynkinType, Quiver};
    use crate::Rational;

    fn a3() -> Context<Rational> {
        Context::new(RootSystem::new(Quiver::linear(DynkinType::A(3)).unwrap()).unwrap())
    }

    #[test]
    fn minors_in_a3() {
        let ctx = a3();
        let rs = ctx.root_system();
        let p = minor_to_partition(rs, MinorIndex::new(0, 4)).unwrap();
        let labels: Vec<String> = p.partition.parts().iter().map(|&r| rs.root_label(r)).collect();
        assert_eq!(labels, ["[2,2]", "[1,1]"]);
        assert!(!p.frozen);
        let single = minor_to_partition(rs, MinorIndex::new(0, 2)).unwrap();
        assert_eq!(single.partition.len(), 1);
        assert!(!single.frozen);
        assert!(minor_to_partition(rs, MinorIndex::new(0, 3)).unwrap().frozen);
        assert!(minor_to_partition(rs, MinorIndex::new(0, 6)).unwrap().frozen);
        assert!(matches!(minor_to_partition(rs, MinorIndex::new(1, 6)), Err(Error::InvalidIndex(_))));
        assert!(matches!(minor_to_partition(rs, MinorIndex::new(1, 5)), Err(Error::InvalidIndex(_))));
        assert!(matches!(minor_to_partition(rs, MinorIndex::new(4, 4)), Err(Error::InvalidIndex(_))));
        assert_eq!(previous_occurrence(rs, 4), 1);
        assert_eq!(next_occurrence(rs, 4), Some(6));
    }

    #[test]
    fn monomial_parsing_merges_factors() {
        let z = ClusterMonomial::parse("D(0,4)^2 * D(0,1) * D(0,4)").unwrap();
        assert_eq!(z.factors(), &[(MinorIndex::new(0, 4), 3), (MinorIndex::new(0, 1), 1)]);
        assert_eq!(z.to_string(), "D(0,4)^3 * D(0,1)");
        assert!(ClusterMonomial::parse("D(0,4)^0").is_err());
        assert!(ClusterMonomial::parse("E(0,4)").is_err());
    }

    #[test]
    fn shifted_minors_do_not_commute() {
        let ctx = a3();
        let (rs, table) = (ctx.root_system(), ctx.table());
        let one = ClusterMonomial::parse("D(0,4)").unwrap();
        assert!(quasi_commute(rs, table, &one, &one).unwrap().quasi_commuting);
        // D(a,b) against D(a⁻,b⁻) with a = 1, b = 4
        let shifted = ClusterMonomial::parse("D(1,4)").unwrap();
        let base = ClusterMonomial::parse(&format!("D({},{})", previous_occurrence(rs, 1), previous_occurrence(rs, 4))).unwrap();
        let v = quasi_commute(rs, table, &shifted, &base).unwrap();
        assert!(!v.quasi_commuting);
        assert_eq!(v.failing, vec![(MinorIndex::new(1, 4), MinorIndex::new(0, 1))]);
    }
}
