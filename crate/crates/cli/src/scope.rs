//! Quiver selection from `--type`/`--orientation` and the default scopes of
//! the verification suites.

use std::collections::BTreeSet;

use dynkin_ar::{DynkinType, Quiver};

use crate::error::{CliError, CliResult};

/// `linear`, `bipartite`, `all`, or an arrow list such as `1>2,3<2`.
pub fn quivers_for(dynkin: &str, orientation: &str) -> CliResult<Vec<Quiver>> {
    if dynkin.contains('=') {
        return Ok(vec![dynkin.parse()?]);
    }
    let t: DynkinType = dynkin.parse()?;
    Ok(match orientation.trim() {
        "all" => Quiver::all_orientations(t)?,
        o => vec![Quiver::from_orientation(t, o)?],
    })
}

pub fn single_quiver(dynkin: &str, orientation: &str) -> CliResult<Quiver> {
    let mut qs = quivers_for(dynkin, orientation)?;
    if qs.len() != 1 {
        return Err(CliError::Usage("this command takes a single orientation".into()));
    }
    Ok(qs.remove(0))
}

fn both(types: &[DynkinType]) -> Vec<Quiver> {
    types
        .iter()
        .flat_map(|&t| [Quiver::linear(t).unwrap(), Quiver::bipartite(t).unwrap()])
        .collect()
}

fn a(n: usize) -> DynkinType {
    DynkinType::A(n)
}

fn d(n: usize) -> DynkinType {
    DynkinType::D(n)
}

/// Default quivers of a suite; duplicates removed, first occurrence kept.
pub fn default_scope(suite: &str) -> Vec<Quiver> {
    let qs = match suite {
        "typea" => (2..=5).map(|n| Quiver::linear(a(n)).unwrap()).collect(),
        "fourcases" => both(&[a(2), a(3), a(4), a(5), d(4)]),
        "theorem" | "corollaries" => {
            let mut v: Vec<Quiver> = (2..=5).map(|n| Quiver::linear(a(n)).unwrap()).collect();
            v.extend(Quiver::all_orientations(a(3)).unwrap());
            v.extend(Quiver::all_orientations(a(4)).unwrap());
            v.extend(both(&[d(4), d(5)]));
            v
        }
        "minors" => both(&[a(2), a(3), a(4), d(4)]),
        "a5example" => vec![Quiver::linear(a(5)).unwrap()],
        "zab" => Vec::new(),
        _ => both(&[a(2), a(3), a(4), a(5), d(4), d(5)]),
    };
    dedup(qs)
}

pub fn dedup(qs: Vec<Quiver>) -> Vec<Quiver> {
    let mut seen = BTreeSet::new();
    qs.into_iter().filter(|q| seen.insert(q.to_string())).collect()
}
