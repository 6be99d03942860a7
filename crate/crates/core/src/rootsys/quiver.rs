use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Simply-laced Dynkin type with Bourbaki labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn new_checked(self) -> Result<Self> {
        let ok = match self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidQuiver(format!("no Dynkin diagram {self}")))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Undirected edges, 0-based, each with the smaller label first.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            DynkinType::A(n) => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<_> = (0..n - 3).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            DynkinType::E(n) => {
                let mut e = vec![(0, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e.push((1, 3));
                e
            }
        }
    }

    pub fn num_positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(_) => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidQuiver(format!("unknown Dynkin type '{s}'"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match letter.to_ascii_uppercase() {
            'A' => DynkinType::A(n),
            'D' => DynkinType::D(n),
            'E' => DynkinType::E(n),
            _ => return Err(bad()),
        };
        t.new_checked()
    }
}

/// An orientation of a Dynkin diagram together with a topological vertex
/// order `i_1, ..., i_n` (an arrow `i_k -> i_j` forces `k < j`).
///
/// Vertices are 0-based internally and 1-based in text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    dynkin: DynkinType,
    arrows: Vec<(usize, usize)>,
    order: Vec<usize>,
    reordered: bool,
}

impl Quiver {
    /// Arrows are `(source, target)`. A supplied order that is not
    /// topological is replaced by the closest topological one (Kahn's
    /// algorithm preferring earlier entries of the supplied order).
    pub fn new(dynkin: DynkinType, arrows: Vec<(usize, usize)>, order: Option<Vec<usize>>) -> Result<Self> {
        let dynkin = dynkin.new_checked()?;
        let n = dynkin.rank();
        let mut expected: BTreeSet<(usize, usize)> = dynkin.edges().into_iter().collect();
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::InvalidQuiver(format!("vertex out of range in arrow {}>{}", s + 1, t + 1)));
            }
            if !expected.remove(&(s.min(t), s.max(t))) {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {}>{} is not an edge of {dynkin} or is repeated",
                    s + 1,
                    t + 1
                )));
            }
        }
        if let Some(&(a, b)) = expected.iter().next() {
            return Err(Error::InvalidQuiver(format!("edge {}-{} of {dynkin} has no arrow", a + 1, b + 1)));
        }
        let priority: Vec<usize> = match &order {
            Some(o) => {
                let mut seen = vec![false; n];
                if o.len() != n || o.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
                    return Err(Error::InvalidQuiver("vertex order is not a permutation".into()));
                }
                let mut pr = vec![0; n];
                for (k, &v) in o.iter().enumerate() {
                    pr[v] = k;
                }
                pr
            }
            None => (0..n).collect(),
        };
        let topo = kahn(n, &arrows, &priority)?;
        let reordered = order.as_ref().is_some_and(|o| *o != topo);
        Ok(Quiver { dynkin, arrows, order: topo, reordered })
    }

    /// Every arrow points from the smaller label to the larger one.
    pub fn linear(dynkin: DynkinType) -> Result<Self> {
        Self::new(dynkin, dynkin.new_checked()?.edges(), None)
    }

    /// Alternating orientation: vertices at even distance from vertex 1 are sources.
    pub fn bipartite(dynkin: DynkinType) -> Result<Self> {
        let dynkin = dynkin.new_checked()?;
        let color = two_coloring(dynkin);
        let arrows = dynkin
            .edges()
            .into_iter()
            .map(|(a, b)| if color[a] == 0 { (a, b) } else { (b, a) })
            .collect();
        Self::new(dynkin, arrows, None)
    }

    /// All `2^(n-1)` orientations, in a fixed order.
    pub fn all_orientations(dynkin: DynkinType) -> Result<Vec<Self>> {
        let edges = dynkin.new_checked()?.edges();
        (0..1usize << edges.len())
            .map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                    .collect();
                Self::new(dynkin, arrows, None)
            })
            .collect()
    }

    /// `linear`, `bipartite`, or an arrow list such as `1>2,3>2`.
    pub fn from_orientation(dynkin: DynkinType, orientation: &str) -> Result<Self> {
        match orientation.trim() {
            "linear" | "" => Self::linear(dynkin),
            "bipartite" => Self::bipartite(dynkin),
            list => Self::new(dynkin, parse_arrows(list)?, None),
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// True when a supplied vertex order had to be replaced.
    pub fn was_reordered(&self) -> bool {
        self.reordered
    }
}

fn two_coloring(dynkin: DynkinType) -> Vec<u8> {
    let n = dynkin.rank();
    let edges = dynkin.edges();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in &edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if color[w] == u8::MAX {
                color[w] = 1 - color[v];
                queue.push_back(w);
            }
        }
    }
    color
}

fn kahn(n: usize, arrows: &[(usize, usize)], priority: &[usize]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut ready: BTreeSet<(usize, usize)> = (0..n).filter(|&v| indeg[v] == 0).map(|v| (priority[v], v)).collect();
    let mut out = Vec::with_capacity(n);
    while let Some((_, v)) = ready.pop_first() {
        out.push(v);
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.insert((priority[t], t));
                }
            }
        }
    }
    if out.len() != n {
        return Err(Error::InvalidQuiver("orientation has a cycle".into()));
    }
    Ok(out)
}

fn parse_vertex(s: &str) -> Result<usize> {
    let v: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::InvalidQuiver(format!("bad vertex '{}'", s.trim())))?;
    if v == 0 {
        return Err(Error::InvalidQuiver("vertices are numbered from 1".into()));
    }
    Ok(v - 1)
}

fn parse_arrows(list: &str) -> Result<Vec<(usize, usize)>> {
    list.split(',')
        .filter(|a| !a.trim().is_empty())
        .map(|a| {
            if let Some((s, t)) = a.split_once('>') {
                Ok((parse_vertex(s)?, parse_vertex(t)?))
            } else if let Some((t, s)) = a.split_once('<') {
                Ok((parse_vertex(s)?, parse_vertex(t)?))
            } else {
                Err(Error::InvalidQuiver(format!("bad arrow '{}'", a.trim())))
            }
        })
        .collect()
}

impl FromStr for Quiver {
    type Err = Error;

    /// `type=A5; arrows=1>2,2>3,3>4,4>5; order=1,2,3,4,5` (order optional,
    /// `arrows` may also be `linear` or `bipartite`).
    fn from_str(s: &str) -> Result<Self> {
        let mut dynkin = None;
        let mut arrows = None;
        let mut order = None;
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::InvalidQuiver(format!("expected key=value, got '{field}'")))?;
            match key.trim() {
                "type" => dynkin = Some(value.parse::<DynkinType>()?),
                "arrows" | "orientation" => arrows = Some(value.trim().to_string()),
                "order" => {
                    order = Some(value.split(',').map(parse_vertex).collect::<Result<Vec<_>>>()?);
                }
                other => return Err(Error::InvalidQuiver(format!("unknown key '{other}'"))),
            }
        }
        let dynkin = dynkin.ok_or_else(|| Error::InvalidQuiver("missing type=".into()))?;
        let arrows = arrows.unwrap_or_else(|| "linear".into());
        match (arrows.as_str(), order) {
            (preset @ ("linear" | "bipartite"), None) => Self::from_orientation(dynkin, preset),
            (preset @ ("linear" | "bipartite"), Some(o)) => {
                let q = Self::from_orientation(dynkin, preset)?;
                Self::new(dynkin, q.arrows, Some(o))
            }
            (list, o) => Self::new(dynkin, parse_arrows(list)?, o),
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type={}; arrows=", self.dynkin)?;
        for (k, (s, t)) in self.arrows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}>{}", s + 1, t + 1)?;
        }
        write!(f, "; order=")?;
        for (k, v) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let q: Quiver = "type = A5 ; arrows = 1>2, 2>3,3>4,4>5".parse().unwrap();
        assert_eq!(q.order(), &[0, 1, 2, 3, 4]);
        let again: Quiver = q.to_string().parse().unwrap();
        assert_eq!(q, again);
    }

    #[test]
    fn order_is_repaired_when_not_topological() {
        let q: Quiver = "type=A3; arrows=1>2,2>3; order=3,2,1".parse().unwrap();
        assert_eq!(q.order(), &[0, 1, 2]);
        assert!(q.was_reordered());
        let q: Quiver = "type=A3; arrows=2>1,2>3; order=2,3,1".parse().unwrap();
        assert_eq!(q.order(), &[1, 2, 0]);
        assert!(!q.was_reordered());
    }

    #[test]
    fn rejects_non_dynkin_graphs() {
        assert!("type=A3; arrows=1>3,2>3".parse::<Quiver>().is_err());
        assert!("type=A3; arrows=1>2".parse::<Quiver>().is_err());
        assert!("type=A3; arrows=1>2,2>1,2>3".parse::<Quiver>().is_err());
        assert!("type=D3".parse::<Quiver>().is_err());
        assert!("type=E9".parse::<Quiver>().is_err());
    }

    #[test]
    fn bipartite_has_only_sources_and_sinks() {
        for t in [DynkinType::A(5), DynkinType::D(5), DynkinType::E(7)] {
            let q = Quiver::bipartite(t).unwrap();
            for &(s, _) in q.arrows() {
                assert!(q.arrows().iter().all(|&(_, t2)| t2 != s));
            }
        }
    }

    #[test]
    fn orientation_count() {
        assert_eq!(Quiver::all_orientations(DynkinType::A(4)).unwrap().len(), 8);
    }
}
