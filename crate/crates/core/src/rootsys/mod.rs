//! Root systems of Dynkin quivers, ordered along the adapted word of the
//! longest Weyl group element.

mod quiver;

use std::collections::HashMap;
use std::fmt;

pub use quiver::{DynkinType, Quiver};

use crate::error::{Error, Result};

/// A positive root, identified by its 0-based position in the adapted word.
///
/// Comparison is the word order: `β_l < β_k` iff `l < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub usize);

impl Root {
    pub fn position(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    quiver: Quiver,
    cartan: Vec<Vec<i64>>,
    word: Vec<usize>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
}

/// The four mutually exclusive outcomes for a pair `α < β`, keyed on
/// `([β,α], [β,τα])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootPairCase {
    BothHom,
    Sum,
    Difference,
    Neither,
}

impl RootSystem {
    pub fn new(quiver: Quiver) -> Result<Self> {
        let n = quiver.rank();
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(s, t) in quiver.arrows() {
            cartan[s][t] -= 1;
            cartan[t][s] -= 1;
        }
        let total = quiver.dynkin().num_positive_roots();
        let mut rs = RootSystem {
            quiver,
            cartan,
            word: Vec::with_capacity(total),
            roots: Vec::with_capacity(total),
            index: HashMap::new(),
            tau: Vec::new(),
            tau_inv: Vec::new(),
        };
        // Greedy subword of c c c ...: a letter is kept exactly when it
        // lengthens the prefix, i.e. when it yields a positive root.
        let mut step = 0usize;
        while rs.roots.len() < total {
            if step > total * n {
                return Err(Error::InvalidQuiver("adapted word did not reach the longest element".into()));
            }
            let i = rs.quiver.order()[step % n];
            step += 1;
            let mut v = simple(n, i);
            for &j in rs.word.iter().rev() {
                rs.reflect(j, &mut v);
            }
            if v.iter().any(|&c| c < 0) {
                continue;
            }
            if rs.index.contains_key(&v) {
                return Err(Error::InvalidQuiver(format!("root repeated at word position {}", rs.word.len() + 1)));
            }
            rs.index.insert(v.clone(), rs.roots.len());
            rs.roots.push(v);
            rs.word.push(i);
        }
        rs.tau = (0..total).map(|k| rs.lookup(&rs.coxeter(&rs.roots[k]))).collect();
        rs.tau_inv = (0..total).map(|k| rs.lookup(&rs.coxeter_inverse(&rs.roots[k]))).collect();
        Ok(rs)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The adapted reduced word of `w_0`, 0-based vertex letters. It is the
    /// greedy subword of the repeated Coxeter word, and equals the plain
    /// repetition exactly when `w_0 = -1`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.roots.len()).map(Root)
    }

    pub fn coords(&self, r: Root) -> &[i64] {
        &self.roots[r.0]
    }

    /// The positive root with these coordinates, if any.
    pub fn root(&self, coords: &[i64]) -> Option<Root> {
        self.lookup(coords).map(Root)
    }

    fn lookup(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// True for nonzero vectors `v` with `v` or `-v` a positive root.
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.lookup(v).is_some() {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        self.lookup(&neg).is_some()
    }

    /// `s_i(v) = v - (Cv)_i e_i`
    pub fn reflect(&self, i: usize, v: &mut [i64]) {
        let c: i64 = self.cartan[i].iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        v[i] -= c;
    }

    /// `C_Q = s_{i_1} ... s_{i_n}`
    pub fn coxeter(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        for &i in self.quiver.order().iter().rev() {
            self.reflect(i, &mut w);
        }
        w
    }

    pub fn coxeter_inverse(&self, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        for &i in self.quiver.order() {
            self.reflect(i, &mut w);
        }
        w
    }

    /// `τβ = C_Q β`, absent exactly when `β` is a projective root.
    pub fn tau_root(&self, b: Root) -> Option<Root> {
        self.tau[b.0].map(Root)
    }

    /// `τ⁻¹β`, absent exactly when `β` is an injective root.
    pub fn tau_inverse_root(&self, b: Root) -> Option<Root> {
        self.tau_inv[b.0].map(Root)
    }

    /// `τ^k β` for `k ≥ 0`, absent if some step leaves the positive roots.
    pub fn tau_power(&self, b: Root, k: usize) -> Option<Root> {
        (0..k).try_fold(b, |r, _| self.tau_root(r))
    }

    /// `τ^k` for signed `k`.
    pub fn tau_shift(&self, b: Root, k: i64) -> Option<Root> {
        if k >= 0 {
            self.tau_power(b, k as usize)
        } else {
            (0..-k).try_fold(b, |r, _| self.tau_inverse_root(r))
        }
    }

    pub fn is_projective(&self, b: Root) -> bool {
        self.tau[b.0].is_none()
    }

    pub fn is_injective(&self, b: Root) -> bool {
        self.tau_inv[b.0].is_none()
    }

    /// `θ_1, ..., θ_n`: the first `n` roots of the word.
    pub fn theta(&self) -> Vec<Root> {
        (0..self.rank()).map(Root).collect()
    }

    pub fn euler_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let arrows: i64 = self.quiver.arrows().iter().map(|&(s, t)| a[s] * b[t]).sum();
        diag - arrows
    }

    pub fn sym_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, row) in self.cartan.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                total += a[i] * c * b[j];
            }
        }
        total
    }

    pub fn root_order_leq(&self, b: Root, g: Root) -> bool {
        b <= g
    }

    /// `[i,j]` (1-based) when the root is an interval of a type A diagram.
    pub fn segment(&self, r: Root) -> Option<(usize, usize)> {
        if !matches!(self.quiver.dynkin(), DynkinType::A(_)) {
            return None;
        }
        let c = self.coords(r);
        let first = c.iter().position(|&x| x != 0)?;
        let last = c.iter().rposition(|&x| x != 0)?;
        Some((first + 1, last + 1))
    }

    /// `[i,j]` in type A, the coordinate list otherwise.
    pub fn root_label(&self, r: Root) -> String {
        match self.segment(r) {
            Some((i, j)) => format!("[{i},{j}]"),
            None => self.coords(r).iter().map(i64::to_string).collect::<Vec<_>>().join(","),
        }
    }

    /// Parses `[i,j]` (type A) or `a1,...,an`.
    pub fn parse_root(&self, text: &str) -> Result<Root> {
        let t = text.trim();
        let n = self.rank();
        let coords: Vec<i64> = if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            if !matches!(self.quiver.dynkin(), DynkinType::A(_)) {
                return Err(Error::InvalidInput(format!("segment notation '{t}' needs type A")));
            }
            let bounds: Vec<usize> = inner
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidInput(format!("bad segment '{t}'")))?;
            let (i, j) = match bounds[..] {
                [i] => (i, i),
                [i, j] => (i, j),
                _ => return Err(Error::InvalidInput(format!("bad segment '{t}'"))),
            };
            if i == 0 || i > j || j > n {
                return Err(Error::InvalidInput(format!("segment '{t}' outside [1,{n}]")));
            }
            (1..=n).map(|k| i64::from(k >= i && k <= j)).collect()
        } else {
            t.split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidInput(format!("bad root '{t}'")))?
        };
        if coords.len() != n {
            return Err(Error::InvalidInput(format!("root '{t}' needs {n} coordinates")));
        }
        self.root(&coords)
            .ok_or_else(|| Error::InvalidInput(format!("'{t}' is not a positive root")))
    }

    fn add(&self, a: Root, b: Root) -> Vec<i64> {
        self.coords(a).iter().zip(self.coords(b)).map(|(x, y)| x + y).collect()
    }

    fn diff(&self, a: Root, b: Root) -> Vec<i64> {
        self.coords(a).iter().zip(self.coords(b)).map(|(x, y)| x - y).collect()
    }

    pub fn sum_is_root(&self, a: Root, b: Root) -> bool {
        self.lookup(&self.add(a, b)).is_some()
    }

    /// `a - b ∈ R ∪ {0}`
    pub fn diff_is_root_or_zero(&self, a: Root, b: Root) -> bool {
        a == b || self.is_root(&self.diff(a, b))
    }

    /// Case of `α < β` from hom dimensions `hom(x, y) = dim Hom(M_x, M_y)`.
    pub fn classify_root_pair(
        &self,
        alpha: Root,
        beta: Root,
        hom: impl Fn(Root, Root) -> u32,
    ) -> Result<RootPairCase> {
        if alpha >= beta {
            return Err(Error::InvalidInput("classification needs α < β".into()));
        }
        let direct = hom(beta, alpha);
        let shifted = self.tau_root(alpha).map_or(0, |ta| hom(beta, ta));
        for (value, target) in [(direct, alpha), (shifted, self.tau_root(alpha).unwrap_or(alpha))] {
            if value > 1 {
                return Err(Error::MultiplicityViolation { a: beta.0, b: target.0, value });
            }
        }
        Ok(match (direct, shifted) {
            (1, 1) => RootPairCase::BothHom,
            (0, 1) => RootPairCase::Sum,
            (1, 0) => RootPairCase::Difference,
            _ => RootPairCase::Neither,
        })
    }

    /// Whether a case agrees with root arithmetic: `Sum` iff `α+β ∈ R⁺`,
    /// `Difference` iff `β-α ∈ R`.
    pub fn case_matches_arithmetic(&self, alpha: Root, beta: Root, case: RootPairCase) -> bool {
        let sum = self.sum_is_root(alpha, beta);
        let diff = self.is_root(&self.diff(beta, alpha));
        (case == RootPairCase::Sum) == sum && (case == RootPairCase::Difference) == diff
    }

    /// For `α < β` with `[β,α] = 0`: `α+β ∈ R⁺` or `(α,β) = 0`.
    pub fn check_sum_lemma(&self, alpha: Root, beta: Root) -> bool {
        self.sum_is_root(alpha, beta) || self.sym_form(self.coords(alpha), self.coords(beta)) == 0
    }
}

fn simple(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl fmt::Display for RootPairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootPairCase::BothHom => "both-hom",
            RootPairCase::Sum => "sum",
            RootPairCase::Difference => "difference",
            RootPairCase::Neither => "neither",
        };
        f.write_str(s)
    }
}
