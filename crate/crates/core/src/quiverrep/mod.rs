//! Representations of a quiver over an exact field, their Hom and Ext spaces,
//! and the indecomposables of a Dynkin quiver.

mod system;
mod table;

use rand::Rng;

pub(crate) use system::BlockSystem;
pub use table::HomTable;

use crate::error::{Error, Result};
use crate::exactlin::{nullspace_basis, rank, Field, Matrix};
use crate::rootsys::{Quiver, Root, RootSystem};

/// A representation: a space of dimension `dims[i]` at each vertex and, for the
/// `h`-th arrow of the quiver, a `dims[t(h)] × dims[s(h)]` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<F> {
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != q.rank() || maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch("representation does not fit the quiver".into()));
        }
        for (m, &(s, t)) in maps.iter().zip(q.arrows()) {
            if (m.rows(), m.cols()) != (dims[t], dims[s]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {}>{} needs a {}x{} matrix",
                    s + 1,
                    t + 1,
                    dims[t],
                    dims[s]
                )));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero(q: &Quiver) -> Self {
        Representation {
            dims: vec![0; q.rank()],
            maps: q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Uniform integer entries in `[-bound, bound]`.
    pub fn random(q: &Quiver, dims: Vec<usize>, bound: i64, rng: &mut impl Rng) -> Self {
        let maps = q
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let data = (0..dims[t] * dims[s]).map(|_| F::from_i64(rng.gen_range(-bound..=bound))).collect();
                Matrix::from_vec(dims[t], dims[s], data)
            })
            .collect();
        Representation { dims, maps }
    }
}

/// Basis of `Hom_Q(M, N)`; each element is one matrix per vertex.
#[derive(Debug, Clone)]
pub struct HomSpace<F> {
    pub basis: Vec<Vec<Matrix<F>>>,
}

impl<F> HomSpace<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of reverse-arrow tuples `z` (one matrix per arrow) solving the
/// adjoint system; its dimension is that of an Ext group.
#[derive(Debug, Clone)]
pub struct OppositeHomSpace<F> {
    pub basis: Vec<Vec<Matrix<F>>>,
}

impl<F> OppositeHomSpace<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Unknowns `f_i : V_i -> W_i`, equations `f_{t(h)} x_h - y_h f_{s(h)} = 0`.
pub(crate) fn hom_system<F: Field>(q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> BlockSystem<F> {
    let unknowns = (0..q.rank()).map(|i| (n.dims[i], m.dims[i])).collect();
    let equations = q.arrows().iter().map(|&(s, t)| (n.dims[t], m.dims[s])).collect();
    let mut sys = BlockSystem::new(unknowns, equations);
    for (h, &(s, t)) in q.arrows().iter().enumerate() {
        sys.add_term(h, t, false, None, Some(&m.maps[h]));
        sys.add_term(h, s, true, Some(&n.maps[h]), None);
    }
    sys
}

/// Unknowns `z_h : m_{t(h)} -> n_{s(h)}`, one equation block per vertex `i`:
/// `Σ_{t(h)=i} x^n_h z_h - Σ_{s(h)=i} z_h x^m_h = 0`.
pub(crate) fn dual_ext_system<F: Field>(q: &Quiver, n: &Representation<F>, m: &Representation<F>) -> BlockSystem<F> {
    let unknowns = q.arrows().iter().map(|&(s, t)| (n.dims[s], m.dims[t])).collect();
    let equations = (0..q.rank()).map(|i| (n.dims[i], m.dims[i])).collect();
    let mut sys = BlockSystem::new(unknowns, equations);
    for (h, &(s, t)) in q.arrows().iter().enumerate() {
        sys.add_term(t, h, false, Some(&n.maps[h]), None);
        sys.add_term(s, h, true, None, Some(&m.maps[h]));
    }
    sys
}

pub fn hom_space<F: Field>(q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> HomSpace<F> {
    let sys = hom_system(q, m, n);
    HomSpace { basis: nullspace_basis(sys.matrix()).iter().map(|v| sys.unflatten(v)).collect() }
}

/// `(dim Hom, dim Ext¹)` from a single rank computation.
pub fn hom_ext_dims<F: Field>(q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> (usize, usize) {
    let sys = hom_system(q, m, n);
    let rk = rank(sys.matrix());
    let vertex_space: usize = (0..q.rank()).map(|i| m.dims[i] * n.dims[i]).sum();
    let arrow_space: usize = q.arrows().iter().map(|&(s, t)| m.dims[s] * n.dims[t]).sum();
    (vertex_space - rk, arrow_space - rk)
}

pub fn hom_dim<F: Field>(q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_ext_dims(q, m, n).0
}

pub fn ext_dim<F: Field>(q: &Quiver, m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_ext_dims(q, m, n).1
}

/// Kernel of the adjoint system, with `z_h : m_{t(h)} -> n_{s(h)}`. Its
/// dimension is checked against `ext_dim(n, m)`.
pub fn dual_ext_space<F: Field>(
    q: &Quiver,
    n: &Representation<F>,
    m: &Representation<F>,
) -> Result<OppositeHomSpace<F>> {
    let sys = dual_ext_system(q, n, m);
    let basis: Vec<_> = nullspace_basis(sys.matrix()).iter().map(|v| sys.unflatten(v)).collect();
    let expected = ext_dim(q, n, m);
    if basis.len() != expected {
        return Err(Error::DimensionMismatch(format!(
            "adjoint kernel has dimension {} but Ext has dimension {expected}",
            basis.len()
        )));
    }
    Ok(OppositeHomSpace { basis })
}

/// Indecomposable representation of dimension vector `β`, built by
/// reflection functors along the prefix of the adapted word ending at `β`.
pub fn indecomposable<F: Field>(rs: &RootSystem, beta: Root) -> Representation<F> {
    let q = rs.quiver();
    let n = q.rank();
    let word = rs.word();
    let k = beta.position();
    // Orientation of σ_{i_{k-1}} ... σ_{i_1} Q, arrows kept in quiver order.
    let mut arrows: Vec<(usize, usize)> = q.arrows().to_vec();
    for &i in &word[..k] {
        flip_at(&mut arrows, i);
    }
    let mut dims = vec![0usize; n];
    dims[word[k]] = 1;
    let mut maps: Vec<Matrix<F>> = arrows.iter().map(|&(s, t)| Matrix::zeros(dims[t], dims[s])).collect();
    for &i in word[..k].iter().rev() {
        reflect_at_sink(&mut arrows, &mut dims, &mut maps, i);
    }
    debug_assert_eq!(arrows, q.arrows());
    let rep = Representation { dims, maps };
    debug_assert_eq!(rep.dim_vector(), rs.coords(beta));
    assert_eq!(hom_dim(q, &rep, &rep), 1, "reflection functors produced a decomposable module");
    rep
}

fn flip_at(arrows: &mut [(usize, usize)], i: usize) {
    for a in arrows.iter_mut() {
        if a.0 == i || a.1 == i {
            *a = (a.1, a.0);
        }
    }
}

/// Sink reflection: the new space at `i` is the kernel of `⊕ V_{s(h)} -> V_i`.
fn reflect_at_sink<F: Field>(arrows: &mut [(usize, usize)], dims: &mut [usize], maps: &mut [Matrix<F>], i: usize) {
    let incoming: Vec<usize> = (0..arrows.len()).filter(|&h| arrows[h].1 == i).collect();
    assert!(arrows.iter().all(|&(s, _)| s != i), "reflection vertex must be a sink");
    let total: usize = incoming.iter().map(|&h| dims[arrows[h].0]).sum();
    let mut big = Matrix::zeros(dims[i], total);
    let mut col = 0;
    for &h in &incoming {
        big.set_block(0, col, &maps[h]);
        col += dims[arrows[h].0];
    }
    let kernel = nullspace_basis(&big);
    let new_dim = kernel.len();
    let basis = Matrix::from_columns(total, &kernel);
    let mut row = 0;
    for &h in &incoming {
        let j = arrows[h].0;
        maps[h] = basis.block(row, 0, dims[j], new_dim);
        row += dims[j];
        arrows[h] = (i, j);
    }
    dims[i] = new_dim;
}

/// A direct sum with the per-part vertex offsets of each block.
#[derive(Debug, Clone)]
pub struct DirectSum<F> {
    pub rep: Representation<F>,
    pub offsets: Vec<Vec<usize>>,
}

pub fn direct_sum<F: Field>(q: &Quiver, parts: &[&Representation<F>]) -> DirectSum<F> {
    let n = q.rank();
    let mut dims = vec![0usize; n];
    let mut offsets = Vec::with_capacity(parts.len());
    for p in parts {
        offsets.push(dims.clone());
        for (d, &e) in dims.iter_mut().zip(&p.dims) {
            *d += e;
        }
    }
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(h, &(s, t))| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (p, off) in parts.iter().zip(&offsets) {
                m.set_block(off[t], off[s], &p.maps[h]);
            }
            m
        })
        .collect();
    DirectSum { rep: Representation { dims, maps }, offsets }
}

/// Draws random representations of dimension `β` until one has a
/// one-dimensional endomorphism ring.
pub fn random_indecomposable<F: Field>(
    rs: &RootSystem,
    beta: Root,
    rng: &mut impl Rng,
    attempts: usize,
) -> Option<Representation<F>> {
    let q = rs.quiver();
    let dims: Vec<usize> = rs.coords(beta).iter().map(|&c| c as usize).collect();
    (0..attempts)
        .map(|_| Representation::random(q, dims.clone(), 50, rng))
        .find(|r| hom_dim(q, r, r) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinType;
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = BigRational;

    fn a3() -> RootSystem {
        RootSystem::new(Quiver::linear(DynkinType::A(3)).unwrap()).unwrap()
    }

    #[test]
    fn simple_and_interval_modules() {
        let rs = a3();
        let s2 = indecomposable::<Q>(&rs, rs.parse_root("[2]").unwrap());
        assert_eq!(s2.dims(), &[0, 1, 0]);
        let full = indecomposable::<Q>(&rs, rs.parse_root("[1,3]").unwrap());
        for m in full.maps() {
            assert_eq!(*m, Matrix::identity(1));
        }
    }

    #[test]
    fn small_hom_and_ext_values() {
        let rs = a3();
        let q = rs.quiver();
        let m = |s: &str| indecomposable::<Q>(&rs, rs.parse_root(s).unwrap());
        assert_eq!(hom_dim(q, &m("[2,2]"), &m("[1,2]")), 1);
        assert_eq!(hom_dim(q, &m("[2,2]"), &Representation::zero(q)), 0);
        assert_eq!(ext_dim(q, &m("[2,2]"), &m("[1,1]")), 0);
        assert_eq!(ext_dim(q, &m("[2,2]"), &m("[1,2]")), 0);
        assert_eq!(ext_dim(q, &m("[1,1]"), &m("[2,2]")), 1);
        assert_eq!(dual_ext_space(q, &m("[1,1]"), &m("[2,2]")).unwrap().dimension(), 1);
        assert_eq!(dual_ext_space(q, &m("[1,2]"), &m("[1,2]")).unwrap().dimension(), 0);
    }

    #[test]
    fn hom_basis_satisfies_morphism_equations() {
        let rs = a3();
        let q = rs.quiver();
        let m = indecomposable::<Q>(&rs, rs.parse_root("[1,3]").unwrap());
        let n = indecomposable::<Q>(&rs, rs.parse_root("[1,2]").unwrap());
        let space = hom_space(q, &m, &n);
        assert_eq!(space.dimension(), 1);
        for f in &space.basis {
            for (h, &(s, t)) in q.arrows().iter().enumerate() {
                assert_eq!(f[t].mul(&m.maps()[h]), n.maps()[h].mul(&f[s]));
            }
        }
    }

    #[test]
    fn direct_sum_is_additive() {
        let rs = RootSystem::new(Quiver::bipartite(DynkinType::D(4)).unwrap()).unwrap();
        let q = rs.quiver();
        let reps: Vec<Representation<Q>> = rs.roots().map(|r| indecomposable(&rs, r)).collect();
        let sum = direct_sum(q, &[&reps[1], &reps[7]]);
        assert_eq!(sum.offsets[1], reps[1].dims());
        for c in &reps {
            assert_eq!(hom_dim(q, &sum.rep, c), hom_dim(q, &reps[1], c) + hom_dim(q, &reps[7], c));
        }
        let one = direct_sum(q, &[&reps[3]]);
        assert_eq!(one.rep, reps[3]);
    }

    #[test]
    fn random_indecomposables_match_constructed_ones() {
        let rs = RootSystem::new(Quiver::linear(DynkinType::D(4)).unwrap()).unwrap();
        let q = rs.quiver();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let reps: Vec<Representation<Q>> = rs.roots().map(|r| indecomposable(&rs, r)).collect();
        for b in rs.roots() {
            let r = random_indecomposable::<Q>(&rs, b, &mut rng, 20).unwrap();
            for (c, other) in reps.iter().enumerate() {
                assert_eq!(hom_dim(q, &r, other), hom_dim(q, &reps[b.0], other), "{b:?} vs {c}");
            }
        }
    }
}
