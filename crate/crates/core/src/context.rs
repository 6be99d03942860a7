//! A root system with its indecomposables and hom table, plus the oracle
//! computations for pairs of partitions.

use rayon::prelude::*;

use crate::error::Result;
use crate::exactlin::Field;
use crate::kostant::TauOrbitPartition;
use crate::preproj::{ext_dim_lambda_via_coker, ext_dim_lambda_via_forms, generic_dual, lambda_hom_dim, r_map, PreprojModule};
use crate::quiverrep::{direct_sum, indecomposable, HomTable, Representation};
use crate::rootsys::{Root, RootSystem};

pub struct Context<F> {
    rs: RootSystem,
    reps: Vec<Representation<F>>,
    table: HomTable,
}

impl<F: Field> Context<F> {
    pub fn new(rs: RootSystem) -> Self {
        let reps: Vec<Representation<F>> = rs.roots().collect::<Vec<_>>().par_iter().map(|&r| indecomposable(&rs, r)).collect();
        let table = HomTable::build(&rs, &reps);
        Context { rs, reps, table }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn table(&self) -> &HomTable {
        &self.table
    }

    pub fn indecomposable(&self, r: Root) -> &Representation<F> {
        &self.reps[r.position()]
    }

    /// `⊕ M_{λ_i}`
    pub fn module(&self, parts: &[Root]) -> Representation<F> {
        let refs: Vec<&Representation<F>> = parts.iter().map(|&p| &self.reps[p.position()]).collect();
        direct_sum(self.rs.quiver(), &refs).rep
    }

    /// Generic dual of `M_λ` with a seed derived from `seed` and `λ`.
    pub fn determinantal(&self, p: &TauOrbitPartition, seed: u64) -> Result<PreprojModule<F>> {
        generic_dual(&self.rs, &self.module(p.parts()), derive_seed(seed, p.base().position() as u64, p.len() as u64))
    }

    pub fn oracle(&self, mt: &PreprojModule<F>, nt: &PreprojModule<F>) -> Result<PairOracle> {
        let q = self.rs.quiver();
        let fwd = r_map(q, mt, nt)?;
        let bwd = r_map(q, nt, mt)?;
        Ok(PairOracle {
            hom_lambda: (lambda_hom_dim(q, mt, nt), lambda_hom_dim(q, nt, mt)),
            kernel: (fwd.kernel_dim(), bwd.kernel_dim()),
            cokernel: (fwd.cokernel_dim(), bwd.cokernel_dim()),
            via_forms: ext_dim_lambda_via_forms(&self.rs, mt, nt)?,
            via_coker: ext_dim_lambda_via_coker(q, mt, nt)?,
        })
    }
}

/// Linear-algebra side of a pair `(M̃, Ñ)`; tuples are `(forward, backward)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairOracle {
    pub hom_lambda: (usize, usize),
    pub kernel: (usize, usize),
    pub cokernel: (usize, usize),
    pub via_forms: usize,
    pub via_coker: usize,
}

/// SplitMix64 step over `seed` mixed with two tags.
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
