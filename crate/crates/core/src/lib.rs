//! Exact Hom/Ext computations for Dynkin quivers and their preprojective
//! algebras, and a combinatorial test for the vanishing of `Ext¹` between
//! modules attached to τ-orbit Kostant partitions.
//!
//! Everything is generic over an exact [`Field`]; [`Rational`] is the default
//! and [`PrimeField`] a faster modular alternative.

pub mod context;
pub mod error;
pub mod exactlin;
pub mod kostant;
pub mod minors;
pub mod preproj;
pub mod quiverrep;
pub mod rootsys;

pub use context::{derive_seed, Context, PairOracle};
pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, PrimeField};
pub use kostant::{KostantPartition, PairStats, TauOrbitPartition};
pub use minors::{ClusterMonomial, MinorIndex};
pub use preproj::PreprojModule;
pub use quiverrep::{HomTable, Representation};
pub use rootsys::{DynkinType, Quiver, Root, RootPairCase, RootSystem};

pub type Rational = num_rational::BigRational;
pub type RatMatrix = Matrix<Rational>;
pub type FpMatrix = Matrix<PrimeField>;
pub type RatContext = Context<Rational>;
pub type FpContext = Context<PrimeField>;
