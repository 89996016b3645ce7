//! Standard congruence subgroups of Aut⁺(F2).
//!
//! For an epimorphism `π: F2 → G` onto a finite group, the stabilizer of `π`
//! under precomposition is a finite-index subgroup `Γ⁺(G, π)` of Aut⁺(F2).
//! This crate computes its index by orbit enumeration, harvests Schreier
//! generators, pushes them to SL2(Z) through the abelianization map, and
//! analyses the image there: index, level, and whether it is a congruence
//! subgroup.

pub mod analysis;
pub mod autf2;
pub mod epi;
pub mod error;
pub mod fixtures;
pub mod groups;
pub mod sl2;
pub mod slsub;
pub mod words;

pub use autf2::{AbelianizedMatrix, AutGen, AutLetter, FreeAutomorphism};
pub use epi::{Epimorphism, KernelCensus, OrbitResult};
pub use sl2::{Mat2, Sl2Word};
pub use slsub::{LevelReport, Sl2Subgroup};
pub use error::{Error, ParseError, Result};
pub use groups::{GroupTable, Presentation};


pub use words::{ExponentVector, Letter, ReducedWord};
