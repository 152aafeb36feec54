//! Orbit combinatorics of wonderful group compactifications.
//!
//! The crate is organised bottom-up:
//!
//! * [`coxeter`]: root systems from Cartan matrices and an enumerated finite
//!   Weyl group with lengths, Bruhat order and parabolic coset machinery.
//! * [`orbit`]: labels `(I, σ, τ, ρ)` of `P×P⁻`-orbits, their dimensions,
//!   rank-one parabolic moves, the closure order and intersection components.
//! * [`oracle`]: an independent reconstruction of the closure order from
//!   rank-one moves and boundary degenerations.
//! * [`matrix_model`]: brute-force `PGL_n` over a small prime field, used to
//!   check orbit counts and sizes exactly.
//! * [`group_spec`]: the JSON group description accepted by the CLI.

pub mod coxeter;
pub mod error;
pub mod group_spec;
pub mod matrix_model;
pub mod oracle;
pub mod orbit;
pub mod subset;

pub use coxeter::{
    CartanMatrix, GroupConfig, RootSystem, Trichotomy, WeightFunction, WeylElement, WeylGroup,
};
pub use error::{Error, Result};
pub use orbit::{ClosurePoset, OrbitLabel, OrbitModel, Poly, Side};
pub use subset::SimpleSet;
