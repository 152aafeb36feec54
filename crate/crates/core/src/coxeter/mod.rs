//! Root systems and finite Weyl groups.

mod cartan;
mod group;
mod roots;
mod weights;

pub use cartan::CartanMatrix;
pub use group::{GroupConfig, Trichotomy, WeylElement, WeylGroup, DEFAULT_CAP};
pub use roots::{Root, RootSystem};
pub use weights::WeightFunction;
