//! Labels of `P×P⁻`-orbits and their closure combinatorics.

mod label;
mod model;
mod poly;
mod poset;

pub use label::{OrbitLabel, Side};
pub use model::{ClosureWitness, OrbitModel};
pub use poly::Poly;
pub use poset::ClosurePoset;
