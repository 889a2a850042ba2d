//! Deterministic generators for the witness graphs: paths, cycles, trees,
//! the Moore graphs, and the Galois-plane polarity graphs.

pub mod field;
pub mod generators;
pub mod projective;
pub mod random;

pub use field::{prime_power, FieldElement, FiniteField};
pub use generators::{
    complete, cycle, hoffman_singleton, path, petersen, random_tree, star, Family, DEFAULT_SEED,
};
pub use projective::{erdos_extension, polarity_graph, projective_points, ProjectivePoint};
