//! L(2,1)- and (G,H)-labelings: construction with span guarantees through
//! equitable colourings and hamilton paths, verification, exact minimum
//! spans for small instances, and the extremal graph families.

pub mod equitable;
pub mod error;
pub mod exact;
pub mod families;
pub mod format;
pub mod graph;
pub mod hamilton;
pub mod labeling;
pub mod pipeline;

pub use equitable::{equitable_coloring, Coloring};
pub use error::{Error, Precondition, Result};
pub use exact::{exact_lambda, exact_span, ExactOutcome, ExactResult};
pub use graph::{Distance, Graph};
pub use hamilton::{
    hamilton_cycle, hamilton_path, posa_cycle_condition, posa_path_condition, VertexSequence,
};
pub use labeling::{
    l21_as_instance, span_of, verify_instance, verify_l21, Instance, Labeling, Relation, Verdict,
    Violation,
};
