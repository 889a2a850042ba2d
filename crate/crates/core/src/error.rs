use thiserror::Error;

/// Errors raised by the library. Parse errors for the text formats live in
/// [`crate::format::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition failed ({}): {0}", .0.name())]
    Precondition(#[from] Precondition),

    #[error("unsupported: {0}")]
    Capability(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A named precondition that an operation checked and found unmet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("Δ(H) must be at least 1")]
    WeightTwoEdges,

    #[error("Δ(G) = {max_degree_g} exceeds Δ(H)² = {bound}")]
    DegreeRatio { max_degree_g: usize, bound: usize },

    #[error("span budget L = {budget} is below Δ(H)² + 1 = {minimum}")]
    SpanBudget { budget: usize, minimum: usize },

    #[error("order n = {order} exceeds M(L = {budget}, Δ = {delta}) = {threshold}")]
    Order {
        order: usize,
        budget: usize,
        delta: usize,
        threshold: usize,
    },

    #[error("{colors} colours needs Δ(G) < {colors}, but Δ(G) = {max_degree}")]
    TooFewColors { colors: usize, max_degree: usize },

    #[error("Pósa cycle condition fails at k = {k}")]
    PosaCycle { k: usize },

    #[error("Pósa path condition fails at k = {k}")]
    PosaPath { k: usize },
}

impl Precondition {
    /// Stable identifier used in machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            Precondition::WeightTwoEdges => "weight_two_edges",
            Precondition::DegreeRatio { .. } => "degree_ratio",
            Precondition::SpanBudget { .. } => "span_budget",
            Precondition::Order { .. } => "order",
            Precondition::TooFewColors { .. } => "too_few_colors",
            Precondition::PosaCycle { .. } => "posa_cycle",
            Precondition::PosaPath { .. } => "posa_path",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
