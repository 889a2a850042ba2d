//! Labeling algorithms: the budgeted construction, injective labelings from
//! hamilton paths, greedy baselines and the order threshold.

pub mod baselines;
pub mod bounds;
pub mod budget;
pub mod cgh;
pub mod injective;

pub use baselines::{chang_kuo, chang_kuo_instance, first_fit, first_fit_instance};
pub use bounds::{bound_m, bound_report, bound_table, least_admissible_budget, BoundReport};
pub use budget::{check_budget_preconditions, label_with_budget};
pub use cgh::{build_cgh, ColorAdjacencyGraph};
pub use injective::injective_labeling;
