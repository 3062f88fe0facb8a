//! Exact search for cyclic interval colorings and minimum cyclic deficiency.

mod enumerate;
mod search;

pub use enumerate::{canonical_code, gen_all_connected, gen_all_trees, tree_code, MAX_ENUMERATION_ORDER};
pub use search::{
    decide_cyclic_t, decide_cyclic_t_budget, decide_with, default_t_max, edge_order, min_cyclic_deficiency, wc_max,
    SearchOptions, SolverResult, SolverStatus, DEFAULT_BUDGET, MAX_T,
};
