//! The invariant tower.

mod set;
mod symbolic;
mod tower;

pub use set::{EPair, InvariantSet, DEFAULT_TERM_BUDGET};
pub use symbolic::{delta1, delta_enumerated, deltas, u_xi, ud_xi, ud_xi_natural, SymbolicTower};

pub use tower::{dickson_full_all, dickson_full_all_within, dickson_tilde_all_within, dickson_tilde, dickson_tilde_all, relabel, relabel_map, u_full, u_tilde, xi};
