//! The algebra R generated by xibar_0, xi_1, xi_2, ... with deg xi_k = q^k + 1.

mod eval;
mod matrix;
mod natural;
mod pij;
mod poly;

pub use eval::{eval_xi, eval_xi_with, express_in_xi, xi_monomials_of_degree, Slot0, XiEvaluator};
pub use matrix::{m_matrix, m_minor, m_tilde_matrix, XiMatrix};
pub use natural::{
    delta_jk, natural_monomials, natural_sum, partition_sum, Enumeration, NaturalFactor, NaturalMonomial,
};
pub use pij::PTable;
pub use poly::{XiMonomial, XiPoly, XI_SLOTS};
