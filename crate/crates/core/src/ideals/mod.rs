//! Monomials, monomial ideals and generator orders.

mod ideal;
mod monomial;
mod order;

pub use ideal::{
    closed_neighborhood_ideal, ideal_i_n, ideal_i_n_split, intersect, minimalize, three_path_ideal,
    MonomialIdeal, NeighborhoodIdeal, PathKind,
};
pub use monomial::Monomial;
pub use order::{generator_anchor, tree_lex_order, GeneratorOrder};
