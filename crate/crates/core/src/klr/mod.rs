//! KLR (quiver Hecke) algebras `R_nu` of simply-laced quivers.
//!
//! Monomials are `psi_w x^a e(i)`: the idempotent `e(i)` at the bottom, dots
//! indexed by bottom strand position, then the crossings of `w` spelled by
//! its lexicographically smallest reduced word. The target idempotent is
//! `e(w . i)` where `(w . i)_{w(p)} = i_p`.

mod checks;
mod convention;
mod element;
mod engine;
mod oracle;

pub use checks::{
    a1_specialization_check, basis_monomials, basis_rank_check, concat_homomorphism_check, degree_additivity_check,
    graded_dim_hom, graded_dim_rank_check, idempotent_calculus_check, oracle_consistency_check,
    random_oracle_check, verify_relations, MAX_VERIFY_STRANDS,
};
pub use convention::{RelationConvention, Square};
pub use element::{concat_embed, monomial_degree, KlrElement, Monomial};
pub use engine::KlrEngine;
pub use oracle::{act_polynomial, Summands};
