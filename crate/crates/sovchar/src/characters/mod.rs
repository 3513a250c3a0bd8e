//! Partitions, antisymmetric determinants, symplectic characters, and the
//! character-basis expansion.

pub mod amu;
pub mod chi;
pub mod expand;
pub mod partition;

pub use amu::{
    a1_delta, a1_mu_product, a1_product_symbolic, a2_mu_expansion, a2_mu_expansion_on,
    a_delta_trunc_product, a_mu, a_mu_on, a_mu_trunc, a_mu_trunc_on, weyl_denominator_product,
    weyl_denominator_product_on,
};
pub use chi::{
    chi, chi_truncated, dimension, phi_delta_closed_form, phi_delta_closed_form_on, phi_mu1,
    phi_mu_on, q_poly, q_poly_on,
};
pub use expand::{expand_in_chi_basis, is_weyl_invariant, CharacterExpansion, ExpansionTermJson};
pub use partition::{partitions, MuVector, Partition, PartitionJson};
