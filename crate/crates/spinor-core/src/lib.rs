//! Exact-arithmetic model of Spin(2d, C) semi-spinors: Clifford action on
//! even exterior forms, spinor bilinears, annihilator subspaces, stabilizer
//! subalgebras, and the combinatorial classification of impure spinors by
//! labelled simplices of pure constituents.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod comb;
pub mod extform;
pub mod geomap;
pub mod lie;
pub mod linalg;
pub mod nullspace;
pub mod reduce;
pub mod scalar;
pub mod spinor;
#[cfg(test)]
pub(crate) mod testutil;

pub use comb::{
    canonical_form, check_identities, edge_dims, enumerate_types, feasible_k_bounds,
    is_irreducible, occupation_profile, spinor_of, tetra_dims, Codeword, CombinatorialType,
    Configuration,
};
pub use extform::{wedge, ExtForm, Label2d};
pub use geomap::{cayley_form, configuration_form, geometric_map};
pub use lie::{
    act, bracket, cartan_equalizable, cartan_t, derived_subalgebra_dim, lie_basis,
    stabilizer_algebra, CartanVector, LieElement,
};
pub use nullspace::{annihilator, intersection_dim, is_pure, nullity, NullSubspace};
pub use reduce::{reduce_12d_k4, ReducedFrame};
pub use scalar::GaussianRational;
pub use spinor::{basis_pure, clifford_mul, gamma, inner, IndexSet, Spinor, Vector2d};
