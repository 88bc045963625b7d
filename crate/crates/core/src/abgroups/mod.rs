//! Finitely generated abelian groups: Smith normal form, presentations,
//! homomorphisms, subquotients and direct systems.

mod direct;
mod group;
mod lattice;
mod matrix;
mod snf;

pub use direct::{scalar, unimodular_inverse, DirectSystem, Limit, LocalizationDescriptor};
pub use group::{cokernel, lattice_contains, lattice_equal, subquotient, AbHom, Canonical, FGAbGroup, Presentation};
pub use lattice::{image_basis, kernel_basis, rank, solve, vector};
pub use matrix::{IntMatrix, Matrix};
pub use snf::{elementary_divisors, snf, Overflow, Snf, SnfScalar};
