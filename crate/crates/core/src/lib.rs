//! Equivariant mod-2 cohomology of finite simplicial complexes with an
//! involution.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`]: bit-packed matrices and subspaces over F₂.
//! * [`simplicial`]: complexes, involutions, quotients, fixed parts,
//!   subdivision, products, mod-2 and rational (co)homology.
//! * [`equivariant`]: the periodic double complex, total equivariant
//!   cohomology, both spectral sequences, the Krasnov degeneration test and the
//!   component-map obstruction.
//! * [`smith`]: the homological Smith exact sequence and its consequences.
//! * [`formulas`]: closed-form dimension formulas for real surfaces and real
//!   Enriques surfaces, and a cross-check against the engine.
//! * [`fixtures`]: small named models used by tests and the CLI.

pub mod equivariant;
pub mod fixtures;
pub mod formulas;
pub mod gf2;
pub mod simplicial;
pub mod smith;
