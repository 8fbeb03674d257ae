//! Exact combinatorics of gradings of semisimple Lie algebras by
//! finite-order automorphisms.
//!
//! The crate computes, over exact integer arithmetic throughout:
//!
//! - finite and affine root systems, their invariant forms, and the
//!   finite/affine/indefinite classification of generalized Cartan matrices
//!   ([`rootsys`], [`affine`]);
//! - the poset of abelian Borel-stable subalgebras of the odd part of an
//!   involution, via inversion sets of σ-minuscule affine Weyl group
//!   elements ([`iab`]);
//! - the parametrization of Borel orbits in such a subalgebra by orthogonal
//!   subsets of its weights, with orbit dimensions and open-orbit
//!   representatives ([`orbits`]);
//! - antichain and strongly-orthogonal-root combinatorics of Hermitian
//!   pairs, including tube-type detection and the unique maximal antichain
//!   ([`hermitian`]);
//! - the sphericity decision machinery: eigenvalue gradings of normal
//!   triples, height bounds, affine diagram restrictions, weighted Dynkin
//!   values, and the minimal non-spherical subalgebra criterion
//!   ([`sphericity`]);
//! - independent matrix realizations of the classical symmetric pairs used
//!   as ground truth for heights and orbit dimensions ([`oracle`]).
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line live in the companion crate.
//!
//! # Example
//!
//! The order-two automorphism of `so₈` marked at the central node grades it
//! by `sl₂⁴`; its poset of abelian Borel-stable subalgebras contains a
//! five-dimensional maximal element whose saturation is not spherical, and
//! that element is the minimal non-spherical one:
//!
//! ```
//! use isotropy_core::affine::{build_affine, build_grading};
//! use isotropy_core::rootsys::FiniteType;
//! use isotropy_core::sphericity::{is_spherical_subalgebra, WeightTable};
//! use isotropy_core::{iab, orbits};
//!
//! let system = build_affine(FiniteType::D(4), 1).unwrap();
//! let g = build_grading(system, vec![0, 0, 1, 0, 0]).unwrap();
//! assert_eq!(g.m, 2);
//!
//! let poset = iab::enumerate_iab(&g).unwrap();
//! assert_eq!(poset.len(), 23);
//!
//! let special = iab::special_wp(&g).unwrap();
//! let a = iab::theta(&g, &special);
//! assert_eq!(a.dim(), 5);
//! assert_eq!(orbits::enumerate_orbits(&g, &a.weights).unwrap().len(), 17);
//!
//! let table = WeightTable::new(&g);
//! let verdict = is_spherical_subalgebra(&table, &a);
//! assert!(!verdict.spherical);
//! assert_eq!(verdict.heights.1, 4);
//! assert_eq!(iab::abar(&g).unwrap(), special);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod affine;
pub mod hermitian;
pub mod iab;
pub mod linalg;
pub mod oracle;
pub mod orbits;
pub mod rootsys;
pub mod sphericity;
pub mod sweep;
