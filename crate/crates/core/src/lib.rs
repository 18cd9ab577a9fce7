#![no_std]

//! Computational toolkit for spherical Artin–Tits groups and their parabolic
//! subgroups.
//!
//! The crate is organised bottom-up:
//!
//! - [`coxeter`]: Coxeter systems, the geometric (reflection) representation,
//!   canonical reduced words, longest elements, Deodhar's ν-elements and the
//!   normalizer split `N_W(W_X) = G_X ⋉ W_X`.
//! - [`artin`]: the positive monoid `A_S⁺`: Adyan (greedy) normal forms,
//!   divisibility, gcd/lcm, parabolic heads, chains.
//! - [`garside`]: spherical-type Garside data (`Δ_X`, its diagram automorphism)
//!   and group elements in right normal form `a·b⁻¹`.
//! - [`ribbons`]: elementary ribbons, ribbon decompositions of positive
//!   conjugators, the key normalizer factorization and the comparison with
//!   the Coxeter quotient.
//! - [`oracle`]: brute-force ground truth on small systems, written without
//!   touching the canonical forms above.
//!
//! Everything is `no_std` (with `alloc`); IO and the command line live in the
//! companion `artin-cli` crate.

extern crate alloc;

pub mod artin;
pub mod coxeter;
mod error;
pub mod garside;
mod gens;
pub mod oracle;
pub mod ribbons;

pub use crate::error::{Error, Result};
pub use crate::gens::{Gen, GenSet};

pub use crate::artin::{Chain, Monoid, NoCommonMultiple, PositiveBraid, PositiveWord, ReducedFactor};
pub use crate::coxeter::{CoxeterElement, CoxeterSystem, FiniteType, NuStep, Order, Root, RootSign};
pub use crate::garside::{ArtinElement, Garside, GarsideData, SignedWord};

pub use crate::ribbons::{NormalizerWitness, QuotientReport, QzDecomposition, RibbonPath, RibbonStep, WitnessKind};
