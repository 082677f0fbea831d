//! Billiards bouncing in alcoves for `SL_3`.
//!
//! This crate generates the labelled-point multiset `Z̃` attached to a
//! parameter `ℓ ≥ 3` in two independent ways (wall dynamics plus alcove
//! billiards, and an arborescence `J∞` mapped into the weight lattice), and
//! assembles from it candidate second-generation elements `ζ_i` of the
//! anti-spherical module of the affine Weyl group of type `Ã₂`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, rendering and
//! the command line live in the `sl3-billiards` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod billiards;
pub mod error;
pub mod hecke;
pub mod lattice;
pub mod laurent;
pub mod multiset;
pub mod treegen;
pub mod weyl;
pub mod zeta;

pub use error::{Error, Result};
pub use lattice::{Direction, EllAlcove, Orientation, PointClass, WallFamily, Weight};
pub use laurent::LaurentPoly;
pub use multiset::{Label, LabelledPoint, PointMultiset};
pub use weyl::{AffineElement, Generator, Half};
