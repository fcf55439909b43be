//! Twisted homology of handlebody mapping class groups.
//!
//! The handlebody mapping class group H_g is the group of isotopy classes of
//! orientation preserving self-homeomorphisms of a genus g handlebody. It has
//! a finite presentation due to Wajnryb, and it acts on the first integral
//! homology H of the boundary surface. This crate constructs the presentation
//! in exact integer arithmetic, builds the homology action together with its
//! natural submodule, quotient, dual, and tensor companions, and computes the
//! twisted group (co)homology of H_g in degrees 0 and 1 over Z and Z/n.
//!
//! Everything is exact: matrices hold arbitrary precision integers and all
//! normal forms are integral (Hermite and Smith), so results are certified
//! rather than numerically approximate.

pub mod action;
pub mod bar;
pub mod cli;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod wajnryb;
pub mod word;

pub use error::{Error, Result};
