//! Pencil critical points, Morse complexes and branched covers of plane curves.
//!
//! The crate is organised by task:
//!
//! - [`exact_poly`]: exact rational polynomials, resultants and gcds.
//! - [`roots`]: deterministic simultaneous root refinement.
//! - [`curve_pencil`]: smoothness, critical locus, Lefschetz test and genus of
//!   a plane curve projected from the point `(0:0:1)`.
//! - [`morse_homology`]: integer chain complexes, Smith normal form, homology
//!   and exactness.
//! - [`covers_rh`]: ramification profiles and splitting of degenerate
//!   critical points.
//! - [`hessian_index`]: Hessians of the composite Morse function at pencil
//!   critical points.

pub mod exact_poly;
pub mod roots;
pub mod curve_pencil;
pub mod morse_homology;
pub mod covers_rh;
pub mod hessian_index;
