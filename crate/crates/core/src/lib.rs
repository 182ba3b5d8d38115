//! Christoffel graphs in arbitrary dimension.
//!
//! For coprime positive integers `a = (a_1, ..., a_d)` and a width `omega`
//! dividing `s = sum a_i`, the Christoffel graph `H_{a,omega}` is the set of
//! unit edges `(u, u + e_i)` of `Z^d` along which `x -> a.x mod omega`
//! increases. For `d = 2` its lines read Christoffel words.
//!
//! The crate covers:
//! - [`residue`]: the residue map, edge membership, sigma-paths, hypercubes;
//! - [`lattice`]: Hermite forms, kernels, indices and coset enumeration;
//! - [`graph`]: windowed edge sets, flip / reversal / translation and the
//!   forward flip-equals-translate check;
//! - [`converse`]: recovering `(a, omega)` from a lattice and a translation
//!   such that a pattern is a translate of its flip;
//! - [`words`]: Christoffel, central and line words;
//! - [`tiling`]: projection onto the diagonal hyperplane, point location in
//!   the parallelotope tiling, the quotient graph and Christoffel
//!   parallelograms;
//! - [`surface`]: the stepped surface seen along the diagonal;
//! - [`export`] and [`svg`]: JSON / DOT / SVG output; [`cli`]: the
//!   command-line front end.

pub mod cli;
pub mod converse;
pub mod error;
pub mod export;
pub mod graph;
pub mod lattice;
pub mod rational;
pub mod residue;
pub mod surface;
pub mod svg;
pub mod tiling;
pub mod words;

pub use error::{Error, Result};
pub use lattice::Lattice;
pub use residue::{Edge, NormalData, SigmaPath};
