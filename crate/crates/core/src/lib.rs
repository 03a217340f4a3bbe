//! Exact symbolic machinery for weighted lozenge tilings of half hexagons
//! with lateral dents, and for the equivalent families of nonintersecting
//! lattice paths.
//!
//! Everything here is computed over the ring of Laurent polynomials in `q`
//! (integer exponents) and ordinary polynomials in `X`, `Y` (nonnegative
//! exponents) with exact rational coefficients. There are no floating point
//! modes: two values are equal iff their canonical forms coincide.
//!
//! The crate is organized as follows:
//! - [`rational`]: exact arbitrary-precision rationals (the coefficient field)
//! - [`poly`]: sparse trivariate Laurent polynomials with ring arithmetic,
//!   exact division and evaluation
//! - [`text`]: the canonical text format and parser for polynomials
//! - [`qseries`]: step weights `w_i = (X q^i + Y q^-i)/2`, q-Pochhammer
//!   symbols and indexed weight products
//! - [`paths`]: single-path generating functions (closed form, recursion,
//!   diagonal specialization), a brute-force path enumerator, and the
//!   width-shift factor in plain and Pochhammer form
//! - [`lgv`]: determinants of path-GF matrices, nonintersecting-family
//!   generating functions, and the factored ratio identity check
//! - [`tilings`]: dented half-hexagon regions, backtracking tiling
//!   enumeration, vertical-lozenge labels, and the weight-preserving
//!   bijection onto path families

pub mod error;
pub mod lgv;
pub mod paths;
pub mod poly;
pub mod qseries;
pub mod rational;
pub mod text;
pub mod tilings;

pub use error::{Error, Result};
pub use poly::{LaurentPoly, Monomial};
pub use rational::Rational;
