//! Degree estimates for polynomials constant on a hyperplane.
//!
//! The crate works with exact rational polynomials `p` that equal 1 on
//! `x1 + ... + xn = 1`, their homogenized forms `P = S Q`, and the sign
//! pattern of `Q` on the integer lattice (the Newton diagram). Node counts of
//! that diagram bound the number of terms of `P` from below.
//!
//! Modules:
//! - [`poly`]: exact arithmetic, homogenization, division by `S`.
//! - [`diagram`]: Newton diagrams, nodes, weighted surface counts, faces.
//! - [`transforms`]: diagram surgeries with checked receipts.
//! - [`constructions`]: sharp families and the filled-diagram search.
//! - [`bounds`]: bound tables and dimension reductions.
//! - [`quadrics`]: monomial maps between hyperquadrics.
//! - [`enumeration`]: exhaustive sweeps and the decomposability oracle.
//! - [`cli`]: parser, renderers, command dispatch.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod poly;
pub mod quadrics;
pub mod transforms;

pub use error::{Error, Result};
pub use poly::{MultiIndex, Polynomial, Rat, VarStyle};
