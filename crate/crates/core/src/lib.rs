//! Conics and pencils of conics over the binary Galois fields GF(2^n).
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2n`]: field arithmetic in polynomial basis, the absolute trace and
//!   an Artin–Schreier solver.
//! * [`binquad`]: the binary form `u² + v² + Θuv`, its trace reducibility
//!   criterion and explicit factorisation.
//! * [`pg2`]: points, lines and conics of PG(2, 2^n) with a four-way
//!   classification of conics.
//! * [`pencil`]: pencils `λC₁ + μC₂`, the two-parameter pencil whose base
//!   members are conjugate imaginary line pairs, and the exhaustive
//!   verifier showing its third degenerate member is a real line pair.
//! * [`cli`]: the command-line front end and its text/CSV/JSON renderers.

pub mod binquad;
pub mod cli;
mod error;
pub mod gf2n;
pub mod pencil;
pub mod pg2;

pub use error::{Error, Result};
pub use gf2n::{FieldElement, FieldSpec};
