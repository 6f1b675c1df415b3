//! Exact intersection theory, line-bundle cohomology, positivity checks and
//! Gaussian-map ranks for nodal curves on Hirzebruch surfaces `F_n` and their
//! blow-ups at the nodes.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its arguments; randomness (generic points) is drawn from a
//! seeded ChaCha stream so every result is reproducible.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod blowup_sections;
pub mod gaussian;
pub mod linalg;
pub mod picard;
pub mod positivity;
pub mod riemann_roch;
pub mod wahl_report;

pub use error::{Error, Result};
pub use picard::{BlownSurface, ChartPoint, DivisorClass, HirzebruchSurface, NodalCurve, Surface};
