//! Finite commutative rings, their ideal lattices, and the sieving condition
//! on shifted unions of ideals.
//!
//! A ring is given by invariant factors and structure constants and is
//! enumerated in full, so every predicate here is decided exactly by finite
//! computation. Orders of number fields enter through their finite quotients.

pub mod catalog;
pub mod config;
pub mod error;
pub mod ideal;
pub mod local;
pub mod matrix;
pub mod order;
pub mod parse;
pub mod ring;
pub mod rogers;
pub mod sieve;

pub use config::Limits;
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use ring::{Element, FiniteRing, RingHom, RingPresentation};
pub use rogers::{Mode, RogersReport, Witness};
