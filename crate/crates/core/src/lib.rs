//! A workbench for finite commutative multiplicative hyperrings.
//!
//! The crate validates hyperring tables, enumerates and classifies
//! hyperideals (prime, primary, C-, r-, n-, maximal, minimal, essential),
//! builds derived hyperrings (quotients, products, hypermatrices,
//! subhyperrings, the fundamental ring `R/γ*`) and runs a registry of
//! propositions about r- and n-hyperideals exhaustively over a corpus of small
//! instances.

pub mod analysis;
pub mod classify;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod io;
pub mod ring;
pub mod subset;

pub use error::{Axiom, AxiomViolation, Error, Result};
pub use ring::{HyperRing, Provenance, RawTables};
pub use subset::ElementSubset;
