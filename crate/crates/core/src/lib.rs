//! Transport of two-qubit quantum correlations across a uniform XX spin
//! chain in the single-excitation sector.
//!
//! A spin attached to the first site of the chain shares an X-shaped state
//! with a detached spin. The chain acts on the pair as an amplitude-damping
//! channel parameterized by one complex transition amplitude, and the
//! modules here compute that amplitude, evolve the pair, and quantify the
//! surviving entanglement and discord.

pub mod analysis;
pub mod chain;
pub mod channel;
pub mod checks;
pub mod correlations;
pub mod error;
pub mod figures;
pub mod io;
pub mod linalg;
pub mod states;

pub use error::{Error, Result};
