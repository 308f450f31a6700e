//! The Burnside process on parking functions: an exact, reproducible sampler
//! for Catalan structures.
//!
//! `S_n` acts on parking functions of length `n` by permuting coordinates and
//! its orbits are counted by the Catalan numbers. The Burnside chain
//! alternates a uniform draw from the stabilizer of the current state with a
//! uniform draw from the fixed set of that group element; lumped to orbits it
//! is uniform in the limit. The crate provides
//!
//! - [`combinatorics`]: parking functions, permutations, counts, enumeration
//!   and the cyclic-shift representative map;
//! - [`burnside`]: the sampler and its exact kernel, stationary law and
//!   lumped kernel;
//! - [`bose_einstein`]: the same process on all words, which the parking chain
//!   is a quotient of;
//! - [`bijections`]: Dyck paths, labeled Dyck paths and triangulations;
//! - [`diagnostics`]: exact and empirical total variation, the theoretical
//!   bound, and mixing times;
//! - [`verify`]: named invariant suites;
//! - [`output`]: metadata and sample serialization shared by the CLI.

pub mod bijections;
pub mod bose_einstein;
pub mod brute;
pub mod burnside;
pub mod combinatorics;
pub mod diagnostics;
pub mod error;
pub mod output;
pub mod rational;
pub mod rng;
pub mod verify;

pub use combinatorics::{IncreasingParkingFunction, ParkingFunction, Permutation, Word};
pub use error::{Error, Result};
pub use rational::Rational;
