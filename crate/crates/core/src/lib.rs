//! Efficiency analysis of pure, nondegenerate quantum error-correcting codes
//! on the depolarizing channel.
//!
//! The crate is organised around a handful of modules:
//!
//! - [`code_model`]: `[[n, k, d]]` parameter triples and the validated code registry.
//! - [`bounds`]: Hamming, Gilbert-Varshamov, Singleton and pure-code bounds,
//!   maximal `k` search and linear extrapolation of code parameters.
//! - [`efficiency`]: block success probability, efficiency, fidelity estimate and
//!   the leftover-syndrome budget.
//! - [`analysis`]: efficiency envelopes, crossover points and figure datasets.
//! - [`verification`]: exhaustive Pauli-pattern enumeration and Monte Carlo sampling.
//! - [`cli`]: the command-line front end, emitting CSV.
//!
//! ```
//! use qec_efficiency::{CodeParams, ErrorProbability, efficiency};
//!
//! let code = CodeParams::new(5, 1, 3).unwrap();
//! let p = ErrorProbability::new(0.0).unwrap();
//! assert_eq!(efficiency::efficiency(&code, p), 0.2);
//! ```

pub mod analysis;
pub mod bounds;
pub mod cli;
pub mod code_model;
pub mod combinatorics;
pub mod efficiency;
mod error;
pub mod grid;
pub mod verification;

pub use code_model::{CodeParams, CodeRecord, CodeRegistry, CodeStatus, RegistryQuery};
pub use efficiency::ErrorProbability;
pub use error::{Error, Result};
pub use grid::Grid;
