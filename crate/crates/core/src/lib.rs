//! Combinatorics of the odd symplectic partial flag varieties
//! `IF(1, …, m; 2n+1)`: signed permutations and the Bruhat order on `W^P`,
//! degree-labelled moment graphs, and curve neighborhoods of Schubert varieties.
//!
//! The central computation is [`curve_nbhd::gamma`]: starting from the Schubert
//! point, walks of degree at most `(1, …, 1)` in the odd moment graph reach
//! exactly `m` Bruhat-maximal classes, each of dimension `2n`. Those classes
//! index the `q_1⋯q_m` terms of `τ_Div ⋆ τ_pt` (see [`curve_nbhd::quantum_report`]).
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod bruhat;
pub mod cli;
pub mod curve_nbhd;
pub mod error;
pub mod moment_graph;
pub mod root_system;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{DegreeVector, FlagContext, Root};
pub use weyl::{CosetRep, Notation, Window};
