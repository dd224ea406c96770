//! Modular elements, supersolvability, Möbius function and Poincaré
//! polynomial.

pub mod criterion;
pub mod modular;
pub mod poincare;
pub mod replay;
pub mod supersolvable;

pub use criterion::{check_rank2_criterion, check_rank2_criterion_in, check_rank2_criterion_limited, Rank2Report};
pub use modular::{is_modular, modular_flats_of_rank, sum_is_flat, ModularityVerdict, Witness};
pub use poincare::{exponents_if_supersolvable, mobius, poincare, PoincarePolynomial};
pub use replay::{replay_witness, ReplayOutcome};
pub use supersolvable::{
    is_supersolvable, is_supersolvable_limited, supersolvable_in, Refutation, SupersolvabilityCertificate,
};
