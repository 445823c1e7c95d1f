//! Analysis of the two-player, three-food "I cut, you choose" division game.
//!
//! Cat 1 keeps one of three foods, Cat 2 eats one of the remaining pair, and
//! Cat 1 then eats one of the kept food and Cat 2's leftover. Both players
//! aim for a balanced diet: each food appearing with long-run frequency 1/3.
//! The crate computes and classifies the strategies achieving this optimum —
//! as one of the six strict transitive orders or one of the two preference
//! cycles — in both the classical mixed-strategy model and the one-qubit
//! quantum model built on the three mutually unbiased bases, maps the regions
//! of first-move frequencies where each strategy type is available, and
//! verifies everything by seeded simulation.

pub mod classical;
mod error;
pub mod quantum;
pub mod regions;
pub mod sim;
mod strategy;
mod types;

pub use error::{Error, Result};
pub use strategy::{classify_preferences, conditional_probability, PreferenceClass, ResponseStrategy};
pub use types::{
    ExtendedComplex, FoodIndex, FrequencyTriple, Owner, SimplexPoint, SpherePoint, IDENTITY_TOL,
    SOLVE_TOL,
};
