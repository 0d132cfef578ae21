//! Homotopy moves, derived moves and the bounded equivalence search.

mod derived;
mod moves;
mod search;

pub use derived::{apply_derived, derived_move_check, DerivedKind, DerivedMove, Step};
pub use moves::{applicable_moves, MoveDisplay, MoveInstance, MoveKind};
pub use search::{
    equivalent_bounded, is_contractible_bounded, search, SearchConfig, SearchOutcome, SearchStats, Verdict, Witness,
};

use crate::alphabet::AlphabetSpec;

/// α₀ with `S₀`: one free orbit `{a, b}` and diagonal homotopy data.
pub fn preset_curves() -> AlphabetSpec {
    AlphabetSpec::curves()
}

/// α* with `S*`.
pub fn preset_knots() -> AlphabetSpec {
    AlphabetSpec::knots()
}
