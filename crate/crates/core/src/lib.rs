//! Homotopy theory of words over an alphabet with involution: nanowords,
//! homotopy moves and a bounded equivalence search, and a stack of homotopy
//! invariants (γ, self-linking, α-pairings, tricolorings, λ, kei sequences).

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod alphabet;
pub mod error;
pub mod homotopy;
pub mod invariants;
pub mod kei;
pub mod linear;
pub mod pairing;
pub mod rank;
pub mod report;
mod setting;
pub mod word;

pub use alphabet::{AlphabetSpec, Triples};
pub use error::{Error, Result};
pub use setting::Setting;
pub use word::{CanonicalNanoword, EtaleWord, Letter, Nanoword};

use algebra::{AbelianPi, GroupRing, Mod2, PsiElement};

/// ℤπ.
pub type ZPi = GroupRing<AbelianPi, i64>;
/// (ℤ/2)π.
pub type ZPiMod2 = GroupRing<AbelianPi, Mod2>;
/// Λ = ℤΨ.
pub type Lambda = GroupRing<PsiElement, i64>;
