//! Combinatorial game values, thermography and Domineering positions.
//!
//! Everything here needs only `core` and `alloc`. Games live in a shared
//! [`GameStore`] that hash-conses canonical forms; handles are plain
//! [`CanonicalForm`] ids, cheap to copy and compare.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod domineering;
pub mod dyadic;
pub mod families;
pub mod game;
mod sync;
pub mod thermography;

pub use domineering::{GridError, GridPosition, TranspositionTable};
pub use dyadic::{Dyadic, DyadicParseError};
pub use families::{FamilyCheck, FamilyKind, TallGrid};
pub use game::{CanonicalForm, ExplicitGame, GameStore, GameTree, Outcome, ParseError};
pub use thermography::{Segment, Thermograph, ThermographMethod, Trajectory};
