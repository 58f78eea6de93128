//! Brute-force play-out on explicit game trees.
//!
//! Nothing here simplifies or canonicalises; it is the reference the
//! canonical-form machinery is checked against.

use alloc::vec::Vec;

use super::{CanonicalForm, GameStore};

/// Who wins under optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Left wins whoever starts (`G > 0`).
    Left,
    /// Right wins whoever starts (`G < 0`).
    Right,
    /// The player to move wins (`G || 0`).
    First,
    /// The player to move loses (`G = 0`).
    Second,
}

impl Outcome {
    pub fn from_wins(left_first: bool, left_second: bool) -> Self {
        match (left_first, left_second) {
            (true, true) => Outcome::Left,
            (false, false) => Outcome::Right,
            (true, false) => Outcome::First,
            (false, true) => Outcome::Second,
        }
    }

    /// `G >= 0`: Left wins when Right moves first.
    pub fn is_nonnegative(self) -> bool {
        matches!(self, Outcome::Left | Outcome::Second)
    }

    /// `G <= 0`: Right wins when Left moves first.
    pub fn is_nonpositive(self) -> bool {
        matches!(self, Outcome::Right | Outcome::Second)
    }
}

/// A finite game given by explicit move lists.
pub trait ExplicitGame: Sized {
    fn left_options(&self) -> Vec<Self>;
    fn right_options(&self) -> Vec<Self>;
}

fn left_wins_moving_first<G: ExplicitGame>(g: &G) -> bool {
    g.left_options().iter().any(|x| !right_wins_moving_first(x))
}

fn right_wins_moving_first<G: ExplicitGame>(g: &G) -> bool {
    g.right_options().iter().any(|x| !left_wins_moving_first(x))
}

/// Outcome class by exhaustive alternating play: a player with no move
/// loses.
pub fn outcome<G: ExplicitGame>(g: &G) -> Outcome {
    let left_first = left_wins_moving_first(g);
    let left_second = !right_wins_moving_first(g);
    Outcome::from_wins(left_first, left_second)
}

/// An explicit, possibly non-canonical game tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GameTree {
    pub left: Vec<GameTree>,
    pub right: Vec<GameTree>,
}

impl GameTree {
    pub fn new(left: Vec<GameTree>, right: Vec<GameTree>) -> Self {
        Self { left, right }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn star() -> Self {
        Self::new(alloc::vec![Self::zero()], alloc::vec![Self::zero()])
    }

    pub fn integer(n: i64) -> Self {
        let mut g = Self::zero();
        for _ in 0..n.unsigned_abs() {
            g = if n > 0 {
                Self::new(alloc::vec![g], Vec::new())
            } else {
                Self::new(Vec::new(), alloc::vec![g])
            };
        }
        g
    }

    pub fn depth(&self) -> usize {
        self.left.iter().chain(&self.right).map(|x| x.depth() + 1).max().unwrap_or(0)
    }
}

impl ExplicitGame for GameTree {
    fn left_options(&self) -> Vec<Self> {
        self.left.clone()
    }

    fn right_options(&self) -> Vec<Self> {
        self.right.clone()
    }
}

impl GameStore {
    /// Canonical form of an explicit tree, built bottom-up.
    pub fn canonical_of(&self, tree: &GameTree) -> CanonicalForm {
        let left: Vec<_> = tree.left.iter().map(|x| self.canonical_of(x)).collect();
        let right: Vec<_> = tree.right.iter().map(|x| self.canonical_of(x)).collect();
        self.construct(&left, &right)
    }

    /// Outcome class read off the canonical form.
    pub fn outcome(&self, g: CanonicalForm) -> Outcome {
        let zero = self.zero();
        Outcome::from_wins(!self.leq(g, zero), self.leq(zero, g))
    }
}
