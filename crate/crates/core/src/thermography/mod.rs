//! Thermographs, temperatures and means.
//!
//! Thermographs are extended down to `t = -1`, so every game has a
//! temperature: integers sit at `-1`, a number `m/2^k` (odd `m`, `k >= 1`)
//! at `-2^-k`, infinitesimals at `0`.
//!
//! Two independent routes compute the temperature:
//!
//! * [`ThermographMethod::Scaffold`] builds both walls of every follower as
//!   [`Trajectory`] values and intersects the taxed scaffolds.
//! * [`ThermographMethod::Direct`] never builds walls. It sweeps `t` upward
//!   from `-1`, evaluating at each step only the linear germ of the scaffolds
//!   (value, slope and how far that line stays valid) by recursion over the
//!   options, and stops at the first point where Left's scaffold is no
//!   longer above Right's.

mod direct;
mod trajectory;

use alloc::boxed::Box;

pub use trajectory::{Segment, Trajectory};

use crate::dyadic::Dyadic;
use crate::game::{CanonicalForm, GameStore};

/// How temperatures are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ThermographMethod {
    #[default]
    Scaffold,
    Direct,
}

/// Left and right walls of a game's thermograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thermograph {
    pub left_wall: Trajectory,
    pub right_wall: Trajectory,
    temperature: Dyadic,
    mast: Dyadic,
}

impl Thermograph {
    /// A bare mast at `value`, as for an integer.
    pub fn mast_only(value: Dyadic) -> Self {
        Self {
            left_wall: Trajectory::constant(value),
            right_wall: Trajectory::constant(value),
            temperature: Dyadic::MINUS_ONE,
            mast: value,
        }
    }

    /// Freezes the taxed scaffolds where Left's first drops to Right's.
    pub fn from_scaffolds(left: &Trajectory, right: &Trajectory) -> Self {
        let minus_one = Dyadic::MINUS_ONE;
        let freeze = left.first_at_or_below(right).expect("scaffolds never meet");
        let (l, r) = (left.value_at(freeze), right.value_at(freeze));
        let mast = if l < r {
            // only possible at t = -1
            Dyadic::simplest_between(l, r)
        } else {
            l
        };
        if freeze == minus_one {
            return Self::mast_only(mast);
        }
        Self {
            left_wall: left.frozen_at(freeze, mast),
            right_wall: right.frozen_at(freeze, mast),
            temperature: freeze,
            mast,
        }
    }

    /// Least `t` above which both walls coincide.
    pub fn temperature(&self) -> Dyadic {
        self.temperature
    }

    pub fn mast(&self) -> Dyadic {
        self.mast
    }

    /// Reflection about value 0 (the thermograph of the negative).
    pub fn reflected(&self) -> Self {
        Self {
            left_wall: self.right_wall.negated(),
            right_wall: self.left_wall.negated(),
            temperature: self.temperature,
            mast: -self.mast,
        }
    }
}

impl Trajectory {
    pub fn negated(&self) -> Self {
        Trajectory::from_segments(self.segments().iter().map(|s| Segment {
            start: s.start,
            value: -s.value,
            slope: -s.slope,
        }))
    }
}

impl GameStore {
    /// The thermograph of `g`, built from its options' walls. Cached.
    pub fn thermograph(&self, g: CanonicalForm) -> &Thermograph {
        self.node(g).thermograph.call_once(|| Box::new(self.build_thermograph(g)))
    }

    fn build_thermograph(&self, g: CanonicalForm) -> Thermograph {
        if let Some(n) = self.as_number(g).filter(|x| x.is_integer()) {
            return Thermograph::mast_only(n);
        }
        let left = self
            .left_options(g)
            .iter()
            .map(|&x| self.thermograph(x).right_wall.clone())
            .reduce(|a, b| a.max(&b))
            .expect("non-integer has Left options")
            .tilted(-1);
        let right = self
            .right_options(g)
            .iter()
            .map(|&x| self.thermograph(x).left_wall.clone())
            .reduce(|a, b| a.min(&b))
            .expect("non-integer has Right options")
            .tilted(1);
        Thermograph::from_scaffolds(&left, &right)
    }

    /// Temperature via the scaffold thermograph.
    pub fn temperature(&self, g: CanonicalForm) -> Dyadic {
        self.thermograph(g).temperature()
    }

    pub fn temperature_with(&self, g: CanonicalForm, method: ThermographMethod) -> Dyadic {
        match method {
            ThermographMethod::Scaffold => self.temperature(g),
            ThermographMethod::Direct => self.direct_temperature(g).0,
        }
    }

    /// The mast (mean) value.
    pub fn mast_value(&self, g: CanonicalForm) -> Dyadic {
        self.thermograph(g).mast()
    }
}

#[cfg(test)]
mod tests;
