use alloc::vec::Vec;
use core::fmt;

use crate::dyadic::Dyadic;

/// One linear piece: `value + slope * (t - start)` from `start` up to the
/// next piece's start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub start: Dyadic,
    pub value: Dyadic,
    pub slope: i64,
}

impl Segment {
    fn at(&self, t: Dyadic) -> Dyadic {
        self.value + (t - self.start).checked_mul_int(self.slope).expect("dyadic overflow")
    }
}

/// A continuous piecewise-linear function of the temperature `t >= -1`.
///
/// Pieces are kept in increasing order of `start`, the first starting at
/// `-1`, and adjacent pieces always differ in slope, so equal functions have
/// equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trajectory {
    segments: Vec<Segment>,
}

fn minus_one() -> Dyadic {
    Dyadic::MINUS_ONE
}

/// `t` with `a + sa (t - s) = b + sb (t - s)`, or `None` if that is not a
/// dyadic number.
fn crossing(start: Dyadic, a: Dyadic, sa: i64, b: Dyadic, sb: i64) -> Dyadic {
    let offset = (b - a).checked_div_int(sa - sb).expect("non-dyadic trajectory crossing");
    start + offset
}

impl Trajectory {
    pub fn constant(value: Dyadic) -> Self {
        Self { segments: alloc::vec![Segment { start: minus_one(), value, slope: 0 }] }
    }

    /// Builds from raw pieces, merging collinear neighbours.
    pub fn from_segments<I: IntoIterator<Item = Segment>>(pieces: I) -> Self {
        let mut out = Self { segments: Vec::new() };
        for piece in pieces {
            out.push(piece);
        }
        assert!(
            out.segments.first().is_some_and(|s| s.start == minus_one()),
            "trajectory must start at t = -1"
        );
        out
    }

    fn push(&mut self, piece: Segment) {
        if let Some(last) = self.segments.last() {
            debug_assert!(piece.start > last.start);
            debug_assert_eq!(last.at(piece.start), piece.value, "discontinuous trajectory");
            if last.slope == piece.slope {
                return;
            }
        }
        self.segments.push(piece);
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    fn piece_at(&self, t: Dyadic) -> &Segment {
        let i = self.segments.partition_point(|s| s.start <= t);
        &self.segments[i.saturating_sub(1)]
    }

    pub fn value_at(&self, t: Dyadic) -> Dyadic {
        self.piece_at(t).at(t)
    }

    /// Slope just to the right of `t`.
    pub fn slope_after(&self, t: Dyadic) -> i64 {
        self.piece_at(t).slope
    }

    /// Temperatures where the slope changes, highest first.
    pub fn critical_temperatures(&self) -> Vec<Dyadic> {
        self.segments.iter().skip(1).rev().map(|s| s.start).collect()
    }

    /// Value for all sufficiently large `t`, if the function ends constant.
    pub fn mast(&self) -> Option<Dyadic> {
        let last = self.segments.last()?;
        (last.slope == 0).then_some(last.value)
    }

    /// `self(t) + k t`.
    pub fn tilted(&self, k: i64) -> Self {
        Self::from_segments(self.segments.iter().map(|s| Segment {
            start: s.start,
            value: s.value + s.start.checked_mul_int(k).expect("dyadic overflow"),
            slope: s.slope + k,
        }))
    }

    pub fn max(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn min(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn combine(&self, other: &Self, take_max: bool) -> Self {
        let mut starts: Vec<Dyadic> = self.segments.iter().chain(&other.segments).map(|s| s.start).collect();
        starts.sort_unstable();
        starts.dedup();
        let better = |a: (Dyadic, i64), b: (Dyadic, i64)| if take_max { a > b } else { a < b };
        let mut pieces = Vec::new();
        for (i, &s) in starts.iter().enumerate() {
            let end = starts.get(i + 1).copied();
            let a = (self.value_at(s), self.slope_after(s));
            let b = (other.value_at(s), other.slope_after(s));
            let (win, lose) = if better(b, a) { (b, a) } else { (a, b) };
            pieces.push(Segment { start: s, value: win.0, slope: win.1 });
            let overtakes = if take_max { lose.1 > win.1 } else { lose.1 < win.1 };
            if overtakes {
                let c = crossing(s, win.0, win.1, lose.0, lose.1);
                if c > s && end.is_none_or(|e| c < e) {
                    let value = win.0 + (c - s).checked_mul_int(win.1).expect("dyadic overflow");
                    pieces.push(Segment { start: c, value, slope: lose.1 });
                }
            }
        }
        Self::from_segments(pieces)
    }

    /// Same function below `t`, constant `value` from `t` on.
    pub fn frozen_at(&self, t: Dyadic, value: Dyadic) -> Self {
        let below = self.segments.iter().copied().filter(|s| s.start < t);
        Self::from_segments(below.chain(core::iter::once(Segment { start: t, value, slope: 0 })))
    }

    /// Least `t >= -1` with `self(t) <= other(t)`, if any.
    pub fn first_at_or_below(&self, other: &Self) -> Option<Dyadic> {
        let mut starts: Vec<Dyadic> = self.segments.iter().chain(&other.segments).map(|s| s.start).collect();
        starts.sort_unstable();
        starts.dedup();
        for (i, &s) in starts.iter().enumerate() {
            let gap = self.value_at(s) - other.value_at(s);
            if gap <= Dyadic::ZERO {
                return Some(s);
            }
            let closing = self.slope_after(s) - other.slope_after(s);
            if closing < 0 {
                let c = crossing(s, gap, closing, Dyadic::ZERO, 0);
                if starts.get(i + 1).is_none_or(|&e| c <= e) {
                    return Some(c);
                }
            }
        }
        None
    }
}

impl fmt::Debug for Trajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Trajectory[")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}@{}/{:+}", s.value, s.start, s.slope)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    #[test]
    fn tilt_of_constant() {
        let t = Trajectory::constant(Dyadic::integer(2)).tilted(-1);
        assert_eq!(t.value_at(Dyadic::MINUS_ONE), Dyadic::integer(3));
        assert_eq!(t.value_at(Dyadic::integer(2)), Dyadic::ZERO);
        assert_eq!(t.slope_after(Dyadic::ZERO), -1);
        assert_eq!(t.mast(), None);
    }

    #[test]
    fn max_inserts_crossing() {
        let a = Trajectory::constant(Dyadic::ZERO);
        let b = Trajectory::constant(Dyadic::integer(1)).tilted(-1); // 1 - t
        let m = a.max(&b);
        assert_eq!(m.critical_temperatures(), alloc::vec![Dyadic::ONE]);
        assert_eq!(m.value_at(Dyadic::ZERO), Dyadic::ONE);
        assert_eq!(m.value_at(Dyadic::integer(5)), Dyadic::ZERO);
        let n = a.min(&b);
        assert_eq!(n.value_at(Dyadic::ZERO), Dyadic::ZERO);
        assert_eq!(n.value_at(Dyadic::integer(3)), Dyadic::integer(-2));
    }

    #[test]
    fn half_integer_crossing() {
        // 2 - t meets 1 + t at t = 1/2
        let l = Trajectory::constant(Dyadic::integer(2)).tilted(-1);
        let r = Trajectory::constant(Dyadic::ONE).tilted(1);
        assert_eq!(l.first_at_or_below(&r), Some(d(1, 1)));
        let frozen = l.frozen_at(d(1, 1), d(3, 1));
        assert_eq!(frozen.mast(), Some(d(3, 1)));
        assert_eq!(frozen.critical_temperatures(), alloc::vec![d(1, 1)]);
    }

    #[test]
    fn collinear_pieces_merge() {
        let t = Trajectory::from_segments([
            Segment { start: Dyadic::MINUS_ONE, value: Dyadic::ONE, slope: -1 },
            Segment { start: Dyadic::ZERO, value: Dyadic::ZERO, slope: -1 },
        ]);
        assert_eq!(t.segments().len(), 1);
    }
}
