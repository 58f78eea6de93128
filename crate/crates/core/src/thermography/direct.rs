use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use crate::dyadic::Dyadic;
use crate::game::{CanonicalForm, GameStore};

/// The line a function follows just to the right of some `t`, and the last
/// temperature up to which that line is exact (`None`: forever).
#[derive(Debug, Clone, Copy)]
struct Germ {
    value: Dyadic,
    slope: i64,
    until: Option<Dyadic>,
}

fn scale(x: Dyadic, k: i64) -> Dyadic {
    x.checked_mul_int(k).expect("dyadic overflow")
}

fn min_until(a: Option<Dyadic>, b: Option<Dyadic>) -> Option<Dyadic> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Germ {
    fn tilted(self, t: Dyadic, k: i64) -> Self {
        Germ { value: self.value + scale(t, k), slope: self.slope + k, until: self.until }
    }

    /// Pointwise max (or min) of two germs taken at `t`.
    fn combine(self, other: Self, t: Dyadic, take_max: bool) -> Self {
        let a = (self.value, self.slope);
        let b = (other.value, other.slope);
        let b_wins = if take_max { b > a } else { b < a };
        let (win, lose) = if b_wins { (other, self) } else { (self, other) };
        let mut until = min_until(win.until, lose.until);
        let overtakes = if take_max { lose.slope > win.slope } else { lose.slope < win.slope };
        if overtakes {
            let offset = (win.value - lose.value)
                .checked_div_int(lose.slope - win.slope)
                .expect("non-dyadic wall crossing");
            until = min_until(until, Some(t + offset));
        }
        Germ { value: win.value, slope: win.slope, until }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Wall {
    Left,
    Right,
}

struct Sweep<'a> {
    store: &'a GameStore,
    germs: HashMap<(CanonicalForm, Wall, Dyadic), Germ, FxBuildHasher>,
}

impl Sweep<'_> {
    /// `(temperature, mast)`, cached on the node.
    fn freeze(&mut self, g: CanonicalForm) -> (Dyadic, Dyadic) {
        let store = self.store;
        if let Some(&known) = store.node(g).direct.get() {
            return known;
        }
        let computed = self.sweep(g);
        *store.node(g).direct.call_once(|| computed)
    }

    fn sweep(&mut self, g: CanonicalForm) -> (Dyadic, Dyadic) {
        if let Some(n) = self.store.as_number(g).filter(|x| x.is_integer()) {
            return (Dyadic::MINUS_ONE, n);
        }
        let mut t = Dyadic::MINUS_ONE;
        loop {
            let l = self.scaffold(g, Wall::Left, t);
            let r = self.scaffold(g, Wall::Right, t);
            let gap = l.value - r.value;
            if gap <= Dyadic::ZERO {
                if gap < Dyadic::ZERO {
                    debug_assert_eq!(t, Dyadic::MINUS_ONE);
                    return (t, Dyadic::simplest_between(l.value, r.value));
                }
                return (t, l.value);
            }
            let until = min_until(l.until, r.until);
            let closing = l.slope - r.slope;
            if closing < 0 {
                let offset = gap.checked_div_int(-closing).expect("non-dyadic temperature");
                let c = t + offset;
                if until.is_none_or(|u| c <= u) {
                    return (c, l.value + scale(offset, l.slope));
                }
            }
            t = until.expect("scaffolds never meet");
        }
    }

    /// Germ of Left's taxed scaffold (max of the options' right walls, minus
    /// `t`) or Right's (min of left walls, plus `t`).
    fn scaffold(&mut self, g: CanonicalForm, side: Wall, t: Dyadic) -> Germ {
        let store = self.store;
        let (options, facing, take_max, tilt) = match side {
            Wall::Left => (store.left_options(g), Wall::Right, true, -1),
            Wall::Right => (store.right_options(g), Wall::Left, false, 1),
        };
        let mut acc: Option<Germ> = None;
        for &x in options {
            let w = self.wall(x, facing, t);
            acc = Some(match acc {
                None => w,
                Some(a) => a.combine(w, t, take_max),
            });
        }
        acc.expect("non-integer has options on both sides").tilted(t, tilt)
    }

    fn wall(&mut self, g: CanonicalForm, side: Wall, t: Dyadic) -> Germ {
        let (temp, mast) = self.freeze(g);
        if t >= temp {
            return Germ { value: mast, slope: 0, until: None };
        }
        if let Some(&known) = self.germs.get(&(g, side, t)) {
            return known;
        }
        let mut germ = self.scaffold(g, side, t);
        germ.until = min_until(germ.until, Some(temp));
        self.germs.insert((g, side, t), germ);
        germ
    }
}

impl GameStore {
    /// `(temperature, mast)` without building any thermograph. Cached.
    pub fn direct_temperature(&self, g: CanonicalForm) -> (Dyadic, Dyadic) {
        Sweep { store: self, germs: HashMap::default() }.freeze(g)
    }
}
