use alloc::vec::Vec;

use super::{CanonicalForm, GameStore};

impl GameStore {
    /// `-g`: options swapped and negated. Cached on the node.
    pub fn neg(&self, g: CanonicalForm) -> CanonicalForm {
        if g == self.zero() {
            return g;
        }
        *self.node(g).negative.call_once(|| {
            let node = self.node(g);
            let left = node.right.iter().map(|&x| self.neg(x)).collect();
            let right = node.left.iter().map(|&x| self.neg(x)).collect();
            self.intern_canonical(left, right)
        })
    }

    /// The disjunctive sum `g + h`.
    pub fn add(&self, g: CanonicalForm, h: CanonicalForm) -> CanonicalForm {
        let zero = self.zero();
        if g == zero {
            return h;
        }
        if h == zero {
            return g;
        }
        let (g, h) = if g <= h { (g, h) } else { (h, g) };
        let gx = self.as_number(g);
        let hx = self.as_number(h);
        if let (Some(a), Some(b)) = (gx, hx) {
            return self.number(a + b);
        }
        if let Some(known) = self.sum_memo_get(g, h) {
            return known;
        }
        let gn = self.node(g);
        let hn = self.node(h);
        let mut left = Vec::with_capacity(gn.left.len() + hn.left.len());
        let mut right = Vec::with_capacity(gn.right.len() + hn.right.len());
        // Nobody needs to move in a number while the other summand is not one.
        if gx.is_none() {
            left.extend(gn.left.iter().map(|&x| self.add(x, h)));
            right.extend(gn.right.iter().map(|&x| self.add(x, h)));
        }
        if hx.is_none() {
            left.extend(hn.left.iter().map(|&x| self.add(g, x)));
            right.extend(hn.right.iter().map(|&x| self.add(g, x)));
        }
        let sum = self.construct(&left, &right);
        self.sum_memo_put(g, h, sum)
    }

    /// `g - h`.
    pub fn sub(&self, g: CanonicalForm, h: CanonicalForm) -> CanonicalForm {
        let minus = self.neg(h);
        self.add(g, minus)
    }

    /// Sum of any number of games; `0` for none.
    pub fn sum<I: IntoIterator<Item = CanonicalForm>>(&self, games: I) -> CanonicalForm {
        games.into_iter().fold(self.zero(), |acc, g| self.add(acc, g))
    }
}
