use super::{CanonicalForm, GameStore};

impl GameStore {
    /// `g <= h` in the partial order of games.
    ///
    /// `g <= h` unless some `g^L >= h` or some `h^R <= g`. Stops settle most
    /// pairs before the recursion: `g <= h` forces both stops of `g` to be at
    /// most those of `h`, and `RS(h) > LS(g)` forces `g < h`.
    pub fn leq(&self, g: CanonicalForm, h: CanonicalForm) -> bool {
        if g == h {
            return true;
        }
        let gn = self.node(g);
        let hn = self.node(h);
        if let (Some(a), Some(b)) = (gn.number, hn.number) {
            return a <= b;
        }
        if gn.left_stop > hn.left_stop || gn.right_stop > hn.right_stop {
            return false;
        }
        if hn.right_stop > gn.left_stop {
            return true;
        }
        if let Some(known) = self.leq_memo_get(g, h) {
            return known;
        }
        let result =
            !(gn.left.iter().any(|&gl| self.leq(h, gl)) || hn.right.iter().any(|&hr| self.leq(hr, g)));
        self.leq_memo_put(g, h, result);
        result
    }

    pub fn geq(&self, g: CanonicalForm, h: CanonicalForm) -> bool {
        self.leq(h, g)
    }

    /// Equality of values; for canonical forms this is handle equality.
    pub fn equal(&self, g: CanonicalForm, h: CanonicalForm) -> bool {
        g == h
    }

    /// `g` and `h` are incomparable.
    pub fn confused(&self, g: CanonicalForm, h: CanonicalForm) -> bool {
        !self.leq(g, h) && !self.leq(h, g)
    }

    /// `g <= h` by the bare recursive definition, without stops or memo.
    /// Exponential; for cross-checking only.
    pub fn leq_by_definition(&self, g: CanonicalForm, h: CanonicalForm) -> bool {
        !(self.left_options(g).iter().any(|&gl| self.leq_by_definition(h, gl))
            || self.right_options(h).iter().any(|&hr| self.leq_by_definition(hr, g)))
    }
}
