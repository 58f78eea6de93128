//! Canonicalisation of `{left | right}` from canonical options.

use alloc::vec::Vec;

use super::{CanonicalForm, GameStore};
use crate::dyadic::Dyadic;

impl GameStore {
    /// The canonical form of `{left | right}`.
    ///
    /// Dominated options are deleted and reversible options bypassed until
    /// neither rule applies.
    pub fn construct(&self, left: &[CanonicalForm], right: &[CanonicalForm]) -> CanonicalForm {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();

        if let Some(g) = self.construct_from_numbers(&left, &right) {
            return g;
        }

        loop {
            self.remove_dominated(&mut left, true);
            self.remove_dominated(&mut right, false);
            let bypassed_left = self.bypass_reversible_left(&mut left, &right);
            let bypassed_right = self.bypass_reversible_right(&left, &mut right);
            if !bypassed_left && !bypassed_right {
                break;
            }
        }
        self.intern_canonical(left, right)
    }

    /// Shortcut when every option is a number.
    fn construct_from_numbers(
        &self,
        left: &[CanonicalForm],
        right: &[CanonicalForm],
    ) -> Option<CanonicalForm> {
        let best_left = left.iter().map(|&g| self.as_number(g)).try_fold(None, |acc, x| {
            let x = x?;
            Some(Some(acc.map_or(x, |a: Dyadic| a.max(x))))
        })?;
        let best_right = right.iter().map(|&g| self.as_number(g)).try_fold(None, |acc, x| {
            let x = x?;
            Some(Some(acc.map_or(x, |a: Dyadic| a.min(x))))
        })?;
        let g = match (best_left, best_right) {
            (None, None) => self.zero(),
            (Some(a), None) => {
                let n = if a < Dyadic::ZERO { 0 } else { a.floor() + 1 };
                self.integer(n)
            }
            (None, Some(b)) => {
                let n = if b > Dyadic::ZERO { 0 } else { b.ceil() - 1 };
                self.integer(n)
            }
            (Some(a), Some(b)) if a < b => self.number(Dyadic::simplest_between(a, b)),
            (Some(a), Some(b)) => {
                let a = self.number(a);
                let b = self.number(b);
                self.intern_canonical(alloc::vec![a], alloc::vec![b])
            }
        };
        Some(g)
    }

    /// Drops every option dominated by another one: for Left, `x <= y`; for
    /// Right, `x >= y`. Options are pairwise distinct on entry.
    fn remove_dominated(&self, options: &mut Vec<CanonicalForm>, is_left: bool) {
        if options.len() < 2 {
            return;
        }
        let mut keep = alloc::vec![true; options.len()];
        for i in 0..options.len() {
            if !keep[i] {
                continue;
            }
            for j in 0..options.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let dominated =
                    if is_left { self.leq(options[i], options[j]) } else { self.leq(options[j], options[i]) };
                if dominated {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut k = 0;
        options.retain(|_| {
            k += 1;
            keep[k - 1]
        });
    }

    /// Replaces each Left option `A` having a Right option `A^R <= G` by the
    /// Left options of `A^R`.
    fn bypass_reversible_left(&self, left: &mut Vec<CanonicalForm>, right: &[CanonicalForm]) -> bool {
        let mut changed = false;
        let mut i = 0;
        while i < left.len() {
            let option = left[i];
            let reversing =
                self.right_options(option).iter().copied().find(|&x| self.leq_unbuilt(x, left, right));
            match reversing {
                Some(x) => {
                    left.swap_remove(i);
                    for &y in self.left_options(x) {
                        if !left.contains(&y) {
                            left.push(y);
                        }
                    }
                    changed = true;
                }
                None => i += 1,
            }
        }
        left.sort_unstable();
        changed
    }

    /// Dual of [`Self::bypass_reversible_left`]: Right options `B` with some
    /// `B^L >= G`.
    fn bypass_reversible_right(&self, left: &[CanonicalForm], right: &mut Vec<CanonicalForm>) -> bool {
        let mut changed = false;
        let mut i = 0;
        while i < right.len() {
            let option = right[i];
            let reversing =
                self.left_options(option).iter().copied().find(|&x| self.geq_unbuilt(x, left, right));
            match reversing {
                Some(x) => {
                    right.swap_remove(i);
                    for &y in self.right_options(x) {
                        if !right.contains(&y) {
                            right.push(y);
                        }
                    }
                    changed = true;
                }
                None => i += 1,
            }
        }
        right.sort_unstable();
        changed
    }

    /// `x <= G` where `G = {left | right}` has not been interned.
    fn leq_unbuilt(&self, x: CanonicalForm, left: &[CanonicalForm], right: &[CanonicalForm]) -> bool {
        if right.iter().any(|&gr| self.leq(gr, x)) {
            return false;
        }
        !self.left_options(x).iter().any(|&xl| self.geq_unbuilt(xl, left, right))
    }

    /// `G <= y` where `G = {left | right}` has not been interned.
    fn geq_unbuilt(&self, y: CanonicalForm, left: &[CanonicalForm], right: &[CanonicalForm]) -> bool {
        if left.iter().any(|&gl| self.leq(y, gl)) {
            return false;
        }
        !self.right_options(y).iter().any(|&yr| self.leq_unbuilt(yr, left, right))
    }
}
