//! Short partizan games in canonical form.
//!
//! Games live in a [`GameStore`], which hash-conses every canonical form so
//! that two games are equal exactly when their handles are equal. All
//! operations (`leq`, `add`, `neg`, ...) go through the store and are
//! memoised there.

mod canonical;
mod notation;
mod order;
mod outcome;
mod sum;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use hashbrown::HashTable;
use rustc_hash::FxHasher;
use spin::{Mutex, Once};

use crate::dyadic::Dyadic;
use crate::sync::{shard_of, Arena, ShardedMap, SHARDS};
use crate::thermography::Thermograph;

pub use notation::ParseError;
pub use outcome::{outcome, ExplicitGame, GameTree, Outcome};

/// Handle to an interned canonical form.
///
/// Handles are only meaningful together with the store that created them.
/// Within one store, equal handles mean equal games.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(u32);

impl CanonicalForm {
    pub const fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub(crate) struct Node {
    pub(crate) left: Box<[CanonicalForm]>,
    pub(crate) right: Box<[CanonicalForm]>,
    pub(crate) number: Option<Dyadic>,
    pub(crate) left_stop: Dyadic,
    pub(crate) right_stop: Dyadic,
    pub(crate) negative: Once<CanonicalForm>,
    pub(crate) thermograph: Once<Box<Thermograph>>,
    /// `(temperature, mast)` from the direct method.
    pub(crate) direct: Once<(Dyadic, Dyadic)>,
}

/// Intern table and memo caches for canonical forms.
///
/// The store is `Sync`: concurrent workers may share one store, and racing
/// insertions of the same node converge on a single handle.
pub struct GameStore {
    nodes: Arena<Node>,
    intern: Box<[Mutex<HashTable<u32>>]>,
    leq_memo: ShardedMap<u64, bool>,
    sum_memo: ShardedMap<u64, CanonicalForm>,
}

impl Default for GameStore {
    fn default() -> Self {
        Self::new()
    }
}

fn key_hash(left: &[CanonicalForm], right: &[CanonicalForm]) -> u64 {
    let mut h = FxHasher::default();
    left.len().hash(&mut h);
    left.hash(&mut h);
    right.hash(&mut h);
    h.finish()
}

fn pair_key(a: CanonicalForm, b: CanonicalForm) -> u64 {
    (u64::from(a.0) << 32) | u64::from(b.0)
}

impl GameStore {
    pub fn new() -> Self {
        let store = Self {
            nodes: Arena::new(),
            intern: (0..SHARDS).map(|_| Mutex::new(HashTable::new())).collect(),
            leq_memo: ShardedMap::new(),
            sum_memo: ShardedMap::new(),
        };
        let zero = store.intern_canonical(Vec::new(), Vec::new());
        debug_assert_eq!(zero.0, 0);
        store
    }

    pub(crate) fn node(&self, g: CanonicalForm) -> &Node {
        self.nodes.get(g.0)
    }

    pub fn left_options(&self, g: CanonicalForm) -> &[CanonicalForm] {
        &self.node(g).left
    }

    pub fn right_options(&self, g: CanonicalForm) -> &[CanonicalForm] {
        &self.node(g).right
    }

    /// Number of distinct canonical forms interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sizes of the `leq` and sum memo tables.
    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.leq_memo.len(), self.sum_memo.len())
    }

    /// The value if `g` is a number.
    pub fn as_number(&self, g: CanonicalForm) -> Option<Dyadic> {
        self.node(g).number
    }

    pub fn is_number(&self, g: CanonicalForm) -> bool {
        self.as_number(g).is_some()
    }

    pub fn left_stop(&self, g: CanonicalForm) -> Dyadic {
        self.node(g).left_stop
    }

    pub fn right_stop(&self, g: CanonicalForm) -> Dyadic {
        self.node(g).right_stop
    }

    pub fn zero(&self) -> CanonicalForm {
        CanonicalForm(0)
    }

    pub fn star(&self) -> CanonicalForm {
        let zero = self.zero();
        self.intern_canonical(alloc::vec![zero], alloc::vec![zero])
    }

    pub fn integer(&self, n: i64) -> CanonicalForm {
        let mut g = self.zero();
        for k in 0..n.unsigned_abs() {
            g = if n > 0 {
                self.intern_canonical(alloc::vec![g], Vec::new())
            } else {
                self.intern_canonical(Vec::new(), alloc::vec![g])
            };
            debug_assert_eq!(self.as_number(g), Some(Dyadic::integer((k as i64 + 1) * n.signum())));
        }
        g
    }

    /// The canonical form of a dyadic number: `{x - 2^-k | x + 2^-k}`.
    pub fn number(&self, x: Dyadic) -> CanonicalForm {
        if let Some(n) = x.to_integer() {
            return self.integer(n);
        }
        let step = Dyadic::new(1, x.exponent());
        let left = self.number(x - step);
        let right = self.number(x + step);
        self.intern_canonical(alloc::vec![left], alloc::vec![right])
    }

    /// `±g`, the switch `{g | -g}`.
    pub fn switch(&self, g: CanonicalForm) -> CanonicalForm {
        let minus = self.neg(g);
        self.construct(&[g], &[minus])
    }

    /// Interns a node whose option lists are already canonical (no dominated
    /// or reversible options). The lists are sorted here.
    pub(crate) fn intern_canonical(
        &self,
        mut left: Vec<CanonicalForm>,
        mut right: Vec<CanonicalForm>,
    ) -> CanonicalForm {
        left.sort_unstable();
        right.sort_unstable();
        let hash = key_hash(&left, &right);
        let mut table = self.intern[shard_of(hash)].lock();
        let matches = |&id: &u32| {
            let node = self.nodes.get(id);
            *node.left == *left && *node.right == *right
        };
        if let Some(&id) = table.find(hash, matches) {
            return CanonicalForm(id);
        }
        let node = self.make_node(left, right);
        let id = self.nodes.push(node);
        table.insert_unique(hash, id, |&id| {
            let node = self.nodes.get(id);
            key_hash(&node.left, &node.right)
        });
        CanonicalForm(id)
    }

    fn make_node(&self, left: Vec<CanonicalForm>, right: Vec<CanonicalForm>) -> Node {
        let number = self.classify_number(&left, &right);
        let (left_stop, right_stop) = match number {
            Some(x) => (x, x),
            None => {
                let ls = left.iter().map(|&g| self.right_stop(g)).max();
                let rs = right.iter().map(|&g| self.left_stop(g)).min();
                match (ls, rs) {
                    (Some(ls), Some(rs)) => (ls, rs),
                    _ => panic!("one-sided canonical form that is not an integer"),
                }
            }
        };
        Node {
            left: left.into_boxed_slice(),
            right: right.into_boxed_slice(),
            number,
            left_stop,
            right_stop,
            negative: Once::new(),
            thermograph: Once::new(),
            direct: Once::new(),
        }
    }

    /// Recognises canonical numbers: `{|}`, `{n|}`, `{|-n}` and `{a|b}` with
    /// numbers `a < b`.
    fn classify_number(&self, left: &[CanonicalForm], right: &[CanonicalForm]) -> Option<Dyadic> {
        match (left, right) {
            ([], []) => Some(Dyadic::ZERO),
            ([l], []) => {
                let n = self.as_number(*l)?.to_integer()?;
                (n >= 0).then(|| Dyadic::integer(n + 1))
            }
            ([], [r]) => {
                let n = self.as_number(*r)?.to_integer()?;
                (n <= 0).then(|| Dyadic::integer(n - 1))
            }
            ([l], [r]) => {
                let a = self.as_number(*l)?;
                let b = self.as_number(*r)?;
                (a < b).then(|| Dyadic::simplest_between(a, b))
            }
            _ => None,
        }
    }

    /// Number of nodes reachable from `g`, counting `g` itself.
    pub fn follower_count(&self, g: CanonicalForm) -> usize {
        let mut seen = hashbrown::HashSet::<CanonicalForm, rustc_hash::FxBuildHasher>::default();
        let mut stack = alloc::vec![g];
        while let Some(x) = stack.pop() {
            if seen.insert(x) {
                stack.extend_from_slice(self.left_options(x));
                stack.extend_from_slice(self.right_options(x));
            }
        }
        seen.len()
    }

    /// Longest play from `g`.
    pub fn birthday(&self, g: CanonicalForm) -> u32 {
        fn go(
            store: &GameStore,
            g: CanonicalForm,
            memo: &mut hashbrown::HashMap<CanonicalForm, u32, rustc_hash::FxBuildHasher>,
        ) -> u32 {
            if let Some(&b) = memo.get(&g) {
                return b;
            }
            let node = store.node(g);
            let b =
                node.left.iter().chain(node.right.iter()).map(|&x| go(store, x, memo) + 1).max().unwrap_or(0);
            memo.insert(g, b);
            b
        }
        go(self, g, &mut Default::default())
    }

    pub(crate) fn leq_memo_get(&self, g: CanonicalForm, h: CanonicalForm) -> Option<bool> {
        self.leq_memo.get(&pair_key(g, h))
    }

    pub(crate) fn leq_memo_put(&self, g: CanonicalForm, h: CanonicalForm, value: bool) {
        self.leq_memo.insert(pair_key(g, h), value);
    }

    pub(crate) fn sum_memo_get(&self, g: CanonicalForm, h: CanonicalForm) -> Option<CanonicalForm> {
        self.sum_memo.get(&pair_key(g, h))
    }

    pub(crate) fn sum_memo_put(
        &self,
        g: CanonicalForm,
        h: CanonicalForm,
        value: CanonicalForm,
    ) -> CanonicalForm {
        self.sum_memo.insert(pair_key(g, h), value)
    }
}
