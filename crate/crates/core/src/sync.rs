//! Shared, append-only containers used by the game store and the
//! transposition table.
//!
//! Every container here only ever grows and every insert is idempotent, so
//! concurrent workers may race on the same key and still agree on the result.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::hash::{BuildHasher, Hash};
use core::sync::atomic::{AtomicU32, Ordering};

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;
use spin::{Mutex, Once};

const FIRST_CHUNK: usize = 1 << 12;
const CHUNKS: usize = 32;

/// Append-only vector with stable addresses and lock-free reads.
///
/// Chunk `k` holds `FIRST_CHUNK << k` slots; a slot is written exactly once.
pub(crate) struct Arena<T> {
    chunks: [Once<Box<[Once<T>]>>; CHUNKS],
    len: AtomicU32,
}

impl<T> Arena<T> {
    pub(crate) fn new() -> Self {
        Self { chunks: [const { Once::new() }; CHUNKS], len: AtomicU32::new(0) }
    }

    fn locate(index: u32) -> (usize, usize) {
        let slot = index as usize / FIRST_CHUNK + 1;
        let chunk = (usize::BITS - 1 - slot.leading_zeros()) as usize;
        let offset = index as usize - FIRST_CHUNK * ((1 << chunk) - 1);
        (chunk, offset)
    }

    /// Reserves a fresh index and stores `value` there.
    pub(crate) fn push(&self, value: T) -> u32 {
        let index = self.len.fetch_add(1, Ordering::Relaxed);
        assert!(index < u32::MAX, "arena full");
        let (chunk, offset) = Self::locate(index);
        let slots = self.chunks[chunk].call_once(|| {
            (0..FIRST_CHUNK << chunk).map(|_| Once::new()).collect::<Vec<_>>().into_boxed_slice()
        });
        slots[offset].call_once(|| value);
        index
    }

    /// The value at `index`; panics if it has not been published yet.
    pub(crate) fn get(&self, index: u32) -> &T {
        let (chunk, offset) = Self::locate(index);
        self.chunks[chunk]
            .get()
            .and_then(|slots| slots[offset].get())
            .expect("arena index not yet initialised")
    }

    pub(crate) fn len(&self) -> usize {
        self.len.load(Ordering::Relaxed) as usize
    }
}

pub(crate) const SHARDS: usize = 64;

pub(crate) fn shard_of(hash: u64) -> usize {
    (hash >> 58) as usize % SHARDS
}

pub(crate) fn fx_hash<K: Hash + ?Sized>(key: &K) -> u64 {
    FxBuildHasher.hash_one(key)
}

/// A hash map split into independently locked shards.
pub(crate) struct ShardedMap<K, V> {
    shards: Box<[Mutex<HashMap<K, V, FxBuildHasher>>]>,
}

impl<K: Hash + Eq, V: Copy> ShardedMap<K, V> {
    pub(crate) fn new() -> Self {
        Self { shards: (0..SHARDS).map(|_| Mutex::new(HashMap::with_hasher(FxBuildHasher))).collect() }
    }

    fn shard(&self, key: &K) -> &Mutex<HashMap<K, V, FxBuildHasher>> {
        &self.shards[shard_of(fx_hash(key))]
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.shard(key).lock().get(key).copied()
    }

    /// Inserts unless present; returns the stored value either way.
    pub(crate) fn insert(&self, key: K, value: V) -> V {
        *self.shard(&key).lock().entry(key).or_insert(value)
    }

    pub(crate) fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arena_locates_across_chunks() {
        assert_eq!(Arena::<u8>::locate(0), (0, 0));
        assert_eq!(Arena::<u8>::locate(FIRST_CHUNK as u32 - 1), (0, FIRST_CHUNK - 1));
        assert_eq!(Arena::<u8>::locate(FIRST_CHUNK as u32), (1, 0));
        assert_eq!(Arena::<u8>::locate(3 * FIRST_CHUNK as u32), (2, 0));
    }

    #[test]
    fn arena_push_get() {
        let arena = Arena::new();
        for i in 0..3 * FIRST_CHUNK as u32 {
            assert_eq!(arena.push(i * 2), i);
        }
        assert_eq!(*arena.get(5000), 10000);
        assert_eq!(arena.len(), 3 * FIRST_CHUNK);
    }

    #[test]
    fn sharded_insert_is_first_wins() {
        let map = ShardedMap::new();
        assert_eq!(map.insert(7u64, 1u32), 1);
        assert_eq!(map.insert(7u64, 2u32), 1);
        assert_eq!(map.get(&7), Some(1));
        assert_eq!(map.get(&8), None);
        assert_eq!(map.len(), 1);
    }
}
