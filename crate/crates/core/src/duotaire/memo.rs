use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

use crate::board::{render_cells, BoardMode, Variant};
use crate::nim::NimValue;

use super::bits;

type Table = DashMap<u128, u32, FxBuildHasher>;

/// Grundy values keyed by variant, board mode and board word.
///
/// Fixed boards are stored literally and open boards by their peg extent;
/// the two never share entries. Values are a pure function of the key, so
/// concurrent writers racing on the same key write the same value.
#[derive(Default)]
pub struct MemoStore {
    tables: [Table; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MemoRecord {
    pub variant: Variant,
    pub mode: BoardMode,
    pub word: String,
    pub value: NimValue,
}

fn slot(variant: Variant, mode: BoardMode) -> usize {
    (variant == Variant::MultiHop) as usize * 2 + (mode == BoardMode::Open) as usize
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn get_key(&self, variant: Variant, mode: BoardMode, key: u128) -> Option<u32> {
        self.tables[slot(variant, mode)].get(&key).map(|v| *v)
    }

    pub(crate) fn put_key(&self, variant: Variant, mode: BoardMode, key: u128, value: u32) {
        self.tables[slot(variant, mode)].entry(key).or_insert(value);
    }

    /// Looks up a board word. Open words are canonicalized first.
    pub fn get(&self, variant: Variant, mode: BoardMode, word: &[bool]) -> Option<NimValue> {
        let key = match mode {
            BoardMode::Fixed => bits::fixed_key(word)?,
            BoardMode::Open => bits::open_key(word)?,
        };
        self.get_key(variant, mode, key).map(NimValue)
    }

    /// Stores a value unless the key is already present. Returns false for
    /// boards too wide to key.
    pub fn insert(&self, variant: Variant, mode: BoardMode, word: &[bool], value: NimValue) -> bool {
        let key = match mode {
            BoardMode::Fixed => bits::fixed_key(word),
            BoardMode::Open => bits::open_key(word),
        };
        match key {
            Some(k) => {
                self.put_key(variant, mode, k, value.0);
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.tables.iter().map(|t| t.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.tables.iter().for_each(|t| t.clear());
    }

    /// Every stored entry, sorted.
    pub fn records(&self) -> Vec<MemoRecord> {
        let mut out = Vec::with_capacity(self.len());
        for variant in [Variant::SingleHop, Variant::MultiHop] {
            for mode in [BoardMode::Fixed, BoardMode::Open] {
                for entry in self.tables[slot(variant, mode)].iter() {
                    out.push(MemoRecord {
                        variant,
                        mode,
                        word: render_cells(&bits::word_of(mode, *entry.key())),
                        value: NimValue(*entry.value()),
                    });
                }
            }
        }
        out.sort();
        out
    }
}
