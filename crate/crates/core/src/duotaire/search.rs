//! Computer searches: first positions of each value and a lower bound on
//! the number of suffix-equivalence classes of the P-positions.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::board::{BoardMode, Variant};
use crate::nim::NimValue;

use super::bits;
use super::Engine;

/// Default longest word examined by the first-position search.
pub const DEFAULT_SEARCH_LEN: usize = 19;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(String),
    NotFound { max_len: usize },
}

/// Number of peg extents of length `len`: words starting and ending with
/// a peg.
fn extent_count(len: usize) -> u64 {
    if len <= 2 {
        1
    } else {
        1 << (len - 2)
    }
}

/// The `index`-th peg extent of length `len` in lexicographic order.
fn extent_word(len: usize, index: u64) -> Vec<bool> {
    if len == 1 {
        return vec![true];
    }
    let inner = len - 2;
    let mut w = vec![true];
    w.extend((0..inner).map(|i| index >> (inner - 1 - i) & 1 == 1));
    w.push(true);
    w
}

/// Key of the fixed board `0 w 0`.
fn padded_key(len: usize, index: u64) -> u128 {
    let w = extent_word(len, index);
    let bits = w.iter().enumerate().filter(|(_, &c)| c).fold(0u128, |b, (i, _)| b | 1 << (i + 1));
    bits | 1 << (len + 2)
}

fn word_string(len: usize, index: u64) -> String {
    crate::board::render_cells(&extent_word(len, index))
}

impl Engine {
    /// The first peg extent `w`, shortest first and then lexicographically,
    /// whose fixed board `0w0` has value `g`.
    pub fn first_position_with_value(&self, g: NimValue, variant: Variant, max_len: usize) -> SearchOutcome {
        for len in 1..=max_len.min(bits::MAX_FIXED_LEN - 2) {
            let hit = (0..extent_count(len))
                .into_par_iter()
                .find_first(|&i| self.value(variant, BoardMode::Fixed, padded_key(len, i)) == g.0);
            if let Some(i) = hit {
                return SearchOutcome::Found(word_string(len, i));
            }
        }
        SearchOutcome::NotFound { max_len }
    }

    /// First positions for every value `0..=max_g` found in a single sweep.
    pub fn first_positions(&self, max_g: u32, variant: Variant, max_len: usize) -> Vec<SearchOutcome> {
        let mut found: Vec<Option<String>> = vec![None; max_g as usize + 1];
        for len in 1..=max_len.min(bits::MAX_FIXED_LEN - 2) {
            if found.iter().all(Option::is_some) {
                break;
            }
            let values: Vec<u32> = (0..extent_count(len))
                .into_par_iter()
                .map(|i| self.value(variant, BoardMode::Fixed, padded_key(len, i)))
                .collect();
            for (i, &g) in values.iter().enumerate() {
                if let Some(slot) = found.get_mut(g as usize) {
                    if slot.is_none() {
                        *slot = Some(word_string(len, i as u64));
                    }
                }
            }
        }
        found
            .into_iter()
            .map(|w| w.map_or(SearchOutcome::NotFound { max_len }, SearchOutcome::Found))
            .collect()
    }

    /// Number of distinct P-membership patterns `w -> [u w is a P-position]`
    /// over prefixes `u` and suffixes `w` up to the given lengths, played
    /// on fixed boards. Prefixes with different patterns are inequivalent,
    /// so this bounds the class count from below.
    pub fn distinguishing_classes(&self, max_prefix_len: usize, max_suffix_len: usize, variant: Variant) -> usize {
        let suffixes = all_words(max_suffix_len);
        let prefixes = all_words(max_prefix_len);
        let patterns: HashSet<Vec<u64>> = prefixes
            .par_iter()
            .map(|u| {
                let mut pattern = vec![0u64; suffixes.len().div_ceil(64)];
                for (j, w) in suffixes.iter().enumerate() {
                    let mut board = u.clone();
                    board.extend_from_slice(w);
                    let key = bits::fixed_key(&board).expect("census boards are short");
                    if self.value(variant, BoardMode::Fixed, key) == 0 {
                        pattern[j / 64] |= 1 << (j % 64);
                    }
                }
                pattern
            })
            .collect();
        patterns.len()
    }
}

/// Every word of length `0..=max_len`.
fn all_words(max_len: usize) -> Vec<Vec<bool>> {
    let mut out = vec![Vec::new()];
    for len in 1..=max_len {
        for i in 0..1u64 << len {
            out.push((0..len).map(|b| i >> (len - 1 - b) & 1 == 1).collect());
        }
    }
    out
}

pub fn first_position_with_value(g: NimValue, variant: Variant) -> SearchOutcome {
    Engine::shared().first_position_with_value(g, variant, DEFAULT_SEARCH_LEN)
}

pub fn distinguishing_classes(max_prefix_len: usize, max_suffix_len: usize, variant: Variant) -> usize {
    Engine::shared().distinguishing_classes(max_prefix_len, max_suffix_len, variant)
}
