//! Packed boards for the Grundy search.
//!
//! Bit `i` is cell `i`. A fixed board of length `L` is keyed as its bits
//! plus a sentinel bit at position `L`, so boards of different lengths never
//! collide. An open board is keyed by its peg extent shifted down to bit 0;
//! the empty open board is key 0.

use smallvec::SmallVec;

use crate::board::{BoardMode, Position, Variant};

/// Longest fixed board that fits a key.
pub const MAX_FIXED_LEN: usize = 127;
/// Widest open peg extent; four cells of headroom are needed for hops off
/// either end.
pub const MAX_OPEN_EXTENT: usize = 124;

pub type Children = SmallVec<[u128; 32]>;

fn mask(len: u32) -> u128 {
    if len >= 128 {
        !0
    } else {
        (1u128 << len) - 1
    }
}

fn pack(cells: &[bool]) -> u128 {
    cells.iter().enumerate().filter(|(_, &c)| c).fold(0u128, |b, (i, _)| b | 1 << i)
}

pub fn fixed_key(cells: &[bool]) -> Option<u128> {
    (cells.len() <= MAX_FIXED_LEN).then(|| pack(cells) | 1 << cells.len())
}

pub fn open_key(cells: &[bool]) -> Option<u128> {
    let first = cells.iter().position(|&c| c);
    let Some(first) = first else { return Some(0) };
    let last = cells.iter().rposition(|&c| c).unwrap();
    (last - first < MAX_OPEN_EXTENT).then(|| pack(&cells[first..=last]))
}

pub fn key_of(p: &Position) -> Option<u128> {
    match p.mode() {
        BoardMode::Fixed => fixed_key(p.cells()),
        BoardMode::Open => open_key(p.cells()),
    }
}

pub fn fixed_len(key: u128) -> u32 {
    127 - key.leading_zeros()
}

/// Decodes a key back to its board word.
pub fn word_of(mode: BoardMode, key: u128) -> Vec<bool> {
    let len = match mode {
        BoardMode::Fixed => fixed_len(key),
        BoardMode::Open => 128 - key.leading_zeros(),
    };
    (0..len).map(|i| key >> i & 1 == 1).collect()
}

/// Child keys of `key`, deduplicated.
pub fn children(variant: Variant, mode: BoardMode, key: u128, out: &mut Children) {
    out.clear();
    match mode {
        BoardMode::Fixed => {
            let len = fixed_len(key);
            let sentinel = 1u128 << len;
            let bits = key ^ sentinel;
            let start = out.len();
            moves_on(variant, bits, len, out);
            for c in &mut out[start..] {
                *c |= sentinel;
            }
        }
        BoardMode::Open => {
            if key == 0 {
                return;
            }
            let len = 128 - key.leading_zeros() + 4;
            moves_on(variant, key << 2, len, out);
            for c in out.iter_mut() {
                *c >>= c.trailing_zeros();
            }
        }
    }
    out.sort_unstable();
    out.dedup();
}

/// Results of every move on a plain bitboard of `len` cells.
fn moves_on(variant: Variant, bits: u128, len: u32, out: &mut Children) {
    let m = mask(len);
    match variant {
        Variant::SingleHop => {
            let right = bits & (bits >> 1) & (!bits >> 2) & (m >> 2);
            let left = !bits & (bits >> 1) & (bits >> 2) & m;
            let mut triples = right | left;
            while triples != 0 {
                let j = triples.trailing_zeros();
                out.push(bits ^ (0b111 << j));
                triples &= triples - 1;
            }
        }
        Variant::MultiHop => {
            let mut pegs = bits;
            while pegs != 0 {
                let at = pegs.trailing_zeros();
                chain(bits, at, len, out);
                pegs &= pegs - 1;
            }
        }
    }
}

fn chain(bits: u128, at: u32, len: u32, out: &mut Children) {
    let peg = |x: u32| bits >> x & 1 == 1;
    if at + 2 < len && peg(at + 1) && !peg(at + 2) {
        let next = bits ^ (0b111 << at);
        out.push(next);
        chain(next, at + 2, len, out);
    }
    if at >= 2 && peg(at - 1) && !peg(at - 2) {
        let next = bits ^ (0b111 << (at - 2));
        out.push(next);
        chain(next, at - 2, len, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_cells;
    use proptest::prelude::*;

    fn keyed(p: &Position) -> Vec<u128> {
        let mut v: Vec<u128> = p
            .options(Variant::SingleHop)
            .iter()
            .map(|(_, q)| key_of(q).unwrap())
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn keys_round_trip() {
        let w = parse_cells("0110100").unwrap();
        assert_eq!(word_of(BoardMode::Fixed, fixed_key(&w).unwrap()), w);
        assert_eq!(word_of(BoardMode::Open, open_key(&w).unwrap()), parse_cells("1101").unwrap());
        assert_eq!(open_key(&parse_cells("000").unwrap()), Some(0));
        assert!(word_of(BoardMode::Open, 0).is_empty());
    }

    #[test]
    fn single_hops_match_board_generator() {
        let p = Position::parse("0110", BoardMode::Fixed).unwrap();
        let mut out = Children::new();
        children(Variant::SingleHop, BoardMode::Fixed, key_of(&p).unwrap(), &mut out);
        assert_eq!(out.to_vec(), keyed(&p));
    }

    fn board_children(p: &Position, v: Variant) -> Vec<u128> {
        let mut v: Vec<u128> = p.options(v).iter().map(|(_, q)| key_of(q).unwrap()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    proptest! {
        #[test]
        fn generators_agree(cells in proptest::collection::vec(any::<bool>(), 1..14), open: bool, multi: bool) {
            let mode = if open { BoardMode::Open } else { BoardMode::Fixed };
            let variant = if multi { Variant::MultiHop } else { Variant::SingleHop };
            let p = Position::new(cells, mode);
            let mut out = Children::new();
            children(variant, mode, key_of(&p).unwrap(), &mut out);
            prop_assert_eq!(out.to_vec(), board_children(&p, variant));
        }
    }
}
