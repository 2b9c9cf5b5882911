//! Splitting a board at gaps no move can cross.
//!
//! Any board `x 0(01)^k 00 y` plays as the sum of `x0` and `0y`: a hop into
//! the gap only leaves a wider gap of the same shape.

use crate::board::{BoardMode, Position};

/// Length of the separator `0(01)^k00` starting at `at`, if any. The match
/// is unique: after the longest run of `01` pairs the next two cells are
/// either `00` or nothing matches.
fn separator_at(cells: &[bool], at: usize) -> Option<usize> {
    if cells.get(at) != Some(&false) {
        return None;
    }
    let mut i = at + 1;
    while cells.get(i) == Some(&false) && cells.get(i + 1) == Some(&true) {
        i += 2;
    }
    (cells.get(i) == Some(&false) && cells.get(i + 1) == Some(&false)).then_some(i + 2 - at)
}

/// Components of `p`, scanning left to right for separators. Components
/// without pegs are dropped, so an empty result means value zero.
///
/// Open boards are first laid out as fixed boards with as many holes on
/// each side as they have pegs, which no play can exhaust.
pub fn decompose(p: &Position) -> Vec<Position> {
    let mut rest: Vec<bool> = match p.mode() {
        BoardMode::Fixed => p.cells().to_vec(),
        BoardMode::Open => {
            let pad = p.peg_count();
            let mut c = vec![false; pad];
            c.extend_from_slice(p.cells());
            c.extend(std::iter::repeat(false).take(pad));
            c
        }
    };
    let mut parts = Vec::new();
    let mut at = 0;
    while at < rest.len() {
        match separator_at(&rest, at) {
            Some(len) => {
                let mut left = rest[..at].to_vec();
                left.push(false);
                if left.iter().any(|&c| c) {
                    parts.push(Position::fixed(left));
                }
                let mut right = vec![false];
                right.extend_from_slice(&rest[at + len..]);
                rest = right;
                at = 0;
            }
            None => at += 1,
        }
    }
    if rest.iter().any(|&c| c) {
        parts.push(Position::fixed(rest));
    }
    parts
}
