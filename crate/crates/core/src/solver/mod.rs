//! One-player solitaire: solvability, one-peg strategies, minimum-peg
//! reduction and counting.

mod brute;
mod count;
pub mod nfa;
pub mod regex;
mod segment;
mod strategy;

use std::sync::OnceLock;

use thiserror::Error;

use crate::board::{BoardMode, Position};

pub use brute::{brute_force_min_pegs, brute_force_solvable, BruteForce, DEFAULT_BRUTE_FORCE_BOUND};
pub use count::{count_solvable, enumerate_solvable};
pub use nfa::{build_solvable_nfa, Automaton};
pub use regex::RegexNode;
pub use segment::{min_pegs, shared_hole_bound, ReductionPlan};
pub use strategy::{classify_stage, solve_to_one, Stage, StageShape};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("not solvable")]
    NotSolvable,
    #[error("board has no pegs")]
    NoPegs,
    #[error("peg count must be at least 1, got {0}")]
    InvalidPegCount(usize),
    #[error("board length {len} exceeds the brute-force bound {bound}")]
    TooLong { len: usize, bound: usize },
}

pub(crate) fn solvable_automaton() -> &'static Automaton {
    static NFA: OnceLock<Automaton> = OnceLock::new();
    NFA.get_or_init(build_solvable_nfa)
}

/// Whether the board can be played down to a single peg.
///
/// Fixed boards are read literally. An open board has holes on both sides,
/// so it is tested with one extra hole at each end.
pub fn is_solvable(p: &Position) -> bool {
    let nfa = solvable_automaton();
    match p.mode() {
        BoardMode::Fixed => nfa.accepts(p.cells()),
        BoardMode::Open => {
            let mut padded = Vec::with_capacity(p.len() + 2);
            padded.push(false);
            padded.extend_from_slice(p.cells());
            padded.push(false);
            nfa.accepts(&padded)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(s: &str) -> Position {
        Position::parse(s, BoardMode::Fixed).unwrap()
    }

    #[test]
    fn solvability_examples() {
        assert!(is_solvable(&fixed("1011")));
        assert!(!is_solvable(&fixed("11")));
        assert!(is_solvable(&fixed("110")));
        assert!(!is_solvable(&fixed("111")));
        assert!(is_solvable(&Position::parse("11", BoardMode::Open).unwrap()));
    }
}
