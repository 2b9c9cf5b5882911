//! Two-player Peg Duotaire: Grundy values, decomposition, closed forms and
//! searches.

mod bits;
mod crossings;
mod decompose;
mod engine;
mod family;
mod memo;
mod search;
mod witness;

use thiserror::Error;

use crate::board::{Move, Position, Variant};
use crate::nim::NimValue;

pub use bits::{MAX_FIXED_LEN, MAX_OPEN_EXTENT};
pub use crossings::boundary_crossings;
pub use decompose::decompose;
pub use engine::Engine;
pub use family::{family_value, family_word, FamilyError, FamilyId};
pub use memo::{MemoRecord, MemoStore};
pub use search::{distinguishing_classes, first_position_with_value, SearchOutcome, DEFAULT_SEARCH_LEN};
pub use witness::{
    ladder_word, padded_value, palindrome_p_check, palindrome_shape, probe_word, s_member, xor_witness,
    IndexingReport, PalindromeShape, ProbeResult,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("board of {len} cells is too wide for the engine")]
    TooWide { len: usize },
    #[error("no winning move")]
    NoWinningMove,
}

pub fn grundy(p: &Position, variant: Variant) -> Result<NimValue, EngineError> {
    Engine::shared().grundy(p, variant)
}

pub fn grundy_decomposed(p: &Position, variant: Variant) -> Result<NimValue, EngineError> {
    Engine::shared().grundy_decomposed(p, variant)
}

pub fn is_p_position(p: &Position, variant: Variant) -> Result<bool, EngineError> {
    Engine::shared().is_p_position(p, variant)
}

pub fn best_moves(p: &Position, variant: Variant) -> Result<Vec<Move>, EngineError> {
    Engine::shared().best_moves(p, variant)
}

pub fn pn_language_probe(i: usize, j: usize, k: usize, variant: Variant) -> Result<ProbeResult, EngineError> {
    Engine::shared().pn_language_probe(i, j, k, variant)
}
