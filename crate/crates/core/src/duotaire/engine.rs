use std::sync::{Arc, OnceLock};

use crate::board::{BoardMode, Move, Position, Variant};
use crate::nim::NimValue;

use super::bits::{self, Children};
use super::decompose::decompose;
use super::memo::MemoStore;
use super::EngineError;

/// Sprague-Grundy evaluator backed by a shared [`MemoStore`].
///
/// Cloning an engine shares its memo.
#[derive(Clone, Default)]
pub struct Engine {
    memo: Arc<MemoStore>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_memo(memo: Arc<MemoStore>) -> Self {
        Engine { memo }
    }

    /// Process-wide engine used by the free functions in this module.
    pub fn shared() -> &'static Engine {
        static SHARED: OnceLock<Engine> = OnceLock::new();
        SHARED.get_or_init(Engine::new)
    }

    pub fn memo(&self) -> &Arc<MemoStore> {
        &self.memo
    }

    fn key(p: &Position) -> Result<u128, EngineError> {
        bits::key_of(p).ok_or(EngineError::TooWide { len: p.len() })
    }

    /// Mex of the option values. Open boards are played on the infinite
    /// line, fixed boards on the literal cells.
    pub fn grundy(&self, p: &Position, variant: Variant) -> Result<NimValue, EngineError> {
        let key = Self::key(p)?;
        Ok(NimValue(self.value(variant, p.mode(), key)))
    }

    pub(crate) fn value(&self, variant: Variant, mode: BoardMode, key: u128) -> u32 {
        if let Some(v) = self.memo.get_key(variant, mode, key) {
            return v;
        }
        let mut kids = Children::new();
        bits::children(variant, mode, key, &mut kids);
        let mut seen = 0u128;
        let mut big = Vec::new();
        for &child in &kids {
            let g = self.value(variant, mode, child);
            if g < 128 {
                seen |= 1 << g;
            } else {
                big.push(NimValue(g));
            }
        }
        let g = if big.is_empty() {
            (!seen).trailing_zeros()
        } else {
            let low = (0..128).filter(|&i| seen >> i & 1 == 1).map(NimValue);
            NimValue::mex(low.chain(big)).0
        };
        self.memo.put_key(variant, mode, key, g);
        g
    }

    pub fn is_p_position(&self, p: &Position, variant: Variant) -> Result<bool, EngineError> {
        Ok(self.grundy(p, variant)?.is_zero())
    }

    /// Every option with its resulting position and value.
    pub fn options(&self, p: &Position, variant: Variant) -> Result<Vec<(Move, Position, NimValue)>, EngineError> {
        Self::key(p)?;
        p.options(variant)
            .into_iter()
            .map(|(m, q)| {
                let g = self.grundy(&q, variant)?;
                Ok((m, q, g))
            })
            .collect()
    }

    /// Moves to a zero position.
    pub fn best_moves(&self, p: &Position, variant: Variant) -> Result<Vec<Move>, EngineError> {
        if self.grundy(p, variant)?.is_zero() {
            return Err(EngineError::NoWinningMove);
        }
        Ok(self
            .options(p, variant)?
            .into_iter()
            .filter(|(_, _, g)| g.is_zero())
            .map(|(m, _, _)| m)
            .collect())
    }

    /// Nim-sum of the values of the separated components.
    pub fn grundy_decomposed(&self, p: &Position, variant: Variant) -> Result<NimValue, EngineError> {
        decompose(p).iter().map(|c| self.grundy(c, variant)).sum()
    }
}
