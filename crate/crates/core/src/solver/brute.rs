//! Exhaustive search over hop sequences on small fixed boards.

use rustc_hash::FxHashSet;

use crate::board::Position;

use super::SolverError;

pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 16;

/// Depth-first search over every single-hop sequence, memoized on the
/// positions visited during one call.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    pub max_len: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { max_len: DEFAULT_BRUTE_FORCE_BOUND }
    }
}

impl BruteForce {
    fn bits(&self, p: &Position) -> Result<(u64, usize), SolverError> {
        let len = p.len();
        if len > self.max_len || len > 64 {
            return Err(SolverError::TooLong { len, bound: self.max_len.min(64) });
        }
        let bits = p.cells().iter().enumerate().filter(|(_, &c)| c).fold(0u64, |b, (i, _)| b | 1 << i);
        Ok((bits, len))
    }

    pub fn min_pegs(&self, p: &Position) -> Result<usize, SolverError> {
        let (bits, len) = self.bits(p)?;
        let mut seen = FxHashSet::default();
        let mut best = bits.count_ones();
        search(bits, len, &mut seen, &mut best, 0);
        Ok(best as usize)
    }

    pub fn solvable(&self, p: &Position) -> Result<bool, SolverError> {
        let (bits, len) = self.bits(p)?;
        let mut seen = FxHashSet::default();
        let mut best = bits.count_ones();
        search(bits, len, &mut seen, &mut best, 1);
        Ok(best == 1)
    }
}

/// Stops early once `best` reaches `floor`.
fn search(bits: u64, len: usize, seen: &mut FxHashSet<u64>, best: &mut u32, floor: u32) {
    if !seen.insert(bits) {
        return;
    }
    *best = (*best).min(bits.count_ones());
    if *best <= floor {
        return;
    }
    for i in 0..len.saturating_sub(2) {
        let triple = (bits >> i) & 0b111;
        // cells i, i+1, i+2 reading peg,peg,hole (0b011) or hole,peg,peg (0b110)
        if triple == 0b011 || triple == 0b110 {
            search(bits ^ (0b111 << i), len, seen, best, floor);
            if *best <= floor {
                return;
            }
        }
    }
}

pub fn brute_force_solvable(p: &Position) -> Result<bool, SolverError> {
    BruteForce::default().solvable(p)
}

pub fn brute_force_min_pegs(p: &Position) -> Result<usize, SolverError> {
    BruteForce::default().min_pegs(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::BoardMode;

    fn fixed(s: &str) -> Position {
        Position::parse(s, BoardMode::Fixed).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(brute_force_solvable(&fixed("110")), Ok(true));
        assert_eq!(brute_force_min_pegs(&fixed("110")), Ok(1));
        assert_eq!(brute_force_solvable(&fixed("101")), Ok(false));
        assert_eq!(brute_force_min_pegs(&fixed("101")), Ok(2));
        assert_eq!(brute_force_min_pegs(&fixed("111")), Ok(3));
        assert_eq!(brute_force_solvable(&fixed("111")), Ok(false));
        assert_eq!(brute_force_min_pegs(&fixed("0000")), Ok(0));
    }

    #[test]
    fn bound_is_enforced() {
        let long = fixed(&"1".repeat(17));
        assert_eq!(brute_force_min_pegs(&long), Err(SolverError::TooLong { len: 17, bound: 16 }));
        assert!(BruteForce { max_len: 20 }.min_pegs(&long).is_ok());
    }
}
