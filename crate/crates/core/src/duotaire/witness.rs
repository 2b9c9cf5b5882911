//! Checkable consequences of the non-regularity argument, and the
//! palindrome P-position shapes.

use crate::board::{parse_cells, BoardMode, Position, Variant};
use crate::nim::NimValue;

use super::{Engine, EngineError};

/// True when `n` has no two adjacent ones in binary.
pub fn s_member(n: u64) -> bool {
    n & (n >> 1) == 0
}

/// True when `n ^ 2n ^ 3n == 0`.
pub fn xor_witness(n: u64) -> bool {
    let n = n as u128;
    n ^ (2 * n) ^ (3 * n) == 0
}

/// The fixed board `011(01)^n 0`.
pub fn ladder_word(n: usize) -> String {
    format!("011{}0", "01".repeat(n))
}

/// The fixed board `011(01)^i 000 11(01)^j 000 11(01)^k 0`.
pub fn probe_word(i: usize, j: usize, k: usize) -> String {
    let z = |n: usize| "01".repeat(n);
    format!("011{}00011{}00011{}0", z(i), z(j), z(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeResult {
    pub value: NimValue,
    pub is_p: bool,
    /// Values of the three ladders `011(01)^n 0` for `n = i, j, k`.
    pub ladders: [NimValue; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexingReport {
    /// Probed triples that are P-positions.
    pub p_triples: Vec<(usize, usize, usize)>,
    /// P exactly when `i ^ j ^ k == 0`.
    pub raw_xor_matches: bool,
    /// P exactly when `(i+1) ^ (j+1) ^ (k+1) == 0`.
    pub shifted_xor_matches: bool,
}

impl Engine {
    pub fn ladder_value(&self, n: usize, variant: Variant) -> Result<NimValue, EngineError> {
        self.grundy(&fixed(&ladder_word(n)), variant)
    }

    /// Value of the three-ladder board, computed through its separated
    /// components.
    pub fn pn_language_probe(&self, i: usize, j: usize, k: usize, variant: Variant) -> Result<ProbeResult, EngineError> {
        let value = self.grundy_decomposed(&fixed(&probe_word(i, j, k)), variant)?;
        let ladders = [self.ladder_value(i, variant)?, self.ladder_value(j, variant)?, self.ladder_value(k, variant)?];
        Ok(ProbeResult { value, is_p: value.is_zero(), ladders })
    }

    /// Probes every triple up to `max` and compares both readings of the
    /// XOR condition.
    pub fn resolve_xor_indexing(&self, max: usize, variant: Variant) -> Result<IndexingReport, EngineError> {
        let mut p_triples = Vec::new();
        let mut raw = true;
        let mut shifted = true;
        for i in 0..=max {
            for j in 0..=max {
                for k in 0..=max {
                    let is_p = self.pn_language_probe(i, j, k, variant)?.is_p;
                    if is_p {
                        p_triples.push((i, j, k));
                    }
                    raw &= is_p == (i ^ j ^ k == 0);
                    shifted &= is_p == ((i + 1) ^ (j + 1) ^ (k + 1) == 0);
                }
            }
        }
        Ok(IndexingReport { p_triples, raw_xor_matches: raw, shifted_xor_matches: shifted })
    }
}

fn fixed(word: &str) -> Position {
    Position::fixed(parse_cells(word).expect("generated words are binary"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PalindromeShape {
    /// `w 010010 w^R`
    Gap010010,
    /// `w 01100110 w^R`
    Gap01100110,
    /// `w 00(10)^k 11100111 (01)^k 00 w^R`
    Ladder(usize),
}

/// Which multihop P-position palindrome shape `word` has, if any.
pub fn palindrome_shape(word: &[bool]) -> Option<PalindromeShape> {
    let n = word.len();
    if n % 2 != 0 || !word.iter().eq(word.iter().rev()) {
        return None;
    }
    let centred = |core: &str| {
        let core = parse_cells(core).unwrap();
        core.len() <= n && word[(n - core.len()) / 2..(n + core.len()) / 2] == core[..]
    };
    if centred("010010") {
        return Some(PalindromeShape::Gap010010);
    }
    if centred("01100110") {
        return Some(PalindromeShape::Gap01100110);
    }
    (0..)
        .map(|k| (k, format!("00{}11100111{}00", "10".repeat(k), "01".repeat(k))))
        .take_while(|(_, core)| core.len() <= n)
        .find(|(_, core)| centred(core))
        .map(|(k, _)| PalindromeShape::Ladder(k))
}

pub fn palindrome_p_check(word: &[bool]) -> bool {
    palindrome_shape(word).is_some()
}

/// Multihop value of `word` on the fixed board `0 word 0`.
pub fn padded_value(engine: &Engine, word: &str, variant: Variant) -> Result<NimValue, EngineError> {
    let p = Position::parse(&format!("0{word}0"), BoardMode::Fixed).expect("binary word");
    engine.grundy(&p, variant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_examples() {
        assert!(s_member(2) && xor_witness(2));
        assert!(!s_member(3) && !xor_witness(3));
        assert!(s_member(5) && xor_witness(5));
        assert!(s_member(0) && xor_witness(0));
    }

    #[test]
    fn ladder_values() {
        let e = Engine::new();
        assert_eq!(e.ladder_value(2, Variant::MultiHop), Ok(NimValue(3)));
        let r = e.pn_language_probe(0, 0, 0, Variant::MultiHop).unwrap();
        assert_eq!(r.value, NimValue(1));
        assert!(!r.is_p);
        assert!(e.pn_language_probe(0, 1, 2, Variant::MultiHop).unwrap().is_p);
    }

    #[test]
    fn probe_matches_direct_evaluation() {
        let e = Engine::new();
        for (i, j, k) in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (0, 1, 2)] {
            let direct = e.grundy(&fixed(&probe_word(i, j, k)), Variant::MultiHop).unwrap();
            assert_eq!(direct, e.pn_language_probe(i, j, k, Variant::MultiHop).unwrap().value);
        }
    }

    #[test]
    fn palindrome_examples() {
        let e = Engine::new();
        let w = parse_cells("1101001011").unwrap();
        assert_eq!(palindrome_shape(&w), Some(PalindromeShape::Gap010010));
        assert_eq!(padded_value(&e, "1101001011", Variant::MultiHop), Ok(NimValue(0)));

        let w = parse_cells("11011100111011").unwrap();
        assert!(!palindrome_p_check(&w));
        assert_eq!(padded_value(&e, "11011100111011", Variant::MultiHop), Ok(NimValue(1)));

        assert_eq!(padded_value(&e, "1011001101", Variant::SingleHop), Ok(NimValue(1)));
        let ladder = parse_cells("11001011100111010011").unwrap();
        assert_eq!(palindrome_shape(&ladder), Some(PalindromeShape::Ladder(1)));
        assert!(!palindrome_p_check(&parse_cells("10010").unwrap()));
    }
}
