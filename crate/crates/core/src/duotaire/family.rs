//! Closed-form multihop values for simple word families, all on the open
//! line.

use std::fmt;

use thiserror::Error;

use crate::nim::NimValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `1^n`
    Ones(usize),
    /// `11(01)^n`
    ElevenZeroOne(usize),
    /// `111(01)^n`
    ElevenOneZeroOne(usize),
    /// `11(01)^n 1`
    ElevenZeroOneOne(usize),
    /// `11(01)^n 11`, the mirror image of `111(01)^n 1`
    ElevenZeroOneEleven(usize),
    /// `111(01)^n 11`
    ElevenOneZeroOneEleven(usize),
    /// `11011(01)^n`
    ElevenZeroElevenZeroOne(usize),
    /// `1011(01)^n 1`
    TenElevenZeroOneOne(usize),
    /// `(10)^m 11 (01)^n`
    TenBlock(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{family} is outside the tabulated range: {reason}")]
pub struct FamilyError {
    pub family: FamilyId,
    pub reason: &'static str,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::Ones(n) => write!(f, "1^{n}"),
            FamilyId::ElevenZeroOne(n) => write!(f, "11(01)^{n}"),
            FamilyId::ElevenOneZeroOne(n) => write!(f, "111(01)^{n}"),
            FamilyId::ElevenZeroOneOne(n) => write!(f, "11(01)^{n} 1"),
            FamilyId::ElevenZeroOneEleven(n) => write!(f, "11(01)^{n} 11"),
            FamilyId::ElevenOneZeroOneEleven(n) => write!(f, "111(01)^{n} 11"),
            FamilyId::ElevenZeroElevenZeroOne(n) => write!(f, "11011(01)^{n}"),
            FamilyId::TenElevenZeroOneOne(n) => write!(f, "1011(01)^{n} 1"),
            FamilyId::TenBlock(m, n) => write!(f, "(10)^{m} 11(01)^{n}"),
        }
    }
}

impl FamilyId {
    /// One representative of every family with parameters up to `max`.
    pub fn all_up_to(max: usize) -> Vec<FamilyId> {
        let mut out = Vec::new();
        for n in 0..=max {
            if n >= 1 {
                out.push(FamilyId::Ones(n));
            }
            out.push(FamilyId::ElevenZeroOne(n));
            out.push(FamilyId::ElevenOneZeroOne(n));
            out.push(FamilyId::ElevenZeroOneOne(n));
            if n >= 1 {
                out.push(FamilyId::ElevenZeroOneEleven(n));
                out.push(FamilyId::ElevenOneZeroOneEleven(n));
            }
            out.push(FamilyId::ElevenZeroElevenZeroOne(n));
            out.push(FamilyId::TenElevenZeroOneOne(n));
            for m in 0..=max {
                out.push(FamilyId::TenBlock(m, n));
            }
        }
        out
    }

    fn check(self) -> Result<(), FamilyError> {
        let bad = |reason| Err(FamilyError { family: self, reason });
        match self {
            FamilyId::Ones(0) => bad("n must be positive"),
            FamilyId::ElevenZeroOneEleven(0) => bad("n must be positive"),
            FamilyId::ElevenOneZeroOneEleven(0) => bad("n must be positive"),
            _ => Ok(()),
        }
    }

    pub fn word(self) -> Result<String, FamilyError> {
        self.check()?;
        let zo = |n: usize| "01".repeat(n);
        Ok(match self {
            FamilyId::Ones(n) => "1".repeat(n),
            FamilyId::ElevenZeroOne(n) => format!("11{}", zo(n)),
            FamilyId::ElevenOneZeroOne(n) => format!("111{}", zo(n)),
            FamilyId::ElevenZeroOneOne(n) => format!("11{}1", zo(n)),
            FamilyId::ElevenZeroOneEleven(n) => format!("11{}11", zo(n)),
            FamilyId::ElevenOneZeroOneEleven(n) => format!("111{}11", zo(n)),
            FamilyId::ElevenZeroElevenZeroOne(n) => format!("11011{}", zo(n)),
            FamilyId::TenElevenZeroOneOne(n) => format!("1011{}1", zo(n)),
            FamilyId::TenBlock(m, n) => format!("{}11{}", "10".repeat(m), zo(n)),
        })
    }

    /// Tabulated multihop value of the family's word on the open line.
    pub fn value(self) -> Result<NimValue, FamilyError> {
        self.check()?;
        let v = |x: usize| NimValue(x as u32);
        Ok(match self {
            FamilyId::Ones(n) => v(if n % 4 < 2 { 0 } else { 1 }),
            FamilyId::ElevenZeroOne(n) | FamilyId::ElevenOneZeroOne(n) => v(n + 1),
            FamilyId::ElevenZeroOneOne(n) => v(n ^ 1),
            FamilyId::ElevenZeroOneEleven(n) => match n {
                1 => v(3),
                2 => v(4),
                3 => v(2),
                _ => v(n + 2),
            },
            FamilyId::ElevenOneZeroOneEleven(_) => v(1),
            FamilyId::ElevenZeroElevenZeroOne(n) => v((n + 1) ^ 1),
            FamilyId::TenElevenZeroOneOne(n) => v(n + 2),
            FamilyId::TenBlock(m, n) => v(m.max(n) + 1),
        })
    }
}

pub fn family_word(f: FamilyId) -> Result<String, FamilyError> {
    f.word()
}

pub fn family_value(f: FamilyId) -> Result<NimValue, FamilyError> {
    f.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_examples() {
        assert_eq!(FamilyId::Ones(6).value(), Ok(NimValue(1)));
        assert_eq!(FamilyId::ElevenZeroOne(3).word().unwrap(), "11010101");
        assert_eq!(FamilyId::ElevenZeroOne(3).value(), Ok(NimValue(4)));
        assert_eq!(FamilyId::ElevenZeroOneEleven(3).word().unwrap(), "1101010111");
        assert_eq!(FamilyId::ElevenZeroOneEleven(3).value(), Ok(NimValue(2)));
        assert_eq!(FamilyId::TenBlock(2, 1).word().unwrap(), "10101101");
        assert_eq!(FamilyId::TenBlock(2, 1).value(), Ok(NimValue(3)));
    }

    #[test]
    fn two_spellings_of_one_family() {
        for n in 1..6 {
            let alt = format!("111{}1", "01".repeat(n));
            let word: String = FamilyId::ElevenZeroOneEleven(n).word().unwrap().chars().rev().collect();
            assert_eq!(word, alt);
        }
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(FamilyId::ElevenOneZeroOneEleven(0).value().is_err());
        assert!(FamilyId::ElevenZeroOneEleven(0).word().is_err());
        assert!(FamilyId::Ones(0).value().is_err());
    }
}
