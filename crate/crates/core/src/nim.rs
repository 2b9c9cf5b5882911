use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use serde::{Deserialize, Serialize};

/// A Grundy value. Addition of games is bitwise exclusive or.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NimValue(pub u32);

impl NimValue {
    pub const ZERO: NimValue = NimValue(0);

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Minimum excluded value of `values`.
    pub fn mex<I: IntoIterator<Item = NimValue>>(values: I) -> NimValue {
        let mut low = 0u128;
        let mut high = Vec::new();
        for NimValue(v) in values {
            if v < 128 {
                low |= 1 << v;
            } else {
                high.push(v);
            }
        }
        let m = (!low).trailing_zeros();
        if m < 128 {
            return NimValue(m);
        }
        high.sort_unstable();
        high.dedup();
        let mut m = 128;
        for v in high {
            if v != m {
                break;
            }
            m += 1;
        }
        NimValue(m)
    }
}

pub fn nim_sum(a: NimValue, b: NimValue) -> NimValue {
    a ^ b
}

impl BitXor for NimValue {
    type Output = NimValue;

    fn bitxor(self, rhs: NimValue) -> NimValue {
        NimValue(self.0 ^ rhs.0)
    }
}

impl BitXorAssign for NimValue {
    fn bitxor_assign(&mut self, rhs: NimValue) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for NimValue {
    fn sum<I: Iterator<Item = NimValue>>(iter: I) -> NimValue {
        iter.fold(NimValue::ZERO, BitXor::bitxor)
    }
}

impl From<u32> for NimValue {
    fn from(v: u32) -> Self {
        NimValue(v)
    }
}

impl fmt::Display for NimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nim_sum_examples() {
        assert_eq!(nim_sum(NimValue(4), NimValue(7)), NimValue(3));
        assert_eq!(nim_sum(NimValue(9), NimValue::ZERO), NimValue(9));
        assert_eq!(nim_sum(NimValue(9), NimValue(9)), NimValue::ZERO);
    }

    #[test]
    fn mex_examples() {
        assert_eq!(NimValue::mex([]), NimValue(0));
        assert_eq!(NimValue::mex([0, 0, 1, 3].map(NimValue)), NimValue(2));
        assert_eq!(NimValue::mex((0..200).map(NimValue)), NimValue(200));
        assert_eq!(NimValue::mex((0..130).filter(|&v| v != 129).map(NimValue)), NimValue(129));
    }

    proptest! {
        #[test]
        fn nim_sum_is_abelian_and_self_inverse(a: u32, b: u32, c: u32) {
            let (a, b, c) = (NimValue(a), NimValue(b), NimValue(c));
            prop_assert_eq!(a ^ b, b ^ a);
            prop_assert_eq!((a ^ b) ^ c, a ^ (b ^ c));
            prop_assert_eq!(a ^ a, NimValue::ZERO);
        }

        #[test]
        fn mex_is_least_missing(values in proptest::collection::vec(0u32..20, 0..30)) {
            let m = NimValue::mex(values.iter().copied().map(NimValue)).0;
            prop_assert!(!values.contains(&m));
            prop_assert!((0..m).all(|v| values.contains(&v)));
        }
    }
}
