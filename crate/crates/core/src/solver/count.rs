//! Counting solvable configurations by peg count.

use std::collections::BTreeSet;

use crate::board::render_cells;

use super::regex::{core_language, RegexNode};
use super::SolverError;

/// Number of distinct solvable configurations with `n` pegs, where `011`
/// and `110` count once (as `11`).
pub fn count_solvable(n: usize) -> Result<u64, SolverError> {
    let n64 = n as u64;
    match n {
        0 => Err(SolverError::InvalidPegCount(n)),
        1 | 2 => Ok(1),
        3 => Ok(2),
        _ if n % 2 == 0 => Ok(n64 * n64 + 15 - 7 * n64),
        _ => Ok(n64 * n64 + 16 - 7 * n64),
    }
}

/// Every word of the core solvable language with exactly `n` pegs, trimmed
/// to its peg extent.
pub fn enumerate_solvable(n: usize) -> Result<BTreeSet<String>, SolverError> {
    if n == 0 {
        return Err(SolverError::InvalidPegCount(n));
    }
    let words = generate(&core_language(), n);
    Ok(words
        .into_iter()
        .filter(|w| w.iter().filter(|&&c| c).count() == n)
        .map(|w| {
            let first = w.iter().position(|&c| c).unwrap();
            let last = w.iter().rposition(|&c| c).unwrap();
            render_cells(&w[first..=last])
        })
        .collect())
}

fn pegs(w: &[bool]) -> usize {
    w.iter().filter(|&&c| c).count()
}

/// All words of `node` with at most `max_pegs` pegs. Every starred
/// sub-pattern of the language must add at least one peg per repetition.
fn generate(node: &RegexNode, max_pegs: usize) -> BTreeSet<Vec<bool>> {
    match node {
        RegexNode::Literal(b) => {
            if *b && max_pegs == 0 {
                BTreeSet::new()
            } else {
                BTreeSet::from([vec![*b]])
            }
        }
        RegexNode::Union(branches) => branches.iter().flat_map(|b| generate(b, max_pegs)).collect(),
        RegexNode::Concat(parts) => {
            let mut acc = BTreeSet::from([Vec::new()]);
            for part in parts {
                let words = generate(part, max_pegs);
                acc = join(&acc, &words, max_pegs);
            }
            acc
        }
        RegexNode::Star(inner) => repeat(&generate(inner, max_pegs), max_pegs, BTreeSet::from([Vec::new()])),
        RegexNode::Plus(inner) => {
            let once = generate(inner, max_pegs);
            repeat(&once, max_pegs, once.clone())
        }
    }
}

fn join(left: &BTreeSet<Vec<bool>>, right: &BTreeSet<Vec<bool>>, max_pegs: usize) -> BTreeSet<Vec<bool>> {
    let mut out = BTreeSet::new();
    for l in left {
        for r in right {
            if pegs(l) + pegs(r) <= max_pegs {
                let mut w = l.clone();
                w.extend_from_slice(r);
                out.insert(w);
            }
        }
    }
    out
}

fn repeat(unit: &BTreeSet<Vec<bool>>, max_pegs: usize, seed: BTreeSet<Vec<bool>>) -> BTreeSet<Vec<bool>> {
    assert!(unit.iter().all(|w| pegs(w) > 0), "repetition without pegs does not terminate");
    let mut all = seed.clone();
    let mut frontier = seed;
    while !frontier.is_empty() {
        let next: BTreeSet<Vec<bool>> = join(&frontier, unit, max_pegs).difference(&all).cloned().collect();
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        assert_eq!(count_solvable(3), Ok(2));
        assert_eq!(count_solvable(4), Ok(3));
        assert_eq!(count_solvable(7), Ok(16));
        assert_eq!(count_solvable(0), Err(SolverError::InvalidPegCount(0)));
    }

    #[test]
    fn enumerate_examples() {
        let set = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(enumerate_solvable(1).unwrap(), set(&["1"]));
        assert_eq!(enumerate_solvable(2).unwrap(), set(&["11"]));
        assert_eq!(enumerate_solvable(3).unwrap(), set(&["1011", "1101"]));
        assert_eq!(enumerate_solvable(4).unwrap(), set(&["101011", "110011", "110101"]));
    }
}
