//! Linear-time reduction of a solvable board to a single peg.
//!
//! Every solvable word with three or more pegs is built backwards from a
//! single peg through a short sequence of shapes:
//!
//! 1. `10(10)^b 11`
//! 2. `11(01)^a 00 (10)^b 11`
//! 3. `11(01)^a (11)^c 00 (10)^b 11`
//! 4. `11(01)^a (11)^c 01`
//! 5. `11(01)^a (11)^c 1011 (10)^b 11`
//!
//! or the mirror image of one of them. Classifying the peg extent into one
//! of these shapes fixes the whole derivation, so playing it forward costs
//! one hop per removed peg.

use crate::board::{BoardMode, Move, Position};

use super::SolverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    /// A lone peg.
    SinglePeg,
    /// `11`, which needs a hole next to it on the board.
    Pair,
    One { b: usize },
    Two { a: usize, b: usize },
    Three { a: usize, c: usize, b: usize },
    Four { a: usize, c: usize },
    Five { a: usize, c: usize, b: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StageShape {
    pub stage: Stage,
    /// The word is the mirror image of the stage's canonical shape.
    pub mirrored: bool,
}

impl StageShape {
    fn plain(stage: Stage) -> Self {
        StageShape { stage, mirrored: false }
    }

    fn mirror(stage: Stage) -> Self {
        StageShape { stage, mirrored: true }
    }
}

type Pair = [bool; 2];
const P11: Pair = [true, true];
const P10: Pair = [true, false];
const P01: Pair = [false, true];
const P00: Pair = [false, false];

/// Classifies a peg-extent word (first and last cells are pegs).
pub fn classify_stage(word: &[bool]) -> Option<StageShape> {
    match word {
        [true] => return Some(StageShape::plain(Stage::SinglePeg)),
        [true, true] => return Some(StageShape::plain(Stage::Pair)),
        _ => {}
    }
    if word.len() < 4 || word.len() % 2 != 0 {
        return None;
    }
    let pairs: Vec<Pair> = word.chunks_exact(2).map(|c| [c[0], c[1]]).collect();
    let first = pairs[0];
    let last = *pairs.last().unwrap();
    match (first, last) {
        (P10, P11) => {
            let (c, b) = parse_leading_tail(&pairs[1..])?;
            Some(if c == 0 {
                StageShape::plain(Stage::One { b })
            } else {
                StageShape::mirror(Stage::Four { a: b, c })
            })
        }
        (P11, P01) => {
            let reversed: Vec<Pair> = pairs.iter().rev().map(|p| [p[1], p[0]]).collect();
            let (c, a) = parse_leading_tail(&reversed[1..])?;
            Some(if c == 0 {
                StageShape::mirror(Stage::One { b: a })
            } else {
                StageShape::plain(Stage::Four { a, c })
            })
        }
        (P11, P11) => classify_gap(&pairs[1..pairs.len() - 1]),
        _ => None,
    }
}

/// Parses `(11)^c (10)^b 11`, returning `(c, b)`.
fn parse_leading_tail(pairs: &[Pair]) -> Option<(usize, usize)> {
    let (last, body) = pairs.split_last()?;
    if *last != P11 {
        return None;
    }
    let c = body.iter().take_while(|&&p| p == P11).count();
    let rest = &body[c..];
    rest.iter().all(|&p| p == P10).then_some((c, rest.len()))
}

/// Parses the middle of `11 (01)^a X (10)^b 11`.
fn classify_gap(mid: &[Pair]) -> Option<StageShape> {
    let a = mid.iter().take_while(|&&p| p == P01).count();
    let rest = &mid[a..];
    let b = rest.iter().rev().take_while(|&&p| p == P10).count();
    let x = &rest[..rest.len() - b];
    let elevens = |s: &[Pair]| s.iter().all(|&p| p == P11);
    match x {
        [P00] => Some(StageShape::plain(Stage::Two { a, b })),
        [init @ .., P00] if !init.is_empty() && elevens(init) => {
            Some(StageShape::plain(Stage::Three { a, c: init.len(), b }))
        }
        [P00, tail @ ..] if !tail.is_empty() && elevens(tail) => {
            Some(StageShape::mirror(Stage::Three { a: b, c: tail.len(), b: a }))
        }
        [init @ .., P10, P11] if elevens(init) => Some(StageShape::plain(Stage::Five { a, c: init.len(), b })),
        [P11, P01, tail @ ..] if elevens(tail) => {
            Some(StageShape::mirror(Stage::Five { a: b, c: tail.len(), b: a }))
        }
        _ => None,
    }
}

/// Hop recorder over a word in local coordinates.
struct Replay {
    cells: Vec<bool>,
    hops: Vec<(usize, usize)>,
}

impl Replay {
    fn hop(&mut self, from: usize, to: usize) {
        let over = (from + to) / 2;
        debug_assert!(self.cells[from] && self.cells[over] && !self.cells[to], "illegal hop {from}>{to}");
        self.cells[from] = false;
        self.cells[over] = false;
        self.cells[to] = true;
        self.hops.push((from, to));
    }

    fn one(&mut self, at: usize, b: usize) {
        for j in (1..=b).rev() {
            self.hop(at + 2 * j + 3, at + 2 * j + 1);
        }
        self.hop(at + 3, at + 1);
        self.hop(at, at + 2);
    }

    fn two(&mut self, a: usize, b: usize) {
        for j in 0..=a {
            self.hop(2 * j, 2 * j + 2);
        }
        self.one(2 * a + 2, b);
    }

    fn three(&mut self, a: usize, c: usize, b: usize) {
        let gap = 2 + 2 * a + 2 * c;
        for i in 0..c {
            let q = gap - 2 - 2 * i;
            self.hop(q, q + 2);
        }
        self.two(a, b + c);
    }

    fn four(&mut self, a: usize, c: usize) {
        let q = 2 * a + 2 * c;
        self.hop(q, q + 2);
        self.three(a, c - 1, 0);
    }

    fn five(&mut self, a: usize, c: usize, b: usize) {
        let r = 2 + 2 * a + 2 * c;
        self.hop(r + 3, r + 1);
        self.three(a, c + 1, b);
    }
}

/// Local hop list reducing `word` (a peg extent of at least three pegs,
/// or a single peg) to one peg.
fn reduce_extent(word: &[bool], shape: StageShape) -> Vec<(usize, usize)> {
    let local: Vec<bool> = if shape.mirrored { word.iter().rev().copied().collect() } else { word.to_vec() };
    let mut r = Replay { cells: local, hops: Vec::new() };
    match shape.stage {
        Stage::SinglePeg => {}
        Stage::Pair => unreachable!("pairs are handled with board context"),
        Stage::One { b } => r.one(0, b),
        Stage::Two { a, b } => r.two(a, b),
        Stage::Three { a, c, b } => r.three(a, c, b),
        Stage::Four { a, c } => r.four(a, c),
        Stage::Five { a, c, b } => r.five(a, c, b),
    }
    debug_assert_eq!(r.cells.iter().filter(|&&c| c).count(), 1);
    if shape.mirrored {
        let last = word.len() - 1;
        r.hops.iter().map(|&(f, t)| (last - f, last - t)).collect()
    } else {
        r.hops
    }
}

/// Single-hop moves reducing `p` to exactly one peg.
///
/// Fixed boards must lie in the solvable language; open boards may also
/// use the surrounding holes, which only matters for `11`.
pub fn solve_to_one(p: &Position) -> Result<Vec<Move>, SolverError> {
    let first = p.cells().iter().position(|&c| c).ok_or(SolverError::NoPegs)?;
    let last = p.cells().iter().rposition(|&c| c).unwrap();
    let extent = &p.cells()[first..=last];
    let shape = classify_stage(extent).ok_or(SolverError::NotSolvable)?;
    let base = p.origin() + first as i64;
    if shape.stage == Stage::Pair {
        let room_left = p.mode() == BoardMode::Open || first > 0;
        let room_right = p.mode() == BoardMode::Open || last + 1 < p.len();
        return if room_left {
            Ok(vec![Move::single(base + 1, base - 1)])
        } else if room_right {
            Ok(vec![Move::single(base, base + 2)])
        } else {
            Err(SolverError::NotSolvable)
        };
    }
    Ok(reduce_extent(extent, shape)
        .into_iter()
        .map(|(f, t)| Move::single(base + f as i64, base + t as i64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_cells;

    fn shape(w: &str) -> Option<StageShape> {
        classify_stage(&parse_cells(w).unwrap())
    }

    fn play(w: &str) -> (usize, String) {
        let p = Position::parse(w, BoardMode::Fixed).unwrap();
        let moves = solve_to_one(&p).unwrap();
        let end = moves.iter().fold(p, |q, m| q.apply(m).unwrap());
        (moves.len(), end.render())
    }

    #[test]
    fn classifies_each_stage() {
        use Stage::*;
        assert_eq!(shape("1"), Some(StageShape::plain(SinglePeg)));
        assert_eq!(shape("1011"), Some(StageShape::plain(One { b: 0 })));
        assert_eq!(shape("10101011"), Some(StageShape::plain(One { b: 2 })));
        assert_eq!(shape("1101"), Some(StageShape::mirror(One { b: 0 })));
        assert_eq!(shape("1101001011"), Some(StageShape::plain(Two { a: 1, b: 1 })));
        assert_eq!(shape("1111110011"), Some(StageShape::plain(Three { a: 0, c: 2, b: 0 })));
        assert_eq!(shape("1100111011"), Some(StageShape::mirror(Three { a: 1, c: 1, b: 0 })));
        assert_eq!(shape("110111111101"), Some(StageShape::plain(Four { a: 1, c: 3 })));
        assert_eq!(shape("10111011"), Some(StageShape::mirror(Four { a: 1, c: 1 })));
        assert_eq!(shape("1111101111"), Some(StageShape::plain(Five { a: 0, c: 1, b: 0 })));
        assert_eq!(shape("11110111"), Some(StageShape::mirror(Five { a: 0, c: 0, b: 0 })));
        assert_eq!(shape("111"), None);
        assert_eq!(shape("110101010111"), None);
        assert_eq!(shape("111011"), None);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(play("110"), (1, "001".into()));
        assert_eq!(play("011"), (1, "100".into()));
        assert_eq!(play("1011"), (2, "0010".into()));
        assert_eq!(play("10101011").0, 4);
        let p = Position::parse("11", BoardMode::Fixed).unwrap();
        assert_eq!(solve_to_one(&p), Err(SolverError::NotSolvable));
        let p = Position::parse("0111", BoardMode::Fixed).unwrap();
        assert_eq!(solve_to_one(&p), Err(SolverError::NotSolvable));
    }

    #[test]
    fn open_pair_uses_the_outside() {
        let p = Position::parse("11", BoardMode::Open).unwrap();
        let moves = solve_to_one(&p).unwrap();
        assert_eq!(p.apply(&moves[0]).unwrap().render(), "1");
    }

    #[test]
    fn long_words_reduce_with_padding() {
        let w = format!("00011{}{}1011{}11000", "01".repeat(7), "11".repeat(5), "10".repeat(9));
        let (n, end) = play(&w);
        assert_eq!(end.matches('1').count(), 1);
        assert_eq!(n, w.matches('1').count() - 1);
    }
}
