//! Minimum-peg reduction as a shortest path through a layered graph.
//!
//! Vertices are `(state, i)` for every automaton state and every cut
//! position `0..=n`. Reading `c_i` moves from layer `i` to `i + 1`; an
//! accepting state may also restart at the start state within the same
//! layer, closing one segment. A shortest path from `(start, 0)` to
//! `(start, n)` uses `n` symbol arcs plus one restart per segment.
//!
//! Cutting the board into independently solvable segments only bounds the
//! answer from above: a segment may finish by hopping into a hole its
//! neighbour has just vacated (`01111` ends as `10100`). Letting every
//! inner cut borrow one hole on each side gives a matching lower bound.
//! When the two differ, a search guided by the lower bound closes the gap.

use rustc_hash::FxHashSet;

use crate::board::{BoardMode, Move, Position};

use super::{solvable_automaton, solve_to_one, SolverError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionPlan {
    /// Half-open cell ranges partitioning the board, in order. Each range
    /// holds the pegs that end up as one final peg, though a range may
    /// borrow a hole from its neighbour on the way.
    pub segments: Vec<(usize, usize)>,
    pub moves: Vec<Move>,
    pub final_peg_count: usize,
    /// Board length plus segment count.
    pub path_length: usize,
}

const UNREACHED: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cut {
    /// Segments own their holes.
    Strict,
    /// Inner cuts may treat the neighbouring cell as a hole.
    SharedHole,
}

/// Predecessor of a vertex reached by a symbol arc.
#[derive(Clone, Copy)]
struct Arc {
    state: usize,
    /// The predecessor was entered through a restart rather than a symbol.
    restarted: bool,
}

/// Segment partition with the fewest segments.
///
/// Ties between equally short paths go to the lowest closing state, and a
/// vertex keeps the first predecessor that reaches it.
fn partition(cells: &[bool], cut: Cut) -> Vec<(usize, usize)> {
    if !cells.contains(&true) {
        return Vec::new();
    }
    let nfa = solvable_automaton();
    let states = nfa.state_count();
    let start = nfa.start();
    let n = cells.len();
    let at = |s: usize, i: usize| i * states + s;
    let closes_on_hole = |a: usize| nfa.successors(a, false).iter().any(|&t| nfa.is_accepting(t));

    // vertices entered by a symbol arc, and vertices entered by a restart
    let mut sym = vec![UNREACHED; states * (n + 1)];
    let mut sym_pred = vec![Arc { state: usize::MAX, restarted: false }; states * (n + 1)];
    let mut opened = vec![UNREACHED; states * (n + 1)];
    let mut closed_by = vec![usize::MAX; states * (n + 1)];
    opened[at(start, 0)] = 0;

    for i in 0..=n {
        if i > 0 {
            let inner = cut == Cut::SharedHole && i < n;
            let mut best = (UNREACHED, usize::MAX);
            for t in 0..states {
                let d = sym[at(t, i)];
                let closes = nfa.is_accepting(t) || (inner && closes_on_hole(t));
                if d != UNREACHED && closes && d + 1 < best.0 {
                    best = (d + 1, t);
                }
            }
            if best.0 != UNREACHED {
                opened[at(start, i)] = best.0;
                closed_by[at(start, i)] = best.1;
                if inner {
                    for &b in nfa.successors(start, false) {
                        if best.0 < opened[at(b, i)] {
                            opened[at(b, i)] = best.0;
                            closed_by[at(b, i)] = best.1;
                        }
                    }
                }
            }
        }
        if i == n {
            break;
        }
        for a in 0..states {
            for (d, restarted) in [(sym[at(a, i)], false), (opened[at(a, i)], true)] {
                if d == UNREACHED {
                    continue;
                }
                for &b in nfa.successors(a, cells[i]) {
                    let slot = at(b, i + 1);
                    if d < sym[slot] {
                        sym[slot] = d;
                        sym_pred[slot] = Arc { state: a, restarted };
                    }
                }
            }
        }
    }

    // a board with a peg splits into single pegs with their holes attached
    let mut state = closed_by[at(start, n)];
    debug_assert_ne!(state, usize::MAX);
    let mut cuts = vec![n];
    let mut i = n;
    while i > 0 {
        let arc = sym_pred[at(state, i)];
        i -= 1;
        state = arc.state;
        if arc.restarted {
            cuts.push(i);
            if i == 0 {
                break;
            }
            state = closed_by[at(state, i)];
        }
    }
    cuts.reverse();
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Least number of contiguous peg groups each of which could be cleared
/// to one peg if the cell just past each inner cut were a hole.
///
/// No board reduces below this. A board with no holes cannot move at all,
/// which this does not account for.
pub fn shared_hole_bound(cells: &[bool]) -> usize {
    partition(cells, Cut::SharedHole).len()
}

/// Moves clearing every segment to one peg, each segment on its own.
fn replay(cells: &[bool], segments: &[(usize, usize)]) -> Vec<Move> {
    let mut moves = Vec::new();
    for &(lo, hi) in segments {
        let piece = Position::fixed(cells[lo..hi].to_vec());
        let local = solve_to_one(&piece).expect("segments are solvable");
        moves.extend(local.into_iter().map(|m| m.shifted(lo as i64)));
    }
    moves
}

fn lower_bound(cells: &[bool]) -> usize {
    if cells.contains(&false) {
        shared_hole_bound(cells)
    } else {
        cells.len()
    }
}

/// Depth-first search for a hop sequence ending with at most `target`
/// pegs, skipping any position whose lower bound already exceeds it.
fn descend(cells: &mut Vec<bool>, target: usize, moves: &mut Vec<Move>, failed: &mut FxHashSet<Vec<bool>>) -> bool {
    let strict = partition(cells, Cut::Strict);
    if strict.len() <= target {
        moves.extend(replay(cells, &strict));
        return true;
    }
    if failed.contains(cells) {
        return false;
    }
    for i in 0..cells.len().saturating_sub(2) {
        let (from, to) = match (cells[i], cells[i + 1], cells[i + 2]) {
            (true, true, false) => (i, i + 2),
            (false, true, true) => (i + 2, i),
            _ => continue,
        };
        flip(cells, i);
        if lower_bound(cells) <= target {
            moves.push(Move::single(from as i64, to as i64));
            if descend(cells, target, moves, failed) {
                return true;
            }
            moves.pop();
        }
        flip(cells, i);
    }
    failed.insert(cells.clone());
    false
}

fn flip(cells: &mut [bool], i: usize) {
    for c in &mut cells[i..i + 3] {
        *c = !*c;
    }
}

/// Cuts the board between the peg groups that end as one peg each. A
/// peg joins the group of whoever hops over it; groups are contiguous, and
/// holes belong to the group on their left.
fn lineages(cells: &[bool], moves: &[Move]) -> Vec<(usize, usize)> {
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // the initial peg standing for whatever now occupies each cell
    let mut owner: Vec<Option<usize>> = cells.iter().enumerate().map(|(i, &c)| c.then_some(i)).collect();
    for hop in moves.iter().flat_map(|m| &m.hops) {
        let (from, over, to) = (hop.from as usize, hop.over as usize, hop.to as usize);
        let mover = owner[from].take().expect("replayed hops are legal");
        let taken = owner[over].take().expect("replayed hops are legal");
        let (a, b) = (root(&mut parent, mover), root(&mut parent, taken));
        parent[b] = a;
        owner[to] = Some(mover);
    }
    let mut cuts = vec![0];
    let mut last = None;
    for i in (0..cells.len()).filter(|&i| cells[i]) {
        let r = root(&mut parent, i);
        if last.is_some_and(|l| l != r) {
            cuts.push(i);
        }
        last = Some(r);
    }
    cuts.push(cells.len());
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// The least number of pegs the board can be reduced to, with a plan that
/// gets there.
pub fn min_pegs(p: &Position) -> Result<(usize, ReductionPlan), SolverError> {
    if p.peg_count() == 0 {
        return Err(SolverError::NoPegs);
    }
    // an open board behaves like a fixed one with a spare hole at each end
    let (cells, shift): (Vec<bool>, i64) = match p.mode() {
        BoardMode::Fixed => (p.cells().to_vec(), 0),
        BoardMode::Open => {
            let mut c = vec![false];
            c.extend_from_slice(p.cells());
            c.push(false);
            (c, p.origin() - 1)
        }
    };
    let strict = partition(&cells, Cut::Strict);
    let bound = lower_bound(&cells);

    let (k, segments, moves) = if strict.len() <= bound {
        (strict.len(), strict.clone(), replay(&cells, &strict))
    } else {
        let mut failed = FxHashSet::default();
        let mut found = None;
        for target in bound..strict.len() {
            let mut moves = Vec::new();
            if descend(&mut cells.clone(), target, &mut moves, &mut failed) {
                found = Some((target, moves));
                break;
            }
            failed.clear();
        }
        match found {
            Some((k, moves)) => (k, lineages(&cells, &moves), moves),
            None => (strict.len(), strict.clone(), replay(&cells, &strict)),
        }
    };
    let moves = moves.into_iter().map(|m| m.shifted(shift)).collect();
    let segments = match p.mode() {
        BoardMode::Fixed => segments,
        // report open segments against the stored cells, clipping the padding
        BoardMode::Open => segments
            .into_iter()
            .map(|(lo, hi)| (lo.saturating_sub(1), (hi - 1).min(p.len())))
            .filter(|(lo, hi)| lo < hi)
            .collect(),
    };
    let path_length = cells.len() + k;
    Ok((k, ReductionPlan { segments, moves, final_peg_count: k, path_length }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::brute_force_min_pegs;

    fn fixed(s: &str) -> Position {
        Position::parse(s, BoardMode::Fixed).unwrap()
    }

    fn check(s: &str) -> (usize, ReductionPlan) {
        let p = fixed(s);
        let (k, plan) = min_pegs(&p).unwrap();
        let end = plan.moves.iter().fold(p.clone(), |q, m| q.apply(m).unwrap());
        assert_eq!(end.peg_count(), k, "{s}");
        assert_eq!(plan.path_length, s.len() + k);
        (k, plan)
    }

    fn words(n: usize) -> impl Iterator<Item = Vec<bool>> {
        (0u32..1 << n).map(move |i| (0..n).map(|b| i >> b & 1 == 1).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(check("1011").0, 1);
        let (k, plan) = check("11");
        assert_eq!(k, 2);
        assert_eq!(plan.segments, vec![(0, 1), (1, 2)]);
        assert!(plan.moves.is_empty());
        let (k, plan) = check("1110111");
        assert_eq!(k, 3);
        assert_eq!(plan.segments, vec![(0, 1), (1, 5), (5, 7)]);
        assert_eq!(check("01111").0, 2);
        assert_eq!(check("111").0, 3);
        assert_eq!(min_pegs(&fixed("000")), Err(SolverError::NoPegs));
    }

    #[test]
    fn strict_cuts_overcount_when_holes_are_shared() {
        let cells = crate::board::parse_cells("01111").unwrap();
        assert_eq!(partition(&cells, Cut::Strict).len(), 3);
        assert_eq!(partition(&cells, Cut::SharedHole), vec![(0, 3), (3, 5)]);
    }

    #[test]
    fn segments_partition_the_board() {
        for s in ["0011011101010000101", "1110111", "0111101111"] {
            let (k, plan) = check(s);
            assert_eq!(plan.segments.len(), k);
            assert_eq!(plan.segments.first().unwrap().0, 0);
            assert_eq!(plan.segments.last().unwrap().1, s.len());
            assert!(plan.segments.windows(2).all(|w| w[0].1 == w[1].0));
        }
    }

    #[test]
    fn bounds_bracket_the_exhaustive_minimum() {
        for n in 1..=10 {
            for w in words(n) {
                let exact = brute_force_min_pegs(&Position::fixed(w.clone())).unwrap();
                assert!(lower_bound(&w) <= exact);
                assert!(partition(&w, Cut::Strict).len() >= exact);
            }
        }
    }

    #[test]
    fn open_boards_use_the_outside() {
        let p = Position::parse("0110", BoardMode::Open).unwrap();
        let (k, plan) = min_pegs(&p).unwrap();
        assert_eq!(k, 1);
        let end = plan.moves.iter().fold(p, |q, m| q.apply(m).unwrap());
        assert_eq!(end.peg_count(), 1);
    }
}
