use std::collections::HashMap;

use peglab::duotaire::{decompose, Engine};
use peglab::solver::{is_solvable, min_pegs, solve_to_one};
use peglab::{BoardMode, NimValue, Position, Variant};
use proptest::prelude::*;

/// Grundy values straight from the move generator, memoized on the
/// rendered board.
struct Naive {
    memo: HashMap<(String, BoardMode, Variant), u32>,
}

impl Naive {
    fn new() -> Self {
        Naive { memo: HashMap::new() }
    }

    fn grundy(&mut self, p: &Position, v: Variant) -> u32 {
        let key = (p.render(), p.mode(), v);
        if let Some(&g) = self.memo.get(&key) {
            return g;
        }
        let mut seen: Vec<u32> = p.options(v).iter().map(|(_, q)| self.grundy(q, v)).collect();
        seen.sort_unstable();
        seen.dedup();
        let g = seen.iter().enumerate().find(|(i, &x)| *i as u32 != x).map_or(seen.len(), |(i, _)| i) as u32;
        self.memo.insert(key, g);
        g
    }
}

fn all_words(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << len).map(move |i| (0..len).map(|b| i >> b & 1 == 1).collect())
}

const VARIANTS: [Variant; 2] = [Variant::SingleHop, Variant::MultiHop];

#[test]
fn engine_matches_naive_recursion() {
    let e = Engine::new();
    let mut naive = Naive::new();
    for len in 1..=10 {
        for w in all_words(len) {
            for mode in [BoardMode::Fixed, BoardMode::Open] {
                let p = Position::new(w.clone(), mode);
                for v in VARIANTS {
                    assert_eq!(e.grundy(&p, v).unwrap().get(), naive.grundy(&p, v), "{} {mode:?} {v:?}", p.render());
                }
            }
        }
    }
}

#[test]
fn mex_is_exact() {
    let e = Engine::new();
    for w in all_words(9) {
        let p = Position::fixed(w);
        for v in VARIANTS {
            let g = e.grundy(&p, v).unwrap();
            let opts: Vec<NimValue> = e.options(&p, v).unwrap().into_iter().map(|(_, _, g)| g).collect();
            assert!(!opts.contains(&g));
            assert!((0..g.get()).all(|x| opts.contains(&NimValue(x))));
        }
    }
}

#[test]
fn decomposition_identity() {
    let e = Engine::new();
    for len in 3..=12 {
        for w in all_words(len) {
            let p = Position::fixed(w);
            if decompose(&p).len() < 2 {
                continue;
            }
            for v in VARIANTS {
                assert_eq!(e.grundy_decomposed(&p, v), e.grundy(&p, v), "{}", p.render());
            }
        }
    }
}

#[test]
fn open_boards_never_reach_a_wall() {
    // enough holes on both sides make the fixed value independent of the padding
    let e = Engine::new();
    for len in 1..=8 {
        for w in all_words(len) {
            let pegs = w.iter().filter(|&&c| c).count();
            let open = Position::open(w.clone(), 0);
            for v in VARIANTS {
                let padded = |a: usize| {
                    let mut c = vec![false; a];
                    c.extend(&w);
                    c.extend(vec![false; a]);
                    e.grundy(&Position::fixed(c), v).unwrap()
                };
                let g = padded(pegs);
                assert_eq!(padded(pegs + 2), g);
                assert_eq!(e.grundy(&open, v).unwrap(), g);
            }
        }
    }
}

/// The side to move from `p` wins by always answering with a best move.
fn first_player_wins(e: &Engine, p: &Position, v: Variant) -> bool {
    let Ok(moves) = e.best_moves(p, v) else { return false };
    let Some(m) = moves.first() else { return false };
    let q = p.apply(m).unwrap();
    q.options(v).iter().all(|(_, r)| first_player_wins(e, r, v))
}

#[test]
fn best_moves_win() {
    let e = Engine::new();
    for len in 1..=9 {
        for w in all_words(len) {
            let p = Position::fixed(w);
            for v in VARIANTS {
                let is_n = !e.is_p_position(&p, v).unwrap();
                assert_eq!(first_player_wins(&e, &p, v), is_n, "{}", p.render());
            }
        }
    }
}

#[test]
fn unhops_invert_hops() {
    for len in 1..=9 {
        for w in all_words(len) {
            let p = Position::fixed(w);
            for (_, q) in p.single_hops() {
                assert!(q.unhops().contains(&p), "{} -> {}", p.render(), q.render());
            }
        }
    }
}

proptest! {
    #[test]
    fn mirror_invariance(cells in proptest::collection::vec(any::<bool>(), 0..13), open: bool, multi: bool) {
        let mode = if open { BoardMode::Open } else { BoardMode::Fixed };
        let v = if multi { Variant::MultiHop } else { Variant::SingleHop };
        let p = Position::new(cells, mode);
        let e = Engine::shared();
        prop_assert_eq!(e.grundy(&p, v).unwrap(), e.grundy(&p.mirror(), v).unwrap());
        for (m, q) in p.options(v) {
            prop_assert_eq!(p.mirror().apply(&p.mirror_move(&m)).unwrap(), q.mirror());
        }
    }

    #[test]
    fn solvable_boards_play_down_to_one(cells in proptest::collection::vec(any::<bool>(), 1..40)) {
        let p = Position::fixed(cells);
        if is_solvable(&p) {
            let end = solve_to_one(&p).unwrap().iter().fold(p, |q, m| q.apply(m).unwrap());
            prop_assert_eq!(end.peg_count(), 1);
        }
    }

    #[test]
    fn plans_reach_their_count(cells in proptest::collection::vec(any::<bool>(), 1..60), open: bool) {
        let p = Position::new(cells, if open { BoardMode::Open } else { BoardMode::Fixed });
        prop_assume!(p.peg_count() > 0);
        let (k, plan) = min_pegs(&p).unwrap();
        let end = plan.moves.iter().fold(p.clone(), |q, m| q.apply(m).unwrap());
        prop_assert_eq!(end.peg_count(), k);
        prop_assert_eq!(plan.segments.len(), k);
        prop_assert_eq!(k == 1, is_solvable(&p));
    }
}
