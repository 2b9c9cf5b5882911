//! Fewest pegs reachable from a board, with the plan that gets there.

use peglab::solver::{brute_force_min_pegs, min_pegs, shared_hole_bound};
use peglab::{BoardMode, Position};

fn main() {
    for word in ["1110111", "01111", "110110110111", "1011011101101111011"] {
        let p = Position::parse(word, BoardMode::Fixed).unwrap();
        let (k, plan) = min_pegs(&p).unwrap();
        let lower = shared_hole_bound(p.cells());
        let check = brute_force_min_pegs(&p).map(|b| b.to_string()).unwrap_or_else(|_| "-".into());
        println!("{word}: {k} pegs (lower bound {lower}, exhaustive {check}), segments {:?}", plan.segments);
        let mut q = p.clone();
        for m in &plan.moves {
            q = q.apply(m).unwrap();
        }
        println!("  ends at {}", q.render());
    }
}
