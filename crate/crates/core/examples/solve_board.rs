//! Reduce a solvable board to one peg and print each position on the way.
//!
//! cargo run --example solve_board -- 0110100110

use peglab::solver::{is_solvable, solve_to_one};
use peglab::{BoardMode, Position};

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "0110100110".into());
    let mut p = Position::parse(&word, BoardMode::Fixed).expect("board must be 0s and 1s");
    if !is_solvable(&p) {
        println!("{word} cannot be reduced to one peg");
        return;
    }
    println!("{}", p.render());
    for m in solve_to_one(&p).unwrap() {
        p = p.apply(&m).unwrap();
        println!("{}  after {m}", p.render());
    }
}
