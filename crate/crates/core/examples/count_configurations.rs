//! Number of distinct solvable words with n pegs.

use peglab::solver::{count_solvable, enumerate_solvable};

fn main() {
    for n in 1..=12 {
        println!("{n:>2} pegs: {}", count_solvable(n).unwrap());
    }
    println!("with 5 pegs: {:?}", enumerate_solvable(5).unwrap());
}
