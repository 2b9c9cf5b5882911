//! Play random games and count hops across each cell boundary.

use peglab::duotaire::boundary_crossings;
use peglab::{Position, Variant};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0;
    for _ in 0..1000 {
        let start = Position::fixed((0..14).map(|_| rng.gen_bool(0.7)).collect());
        let (mut p, mut moves) = (start.clone(), Vec::new());
        while let Some((m, q)) = p.options(Variant::SingleHop).choose(&mut rng).cloned() {
            moves.push(m);
            p = q;
        }
        for b in 1..14 {
            worst = worst.max(boundary_crossings(&start, &moves, b).unwrap());
        }
    }
    println!("most crossings of one boundary over 1000 games: {worst}");
}
