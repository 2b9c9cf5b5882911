//! Grundy values and winning moves of a few Duotaire positions.

use peglab::duotaire::Engine;
use peglab::{BoardMode, Position, Variant};

fn main() {
    let engine = Engine::new();
    for (word, mode) in [("0110", BoardMode::Fixed), ("111111", BoardMode::Open), ("10110100101011", BoardMode::Fixed)] {
        let p = Position::parse(word, mode).unwrap();
        for v in [Variant::SingleHop, Variant::MultiHop] {
            let g = engine.grundy(&p, v).unwrap();
            let best: Vec<String> = engine.best_moves(&p, v).unwrap_or_default().iter().map(|m| m.to_string()).collect();
            println!("{word} {mode:?} {v:?}: G = {g}, winning moves {best:?}");
        }
    }
}
