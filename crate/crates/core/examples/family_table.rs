//! Closed-form multihop values of the simple families next to the engine's.

use peglab::duotaire::{Engine, FamilyId};
use peglab::{BoardMode, Position, Variant};

fn main() {
    let engine = Engine::new();
    for f in FamilyId::all_up_to(4) {
        let word = f.word().unwrap();
        let g = engine.grundy(&Position::parse(&word, BoardMode::Open).unwrap(), Variant::MultiHop).unwrap();
        println!("{:<16} {word:<14} table {:<2} engine {g}", f.to_string(), f.value().unwrap());
    }
}
