//! Split a board at wide gaps and add the component values.

use peglab::duotaire::{decompose, Engine};
use peglab::{BoardMode, Position, Variant};

fn main() {
    let engine = Engine::new();
    let p = Position::parse("1011010010101100011101", BoardMode::Fixed).unwrap();
    let parts = decompose(&p);
    for c in &parts {
        println!("{:<12} G = {}", c.render(), engine.grundy(c, Variant::MultiHop).unwrap());
    }
    println!("sum {} whole {}", engine.grundy_decomposed(&p, Variant::MultiHop).unwrap(), engine.grundy(&p, Variant::MultiHop).unwrap());
}
