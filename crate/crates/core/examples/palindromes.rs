//! Symmetric boards around a central gap are second-player wins.

use peglab::duotaire::{palindrome_p_check, palindrome_shape, Engine};
use peglab::board::parse_cells;
use peglab::{BoardMode, Position, Variant};

fn main() {
    let engine = Engine::new();
    for word in ["1101001011", "1011011001101101", "11001011100111010011", "1101001010"] {
        let cells = parse_cells(word).unwrap();
        let g = engine.grundy(&Position::parse(word, BoardMode::Fixed).unwrap(), Variant::MultiHop).unwrap();
        println!("{word}: shape {:?}, claimed P {}, G = {g}", palindrome_shape(&cells), palindrome_p_check(&cells));
    }
}
