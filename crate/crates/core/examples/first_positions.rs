//! Shortest single-hop board of each Grundy value.

use peglab::duotaire::{Engine, SearchOutcome};
use peglab::Variant;

fn main() {
    let max_g = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let engine = Engine::new();
    for (g, found) in engine.first_positions(max_g, Variant::SingleHop, 19).into_iter().enumerate() {
        match found {
            SearchOutcome::Found(w) => println!("G={g}: 0{w}0"),
            SearchOutcome::NotFound { max_len } => println!("G={g}: none up to length {max_len}"),
        }
    }
}
