//! Lower bound on the suffix classes of the P-positions.

use peglab::duotaire::Engine;
use peglab::Variant;

fn main() {
    let engine = Engine::new();
    for p in [4, 6, 8, 10] {
        println!("prefixes <= {p:>2}, suffixes <= 8: {} classes", engine.distinguishing_classes(p, 8, Variant::SingleHop));
    }
}
