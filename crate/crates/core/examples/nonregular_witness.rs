//! Three ladders side by side form a P-position exactly when their shifted
//! lengths nim-add to zero.

use peglab::duotaire::{ladder_word, s_member, xor_witness, Engine};
use peglab::Variant;

fn main() {
    let engine = Engine::new();
    for n in 0..6 {
        println!("{}: G = {}", ladder_word(n), engine.ladder_value(n, Variant::MultiHop).unwrap());
    }
    let report = engine.resolve_xor_indexing(4, Variant::MultiHop).unwrap();
    println!("P-triples: {:?}", report.p_triples);
    println!("(i+1)^(j+1)^(k+1) = 0 fits: {}, i^j^k = 0 fits: {}", report.shifted_xor_matches, report.raw_xor_matches);
    let members: Vec<u64> = (0..40).filter(|&n| s_member(n) && xor_witness(n)).collect();
    println!("no adjacent ones below 40: {members:?}");
}
