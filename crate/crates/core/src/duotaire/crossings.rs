use crate::board::{Move, MoveError, Position};

/// Number of hops in `playout` crossing the boundary just left of cell
/// `boundary`. The playout is replayed from `start` and must be legal.
pub fn boundary_crossings(start: &Position, playout: &[Move], boundary: i64) -> Result<usize, MoveError> {
    let mut p = start.clone();
    let mut count = 0;
    for m in playout {
        p = p.apply(m)?;
        count += m
            .hops
            .iter()
            .filter(|h| h.from.min(h.to) < boundary && boundary <= h.from.max(h.to))
            .count();
    }
    Ok(count)
}
