//! Peg Solitaire and Peg Duotaire on a one-dimensional board.
//!
//! * [`board`]: positions, hops, move generation in both directions.
//! * [`solver`]: which boards reduce to one peg, how to do it in linear
//!   time, and the fewest pegs any board can reach.
//! * [`duotaire`]: Sprague-Grundy values of the two-player game in its
//!   single-hop and multihop forms.
//! * [`service`]: command line, HTTP API and the on-disk value cache.

pub mod board;
pub mod duotaire;
pub mod nim;
pub mod service;
pub mod solver;

pub use board::{BoardMode, Hop, Move, MoveError, ParseError, Position, Variant};
pub use nim::{nim_sum, NimValue};
