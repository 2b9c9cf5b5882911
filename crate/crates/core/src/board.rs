//! Board representation and move generation.
//!
//! A [`Position`] is a finite run of cells, each holding a peg (`1`) or a
//! hole (`0`). In [`BoardMode::Fixed`] the run *is* the board. In
//! [`BoardMode::Open`] the run sits on an infinite line of holes and is kept
//! trimmed to its peg extent; `origin` records where `cells[0]` lies on the
//! line so that moves can be reported in stable coordinates.
//!
//! Cell indices in [`Hop`] are line coordinates: `cells[i]` is at
//! `origin + i`. For fixed boards `origin` is always zero.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoardMode {
    Fixed,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Each move is exactly one hop.
    #[serde(rename = "single")]
    SingleHop,
    /// A move is a chain of one or more hops by the same peg.
    #[serde(rename = "multi")]
    MultiHop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hop {
    pub from: i64,
    pub over: i64,
    pub to: i64,
}

impl Hop {
    /// The hop from `from` landing on `to`; `over` is the midpoint.
    pub fn new(from: i64, to: i64) -> Self {
        Hop { from, over: (from + to) / 2, to }
    }

    fn is_well_formed(&self) -> bool {
        (self.to - self.from).abs() == 2 && self.over * 2 == self.from + self.to
    }

    fn mirrored(&self, axis: i64) -> Self {
        Hop { from: axis - self.from, over: axis - self.over, to: axis - self.to }
    }
}

impl fmt::Display for Hop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.from, self.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub hops: Vec<Hop>,
    pub variant: Variant,
}

impl Move {
    pub fn single(from: i64, to: i64) -> Self {
        Move { hops: vec![Hop::new(from, to)], variant: Variant::SingleHop }
    }

    /// A chain through the listed landing cells, starting at `path[0]`.
    pub fn chain(path: &[i64]) -> Self {
        let hops = path.windows(2).map(|w| Hop::new(w[0], w[1])).collect();
        Move { hops, variant: Variant::MultiHop }
    }

    pub fn len(&self) -> usize {
        self.hops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hops.is_empty()
    }

    /// Translates every hop by `delta` cells.
    pub fn shifted(&self, delta: i64) -> Move {
        let hops = self
            .hops
            .iter()
            .map(|h| Hop { from: h.from + delta, over: h.over + delta, to: h.to + delta })
            .collect();
        Move { hops, variant: self.variant }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for hop in &self.hops {
            if first {
                write!(f, "{}", hop.from)?;
                first = false;
            }
            write!(f, ">{}", hop.to)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty board text")]
    Empty,
    #[error("invalid board symbol {symbol:?} at column {column}")]
    InvalidSymbol { symbol: char, column: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("move has no hops")]
    Empty,
    #[error("single-hop move has {0} hops")]
    NotSingle(usize),
    #[error("hop {index}: {from} -> {to} is not a two-cell jump")]
    Malformed { index: usize, from: i64, to: i64 },
    #[error("hop {index}: chain broken, expected start at {expected}")]
    BrokenChain { index: usize, expected: i64 },
    #[error("hop {index}: no peg at {cell}")]
    NoPeg { index: usize, cell: i64 },
    #[error("hop {index}: nothing to hop over at {cell}")]
    NothingToHop { index: usize, cell: i64 },
    #[error("hop {index}: landing cell {cell} is occupied")]
    Occupied { index: usize, cell: i64 },
    #[error("hop {index}: landing cell {cell} is off the board")]
    OffBoard { index: usize, cell: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Position {
    cells: Vec<bool>,
    mode: BoardMode,
    origin: i64,
}

impl Position {
    pub fn fixed(cells: Vec<bool>) -> Self {
        Position { cells, mode: BoardMode::Fixed, origin: 0 }
    }

    /// An open-line position whose `cells[0]` sits at `origin`; trimmed to
    /// its peg extent.
    pub fn open(cells: Vec<bool>, origin: i64) -> Self {
        let mut p = Position { cells, mode: BoardMode::Open, origin };
        p.canonicalize();
        p
    }

    pub fn new(cells: Vec<bool>, mode: BoardMode) -> Self {
        match mode {
            BoardMode::Fixed => Self::fixed(cells),
            BoardMode::Open => Self::open(cells, 0),
        }
    }

    pub fn parse(text: &str, mode: BoardMode) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        let cells = parse_cells(text)?;
        Ok(Self::new(cells, mode))
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn mode(&self) -> BoardMode {
        self.mode
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn peg_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Cell contents at a line coordinate; everything off the stored run is
    /// a hole.
    pub fn peg_at(&self, x: i64) -> bool {
        let i = x - self.origin;
        i >= 0 && (i as usize) < self.cells.len() && self.cells[i as usize]
    }

    fn on_board(&self, x: i64) -> bool {
        match self.mode {
            BoardMode::Open => true,
            BoardMode::Fixed => x >= 0 && (x as usize) < self.cells.len(),
        }
    }

    pub fn render(&self) -> String {
        render_cells(&self.cells)
    }

    /// Renders the line coordinates `lo..hi`.
    pub fn render_window(&self, lo: i64, hi: i64) -> String {
        (lo..hi).map(|x| if self.peg_at(x) { '1' } else { '0' }).collect()
    }

    /// Same cells, translated so `cells[0]` is at coordinate zero.
    pub fn normalized(&self) -> Position {
        Position { cells: self.cells.clone(), mode: self.mode, origin: 0 }
    }

    /// Reverses the board. For open positions the line is reflected about
    /// coordinate zero.
    pub fn mirror(&self) -> Position {
        let mut cells = self.cells.clone();
        cells.reverse();
        let origin = match self.mode {
            BoardMode::Fixed => 0,
            BoardMode::Open if cells.is_empty() => 0,
            BoardMode::Open => -(self.origin + self.cells.len() as i64 - 1),
        };
        Position { cells, mode: self.mode, origin }
    }

    /// Maps a move on `self` to the corresponding move on `self.mirror()`.
    pub fn mirror_move(&self, m: &Move) -> Move {
        let axis = match self.mode {
            BoardMode::Fixed => self.cells.len() as i64 - 1,
            BoardMode::Open => 0,
        };
        Move { hops: m.hops.iter().map(|h| h.mirrored(axis)).collect(), variant: m.variant }
    }

    fn canonicalize(&mut self) {
        if self.mode == BoardMode::Fixed {
            return;
        }
        match self.cells.iter().position(|&c| c) {
            None => {
                self.cells.clear();
                self.origin = 0;
            }
            Some(first) => {
                let last = self.cells.iter().rposition(|&c| c).unwrap();
                self.cells.truncate(last + 1);
                self.cells.drain(..first);
                self.origin += first as i64;
            }
        }
    }

    /// Returns a copy whose stored run covers `lo..hi` (open mode only uses
    /// this as scratch space; the result is re-canonicalized by callers).
    fn widened(&self, lo: i64, hi: i64) -> Position {
        let cells = (lo..hi).map(|x| self.peg_at(x)).collect();
        Position { cells, mode: self.mode, origin: lo }
    }

    fn set(&mut self, x: i64, peg: bool) {
        let i = (x - self.origin) as usize;
        self.cells[i] = peg;
    }

    fn hop_legal(&self, from: i64, to: i64) -> bool {
        let over = (from + to) / 2;
        self.on_board(to) && self.peg_at(from) && self.peg_at(over) && !self.peg_at(to)
    }

    /// Scratch copy with room for every landing cell reachable from `self`.
    fn scratch(&self) -> Position {
        match self.mode {
            BoardMode::Fixed => self.clone(),
            BoardMode::Open => self.widened(self.origin - 2, self.origin + self.cells.len() as i64 + 2),
        }
    }

    fn finish(mut self) -> Position {
        self.canonicalize();
        self
    }

    fn coords(&self) -> std::ops::Range<i64> {
        self.origin..self.origin + self.cells.len() as i64
    }

    /// All legal single hops, ordered by source cell, leftward first.
    pub fn single_hops(&self) -> Vec<(Move, Position)> {
        let mut out = Vec::new();
        for from in self.coords() {
            if !self.peg_at(from) {
                continue;
            }
            for to in [from - 2, from + 2] {
                if self.hop_legal(from, to) {
                    let mut next = self.scratch();
                    next.set(from, false);
                    next.set((from + to) / 2, false);
                    next.set(to, true);
                    out.push((Move::single(from, to), next.finish()));
                }
            }
        }
        out
    }

    /// Every distinct position reachable by one chain of hops with a single
    /// peg. The chain may stop after any hop and may change direction.
    pub fn multihop_options(&self) -> Vec<(Move, Position)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let base = self.scratch();
        for start in self.coords() {
            if self.peg_at(start) {
                let mut path = vec![start];
                extend_chains(&base, &mut path, &mut seen, &mut out);
            }
        }
        out
    }

    pub fn options(&self, variant: Variant) -> Vec<(Move, Position)> {
        match variant {
            Variant::SingleHop => self.single_hops(),
            Variant::MultiHop => self.multihop_options(),
        }
    }

    pub fn apply(&self, m: &Move) -> Result<Position, MoveError> {
        if m.hops.is_empty() {
            return Err(MoveError::Empty);
        }
        if m.variant == Variant::SingleHop && m.hops.len() != 1 {
            return Err(MoveError::NotSingle(m.hops.len()));
        }
        let (lo, hi) = m.hops.iter().fold((self.origin, self.origin + self.len() as i64), |(lo, hi), h| {
            (lo.min(h.to), hi.max(h.to + 1))
        });
        let mut next = match self.mode {
            BoardMode::Fixed => self.clone(),
            BoardMode::Open => self.widened(lo, hi),
        };
        for (index, hop) in m.hops.iter().enumerate() {
            if !hop.is_well_formed() {
                return Err(MoveError::Malformed { index, from: hop.from, to: hop.to });
            }
            if index > 0 && hop.from != m.hops[index - 1].to {
                return Err(MoveError::BrokenChain { index, expected: m.hops[index - 1].to });
            }
            if !next.peg_at(hop.from) {
                return Err(MoveError::NoPeg { index, cell: hop.from });
            }
            if !next.peg_at(hop.over) {
                return Err(MoveError::NothingToHop { index, cell: hop.over });
            }
            if !self.on_board(hop.to) {
                return Err(MoveError::OffBoard { index, cell: hop.to });
            }
            if next.peg_at(hop.to) {
                return Err(MoveError::Occupied { index, cell: hop.to });
            }
            next.set(hop.from, false);
            next.set(hop.over, false);
            next.set(hop.to, true);
        }
        Ok(next.finish())
    }

    /// Every position from which one single hop produces `self`.
    pub fn unhops(&self) -> Vec<Position> {
        let base = self.scratch();
        let mut out = Vec::new();
        for to in self.coords() {
            if !self.peg_at(to) {
                continue;
            }
            for from in [to - 2, to + 2] {
                let over = (from + to) / 2;
                if self.on_board(from) && !self.peg_at(over) && !self.peg_at(from) {
                    let mut prev = base.clone();
                    prev.set(to, false);
                    prev.set(over, true);
                    prev.set(from, true);
                    out.push(prev.finish());
                }
            }
        }
        out
    }
}

fn extend_chains(
    board: &Position,
    path: &mut Vec<i64>,
    seen: &mut HashSet<Position>,
    out: &mut Vec<(Move, Position)>,
) {
    let at = *path.last().unwrap();
    for to in [at - 2, at + 2] {
        if !board.hop_legal(at, to) {
            continue;
        }
        let mut next = board.clone();
        next.set(at, false);
        next.set((at + to) / 2, false);
        next.set(to, true);
        path.push(to);
        let result = next.clone().finish();
        if seen.insert(result.clone()) {
            out.push((Move::chain(path), result));
        }
        extend_chains(&next, path, seen, out);
        path.pop();
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn parse_cells(text: &str) -> Result<Vec<bool>, ParseError> {
    text.chars()
        .enumerate()
        .map(|(column, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            symbol => Err(ParseError::InvalidSymbol { symbol, column }),
        })
        .collect()
}

pub fn render_cells(cells: &[bool]) -> String {
    cells.iter().map(|&c| if c { '1' } else { '0' }).collect()
}
