//! A small regular-expression syntax over the board alphabet.
//!
//! `|` is union, juxtaposition is concatenation, postfix `*` and `+` are
//! zero-or-more and one-or-more repetition.

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegexNode {
    Literal(bool),
    Concat(Vec<RegexNode>),
    Union(Vec<RegexNode>),
    Star(Box<RegexNode>),
    Plus(Box<RegexNode>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegexError {
    #[error("unexpected {found:?} at offset {offset}")]
    Unexpected { found: char, offset: usize },
    #[error("unexpected end of pattern")]
    UnexpectedEnd,
    #[error("empty alternative at offset {0}")]
    EmptyAlternative(usize),
}

/// The solvable core language: a single peg, `011`, `110`, and the four
/// reverse-play families.
pub const SOLVABLE_CORE: &str = "1|011|110\
    |11(01)*(00|00(11)+|(11)+00|(11)*1011|1101(11)*)(10)*11\
    |11(01)*(11)*01\
    |10(11)*(10)*11";

/// The core language padded with any number of holes on either side.
pub fn solvable_language() -> RegexNode {
    let zeros = || RegexNode::Star(Box::new(RegexNode::Literal(false)));
    let core = parse(SOLVABLE_CORE).expect("built-in pattern parses");
    RegexNode::Concat(vec![zeros(), core, zeros()])
}

pub fn core_language() -> RegexNode {
    parse(SOLVABLE_CORE).expect("built-in pattern parses")
}

pub fn parse(pattern: &str) -> Result<RegexNode, RegexError> {
    let chars: Vec<char> = pattern.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser { chars: &chars, pos: 0 };
    let node = parser.union()?;
    match parser.peek() {
        None => Ok(node),
        Some(c) => Err(RegexError::Unexpected { found: c, offset: parser.pos }),
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> Result<RegexNode, RegexError> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { RegexNode::Union(branches) })
    }

    fn concat(&mut self) -> Result<RegexNode, RegexError> {
        let start = self.pos;
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.postfix()?);
        }
        match parts.len() {
            0 => Err(RegexError::EmptyAlternative(start)),
            1 => Ok(parts.pop().unwrap()),
            _ => Ok(RegexNode::Concat(parts)),
        }
    }

    fn postfix(&mut self) -> Result<RegexNode, RegexError> {
        let mut node = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => node = RegexNode::Star(Box::new(node)),
                Some('+') => node = RegexNode::Plus(Box::new(node)),
                _ => return Ok(node),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<RegexNode, RegexError> {
        let offset = self.pos;
        let c = self.peek().ok_or(RegexError::UnexpectedEnd)?;
        self.pos += 1;
        match c {
            '0' => Ok(RegexNode::Literal(false)),
            '1' => Ok(RegexNode::Literal(true)),
            '(' => {
                let inner = self.union()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(found) => Err(RegexError::Unexpected { found, offset: self.pos }),
                    None => Err(RegexError::UnexpectedEnd),
                }
            }
            found => Err(RegexError::Unexpected { found, offset }),
        }
    }
}
