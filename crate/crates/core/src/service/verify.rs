//! Reproduction suites behind `peglab verify`.

use std::fmt;
use std::str::FromStr;

use crate::board::{BoardMode, Position, Variant};
use crate::duotaire::{ladder_word, Engine, FamilyId, SearchOutcome};
use crate::nim::NimValue;
use crate::solver::{count_solvable, enumerate_solvable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counting,
    Table,
    FirstPositions,
    SpotValues,
    Palindromes,
    Ladders,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "counting" => Suite::Counting,
            "table" => Suite::Table,
            "first-positions" => Suite::FirstPositions,
            "spot-values" => Suite::SpotValues,
            "palindromes" => Suite::Palindromes,
            "ladders" => Suite::Ladders,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["counting", "table", "first-positions", "spot-values", "palindromes", "ladders", "all"];
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

/// Expected first words of each single-hop value, shortest then
/// lexicographic, on the board `0w0`.
pub const FIRST_POSITIONS: [&str; 9] = [
    "1",
    "11",
    "1011",
    "110111",
    "11010111",
    "11011010111",
    "10110111001111",
    "10110110010111011",
    "1101101101101110111",
];

pub fn run(suite: Suite, engine: &Engine) -> Vec<Check> {
    match suite {
        Suite::Counting => counting(),
        Suite::Table => table(engine),
        Suite::FirstPositions => first_positions(engine),
        Suite::SpotValues => spot_values(engine),
        Suite::Palindromes => palindromes(engine),
        Suite::Ladders => ladders(engine),
        Suite::All => [
            Suite::Counting,
            Suite::Table,
            Suite::SpotValues,
            Suite::Palindromes,
            Suite::Ladders,
            Suite::FirstPositions,
        ]
        .into_iter()
        .flat_map(|s| run(s, engine))
        .collect(),
    }
}

fn counting() -> Vec<Check> {
    (1..=12)
        .map(|n| {
            let formula = count_solvable(n).expect("n is positive");
            let listed = enumerate_solvable(n).expect("n is positive").len() as u64;
            check(format!("count n={n}"), formula == listed, format!("formula {formula}, enumerated {listed}"))
        })
        .collect()
}

fn table(engine: &Engine) -> Vec<Check> {
    FamilyId::all_up_to(6)
        .into_iter()
        .map(|f| {
            let word = f.word().expect("in range");
            let want = f.value().expect("in range");
            let p = Position::parse(&word, BoardMode::Open).expect("binary word");
            let got = grundy(engine, &p, Variant::MultiHop);
            check(f.to_string(), got == want, format!("{word}: expected {want}, got {got}"))
        })
        .collect()
}

fn first_positions(engine: &Engine) -> Vec<Check> {
    let found = engine.first_positions(FIRST_POSITIONS.len() as u32 - 1, Variant::SingleHop, 19);
    found
        .iter()
        .zip(FIRST_POSITIONS)
        .enumerate()
        .map(|(g, (got, want))| {
            let passed = *got == SearchOutcome::Found(want.to_string());
            check(format!("first G={g}"), passed, format!("expected {want}, got {got:?}"))
        })
        .collect()
}

fn spot_values(engine: &Engine) -> Vec<Check> {
    [
        ("10110100101011", Variant::MultiHop, 5),
        ("11011100111011", Variant::MultiHop, 1),
        ("011110011110", Variant::MultiHop, 2),
        ("1011001101", Variant::SingleHop, 1),
    ]
    .into_iter()
    .map(|(w, v, want)| {
        let got = grundy(engine, &Position::parse(w, BoardMode::Fixed).expect("binary word"), v);
        check(format!("spot {w}"), got == NimValue(want), format!("expected {want}, got {got}"))
    })
    .collect()
}

fn palindromes(engine: &Engine) -> Vec<Check> {
    let mut out = Vec::new();
    for core in ["010010", "01100110"] {
        let mut bad = Vec::new();
        for len in 0..=5usize {
            for bits in 0..1u32 << len {
                let w: String = (0..len).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect();
                let r: String = w.chars().rev().collect();
                let word = format!("{w}{core}{r}");
                let p = Position::parse(&word, BoardMode::Fixed).expect("binary word");
                if !grundy(engine, &p, Variant::MultiHop).is_zero() {
                    bad.push(word);
                }
            }
        }
        out.push(check(format!("w {core} w^R"), bad.is_empty(), format!("{} non-zero", bad.len())));
    }
    out
}

fn ladders(engine: &Engine) -> Vec<Check> {
    let mut out: Vec<Check> = (0..=8)
        .map(|n| {
            let got = engine.ladder_value(n, Variant::MultiHop).unwrap_or(NimValue(u32::MAX));
            check(format!("ladder {}", ladder_word(n)), got == NimValue(n as u32 + 1), format!("got {got}"))
        })
        .collect();
    match engine.resolve_xor_indexing(4, Variant::MultiHop) {
        Ok(r) => out.push(check(
            "P exactly when (i+1)^(j+1)^(k+1) = 0",
            r.shifted_xor_matches,
            format!("{} P-triples, raw i^j^k reading matches: {}", r.p_triples.len(), r.raw_xor_matches),
        )),
        Err(e) => out.push(check("three ladders", false, e.to_string())),
    }
    out
}

fn grundy(engine: &Engine, p: &Position, v: Variant) -> NimValue {
    engine.grundy(p, v).unwrap_or(NimValue(u32::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let e = Engine::new();
        for s in [Suite::SpotValues, Suite::Palindromes, Suite::Ladders] {
            for c in run(s, &e) {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
