//! Flat text file of stored Grundy values.
//!
//! One record per line, `<variant>|<mode>|<word>|<value>`, with variant
//! `s` or `m` and mode `f` or `o`. Records are written sorted.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::board::{parse_cells, BoardMode, Variant};
use crate::duotaire::{MemoRecord, MemoStore};
use crate::nim::NimValue;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cannot access cache file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

pub fn format_record(r: &MemoRecord) -> String {
    let v = match r.variant {
        Variant::SingleHop => 's',
        Variant::MultiHop => 'm',
    };
    let m = match r.mode {
        BoardMode::Fixed => 'f',
        BoardMode::Open => 'o',
    };
    format!("{v}|{m}|{}|{}", r.word, r.value)
}

/// Parses one line; `line` is 1-based and only used in errors.
pub fn parse_record(text: &str, line: usize) -> Result<MemoRecord, CacheError> {
    let bad = |reason: String| CacheError::Malformed { line, reason };
    let fields: Vec<&str> = text.split('|').collect();
    let [v, m, word, value] = fields[..] else {
        return Err(bad(format!("expected 4 fields, found {}", fields.len())));
    };
    let variant = match v {
        "s" => Variant::SingleHop,
        "m" => Variant::MultiHop,
        other => return Err(bad(format!("unknown variant {other:?}"))),
    };
    let mode = match m {
        "f" => BoardMode::Fixed,
        "o" => BoardMode::Open,
        other => return Err(bad(format!("unknown mode {other:?}"))),
    };
    // the empty board is a legal key
    if !word.is_empty() {
        parse_cells(word).map_err(|e| bad(e.to_string()))?;
    }
    let value = value.parse::<u32>().map_err(|e| bad(format!("bad value {value:?}: {e}")))?;
    Ok(MemoRecord { variant, mode, word: word.to_string(), value: NimValue(value) })
}

/// Reads every record. A missing file is an empty cache.
pub fn load(path: &Path) -> Result<Vec<MemoRecord>, CacheError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(source) => return Err(CacheError::Io { path: path.to_owned(), source }),
    };
    text.lines().enumerate().map(|(i, l)| parse_record(l, i + 1)).collect()
}

/// Writes the records sorted, replacing the file atomically.
pub fn store(path: &Path, records: &[MemoRecord]) -> Result<(), CacheError> {
    let io_err = |source| CacheError::Io { path: path.to_owned(), source };
    let mut sorted = records.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = io::BufWriter::new(fs::File::create(&tmp).map_err(io_err)?);
        for r in &sorted {
            writeln!(f, "{}", format_record(r)).map_err(io_err)?;
        }
        f.into_inner().map_err(|e| io_err(e.into_error()))?.sync_all().map_err(io_err)?;
    }
    fs::rename(&tmp, path).map_err(io_err)
}

/// Loads a cache file into `memo`, returning the number of records read.
pub fn warm(path: &Path, memo: &MemoStore) -> Result<usize, CacheError> {
    let records = load(path)?;
    for r in &records {
        let word = if r.word.is_empty() { Vec::new() } else { parse_cells(&r.word).expect("validated on load") };
        memo.insert(r.variant, r.mode, &word, r.value);
    }
    Ok(records.len())
}

pub fn persist(path: &Path, memo: &MemoStore) -> Result<(), CacheError> {
    store(path, &memo.records())
}
