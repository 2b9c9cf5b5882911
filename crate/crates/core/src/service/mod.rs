//! Command line, HTTP API and the on-disk value cache.

pub mod api;
pub mod cache;
pub mod cli;
pub mod verify;
