//! File formats, a persistent extremal-number cache, parallel scans and the
//! `hdecomp` command line on top of [`hdecomp_core`].
//!
//! Formats written here:
//!
//! * graph lists: one graph6 string per line, `#` comments allowed;
//! * families: a graph list plus a JSON sidecar at `<path>.json`;
//! * the extremal cache: JSON lines, one record per line, append-only;
//! * decompositions: a versioned text file of `H ...` and `E u v` lines;
//! * pipeline reports: JSON with `format` and `version` keys.
//!
//! Every file is written through a temporary file and renamed into place,
//! so a failed command leaves no partial output.

pub mod builtins;
pub mod cache;
pub mod cli;
mod error;
pub mod formats;
pub mod io;
pub mod scan;
pub mod selftest;

pub use error::{Error, Result};
