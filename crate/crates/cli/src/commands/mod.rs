pub mod bench;
pub mod check;
pub mod generate;
pub mod profile;
pub mod solve;

use std::fs;
use std::path::Path;

use serde::Serialize;
use spdsolve::{Error, Result};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_MAX_ITER: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_NUMERICAL: u8 = 4;

pub fn exit_code(e: &Error) -> u8 {
    if e.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INVALID
    }
}

/// Pretty JSON to `out`, or to stdout when no path is given.
pub fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => fs::write(p, text + "\n").map_err(|e| Error::Io {
            path: p.to_path_buf(),
            source: e,
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
