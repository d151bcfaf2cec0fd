//! Plain-text dense matrix files.
//!
//! ```text
//! # optional comment lines
//! 2 3
//! 1.0 2.0 3.0
//! 4.0 5.0 6.0
//! ```
//!
//! Values are written with 17 significant digits, which round-trips every
//! finite `f64` exactly.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::matkernel::Matrix;

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_matrix(&text).map_err(|message| Error::Parse {
        path: path.to_path_buf(),
        message,
    })
}

pub fn write_matrix(path: &Path, m: &Matrix, comment: Option<&str>) -> Result<()> {
    fs::write(path, format_matrix(m, comment)).map_err(|e| Error::io(path, e))
}

pub fn format_matrix(m: &Matrix, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> std::result::Result<Matrix, String> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) = lines.next().ok_or("missing `rows cols` header")?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims[..] else {
        return Err(format!("line {lineno}: expected `rows cols`, got `{header}`"));
    };
    let parse_dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("line {lineno}: bad dimension `{s}`"))
    };
    let (rows, cols) = (parse_dim(r)?, parse_dim(c)?);
    if rows == 0 || cols == 0 {
        return Err(format!("line {lineno}: empty matrix {rows}x{cols}"));
    }

    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (lineno, line) in lines {
        if seen == rows {
            return Err(format!("line {lineno}: more than {rows} data rows"));
        }
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| format!("line {lineno}: bad number `{tok}`"))?;
            if !v.is_finite() {
                return Err(format!("line {lineno}: non-finite value `{tok}`"));
            }
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(format!(
                "line {lineno}: expected {cols} values, found {}",
                data.len() - before
            ));
        }
        seen += 1;
    }
    if seen != rows {
        return Err(format!("expected {rows} data rows, found {seen}"));
    }
    Matrix::from_row_major(rows, cols, data).map_err(|e| e.to_string())
}
