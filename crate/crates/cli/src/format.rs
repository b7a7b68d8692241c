//! Text and JSON encodings of assignments.
//!
//! Grid text is `m` lines of `n` whitespace-separated tokens, each token the
//! ascending color digits of a cell or `0` when it is empty. JSON is
//! `{"m":..,"n":..,"k":..,"cells":[[[colors]..]..]}` in row-major order.

use std::fmt::Write as _;

use rainbow_torus::{Assignment, ColorSet, Dims};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Grid,
    Json,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {msg}")]
    At { line: usize, column: usize, msg: String },
    #[error("{0}")]
    Shape(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

fn at(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError::At { line, column, msg: msg.into() }
}

pub fn to_grid(a: &Assignment) -> String {
    let mut out = String::new();
    for row in a.rows() {
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{c}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_token(tok: &str, k: usize) -> Result<ColorSet, String> {
    if tok == "0" {
        return Ok(ColorSet::EMPTY);
    }
    let mut set = ColorSet::EMPTY;
    let mut last = 0u8;
    for ch in tok.chars() {
        let Some(d) = ch.to_digit(10) else {
            return Err(format!("unexpected character {ch:?} in token {tok:?}"));
        };
        let d = d as u8;
        if d == 0 || usize::from(d) > k {
            return Err(format!("color {d} outside 1..={k} in token {tok:?}"));
        }
        if d <= last {
            return Err(format!("colors in token {tok:?} must be strictly ascending"));
        }
        last = d;
        set = set.union(ColorSet::singleton(d));
    }
    Ok(set)
}

/// Parses grid text for rainbow order `k`. Blank lines are skipped; lines and
/// columns in errors are 1-based.
pub fn parse_grid(text: &str, k: usize) -> Result<Assignment, ParseError> {
    let mut rows: Vec<Vec<ColorSet>> = Vec::new();
    let mut first_line = 0;
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            let offset = line[col..].find(tok).unwrap() + col;
            col = offset + tok.len();
            row.push(parse_token(tok, k).map_err(|e| at(ln + 1, offset + 1, e))?);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(at(
                    ln + 1,
                    1,
                    format!("row has {} cells but line {} has {}", row.len(), first_line + 1, first.len()),
                ));
            }
        } else {
            first_line = ln;
        }
        rows.push(row);
    }
    let dims =
        Dims::new(rows.len(), rows.first().map_or(0, Vec::len), k).map_err(|e| ParseError::Shape(e.to_string()))?;
    Assignment::from_cells(dims, rows.concat()).map_err(|e| ParseError::Shape(e.to_string()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentJson {
    m: usize,
    n: usize,
    k: usize,
    cells: Vec<Vec<Vec<u8>>>,
}

pub fn to_json_value(a: &Assignment) -> serde_json::Value {
    let d = a.dims();
    let cells = a.rows().map(|r| r.iter().map(|c| c.colors().collect()).collect()).collect();
    serde_json::to_value(AssignmentJson { m: d.m, n: d.n, k: d.k_colors, cells }).unwrap()
}

pub fn to_json(a: &Assignment) -> String {
    to_json_value(a).to_string()
}

pub fn parse_json(text: &str) -> Result<Assignment, ParseError> {
    let raw: AssignmentJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let dims = Dims::new(raw.m, raw.n, raw.k).map_err(|e| ParseError::Shape(e.to_string()))?;
    if raw.cells.len() != raw.m {
        return Err(ParseError::Shape(format!("expected {} rows, got {}", raw.m, raw.cells.len())));
    }
    let mut cells = Vec::with_capacity(dims.vertices());
    for (i, row) in raw.cells.iter().enumerate() {
        if row.len() != raw.n {
            return Err(ParseError::Shape(format!("row {i} has {} cells, expected {}", row.len(), raw.n)));
        }
        for (j, colors) in row.iter().enumerate() {
            let mut set = ColorSet::EMPTY;
            for &c in colors {
                if c == 0 || usize::from(c) > raw.k || set.contains(c) {
                    return Err(ParseError::Shape(format!("cell ({i}, {j}): bad color list {colors:?}")));
                }
                set = set.union(ColorSet::singleton(c));
            }
            cells.push(set);
        }
    }
    Assignment::from_cells(dims, cells).map_err(|e| ParseError::Shape(e.to_string()))
}

pub fn render(a: &Assignment, format: Format) -> String {
    match format {
        Format::Grid => to_grid(a),
        Format::Json => to_json(a) + "\n",
    }
}

pub fn parse(text: &str, format: Format, k: usize) -> Result<Assignment, ParseError> {
    match format {
        Format::Grid => parse_grid(text, k),
        Format::Json => parse_json(text),
    }
}
