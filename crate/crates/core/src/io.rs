//! Text and JSON formats for polyominoes.
//!
//! Text: lines over `#` (cell) and `.` (gap); the last line is the bottom
//! row (y = 0). JSON: `{"cells": [[x, y], ...]}`. Both parsers reject
//! disconnected input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{GridError, Polyomino};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} (expected '#' or '.')")]
    BadChar(char),
    #[error("no cells in input")]
    NoCells,
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("bad JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    cells: Vec<(i64, i64)>,
}

/// Parses the `#`/`.` grid format. Blank lines and trailing whitespace-only
/// lines are ignored; rows need not be padded to equal length.
pub fn parse_grid(text: &str) -> Result<Polyomino, ParseError> {
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty())
        .collect();
    let mut cells = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let y = (rows.len() - 1 - i) as i64;
        for (x, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push((x as i64, y)),
                '.' => {}
                other => return Err(ParseError::BadChar(other)),
            }
        }
    }
    if cells.is_empty() {
        return Err(ParseError::NoCells);
    }
    Ok(Polyomino::normalize(cells)?)
}

/// Renders the grid format, top row first, bottom row (y = 0) last.
pub fn to_grid(p: &Polyomino) -> String {
    let (m, n) = p.bounding_box();
    let mut out = String::new();
    for y in (0..n).rev() {
        for x in 0..m {
            out.push(if p.contains(crate::grid::Cell::new(x, y)) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}

pub fn parse_json(text: &str) -> Result<Polyomino, ParseError> {
    let raw: JsonPoly = serde_json::from_str(text)?;
    if raw.cells.is_empty() {
        return Err(ParseError::NoCells);
    }
    Ok(Polyomino::normalize(raw.cells)?)
}

pub fn to_json(p: &Polyomino) -> String {
    let cells: Vec<(i64, i64)> = p.cells().iter().map(|c| (c.x as i64, c.y as i64)).collect();
    serde_json::to_string(&JsonPoly { cells }).expect("cell list serializes")
}

/// Parses either format: JSON when the input starts with `{`.
pub fn parse_auto(text: &str) -> Result<Polyomino, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_grid(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let p = parse_grid("#.#\n###\n##.").unwrap();
        assert_eq!(p.rank(), 7);
        assert_eq!(parse_grid(&to_grid(&p)).unwrap(), p);
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(matches!(parse_grid("##x"), Err(ParseError::BadChar('x'))));
        assert!(matches!(parse_grid("...\n..."), Err(ParseError::NoCells)));
        assert!(matches!(
            parse_grid("#.#"),
            Err(ParseError::Grid(GridError::Disconnected))
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = parse_grid("##\n##").unwrap();
        let s = to_json(&p);
        assert_eq!(parse_json(&s).unwrap(), p);
        assert!(matches!(
            parse_json(r#"{"cells": [[0,0],[2,0]]}"#),
            Err(ParseError::Grid(GridError::Disconnected))
        ));
        assert!(parse_auto(&s).is_ok());
    }
}
