//! The JSON tiling document.
//!
//! ```text
//! {
//!   "schema": 1,
//!   "region": {"kind": "square" | "an" | "lstrip" | "explicit", "n": int, "cells": [[r, c], ...]},
//!   "tetrominoes": [[[r, c], [r, c], [r, c], [r, c]], ...],
//!   "monominoes": [[r, c], ...],
//!   "trace": {"steps": [...]}
//! }
//! ```
//!
//! `n` is required for every kind but `explicit`, which lists its cells
//! instead. `trace` is optional. Emitted documents list pieces in canonical
//! order, one per line.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::constructions::ConstructionTrace;
use crate::grid::{Cell, Region, RegionKind, TPlacement, Tiling};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

/// A parsed document: the tiling plus its construction trace, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingDocument {
    pub tiling: Tiling,
    pub trace: Option<ConstructionTrace>,
}

#[derive(Deserialize)]
struct RawRegion {
    kind: String,
    n: Option<i64>,
    cells: Option<Vec<Vec<i64>>>,
}

#[derive(Deserialize)]
struct RawDocument {
    schema: u32,
    region: RawRegion,
    tetrominoes: Vec<Vec<Vec<i64>>>,
    monominoes: Vec<Vec<i64>>,
    trace: Option<ConstructionTrace>,
}

fn cell_text(c: Cell) -> String {
    format!("[{},{}]", c.row, c.col)
}

fn region_text(region: &Region) -> String {
    match region.kind() {
        RegionKind::Square(n) => format!(r#"{{"kind": "square", "n": {n}}}"#),
        RegionKind::An(n) => format!(r#"{{"kind": "an", "n": {n}}}"#),
        RegionKind::LStrip { outer, .. } => format!(r#"{{"kind": "lstrip", "n": {outer}}}"#),
        RegionKind::Explicit => {
            let cells: Vec<String> = region.cells().iter().map(|&c| cell_text(c)).collect();
            format!(r#"{{"kind": "explicit", "cells": [{}]}}"#, cells.join(","))
        }
    }
}

pub fn emit_json(t: &Tiling) -> String {
    emit_document(t, None)
}

pub fn emit_document(t: &Tiling, trace: Option<&ConstructionTrace>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"schema\": {SCHEMA_VERSION},");
    let _ = writeln!(out, "  \"region\": {},", region_text(t.region()));
    out.push_str("  \"tetrominoes\": [");
    for (i, p) in t.tetrominoes().iter().enumerate() {
        let cells: Vec<String> = p.cells().iter().map(|&c| cell_text(c)).collect();
        let sep = if i == 0 { "\n" } else { ",\n" };
        let _ = write!(out, "{sep}    [{}]", cells.join(","));
    }
    out.push_str(if t.t_count() == 0 { "],\n" } else { "\n  ],\n" });
    let monos: Vec<String> = t.monominoes().iter().map(|&c| cell_text(c)).collect();
    let _ = write!(out, "  \"monominoes\": [{}]", monos.join(","));
    if let Some(trace) = trace {
        let steps = serde_json::to_string(trace).expect("trace serializes");
        let _ = write!(out, ",\n  \"trace\": {steps}");
    }
    out.push_str("\n}\n");
    out
}

fn parse_cell(raw: &[i64], field: &str) -> Result<Cell, ParseError> {
    let [row, col] = raw else {
        return Err(field_err(field, format!("cell must be [row, col], got {} numbers", raw.len())));
    };
    let conv = |v: i64| i32::try_from(v).ok().filter(|v| *v >= 0);
    match (conv(*row), conv(*col)) {
        (Some(r), Some(c)) => Ok(Cell::new(r, c)),
        _ => Err(field_err(field, format!("coordinates must be non-negative 32-bit integers, got [{row}, {col}]"))),
    }
}

fn parse_region(raw: &RawRegion) -> Result<Region, ParseError> {
    let n = || -> Result<u32, ParseError> {
        let n = raw.n.ok_or_else(|| field_err("region.n", "missing side length"))?;
        u32::try_from(n)
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| field_err("region.n", format!("side must be positive, got {n}")))
    };
    let grid = |e: crate::grid::GridError| field_err("region", e.to_string());
    match raw.kind.as_str() {
        "square" => Region::square(n()?).map_err(grid),
        "an" => Region::an(n()?).map_err(grid),
        "lstrip" => {
            let n = n()?;
            if n < 2 {
                return Err(field_err("region.n", "L-strip needs n >= 2"));
            }
            Region::lstrip(n, n - 2).map_err(grid)
        }
        "explicit" => {
            let cells = raw.cells.as_ref().ok_or_else(|| field_err("region.cells", "explicit region needs cells"))?;
            let cells = cells
                .iter()
                .enumerate()
                .map(|(i, c)| parse_cell(c, &format!("region.cells[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Region::explicit(cells).map_err(grid)
        }
        other => Err(field_err("region.kind", format!("unknown region kind {other:?}"))),
    }
}

pub fn parse_document(text: &str) -> Result<TilingDocument, ParseError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.schema != SCHEMA_VERSION {
        return Err(field_err("schema", format!("unsupported schema {}, expected {SCHEMA_VERSION}", raw.schema)));
    }
    let region = parse_region(&raw.region)?;
    let tetrominoes = raw
        .tetrominoes
        .iter()
        .enumerate()
        .map(|(i, piece)| {
            let field = format!("tetrominoes[{i}]");
            if piece.len() != 4 {
                return Err(field_err(&field, format!("piece must have 4 cells, got {}", piece.len())));
            }
            let mut cells = [Cell::new(0, 0); 4];
            for (j, c) in piece.iter().enumerate() {
                cells[j] = parse_cell(c, &format!("{field}[{j}]"))?;
            }
            Ok(TPlacement::from_cells(cells))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let monominoes = raw
        .monominoes
        .iter()
        .enumerate()
        .map(|(i, c)| parse_cell(c, &format!("monominoes[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TilingDocument {
        tiling: Tiling::new(region, tetrominoes, monominoes),
        trace: raw.trace,
    })
}

pub fn parse_json(text: &str) -> Result<Tiling, ParseError> {
    parse_document(text).map(|d| d.tiling)
}
