//! Set-theoretic checking of a [`Tiling`] against its region.
//!
//! Nothing here looks at how a tiling was produced; pieces are reduced to
//! their cells and compared with the region's cells.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::grid::{Cell, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceKind {
    Tetromino,
    Monomino,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadPiece {
    pub kind: PieceKind,
    /// Index into the tiling's tetromino or monomino list.
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub cells_total: usize,
    pub cells_covered: usize,
    pub overlaps: Vec<Cell>,
    pub gaps: Vec<Cell>,
    pub bad_pieces: Vec<BadPiece>,
    pub t_count: usize,
    pub mono_count: usize,
}

/// True iff `cells` are four distinct cells forming a T: one of them is
/// edge-adjacent to each of the other three.
pub fn is_t_shape(cells: &[Cell]) -> bool {
    let distinct: BTreeSet<Cell> = cells.iter().copied().collect();
    if cells.len() != 4 || distinct.len() != 4 {
        return false;
    }
    // Among tetrominoes only the T has a cell of degree 3.
    cells
        .iter()
        .any(|&hub| cells.iter().filter(|&&c| c.is_adjacent(hub)).count() == 3)
}

pub fn verify(t: &Tiling) -> VerificationReport {
    let region = t.region().cells();
    let mut cover: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut bad_pieces = Vec::new();

    for (index, piece) in t.tetrominoes().iter().enumerate() {
        let cells = piece.cells();
        if !is_t_shape(cells) {
            bad_pieces.push(BadPiece {
                kind: PieceKind::Tetromino,
                index,
                reason: "cells do not form a T-tetromino".into(),
            });
        }
        for &c in cells.iter().collect::<BTreeSet<_>>() {
            *cover.entry(c).or_default() += 1;
            if !region.contains(&c) {
                bad_pieces.push(BadPiece {
                    kind: PieceKind::Tetromino,
                    index,
                    reason: format!("cell {c} lies outside the region"),
                });
            }
        }
    }
    for (index, &c) in t.monominoes().iter().enumerate() {
        *cover.entry(c).or_default() += 1;
        if !region.contains(&c) {
            bad_pieces.push(BadPiece {
                kind: PieceKind::Monomino,
                index,
                reason: format!("cell {c} lies outside the region"),
            });
        }
    }

    let overlaps: Vec<Cell> = cover.iter().filter(|(_, &k)| k > 1).map(|(&c, _)| c).collect();
    let gaps: Vec<Cell> = region.iter().filter(|c| !cover.contains_key(c)).copied().collect();
    let cells_covered = region.iter().filter(|c| cover.contains_key(c)).count();
    let t_count = t.t_count();
    let mono_count = t.mono_count();
    let valid = overlaps.is_empty()
        && gaps.is_empty()
        && bad_pieces.is_empty()
        && 4 * t_count + mono_count == region.len();

    VerificationReport {
        valid,
        cells_total: region.len(),
        cells_covered,
        overlaps,
        gaps,
        bad_pieces,
        t_count,
        mono_count,
    }
}
