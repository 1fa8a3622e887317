//! Literal placement tables for the fixed pieces of each construction.
//!
//! Each table is written for one concrete size (the size it was drawn at)
//! and carries an anchor saying which edge of the square it is glued to, so
//! it can be slid into place for any other size. Repeating arm units are
//! kept separately and stepped by 4 cells.

use crate::grid::{Axis, BoundingBox, Cell, Region, TPlacement, Tiling};

type Cells4 = [(i32, i32); 4];

#[derive(Debug, Clone, Copy)]
enum Anchor {
    Origin,
    /// Rows move with the top edge.
    Top,
    /// Columns move with the right edge.
    Right,
}

fn piece(cells: &Cells4) -> TPlacement {
    TPlacement::from_cells(cells.map(|(r, c)| Cell::new(r, c)))
}

fn anchored(table: &[(Cells4, Anchor)], shift: i32) -> impl Iterator<Item = TPlacement> + '_ {
    table.iter().map(move |(cells, anchor)| {
        let p = piece(cells);
        match anchor {
            Anchor::Origin => p,
            Anchor::Top => p.translate(shift, 0),
            Anchor::Right => p.translate(0, shift),
        }
    })
}

const PINWHEEL: [Cells4; 4] = [
    [(0, 0), (0, 1), (0, 2), (1, 1)],
    [(0, 3), (1, 3), (2, 3), (1, 2)],
    [(3, 1), (3, 2), (3, 3), (2, 2)],
    [(1, 0), (2, 0), (3, 0), (2, 1)],
];

/// The four T's of the 4×4 pinwheel, translated by `(dr, dc)`.
pub(crate) fn pinwheel(dr: i32, dc: i32) -> impl Iterator<Item = TPlacement> {
    PINWHEEL.iter().map(move |c| piece(c).translate(dr, dc))
}

// L-strip around a 4×4 block sitting at rows 2..6, columns 0..4, drawn at
// outer size 6.
const LSTRIP_SIZE: i32 = 6;
const LSTRIP_T: [(Cells4, Anchor); 4] = [
    ([(1, 1), (1, 2), (1, 3), (0, 2)], Anchor::Origin),
    ([(0, 3), (0, 4), (0, 5), (1, 4)], Anchor::Origin),
    ([(1, 5), (2, 5), (3, 5), (2, 4)], Anchor::Right),
    ([(3, 4), (4, 4), (5, 4), (4, 5)], Anchor::Right),
];

/// Monominoes of the L-strip of outer side `n`: three at the bottom-left
/// corner, one at the top-right.
pub(crate) fn lstrip_monominoes(n: u32) -> [Cell; 4] {
    let last = n as i32 - 1;
    [Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 0), Cell::new(last, last)]
}

/// The four T's closing both arms of the L-strip of outer side `n >= 6`.
pub(crate) fn lstrip_corner_pieces(n: u32) -> impl Iterator<Item = TPlacement> {
    anchored(&LSTRIP_T, n as i32 - LSTRIP_SIZE)
}

/// The 6×6 L-strip exactly as drawn: 4 T's and 4 monominoes on
/// `LStrip(6, 4)`.
pub fn lstrip_corner_gadget() -> Tiling {
    Tiling::new(
        Region::lstrip(6, 4).expect("valid strip"),
        lstrip_corner_pieces(6).collect(),
        lstrip_monominoes(6).to_vec(),
    )
}

const A3_T: Cells4 = [(2, 0), (2, 1), (2, 2), (1, 1)];
const A3_MONO: (i32, i32) = (1, 2);

pub fn a3_base() -> Tiling {
    Tiling::new(
        Region::an(3).expect("valid A_3"),
        vec![piece(&A3_T)],
        vec![Cell::new(A3_MONO.0, A3_MONO.1)],
    )
}

const A5_T: [Cells4; 5] = [
    [(2, 0), (3, 0), (4, 0), (3, 1)],
    [(4, 1), (4, 2), (4, 3), (3, 2)],
    [(0, 2), (1, 2), (2, 2), (1, 1)],
    [(0, 3), (1, 3), (2, 3), (1, 4)],
    [(2, 4), (3, 4), (4, 4), (3, 3)],
];
const A5_MONO: (i32, i32) = (2, 1);

/// Five T's and one interior monomino on `A_5`.
pub fn a5_base() -> Tiling {
    Tiling::new(
        Region::an(5).expect("valid A_5"),
        A5_T.iter().map(piece).collect(),
        vec![Cell::new(A5_MONO.0, A5_MONO.1)],
    )
}

// A_{4k+1} -> transposed A_{4k+3}. The old tiling moves to (2, 2); the new
// pieces fill two columns on the left and two rows at the bottom. Drawn at
// size 11 (k = 2).
const ONES_SIZE: i32 = 11;
const ONES_FIXED: [(Cells4, Anchor); 6] = [
    ([(8, 1), (9, 1), (10, 1), (9, 0)], Anchor::Top),
    ([(2, 0), (3, 0), (4, 0), (3, 1)], Anchor::Origin),
    ([(2, 1), (2, 2), (2, 3), (3, 2)], Anchor::Origin),
    ([(1, 1), (1, 2), (1, 3), (0, 2)], Anchor::Origin),
    ([(0, 7), (0, 8), (0, 9), (1, 8)], Anchor::Right),
    ([(0, 10), (1, 10), (2, 10), (1, 9)], Anchor::Right),
];
const ONES_LEFT_UNIT: [Cells4; 2] = [
    [(4, 1), (5, 1), (6, 1), (5, 0)],
    [(6, 0), (7, 0), (8, 0), (7, 1)],
];
const ONES_BOTTOM_UNIT: [Cells4; 2] = [
    [(0, 3), (0, 4), (0, 5), (1, 4)],
    [(1, 5), (1, 6), (1, 7), (0, 6)],
];

/// Offset of the old tiling inside the `A_{4k+1} -> A_{4k+3}` extension.
pub(crate) const ONES_OFFSET: (i32, i32) = (2, 2);

/// New pieces of the `A_{4k+1} -> A_{4k+3}` extension, `k >= 1`:
/// `4k + 2` T's, `k - 1` repeats of each arm unit.
pub(crate) fn ones_pieces(k: u32) -> Vec<TPlacement> {
    let size = 4 * k as i32 + 3;
    let mut out: Vec<TPlacement> = anchored(&ONES_FIXED, size - ONES_SIZE).collect();
    for j in 0..k.saturating_sub(1) as i32 {
        out.extend(ONES_LEFT_UNIT.iter().map(|c| piece(c).translate(4 * j, 0)));
        out.extend(ONES_BOTTOM_UNIT.iter().map(|c| piece(c).translate(0, 4 * j)));
    }
    out
}

// A_{4k+3} -> anti-transposed A_{4k+5}. The old tiling moves up by 2; the new
// pieces fill two rows at the bottom and two columns on the right. Drawn at
// size 9 (k = 1).
const THREES_SIZE: i32 = 9;
const THREES_FIXED: [(Cells4, Anchor); 4] = [
    ([(1, 0), (2, 0), (3, 0), (2, 1)], Anchor::Origin),
    ([(0, 0), (0, 1), (0, 2), (1, 1)], Anchor::Origin),
    ([(1, 6), (1, 7), (1, 8), (0, 7)], Anchor::Right),
    ([(2, 6), (2, 7), (2, 8), (3, 7)], Anchor::Right),
];
const THREES_BOTTOM_UNIT: [Cells4; 2] = [
    [(1, 2), (1, 3), (1, 4), (0, 3)],
    [(0, 4), (0, 5), (0, 6), (1, 5)],
];
const THREES_RIGHT_UNIT: [Cells4; 2] = [
    [(3, 8), (4, 8), (5, 8), (4, 7)],
    [(5, 7), (6, 7), (7, 7), (6, 8)],
];

pub(crate) const THREES_OFFSET: (i32, i32) = (2, 0);

/// New pieces of the `A_{4k+3} -> A_{4k+5}` extension, `k >= 0`:
/// `4k + 4` T's, `k` repeats of each arm unit.
pub(crate) fn threes_pieces(k: u32) -> Vec<TPlacement> {
    let size = 4 * k as i32 + 5;
    let shift = size - THREES_SIZE;
    let mut out: Vec<TPlacement> = anchored(&THREES_FIXED, shift).collect();
    for j in 0..k as i32 {
        out.extend(THREES_BOTTOM_UNIT.iter().map(|c| piece(c).translate(0, 4 * j)));
        out.extend(THREES_RIGHT_UNIT.iter().map(|c| piece(c).translate(4 * j, shift)));
    }
    out
}

/// `A_n` reflected about `axis` through its bounding square.
pub(crate) fn reflected_an(n: u32, axis: Axis) -> Region {
    let last = n as i32 - 1;
    let bbox = BoundingBox { min_row: 0, min_col: 0, max_row: last, max_col: last };
    let base = Region::an(n).expect("odd n >= 3");
    Region::explicit(base.cells().iter().map(|&c| bbox.reflect(axis, c))).expect("in range")
}

fn extension_ring(size: u32, axis: Axis, offset: (i32, i32)) -> Region {
    let outer = reflected_an(size, axis);
    let inner: Vec<Cell> = Region::an(size - 2)
        .expect("odd size >= 3")
        .cells()
        .iter()
        .map(|c| c.offset(offset.0, offset.1))
        .collect();
    Region::explicit(outer.cells().iter().copied().filter(|c| !inner.contains(c))).expect("in range")
}

/// The pieces added by the `A_{4k+1}` extension, as a tiling of the ring
/// between the moved `A_{4k+1}` and the transposed `A_{4k+3}`.
pub fn ones_gadget(k: u32) -> Tiling {
    let size = 4 * k + 3;
    Tiling::new(extension_ring(size, Axis::MainDiagonal, ONES_OFFSET), ones_pieces(k), vec![])
}

/// The pieces added by the `A_{4k+3}` extension, as a tiling of the ring
/// between the moved `A_{4k+3}` and the anti-transposed `A_{4k+5}`.
pub fn threes_gadget(k: u32) -> Tiling {
    let size = 4 * k + 5;
    Tiling::new(extension_ring(size, Axis::AntiDiagonal, THREES_OFFSET), threes_pieces(k), vec![])
}
