//! Cells, regions, T placements and tilings.
//!
//! Coordinates are `(row, col)` with row 0 at the bottom of the picture and
//! column 0 at the left, so a picture drawn with a bottom-left origin maps
//! `(x, y)` to `Cell { row: y, col: x }`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("cell ({row}, {col}) has a negative coordinate")]
    NegativeCoordinate { row: i64, col: i64 },
    #[error("invalid region: {0}")]
    InvalidRegion(String),
}

/// A lattice square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn offset(self, dr: i32, dc: i32) -> Self {
        Cell::new(self.row + dr, self.col + dc)
    }

    pub fn is_nonnegative(self) -> bool {
        self.row >= 0 && self.col >= 0
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.row - other.row).abs() + (self.col - other.col).abs() == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Direction the stem of a T points, relative to its bar.
///
/// `StemUp`/`StemDown` have a horizontal bar, `StemLeft`/`StemRight` a
/// vertical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    StemUp,
    StemDown,
    StemLeft,
    StemRight,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::StemUp,
        Orientation::StemDown,
        Orientation::StemLeft,
        Orientation::StemRight,
    ];

    pub fn reflect(self, axis: Axis) -> Orientation {
        use Orientation::*;
        match (axis, self) {
            (Axis::Horizontal, StemUp) => StemDown,
            (Axis::Horizontal, StemDown) => StemUp,
            (Axis::Vertical, StemLeft) => StemRight,
            (Axis::Vertical, StemRight) => StemLeft,
            (Axis::Horizontal | Axis::Vertical, o) => o,
            (Axis::MainDiagonal, StemUp) => StemRight,
            (Axis::MainDiagonal, StemRight) => StemUp,
            (Axis::MainDiagonal, StemDown) => StemLeft,
            (Axis::MainDiagonal, StemLeft) => StemDown,
            (Axis::AntiDiagonal, StemUp) => StemLeft,
            (Axis::AntiDiagonal, StemLeft) => StemUp,
            (Axis::AntiDiagonal, StemDown) => StemRight,
            (Axis::AntiDiagonal, StemRight) => StemDown,
        }
    }

    /// Quarter turn counter-clockwise.
    pub fn rotate(self) -> Orientation {
        use Orientation::*;
        match self {
            StemUp => StemLeft,
            StemLeft => StemDown,
            StemDown => StemRight,
            StemRight => StemUp,
        }
    }
}

/// Mirror lines for [`reflect_tiling`], taken through the centre of the
/// region's bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Flips rows.
    Horizontal,
    /// Flips columns.
    Vertical,
    /// Swaps rows and columns.
    MainDiagonal,
    /// Swaps rows and columns and flips both.
    AntiDiagonal,
}

impl Axis {
    pub const ALL: [Axis; 4] = [
        Axis::Horizontal,
        Axis::Vertical,
        Axis::MainDiagonal,
        Axis::AntiDiagonal,
    ];
}

/// The four cells of the T whose bar starts at `bar_start` (its lowest row or
/// column) and whose stem points along `orientation`.
pub fn t_cells(bar_start: Cell, orientation: Orientation) -> [Cell; 4] {
    let Cell { row: r, col: c } = bar_start;
    match orientation {
        Orientation::StemUp => [bar_start, Cell::new(r, c + 1), Cell::new(r, c + 2), Cell::new(r + 1, c + 1)],
        Orientation::StemDown => [bar_start, Cell::new(r, c + 1), Cell::new(r, c + 2), Cell::new(r - 1, c + 1)],
        Orientation::StemLeft => [bar_start, Cell::new(r + 1, c), Cell::new(r + 2, c), Cell::new(r + 1, c - 1)],
        Orientation::StemRight => [bar_start, Cell::new(r + 1, c), Cell::new(r + 2, c), Cell::new(r + 1, c + 1)],
    }
}

/// A four-cell piece. Pieces built through [`TPlacement::new`] are always
/// T-shaped; [`TPlacement::from_cells`] accepts any four cells so that a
/// parsed document can carry a malformed piece through to the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TPlacement {
    cells: [Cell; 4],
}

impl TPlacement {
    pub fn new(bar_start: Cell, orientation: Orientation) -> Self {
        TPlacement::from_cells(t_cells(bar_start, orientation))
    }

    pub fn from_cells(mut cells: [Cell; 4]) -> Self {
        cells.sort();
        TPlacement { cells }
    }

    /// Sorted cells.
    pub fn cells(&self) -> &[Cell; 4] {
        &self.cells
    }

    pub fn min_cell(&self) -> Cell {
        self.cells[0]
    }

    pub fn is_t_shape(&self) -> bool {
        self.recognize().is_some()
    }

    /// Recovers `(bar_start, orientation)` if the cells form a T.
    pub fn recognize(&self) -> Option<(Cell, Orientation)> {
        Orientation::ALL.into_iter().find_map(|o| {
            self.cells.iter().find_map(|&start| {
                (TPlacement::new(start, o).cells == self.cells).then_some((start, o))
            })
        })
    }

    pub fn map(&self, f: impl Fn(Cell) -> Cell) -> TPlacement {
        TPlacement::from_cells(self.cells.map(f))
    }

    pub fn translate(&self, dr: i32, dc: i32) -> TPlacement {
        self.map(|c| c.offset(dr, dc))
    }
}

/// Inclusive bounds of a set of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_row: i32,
    pub min_col: i32,
    pub max_row: i32,
    pub max_col: i32,
}

impl BoundingBox {
    pub fn of<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<BoundingBox> {
        let mut it = cells.into_iter();
        let first = *it.next()?;
        let mut b = BoundingBox {
            min_row: first.row,
            min_col: first.col,
            max_row: first.row,
            max_col: first.col,
        };
        for c in it {
            b.min_row = b.min_row.min(c.row);
            b.min_col = b.min_col.min(c.col);
            b.max_row = b.max_row.max(c.row);
            b.max_col = b.max_col.max(c.col);
        }
        Some(b)
    }

    pub fn height(&self) -> usize {
        (self.max_row - self.min_row + 1) as usize
    }

    pub fn width(&self) -> usize {
        (self.max_col - self.min_col + 1) as usize
    }

    /// Image of `c` under the reflection about `axis` through this box.
    pub fn reflect(&self, axis: Axis, c: Cell) -> Cell {
        match axis {
            Axis::Horizontal => Cell::new(self.min_row + self.max_row - c.row, c.col),
            Axis::Vertical => Cell::new(c.row, self.min_col + self.max_col - c.col),
            Axis::MainDiagonal => Cell::new(
                self.min_row + (c.col - self.min_col),
                self.min_col + (c.row - self.min_row),
            ),
            Axis::AntiDiagonal => Cell::new(
                self.min_row + (self.max_col - c.col),
                self.min_col + (self.max_row - c.row),
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    Square(u32),
    /// The odd square with `(0,0)`, `(0,1)`, `(1,0)` and `(0,n-1)` removed.
    An(u32),
    /// `Square(outer)` minus `Square(inner)` placed at rows `2..outer`,
    /// columns `0..inner`, leaving a width-2 strip along the bottom and the
    /// right-hand side.
    LStrip { outer: u32, inner: u32 },
    Explicit,
}

/// A finite set of cells to be covered. Cells are always materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    kind: RegionKind,
    cells: BTreeSet<Cell>,
}

fn square_cells(n: u32, dr: i32, dc: i32) -> impl Iterator<Item = Cell> {
    let n = n as i32;
    (0..n).flat_map(move |r| (0..n).map(move |c| Cell::new(r + dr, c + dc)))
}

impl Region {
    pub fn square(n: u32) -> Result<Region, GridError> {
        if n == 0 {
            return Err(GridError::InvalidRegion("square side must be positive".into()));
        }
        Ok(Region {
            kind: RegionKind::Square(n),
            cells: square_cells(n, 0, 0).collect(),
        })
    }

    pub fn an(n: u32) -> Result<Region, GridError> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(GridError::InvalidRegion(format!(
                "A_n needs an odd side of at least 3, got {n}"
            )));
        }
        let mut cells: BTreeSet<Cell> = square_cells(n, 0, 0).collect();
        for c in an_removed_cells(n) {
            cells.remove(&c);
        }
        Ok(Region {
            kind: RegionKind::An(n),
            cells,
        })
    }

    pub fn lstrip(outer: u32, inner: u32) -> Result<Region, GridError> {
        if outer != inner + 2 {
            return Err(GridError::InvalidRegion(format!(
                "L-strip needs outer = inner + 2, got outer {outer}, inner {inner}"
            )));
        }
        let mut cells: BTreeSet<Cell> = square_cells(outer, 0, 0).collect();
        for c in square_cells(inner, 2, 0) {
            cells.remove(&c);
        }
        Ok(Region {
            kind: RegionKind::LStrip { outer, inner },
            cells,
        })
    }

    pub fn explicit(cells: impl IntoIterator<Item = Cell>) -> Result<Region, GridError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(c) = cells.iter().find(|c| !c.is_nonnegative()) {
            return Err(GridError::NegativeCoordinate {
                row: c.row.into(),
                col: c.col.into(),
            });
        }
        Ok(Region {
            kind: RegionKind::Explicit,
            cells,
        })
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        BoundingBox::of(&self.cells)
    }

    /// Same cells, forgetting how the region was described.
    pub fn to_explicit(&self) -> Region {
        Region {
            kind: RegionKind::Explicit,
            cells: self.cells.clone(),
        }
    }

    /// Region for `cells`, named by its kind when the cells are exactly a
    /// square, an `A_n` or an L-strip at the origin.
    pub fn recognize(cells: BTreeSet<Cell>) -> Region {
        let kind = recognize_kind(&cells);
        Region { kind, cells }
    }

    fn remap(&self, cells: BTreeSet<Cell>) -> Region {
        if cells == self.cells {
            Region { kind: self.kind, cells }
        } else {
            Region::recognize(cells)
        }
    }
}

fn recognize_kind(cells: &BTreeSet<Cell>) -> RegionKind {
    let Some(b) = BoundingBox::of(cells) else {
        return RegionKind::Explicit;
    };
    if b.min_row != 0 || b.min_col != 0 || b.height() != b.width() {
        return RegionKind::Explicit;
    }
    let n = b.height() as u32;
    let len = cells.len() as u64;
    let sq = u64::from(n) * u64::from(n);
    if len == sq {
        return RegionKind::Square(n);
    }
    if n >= 3 && n % 2 == 1 && len + 4 == sq {
        if let Ok(r) = Region::an(n) {
            if &r.cells == cells {
                return r.kind;
            }
        }
    }
    if n >= 2 && len == sq - u64::from(n - 2).pow(2) {
        if let Ok(r) = Region::lstrip(n, n - 2) {
            if &r.cells == cells {
                return r.kind;
            }
        }
    }
    RegionKind::Explicit
}

/// Cells removed from `Square(n)` to form `A_n`.
pub fn an_removed_cells(n: u32) -> [Cell; 4] {
    let last = n as i32 - 1;
    [Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 0), Cell::new(0, last)]
}

/// A region with T pieces and monominoes placed on it.
///
/// Pieces are kept in canonical order: tetrominoes by their smallest cell,
/// monominoes by cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    region: Region,
    tetrominoes: Vec<TPlacement>,
    monominoes: Vec<Cell>,
}

impl Tiling {
    pub fn new(region: Region, mut tetrominoes: Vec<TPlacement>, mut monominoes: Vec<Cell>) -> Tiling {
        tetrominoes.sort();
        monominoes.sort();
        Tiling {
            region,
            tetrominoes,
            monominoes,
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn tetrominoes(&self) -> &[TPlacement] {
        &self.tetrominoes
    }

    pub fn monominoes(&self) -> &[Cell] {
        &self.monominoes
    }

    pub fn t_count(&self) -> usize {
        self.tetrominoes.len()
    }

    pub fn mono_count(&self) -> usize {
        self.monominoes.len()
    }

    pub fn into_parts(self) -> (Region, Vec<TPlacement>, Vec<Cell>) {
        (self.region, self.tetrominoes, self.monominoes)
    }

    /// Replaces the region, keeping the pieces.
    pub fn with_region(self, region: Region) -> Tiling {
        Tiling { region, ..self }
    }

    fn map_cells(&self, region: Region, f: impl Fn(Cell) -> Cell) -> Tiling {
        Tiling::new(
            region,
            self.tetrominoes.iter().map(|t| t.map(&f)).collect(),
            self.monominoes.iter().map(|&c| f(c)).collect(),
        )
    }
}

/// Mirror image of `t` within its region's bounding box.
pub fn reflect_tiling(t: &Tiling, axis: Axis) -> Tiling {
    let Some(bbox) = t.region.bounding_box() else {
        return t.clone();
    };
    let f = |c| bbox.reflect(axis, c);
    let region = t.region.remap(t.region.cells.iter().map(|&c| f(c)).collect());
    t.map_cells(region, f)
}

pub fn translate_tiling(t: &Tiling, dr: i32, dc: i32) -> Result<Tiling, GridError> {
    if dr == 0 && dc == 0 {
        return Ok(t.clone());
    }
    let f = |c: Cell| c.offset(dr, dc);
    let pieces = t
        .tetrominoes
        .iter()
        .flat_map(|p| p.cells().iter())
        .chain(t.monominoes.iter())
        .chain(t.region.cells.iter());
    if let Some(bad) = pieces.map(|&c| f(c)).find(|c| !c.is_nonnegative()) {
        return Err(GridError::NegativeCoordinate {
            row: bad.row.into(),
            col: bad.col.into(),
        });
    }
    let region = Region::recognize(t.region.cells.iter().map(|&c| f(c)).collect());
    Ok(t.map_cells(region, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(cells: &[(i32, i32)]) -> BTreeSet<Cell> {
        cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn t_cells_examples() {
        let up: BTreeSet<_> = t_cells(Cell::new(0, 0), Orientation::StemUp).into_iter().collect();
        assert_eq!(up, set(&[(0, 0), (0, 1), (0, 2), (1, 1)]));
        let down: BTreeSet<_> = t_cells(Cell::new(1, 0), Orientation::StemDown).into_iter().collect();
        assert_eq!(down, set(&[(1, 0), (1, 1), (1, 2), (0, 1)]));
    }

    #[test]
    fn recognize_round_trip() {
        for o in Orientation::ALL {
            for start in [Cell::new(3, 3), Cell::new(1, 1), Cell::new(5, 2)] {
                assert_eq!(TPlacement::new(start, o).recognize(), Some((start, o)));
            }
        }
    }

    #[test]
    fn region_sizes() {
        assert_eq!(Region::square(7).unwrap().len(), 49);
        assert_eq!(Region::an(5).unwrap().len(), 21);
        let a5 = Region::an(5).unwrap();
        for c in an_removed_cells(5) {
            assert!(!a5.contains(c));
        }
        assert_eq!(Region::lstrip(6, 4).unwrap().len(), 20);
        assert!(Region::an(4).is_err());
        assert!(Region::an(1).is_err());
        assert!(Region::lstrip(6, 3).is_err());
        assert!(Region::square(0).is_err());
        assert!(Region::explicit([Cell::new(-1, 0)]).is_err());
    }

    #[test]
    fn an_area_identity() {
        for m in 1..=30u32 {
            let r = Region::an(2 * m + 1).unwrap();
            assert_eq!(r.len() as u32, 4 * (m * m + m - 1) + 1);
        }
    }

    #[test]
    fn orientation_group_actions_are_permutations() {
        for axis in Axis::ALL {
            let image: BTreeSet<_> = Orientation::ALL.iter().map(|o| o.reflect(axis)).collect();
            assert_eq!(image.len(), 4);
            for o in Orientation::ALL {
                assert_eq!(o.reflect(axis).reflect(axis), o);
            }
        }
        for o in Orientation::ALL {
            assert_eq!(o.rotate().rotate().rotate().rotate(), o);
        }
    }

    #[test]
    fn reflection_of_piece_matches_orientation_reflection() {
        let bbox = BoundingBox { min_row: 0, min_col: 0, max_row: 9, max_col: 9 };
        for axis in Axis::ALL {
            for o in Orientation::ALL {
                let p = TPlacement::new(Cell::new(4, 4), o);
                let q = p.map(|c| bbox.reflect(axis, c));
                assert_eq!(q.recognize().map(|(_, o)| o), Some(o.reflect(axis)));
            }
        }
    }

    #[test]
    fn translate_rejects_negative() {
        let region = Region::square(2).unwrap();
        let t = Tiling::new(region.clone(), vec![], region.cells().iter().copied().collect());
        assert!(translate_tiling(&t, -1, 0).is_err());
        assert_eq!(translate_tiling(&t, 0, 0).unwrap(), t);
        let moved = translate_tiling(&t, 2, 3).unwrap();
        assert_eq!(moved.mono_count(), 4);
        assert!(moved.monominoes().contains(&Cell::new(2, 3)));
    }

    proptest! {
        #[test]
        fn t_cells_always_t_shaped(r in 1i32..50, c in 1i32..50, o in 0usize..4) {
            let cells = t_cells(Cell::new(r, c), Orientation::ALL[o]);
            let distinct: BTreeSet<_> = cells.iter().collect();
            prop_assert_eq!(distinct.len(), 4);
            prop_assert!(TPlacement::from_cells(cells).is_t_shape());
        }

        #[test]
        fn translate_inverse(dr in 0i32..20, dc in 0i32..20) {
            let region = Region::square(4).unwrap();
            let t = Tiling::new(region, vec![TPlacement::new(Cell::new(0, 0), Orientation::StemUp)], vec![Cell::new(3, 3)]);
            let there = translate_tiling(&t, dr, dc).unwrap();
            let back = translate_tiling(&there, -dr, -dc).unwrap();
            prop_assert_eq!(back.tetrominoes(), t.tetrominoes());
            prop_assert_eq!(back.monominoes(), t.monominoes());
            prop_assert_eq!(back.region().cells(), t.region().cells());
        }
    }
}
