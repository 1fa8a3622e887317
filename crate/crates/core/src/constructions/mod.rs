//! Explicit tilings of every square with the fewest monominoes.
//!
//! * `n = 4m`: an `m × m` array of 4×4 pinwheels.
//! * `n = 4m + 2`: the `4m` square in the top-left corner, with the width-2
//!   L-strip around it tiled by two friezes and four monominoes.
//! * odd `n`: a tiling of `A_n` with one monomino, grown two sizes at a time
//!   from `A_5`, plus the four cells `A_n` leaves out.
//!
//! Every construction is expressed as a [`ConstructionTrace`] and produced by
//! replaying it, so the trace always reproduces its tiling.

pub mod gadgets;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{an_removed_cells, translate_tiling, Axis, Cell, GridError, Region, RegionKind, TPlacement, Tiling};
use crate::verifier::verify;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0}")]
    BadArgument(String),
    #[error("input tiling does not fit the step: {0}")]
    BadInput(String),
    #[error(transparent)]
    Grid(#[from] GridError),
}

fn bad_arg(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::BadArgument(msg.into())
}

/// One step of a construction. Steps act on a working tiling, starting from
/// nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// The 1×1 square as a single monomino.
    Monomino,
    /// `blocks × blocks` array of 4×4 pinwheels.
    Base4x4 { blocks: u32 },
    /// Moves the `4m` square up by two and adds the L-strip's corner
    /// monominoes and, for `m >= 1`, the four T's closing its arms.
    ExtendL { m: u32 },
    /// Lengthens both L-strip arms by `repeats` frieze periods.
    FriezeRepeat { repeats: u32 },
    BaseA3,
    BaseA5,
    /// `A_{4k+1}` to transposed `A_{4k+3}`.
    ExtendOnes { k: u32 },
    /// `A_{4k+3}` to anti-transposed `A_{4k+5}`.
    ExtendThrees { k: u32 },
    Reflect { axis: AxisName },
    /// `A_n` to the full square, monominoes on the four missing cells.
    FillCorners,
}

/// Serializable mirror of [`Axis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisName {
    Horizontal,
    Vertical,
    MainDiagonal,
    AntiDiagonal,
}

impl From<AxisName> for Axis {
    fn from(a: AxisName) -> Axis {
        match a {
            AxisName::Horizontal => Axis::Horizontal,
            AxisName::Vertical => Axis::Vertical,
            AxisName::MainDiagonal => Axis::MainDiagonal,
            AxisName::AntiDiagonal => Axis::AntiDiagonal,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub steps: Vec<Step>,
}

impl ConstructionTrace {
    pub fn replay(&self) -> Result<Tiling, ConstructionError> {
        let mut state: Option<Tiling> = None;
        for &step in &self.steps {
            state = Some(apply(step, state.as_ref())?);
        }
        state.ok_or_else(|| bad_arg("empty trace"))
    }
}

fn require(state: Option<&Tiling>, step: Step) -> Result<&Tiling, ConstructionError> {
    state.ok_or_else(|| ConstructionError::BadInput(format!("{step:?} needs a previous step")))
}

fn apply(step: Step, state: Option<&Tiling>) -> Result<Tiling, ConstructionError> {
    match step {
        Step::Monomino => Ok(Tiling::new(Region::square(1)?, vec![], vec![Cell::new(0, 0)])),
        Step::Base4x4 { blocks } => pinwheel_array(blocks),
        Step::ExtendL { m } => extend_l(m, state),
        Step::FriezeRepeat { repeats } => add_friezes(repeats, require(state, step)?),
        Step::BaseA3 => Ok(gadgets::a3_base()),
        Step::BaseA5 => Ok(gadgets::a5_base()),
        Step::ExtendOnes { k } => {
            let t = require(state, step)?;
            check_an(t, 4 * k + 1)?;
            Ok(grow_ones(t, k))
        }
        Step::ExtendThrees { k } => {
            let t = require(state, step)?;
            check_an(t, 4 * k + 3)?;
            Ok(grow_threes(t, k))
        }
        Step::Reflect { axis } => Ok(crate::grid::reflect_tiling(require(state, step)?, axis.into())),
        Step::FillCorners => fill_corners(require(state, step)?),
    }
}

fn pinwheel_array(blocks: u32) -> Result<Tiling, ConstructionError> {
    if blocks == 0 {
        return Err(bad_arg("pinwheel array needs at least one block"));
    }
    let b = blocks as i32;
    let pieces = (0..b)
        .flat_map(|i| (0..b).flat_map(move |j| gadgets::pinwheel(4 * i, 4 * j)))
        .collect();
    Ok(Tiling::new(Region::square(4 * blocks)?, pieces, vec![]))
}

fn extend_l(m: u32, state: Option<&Tiling>) -> Result<Tiling, ConstructionError> {
    let n = 4 * m + 2;
    let mut pieces = Vec::new();
    if m > 0 {
        let inner = state.ok_or_else(|| ConstructionError::BadInput("ExtendL needs the 4m square".into()))?;
        if inner.region().kind() != RegionKind::Square(4 * m) {
            return Err(ConstructionError::BadInput(format!(
                "ExtendL {{ m: {m} }} expects Square({}), got {:?}",
                4 * m,
                inner.region().kind()
            )));
        }
        pieces.extend(translate_tiling(inner, 2, 0)?.tetrominoes().iter().copied());
        pieces.extend(gadgets::lstrip_corner_pieces(n));
    }
    Ok(Tiling::new(
        Region::square(n)?,
        pieces,
        gadgets::lstrip_monominoes(n).to_vec(),
    ))
}

fn add_friezes(repeats: u32, t: &Tiling) -> Result<Tiling, ConstructionError> {
    let RegionKind::Square(n) = t.region().kind() else {
        return Err(ConstructionError::BadInput("FriezeRepeat expects a square".into()));
    };
    if n % 4 != 2 || n < 6 + 4 * repeats {
        return Err(ConstructionError::BadInput(format!(
            "{repeats} frieze repeats do not fit a square of side {n}"
        )));
    }
    let strip = frieze_strip(4 * repeats as i64)?;
    let last = n as i32 - 1;
    let (region, mut pieces, monos) = t.clone().into_parts();
    // bottom arm continues to the right of the corner pair, right arm upward
    pieces.extend(strip.iter().map(|p| p.translate(0, 5)));
    pieces.extend(strip.iter().map(|p| p.map(|c| Cell::new(c.col + 5, last - 1 + c.row))));
    Ok(Tiling::new(region, pieces, monos))
}

fn check_an(t: &Tiling, n: u32) -> Result<(), ConstructionError> {
    if t.region().kind() != RegionKind::An(n) {
        return Err(ConstructionError::BadInput(format!(
            "expected a tiling of A_{n}, got region {:?}",
            t.region().kind()
        )));
    }
    Ok(())
}

fn check_valid(t: &Tiling) -> Result<(), ConstructionError> {
    let report = verify(t);
    if report.valid {
        Ok(())
    } else {
        Err(ConstructionError::BadInput(format!(
            "tiling fails verification ({} overlaps, {} gaps, {} bad pieces)",
            report.overlaps.len(),
            report.gaps.len(),
            report.bad_pieces.len()
        )))
    }
}

/// Periodic tiling of a width-2 strip by interlocking T's.
///
/// Each period is two T's covering columns `0..=3` of row 1 and `1..=4` of
/// row 0; `length` is the number of columns gained and must be a multiple
/// of 4.
pub fn frieze_strip(length: i64) -> Result<Vec<TPlacement>, ConstructionError> {
    if length < 0 || length % 4 != 0 {
        return Err(bad_arg(format!("frieze length must be a non-negative multiple of 4, got {length}")));
    }
    Ok((0..(length / 4) as i32)
        .flat_map(|j| {
            let c = 4 * j;
            [
                TPlacement::from_cells([Cell::new(1, c), Cell::new(1, c + 1), Cell::new(1, c + 2), Cell::new(0, c + 1)]),
                TPlacement::from_cells([Cell::new(0, c + 2), Cell::new(0, c + 3), Cell::new(0, c + 4), Cell::new(1, c + 3)]),
            ]
        })
        .collect())
}

fn positive(v: i64, what: &str) -> Result<u32, ConstructionError> {
    u32::try_from(v).ok().filter(|&v| v > 0).ok_or_else(|| bad_arg(format!("{what} must be positive, got {v}")))
}

fn odd_side(n: i64) -> Result<u32, ConstructionError> {
    match u32::try_from(n) {
        Ok(n) if n >= 3 && n % 2 == 1 => Ok(n),
        _ => Err(bad_arg(format!("side must be odd and at least 3, got {n}"))),
    }
}

/// Steps building `A_n` (canonical orientation) for odd `n >= 3`.
fn plan_a(n: u32) -> Vec<Step> {
    if n == 3 {
        return vec![Step::BaseA3];
    }
    let mut steps = vec![Step::BaseA5];
    let mut side = 5;
    while side < n {
        if side % 4 == 1 {
            steps.push(Step::ExtendOnes { k: (side - 1) / 4 });
            steps.push(Step::Reflect { axis: AxisName::MainDiagonal });
        } else {
            steps.push(Step::ExtendThrees { k: (side - 3) / 4 });
            steps.push(Step::Reflect { axis: AxisName::AntiDiagonal });
        }
        side += 2;
    }
    steps
}

/// Steps tiling `Square(n)`.
pub fn plan(n: i64) -> Result<ConstructionTrace, ConstructionError> {
    let n = positive(n, "side")?;
    let steps = match n {
        1 => vec![Step::Monomino],
        2 => vec![Step::ExtendL { m: 0 }],
        _ if n % 4 == 0 => vec![Step::Base4x4 { blocks: n / 4 }],
        _ if n % 4 == 2 => {
            let m = n / 4;
            let mut s = vec![Step::Base4x4 { blocks: m }, Step::ExtendL { m }];
            if m > 1 {
                s.push(Step::FriezeRepeat { repeats: m - 1 });
            }
            s
        }
        _ => {
            let mut s = plan_a(n);
            s.push(Step::FillCorners);
            s
        }
    };
    Ok(ConstructionTrace { steps })
}

/// Tiling of `Square(n)` together with the trace that built it.
pub fn construct(n: i64) -> Result<(Tiling, ConstructionTrace), ConstructionError> {
    let trace = plan(n)?;
    Ok((trace.replay()?, trace))
}

pub fn tile_square_4m(m: i64) -> Result<Tiling, ConstructionError> {
    let m = positive(m, "m")?;
    pinwheel_array(m)
}

pub fn tile_square_4m2(m: i64) -> Result<Tiling, ConstructionError> {
    if m < 0 {
        return Err(bad_arg(format!("m must be non-negative, got {m}")));
    }
    plan(4 * m + 2)?.replay()
}

/// Tiling of canonical `A_n` with `m² + m - 1` T's and one monomino,
/// `n = 2m + 1`.
pub fn tile_a(n: i64) -> Result<Tiling, ConstructionError> {
    let n = odd_side(n)?;
    ConstructionTrace { steps: plan_a(n) }.replay()
}

/// Extends a tiling of `A_{4k+1}` to one of `A_{4k+3}` reflected about the
/// main diagonal, adding `4k + 2` T's.
pub fn extend_a_ones(t: &Tiling) -> Result<Tiling, ConstructionError> {
    let n = match t.region().kind() {
        RegionKind::An(n) if n % 4 == 1 => n,
        other => return Err(ConstructionError::BadInput(format!("expected A_(4k+1), got {other:?}"))),
    };
    check_valid(t)?;
    Ok(grow_ones(t, (n - 1) / 4))
}

/// Extends a tiling of `A_{4k+3}` to one of `A_{4k+5}` reflected about the
/// anti-diagonal, adding `4k + 4` T's.
pub fn extend_a_threes(t: &Tiling) -> Result<Tiling, ConstructionError> {
    let n = match t.region().kind() {
        RegionKind::An(n) if n % 4 == 3 => n,
        other => return Err(ConstructionError::BadInput(format!("expected A_(4k+3), got {other:?}"))),
    };
    check_valid(t)?;
    Ok(grow_threes(t, (n - 3) / 4))
}

/// Old pieces shifted by `offset` plus `new`, on `region`.
fn grow(t: &Tiling, offset: (i32, i32), new: Vec<TPlacement>, region: Region) -> Tiling {
    let (dr, dc) = offset;
    let mut pieces: Vec<TPlacement> = t.tetrominoes().iter().map(|p| p.translate(dr, dc)).collect();
    pieces.extend(new);
    let monos = t.monominoes().iter().map(|c| c.offset(dr, dc)).collect();
    Tiling::new(region, pieces, monos)
}

fn grow_ones(t: &Tiling, k: u32) -> Tiling {
    let region = gadgets::reflected_an(4 * k + 3, Axis::MainDiagonal);
    grow(t, gadgets::ONES_OFFSET, gadgets::ones_pieces(k), region)
}

fn grow_threes(t: &Tiling, k: u32) -> Tiling {
    let region = gadgets::reflected_an(4 * k + 5, Axis::AntiDiagonal);
    grow(t, gadgets::THREES_OFFSET, gadgets::threes_pieces(k), region)
}

fn fill_corners(t: &Tiling) -> Result<Tiling, ConstructionError> {
    let RegionKind::An(n) = t.region().kind() else {
        return Err(ConstructionError::BadInput("FillCorners expects A_n".into()));
    };
    let (_, pieces, mut monos) = t.clone().into_parts();
    monos.extend(an_removed_cells(n));
    Ok(Tiling::new(Region::square(n)?, pieces, monos))
}

/// `Square(n)` for odd `n >= 3` with 5 monominoes.
pub fn tile_square_odd(n: i64) -> Result<Tiling, ConstructionError> {
    let n = odd_side(n)?;
    fill_corners(&tile_a(n.into())?)
}

/// `Square(n)` with the minimal number of monominoes.
pub fn tile_any(n: i64) -> Result<Tiling, ConstructionError> {
    construct(n).map(|(t, _)| t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{max_t_count, min_monomino_count};

    fn assert_valid(t: &Tiling) {
        let r = verify(t);
        assert!(r.valid, "{r:?}");
    }

    #[test]
    fn squares_4m() {
        for (m, count) in [(1, 4), (2, 16), (10, 400)] {
            let t = tile_square_4m(m).unwrap();
            assert_valid(&t);
            assert_eq!(t.t_count(), count);
            assert_eq!(t.mono_count(), 0);
        }
        assert!(tile_square_4m(0).is_err());
    }

    #[test]
    fn squares_4m2() {
        let t = tile_square_4m2(0).unwrap();
        assert_eq!((t.t_count(), t.mono_count()), (0, 4));
        assert_valid(&t);
        let t = tile_square_4m2(1).unwrap();
        assert_eq!((t.t_count(), t.mono_count()), (8, 4));
        assert_valid(&t);
        let t = tile_square_4m2(3).unwrap();
        assert_eq!((t.t_count(), t.mono_count()), (48, 4));
        assert_valid(&t);
        assert!(tile_square_4m2(-1).is_err());
    }

    #[test]
    fn six_by_six_strip_layout() {
        let t = tile_square_4m2(1).unwrap();
        let monos = t.monominoes();
        assert_eq!(monos, &[Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 0), Cell::new(5, 5)]);
        // inner square occupies rows 2..6, columns 0..4
        let strip_ts = t
            .tetrominoes()
            .iter()
            .filter(|p| p.cells().iter().any(|c| c.row < 2 || c.col >= 4))
            .count();
        assert_eq!(strip_ts, 4);
    }

    #[test]
    fn frieze_lengths() {
        assert!(frieze_strip(0).unwrap().is_empty());
        assert_eq!(frieze_strip(4).unwrap().len(), 2);
        assert!(frieze_strip(6).is_err());
        assert!(frieze_strip(-4).is_err());
        // a frieze of length 4j covers 8j cells of a width-2 parallelogram
        let strip = frieze_strip(12).unwrap();
        let mut cells: Vec<Cell> = strip.iter().flat_map(|p| p.cells().iter().copied()).collect();
        let region = Region::explicit(cells.clone()).unwrap();
        assert_eq!(region.len(), 24);
        cells.sort();
        assert_valid(&Tiling::new(region, strip, vec![]));
    }

    #[test]
    fn a_n_counts() {
        for (n, ts) in [(3, 1), (5, 5), (7, 11), (9, 19)] {
            let t = tile_a(n).unwrap();
            assert_valid(&t);
            assert_eq!(t.region().kind(), RegionKind::An(n as u32));
            assert_eq!((t.t_count(), t.mono_count()), (ts, 1));
        }
        assert!(tile_a(4).is_err());
        assert!(tile_a(1).is_err());
    }

    #[test]
    fn a5_monomino_strictly_inside() {
        let t = tile_a(5).unwrap();
        let c = t.monominoes()[0];
        assert_eq!(c, Cell::new(2, 1));
    }

    #[test]
    fn extension_steps() {
        let a5 = tile_a(5).unwrap();
        let a7r = extend_a_ones(&a5).unwrap();
        assert_valid(&a7r);
        assert_eq!((a7r.t_count(), a7r.mono_count()), (11, 1));
        let removed: Vec<Cell> = an_removed_cells(7).iter().map(|c| Cell::new(c.col, c.row)).collect();
        for c in removed {
            assert!(!a7r.region().contains(c));
        }
        let a7 = tile_a(7).unwrap();
        let a9r = extend_a_threes(&a7).unwrap();
        assert_valid(&a9r);
        assert_eq!((a9r.t_count(), a9r.mono_count()), (19, 1));

        let a9 = tile_a(9).unwrap();
        let a11r = extend_a_ones(&a9).unwrap();
        assert_valid(&a11r);
        assert_eq!(a11r.t_count(), 19 + 10);

        let a15 = tile_a(15).unwrap();
        let a17r = extend_a_threes(&a15).unwrap();
        assert_valid(&a17r);
        assert_eq!(a17r.t_count(), a15.t_count() + 16);

        // the threes step also grows A_3 into A_5
        let a5r = extend_a_threes(&tile_a(3).unwrap()).unwrap();
        assert_valid(&a5r);
        assert_eq!(a5r.t_count(), 5);
    }

    #[test]
    fn extension_rejects_wrong_input() {
        assert!(extend_a_ones(&tile_a(7).unwrap()).is_err());
        assert!(extend_a_threes(&tile_a(5).unwrap()).is_err());
        assert!(extend_a_ones(&tile_any(4).unwrap()).is_err());
        let (region, mut pieces, monos) = tile_a(5).unwrap().into_parts();
        pieces.pop();
        assert!(extend_a_ones(&Tiling::new(region, pieces, monos)).is_err());
    }

    #[test]
    fn odd_squares() {
        for (n, ts) in [(3, 1), (5, 5), (7, 11), (101, 2549)] {
            let t = tile_square_odd(n).unwrap();
            assert_valid(&t);
            assert_eq!((t.t_count(), t.mono_count()), (ts, 5));
        }
        assert!(tile_square_odd(8).is_err());
    }

    #[test]
    fn dispatcher_matches_formulas() {
        for n in 1..=40 {
            let t = tile_any(n).unwrap();
            assert_valid(&t);
            assert_eq!(t.region().kind(), RegionKind::Square(n as u32));
            assert_eq!(t.t_count() as u64, max_t_count(n).unwrap(), "n = {n}");
            assert_eq!(t.mono_count() as u64, min_monomino_count(n).unwrap(), "n = {n}");
        }
        assert!(tile_any(0).is_err());
    }

    #[test]
    fn trace_replays_identically() {
        for n in 1..=30 {
            let (t, trace) = construct(n).unwrap();
            assert_eq!(trace.replay().unwrap(), t);
            let json = serde_json::to_string(&trace).unwrap();
            let back: ConstructionTrace = serde_json::from_str(&json).unwrap();
            assert_eq!(back, trace);
        }
    }

    #[test]
    fn malformed_traces_error() {
        assert!(ConstructionTrace::default().replay().is_err());
        let t = ConstructionTrace { steps: vec![Step::FillCorners] };
        assert!(t.replay().is_err());
        let t = ConstructionTrace { steps: vec![Step::BaseA5, Step::ExtendThrees { k: 0 }] };
        assert!(t.replay().is_err());
    }
}
