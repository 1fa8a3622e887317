//! Tilings of `n × n` squares by T-tetrominoes and as few monominoes as
//! possible.
//!
//! [`constructions`] builds a tiling for every side length, [`verifier`]
//! checks any tiling cell by cell, [`exact_cover`] searches small instances
//! exhaustively to confirm that no tiling with fewer monominoes exists, and
//! [`render`] reads and writes the JSON document format and draws ASCII and
//! SVG pictures.

pub mod constructions;
pub mod exact_cover;
pub mod formulas;
pub mod grid;
pub mod render;
pub mod verifier;

pub use constructions::{construct, tile_any, ConstructionError, ConstructionTrace};
pub use exact_cover::{count_solutions, min_monominoes_search, solve, CoverProblem, Limits, SearchResult, SearchStatus};
pub use formulas::{max_t_count, min_monomino_count};
pub use grid::{Axis, Cell, Orientation, Region, RegionKind, TPlacement, Tiling};
pub use verifier::{verify, VerificationReport};
