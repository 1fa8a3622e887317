//! JSON interchange plus ASCII and SVG pictures of tilings.

pub mod ascii;
pub mod json;
pub mod svg;

use thiserror::Error;

pub use ascii::render_ascii;
pub use json::{emit_document, emit_json, parse_document, parse_json, ParseError, TilingDocument};
pub use svg::render_svg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("board of {rows}×{cols} exceeds the {max}×{max} limit for text output")]
    TooLarge { rows: usize, cols: usize, max: usize },
}
