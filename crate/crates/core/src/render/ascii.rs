use std::collections::HashMap;

use crate::grid::{BoundingBox, Cell, Tiling};

use super::RenderError;

pub const MAX_SIDE: usize = 200;

const NEIGHBOURS: [(i32, i32); 8] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)];

const LETTERS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Greedy colouring of tetrominoes in canonical order: each takes the first
/// letter not used by an already coloured piece touching it, corners
/// included.
fn letters(t: &Tiling) -> Vec<u8> {
    let owner: HashMap<Cell, usize> = t
        .tetrominoes()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.cells().iter().map(move |&c| (c, i)))
        .collect();
    let mut out: Vec<u8> = Vec::with_capacity(t.t_count());
    for (i, p) in t.tetrominoes().iter().enumerate() {
        let mut taken = [false; LETTERS.len()];
        for c in p.cells() {
            for (dr, dc) in NEIGHBOURS {
                if let Some(&j) = owner.get(&c.offset(dr, dc)) {
                    if j < i {
                        taken[out[j] as usize] = true;
                    }
                }
            }
        }
        let free = taken.iter().position(|&x| !x).expect("a T touches at most 16 others");
        out.push(free as u8);
    }
    out
}

/// One character per cell of the region's bounding box, top row first.
/// Tetrominoes get letters, monominoes `.`, anything else a space.
pub fn render_ascii(t: &Tiling) -> Result<String, RenderError> {
    let Some(b) = t.region().bounding_box() else {
        return Ok(String::new());
    };
    let (rows, cols) = (b.height(), b.width());
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(RenderError::TooLarge { rows, cols, max: MAX_SIDE });
    }
    let mut grid = vec![vec![b' '; cols]; rows];
    let mut put = |b: &BoundingBox, c: Cell, ch: u8| {
        if c.row >= b.min_row && c.row <= b.max_row && c.col >= b.min_col && c.col <= b.max_col {
            grid[(b.max_row - c.row) as usize][(c.col - b.min_col) as usize] = ch;
        }
    };
    for (p, letter) in t.tetrominoes().iter().zip(letters(t)) {
        for &c in p.cells() {
            put(&b, c, LETTERS[letter as usize]);
        }
    }
    for &c in t.monominoes() {
        put(&b, c, b'.');
    }
    let mut out = String::with_capacity(rows * (cols + 1));
    for line in grid {
        out.push_str(std::str::from_utf8(&line).expect("ascii"));
        out.push('\n');
    }
    Ok(out)
}
