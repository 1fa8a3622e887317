//! Plain backtracking over T placements and monominoes, used as a reference
//! for the exact-cover solver. It shares no code with the library: shapes
//! are written out by hand and the next cell to cover is always the lowest
//! uncovered one.

use std::collections::BTreeSet;

pub type Cells = BTreeSet<(i32, i32)>;

/// The four T orientations as offsets from the corner of their bounding box.
const SHAPES: [[(i32, i32); 4]; 4] = [
    [(0, 0), (0, 1), (0, 2), (1, 1)],
    [(1, 0), (1, 1), (1, 2), (0, 1)],
    [(0, 1), (1, 1), (2, 1), (1, 0)],
    [(0, 0), (1, 0), (2, 0), (1, 1)],
];

/// Every T inside `region`, by sliding each shape over the bounding box.
pub fn placements(region: &Cells) -> Vec<[(i32, i32); 4]> {
    let Some(max_r) = region.iter().map(|c| c.0).max() else {
        return Vec::new();
    };
    let max_c = region.iter().map(|c| c.1).max().unwrap();
    let mut out = Vec::new();
    for r in 0..=max_r {
        for c in 0..=max_c {
            for shape in SHAPES {
                let cells = shape.map(|(dr, dc)| (r + dr, c + dc));
                if cells.iter().all(|x| region.contains(x)) {
                    out.push(cells);
                }
            }
        }
    }
    out
}

struct Search {
    placements: Vec<[usize; 4]>,
    covered: Vec<bool>,
    count: u64,
    stop_at_first: bool,
}

impl Search {
    fn run(&mut self, budget: u32) {
        if self.stop_at_first && self.count > 0 {
            return;
        }
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            self.count += 1;
            return;
        };
        for i in 0..self.placements.len() {
            let p = self.placements[i];
            if p.contains(&first) && p.iter().all(|&x| !self.covered[x]) {
                p.iter().for_each(|&x| self.covered[x] = true);
                self.run(budget);
                p.iter().for_each(|&x| self.covered[x] = false);
            }
        }
        if budget > 0 {
            self.covered[first] = true;
            self.run(budget - 1);
            self.covered[first] = false;
        }
    }
}

fn search(region: &Cells, budget: u32, stop_at_first: bool) -> u64 {
    let cells: Vec<(i32, i32)> = region.iter().copied().collect();
    let index = |c: &(i32, i32)| cells.binary_search(c).unwrap();
    let placements = placements(region).iter().map(|p| p.map(|c| index(&c))).collect();
    let mut s = Search {
        covered: vec![false; cells.len()],
        placements,
        count: 0,
        stop_at_first,
    };
    s.run(budget);
    s.count
}

/// Number of tilings of `region` using at most `budget` monominoes.
pub fn count(region: &Cells, budget: u32) -> u64 {
    search(region, budget, false)
}

pub fn feasible(region: &Cells, budget: u32) -> bool {
    search(region, budget, true) > 0
}

pub fn square(n: i32) -> Cells {
    (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect()
}
