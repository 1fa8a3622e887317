//! Exhaustive exact-cover search over T placements plus a monomino budget.
//!
//! Region cells are the columns; each T placement is a row covering four of
//! them. Instead of one row per possible monomino the search carries a
//! budget counter: at every node it picks the uncovered cell with the fewest
//! remaining options (lowest cell index on ties) and branches on each T that
//! still fits over it, then on leaving it to a monomino if budget remains.
//!
//! Boards are `u128` bitsets, so regions are limited to 128 cells.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::grid::{BoundingBox, Cell, Region, TPlacement, Tiling, Orientation};

pub const MAX_CELLS: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("region has {0} cells; the solver handles at most {MAX_CELLS}")]
    RegionTooLarge(usize),
    #[error(transparent)]
    Grid(#[from] crate::grid::GridError),
}

/// Search budget per call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 1_000_000_000,
            max_time: Duration::from_secs(300),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitKind {
    Nodes,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found(Tiling),
    Infeasible,
    Aborted(LimitKind),
}

impl SearchStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStatus::Found(_) => "found",
            SearchStatus::Infeasible => "infeasible",
            SearchStatus::Aborted(_) => "aborted",
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchStatus::Found(_))
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProblem {
    pub region: Region,
    pub candidate_placements: Vec<TPlacement>,
    pub monomino_budget: u32,
}

impl CoverProblem {
    pub fn new(region: Region, monomino_budget: u32) -> CoverProblem {
        let candidate_placements = enumerate_placements(&region);
        CoverProblem {
            region,
            candidate_placements,
            monomino_budget,
        }
    }

    pub fn square(n: u32, monomino_budget: u32) -> Result<CoverProblem, CoverError> {
        Ok(CoverProblem::new(Region::square(n)?, monomino_budget))
    }
}

/// Every T placement lying inside `region`, sorted by cells.
pub fn enumerate_placements(region: &Region) -> Vec<TPlacement> {
    let mut out: Vec<TPlacement> = region
        .cells()
        .iter()
        .flat_map(|&start| Orientation::ALL.map(|o| TPlacement::new(start, o)))
        .filter(|p| p.cells().iter().all(|&c| region.contains(c)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Immutable search tables shared by all workers.
struct Tables {
    cells: Vec<Cell>,
    masks: Vec<u128>,
    /// Placement indices covering each cell, ascending.
    by_cell: Vec<Vec<u32>>,
    full: u128,
}

impl Tables {
    fn build(problem: &CoverProblem) -> Result<Tables, CoverError> {
        let cells: Vec<Cell> = problem.region.cells().iter().copied().collect();
        if cells.len() > MAX_CELLS {
            return Err(CoverError::RegionTooLarge(cells.len()));
        }
        let index = |c: &Cell| cells.binary_search(c).ok();
        let mut masks = Vec::new();
        let mut by_cell = vec![Vec::new(); cells.len()];
        for p in &problem.candidate_placements {
            let idx: Option<Vec<usize>> = p.cells().iter().map(index).collect();
            // placements sticking out of the region can never be used
            let Some(idx) = idx else { continue };
            let id = masks.len() as u32;
            masks.push(idx.iter().fold(0u128, |m, &i| m | 1 << i));
            for i in idx {
                by_cell[i].push(id);
            }
        }
        let full = if cells.len() == 128 { u128::MAX } else { (1u128 << cells.len()) - 1 };
        Ok(Tables {
            cells,
            masks,
            by_cell,
            full,
        })
    }

    fn tiling(&self, region: &Region, chosen: &[u32], monos: &[u32]) -> Tiling {
        let pieces = chosen
            .iter()
            .map(|&p| {
                let mut it = BitIter(self.masks[p as usize]).map(|i| self.cells[i]);
                let cells = [(); 4].map(|_| it.next().expect("four cells"));
                TPlacement::from_cells(cells)
            })
            .collect();
        Tiling::new(region.clone(), pieces, monos.iter().map(|&i| self.cells[i as usize]).collect())
    }
}

struct BitIter(u128);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

enum Flow {
    Continue,
    Stop,
    Abort(LimitKind),
}

/// Budget shared between workers in parallel mode.
struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
}

const FLUSH_EVERY: u64 = 1024;

struct Worker<'a> {
    tables: &'a Tables,
    limits: Limits,
    start: Instant,
    nodes: u64,
    unflushed: u64,
    shared: Option<&'a Shared>,
    chosen: Vec<u32>,
    monos: Vec<u32>,
}

enum Branch {
    Place(u32),
    Monomino(u32),
}

impl<'a> Worker<'a> {
    fn new(tables: &'a Tables, limits: Limits, start: Instant, shared: Option<&'a Shared>) -> Self {
        Worker {
            tables,
            limits,
            start,
            nodes: 0,
            unflushed: 0,
            shared,
            chosen: Vec::new(),
            monos: Vec::new(),
        }
    }

    fn tick(&mut self) -> Option<LimitKind> {
        self.nodes += 1;
        self.unflushed += 1;
        let total = match self.shared {
            None => self.nodes,
            Some(s) => {
                if self.unflushed < FLUSH_EVERY {
                    return None;
                }
                let before = s.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
                before + self.unflushed
            }
        };
        if total > self.limits.max_nodes {
            return Some(LimitKind::Nodes);
        }
        if self.unflushed >= FLUSH_EVERY || self.nodes == 1 {
            self.unflushed = 0;
            if self.start.elapsed() > self.limits.max_time {
                return Some(LimitKind::Time);
            }
        }
        None
    }

    fn flush(&mut self) {
        if let Some(s) = self.shared {
            s.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
        }
        self.unflushed = 0;
    }

    /// Options at this node, or `None` for a dead end. An empty list means
    /// the board is full.
    fn branches(&self, covered: u128, budget: u32) -> Option<Vec<Branch>> {
        let t = self.tables;
        let open = t.full & !covered;
        if open == 0 {
            return Some(Vec::new());
        }
        // each T covers four cells, so at least (open mod 4) monominoes remain
        if open.count_ones() % 4 > budget {
            return None;
        }
        let mono = u32::from(budget > 0);
        let mut best: Option<(u32, usize)> = None;
        for cell in BitIter(open) {
            let fits = t.by_cell[cell].iter().filter(|&&p| t.masks[p as usize] & covered == 0).count() as u32;
            let options = fits + mono;
            if options == 0 {
                return None;
            }
            if best.is_none_or(|(b, _)| options < b) {
                best = Some((options, cell));
            }
        }
        let (_, cell) = best.expect("open board has a cell");
        let mut out: Vec<Branch> = t.by_cell[cell]
            .iter()
            .filter(|&&p| t.masks[p as usize] & covered == 0)
            .map(|&p| Branch::Place(p))
            .collect();
        if budget > 0 {
            out.push(Branch::Monomino(cell as u32));
        }
        Some(out)
    }

    fn search(&mut self, covered: u128, budget: u32, visit: &mut dyn FnMut(&Self) -> bool) -> Flow {
        if let Some(limit) = self.tick() {
            return Flow::Abort(limit);
        }
        if let Some(s) = self.shared {
            if s.stop.load(Ordering::Relaxed) {
                return Flow::Stop;
            }
        }
        let Some(branches) = self.branches(covered, budget) else {
            return Flow::Continue;
        };
        if branches.is_empty() {
            return if visit(self) { Flow::Continue } else { Flow::Stop };
        }
        for b in branches {
            let flow = self.descend(covered, budget, &b, visit);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    fn descend(&mut self, covered: u128, budget: u32, b: &Branch, visit: &mut dyn FnMut(&Self) -> bool) -> Flow {
        match *b {
            Branch::Place(p) => {
                self.chosen.push(p);
                let f = self.search(covered | self.tables.masks[p as usize], budget, visit);
                self.chosen.pop();
                f
            }
            Branch::Monomino(cell) => {
                self.monos.push(cell);
                let f = self.search(covered | 1 << cell, budget - 1, visit);
                self.monos.pop();
                f
            }
        }
    }
}

/// Finds the first tiling in search order with at most
/// `problem.monomino_budget` monominoes, or proves there is none.
pub fn solve(problem: &CoverProblem, limits: &Limits) -> Result<SearchResult, CoverError> {
    let tables = Tables::build(problem)?;
    let start = Instant::now();
    let mut worker = Worker::new(&tables, *limits, start, None);
    let mut found = None;
    let flow = worker.search(0, problem.monomino_budget, &mut |w| {
        found = Some(tables.tiling(&problem.region, &w.chosen, &w.monos));
        false
    });
    let status = match (flow, found) {
        (_, Some(t)) => SearchStatus::Found(t),
        (Flow::Abort(kind), None) => SearchStatus::Aborted(kind),
        (_, None) => SearchStatus::Infeasible,
    };
    Ok(SearchResult {
        status,
        nodes_expanded: worker.nodes,
        elapsed: start.elapsed(),
    })
}

/// Same status as [`solve`], with the root's branches searched on the rayon
/// pool. The tiling returned and the node count depend on scheduling.
pub fn solve_parallel(problem: &CoverProblem, limits: &Limits) -> Result<SearchResult, CoverError> {
    let tables = Tables::build(problem)?;
    let start = Instant::now();
    let shared = Shared {
        nodes: AtomicU64::new(1),
        stop: AtomicBool::new(false),
    };
    let budget = problem.monomino_budget;
    let root = Worker::new(&tables, *limits, start, None);
    let status = match root.branches(0, budget) {
        None => SearchStatus::Infeasible,
        Some(b) if b.is_empty() => SearchStatus::Found(tables.tiling(&problem.region, &[], &[])),
        Some(branches) => {
            let outcomes: Vec<SearchStatus> = branches
                .par_iter()
                .map(|b| {
                    let mut w = Worker::new(&tables, *limits, start, Some(&shared));
                    let mut found = None;
                    let flow = w.descend(0, budget, b, &mut |w| {
                        found = Some(tables.tiling(&problem.region, &w.chosen, &w.monos));
                        false
                    });
                    w.flush();
                    match (flow, found) {
                        (_, Some(t)) => {
                            shared.stop.store(true, Ordering::Relaxed);
                            SearchStatus::Found(t)
                        }
                        (Flow::Abort(kind), None) => SearchStatus::Aborted(kind),
                        (_, None) => SearchStatus::Infeasible,
                    }
                })
                .collect();
            combine(outcomes)
        }
    };
    Ok(SearchResult {
        status,
        nodes_expanded: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

fn combine(outcomes: Vec<SearchStatus>) -> SearchStatus {
    let mut aborted = None;
    for s in outcomes {
        match s {
            SearchStatus::Found(_) => return s,
            SearchStatus::Aborted(k) => aborted = aborted.or(Some(k)),
            SearchStatus::Infeasible => {}
        }
    }
    aborted.map_or(SearchStatus::Infeasible, SearchStatus::Aborted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum MinOutcome {
    Found { min_monominoes: u32 },
    Aborted { budget: u32, limit: LimitKind },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSearch {
    pub n: u32,
    pub outcome: MinOutcome,
    /// `(budget, status name, nodes)` for each budget tried.
    pub attempts: Vec<(u32, &'static str, u64)>,
    pub nodes_expanded: u64,
}

/// Smallest monomino budget for which `Square(n)` has a tiling, trying
/// budgets upward from 0. Each attempt gets the full `limits`.
pub fn min_monominoes_search(n: u32, limits: &Limits) -> Result<MinSearch, CoverError> {
    let region = Region::square(n)?;
    let mut attempts = Vec::new();
    let mut nodes = 0;
    for budget in 0..=region.len() as u32 {
        let r = solve(&CoverProblem::new(region.clone(), budget), limits)?;
        nodes += r.nodes_expanded;
        attempts.push((budget, r.status.name(), r.nodes_expanded));
        let outcome = match r.status {
            SearchStatus::Found(_) => MinOutcome::Found { min_monominoes: budget },
            SearchStatus::Aborted(limit) => MinOutcome::Aborted { budget, limit },
            SearchStatus::Infeasible => continue,
        };
        return Ok(MinSearch {
            n,
            outcome,
            attempts,
            nodes_expanded: nodes,
        });
    }
    unreachable!("a budget equal to the area always admits the all-monomino tiling")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CountOutcome {
    /// `solutions` counts every exact cover; `orbits` counts them up to the
    /// symmetries of the square that map the region onto itself.
    Complete { solutions: u64, orbits: u64 },
    Aborted { limit: LimitKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountResult {
    pub outcome: CountOutcome,
    pub nodes_expanded: u64,
}

/// Cell permutations of the region induced by the dihedral symmetries of its
/// bounding box.
fn region_symmetries(tables: &Tables) -> Vec<Vec<usize>> {
    let Some(b) = BoundingBox::of(&tables.cells) else {
        return vec![Vec::new()];
    };
    let (h, w) = (b.max_row - b.min_row, b.max_col - b.min_col);
    let mut out = Vec::new();
    for sym in 0..8u8 {
        let transpose = sym & 4 != 0;
        if transpose && h != w {
            continue;
        }
        let perm: Option<Vec<usize>> = tables
            .cells
            .iter()
            .map(|c| {
                let (mut r, mut col) = (c.row - b.min_row, c.col - b.min_col);
                if transpose {
                    std::mem::swap(&mut r, &mut col);
                }
                if sym & 1 != 0 {
                    r = h - r;
                }
                if sym & 2 != 0 {
                    col = w - col;
                }
                tables.cells.binary_search(&Cell::new(r + b.min_row, col + b.min_col)).ok()
            })
            .collect();
        out.extend(perm);
    }
    out
}

fn permute(mask: u128, perm: &[usize]) -> u128 {
    BitIter(mask).fold(0, |m, i| m | 1 << perm[i])
}

/// Number of exact covers using at most `monomino_budget` monominoes.
pub fn count_solutions(problem: &CoverProblem, limits: &Limits) -> Result<CountResult, CoverError> {
    let tables = Tables::build(problem)?;
    let symmetries = region_symmetries(&tables);
    let start = Instant::now();
    let mut worker = Worker::new(&tables, *limits, start, None);
    let mut solutions = 0u64;
    // Burnside: orbits = sum over solutions of |stabilizer| / |group|
    let mut stabilizer_total = 0u64;
    let flow = worker.search(0, problem.monomino_budget, &mut |w| {
        solutions += 1;
        let mut pieces: Vec<u128> = w
            .chosen
            .iter()
            .map(|&p| tables.masks[p as usize])
            .chain(w.monos.iter().map(|&c| 1u128 << c))
            .collect();
        pieces.sort_unstable();
        stabilizer_total += symmetries
            .iter()
            .filter(|perm| pieces.iter().all(|&m| pieces.binary_search(&permute(m, perm)).is_ok()))
            .count() as u64;
        true
    });
    let outcome = match flow {
        Flow::Abort(limit) => CountOutcome::Aborted { limit },
        _ => CountOutcome::Complete {
            solutions,
            orbits: stabilizer_total / symmetries.len() as u64,
        },
    };
    Ok(CountResult {
        outcome,
        nodes_expanded: worker.nodes,
    })
}
