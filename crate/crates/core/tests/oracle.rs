mod support;

use std::time::Duration;

use proptest::prelude::*;
use support::naive::{self, Cells};
use ttiling::exact_cover::{count_solutions, enumerate_placements, solve, CountOutcome, CoverProblem, Limits};
use ttiling::{Cell, Region};

fn limits() -> Limits {
    Limits {
        max_nodes: 200_000_000,
        max_time: Duration::from_secs(120),
    }
}

fn cells_of(region: &Region) -> Cells {
    region.cells().iter().map(|c| (c.row, c.col)).collect()
}

fn solver_count(region: &Region, budget: u32) -> u64 {
    match count_solutions(&CoverProblem::new(region.clone(), budget), &limits()).unwrap().outcome {
        CountOutcome::Complete { solutions, .. } => solutions,
        other => panic!("count aborted: {other:?}"),
    }
}

fn test_regions() -> Vec<Region> {
    let mut out: Vec<Region> = (2..=6).map(|n| Region::square(n).unwrap()).collect();
    out.push(Region::an(3).unwrap());
    out.push(Region::an(5).unwrap());
    out.push(Region::lstrip(6, 4).unwrap());
    for (h, w) in [(4, 5), (3, 8), (5, 7), (4, 8), (2, 12)] {
        out.push(Region::explicit((0..h).flat_map(|r| (0..w).map(move |c| Cell::new(r, c)))).unwrap());
    }
    out
}

#[test]
fn placements_match_brute_force() {
    for region in test_regions() {
        let mut expected: Vec<Vec<(i32, i32)>> = naive::placements(&cells_of(&region))
            .into_iter()
            .map(|p| {
                let mut v = p.to_vec();
                v.sort();
                v
            })
            .collect();
        expected.sort();
        let got: Vec<Vec<(i32, i32)>> = enumerate_placements(&region)
            .iter()
            .map(|p| p.cells().iter().map(|c| (c.row, c.col)).collect())
            .collect();
        assert_eq!(got, expected, "{:?}", region.kind());
    }
    assert_eq!(naive::placements(&naive::square(3)).len(), 8);
    assert_eq!(naive::placements(&naive::square(4)).len(), 24);
}

#[test]
fn counts_agree_with_naive_enumerator() {
    for region in test_regions() {
        assert!(region.len() <= 36);
        for budget in 0..=6 {
            let expected = naive::count(&cells_of(&region), budget);
            assert_eq!(solver_count(&region, budget), expected, "{:?} budget {budget}", region.kind());
        }
    }
}

#[test]
fn feasibility_agrees_with_naive_search() {
    for region in test_regions() {
        for budget in 0..=6 {
            let found = solve(&CoverProblem::new(region.clone(), budget), &limits()).unwrap().status.is_found();
            assert_eq!(found, naive::feasible(&cells_of(&region), budget), "{:?} budget {budget}", region.kind());
        }
    }
}

#[test]
fn known_small_counts() {
    assert_eq!(naive::count(&naive::square(2), 4), 1);
    assert_eq!(naive::count(&naive::square(3), 1), 0);
    assert_eq!(naive::count(&naive::square(4), 0), 2);
    assert_eq!(solver_count(&Region::square(4).unwrap(), 0), 2);
}

#[test]
fn orbit_counts_bounded_by_raw_counts() {
    for region in test_regions() {
        for budget in [0, 4, 5] {
            let CountOutcome::Complete { solutions, orbits } =
                count_solutions(&CoverProblem::new(region.clone(), budget), &limits()).unwrap().outcome
            else {
                panic!("aborted");
            };
            assert!(orbits <= solutions);
            assert!(orbits * 8 >= solutions, "{:?}", region.kind());
        }
    }
}

fn region_from_mask(mask: u64) -> Region {
    Region::explicit((0..36).filter(|i| mask >> i & 1 == 1).map(|i| Cell::new(i / 6, i % 6))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_regions_agree(mask in 0u64..(1 << 36), budget in 0u32..4) {
        let region = region_from_mask(mask);
        prop_assume!(!region.is_empty());
        let expected = naive::count(&cells_of(&region), budget);
        prop_assert_eq!(solver_count(&region, budget), expected);
    }
}
