use proptest::prelude::*;
use ttiling::constructions::{gadgets, tile_a, tile_square_4m2};
use ttiling::grid::{reflect_tiling, translate_tiling};
use ttiling::render::{emit_json, parse_json};
use ttiling::{tile_any, verify, Axis, Cell, Region, RegionKind, Tiling};

fn axis(i: usize) -> Axis {
    Axis::ALL[i % 4]
}

#[test]
fn reflected_a5_region() {
    let t = reflect_tiling(&gadgets::a5_base(), Axis::Vertical);
    let r = verify(&t);
    assert!(r.valid, "{r:?}");
    for c in [(0, 4), (0, 3), (1, 4), (0, 0)] {
        assert!(!t.region().contains(Cell::new(c.0, c.1)));
    }
    assert_eq!(t.region().len(), 21);
    assert_eq!((t.t_count(), t.mono_count()), (5, 1));
}

#[test]
fn reflection_is_an_involution_on_constructions() {
    for n in 1..=21 {
        let t = tile_any(n).unwrap();
        for a in Axis::ALL {
            assert_eq!(reflect_tiling(&reflect_tiling(&t, a), a), t);
        }
    }
}

/// Strip pieces of the 4m+2 construction alone tile the L-strip.
#[test]
fn frieze_splicing_keeps_strip_valid() {
    for m in 1..=11 {
        let t = tile_square_4m2(m).unwrap();
        let strip = Region::lstrip(4 * m as u32 + 2, 4 * m as u32).unwrap();
        let pieces = t
            .tetrominoes()
            .iter()
            .filter(|p| p.cells().iter().all(|&c| strip.contains(c)))
            .copied()
            .collect();
        let only_strip = Tiling::new(strip, pieces, t.monominoes().to_vec());
        let r = verify(&only_strip);
        assert!(r.valid, "m = {m}: {r:?}");
        assert_eq!(only_strip.t_count() as i64, 4 * m);
        assert_eq!(only_strip.region().kind(), RegionKind::LStrip { outer: 4 * m as u32 + 2, inner: 4 * m as u32 });
    }
}

#[test]
fn odd_region_counts_up_to_m_30() {
    for m in 1..=30i64 {
        let t = tile_a(2 * m + 1).unwrap();
        assert!(verify(&t).valid, "m = {m}");
        assert_eq!(t.t_count() as i64, m * m + m - 1);
        assert_eq!(t.mono_count(), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rigid_motions_preserve_validity(n in 1i64..40, a in 0usize..4, dr in 0i32..9, dc in 0i32..9) {
        let t = tile_any(n).unwrap();
        let reflected = reflect_tiling(&t, axis(a));
        let r = verify(&reflected);
        prop_assert!(r.valid);
        prop_assert_eq!((r.t_count, r.mono_count), (t.t_count(), t.mono_count()));
        let moved = translate_tiling(&reflected, dr, dc).unwrap();
        let r = verify(&moved);
        prop_assert!(r.valid);
        prop_assert_eq!((r.t_count, r.mono_count), (t.t_count(), t.mono_count()));
        for piece in moved.tetrominoes() {
            prop_assert!(piece.is_t_shape());
        }
    }

    #[test]
    fn json_round_trip(n in 1i64..60, a in 0usize..5) {
        let t = tile_any(n).unwrap();
        let t = if a < 4 { reflect_tiling(&t, axis(a)) } else { t };
        prop_assert_eq!(parse_json(&emit_json(&t)).unwrap(), t);
    }
}
