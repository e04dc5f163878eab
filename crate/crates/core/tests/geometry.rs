use num_complex::Complex64;
use planar_ortho::geometry::{convex_hull, validate_lake, Region};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn point() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(x, y)| c(x, y))
}

fn disk() -> impl Strategy<Value = Region> {
    (point(), 0.05..2.0f64).prop_map(|(z, r)| Region::disk(z, r).unwrap())
}

fn sector() -> impl Strategy<Value = Region> {
    (point(), 0.05..2.0f64, -2.0..2.0f64, 0.05..2.0f64)
        .prop_map(|(z, r, s, w)| Region::sector(z, r, s, s + w).unwrap())
}

/// Convex polygon inscribed in a circle.
fn convex_polygon() -> impl Strategy<Value = Region> {
    (point(), 0.1..2.0f64, prop::collection::vec(0.0..std::f64::consts::TAU, 3..9))
        .prop_filter_map("well separated corners", |(z, r, mut angles)| {
            angles.sort_by(f64::total_cmp);
            angles.dedup();
            let n = angles.len();
            let gaps = (0..n).map(|k| {
                let next = if k + 1 < n { angles[k + 1] } else { angles[0] + std::f64::consts::TAU };
                next - angles[k]
            });
            if n < 3 || gaps.fold(f64::INFINITY, f64::min) < 0.1 {
                return None;
            }
            Region::polygon(angles.iter().map(|&t| z + Complex64::from_polar(r, t)).collect()).ok()
        })
}

fn simple_region() -> impl Strategy<Value = Region> {
    prop_oneof![disk(), sector(), convex_polygon()]
}

fn region() -> impl Strategy<Value = Region> {
    prop_oneof![
        simple_region(),
        (simple_region(), simple_region()).prop_map(|(a, b)| {
            let shifted = match b {
                Region::Disk { center, radius } => Region::disk(center + 10.0, radius),
                Region::Sector { center, radius, start_pi, end_pi } => {
                    Region::sector(center + 10.0, radius, start_pi, end_pi)
                }
                Region::Polygon { vertices } => Region::polygon(vertices.iter().map(|v| v + 10.0).collect()),
                Region::Union { .. } => unreachable!(),
            };
            Region::union(vec![a, shifted.unwrap()]).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn part_centroids_are_inside(g in region()) {
        for z in g.part_centroids() {
            prop_assert!(g.contains(z), "centroid {z} outside {g:?}");
        }
    }

    #[test]
    fn hull_contains_dense_boundary_sample(g in region()) {
        let hull = convex_hull(&g);
        for path in g.boundary_paths(10_000) {
            for z in path {
                prop_assert!(hull.contains(z, 1e-9), "boundary point {z} outside hull");
            }
        }
    }

    #[test]
    fn lake_relation_is_antisymmetric(a in simple_region(), b in simple_region()) {
        prop_assert!(!(validate_lake(&a, &b) && validate_lake(&b, &a)));
    }

    #[test]
    fn concentric_disks_nest(z in point(), r in 0.1..2.0f64, t in 0.05..0.95f64) {
        let outer = Region::disk(z, r).unwrap();
        let inner = Region::disk(z, r * t).unwrap();
        prop_assert!(validate_lake(&outer, &inner));
        prop_assert!(!validate_lake(&inner, &outer));
    }
}

#[test]
fn pentagon_is_symmetric_about_the_real_axis() {
    let Region::Polygon { vertices } = Region::unit_pentagon() else { panic!() };
    let mut conj: Vec<Complex64> = vertices.iter().map(|v| v.conj()).collect();
    conj.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut orig = vertices.clone();
    orig.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    assert_eq!(conj, orig);
}
