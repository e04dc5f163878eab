use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::region::{segment_dist, Region, DEFAULT_SAMPLES};

/// A convex set containing a support: an exact disk, or a counterclockwise
/// convex polygon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Hull {
    Disk { center: Complex64, radius: f64 },
    Polygon { vertices: Vec<Complex64> },
}

impl Hull {
    /// Convex hull of a finite point set (Andrew's monotone chain).
    pub fn from_points(points: &[Complex64]) -> Hull {
        let mut pts: Vec<Complex64> = points.to_vec();
        pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        pts.dedup();
        if pts.len() < 3 {
            return Hull::Polygon { vertices: pts };
        }
        let turn = |o: Complex64, a: Complex64, b: Complex64| {
            (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
        };
        let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
        for &p in &pts {
            while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        let lower = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        Hull::Polygon { vertices: hull }
    }

    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        self.dist(z) <= tol
    }

    /// Distance from `z` to the hull (zero inside).
    pub fn dist(&self, z: Complex64) -> f64 {
        match self {
            Hull::Disk { center, radius } => ((z - center).norm() - radius).max(0.0),
            Hull::Polygon { vertices } => {
                let n = vertices.len();
                if n == 0 {
                    return f64::INFINITY;
                }
                if n == 1 {
                    return (z - vertices[0]).norm();
                }
                let inside = n >= 3
                    && (0..n).all(|k| {
                        let (a, b) = (vertices[k], vertices[(k + 1) % n]);
                        (b.re - a.re) * (z.im - a.im) - (b.im - a.im) * (z.re - a.re) >= 0.0
                    });
                if inside {
                    0.0
                } else {
                    (0..n)
                        .map(|k| segment_dist(vertices[k], vertices[(k + 1) % n], z))
                        .fold(f64::INFINITY, f64::min)
                }
            }
        }
    }

    pub fn diameter(&self) -> f64 {
        match self {
            Hull::Disk { radius, .. } => 2.0 * radius,
            Hull::Polygon { vertices } => {
                let mut d: f64 = 0.0;
                for (i, a) in vertices.iter().enumerate() {
                    for b in &vertices[i + 1..] {
                        d = d.max((a - b).norm());
                    }
                }
                d
            }
        }
    }

    /// Polyline outline for plotting.
    pub fn outline(&self, m: usize) -> Vec<Complex64> {
        match self {
            Hull::Disk { center, radius } => Region::Disk {
                center: *center,
                radius: *radius,
            }
            .boundary_paths(m)
            .remove(0),
            Hull::Polygon { vertices } => vertices.clone(),
        }
    }
}

/// Convex hull of a region; exact for a single disk, conservative otherwise.
pub fn convex_hull(region: &Region) -> Hull {
    match region {
        Region::Disk { center, radius } => Hull::Disk {
            center: *center,
            radius: *radius,
        },
        _ => Hull::from_points(&region.hull_points(DEFAULT_SAMPLES)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn square_hull_drops_interior_points() {
        let pts = [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0), c(0.5, 0.5), c(0.5, 0.0)];
        let Hull::Polygon { vertices } = Hull::from_points(&pts) else { panic!() };
        assert_eq!(vertices.len(), 4);
    }

    #[test]
    fn union_hull_bridges_components() {
        let r = Region::union(vec![
            Region::unit_pentagon(),
            Region::disk(c(3.5, 0.0), 2.0 / 3.0).unwrap(),
        ])
        .unwrap();
        let h = convex_hull(&r);
        assert!(h.contains(c(2.0, 0.0), 0.0));
        assert!(h.contains(c(3.5 + 2.0 / 3.0, 0.0), 0.0));
        assert!(!h.contains(c(2.0, 1.5), 0.0));
        let far_corner = Complex64::from_polar(1.0, 0.8 * std::f64::consts::PI);
        let expected = (c(3.5, 0.0) - far_corner).norm() + 2.0 / 3.0;
        assert!((h.diameter() - expected).abs() < 1e-3);
        for p in r.boundary_paths(2000).concat() {
            assert!(h.contains(p, 1e-12));
        }
    }

    #[test]
    fn disk_hull_is_exact() {
        let h = convex_hull(&Region::disk(c(0.0, 0.0), 1.0).unwrap());
        assert_eq!(h.dist(c(2.0, 0.0)), 1.0);
    }
}
