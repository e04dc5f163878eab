use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::region::{arc_points, segment_dist, Region};
use crate::error::{Error, Result};

/// A closed rectifiable curve carrying arclength measure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Curve {
    Circle {
        center: Complex64,
        radius: f64,
    },
    Ellipse {
        center: Complex64,
        semi_axes: [f64; 2],
    },
    PolygonBoundary {
        vertices: Vec<Complex64>,
    },
}

impl Curve {
    pub fn validate(&self) -> Result<()> {
        match self {
            Curve::Circle { radius, .. } if !(*radius > 0.0 && radius.is_finite()) => {
                Err(Error::GeometryInvalid(format!("circle radius {radius}")))
            }
            Curve::Ellipse { semi_axes, .. }
                if !semi_axes.iter().all(|a| *a > 0.0 && a.is_finite()) =>
            {
                Err(Error::GeometryInvalid(format!("ellipse semi-axes {semi_axes:?}")))
            }
            Curve::PolygonBoundary { vertices } => Region::polygon(vertices.clone()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Dense samples of the curve itself.
    pub fn sample(&self, m: usize) -> Vec<Complex64> {
        let m = m.max(8);
        match self {
            Curve::Circle { center, radius } => arc_points(*center, *radius, 0.0, 2.0, m, 1.0),
            Curve::Ellipse { center, semi_axes } => (0..m)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / m as f64;
                    center + Complex64::new(semi_axes[0] * t.cos(), semi_axes[1] * t.sin())
                })
                .collect(),
            Curve::PolygonBoundary { vertices } => Region::Polygon {
                vertices: vertices.clone(),
            }
            .boundary_paths(m)
            .remove(0),
        }
    }

    /// Points whose convex hull contains the curve.
    pub fn hull_points(&self, m: usize) -> Vec<Complex64> {
        let m = m.max(8);
        let stretch = 1.0 / (PI / m as f64).cos();
        match self {
            Curve::Circle { center, radius } => arc_points(*center, *radius, 0.0, 2.0, m, stretch),
            // Tangent polygon of an ellipse is the affine image of the circle's.
            Curve::Ellipse { center, semi_axes } => (0..m)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / m as f64;
                    center
                        + Complex64::new(
                            semi_axes[0] * stretch * t.cos(),
                            semi_axes[1] * stretch * t.sin(),
                        )
                })
                .collect(),
            Curve::PolygonBoundary { vertices } => vertices.clone(),
        }
    }

    pub fn dist(&self, z: Complex64) -> f64 {
        match self {
            Curve::Circle { center, radius } => ((z - center).norm() - radius).abs(),
            Curve::PolygonBoundary { vertices } => (0..vertices.len())
                .map(|k| segment_dist(vertices[k], vertices[(k + 1) % vertices.len()], z))
                .fold(f64::INFINITY, f64::min),
            Curve::Ellipse { .. } => {
                let pts = self.sample(4096);
                (0..pts.len())
                    .map(|k| segment_dist(pts[k], pts[(k + 1) % pts.len()], z))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let ok = Curve::Ellipse {
            center: Complex64::new(0.0, 0.0),
            semi_axes: [2.0, 1.0],
        };
        assert!(ok.validate().is_ok());
        let bad = Curve::Circle {
            center: Complex64::new(0.0, 0.0),
            radius: 0.0,
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn json_schema() {
        let c: Curve =
            serde_json::from_str(r#"{"type":"ellipse","semi_axes":[2,1],"center":[0,0]}"#).unwrap();
        assert!(matches!(c, Curve::Ellipse { semi_axes: [a, b], .. } if a == 2.0 && b == 1.0));
        let p: Curve = serde_json::from_str(
            r#"{"type":"polygon_boundary","vertices":[[0,0],[1,0],[0,1]]}"#,
        )
        .unwrap();
        assert!(p.dist(Complex64::new(0.5, 0.0)) < 1e-15);
    }
}
