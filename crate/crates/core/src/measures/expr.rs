use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, require_lake, Curve, Hull, Region, DEFAULT_SAMPLES};

/// A finite nonnegative planar measure built from area, arclength, and
/// point-mass terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MeasureExpr {
    Area {
        region: Region,
    },
    Arclength {
        curve: Curve,
    },
    Atom {
        point: Complex64,
        mass: f64,
    },
    Scaled {
        weight: f64,
        inner: Box<MeasureExpr>,
    },
    Sum {
        terms: Vec<MeasureExpr>,
    },
    /// Area measure on `outer` with the closed `lake` removed.
    LakeDifference {
        outer: Region,
        lake: Region,
    },
}

/// One geometric carrier of a measure's support.
#[derive(Clone, Debug)]
pub enum SupportPiece<'a> {
    Region(&'a Region),
    Curve(&'a Curve),
    Point(Complex64),
}

impl MeasureExpr {
    pub fn area(region: Region) -> Self {
        MeasureExpr::Area { region }
    }

    pub fn arclength(curve: Curve) -> Self {
        MeasureExpr::Arclength { curve }
    }

    pub fn atom(point: Complex64, mass: f64) -> Self {
        MeasureExpr::Atom { point, mass }
    }

    pub fn scaled(weight: f64, inner: MeasureExpr) -> Self {
        MeasureExpr::Scaled {
            weight,
            inner: Box::new(inner),
        }
    }

    pub fn sum(terms: Vec<MeasureExpr>) -> Self {
        MeasureExpr::Sum { terms }
    }

    pub fn lake_difference(outer: Region, lake: Region) -> Result<Self> {
        require_lake(&outer, &lake)?;
        Ok(MeasureExpr::LakeDifference { outer, lake })
    }

    /// Structural checks: positive weights and masses, valid curves, lakes
    /// compactly inside their hosts.
    pub fn validate(&self) -> Result<()> {
        match self {
            MeasureExpr::Area { .. } => Ok(()),
            MeasureExpr::Arclength { curve } => curve.validate(),
            MeasureExpr::Atom { point, mass } => {
                if !(point.re.is_finite() && point.im.is_finite()) {
                    Err(Error::InvalidMeasure(format!("atom at non-finite point {point}")))
                } else if !(*mass > 0.0 && mass.is_finite()) {
                    Err(Error::InvalidMeasure(format!("atom mass {mass} must be positive")))
                } else {
                    Ok(())
                }
            }
            MeasureExpr::Scaled { weight, inner } => {
                if !(*weight > 0.0 && weight.is_finite()) {
                    return Err(Error::InvalidMeasure(format!("weight {weight} must be positive")));
                }
                inner.validate()
            }
            MeasureExpr::Sum { terms } => {
                if terms.is_empty() {
                    return Err(Error::InvalidMeasure("empty sum".into()));
                }
                terms.iter().try_for_each(MeasureExpr::validate)
            }
            MeasureExpr::LakeDifference { outer, lake } => require_lake(outer, lake),
        }
    }

    /// Number of atoms if the measure is a finite sum of point masses.
    pub fn atom_count(&self) -> Option<usize> {
        match self {
            MeasureExpr::Atom { .. } => Some(1),
            MeasureExpr::Scaled { inner, .. } => inner.atom_count(),
            MeasureExpr::Sum { terms } => terms.iter().map(MeasureExpr::atom_count).sum(),
            _ => None,
        }
    }

    /// Carriers whose union contains the support.
    pub fn support_pieces(&self) -> Vec<SupportPiece<'_>> {
        match self {
            MeasureExpr::Area { region } | MeasureExpr::LakeDifference { outer: region, .. } => {
                vec![SupportPiece::Region(region)]
            }
            MeasureExpr::Arclength { curve } => vec![SupportPiece::Curve(curve)],
            MeasureExpr::Atom { point, .. } => vec![SupportPiece::Point(*point)],
            MeasureExpr::Scaled { inner, .. } => inner.support_pieces(),
            MeasureExpr::Sum { terms } => terms.iter().flat_map(MeasureExpr::support_pieces).collect(),
        }
    }

    /// Convex hull of the support: an exact disk when one disk or circle
    /// carries everything, otherwise a conservative polygon.
    pub fn support_hull(&self) -> Hull {
        let pieces = self.support_pieces();
        for piece in &pieces {
            let (center, radius) = match piece {
                SupportPiece::Region(Region::Disk { center, radius })
                | SupportPiece::Curve(Curve::Circle { center, radius }) => (*center, *radius),
                _ => continue,
            };
            let slack = 1e-12 * (1.0 + radius + center.norm());
            let inside = |z: Complex64| (z - center).norm() <= radius + slack;
            let covered = pieces.iter().all(|p| match p {
                SupportPiece::Region(Region::Disk { center: c, radius: r })
                | SupportPiece::Curve(Curve::Circle { center: c, radius: r }) => {
                    (c - center).norm() + r <= radius + slack
                }
                SupportPiece::Region(r) => r.boundary_paths(DEFAULT_SAMPLES).concat().into_iter().all(inside),
                SupportPiece::Curve(c) => c.sample(DEFAULT_SAMPLES).into_iter().all(inside),
                SupportPiece::Point(z) => inside(*z),
            });
            if covered {
                return Hull::Disk { center, radius };
            }
        }
        let mut points = Vec::new();
        for piece in &pieces {
            match piece {
                SupportPiece::Region(r) => match convex_hull(r) {
                    Hull::Polygon { vertices } => points.extend(vertices),
                    Hull::Disk { .. } => points.extend(r.hull_points(DEFAULT_SAMPLES)),
                },
                SupportPiece::Curve(c) => points.extend(c.hull_points(DEFAULT_SAMPLES)),
                SupportPiece::Point(z) => points.push(*z),
            }
        }
        Hull::from_points(&points)
    }

    /// Boundary polylines of every carrier, lakes included, for plotting.
    pub fn outline_paths(&self, per_component: usize) -> Vec<Vec<Complex64>> {
        match self {
            MeasureExpr::Area { region } => region.boundary_paths(per_component),
            MeasureExpr::LakeDifference { outer, lake } => {
                let mut paths = outer.boundary_paths(per_component);
                paths.extend(lake.boundary_paths(per_component));
                paths
            }
            MeasureExpr::Arclength { curve } => vec![curve.sample(per_component)],
            MeasureExpr::Atom { point, .. } => vec![vec![*point]],
            MeasureExpr::Scaled { inner, .. } => inner.outline_paths(per_component),
            MeasureExpr::Sum { terms } => terms.iter().flat_map(|t| t.outline_paths(per_component)).collect(),
        }
    }
}
