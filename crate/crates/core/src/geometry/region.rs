use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default separation required between union parts and between a lake and
/// the boundary of its host region.
pub const DEFAULT_MARGIN: f64 = 1e-6;

/// Default number of boundary samples per component.
pub const DEFAULT_SAMPLES: usize = 512;

/// A closed planar region.
///
/// Sector angles are stored in units of π so that openings such as `3π/2`
/// stay exact.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRegion", into = "RawRegion")]
pub enum Region {
    Disk {
        center: Complex64,
        radius: f64,
    },
    Sector {
        center: Complex64,
        radius: f64,
        start_pi: f64,
        end_pi: f64,
    },
    Polygon {
        vertices: Vec<Complex64>,
    },
    Union {
        parts: Vec<Region>,
    },
}

impl Region {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        check_radius(radius)?;
        check_point(center)?;
        Ok(Region::Disk { center, radius })
    }

    /// Sector with vertex `center` spanning angles `[start_pi·π, end_pi·π]`.
    pub fn sector(center: Complex64, radius: f64, start_pi: f64, end_pi: f64) -> Result<Self> {
        check_radius(radius)?;
        check_point(center)?;
        let opening = end_pi - start_pi;
        if !(opening > 0.0 && opening <= 2.0) || !start_pi.is_finite() {
            return Err(Error::GeometryInvalid(format!(
                "sector opening {opening}π must lie in (0, 2π]"
            )));
        }
        Ok(Region::Sector {
            center,
            radius,
            start_pi,
            end_pi,
        })
    }

    /// Simple polygon; clockwise input is reoriented counterclockwise.
    pub fn polygon(mut vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::GeometryInvalid("polygon needs at least 3 vertices".into()));
        }
        for v in &vertices {
            check_point(*v)?;
        }
        let area = signed_area(&vertices);
        if area.abs() <= f64::EPSILON {
            return Err(Error::GeometryInvalid("polygon has zero area".into()));
        }
        if !is_simple(&vertices) {
            return Err(Error::GeometryInvalid("polygon is self-intersecting".into()));
        }
        if area < 0.0 {
            vertices.reverse();
        }
        Ok(Region::Polygon { vertices })
    }

    pub fn union(parts: Vec<Region>) -> Result<Self> {
        Self::union_with_margin(parts, DEFAULT_MARGIN)
    }

    /// Union of parts whose closures are pairwise at least `margin` apart.
    pub fn union_with_margin(parts: Vec<Region>, margin: f64) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::GeometryInvalid("union of no parts".into()));
        }
        let flat: Vec<Region> = parts
            .into_iter()
            .flat_map(|p| match p {
                Region::Union { parts } => parts,
                other => vec![other],
            })
            .collect();
        for i in 0..flat.len() {
            for j in i + 1..flat.len() {
                let gap = separation(&flat[i], &flat[j]);
                if gap <= margin {
                    return Err(Error::GeometryInvalid(format!(
                        "union parts {i} and {j} are not separated (gap {gap:.3e})"
                    )));
                }
            }
        }
        Ok(Region::Union { parts: flat })
    }

    /// Regular pentagon with corners at the fifth roots of unity.
    pub fn unit_pentagon() -> Self {
        // Upper vertices are conjugated so the polygon is exactly symmetric about the real axis.
        let a = Complex64::from_polar(1.0, 0.4 * PI);
        let b = Complex64::from_polar(1.0, 0.8 * PI);
        let vertices = vec![Complex64::new(1.0, 0.0), a, b, b.conj(), a.conj()];
        Region::Polygon { vertices }
    }

    /// Non-union components.
    pub fn parts(&self) -> Vec<&Region> {
        match self {
            Region::Union { parts } => parts.iter().flat_map(Region::parts).collect(),
            other => vec![other],
        }
    }

    /// Closed-region membership with boundary tolerance `tol`.
    pub fn contains_tol(&self, z: Complex64, tol: f64) -> bool {
        match self {
            Region::Disk { center, radius } => (z - center).norm() <= radius + tol,
            Region::Sector { .. } => {
                self.sector_angle_contains(z) && (z - self.center()).norm() <= self.radius() + tol
                    || self.dist_to_boundary(z) <= tol
            }
            Region::Polygon { vertices } => {
                point_in_polygon(vertices, z) || polygon_boundary_dist(vertices, z) <= tol
            }
            Region::Union { parts } => parts.iter().any(|p| p.contains_tol(z, tol)),
        }
    }

    /// Membership with the default f64 boundary tolerance.
    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_tol(z, self.default_tol())
    }

    pub fn default_tol(&self) -> f64 {
        let (lo, hi) = self.bbox();
        let scale = lo.norm().max(hi.norm()).max(1.0);
        64.0 * f64::EPSILON * scale
    }

    fn center(&self) -> Complex64 {
        match self {
            Region::Disk { center, .. } | Region::Sector { center, .. } => *center,
            _ => Complex64::new(0.0, 0.0),
        }
    }

    fn radius(&self) -> f64 {
        match self {
            Region::Disk { radius, .. } | Region::Sector { radius, .. } => *radius,
            _ => 0.0,
        }
    }

    fn sector_angle_contains(&self, z: Complex64) -> bool {
        let Region::Sector {
            center,
            start_pi,
            end_pi,
            ..
        } = self
        else {
            return false;
        };
        let w = z - center;
        if w.norm() == 0.0 {
            return true;
        }
        let opening = (end_pi - start_pi) * PI;
        let rel = (w.arg() - start_pi * PI).rem_euclid(2.0 * PI);
        rel <= opening
    }

    /// Euclidean distance from `z` to the boundary.
    pub fn dist_to_boundary(&self, z: Complex64) -> f64 {
        match self {
            Region::Disk { center, radius } => ((z - center).norm() - radius).abs(),
            Region::Sector {
                center,
                radius,
                start_pi,
                end_pi,
            } => {
                let a = center + Complex64::from_polar(*radius, start_pi * PI);
                let b = center + Complex64::from_polar(*radius, end_pi * PI);
                let mut d = if end_pi - start_pi >= 2.0 {
                    f64::INFINITY
                } else {
                    segment_dist(*center, a, z).min(segment_dist(*center, b, z))
                };
                let w = z - center;
                let opening = (end_pi - start_pi) * PI;
                let rel = (w.arg() - start_pi * PI).rem_euclid(2.0 * PI);
                let arc = if w.norm() > 0.0 && rel <= opening {
                    (w.norm() - radius).abs()
                } else {
                    (z - a).norm().min((z - b).norm())
                };
                d = d.min(arc);
                if end_pi - start_pi >= 2.0 {
                    // full disk with a slit along start ray
                    d = d.min(segment_dist(*center, a, z));
                }
                d
            }
            Region::Polygon { vertices } => polygon_boundary_dist(vertices, z),
            Region::Union { parts } => parts
                .iter()
                .map(|p| p.dist_to_boundary(z))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Closed boundary polylines, one per component, with points exactly on
    /// the boundary (up to f64 rounding).
    pub fn boundary_paths(&self, per_component: usize) -> Vec<Vec<Complex64>> {
        let m = per_component.max(8);
        match self {
            Region::Disk { center, radius } => vec![arc_points(*center, *radius, 0.0, 2.0, m, 1.0)],
            Region::Sector {
                center,
                radius,
                start_pi,
                end_pi,
            } => {
                let mut path = vec![*center];
                path.extend(arc_points(*center, *radius, *start_pi, *end_pi, m, 1.0));
                vec![path]
            }
            Region::Polygon { vertices } => {
                let per_edge = (m / vertices.len()).max(1);
                let mut path = Vec::with_capacity(per_edge * vertices.len());
                for (k, a) in vertices.iter().enumerate() {
                    let b = vertices[(k + 1) % vertices.len()];
                    for i in 0..per_edge {
                        path.push(a + (b - a) * (i as f64 / per_edge as f64));
                    }
                }
                vec![path]
            }
            Region::Union { parts } => parts.iter().flat_map(|p| p.boundary_paths(m)).collect(),
        }
    }

    /// Points whose convex hull contains the region: polygon corners exactly,
    /// circular arcs replaced by circumscribed tangent polygons.
    pub fn hull_points(&self, per_component: usize) -> Vec<Complex64> {
        let m = per_component.max(8);
        match self {
            Region::Disk { center, radius } => {
                let h = 2.0 / m as f64;
                arc_points(*center, *radius, 0.0, 2.0, m, 1.0 / (h * PI / 2.0).cos())
            }
            Region::Sector {
                center,
                radius,
                start_pi,
                end_pi,
            } => {
                let h = (end_pi - start_pi) / m as f64;
                let mut pts = vec![*center];
                pts.extend(arc_points(
                    *center,
                    *radius,
                    *start_pi,
                    *end_pi,
                    m,
                    1.0 / (h * PI / 2.0).cos(),
                ));
                pts
            }
            Region::Polygon { vertices } => vertices.clone(),
            Region::Union { parts } => parts.iter().flat_map(|p| p.hull_points(m)).collect(),
        }
    }

    /// A point of each component that lies in its interior (area centroid for
    /// disks, sectors, and convex polygons).
    pub fn part_centroids(&self) -> Vec<Complex64> {
        self.parts()
            .into_iter()
            .map(|p| match p {
                Region::Disk { center, .. } => *center,
                Region::Sector {
                    center,
                    radius,
                    start_pi,
                    end_pi,
                } => {
                    let half = (end_pi - start_pi) * PI / 2.0;
                    let mid = (start_pi + end_pi) * PI / 2.0;
                    let r = 2.0 * radius * half.sin() / (3.0 * half);
                    center + Complex64::from_polar(r, mid)
                }
                Region::Polygon { vertices } => polygon_centroid(vertices),
                Region::Union { .. } => unreachable!("parts are never unions"),
            })
            .collect()
    }

    pub fn area(&self) -> f64 {
        match self {
            Region::Disk { radius, .. } => PI * radius * radius,
            Region::Sector {
                radius,
                start_pi,
                end_pi,
                ..
            } => 0.5 * radius * radius * (end_pi - start_pi) * PI,
            Region::Polygon { vertices } => signed_area(vertices),
            Region::Union { parts } => parts.iter().map(Region::area).sum(),
        }
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Complex64, Complex64) {
        let pts = self.hull_points(64);
        bbox_of(&pts)
    }
}

pub(crate) fn bbox_of(pts: &[Complex64]) -> (Complex64, Complex64) {
    let mut lo = Complex64::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo.re = lo.re.min(p.re);
        lo.im = lo.im.min(p.im);
        hi.re = hi.re.max(p.re);
        hi.im = hi.im.max(p.im);
    }
    (lo, hi)
}

/// Points on an arc of radius `radius·stretch`, angles in units of π,
/// endpoints included for open arcs.
pub(crate) fn arc_points(
    center: Complex64,
    radius: f64,
    start_pi: f64,
    end_pi: f64,
    m: usize,
    stretch: f64,
) -> Vec<Complex64> {
    let full = end_pi - start_pi >= 2.0;
    let count = if full { m } else { m + 1 };
    (0..count)
        .map(|k| {
            let t = start_pi + (end_pi - start_pi) * k as f64 / m as f64;
            center + Complex64::from_polar(radius * stretch, t * PI)
        })
        .collect()
}

fn check_radius(radius: f64) -> Result<()> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(Error::GeometryInvalid(format!("radius {radius} must be positive")))
    }
}

fn check_point(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::GeometryInvalid(format!("non-finite point {z}")))
    }
}

pub(crate) fn signed_area(v: &[Complex64]) -> f64 {
    let n = v.len();
    (0..n)
        .map(|k| {
            let (a, b) = (v[k], v[(k + 1) % n]);
            a.re * b.im - b.re * a.im
        })
        .sum::<f64>()
        / 2.0
}

fn polygon_centroid(v: &[Complex64]) -> Complex64 {
    let n = v.len();
    let area = signed_area(v);
    let mut c = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let (a, b) = (v[k], v[(k + 1) % n]);
        let cross = a.re * b.im - b.re * a.im;
        c += (a + b) * cross;
    }
    c / (6.0 * area)
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segments_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |a: Complex64, b: Complex64, p: Complex64, d: f64| {
        d == 0.0
            && p.re >= a.re.min(b.re)
            && p.re <= a.re.max(b.re)
            && p.im >= a.im.min(b.im)
            && p.im <= a.im.max(b.im)
    };
    on(q1, q2, p1, d1) || on(q1, q2, p2, d2) || on(p1, p2, q1, d3) || on(p1, p2, q2, d4)
}

fn is_simple(v: &[Complex64]) -> bool {
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            if segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn segment_dist(a: Complex64, b: Complex64, z: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

fn polygon_boundary_dist(v: &[Complex64], z: Complex64) -> f64 {
    (0..v.len())
        .map(|k| segment_dist(v[k], v[(k + 1) % v.len()], z))
        .fold(f64::INFINITY, f64::min)
}

fn point_in_polygon(v: &[Complex64], z: Complex64) -> bool {
    let mut inside = false;
    let n = v.len();
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (v[i], v[j]);
        if (a.im > z.im) != (b.im > z.im) {
            let x = (b.re - a.re) * (z.im - a.im) / (b.im - a.im) + a.re;
            if z.re < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Signed clearance of `inner` inside `outer`: the distance from the closure of
/// `inner` to the complement of `outer`, negative when `inner` pokes out.
pub fn lake_margin(outer: &Region, inner: &Region) -> f64 {
    if let Region::Disk { center, radius } = inner {
        let d = outer.dist_to_boundary(*center);
        return if outer.contains_tol(*center, 0.0) {
            d - radius
        } else {
            -(d + radius)
        };
    }
    let samples = 2048;
    let mut worst = f64::INFINITY;
    for path in inner.boundary_paths(samples) {
        let spacing = path_spacing(&path);
        for &p in &path {
            let d = outer.dist_to_boundary(p);
            let signed = if outer.contains_tol(p, 0.0) { d } else { -d };
            worst = worst.min(signed - spacing / 2.0);
        }
    }
    worst
}

fn path_spacing(path: &[Complex64]) -> f64 {
    (0..path.len())
        .map(|k| (path[(k + 1) % path.len()] - path[k]).norm())
        .fold(0.0, f64::max)
}

/// Gap between the closures of two non-union regions; nonpositive if they
/// touch or overlap.
pub fn separation(a: &Region, b: &Region) -> f64 {
    if let (Region::Disk { center: c1, radius: r1 }, Region::Disk { center: c2, radius: r2 }) = (a, b) {
        return (c1 - c2).norm() - r1 - r2;
    }
    let one_way = |x: &Region, y: &Region| {
        let mut gap = f64::INFINITY;
        for path in x.boundary_paths(2048) {
            let spacing = path_spacing(&path);
            for &p in &path {
                if y.contains_tol(p, 0.0) {
                    return -1.0;
                }
                gap = gap.min(y.dist_to_boundary(p) - spacing / 2.0);
            }
        }
        gap
    };
    one_way(a, b).min(one_way(b, a))
}

/// True iff the closure of `lake` sits in the interior of `host` with
/// clearance greater than [`DEFAULT_MARGIN`].
pub fn validate_lake(host: &Region, lake: &Region) -> bool {
    lake_margin(host, lake) > DEFAULT_MARGIN
}

/// Like [`validate_lake`] but reports the failing clearance.
pub fn require_lake(host: &Region, lake: &Region) -> Result<()> {
    let margin = lake_margin(host, lake);
    if margin > DEFAULT_MARGIN {
        Ok(())
    } else {
        Err(Error::InvalidLake { margin })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum RawRegion {
    Disk {
        center: Complex64,
        radius: f64,
    },
    Sector {
        center: Complex64,
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        angle_start: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        angle_end: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        angle_start_pi: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        angle_end_pi: Option<f64>,
    },
    Polygon {
        vertices: Vec<Complex64>,
    },
    Union {
        parts: Vec<Region>,
    },
}

impl TryFrom<RawRegion> for Region {
    type Error = Error;

    fn try_from(raw: RawRegion) -> Result<Self> {
        match raw {
            RawRegion::Disk { center, radius } => Region::disk(center, radius),
            RawRegion::Sector {
                center,
                radius,
                angle_start,
                angle_end,
                angle_start_pi,
                angle_end_pi,
            } => {
                let start = angle_start_pi
                    .or(angle_start.map(|a| a / PI))
                    .ok_or_else(|| Error::GeometryInvalid("sector needs angle_start or angle_start_pi".into()))?;
                let end = angle_end_pi
                    .or(angle_end.map(|a| a / PI))
                    .ok_or_else(|| Error::GeometryInvalid("sector needs angle_end or angle_end_pi".into()))?;
                Region::sector(center, radius, start, end)
            }
            RawRegion::Polygon { vertices } => Region::polygon(vertices),
            RawRegion::Union { parts } => Region::union(parts),
        }
    }
}

impl From<Region> for RawRegion {
    fn from(r: Region) -> Self {
        match r {
            Region::Disk { center, radius } => RawRegion::Disk { center, radius },
            Region::Sector {
                center,
                radius,
                start_pi,
                end_pi,
            } => RawRegion::Sector {
                center,
                radius,
                angle_start: None,
                angle_end: None,
                angle_start_pi: Some(start_pi),
                angle_end_pi: Some(end_pi),
            },
            Region::Polygon { vertices } => RawRegion::Polygon { vertices },
            Region::Union { parts } => RawRegion::Union { parts },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_disk() -> Region {
        Region::disk(c(0.0, 0.0), 1.0).unwrap()
    }

    fn big_sector() -> Region {
        Region::sector(c(0.0, 0.0), 1.0, -0.75, 0.75).unwrap()
    }

    #[test]
    fn disk_membership() {
        assert!(unit_disk().contains(c(0.5, 0.0)));
        assert!(!unit_disk().contains(c(2.0, 0.0)));
        assert!(unit_disk().contains(c(0.0, 1.0)));
    }

    #[test]
    fn pentagon_contains_origin() {
        let p = Region::unit_pentagon();
        assert!(p.contains(c(0.0, 0.0)));
        assert!(p.contains(c(1.0, 0.0)));
        assert!(!p.contains(c(0.9, 0.5)));
    }

    #[test]
    fn sector_membership_wraps_angles() {
        let s = big_sector();
        assert!(s.contains(c(0.5, 0.0)));
        assert!(s.contains(c(0.0, 0.9)));
        assert!(s.contains(c(0.0, 0.0)));
        assert!(!s.contains(c(-0.5, -0.1)));
        assert!(s.contains(c(-0.3, 0.31)));
        assert!(!s.contains(c(1.1, 0.0)));
    }

    #[test]
    fn lakes() {
        let hole = Region::disk(c(0.2, 0.0), 0.25).unwrap();
        assert!(validate_lake(&unit_disk(), &hole));
        let escaping = Region::disk(c(0.9, 0.0), 0.25).unwrap();
        assert!(!validate_lake(&unit_disk(), &escaping));
        assert!(matches!(
            require_lake(&unit_disk(), &escaping),
            Err(Error::InvalidLake { .. })
        ));
        let sector_hole = Region::disk(c(0.5, 0.0), 0.25).unwrap();
        assert!(validate_lake(&big_sector(), &sector_hole));
        assert!(!validate_lake(&sector_hole, &big_sector()));
        let tri = Region::polygon(vec![c(-0.1, -0.1), c(0.1, -0.1), c(0.0, 0.1)]).unwrap();
        assert!(validate_lake(&unit_disk(), &tri));
        assert!(!validate_lake(&tri, &unit_disk()));
    }

    #[test]
    fn polygon_validation() {
        assert!(Region::polygon(vec![c(0.0, 0.0), c(1.0, 0.0)]).is_err());
        let bowtie = vec![c(0.0, 0.0), c(1.0, 1.0), c(1.0, 0.0), c(0.0, 1.0)];
        assert!(Region::polygon(bowtie).is_err());
        let cw = Region::polygon(vec![c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        assert!(cw.area() > 0.0);
    }

    #[test]
    fn union_requires_separation() {
        let a = unit_disk();
        let b = Region::disk(c(1.5, 0.0), 0.6).unwrap();
        assert!(Region::union(vec![a.clone(), b]).is_err());
        let far = Region::disk(c(3.5, 0.0), 2.0 / 3.0).unwrap();
        assert!(Region::union(vec![Region::unit_pentagon(), far.clone()]).is_ok());
        assert!(Region::union(vec![big_sector(), far]).is_ok());
    }

    #[test]
    fn json_schema_round_trip() {
        let json = r#"{"type":"union","parts":[
            {"type":"sector","center":[0,0],"radius":1,"angle_start":-2.356194490192345,"angle_end":2.356194490192345},
            {"type":"disk","center":[3.5,0],"radius":0.6666666666666666}]}"#;
        let r: Region = serde_json::from_str(json).unwrap();
        let Region::Union { parts } = &r else { panic!() };
        assert!(matches!(parts[0], Region::Sector { start_pi, .. } if (start_pi + 0.75).abs() < 1e-15));
        let back: Region = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"type":"disk","center":[0,0],"radius":-1}"#;
        assert!(serde_json::from_str::<Region>(bad).is_err());
    }

    #[test]
    fn centroids_are_inside() {
        let r = Region::union(vec![
            big_sector(),
            Region::disk(c(3.5, 0.0), 2.0 / 3.0).unwrap(),
        ])
        .unwrap();
        for z in r.part_centroids() {
            assert!(r.contains(z));
        }
        for z in Region::unit_pentagon().part_centroids() {
            assert!(z.norm() < 1e-15);
        }
    }
}
