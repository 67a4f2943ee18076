//! Exact planar predicates and basic circle geometry.
//!
//! Sign decisions (orientation, in-circle) are delegated to adaptive-precision
//! arithmetic; the floating-point fast path is only accepted when its error
//! bound certifies the sign. Coordinates, circumcenters and radii are still
//! reported as `f64` for consumers that need metric data, but no combinatorial
//! decision is ever made from a rounded intermediate.

mod grid;

pub use grid::Grid;

use crate::error::Error;
use crate::pointset::PointSet;
use crate::Result;

/// A point in the plane. Coordinates must be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist_sq(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// Sign of the orientation determinant of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

/// Position of a query point relative to a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirclePosition {
    Inside,
    On,
    Outside,
}

/// A circle stored as center plus squared radius.
///
/// Used only for reporting and candidate pruning; containment decisions route
/// through [`in_circle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius_squared: f64,
}

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// Exact orientation of the triple `(p, q, r)`: the sign of twice the signed
/// area of the triangle.
pub fn orient(p: Point, q: Point, r: Point) -> Orientation {
    let d = robust::orient2d(coord(p), coord(q), coord(r));
    if d > 0.0 {
        Orientation::CounterClockwise
    } else if d < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Exact classification of `p` against the open disk bounded by the circle
/// through `a`, `b`, `c`. The result is normalized so that it does not depend
/// on the orientation of the defining triple.
///
/// Errors with `DegenerateCollinear` if `a`, `b`, `c` are collinear.
pub fn in_circle(a: Point, b: Point, c: Point, p: Point) -> Result<CirclePosition> {
    let d = match orient(a, b, c) {
        Orientation::CounterClockwise => robust::incircle(coord(a), coord(b), coord(c), coord(p)),
        Orientation::Clockwise => robust::incircle(coord(a), coord(c), coord(b), coord(p)),
        Orientation::Collinear => return Err(Error::DegenerateCollinear(0, 1, 2)),
    };
    Ok(if d > 0.0 {
        CirclePosition::Inside
    } else if d < 0.0 {
        CirclePosition::Outside
    } else {
        CirclePosition::On
    })
}

/// Circumcircle of a non-degenerate triangle.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circle> {
    if orient(a, b, c) == Orientation::Collinear {
        return Err(Error::DegenerateCollinear(0, 1, 2));
    }
    let bx = b.x - a.x;
    let by = b.y - a.y;
    let cx = c.x - a.x;
    let cy = c.y - a.y;
    let d = 2.0 * (bx * cy - by * cx);
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Ok(Circle {
        center: Point::new(a.x + ux, a.y + uy),
        radius_squared: ux * ux + uy * uy,
    })
}

/// Counts the points of `ps` strictly inside the circumcircle of the triangle
/// with vertex indices `tri`.
///
/// With `cutoff = Some(m)`, returns early with `m + 1` as soon as `m + 1`
/// interior points are confirmed. With a grid, only candidate points in cells
/// touching a conservative bounding box of the circle are tested; the final
/// call per point is still the exact predicate.
///
/// A point of `ps` exactly on the circumcircle is a general-position violation
/// and raises `DegenerateCocircular`.
pub fn count_in_circumcircle(
    ps: &PointSet,
    tri: [usize; 3],
    cutoff: Option<usize>,
    grid: Option<&Grid>,
) -> Result<usize> {
    let [i, j, k] = tri;
    let (a, b, c) = (ps[i], ps[j], ps[k]);
    if orient(a, b, c) == Orientation::Collinear {
        return Err(Error::DegenerateCollinear(i, j, k));
    }
    let mut count = 0usize;
    let mut check = |l: usize| -> Result<bool> {
        if l == i || l == j || l == k {
            return Ok(false);
        }
        match in_circle(a, b, c, ps[l])? {
            CirclePosition::Inside => {
                count += 1;
                if let Some(m) = cutoff {
                    if count > m {
                        return Ok(true);
                    }
                }
            }
            CirclePosition::On => return Err(Error::DegenerateCocircular(i, j, k, l)),
            CirclePosition::Outside => {}
        }
        Ok(false)
    };
    match grid {
        Some(g) => {
            // Conservative candidate set: the grid never excludes a point that
            // could be inside, falling back to a full scan if the circumcircle
            // is ill-conditioned in f64.
            match circumcircle(a, b, c) {
                Ok(circle) if circle.center.is_finite() && circle.radius_squared.is_finite() => {
                    let r = circle.radius_squared.sqrt();
                    let pad = 1e-6 * (circle.center.x.abs() + circle.center.y.abs() + r) + 1e-300;
                    let mut done = false;
                    g.for_each_in_box(
                        circle.center.x - r - pad,
                        circle.center.y - r - pad,
                        circle.center.x + r + pad,
                        circle.center.y + r + pad,
                        |l| {
                            if !done {
                                done = check(l)?;
                            }
                            Ok(())
                        },
                    )?;
                }
                _ => {
                    for l in 0..ps.len() {
                        if check(l)? {
                            break;
                        }
                    }
                }
            }
        }
        None => {
            for l in 0..ps.len() {
                if check(l)? {
                    break;
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_basic() {
        let o = Point::new(0.0, 0.0);
        assert_eq!(
            orient(o, Point::new(1.0, 0.0), Point::new(0.0, 1.0)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orient(o, Point::new(1.0, 1.0), Point::new(2.0, 2.0)),
            Orientation::Collinear
        );
        assert_eq!(
            orient(o, Point::new(0.0, 1.0), Point::new(1.0, 0.0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn in_circle_basic() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(2.0, 0.0);
        let c = Point::new(0.0, 2.0);
        assert_eq!(in_circle(a, b, c, Point::new(1.0, 1.0)).unwrap(), CirclePosition::Inside);
        assert_eq!(in_circle(a, b, c, Point::new(2.0, 2.0)).unwrap(), CirclePosition::On);
        assert_eq!(in_circle(a, b, c, Point::new(3.0, 3.0)).unwrap(), CirclePosition::Outside);
    }

    #[test]
    fn in_circle_orientation_normalized() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(2.0, 0.0);
        let c = Point::new(0.0, 2.0);
        let p = Point::new(1.0, 1.0);
        // All six orderings of the defining triple classify identically.
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)] {
            assert_eq!(in_circle(x, y, z, p).unwrap(), CirclePosition::Inside);
        }
    }

    #[test]
    fn in_circle_rejects_collinear() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 1.0);
        let c = Point::new(2.0, 2.0);
        assert!(in_circle(a, b, c, Point::new(0.0, 1.0)).is_err());
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.0, 2.0)).unwrap();
        assert!((c.center.x - 1.0).abs() < 1e-12 && (c.center.y - 1.0).abs() < 1e-12);
        assert!((c.radius_squared - 2.0).abs() < 1e-12);

        let c = circumcircle(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 0.5)).unwrap();
        assert!((c.center.x - 0.5).abs() < 1e-12 && c.center.y.abs() < 1e-12);
        assert!((c.radius_squared - 0.25).abs() < 1e-12);

        let c = circumcircle(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0)).unwrap();
        assert!((c.center.x - 2.0).abs() < 1e-12 && (c.center.y - 1.5).abs() < 1e-12);
        assert!((c.radius_squared - 6.25).abs() < 1e-12);
    }

    #[test]
    fn count_matches_direct_scan() {
        let ps = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0 - 1e-3, 1.0 - 1e-3),
        ])
        .unwrap();
        let n = count_in_circumcircle(&ps, [0, 1, 2], None, None).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn count_cutoff_early_exit() {
        let mut pts = vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(0.0, 4.0),
        ];
        for i in 0..10 {
            pts.push(Point::new(1.0 + 0.01 * i as f64, 1.0 + 0.013 * i as f64));
        }
        let ps = PointSet::new(pts).unwrap();
        let full = count_in_circumcircle(&ps, [0, 1, 2], None, None).unwrap();
        assert_eq!(full, 10);
        let capped = count_in_circumcircle(&ps, [0, 1, 2], Some(3), None).unwrap();
        assert!(capped > 3);
    }
}
