//! Ordered planar point sets.

use std::ops::Index;

use crate::error::Error;
use crate::geom::Point;
use crate::Result;

/// An immutable, ordered list of planar points.
///
/// General position (no three collinear, no four cocircular) is an input
/// contract checked lazily: operations that would be ill-defined on a
/// degenerate configuration raise errors when they encounter one.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates finiteness and exact duplicates.
    pub fn new(points: Vec<Point>) -> Result<PointSet> {
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "point {i} has non-finite coordinates"
                )));
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] && points.len() <= 4096 {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for p in &self.points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        (min_x, min_y, max_x, max_y)
    }

    /// Smallest pairwise distance; O(n^2), intended for generator audits on
    /// small sets.
    pub fn min_pairwise_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                best = best.min(self.points[i].dist_sq(&self.points[j]));
            }
        }
        best.sqrt()
    }
}

impl Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_nonfinite() {
        assert!(PointSet::new(vec![Point::new(0.0, 0.0), Point::new(0.0, 0.0)]).is_err());
        assert!(PointSet::new(vec![Point::new(f64::NAN, 0.0)]).is_err());
    }
}
