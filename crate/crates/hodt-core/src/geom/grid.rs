//! Uniform grid over the bounding box of a point set.
//!
//! Cell side is chosen so the grid has roughly `n` cells. The grid is a
//! candidate filter only: queries enumerate points from cells touching a
//! conservative box and the caller applies exact predicates. Immutable after
//! construction.

use crate::pointset::PointSet;
use crate::Result;

#[derive(Debug, Clone)]
pub struct Grid {
    min_x: f64,
    min_y: f64,
    cell: f64,
    cols: usize,
    rows: usize,
    cells: Vec<Vec<u32>>,
}

impl Grid {
    pub fn build(ps: &PointSet) -> Grid {
        let n = ps.len().max(1);
        let (min_x, min_y, max_x, max_y) = ps.bounding_box();
        let w = (max_x - min_x).max(1e-12);
        let h = (max_y - min_y).max(1e-12);
        let side = (n as f64).sqrt().ceil() as usize;
        let cell = (w.max(h) / side as f64).max(1e-12);
        let cols = ((w / cell).ceil() as usize + 1).max(1);
        let rows = ((h / cell).ceil() as usize + 1).max(1);
        let mut cells = vec![Vec::new(); cols * rows];
        for (i, p) in ps.iter().enumerate() {
            let cx = (((p.x - min_x) / cell) as usize).min(cols - 1);
            let cy = (((p.y - min_y) / cell) as usize).min(rows - 1);
            cells[cy * cols + cx].push(i as u32);
        }
        Grid { min_x, min_y, cell, cols, rows, cells }
    }

    fn col_of(&self, x: f64) -> isize {
        ((x - self.min_x) / self.cell).floor() as isize
    }

    fn row_of(&self, y: f64) -> isize {
        ((y - self.min_y) / self.cell).floor() as isize
    }

    /// Applies `f` to the index of every point whose cell intersects the box.
    pub fn for_each_in_box<F>(&self, x0: f64, y0: f64, x1: f64, y1: f64, mut f: F) -> Result<()>
    where
        F: FnMut(usize) -> Result<()>,
    {
        let c0 = self.col_of(x0).max(0) as usize;
        let c1 = (self.col_of(x1).max(0) as usize).min(self.cols - 1);
        let r0 = self.row_of(y0).max(0) as usize;
        let r1 = (self.row_of(y1).max(0) as usize).min(self.rows - 1);
        for r in r0..=r1 {
            for c in c0..=c1 {
                for &i in &self.cells[r * self.cols + c] {
                    f(i as usize)?;
                }
            }
        }
        Ok(())
    }

    /// Collects candidate point indices in the box (inclusive of boundary cells).
    pub fn candidates_in_box(&self, x0: f64, y0: f64, x1: f64, y1: f64) -> Vec<usize> {
        let mut out = Vec::new();
        let _ = self.for_each_in_box(x0, y0, x1, y1, |i| {
            out.push(i);
            Ok(())
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn grid_box_query_is_conservative() {
        let pts: Vec<Point> = (0..100)
            .map(|i| Point::new((i % 10) as f64 * 0.1, (i / 10) as f64 * 0.1))
            .collect();
        let ps = PointSet::new(pts).unwrap();
        let g = Grid::build(&ps);
        let cand = g.candidates_in_box(0.15, 0.15, 0.55, 0.55);
        // every point actually in the box must be among the candidates
        for (i, p) in ps.iter().enumerate() {
            if p.x >= 0.15 && p.x <= 0.55 && p.y >= 0.15 && p.y <= 0.55 {
                assert!(cand.contains(&i));
            }
        }
    }
}
