//! Point-set text format.
//!
//! One point per line, two decimal coordinates separated by whitespace. Lines
//! starting with `#` are comments; an optional header `# hodt-points v1` is
//! written by the serializer. Coordinates are written with 17 significant
//! digits, which round-trips `f64` exactly.

use crate::error::Error;
use crate::geom::Point;
use crate::pointset::PointSet;
use crate::Result;

pub const HEADER: &str = "# hodt-points v1";

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut pts = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let x = it.next().ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: "missing x coordinate".into(),
        })?;
        let y = it.next().ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: "missing y coordinate".into(),
        })?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: "expected exactly two coordinates".into(),
            });
        }
        let x: f64 = x.parse().map_err(|e| Error::Parse {
            line: lineno + 1,
            msg: format!("bad x coordinate: {e}"),
        })?;
        let y: f64 = y.parse().map_err(|e| Error::Parse {
            line: lineno + 1,
            msg: format!("bad y coordinate: {e}"),
        })?;
        pts.push(Point::new(x, y));
    }
    PointSet::new(pts)
}

pub fn format_points(ps: &PointSet) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for p in ps.iter() {
        out.push_str(&format!("{:.16e} {:.16e}\n", p.x, p.y));
    }
    out
}

pub fn read_points(path: &std::path::Path) -> Result<PointSet> {
    parse_points(&std::fs::read_to_string(path)?)
}

pub fn write_points(path: &std::path::Path, ps: &PointSet) -> Result<()> {
    std::fs::write(path, format_points(ps))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let ps = PointSet::new(vec![
            Point::new(0.1 + 0.2, -1.0 / 3.0),
            Point::new(1e-300, 12345.678901234567),
        ])
        .unwrap();
        let text = format_points(&ps);
        let back = parse_points(&text).unwrap();
        for (a, b) in ps.iter().zip(back.iter()) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
        }
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let ps = parse_points("# hodt-points v1\n\n# comment\n1.0 2.0\n").unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0], Point::new(1.0, 2.0));
    }

    #[test]
    fn malformed_lines_error() {
        assert!(parse_points("1.0\n").is_err());
        assert!(parse_points("1.0 2.0 3.0\n").is_err());
        assert!(parse_points("a b\n").is_err());
    }
}
