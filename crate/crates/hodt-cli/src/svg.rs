//! Static SVG rendering of point sets and triangulations.

use hodt_core::delaunay::Triangulation;
use hodt_core::PointSet;

pub fn render(ps: &PointSet, t: Option<&Triangulation>) -> String {
    let (min_x, min_y, max_x, max_y) = ps.bounding_box();
    let w = (max_x - min_x).max(1e-9);
    let h = (max_y - min_y).max(1e-9);
    let size = 800.0;
    let margin = 40.0;
    let scale = (size - 2.0 * margin) / w.max(h);
    let tx = |x: f64| margin + (x - min_x) * scale;
    // flip y so the picture is upright
    let ty = |y: f64| size - margin - (y - min_y) * scale;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    if let Some(t) = t {
        for (u, v) in t.edges() {
            out.push_str(&format!(
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#555\" stroke-width=\"1\"/>\n",
                tx(ps[u].x), ty(ps[u].y), tx(ps[v].x), ty(ps[v].y)
            ));
        }
    }
    for p in ps.iter() {
        out.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#c33\"/>\n",
            tx(p.x), ty(p.y)
        ));
    }
    out.push_str("</svg>\n");
    out
}
