//! SVG rendering of a single patch: filled faces, qubit dots, id labels.

use std::fmt::Write;

use crate::{Color, TriangularCode};

pub(crate) fn fill(c: Color) -> &'static str {
    match c {
        Color::Red => "#e06666",
        Color::Green => "#93c47d",
        Color::Blue => "#6fa8dc",
    }
}

/// Writes the patch into an `<svg>` document with `scale` pixels per unit.
pub fn render_svg(code: &TriangularCode, scale: f64) -> String {
    let mut body = String::new();
    draw(code, scale, 0.0, 0.0, &mut body);
    let (w, h) = extent(code, scale);
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\">\n{body}</svg>\n"
    )
}

/// Width and height of a drawing with margins.
pub fn extent(code: &TriangularCode, scale: f64) -> (f64, f64) {
    let xs = code.coords.iter().map(|c| c[0]);
    let ys = code.coords.iter().map(|c| c[1]);
    let (x0, x1) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (y0, y1) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    (
        (x1 - x0) as f64 * scale + 4.0 * scale,
        (y1 - y0) as f64 * scale + 4.0 * scale,
    )
}

/// Appends faces and qubits with the drawing's top-left corner at `(ox, oy)`.
pub fn draw(code: &TriangularCode, scale: f64, ox: f64, oy: f64, out: &mut String) {
    let x0 = code.coords.iter().map(|c| c[0]).min().unwrap_or(0);
    let y0 = code.coords.iter().map(|c| c[1]).min().unwrap_or(0);
    let px = |q: usize| {
        (
            ox + (code.coords[q][0] - x0) as f64 * scale + 2.0 * scale,
            oy + (code.coords[q][1] - y0) as f64 * scale + 2.0 * scale,
        )
    };
    for f in &code.faces {
        let pts: Vec<String> = code
            .face_ring(f)
            .iter()
            .map(|&q| {
                let (x, y) = px(q);
                format!("{x:.1},{y:.1}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"{}\" stroke=\"#333\" stroke-width=\"1\"/>",
            pts.join(" "),
            fill(f.color)
        );
    }
    for q in 0..code.n {
        let (x, y) = px(q);
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{:.1}\" fill=\"#000\"/>",
            scale * 0.5
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.1}\">{q}</text>",
            x + scale * 0.6,
            y - scale * 0.6,
            scale * 1.2
        );
    }
}
