//! Bilayers drawn as two stacked lattices, layer-a on top, with purple links
//! from each layer-b to the block it is Bell-paired with.

use std::fmt::Write;

use colorcode::{draw, extent};

use crate::ChainedCode;

pub fn render_chain_svg(code: &ChainedCode, scale: f64) -> String {
    let mut body = String::new();
    let gap = 2.0 * scale;
    let mut x = 0.0;
    let mut height: f64 = 4.0 * scale;
    let _ = writeln!(
        body,
        "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"#000\"/>",
        2.0 * scale,
        2.0 * scale,
        scale * 0.5
    );
    let mut prev_a = (2.0 * scale, 2.0 * scale);
    x += 4.0 * scale + gap;
    for bl in &code.bilayers {
        let (w, h) = extent(&bl.code, scale);
        draw(&bl.code, scale, x, 0.0, &mut body);
        draw(&bl.code, scale, x, h + gap, &mut body);
        let b_mid = (x + w / 2.0, h + gap + h / 2.0);
        let _ = writeln!(
            body,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#8e44ad\" stroke-width=\"3\"/>",
            prev_a.0, prev_a.1, b_mid.0, b_mid.1
        );
        prev_a = (x + w / 2.0, h / 2.0);
        height = height.max(2.0 * h + gap);
        x += w + gap;
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{x:.0}\" height=\"{height:.0}\">\n{body}</svg>\n"
    )
}
