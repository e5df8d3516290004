//! SVG render of a coloured point set.

use std::io::Write;
use std::ops::ControlFlow;

use crate::embed::ColouredRgg;
use crate::error::Result;
use crate::graph::EdgeSet;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 10.0;

const PALETTE: [&str; 16] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
];

/// Fill colour for first-colouring class `c`.
pub fn fill_for(c: usize) -> &'static str {
    let mut h = (c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    h ^= h >> 29;
    PALETTE[(h % PALETTE.len() as u64) as usize]
}

fn to_px(v: f64) -> f64 {
    MARGIN + v * (SIZE - 2.0 * MARGIN)
}

/// Edges of the threshold graph as grey lines, then one circle per point
/// filled by its `c1` class. `y` grows upwards.
pub fn emit_svg<W: Write>(coloured: &ColouredRgg, mut out: W) -> Result<()> {
    let ps = &coloured.point_set;
    let points = ps.points();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )?;
    writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#)?;
    writeln!(out, r##"<g stroke="#b0b0b0" stroke-width="0.5">"##)?;
    let written = ps.graph().try_for_each_edge(|u, v| {
        let (a, b) = (points[u], points[v]);
        match writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            to_px(a.x),
            to_px(1.0 - a.y),
            to_px(b.x),
            to_px(1.0 - b.y)
        ) {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => ControlFlow::Break(e),
        }
    });
    if let ControlFlow::Break(e) = written {
        return Err(e.into());
    }
    writeln!(out, "</g>")?;
    writeln!(out, r#"<g stroke="black" stroke-width="0.3">"#)?;
    for (v, p) in points.iter().enumerate() {
        writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{}"/>"#,
            to_px(p.x),
            to_px(1.0 - p.y),
            fill_for(coloured.pair.c1()[v])
        )?;
    }
    writeln!(out, "</g>")?;
    writeln!(out, "</svg>")?;
    Ok(())
}
