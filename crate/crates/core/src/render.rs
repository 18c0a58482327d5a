//! Deterministic SVG rendering of assemblies.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diffusion::Enclosure;
use crate::geometry::{Bounds, Dim, Point};
use crate::model::{Assembly, TileSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// z-slice of a 3D assembly; `None` lays all slices out side by side.
    pub slice: Option<i32>,
    pub highlight_constrained: bool,
    /// Pixels per lattice cell.
    pub scale: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            slice: None,
            highlight_constrained: false,
            scale: 24,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("slice z={slice} is outside the assembly's range {min}..={max}")]
    SliceOutOfRange { slice: i32, min: i32, max: i32 },
}

/// Stable colour from a tile id (FNV-1a).
fn colour(id: &str) -> String {
    let mut h: u32 = 0x811c_9dc5;
    for b in id.bytes() {
        h ^= u32::from(b);
        h = h.wrapping_mul(0x0100_0193);
    }
    let hue = h % 360;
    format!("hsl({hue},55%,70%)")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn render_svg(
    assembly: &Assembly,
    tiles: &TileSet,
    opts: RenderOptions,
) -> Result<String, RenderError> {
    let bounds = Bounds::of(assembly.points()).unwrap_or(Bounds {
        min: Point::ORIGIN,
        max: Point::ORIGIN,
    });
    let slices: Vec<i32> = match (assembly.dim(), opts.slice) {
        (Dim::Two, _) => vec![0],
        (Dim::Three, Some(z)) => {
            if z < bounds.min.z || z > bounds.max.z {
                return Err(RenderError::SliceOutOfRange {
                    slice: z,
                    min: bounds.min.z,
                    max: bounds.max.z,
                });
            }
            vec![z]
        }
        (Dim::Three, None) => (bounds.min.z..=bounds.max.z).collect(),
    };
    let hatched = if opts.highlight_constrained {
        Enclosure::of(assembly).constrained_points()
    } else {
        Default::default()
    };
    let s = opts.scale.max(1) as i32;
    let cols = bounds.max.x - bounds.min.x + 1;
    let rows = bounds.max.y - bounds.min.y + 1;
    let gap = 1;
    let width = (cols * slices.len() as i32 + gap * (slices.len() as i32 - 1)) * s;
    let height = rows * s;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    if opts.highlight_constrained {
        out.push_str(concat!(
            r#"<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">"#,
            r##"<line x1="0" y1="0" x2="0" y2="6" stroke="#c33" stroke-width="2"/></pattern></defs>"##,
            "\n"
        ));
    }
    for (k, &z) in slices.iter().enumerate() {
        let x_off = k as i32 * (cols + gap) * s;
        let cell = |p: Point| (x_off + (p.x - bounds.min.x) * s, (bounds.max.y - p.y) * s);
        for (p, t) in assembly.iter().filter(|(p, _)| p.z == z) {
            let (x, y) = cell(p);
            let tt = tiles.tile(t);
            let _ = writeln!(
                out,
                r##"<rect class="tile" x="{x}" y="{y}" width="{s}" height="{s}" fill="{}" stroke="#333"/><text x="{}" y="{}" font-size="{}" text-anchor="middle">{}</text>"##,
                colour(&tt.id),
                x + s / 2,
                y + s * 2 / 3,
                (s / 3).max(6),
                escape(&tt.label)
            );
        }
        for p in hatched.iter().filter(|p| p.z == z) {
            let (x, y) = cell(*p);
            let _ = writeln!(
                out,
                r#"<rect class="constrained" x="{x}" y="{y}" width="{s}" height="{s}" fill="url(#hatch)"/>"#
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
