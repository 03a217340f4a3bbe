//! SVG drawing of regions and tilings.
//!
//! Unit triangle side 40 px, rows drawn horizontally. Dents are filled
//! black; a tiling, when given, is colored by lozenge kind and every
//! vertical lozenge carries its label.

use dentedhex::tilings::{LozengeKind, Region, Tiling};

const SIDE: f64 = 40.0;
const MARGIN: f64 = 20.0;
const COLOR_LEFT: &str = "#c04000";
const COLOR_RIGHT: &str = "#fdd5b1";
const COLOR_VERTICAL: &str = "#d2b48c";

fn row_height() -> f64 {
    SIDE * 3f64.sqrt() / 2.0
}

/// Converts region coordinates (horizontal offset in unit edges, depth in
/// rows) to pixels. The origin is the left end of the top side.
fn px(region: &Region, u: f64, depth: f64) -> (f64, f64) {
    (
        MARGIN + (u + region.h() as f64 / 2.0) * SIDE,
        MARGIN + depth * row_height(),
    )
}

fn polygon(region: &Region, pts: &[(f64, f64)], fill: &str, out: &mut String) {
    out.push_str("  <polygon points=\"");
    for (i, &(u, depth)) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let (x, y) = px(region, u, depth);
        out.push_str(&format!("{x:.2},{y:.2}"));
    }
    out.push_str(&format!(
        "\" fill=\"{fill}\" stroke=\"#444\" stroke-width=\"1.5\"/>\n"
    ));
}

fn up_triangle(row: u32, col: u32) -> [(f64, f64); 3] {
    let i = row as f64;
    let j = col as f64;
    let base = j - 1.0 - i / 2.0;
    [(base, i), (base + 1.0, i), (base + 0.5, i - 1.0)]
}

fn lozenge_polygon(l: &dentedhex::tilings::Lozenge) -> [(f64, f64); 4] {
    let i = l.row as f64;
    let j = l.col as f64;
    match l.kind {
        // up(i, j) + down(i+1, j)
        LozengeKind::Vertical => [
            (j - 0.5 - i / 2.0, i - 1.0),
            (j - i / 2.0, i),
            (j - (i + 1.0) / 2.0, i + 1.0),
            (j - 1.0 - i / 2.0, i),
        ],
        // up(i, j) + down(i, j)
        LozengeKind::RightTilted => [
            (j - 1.0 - i / 2.0, i),
            (j - i / 2.0, i),
            (j + 0.5 - i / 2.0, i - 1.0),
            (j - 0.5 - i / 2.0, i - 1.0),
        ],
        // up(i, j) + down(i, j-1)
        LozengeKind::LeftTilted => [
            (j - 1.5 - i / 2.0, i - 1.0),
            (j - 0.5 - i / 2.0, i - 1.0),
            (j - i / 2.0, i),
            (j - 1.0 - i / 2.0, i),
        ],
    }
}

/// Renders the region and, when given, a tiling of it.
pub fn region_svg(region: &Region, tiling: Option<&Tiling>) -> String {
    let x = region.x() as f64;
    let h = region.h() as f64;
    let width = 2.0 * MARGIN + (x + h) * SIDE;
    let height = 2.0 * MARGIN + h * row_height();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.2} {height:.2}\" \
         width=\"{width:.2}\" height=\"{height:.2}\">\n"
    ));

    // Region outline.
    polygon(
        region,
        &[(0.0, 0.0), (x, 0.0), (x + h / 2.0, h), (-h / 2.0, h)],
        "#f7f3ea",
        &mut out,
    );

    // Lozenges of the tiling, colored by kind, first so dents stay on top.
    if let Some(t) = tiling {
        for l in t.lozenges() {
            let fill = match l.kind {
                LozengeKind::Vertical => COLOR_VERTICAL,
                LozengeKind::LeftTilted => COLOR_LEFT,
                LozengeKind::RightTilted => COLOR_RIGHT,
            };
            polygon(region, &lozenge_polygon(l), fill, &mut out);
        }
        for l in t.lozenges() {
            if l.kind != LozengeKind::Vertical {
                continue;
            }
            let label = region.lozenge_label(l);
            let center_u = l.col as f64 - 0.5 - l.row as f64 / 2.0;
            let (cx, cy) = px(region, center_u, l.row as f64);
            out.push_str(&format!(
                "  <text x=\"{cx:.2}\" y=\"{cy:.2}\" font-size=\"{:.1}\" \
                 font-family=\"monospace\" text-anchor=\"middle\" \
                 dominant-baseline=\"middle\" fill=\"#222\">{label}</text>\n",
                SIDE * 0.35
            ));
        }
    }

    // Dents, filled black.
    for row in region.left_dents() {
        polygon(region, &up_triangle(row, 1), "#000", &mut out);
    }
    for row in region.right_dents() {
        polygon(region, &up_triangle(row, region.x() + row), "#000", &mut out);
    }

    out.push_str("</svg>\n");
    out
}
