//! Braid diagrams as ASCII art or SVG.
//!
//! Strands run top to bottom. Each factor is drawn from its reduced word;
//! crossings on disjoint strand pairs share a band. At every crossing the
//! strand going from upper right to lower left is in front.

use std::fmt::Write as _;

use crate::normal::PositiveWord;
use crate::text::reduced_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

pub fn render_diagram(w: &PositiveWord, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Ascii => render_ascii(w),
        DiagramFormat::Svg => render_svg(w),
    }
}

/// Each factor as a list of bands; a band is a list of generator indices
/// on pairwise disjoint strand pairs.
fn layout(w: &PositiveWord) -> Vec<Vec<Vec<usize>>> {
    w.letters()
        .iter()
        .map(|x| {
            let mut bands: Vec<Vec<usize>> = Vec::new();
            for i in reduced_word(x.perm()) {
                match bands.last_mut() {
                    Some(band) if band.iter().all(|&j| i.abs_diff(j) >= 2) => band.push(i),
                    _ => bands.push(vec![i]),
                }
            }
            bands
        })
        .collect()
}

fn plain_row(n: usize) -> Vec<u8> {
    let mut row = vec![b' '; 4 * (n - 1) + 1];
    for k in 0..n {
        row[4 * k] = b'|';
    }
    row
}

fn push_row(out: &mut String, row: &[u8]) {
    out.push_str(String::from_utf8_lossy(row).trim_end());
    out.push('\n');
}

/// Character grid: strands in columns `0, 4, 8, …`; a crossing of
/// strands `i`, `i+1` takes three rows.
///
/// ```text
/// |   |
///  \ /
///   /
///  / \
/// |   |
/// ```
pub fn render_ascii(w: &PositiveWord) -> String {
    let n = w.n();
    let mut out = String::new();
    push_row(&mut out, &plain_row(n));
    for (f, bands) in layout(w).iter().enumerate() {
        if f > 0 {
            push_row(&mut out, &plain_row(n));
        }
        for band in bands {
            let mut rows = [plain_row(n), plain_row(n), plain_row(n)];
            for &i in band {
                let c = 4 * (i - 1);
                for row in rows.iter_mut() {
                    row[c] = b' ';
                    row[c + 4] = b' ';
                }
                rows[0][c + 1] = b'\\';
                rows[0][c + 3] = b'/';
                rows[1][c + 2] = b'/';
                rows[2][c + 1] = b'/';
                rows[2][c + 3] = b'\\';
            }
            for row in &rows {
                push_row(&mut out, row);
            }
        }
    }
    push_row(&mut out, &plain_row(n));
    out
}

const PALETTE: [&str; 8] = [
    "#d62728", "#ff7f0e", "#2ca02c", "#1f77b4", "#000000", "#9467bd", "#8c564b", "#17becf",
];
const GAP: i64 = 40;
const MARGIN: i64 = 20;

/// SVG 1.1 with integer coordinates. Strands keep the colour of their top
/// endpoint; dashed lines mark factor boundaries.
pub fn render_svg(w: &PositiveWord) -> String {
    let n = w.n();
    let layout = layout(w);
    let band_count: usize = layout.iter().map(Vec::len).sum::<usize>().max(1);
    let width = 2 * MARGIN + GAP * (n as i64 - 1);
    let height = 2 * MARGIN + GAP * band_count as i64;
    let x = |k: usize| MARGIN + GAP * k as i64;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();
    out.push_str("<g fill=\"none\" stroke-width=\"3\" stroke-linecap=\"round\">\n");
    // strand_at[position] = strand (top endpoint) currently there
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut y = MARGIN;
    let mut boundaries = Vec::new();
    let draw_band = |out: &mut String, strand_at: &mut Vec<usize>, band: &[usize], y: i64| {
        let (y0, y1, ym) = (y, y + GAP, y + GAP / 2);
        let crossing = |p: usize| band.iter().any(|&i| p + 1 == i || p == i);
        for p in (0..n).filter(|&p| !crossing(p)) {
            let colour = PALETTE[strand_at[p] % PALETTE.len()];
            writeln!(out, "<path d=\"M {} {y0} V {y1}\" stroke=\"{colour}\"/>", x(p)).unwrap();
        }
        for &i in band {
            let (l, r) = (i - 1, i);
            let under = PALETTE[strand_at[l] % PALETTE.len()];
            let over = PALETTE[strand_at[r] % PALETTE.len()];
            let (xl, xr) = (x(l), x(r));
            out.push_str("<g class=\"crossing\">\n");
            writeln!(out, "<path d=\"M {xl} {y0} C {xl} {ym} {xr} {ym} {xr} {y1}\" stroke=\"{under}\"/>").unwrap();
            let front = format!("M {xr} {y0} C {xr} {ym} {xl} {ym} {xl} {y1}");
            writeln!(out, "<path d=\"{front}\" stroke=\"white\" stroke-width=\"9\"/>").unwrap();
            writeln!(out, "<path d=\"{front}\" stroke=\"{over}\"/>").unwrap();
            out.push_str("</g>\n");
            strand_at.swap(l, r);
        }
    };
    if layout.iter().all(Vec::is_empty) {
        draw_band(&mut out, &mut strand_at, &[], y);
    }
    for (f, bands) in layout.iter().enumerate() {
        if f > 0 && !bands.is_empty() {
            boundaries.push(y);
        }
        for band in bands {
            draw_band(&mut out, &mut strand_at, band, y);
            y += GAP;
        }
    }
    out.push_str("</g>\n");
    for by in boundaries {
        writeln!(
            out,
            "<line x1=\"{}\" y1=\"{by}\" x2=\"{}\" y2=\"{by}\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>",
            MARGIN / 2,
            width - MARGIN / 2
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
