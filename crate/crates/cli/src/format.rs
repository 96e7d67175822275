//! Number formatting and table writers shared by the subcommands.

use std::fmt::Write as _;

use serde::Serialize;

/// `%.{digits}g`-style formatting: `digits` significant digits, trailing
/// zeros dropped, scientific notation outside `[1e-5, 10^digits)`.
pub fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Twelve significant digits, the precision of every CSV cell and printed value.
pub fn g12(v: f64) -> String {
    sig(v, 12)
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(g12).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct Document<'a, M: Serialize, R: Serialize> {
    meta: &'a M,
    rows: &'a [R],
}

pub fn json_document<M: Serialize, R: Serialize>(meta: &M, rows: &[R]) -> String {
    let mut s =
        serde_json::to_string_pretty(&Document { meta, rows }).expect("plain data serializes");
    s.push('\n');
    s
}

/// Polygon (and optionally an ellipse given as a closed point list) drawn in
/// a square viewport around the origin.
pub fn svg_polygon(vertices: &[(f64, f64)], overlay: Option<&[(f64, f64)]>) -> String {
    let extent = vertices
        .iter()
        .chain(overlay.unwrap_or(&[]).iter())
        .map(|(x, y)| x.abs().max(y.abs()))
        .fold(1e-9, f64::max)
        * 1.1;
    let size = 600.0;
    let map = |(x, y): (f64, f64)| {
        (
            size / 2.0 * (1.0 + x / extent),
            size / 2.0 * (1.0 - y / extent),
        )
    };
    let points = |pts: &[(f64, f64)]| {
        pts.iter()
            .map(|&p| {
                let (a, b) = map(p);
                format!("{a:.3},{b:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let h = size / 2.0;
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{h}" x2="{size}" y2="{h}" stroke="#bbb"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="{h}" y1="0" x2="{h}" y2="{size}" stroke="#bbb"/>"##
    );
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#4a7ab533" stroke="#1f4e8c" stroke-width="1.5"/>"##,
        points(vertices)
    );
    if let Some(o) = overlay {
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="none" stroke="#c0392b" stroke-dasharray="4 3"/>"##,
            points(o)
        );
    }
    out.push_str("</svg>\n");
    out
}
