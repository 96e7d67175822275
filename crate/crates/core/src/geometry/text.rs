//! Plain-text polygon files: one `x y` vertex per line, counterclockwise,
//! `#` starts a comment line, blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::polygon::{validate, ConvexPolygon, Point};

pub fn parse_polygon(text: &str) -> Result<ConvexPolygon> {
    let mut vertices = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::PolygonSyntax {
                line,
                message: format!("expected two coordinates, found {} fields", fields.len()),
            });
        }
        let mut coord = [0.0; 2];
        for (slot, field) in coord.iter_mut().zip(&fields) {
            *slot = field.parse::<f64>().map_err(|e| Error::PolygonSyntax {
                line,
                message: format!("cannot parse {field:?}: {e}"),
            })?;
            if !slot.is_finite() {
                return Err(Error::PolygonSyntax {
                    line,
                    message: format!("non-finite coordinate {field:?}"),
                });
            }
        }
        vertices.push(Point::new(coord[0], coord[1]));
        lines.push(line);
    }
    if let Err(e) = validate(&vertices) {
        let line = e
            .vertex
            .map(|v| lines[v])
            .unwrap_or(lines.last().copied().unwrap_or(0));
        return Err(Error::PolygonSyntax {
            line,
            message: e.message,
        });
    }
    ConvexPolygon::new(vertices)
}

pub fn format_polygon(k: &ConvexPolygon) -> String {
    let mut out = String::new();
    for v in k.vertices() {
        let _ = writeln!(out, "{:?} {:?}", v.x, v.y);
    }
    out
}
