use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bernstein_core::bernstein::verify_upper_bound;
use bernstein_core::ellipse::best_ellipse;
use bernstein_core::geometry::{alpha as alpha_of, parse_polygon};
use bernstein_core::kernel::{
    kernel_area_closed, kernel_ellipse_closed_form, kernel_intersect, DirectionalBoundTable,
};
use bernstein_core::simplex::{siciak_extremal, ComplexVector};
use bernstein_core::sweep::{
    alpha_constant, alpha_squared_constant, compare_sweep, constants_sweep,
};
use bernstein_core::{ConvexPolygon, Point, SimplexPoint, UnitDirection};
use num_complex::Complex64;
use serde_json::json;

use crate::args::{
    AlphaArgs, CompareArgs, ConstantsArgs, EllipseArgs, ExtremalArgs, Format, KernelArgs, Source,
    VerifyArgs,
};
use crate::error::CliError;
use crate::format::{csv_table, g12, json_document, svg_polygon};

fn read_body(path: &Path) -> Result<ConvexPolygon, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_polygon(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Parse(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

pub fn alpha(a: &AlphaArgs) -> Result<String, CliError> {
    let k = read_body(&a.body)?;
    let x = k.interior(Point::new(a.x1, a.x2))?;
    Ok(format!("{}\n", g12(alpha_of(&x))))
}

pub fn compare(a: &CompareArgs) -> Result<String, CliError> {
    let sweep = compare_sweep(a.grid, a.dirs, a.margin)?;
    if let Some(path) = &a.out {
        let body = match a.format {
            Format::Csv => csv_table(
                &["x1", "x2", "phi", "inv_e", "kr", "baran", "quotient"],
                sweep
                    .rows
                    .iter()
                    .map(|r| vec![r.x1, r.x2, r.phi, r.inv_e, r.kr, r.baran, r.quotient]),
            ),
            Format::Json => json_document(
                &json!({
                    "grid": sweep.grid,
                    "dirs": sweep.dirs,
                    "margin": sweep.margin,
                    "summary": sweep.summary,
                }),
                &sweep.rows,
            ),
            f => return Err(unsupported("compare", f)),
        };
        write_out(path, &body)?;
    }
    let s = &sweep.summary;
    let mut out = String::new();
    let _ = writeln!(out, "rows {}", sweep.rows.len());
    let _ = writeln!(out, "min_quotient {}", g12(s.min_quotient));
    let _ = writeln!(
        out,
        "argmin x1 {} x2 {} phi {}",
        g12(s.argmin[0]),
        g12(s.argmin[1]),
        g12(s.argmin[2])
    );
    let angles: Vec<String> = s.near_equality_angles.iter().map(|v| g12(*v)).collect();
    let _ = writeln!(
        out,
        "near_equality {} at phi [{}]",
        s.near_equality,
        angles.join(", ")
    );
    Ok(out)
}

pub fn constants(a: &ConstantsArgs) -> Result<String, CliError> {
    let c = constants_sweep(a.grid, a.margin)?;
    let mut out = String::new();
    let _ = writeln!(out, "grid {} margin {}", c.grid_resolution, g12(c.margin));
    let _ = writeln!(
        out,
        "sup_ratio_alpha {} at ({}, {}); bound sqrt(3)/2 = {}",
        g12(c.sup_ratio_alpha),
        g12(c.argmax_alpha[0]),
        g12(c.argmax_alpha[1]),
        g12(alpha_constant())
    );
    let _ = writeln!(
        out,
        "sup_ratio_alpha2 {} at ({}, {}); bound sqrt(3+sqrt(5))/2 = {}",
        g12(c.sup_ratio_alpha2),
        g12(c.argmax_alpha2[0]),
        g12(c.argmax_alpha2[1]),
        g12(alpha_squared_constant())
    );
    let _ = writeln!(
        out,
        "constants sqrt(3) = {:.7}, sqrt(3+sqrt(5)) = {:.7}, 2*sqrt(2) = {:.7}",
        3f64.sqrt(),
        (3.0 + 5f64.sqrt()).sqrt(),
        2.0 * 2f64.sqrt()
    );
    Ok(out)
}

pub fn kernel(a: &KernelArgs) -> Result<String, CliError> {
    if a.format == Format::Json {
        return Err(unsupported("kernel", a.format));
    }
    let x = SimplexPoint::planar(a.x1, a.x2)?;
    let table = match a.source {
        Source::Kr => DirectionalBoundTable::kroo_revesz(&x, a.dirs)?,
        Source::Baran => DirectionalBoundTable::baran(&x, a.dirs)?,
    };
    let region = kernel_intersect(&table)?;
    let vertices: Vec<(f64, f64)> = region
        .polygon
        .vertices()
        .iter()
        .map(|v| (v.x, v.y))
        .collect();
    let ellipse = match a.source {
        Source::Baran => Some(kernel_ellipse_closed_form(&x)?),
        Source::Kr => None,
    };

    let mut out = String::new();
    let _ = writeln!(out, "area {}", g12(region.area));
    let _ = writeln!(out, "vertices {}", vertices.len());
    if let Some(e) = &ellipse {
        let closed = kernel_area_closed(&x)?;
        let _ = writeln!(out, "ellipse a {} b {} c {}", g12(e.a), g12(e.b), g12(e.c));
        let _ = writeln!(
            out,
            "ellipse minor {} major {} rotation {}",
            g12(e.minor),
            g12(e.major),
            g12(e.rotation)
        );
        let _ = writeln!(out, "closed_area {}", g12(closed));
        let _ = writeln!(
            out,
            "relative_discrepancy {}",
            g12((region.area - closed) / closed)
        );
    }

    if let Some(path) = &a.out {
        let body = match a.format {
            Format::Csv => csv_table(&["x", "y"], vertices.iter().map(|&(x, y)| vec![x, y])),
            _ => {
                let overlay: Option<Vec<(f64, f64)>> = ellipse.map(|e| {
                    let (ax, (c, s)) = (e.major_axis(), (e.major, e.minor));
                    (0..=256)
                        .map(|k| {
                            let t = 2.0 * std::f64::consts::PI * k as f64 / 256.0;
                            let (u, v) = (c * t.cos(), s * t.sin());
                            (u * ax.x - v * ax.y, u * ax.y + v * ax.x)
                        })
                        .collect()
                });
                svg_polygon(&vertices, overlay.as_deref())
            }
        };
        write_out(path, &body)?;
    }
    Ok(out)
}

pub fn verify(a: &VerifyArgs) -> Result<String, CliError> {
    let report = verify_upper_bound(a.degree, a.trials, a.seed)?;
    let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
    json.push('\n');
    let summary = format!(
        "degree {} trials {} seed {} violations {} skipped {} max_quotient {} witness_quotient {}\n",
        report.degree,
        report.trials,
        report.seed,
        report.violations.len(),
        report.skipped.len(),
        g12(report.max_quotient),
        g12(report.witness_quotient)
    );
    match &a.out {
        Some(path) => {
            write_out(path, &json)?;
            Ok(summary)
        }
        None => Ok(json),
    }
}

pub fn extremal(a: &ExtremalArgs) -> Result<String, CliError> {
    if !a.z.len().is_multiple_of(2) {
        return Err(CliError::Parse(format!(
            "expected `re im` pairs, got {} numbers",
            a.z.len()
        )));
    }
    let z = ComplexVector::new(a.z.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect())?;
    Ok(format!("{}\n", g12(siciak_extremal(&z))))
}

pub fn ellipse(a: &EllipseArgs) -> Result<String, CliError> {
    let k = read_body(&a.body)?;
    let x = k.interior(Point::new(a.x1, a.x2))?;
    let r = best_ellipse(&x, &UnitDirection::from_angle(a.phi));
    Ok(format!("{}\n", g12(r.best_b)))
}
