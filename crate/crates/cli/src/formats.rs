//! CSV and JSON emitters.
//!
//! CSV is UTF-8 with LF line endings, numbers printed to 6 significant
//! digits. Absent cells (a failed method, a grid point beyond the
//! front) are empty fields in CSV and `null` in JSON.

use serde::Serialize;
use stefan_core::problem::SimilaritySolution;
use stefan_core::report::{ConvergencePoint, ErrorRow, FieldGrid};

/// Formats `x` with the given number of significant digits, in plain
/// decimal notation.
pub fn fmt_sig(x: f64, digits: u32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - magnitude;
    if decimals <= 0 {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (x / scale).round() * scale)
    } else {
        format!("{:.*}", decimals as usize, x)
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| fmt_sig(x, 6)).unwrap_or_default()
}

/// `sweep,nu_exact,<method>_nu,<method>_pct,...` with one row per sweep
/// value. The header is derived from the first row's method list.
pub fn table_csv(rows: &[ErrorRow]) -> String {
    let mut out = String::from("sweep,nu_exact");
    if let Some(first) = rows.first() {
        for cell in &first.entries {
            out.push_str(&format!(",{m}_nu,{m}_pct", m = cell.method.name()));
        }
    }
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_sig(row.sweep_value, 6));
        out.push(',');
        out.push_str(&fmt_sig(row.nu_exact, 6));
        for cell in &row.entries {
            out.push(',');
            out.push_str(&opt(cell.nu));
            out.push(',');
            out.push_str(&opt(cell.pct_error));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct CellJson<'a> {
    method: &'a str,
    nu: Option<f64>,
    pct_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct RowJson<'a> {
    sweep: f64,
    nu_exact: f64,
    entries: Vec<CellJson<'a>>,
}

/// JSON array of row objects mirroring the table rows.
pub fn table_json(rows: &[ErrorRow]) -> String {
    let rows: Vec<RowJson> = rows
        .iter()
        .map(|r| RowJson {
            sweep: r.sweep_value,
            nu_exact: r.nu_exact,
            entries: r
                .entries
                .iter()
                .map(|c| CellJson {
                    method: c.method.name(),
                    nu: c.nu,
                    pct_error: c.pct_error,
                    note: c.note.as_deref(),
                })
                .collect(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("table serialization");
    s.push('\n');
    s
}

pub fn convergence_csv(points: &[ConvergencePoint]) -> String {
    let mut out = String::from("bi,nu_h,nu_limit,gap\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_sig(p.bi, 6),
            fmt_sig(p.nu_h, 6),
            fmt_sig(p.nu_limit, 6),
            fmt_sig(p.gap, 6)
        ));
    }
    out
}

#[derive(Serialize)]
struct ConvergenceJson {
    bi: f64,
    nu_h: f64,
    nu_limit: f64,
    gap: f64,
}

pub fn convergence_json(points: &[ConvergencePoint]) -> String {
    let rows: Vec<ConvergenceJson> = points
        .iter()
        .map(|p| ConvergenceJson {
            bi: p.bi,
            nu_h: p.nu_h,
            nu_limit: p.nu_limit,
            gap: p.gap,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("sweep serialization");
    s.push('\n');
    s
}

/// Field grid CSV: first row carries the x values (empty corner cell,
/// trailing `front_position` header), each following row is
/// `t, temperatures..., front`.
pub fn field_csv(grid: &FieldGrid) -> String {
    let mut out = String::new();
    for &x in &grid.x_values {
        out.push(',');
        out.push_str(&fmt_sig(x, 6));
    }
    out.push_str(",front_position\n");
    for (j, &t) in grid.t_values.iter().enumerate() {
        out.push_str(&fmt_sig(t, 6));
        for cell in &grid.temperature[j] {
            out.push(',');
            out.push_str(&opt(*cell));
        }
        out.push(',');
        out.push_str(&fmt_sig(grid.front_position[j], 6));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct FieldJson<'a> {
    method: &'a str,
    x_values: &'a [f64],
    t_values: &'a [f64],
    temperature: &'a [Vec<Option<f64>>],
    front_position: &'a [f64],
}

pub fn field_json(grid: &FieldGrid) -> String {
    let mut s = serde_json::to_string_pretty(&FieldJson {
        method: grid.method.name(),
        x_values: &grid.x_values,
        t_values: &grid.t_values,
        temperature: &grid.temperature,
        front_position: &grid.front_position,
    })
    .expect("field serialization");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct SolveJson<'a> {
    method: &'a str,
    nu: f64,
    #[serde(rename = "A")]
    coeff_a: f64,
    #[serde(rename = "B")]
    coeff_b: f64,
}

pub fn solve_json(sol: &SimilaritySolution) -> String {
    let mut s = serde_json::to_string_pretty(&SolveJson {
        method: sol.method.name(),
        nu: sol.nu,
        coeff_a: sol.coeff_a,
        coeff_b: sol.coeff_b,
    })
    .expect("solution serialization");
    s.push('\n');
    s
}

pub fn solve_csv(sol: &SimilaritySolution) -> String {
    format!(
        "method,nu,A,B\n{},{},{},{}\n",
        sol.method.name(),
        fmt_sig(sol.nu, 6),
        fmt_sig(sol.coeff_a, 6),
        fmt_sig(sol.coeff_b, 6)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.46478592064624445, 6), "0.464786");
        assert_eq!(fmt_sig(1.4530, 6), "1.45300");
        assert_eq!(fmt_sig(-0.5366, 6), "-0.536600");
        assert_eq!(fmt_sig(123456789.0, 6), "123457000");
        assert_eq!(fmt_sig(0.0, 6), "0");
        assert_eq!(fmt_sig(1e-7, 6), "0.000000100000");
    }
}
