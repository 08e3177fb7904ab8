//! Human-readable summary of a report.

use crate::suites::Report;

const HEADER: [&str; 6] = ["suite", "block", "dim", "status", "worst residual", "check"];

/// One row per check: suite, block, dimension, status, residual and the check name.
/// Failed rows point at the certificate in the JSON report.
pub fn report_render(report: &Report) -> String {
    let mut rows: Vec<[String; 6]> = Vec::new();
    for (i, c) in report.checks.iter().enumerate() {
        let (status, note) = if c.passed() {
            ("OK", c.identity.clone())
        } else {
            ("FAIL", format!("{} (certificate: checks[{i}])", c.identity))
        };
        rows.push([
            report.suite.clone(),
            c.block.clone(),
            c.dimension.to_string(),
            status.into(),
            c.residual.map_or_else(|| "exact".into(), |r| format!("{r:.3e}")),
            note,
        ]);
    }
    for (i, m) in report.monodromy.iter().enumerate() {
        let (status, pointer) = if m.passed { ("OK", String::new()) } else { ("FAIL", format!(" (monodromy[{i}])")) };
        rows.push([
            report.suite.clone(),
            format!("T_{} h={}{:+}i", m.generator, m.h[0], m.h[1]),
            m.eigenvalues.len().to_string(),
            status.into(),
            format!("{:.3e}", m.deviation),
            format!("spectrum matches quantum Weyl element{pointer}"),
        ]);
    }
    let mut width = HEADER.map(str::len);
    for r in &rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: [&str; 6]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(width).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(HEADER);
    for r in &rows {
        out.push_str(&line(r.each_ref().map(String::as_str)));
    }
    out
}
