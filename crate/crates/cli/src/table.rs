//! Column tables and their CSV form.

use std::fmt::Write as _;

/// Named columns of `f64`, one row per sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// Header row plus one line per row, every value with 17 significant
    /// digits. Formatting goes through `{:e}`, which ignores locale.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write!(out, "{}", format_number(*v)).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

/// `n` evenly spaced points from `lo` to `hi` inclusive. `n = 1` gives `lo`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    // endpoints exact, interior by index so the result is reproducible
    (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect()
}
