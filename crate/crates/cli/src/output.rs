use std::io::Write;

use serde::Serialize;

use crate::args::Units;

pub const SCHEMA_VERSION: u32 = 1;

/// One state in a `spectrum` or `compare` listing.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub state_label: String,
    pub n: u32,
    pub l: u32,
    pub inv_b: f64,
    pub alpha: f64,
    pub scheme: String,
    pub molecule: Option<String>,
    pub energy_analytic: Option<f64>,
    pub energy_numeric: Option<f64>,
    pub delta: Option<f64>,
    pub units: String,
    pub error: Option<String>,
}

impl ReportRow {
    pub const HEADER: [&'static str; 12] = [
        "state",
        "n",
        "l",
        "inv_b",
        "alpha",
        "scheme",
        "molecule",
        "energy_analytic",
        "energy_numeric",
        "delta",
        "units",
        "error",
    ];

    fn record(&self, decimals: usize) -> [String; 12] {
        [
            self.state_label.clone(),
            self.n.to_string(),
            self.l.to_string(),
            self.inv_b.to_string(),
            self.alpha.to_string(),
            self.scheme.clone(),
            self.molecule.clone().unwrap_or_default(),
            fixed(self.energy_analytic, decimals),
            fixed(self.energy_numeric, decimals),
            self.delta.map(|d| format!("{d:.3e}")).unwrap_or_default(),
            self.units.clone(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema: &'static str,
    pub schema_version: u32,
    pub command: &'static str,
    pub units: &'static str,
    pub rows: &'a [ReportRow],
    pub max_abs_delta: Option<f64>,
}

/// One printed number of a regenerated grid.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub state_label: String,
    pub n: u32,
    pub l: u32,
    pub inv_b: f64,
    pub molecule: Option<String>,
    pub alpha: f64,
    /// `"0,1"` for the shared Hulthén column, otherwise the α value.
    pub alpha_label: String,
    pub column: String,
    pub method: String,
    pub binding_energy: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct TableDoc<'a> {
    pub schema: &'static str,
    pub schema_version: u32,
    pub table: u8,
    pub units: &'static str,
    pub cells: &'a [TableCell],
}

#[derive(Debug, Serialize)]
pub struct WavefunctionDoc<'a> {
    pub schema: &'static str,
    pub schema_version: u32,
    pub state_label: String,
    pub n: u32,
    pub l: u32,
    pub inv_b: f64,
    pub alpha: f64,
    pub scheme: String,
    pub units: &'static str,
    pub norm_constant: f64,
    pub epsilon_prime: f64,
    pub lambda: f64,
    pub nodes: usize,
    pub samples: &'a [(f64, f64)],
}

pub fn fixed(v: Option<f64>, decimals: usize) -> String {
    v.map(|x| format!("{x:.decimals$}")).unwrap_or_default()
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_report_csv<W: Write>(out: W, rows: &[ReportRow], units: Units) -> csv::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(ReportRow::HEADER)?;
    for row in rows {
        w.write_record(row.record(units.decimals()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut out: W, doc: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, doc)?;
    out.write_all(b"\n")
}
