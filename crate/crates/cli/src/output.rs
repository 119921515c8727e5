//! Records emitted by the commands and their CSV and JSON encodings.
//!
//! CSV files start with one `#` comment line echoing the configuration,
//! then a single header row. JSON files hold `{command, config, units,
//! records}`, plus `landmarks` for trajectory output.

use std::io::Write;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::config::{Format, RunConfig};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct PotentialRow {
    pub x: f64,
    pub V: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct ReflectionRow {
    pub E: f64,
    pub R_ansatz: Option<f64>,
    pub R_standard: Option<f64>,
    pub deviation: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub quad_err: Option<f64>,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct GammaBetaRow {
    pub E: f64,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub diagnostic: String,
}

/// One trajectory as a polyline of `[x_r, x_i]` points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRecord {
    pub id: usize,
    pub class: String,
    pub launch: [f64; 2],
    pub backward_end: String,
    pub forward_end: String,
    pub t: Vec<f64>,
    pub points: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Landmark {
    pub kind: String,
    pub x: [f64; 2],
}

/// Flat CSV form of trajectory output: one row per point or landmark.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryCsvRow {
    pub kind: String,
    pub id: Option<usize>,
    pub label: String,
    pub t: Option<f64>,
    pub xr: f64,
    pub xi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Units {
    pub system: String,
    pub hbar: f64,
    pub mass: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self {
            system: "hbar = m = 1; lengths in a, energies in V0 units of the run".into(),
            hbar: 1.0,
            mass: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub command: String,
    pub config: RunConfig,
    pub units: Units,
    pub records: Vec<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub landmarks: Option<Vec<Landmark>>,
}

/// Trajectories and landmarks flattened to CSV rows.
pub fn trajectory_rows(
    records: &[TrajectoryRecord],
    landmarks: &[Landmark],
) -> Vec<TrajectoryCsvRow> {
    let mut rows = Vec::new();
    for l in landmarks {
        rows.push(TrajectoryCsvRow {
            kind: "landmark".into(),
            id: None,
            label: l.kind.clone(),
            t: None,
            xr: l.x[0],
            xi: l.x[1],
        });
    }
    for r in records {
        for (t, p) in r.t.iter().zip(&r.points) {
            rows.push(TrajectoryCsvRow {
                kind: "point".into(),
                id: Some(r.id),
                label: r.class.clone(),
                t: Some(*t),
                xr: p[0],
                xi: p[1],
            });
        }
    }
    rows
}

fn io(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

/// Encodes `rows` as CSV with the config echo comment.
pub fn write_csv<T: Serialize, W: Write>(
    mut w: W,
    command: &str,
    config: &RunConfig,
    header: &[&str],
    rows: &[T],
) -> Result<(), CliError> {
    writeln!(w, "# qtraj {command} {config}").map_err(io)?;
    let mut cw = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    cw.write_record(header).map_err(io)?;
    for r in rows {
        cw.serialize(r).map_err(io)?;
    }
    cw.flush().map_err(io)
}

pub fn write_json<T: Serialize, W: Write>(mut w: W, doc: &Document<T>) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut w, doc).map_err(io)?;
    writeln!(w).map_err(io)
}

/// Reads CSV rows written by [`write_csv`].
pub fn read_csv<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, CliError> {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(io)).collect()
}

pub fn read_json<T: DeserializeOwned>(text: &str) -> Result<Document<T>, CliError> {
    serde_json::from_str(text).map_err(io)
}

/// Writes either encoding of a command's records.
pub fn emit<T: Serialize, W: Write>(
    w: W,
    format: Format,
    doc: &Document<T>,
    header: &[&str],
) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(w, &doc.command, &doc.config, header, &doc.records),
        Format::Json => write_json(w, doc),
    }
}
