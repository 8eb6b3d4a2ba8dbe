use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::LabError;

/// One CSV file: a `#` description line, a `#` units line, then the
/// column header and rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub file: String,
    pub title: String,
    pub columns: Vec<(String, String)>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(file: &str, title: impl Into<String>, columns: &[(&str, &str)]) -> Self {
        Self {
            file: file.to_string(),
            title: title.into(),
            columns: columns.iter().map(|(c, u)| (c.to_string(), u.to_string())).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width in {}", self.file);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let k = self.columns.iter().position(|(c, _)| c == name)?;
        Some(self.rows.iter().map(|r| r[k].as_str()).collect())
    }

    pub fn to_csv(&self) -> Result<String, LabError> {
        let units: Vec<String> = self.columns.iter().map(|(c, u)| format!("{c} [{u}]")).collect();
        let mut head = format!("# {}\n# units: {}\n", self.title, units.join(", "));
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|(c, _)| c))?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        let body = w.into_inner().map_err(|e| LabError::Io(e.into_error()))?;
        head.push_str(&String::from_utf8(body).expect("csv output is utf-8"));
        Ok(head)
    }
}

/// Plain text artifacts (e.g. a circuit listing) written next to the tables.
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub file: String,
    pub text: String,
}

#[derive(Clone, Debug, Default)]
pub struct RunOutput {
    pub tables: Vec<Table>,
    pub artifacts: Vec<Artifact>,
    /// Scalar results echoed into the manifest.
    pub summary: BTreeMap<String, f64>,
}

impl RunOutput {
    pub fn table(&self, file: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.file == file)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub experiment: String,
    pub seed: u64,
    pub threads: Option<usize>,
    pub unix_time: u64,
    pub elapsed_s: f64,
    pub files: Vec<String>,
    pub versions: BTreeMap<String, String>,
    pub summary: BTreeMap<String, f64>,
    pub config: toml::Value,
}

pub fn fmt(x: f64) -> String {
    format!("{x}")
}

/// Writes every file or none: anything already written is removed if a
/// later write fails.
pub fn write_all(dir: &Path, out: &RunOutput, manifest: &Manifest) -> Result<Vec<PathBuf>, LabError> {
    fs::create_dir_all(dir)?;
    let mut files: Vec<(String, String)> = Vec::new();
    for t in &out.tables {
        files.push((t.file.clone(), t.to_csv()?));
    }
    for a in &out.artifacts {
        files.push((a.file.clone(), a.text.clone()));
    }
    let text = toml::to_string(manifest).map_err(|e| LabError::Config(e.to_string()))?;
    files.push((format!("{}.manifest.toml", manifest.experiment), text));
    let mut written = Vec::new();
    for (name, body) in files {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, body) {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            return Err(e.into());
        }
        written.push(path);
    }
    Ok(written)
}
