//! One result, three renderings.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// What a subcommand produced. `passed` is false when the command computed
/// a verdict and that verdict failed.
pub struct Report {
    pub human: Vec<String>,
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub passed: bool,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report { human: Vec::new(), json, header: Vec::new(), rows: Vec::new(), passed: true }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.human.push(text.into());
        self
    }

    pub fn table(&mut self, header: Vec<&'static str>) -> &mut Self {
        self.header = header;
        self
    }

    pub fn row(&mut self, cells: Vec<String>) -> &mut Self {
        self.rows.push(cells);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human.join("\n"),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("report serializes"),
            Format::Csv => {
                let mut out = vec![self.header.join(",")];
                out.extend(
                    self.rows.iter().map(|r| r.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",")),
                );
                out.join("\n")
            }
        }
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
