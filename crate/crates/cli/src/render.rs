use std::io::{self, Write};

use serde_json::Value;

use crate::args::Format;

/// A command result in all three output formats.
///
/// `fields` drives both the default text rendering (`key=value` lines) and
/// TSV (one header line, one row per entry of `rows`).
pub struct Report {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    pub text: Option<String>,
    /// `false` when a checked hypothesis or verdict failed.
    pub ok: bool,
}

impl Report {
    pub fn single(fields: Vec<(&'static str, String)>, json: Value, ok: bool) -> Self {
        let (header, row): (Vec<_>, Vec<_>) = fields.into_iter().unzip();
        Report {
            header,
            rows: vec![row],
            json,
            text: None,
            ok,
        }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Tsv => self.write_tsv(out),
            Format::Text => match &self.text {
                Some(t) => writeln!(out, "{t}"),
                None if self.rows.len() == 1 => {
                    for (k, v) in self.header.iter().zip(&self.rows[0]) {
                        writeln!(out, "{k}={v}")?;
                    }
                    Ok(())
                }
                None => self.write_tsv(out),
            },
        }
    }

    fn write_tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.header.join("\t"))?;
        for row in &self.rows {
            writeln!(out, "{}", row.join("\t"))?;
        }
        Ok(())
    }
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}
