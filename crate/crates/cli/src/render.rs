use std::io::Write;

use clap::ValueEnum;

use crate::error::CliError;
use crate::record::{OutputRecord, COLUMNS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub fn write_records(
    out: &mut dyn Write,
    format: Format,
    records: &[OutputRecord],
) -> Result<(), CliError> {
    match format {
        Format::Table => write_table(out, records),
        Format::Json => write_json_lines(out, records),
        Format::Csv => write_csv(out, records),
    }
}

fn write_json_lines<T: serde::Serialize>(
    out: &mut dyn Write,
    records: &[T],
) -> Result<(), CliError> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out).map_err(CliError::from)?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, records: &[OutputRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in records {
        w.write_record(r.cells())?;
    }
    w.flush().map_err(CliError::from)?;
    Ok(())
}

fn write_table(out: &mut dyn Write, records: &[OutputRecord]) -> Result<(), CliError> {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            r.cells()
                .into_iter()
                .map(|c| if c.is_empty() { "-".to_string() } else { c })
                .collect()
        })
        .collect();
    write_aligned(out, &COLUMNS, &rows)
}

pub fn write_aligned(
    out: &mut dyn Write,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), CliError> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let io = CliError::from;
    writeln!(out, "{}", line(header.to_vec())).map_err(io)?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).map_err(io)?;
    }
    Ok(())
}

/// Arbitrary serializable rows as JSON lines or CSV with a fixed header.
pub fn write_rows<T: serde::Serialize>(
    out: &mut dyn Write,
    format: Format,
    header: &[&str],
    records: &[T],
    cells: impl Fn(&T) -> Vec<String>,
) -> Result<(), CliError> {
    match format {
        Format::Json => write_json_lines(out, records),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(header)?;
            for r in records {
                w.write_record(cells(r))?;
            }
            w.flush().map_err(CliError::from)?;
            Ok(())
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records.iter().map(&cells).collect();
            write_aligned(out, header, &rows)
        }
    }
}
