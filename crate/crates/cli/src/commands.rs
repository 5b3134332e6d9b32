use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use parabolic_core::blocks::{block_vectors_by_composition, blocks_from_coloring};
use parabolic_core::exceptional::{self, exceptional_lookup, orbit_dim, tables, RootSystem};
use parabolic_core::strategy::MatrixOracle;
use parabolic_core::verify::{classical_kinds_up_to, verify_birationality, verify_partitions};
use parabolic_core::{
    classify_with, BlockVector, Coloring, Family, LieKind, NormalClosure, StrategyRegistry,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::record::OutputRecord;
use crate::render::{write_records, write_rows, Format};
use crate::StrategyArgs;

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| {
                CliError::Usage(format!("--{what}: `{t}` is not a non-negative integer"))
            })
        })
        .collect()
}

fn registry(strategy: &StrategyArgs) -> StrategyRegistry {
    let mut reg = StrategyRegistry::with_builtins();
    reg.register_partition(Box::new(MatrixOracle {
        trials: strategy.trials.max(1),
        first_seed: strategy.seed,
    }));
    reg
}

struct Classifier {
    registry: StrategyRegistry,
    partition: String,
    birational: String,
}

impl Classifier {
    fn new(strategy: &StrategyArgs) -> Result<Self, CliError> {
        let registry = registry(strategy);
        registry.partition(&strategy.partition_method)?;
        registry.birationality(&strategy.birational_method)?;
        Ok(Classifier {
            registry,
            partition: strategy.partition_method.clone(),
            birational: strategy.birational_method.clone(),
        })
    }

    fn blocks(
        &self,
        b: &BlockVector,
        coloring: Option<&Coloring>,
    ) -> Result<(OutputRecord, Vec<String>), CliError> {
        let report = classify_with(
            b,
            self.registry.partition(&self.partition)?,
            self.registry.birationality(&self.birational)?,
        )?;
        Ok((
            OutputRecord::from_report(&report, coloring),
            report.diagnostics,
        ))
    }

    fn coloring(&self, c: &Coloring) -> Result<(OutputRecord, Vec<String>), CliError> {
        if c.kind().is_classical() {
            self.blocks(&blocks_from_coloring(c)?, Some(c))
        } else {
            Ok((
                OutputRecord::from_exceptional(&exceptional_lookup(c)?),
                Vec::new(),
            ))
        }
    }
}

fn print_notes(notes: &[String]) {
    for n in notes {
        eprintln!("note: {n}");
    }
}

pub fn classify(
    out: &mut dyn Write,
    kind: &str,
    blocks: Option<&str>,
    central: Option<usize>,
    coloring: Option<&str>,
    format: Format,
    strategy: &StrategyArgs,
) -> Result<(), CliError> {
    let kind: LieKind = kind.parse()?;
    let classifier = Classifier::new(strategy)?;
    let (record, notes) = match (blocks, coloring) {
        (Some(_), _) if !kind.is_classical() => {
            return Err(CliError::Usage(format!(
                "{kind} is exceptional; describe it with --coloring"
            )));
        }
        (Some(d), _) => classifier.blocks(
            &BlockVector::new(kind, parse_list("blocks", d)?, central)?,
            None,
        )?,
        (None, Some(u)) => {
            classifier.coloring(&Coloring::new(kind, parse_list("coloring", u)?)?)?
        }
        (None, None) => return Err(CliError::Usage("give --blocks or --coloring".into())),
    };
    write_records(out, format, &[record])?;
    print_notes(&notes);
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Filters {
    pub nice: bool,
    pub birational: bool,
    pub sl2: bool,
    pub normal: bool,
}

impl Filters {
    fn keep(&self, r: &OutputRecord) -> bool {
        (!self.nice || r.nice)
            && (!self.birational || r.birational == Some(true))
            && (!self.sl2 || r.sl2)
            && (!self.normal || r.normal == NormalClosure::Normal.to_string())
    }
}

fn kinds_for(
    kind: &str,
    rank: Option<usize>,
    max_rank: Option<usize>,
) -> Result<Vec<LieKind>, CliError> {
    if let Ok(k) = kind.parse::<LieKind>() {
        if rank.is_some() || max_rank.is_some() {
            return Err(CliError::Usage(format!(
                "--kind {k} already fixes the rank"
            )));
        }
        return Ok(vec![k]);
    }
    let family: Family = kind.parse()?;
    if !family.is_classical() {
        return Ok(vec![LieKind::exceptional(family)?]);
    }
    match (rank, max_rank) {
        (Some(r), _) => Ok(vec![LieKind::new(family, r)?]),
        (None, Some(m)) => Ok((1..=m)
            .filter_map(|r| LieKind::new(family, r).ok())
            .collect()),
        (None, None) => Err(CliError::Usage(format!(
            "--kind {family} needs --rank or --max-rank"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn enumerate(
    out: &mut dyn Write,
    kind: &str,
    rank: Option<usize>,
    max_rank: Option<usize>,
    by_blocks: bool,
    filters: Filters,
    format: Format,
    strategy: &StrategyArgs,
) -> Result<(), CliError> {
    let kinds = kinds_for(kind, rank, max_rank)?;
    if kinds.iter().any(|k| !k.is_classical()) {
        if by_blocks {
            return Err(CliError::Usage(
                "--by-blocks applies to classical types only".into(),
            ));
        }
        if filters.normal {
            return Err(CliError::Usage(
                "--normal is not available for exceptional types".into(),
            ));
        }
    }
    let classifier = Classifier::new(strategy)?;
    let mut records = Vec::new();
    for k in kinds {
        let rows: Vec<(OutputRecord, Vec<String>)> = if by_blocks {
            block_vectors_by_composition(k)?
                .par_iter()
                .map(|b| classifier.blocks(b, None))
                .collect::<Result<_, _>>()?
        } else {
            Coloring::all(k)
                .par_iter()
                .map(|c| classifier.coloring(c))
                .collect::<Result<_, _>>()?
        };
        records.extend(rows.into_iter().map(|(r, _)| r).filter(|r| filters.keep(r)));
    }
    write_records(out, format, &records)
}

pub fn verify(
    out: &mut dyn Write,
    kind: Option<&str>,
    max_n: usize,
    trials: usize,
    seed: u64,
    quiet: bool,
) -> Result<(), CliError> {
    let mut kinds = classical_kinds_up_to(max_n);
    if let Some(name) = kind {
        if let Ok(k) = name.parse::<LieKind>() {
            if !k.is_classical() {
                return Err(CliError::Usage(format!(
                    "{k}: verification covers classical types only"
                )));
            }
            kinds = vec![k];
        } else {
            let family: Family = name.parse()?;
            if !family.is_classical() {
                return Err(CliError::Usage(format!(
                    "{family}: verification covers classical types only"
                )));
            }
            kinds.retain(|k| k.family() == family);
        }
    }
    let reg = StrategyRegistry::with_builtins();
    let closed = reg.partition("closed-form")?;
    let mut report = verify_partitions(&kinds, closed, trials.max(1), seed)?;
    report.extend(verify_birationality(
        &kinds,
        reg.birationality("blocks")?,
        reg.birationality("hesselink")?,
        closed,
    )?);

    let io = CliError::from;
    for case in &report.cases {
        if !quiet || !case.passed {
            let status = if case.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {} {}: {}",
                case.check, case.blocks, case.detail
            )
            .map_err(io)?;
        }
    }
    let failed = report.failures().count();
    let names: Vec<String> = kinds.iter().map(LieKind::to_string).collect();
    writeln!(
        out,
        "checked {} cases over {}: {} passed, {failed} failed",
        report.cases.len(),
        if names.is_empty() {
            "no types".to_string()
        } else {
            names.join(" ")
        },
        report.cases.len() - failed,
    )
    .map_err(io)?;
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportRow {
    pub kind: String,
    pub row: String,
    pub coloring: Vec<u8>,
    pub nice: bool,
    pub birational: bool,
    pub sl2: bool,
    pub orbit_dim: usize,
    pub stored_orbit_dim: Option<usize>,
    pub label: Option<String>,
    pub mismatch: bool,
}

const EXPORT_COLUMNS: [&str; 10] = [
    "kind",
    "row",
    "coloring",
    "nice",
    "birational",
    "sl2",
    "orbit_dim",
    "stored_orbit_dim",
    "label",
    "mismatch",
];

impl ExportRow {
    fn cells(&self) -> Vec<String> {
        vec![
            self.kind.clone(),
            self.row.clone(),
            self.coloring
                .iter()
                .map(u8::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            self.nice.to_string(),
            self.birational.to_string(),
            self.sl2.to_string(),
            self.orbit_dim.to_string(),
            self.stored_orbit_dim
                .map(|d| d.to_string())
                .unwrap_or_default(),
            self.label.clone().unwrap_or_default(),
            self.mismatch.to_string(),
        ]
    }
}

fn export_row(c: &Coloring, row: String) -> Result<ExportRow, CliError> {
    let rs = RootSystem::cached(c.kind())?;
    let recomputed = orbit_dim(rs, c)?;
    let rec = exceptional_lookup(c)?;
    let stored = exceptional::non_sl2_entry(c).map(|(_, dim, _)| dim);
    Ok(ExportRow {
        kind: c.kind().to_string(),
        row,
        coloring: c.entries().to_vec(),
        nice: rec.nice,
        birational: rec.birational,
        sl2: rec.sl2_given,
        orbit_dim: recomputed,
        stored_orbit_dim: stored,
        label: rec.bala_carter_label,
        mismatch: stored.is_some_and(|s| s != recomputed),
    })
}

/// Row numbers as printed: the E7 column leaves rows 5, 20 and 25 empty.
fn appendix_row_numbers(kind: LieKind, count: usize) -> Vec<usize> {
    let skip: &[usize] = if kind.family() == Family::E7 {
        &[5, 20, 25]
    } else {
        &[]
    };
    (1..).filter(|n| !skip.contains(n)).take(count).collect()
}

pub fn export(
    out: &mut dyn Write,
    kind: Option<&str>,
    table: &str,
    format: Format,
    path: Option<&Path>,
) -> Result<(), CliError> {
    let kinds: Vec<LieKind> = match kind {
        Some(s) => {
            let k: LieKind = s.parse()?;
            if k.is_classical() {
                return Err(CliError::Usage(format!(
                    "{k}: tables exist for exceptional types only"
                )));
            }
            vec![k]
        }
        None => Family::EXCEPTIONAL
            .iter()
            .map(|&f| LieKind::exceptional(f))
            .collect::<Result<_, _>>()?,
    };
    let mut rows = Vec::new();
    match table {
        "appendix" => {
            for k in kinds {
                let colorings = exceptional::appendix(k)?;
                let numbers = appendix_row_numbers(k, colorings.len());
                for (c, n) in colorings.iter().zip(numbers) {
                    rows.push(export_row(c, n.to_string())?);
                }
            }
        }
        "non-sl2" => {
            for &(row, k, u, _, _) in tables::NON_SL2 {
                let k: LieKind = k.parse()?;
                if kinds.contains(&k) {
                    rows.push(export_row(&Coloring::new(k, u.to_vec())?, row.to_string())?);
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown table `{other}`; use appendix or non-sl2"
            )))
        }
    }
    for r in rows.iter().filter(|r| r.mismatch) {
        eprintln!(
            "warning: {} row {}: recomputed orbit dimension {} differs from stored {:?}",
            r.kind, r.row, r.orbit_dim, r.stored_orbit_dim
        );
    }
    match path {
        Some(p) => {
            let io = |source| CliError::Io {
                path: p.to_path_buf(),
                source,
            };
            let file = File::create(p).map_err(io)?;
            let mut w = BufWriter::new(file);
            write_rows(&mut w, format, &EXPORT_COLUMNS, &rows, ExportRow::cells)?;
            w.flush().map_err(io)?;
        }
        None => write_rows(out, format, &EXPORT_COLUMNS, &rows, ExportRow::cells)?,
    }
    Ok(())
}
