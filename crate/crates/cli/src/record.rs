use parabolic_core::exceptional::ExceptionalRecord;
use parabolic_core::{ClassificationReport, Coloring};
use serde::{Deserialize, Serialize};

/// Column names, in output order.
pub const COLUMNS: [&str; 12] = [
    "kind",
    "coloring",
    "blocks",
    "central",
    "nice",
    "birational",
    "sl2",
    "normal",
    "partition",
    "orbit_dim",
    "covering_degree",
    "label",
];

/// One classified parabolic, flattened for output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub kind: String,
    pub coloring: Vec<u8>,
    pub blocks: Option<Vec<usize>>,
    pub central: Option<usize>,
    pub nice: bool,
    pub birational: Option<bool>,
    pub sl2: bool,
    pub normal: String,
    pub partition: Option<Vec<usize>>,
    pub orbit_dim: Option<usize>,
    pub covering_degree: Option<u64>,
    pub label: Option<String>,
}

impl OutputRecord {
    pub fn from_report(report: &ClassificationReport, coloring: Option<&Coloring>) -> Self {
        let coloring = coloring.or(report.coloring.as_ref());
        OutputRecord {
            kind: report.kind.to_string(),
            coloring: coloring.map(|c| c.entries().to_vec()).unwrap_or_default(),
            blocks: report.blocks.as_ref().map(|b| b.d().to_vec()),
            central: report.blocks.as_ref().and_then(|b| b.central()),
            nice: report.nice,
            birational: report.birational,
            sl2: report.sl2_given,
            normal: report.normal_closure.to_string(),
            partition: report.partition.as_ref().map(|p| p.parts().to_vec()),
            orbit_dim: report.orbit_dim,
            covering_degree: report.covering_degree,
            label: report.bala_carter_label.clone(),
        }
    }

    pub fn from_exceptional(rec: &ExceptionalRecord) -> Self {
        Self::from_report(&rec.to_report(), None)
    }

    /// Flat cells, `COLUMNS` order. Lists are space separated, absent values empty.
    pub fn cells(&self) -> Vec<String> {
        fn list<T: ToString>(v: &[T]) -> String {
            v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
        }
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        vec![
            self.kind.clone(),
            list(&self.coloring),
            self.blocks.as_deref().map(list).unwrap_or_default(),
            opt(&self.central),
            self.nice.to_string(),
            opt(&self.birational),
            self.sl2.to_string(),
            self.normal.clone(),
            self.partition.as_deref().map(list).unwrap_or_default(),
            opt(&self.orbit_dim),
            opt(&self.covering_degree),
            opt(&self.label),
        ]
    }

    /// Inverse of [`OutputRecord::cells`].
    #[cfg(test)]
    pub fn from_cells(cells: &[String]) -> Result<Self, String> {
        if cells.len() != COLUMNS.len() {
            return Err(format!(
                "expected {} cells, got {}",
                COLUMNS.len(),
                cells.len()
            ));
        }
        fn list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
            s.split_whitespace()
                .map(|t| t.parse().map_err(|_| format!("bad list entry `{t}`")))
                .collect()
        }
        fn opt<T: std::str::FromStr>(s: &str) -> Result<Option<T>, String> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| format!("bad value `{s}`"))
            }
        }
        let kind: parabolic_core::LieKind = cells[0]
            .parse()
            .map_err(|e: parabolic_core::Error| e.to_string())?;
        let flag = |s: &str| s.parse::<bool>().map_err(|_| format!("bad flag `{s}`"));
        Ok(OutputRecord {
            kind: cells[0].clone(),
            coloring: list(&cells[1])?,
            blocks: if kind.is_classical() {
                Some(list(&cells[2])?)
            } else {
                None
            },
            central: opt(&cells[3])?,
            nice: flag(&cells[4])?,
            birational: opt(&cells[5])?,
            sl2: flag(&cells[6])?,
            normal: cells[7].clone(),
            partition: if cells[8].is_empty() {
                None
            } else {
                Some(list(&cells[8])?)
            },
            orbit_dim: opt(&cells[9])?,
            covering_degree: opt(&cells[10])?,
            label: opt(&cells[11])?,
        })
    }
}
