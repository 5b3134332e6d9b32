//! Exceptional types: root systems, gradings and the tabulated nice
//! parabolics.

mod roots;
pub mod tables;

use serde::{Deserialize, Serialize};

pub use roots::{grading_dims, orbit_dim, GradedDims, RootSystem};

use crate::blocks::Coloring;
use crate::classify::{ClassificationReport, NormalClosure};
use crate::error::{Error, Result};
use crate::kind::{Family, LieKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalRecord {
    pub kind: LieKind,
    pub coloring: Coloring,
    pub in_appendix: bool,
    pub nice: bool,
    pub birational: bool,
    pub sl2_given: bool,
    pub orbit_dim: Option<usize>,
    pub bala_carter_label: Option<String>,
}

impl ExceptionalRecord {
    pub fn to_report(&self) -> ClassificationReport {
        ClassificationReport {
            kind: self.kind,
            coloring: Some(self.coloring.clone()),
            blocks: None,
            nice: self.nice,
            birational: Some(self.birational),
            sl2_given: self.sl2_given,
            normal_closure: NormalClosure::OutOfScope,
            partition: None,
            orbit_dim: self.orbit_dim,
            covering_degree: self.birational.then_some(1),
            bala_carter_label: self.bala_carter_label.clone(),
            diagnostics: Vec::new(),
        }
    }
}

/// The tabulated colorings for `kind`: nice parabolics with `G_x = P_x`.
pub fn appendix(kind: LieKind) -> Result<Vec<Coloring>> {
    fn rows<const N: usize>(kind: LieKind, t: &[[u8; N]]) -> Result<Vec<Coloring>> {
        t.iter().map(|u| Coloring::new(kind, u.to_vec())).collect()
    }
    match kind.family() {
        Family::G2 => rows(kind, tables::G2),
        Family::F4 => rows(kind, tables::F4),
        Family::E6 => rows(kind, tables::E6),
        Family::E7 => rows(kind, tables::E7),
        Family::E8 => rows(kind, tables::E8),
        _ => Err(Error::UnsupportedKind {
            kind,
            reason: "appendix data exists for exceptional types only",
        }),
    }
}

/// E7 colorings that are nice but not birational.
pub fn e7_exceptions() -> Vec<Coloring> {
    let e7 = LieKind::exceptional(Family::E7).expect("E7");
    tables::E7_EXCEPTIONS
        .iter()
        .map(|u| Coloring::new(e7, u.to_vec()).expect("rank 7"))
        .collect()
}

/// Row of the non-sl2 table matching `c`: `(row, orbit_dim, label)`.
pub fn non_sl2_entry(c: &Coloring) -> Option<(&'static str, usize, &'static str)> {
    let name = c.kind().to_string();
    tables::NON_SL2
        .iter()
        .find(|(_, k, u, _, _)| *k == name && *u == c.entries())
        .map(|&(row, _, _, dim, label)| (row, dim, label))
}

/// All tabulated colorings that have a Richardson element in `g_1`.
pub fn nice_colorings(kind: LieKind) -> Result<Vec<Coloring>> {
    let mut all = appendix(kind)?;
    if kind.family() == Family::E7 {
        all.extend(e7_exceptions());
    }
    Ok(all)
}

pub fn exceptional_lookup(c: &Coloring) -> Result<ExceptionalRecord> {
    let kind = c.kind();
    let in_appendix = appendix(kind)?.contains(c);
    let nice = in_appendix || (kind.family() == Family::E7 && e7_exceptions().contains(c));
    let entry = non_sl2_entry(c);
    let sl2_given = match kind.family() {
        Family::G2 | Family::F4 => nice,
        _ => in_appendix && !matches!(entry, Some(("a" | "c" | "f", _, _))),
    };
    let rs = RootSystem::cached(kind)?;
    let (orbit, label) = match entry {
        Some((_, dim, label)) => (dim, Some(label.to_string())),
        None => (orbit_dim(rs, c)?, None),
    };
    Ok(ExceptionalRecord {
        kind,
        coloring: c.clone(),
        in_appendix,
        nice,
        birational: in_appendix,
        sl2_given,
        orbit_dim: Some(orbit),
        bala_carter_label: label,
    })
}
