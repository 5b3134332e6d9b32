//! Exhaustive cross-checks between strategies over all classical parabolics
//! up to a matrix size.

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{all_block_vectors, BlockVector};
use crate::classify::nice_check;
use crate::error::Result;
use crate::kind::{Family, LieKind};
use crate::oracle::oracle_richardson_partition_from;
use crate::strategy::{BirationalityTest, PartitionStrategy};

/// Every classical type whose defining realization has size `<= max_n`.
pub fn classical_kinds_up_to(max_n: usize) -> Vec<LieKind> {
    let mut kinds = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=max_n {
            if let Ok(k) = LieKind::new(family, rank) {
                if k.matrix_size().is_some_and(|n| n <= max_n) {
                    kinds.push(k);
                }
            }
        }
    }
    kinds
}

/// Nice block vectors of `kind` in every order that appears among colorings.
pub fn nice_block_vectors(kind: LieKind) -> Result<Vec<BlockVector>> {
    Ok(all_block_vectors(kind)?
        .into_iter()
        .filter(nice_check)
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseOutcome {
    pub blocks: String,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub cases: Vec<CaseOutcome>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.cases.extend(other.cases);
    }
}

fn outcome(b: &BlockVector, check: &'static str, passed: bool, detail: String) -> CaseOutcome {
    CaseOutcome {
        blocks: b.to_string(),
        check,
        passed,
        detail,
    }
}

fn sweep<F>(kinds: &[LieKind], per_case: F) -> Result<VerifyReport>
where
    F: Fn(&BlockVector) -> Result<Vec<CaseOutcome>> + Sync,
{
    let cases: Vec<BlockVector> = kinds
        .iter()
        .map(|&k| nice_block_vectors(k))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let results: Vec<Vec<CaseOutcome>> = cases.par_iter().map(&per_case).collect::<Result<_>>()?;
    Ok(VerifyReport {
        cases: results.into_iter().flatten().collect(),
    })
}

/// Closed-form partitions against oracle partitions, plus the centralizer
/// certificate of the oracle sample.
pub fn verify_partitions(
    kinds: &[LieKind],
    closed: &dyn PartitionStrategy,
    trials: usize,
    seed: u64,
) -> Result<VerifyReport> {
    sweep(kinds, |b| {
        let expected = closed.partition(b)?;
        let got = oracle_richardson_partition_from(b, trials, seed)?;
        let dim_m = b.levi_dim();
        let best = got
            .samples
            .iter()
            .map(|s| s.centralizer_dim)
            .min()
            .unwrap_or(usize::MAX);
        Ok(vec![
            outcome(
                b,
                "partition",
                expected == got.partition,
                format!("{}: {expected}, oracle: {}", closed.name(), got.partition),
            ),
            outcome(
                b,
                "centralizer",
                got.certified,
                format!("dim m = {dim_m}, smallest sampled centralizer = {best}"),
            ),
        ])
    })
}

/// Two birationality tests on every nice block vector.
pub fn verify_birationality(
    kinds: &[LieKind],
    left: &dyn BirationalityTest,
    right: &dyn BirationalityTest,
    partitions: &dyn PartitionStrategy,
) -> Result<VerifyReport> {
    sweep(kinds, |b| {
        let l = left.decide(b, partitions)?;
        let r = right.decide(b, partitions)?;
        Ok(vec![outcome(
            b,
            "birational",
            l.is_some() && l == r,
            format!("{}: {l:?}, {}: {r:?}", left.name(), right.name()),
        )])
    })
}
