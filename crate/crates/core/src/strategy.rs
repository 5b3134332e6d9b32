//! Named, runtime-selectable algorithm variants.
//!
//! A [`PartitionStrategy`] produces the Jordan partition of a Richardson
//! element; a [`BirationalityTest`] decides whether the moment map is
//! birational. Both are looked up by name in a [`StrategyRegistry`].

use std::collections::BTreeMap;

use crate::blocks::{BlockVector, Shape};
use crate::classify::{birational_via_blocks, birational_via_partition, nice_check};
use crate::error::{Error, Result};
use crate::formulas::richardson_partition;
use crate::oracle::oracle_richardson_partition_from;
use crate::partition::Partition;

pub trait PartitionStrategy: Send + Sync {
    fn name(&self) -> &str;

    /// Richardson partition, or `Error::UnsupportedFormula` when this
    /// strategy does not cover `b`.
    fn partition(&self, b: &BlockVector) -> Result<Partition>;
}

pub trait BirationalityTest: Send + Sync {
    fn name(&self) -> &str;

    /// `None` when the test cannot decide `b` with the given partitions.
    fn decide(&self, b: &BlockVector, partitions: &dyn PartitionStrategy) -> Result<Option<bool>>;
}

/// Closed-form partitions; refuses non-nice block vectors.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForm;

impl PartitionStrategy for ClosedForm {
    fn name(&self) -> &str {
        "closed-form"
    }

    fn partition(&self, b: &BlockVector) -> Result<Partition> {
        richardson_partition(b)
    }
}

/// Random nilradical elements certified by their centralizer dimension.
#[derive(Debug, Clone, Copy)]
pub struct MatrixOracle {
    pub trials: usize,
    pub first_seed: u64,
}

impl Default for MatrixOracle {
    fn default() -> Self {
        MatrixOracle {
            trials: 3,
            first_seed: 1,
        }
    }
}

impl PartitionStrategy for MatrixOracle {
    fn name(&self) -> &str {
        "oracle"
    }

    fn partition(&self, b: &BlockVector) -> Result<Partition> {
        let out = oracle_richardson_partition_from(b, self.trials, self.first_seed)?;
        if !out.certified {
            return Err(Error::UnsupportedFormula(format!(
                "{b}: no sample in {} trials reached the generic centralizer dimension",
                self.trials
            )));
        }
        Ok(out.partition)
    }
}

/// The block conditions; decides only nice parabolics.
#[derive(Debug, Clone, Copy, Default)]
pub struct BlockCriteria;

impl BirationalityTest for BlockCriteria {
    fn name(&self) -> &str {
        "blocks"
    }

    fn decide(&self, b: &BlockVector, _: &dyn PartitionStrategy) -> Result<Option<bool>> {
        if b.shape() == Shape::Linear {
            return Ok(Some(true));
        }
        Ok(nice_check(b).then(|| birational_via_blocks(b)))
    }
}

/// Odd-part counts of the Richardson partition.
#[derive(Debug, Clone, Copy, Default)]
pub struct Hesselink;

impl BirationalityTest for Hesselink {
    fn name(&self) -> &str {
        "hesselink"
    }

    fn decide(&self, b: &BlockVector, partitions: &dyn PartitionStrategy) -> Result<Option<bool>> {
        match partitions.partition(b) {
            Ok(lam) => birational_via_partition(b.kind(), b, &lam).map(Some),
            Err(Error::UnsupportedFormula(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }
}

/// Strategies by name.
#[derive(Default)]
pub struct StrategyRegistry {
    partitions: BTreeMap<String, Box<dyn PartitionStrategy>>,
    birationality: BTreeMap<String, Box<dyn BirationalityTest>>,
}

impl StrategyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `closed-form`, `oracle`, `blocks` and `hesselink`.
    pub fn with_builtins() -> Self {
        let mut reg = Self::new();
        reg.register_partition(Box::new(ClosedForm));
        reg.register_partition(Box::new(MatrixOracle::default()));
        reg.register_birationality(Box::new(BlockCriteria));
        reg.register_birationality(Box::new(Hesselink));
        reg
    }

    /// Replaces any strategy registered under the same name.
    pub fn register_partition(&mut self, s: Box<dyn PartitionStrategy>) {
        self.partitions.insert(s.name().to_string(), s);
    }

    pub fn register_birationality(&mut self, t: Box<dyn BirationalityTest>) {
        self.birationality.insert(t.name().to_string(), t);
    }

    pub fn partition(&self, name: &str) -> Result<&dyn PartitionStrategy> {
        self.partitions
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| {
                let known: Vec<&str> = self.partition_names().collect();
                Error::UnknownStrategy(format!(
                    "partition strategy `{name}` (available: {})",
                    known.join(", ")
                ))
            })
    }

    pub fn birationality(&self, name: &str) -> Result<&dyn BirationalityTest> {
        self.birationality
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| {
                let known: Vec<&str> = self.birationality_names().collect();
                Error::UnknownStrategy(format!(
                    "birationality test `{name}` (available: {})",
                    known.join(", ")
                ))
            })
    }

    pub fn partition_names(&self) -> impl Iterator<Item = &str> {
        self.partitions.keys().map(String::as_str)
    }

    pub fn birationality_names(&self) -> impl Iterator<Item = &str> {
        self.birationality.keys().map(String::as_str)
    }
}
