//! Parabolic subalgebras of simple Lie algebras: Richardson elements in the
//! first graded piece, birationality of the moment map, and Richardson
//! partitions, with an exact matrix oracle for the classical types.

pub mod blocks;
pub mod classify;
pub mod error;
pub mod exceptional;
pub mod formulas;
pub mod kind;
pub mod oracle;
pub mod partition;
pub mod strategy;
pub mod verify;

pub use blocks::{BlockVector, Coloring, Shape};
pub use classify::{classify, classify_with, ClassificationReport, NormalClosure};
pub use error::{Error, Result};
pub use kind::{Family, LieKind};
pub use partition::Partition;
pub use strategy::{BirationalityTest, PartitionStrategy, StrategyRegistry};
