//! Integer partitions as Jordan types of nilpotent matrices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the entries and drops zeros.
    pub fn from_multiset<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut parts: Vec<usize> = items.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds `v_1^{m_1}, v_2^{m_2}, ...` from (value, multiplicity) pairs.
    pub fn from_exponents<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        Self::from_multiset(
            pairs
                .into_iter()
                .flat_map(|(value, mult)| std::iter::repeat_n(value, mult)),
        )
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part, zero past the end.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }

    /// Number of odd parts.
    pub fn n_odd(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Drop indices `j` (1-based) with `λ_j > λ_{j+1}` and `λ_j ≢ ε (mod 2)`.
    ///
    /// `j` runs over consecutive pairs of parts only; the last part is not
    /// compared against an implicit trailing zero.
    pub fn b_set(&self, epsilon: u8) -> BTreeSet<usize> {
        let eps = usize::from(epsilon & 1);
        self.parts
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1] && w[0] % 2 != eps)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Variant of [`Partition::b_set`] that also tests the last part against
    /// a trailing zero.
    pub fn b_set_padded(&self, epsilon: u8) -> BTreeSet<usize> {
        let eps = usize::from(epsilon & 1);
        (1..=self.len())
            .filter(|&j| self.part(j) > self.part(j + 1) && self.part(j) % 2 != eps)
            .collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Dominance order: `self ⊵ other`, for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        let len = self.len().max(other.len());
        for j in 1..=len {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Dimension of the centralizer in gl_N of a nilpotent with this Jordan type.
    pub fn gl_centralizer_dim(&self) -> usize {
        self.transpose().parts.iter().map(|c| c * c).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
