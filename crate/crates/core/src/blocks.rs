//! Colorings of Dynkin diagrams and Levi block vectors of classical parabolics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kind::{Family, LieKind};

/// A {0,1} marking of the simple roots: `1` means the root is not a root of
/// the Levi factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    kind: LieKind,
    u: Vec<u8>,
}

impl Coloring {
    pub fn new(kind: LieKind, u: Vec<u8>) -> Result<Self> {
        if u.len() != kind.rank() {
            return Err(Error::InvalidColoring {
                kind,
                reason: format!("expected {} entries, got {}", kind.rank(), u.len()),
            });
        }
        if let Some(bad) = u.iter().find(|&&x| x > 1) {
            return Err(Error::InvalidColoring {
                kind,
                reason: format!("entry {bad} is not 0 or 1"),
            });
        }
        Ok(Coloring { kind, u })
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    pub fn entries(&self) -> &[u8] {
        &self.u
    }

    /// In type D, a coloring with `u_{n-1} = 1, u_n = 0` is replaced by the
    /// conjugate one with `u_{n-1} = 0, u_n = 1`.
    pub fn canonicalize(&self) -> Coloring {
        let mut u = self.u.clone();
        if self.kind.family() == Family::D {
            let n = u.len();
            if u[n - 2] == 1 && u[n - 1] == 0 {
                u.swap(n - 2, n - 1);
            }
        }
        Coloring { kind: self.kind, u }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    /// All `2^rank` colorings, lexicographic.
    pub fn all(kind: LieKind) -> Vec<Coloring> {
        let n = kind.rank();
        (0..1u32 << n)
            .map(|mask| {
                let u = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
                Coloring { kind, u }
            })
            .collect()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.u.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Levi block lengths of a standard parabolic in a classical type.
///
/// For type A `d` is the full list of blocks. For B, C, D it is the outer
/// half `d_1..d_r` of the palindrome, and `central` is `d_{r+1}` when the
/// number of blocks is odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockVector {
    kind: LieKind,
    d: Vec<usize>,
    central: Option<usize>,
}

impl BlockVector {
    pub fn new(kind: LieKind, d: Vec<usize>, central: Option<usize>) -> Result<Self> {
        let big_n = kind.require_classical()?;
        let bad = |reason: String| Error::InvalidBlocks { kind, reason };
        if d.contains(&0) {
            return Err(bad("block sizes must be positive".into()));
        }
        if central == Some(0) {
            return Err(bad("central block must be positive".into()));
        }
        let half: usize = d.iter().sum();
        match kind.family() {
            Family::A => {
                if central.is_some() {
                    return Err(bad("type A has no central block".into()));
                }
                if half != big_n {
                    return Err(bad(format!("block sizes sum to {half}, expected {big_n}")));
                }
            }
            fam => {
                let total = 2 * half + central.unwrap_or(0);
                if total != big_n {
                    let hint = if central.is_none() && 2 * half == 2 * big_n {
                        " (give only the first half of the palindrome)"
                    } else {
                        ""
                    };
                    return Err(bad(format!(
                        "2*sum(d) + central = {total}, expected {big_n}{hint}"
                    )));
                }
                match (fam, central) {
                    (Family::B, None) => {
                        return Err(bad("type B always has an odd central block".into()))
                    }
                    (Family::B, Some(c)) if c % 2 == 0 => {
                        return Err(bad(format!("central block {c} must be odd in type B")))
                    }
                    (Family::C | Family::D, Some(c)) if c % 2 == 1 => {
                        return Err(bad(format!("central block {c} must be even")))
                    }
                    _ => {}
                }
                if fam == Family::D && central.is_none() && d.last() == Some(&1) {
                    return Err(bad(
                        "in type D an innermost block of size 1 without central block is the \
                         same parabolic as dropping it and using central block 2"
                            .into(),
                    ));
                }
            }
        }
        Ok(BlockVector { kind, d, central })
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn central(&self) -> Option<usize> {
        self.central
    }

    /// `d_{r+1}`, or zero when the number of blocks is even.
    pub fn central_or_zero(&self) -> usize {
        self.central.unwrap_or(0)
    }

    /// r: the number of entries in the outer half.
    pub fn r(&self) -> usize {
        self.d.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.kind.matrix_size().expect("classical")
    }

    /// Number of Levi blocks is odd (B/C/D only).
    pub fn has_odd_blocks(&self) -> bool {
        self.central.is_some()
    }

    /// The full list of diagonal blocks in matrix order.
    pub fn expanded(&self) -> Vec<usize> {
        if self.kind.family() == Family::A {
            return self.d.clone();
        }
        let mut v = self.d.clone();
        v.extend(self.central);
        v.extend(self.d.iter().rev());
        v
    }

    /// Same block vector with `d_1..d_r` sorted ascending.
    pub fn sorted(&self) -> BlockVector {
        let mut d = self.d.clone();
        d.sort_unstable();
        BlockVector {
            kind: self.kind,
            d,
            central: self.central,
        }
    }

    /// Block index (0-based) of each matrix row.
    pub fn block_of_rows(&self) -> Vec<usize> {
        self.expanded()
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
            .collect()
    }

    /// Dimension of the Levi factor `m`.
    pub fn levi_dim(&self) -> usize {
        let sq: usize = self.d.iter().map(|x| x * x).sum();
        match self.kind.family() {
            Family::A => sq - 1,
            Family::C => {
                let c = self.central_or_zero();
                sq + c * (c + 1) / 2
            }
            _ => {
                let c = self.central_or_zero();
                sq + c * c.saturating_sub(1) / 2
            }
        }
    }
}

impl fmt::Display for BlockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} d=(", self.kind)?;
        for (i, x) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
        if let Some(c) = self.central {
            write!(f, " central={c}")?;
        }
        Ok(())
    }
}

/// Which family of closed-form statements a classical block vector falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// Type A.
    Linear,
    /// Sp, even number of blocks.
    SpEven,
    /// Sp, odd number of blocks.
    SpOdd,
    /// SO, even number of blocks (type D only).
    SoEven,
    /// SO, odd number of blocks (type B, or D with a central block).
    SoOdd,
}

impl BlockVector {
    pub fn shape(&self) -> Shape {
        match (self.kind.family(), self.central.is_some()) {
            (Family::A, _) => Shape::Linear,
            (Family::C, false) => Shape::SpEven,
            (Family::C, true) => Shape::SpOdd,
            (_, false) => Shape::SoEven,
            (_, true) => Shape::SoOdd,
        }
    }
}

/// Diagonal of `2H` in the defining realization, where `α_i(H) = u_i`.
pub(crate) fn grading_diagonal(c: &Coloring) -> Vec<i64> {
    let kind = c.kind();
    let n = kind.rank();
    let u: Vec<i64> = c.entries().iter().map(|&x| i64::from(x)).collect();
    match kind.family() {
        Family::A => {
            let mut a = vec![0i64; n + 1];
            for i in (0..n).rev() {
                a[i] = a[i + 1] + 2 * u[i];
            }
            a
        }
        fam => {
            let mut b = vec![0i64; n];
            let start = match fam {
                Family::B => {
                    b[n - 1] = 2 * u[n - 1];
                    n - 1
                }
                Family::C => {
                    b[n - 1] = u[n - 1];
                    n - 1
                }
                _ => {
                    b[n - 1] = u[n - 1] - u[n - 2];
                    b[n - 2] = u[n - 1] + u[n - 2];
                    n - 2
                }
            };
            for i in (0..start).rev() {
                b[i] = b[i + 1] + 2 * u[i];
            }
            let mut diag = b.clone();
            if fam == Family::B {
                diag.push(0);
            }
            diag.extend(b.iter().rev().map(|x| -x));
            diag
        }
    }
}

/// Lengths of maximal constant runs.
pub(crate) fn constant_runs<T: PartialEq>(v: &[T]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i + 1;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        runs.push(j - i);
        i = j;
    }
    runs
}

/// Splits palindromic runs into the outer half and an optional central block.
pub(crate) fn half_from_runs(kind: LieKind, runs: &[usize]) -> Result<BlockVector> {
    if kind.family() == Family::A {
        return BlockVector::new(kind, runs.to_vec(), None);
    }
    let m = runs.len();
    let d = runs[..m / 2].to_vec();
    let central = (m % 2 == 1).then(|| runs[m / 2]);
    BlockVector::new(kind, d, central)
}

/// Levi block vector of the parabolic defined by a coloring.
pub fn blocks_from_coloring(c: &Coloring) -> Result<BlockVector> {
    c.kind().require_classical()?;
    let c = c.canonicalize();
    let diag = grading_diagonal(&c);
    half_from_runs(c.kind(), &constant_runs(&diag))
}

/// Inverse of [`blocks_from_coloring`]; returns the canonical coloring.
pub fn coloring_from_blocks(b: &BlockVector) -> Result<Coloring> {
    let kind = b.kind();
    let n = kind.rank();
    let rows = b.block_of_rows();
    let boundary = |i: usize| u8::from(rows[i] != rows[i + 1]);
    let mut u = vec![0u8; n];
    match kind.family() {
        Family::A => {
            for (i, slot) in u.iter_mut().enumerate() {
                *slot = boundary(i);
            }
        }
        Family::B | Family::C => {
            for (i, slot) in u.iter_mut().enumerate().take(n - 1) {
                *slot = boundary(i);
            }
            u[n - 1] = match (kind.family(), b.central()) {
                (Family::B, Some(c)) => u8::from(c == 1),
                (_, c) => u8::from(c.is_none()),
            };
        }
        Family::D => {
            for (i, slot) in u.iter_mut().enumerate().take(n - 2) {
                *slot = boundary(i);
            }
            let (a, z) = match b.central() {
                None => (0, 1),
                Some(2) => (1, 1),
                Some(_) => (0, 0),
            };
            u[n - 2] = a;
            u[n - 1] = z;
        }
        _ => unreachable!("BlockVector is classical"),
    }
    Coloring::new(kind, u)
}

/// Every valid block vector of a classical type, ordered by canonical coloring.
pub fn all_block_vectors(kind: LieKind) -> Result<Vec<BlockVector>> {
    kind.require_classical()?;
    let mut out: Vec<BlockVector> = Coloring::all(kind)
        .into_iter()
        .filter(Coloring::is_canonical)
        .map(|c| blocks_from_coloring(&c))
        .collect::<Result<_>>()?;
    out.dedup();
    Ok(out)
}

/// Every valid block vector of a classical type, generated from compositions
/// rather than colorings.
pub fn block_vectors_by_composition(kind: LieKind) -> Result<Vec<BlockVector>> {
    let big_n = kind.require_classical()?;
    let mut out = Vec::new();
    if kind.family() == Family::A {
        for d in compositions(big_n) {
            out.push(BlockVector::new(kind, d, None)?);
        }
        return Ok(out);
    }
    let centrals: Vec<Option<usize>> = match kind.family() {
        Family::B => (1..=big_n).step_by(2).map(Some).collect(),
        _ => std::iter::once(None)
            .chain((2..=big_n).step_by(2).map(Some))
            .collect(),
    };
    for central in centrals {
        let half = (big_n - central.unwrap_or(0)) / 2;
        if central.is_none() && half == 0 {
            continue;
        }
        for d in compositions(half) {
            if let Ok(b) = BlockVector::new(kind, d, central) {
                out.push(b);
            }
        }
    }
    Ok(out)
}

/// Ordered compositions of `n` into positive parts (one empty composition for 0).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
