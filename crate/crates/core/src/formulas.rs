//! Closed-form Jordan partitions of Richardson elements.
//!
//! All formulas are evaluated on `d_1 <= ... <= d_r`; conjugate Levi factors
//! with Richardson elements in `g_1` have conjugate Richardson elements, so
//! reordering does not change the answer.

use crate::blocks::{BlockVector, Shape};
use crate::classify::nice_check;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Odd entries among `d_1..d_r` (sorted), as `(1-based index, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OddEntrySet {
    entries: Vec<(usize, usize)>,
}

impl OddEntrySet {
    pub fn of(d: &[usize]) -> Self {
        let entries = d
            .iter()
            .enumerate()
            .filter(|(_, &v)| v % 2 == 1)
            .map(|(i, &v)| (i + 1, v))
            .collect();
        OddEntrySet { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn contains_value(&self, v: usize) -> bool {
        self.entries.iter().any(|&(_, x)| x == v)
    }
}

/// Type A: transpose of the block sizes sorted decreasingly.
pub fn richardson_partition_a(b: &BlockVector) -> Result<Partition> {
    if b.shape() != Shape::Linear {
        return Err(Error::UnsupportedFormula(format!("{b} is not of type A")));
    }
    Ok(Partition::from_multiset(b.d().iter().copied()).transpose())
}

fn require_nice_bcd(b: &BlockVector) -> Result<BlockVector> {
    if b.shape() == Shape::Linear {
        return Err(Error::UnsupportedFormula(format!("{b} is of type A")));
    }
    if !nice_check(b) {
        return Err(Error::UnsupportedFormula(format!(
            "{b} has no Richardson element in g_1; use the matrix oracle"
        )));
    }
    Ok(b.sorted())
}

/// For SO with an odd number of blocks: true when the sorted vector has
/// `max d_i = d_{r+1} + 1`.
fn so_odd_drop(sorted: &BlockVector) -> bool {
    let c = sorted.central_or_zero();
    sorted.d().last().is_some_and(|&m| m == c + 1)
}

fn pairs(d: &[usize]) -> impl Iterator<Item = usize> + '_ {
    d.iter().flat_map(|&x| [x, x])
}

fn pairs_with_odd_split(d: &[usize]) -> Vec<usize> {
    d.iter()
        .flat_map(|&x| if x % 2 == 1 { [x - 1, x + 1] } else { [x, x] })
        .collect()
}

/// Conjugate of the Richardson partition, for nice B/C/D block vectors.
pub fn richardson_dual_partition_bcd(b: &BlockVector) -> Result<Partition> {
    let s = require_nice_bcd(b)?;
    let d = s.d();
    match s.shape() {
        Shape::SpEven => Ok(Partition::from_multiset(pairs(d))),
        Shape::SpOdd => {
            let mut all = pairs_with_odd_split(d);
            all.push(s.central_or_zero());
            Ok(Partition::from_multiset(all))
        }
        Shape::SoEven => Ok(Partition::from_multiset(pairs_with_odd_split(d))),
        Shape::SoOdd if !so_odd_drop(&s) => Ok(Partition::from_multiset(
            pairs(d).chain(std::iter::once(s.central_or_zero())),
        )),
        Shape::SoOdd => Err(Error::UnsupportedFormula(format!(
            "{b}: no dual formula when max d_i = d_(r+1) + 1"
        ))),
        Shape::Linear => unreachable!(),
    }
}

/// `(2r)^{d_1}, (2r-2)^{d_2-d_1}, ..., 2^{d_r-d_{r-1}}` for ascending `d`.
fn descending_even_staircase(d: &[usize]) -> Partition {
    let r = d.len();
    Partition::from_exponents((0..r).map(|k| {
        let prev = if k == 0 { 0 } else { d[k - 1] };
        (2 * (r - k), d[k] - prev)
    }))
}

/// Jordan partition of a Richardson element for a nice B/C/D block vector.
pub fn richardson_partition_bcd(b: &BlockVector) -> Result<Partition> {
    let s = require_nice_bcd(b)?;
    match s.shape() {
        Shape::SpEven => Ok(descending_even_staircase(s.d())),
        Shape::SoOdd if so_odd_drop(&s) => {
            let mut d = s.d().to_vec();
            *d.last_mut().expect("non-empty") -= 1;
            let reduced =
                Partition::from_multiset(pairs(&d).chain(std::iter::once(s.central_or_zero())));
            Ok(reduced.transpose().union(&Partition::new(vec![1, 1])?))
        }
        _ => Ok(richardson_dual_partition_bcd(&s)?.transpose()),
    }
}

/// Richardson partition for any nice classical block vector.
pub fn richardson_partition(b: &BlockVector) -> Result<Partition> {
    match b.shape() {
        Shape::Linear => richardson_partition_a(b),
        _ => richardson_partition_bcd(b),
    }
}

/// SO with an even number of blocks and exactly one odd `d_i`: the explicit
/// exponent formula, kept as an independent check of the transpose route.
pub fn so_even_one_odd_explicit(b: &BlockVector) -> Result<Partition> {
    let s = require_nice_bcd(b)?;
    let odd = OddEntrySet::of(s.d());
    if s.shape() != Shape::SoEven || odd.len() != 1 {
        return Err(Error::UnsupportedFormula(format!(
            "{b}: needs SO, even blocks, one odd entry"
        )));
    }
    let d = s.d();
    let r = d.len();
    let i = odd.entries()[0].0;
    let at = |k: usize| if k == 0 { 0 } else { d[k - 1] };
    let mut terms: Vec<(usize, usize)> = Vec::new();
    for k in 1..=r {
        let mut mult = at(k) - at(k - 1);
        if k == i || k == i + 1 {
            mult -= 1;
        }
        terms.push((2 * (r - k + 1), mult));
    }
    terms.push((2 * (r - i + 1) - 1, 2));
    Ok(Partition::from_exponents(terms))
}

/// Rank and kernel dimension of a Richardson element, B/C/D with an odd
/// number of blocks.
pub fn richardson_rank_and_kernel(b: &BlockVector) -> Result<(usize, usize)> {
    let Some(central) = b.central() else {
        return Err(Error::UnsupportedFormula(format!(
            "{b}: needs an odd number of blocks"
        )));
    };
    if b.shape() == Shape::Linear {
        return Err(Error::UnsupportedFormula(format!("{b} is of type A")));
    }
    let s = b.sorted();
    Ok(rank_kernel_formula(s.d(), central))
}

/// `rk = 2 Σ_{i<r} min(d_i, d_{i+1}) + 2 min(d_r, d_{r+1})`, kernel `N - rk`.
pub fn rank_kernel_formula(d: &[usize], central: usize) -> (usize, usize) {
    let n: usize = 2 * d.iter().sum::<usize>() + central;
    let inner: usize = d.windows(2).map(|w| w[0].min(w[1])).sum();
    let last = d.last().map_or(0, |&x| x.min(central));
    let rank = 2 * inner + 2 * last;
    (rank, n - rank)
}

/// Partition with `a_j = 2 k_j - k_{j-1} - k_{j+1}` parts equal to `j`, from
/// `k_j = dim ker X^j`, `k_0 = 0`, ending at `N`.
pub fn jordan_from_kernel_dims(kdims: &[usize]) -> Result<Partition> {
    let bad = |why: &str| Error::InvalidKernelProfile(format!("{kdims:?}: {why}"));
    let Some(&total) = kdims.last() else {
        return Err(bad("empty profile"));
    };
    if kdims[0] != 0 {
        return Err(bad("dim ker X^0 must be 0"));
    }
    if kdims.windows(2).any(|w| w[0] > w[1]) {
        return Err(bad("not weakly increasing"));
    }
    let m = kdims.len() - 1;
    let k = |j: usize| if j > m { total } else { kdims[j] };
    let mut terms = Vec::with_capacity(m);
    for j in 1..=m {
        let a = 2 * k(j) as i64 - k(j - 1) as i64 - k(j + 1) as i64;
        if a < 0 {
            return Err(bad("differences are not non-increasing"));
        }
        terms.push((j, a as usize));
    }
    Ok(Partition::from_exponents(terms))
}
