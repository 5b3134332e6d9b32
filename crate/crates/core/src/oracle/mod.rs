//! Exact matrix oracle: generic nilradical elements, Jordan types and
//! centralizer dimensions computed in the defining representation.

pub mod exact;
pub mod modular;
pub mod realization;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocks::{coloring_from_blocks, constant_runs, half_from_runs, BlockVector, Coloring};
use crate::error::{Error, Result};
use crate::formulas::jordan_from_kernel_dims;
use crate::kind::Family;
use crate::partition::Partition;

pub use exact::ExactMatrix;
pub use realization::{MatrixRealization, SparseBasis};

/// Coefficients of generic elements are drawn from `1..=COEFF_MAX`.
pub const COEFF_MAX: i64 = 1_000_000;

/// Random integer combination of the given basis elements.
fn random_combination(size: usize, basis: &[&SparseBasis], seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0i64; size * size];
    for b in basis {
        let c: i64 = rng.gen_range(1..=COEFF_MAX);
        for &(i, j, s) in &b.entries {
            x[i * size + j] += c * s;
        }
    }
    x
}

fn to_exact(size: usize, x: &[i64]) -> ExactMatrix {
    ExactMatrix::from_i64(size, size, x).expect("square")
}

/// Basis of the nilradical: block-strictly-upper basis elements, row-major.
pub fn nilradical_basis<'a>(real: &'a MatrixRealization, b: &BlockVector) -> Vec<&'a SparseBasis> {
    let block = b.block_of_rows();
    real.sub_basis(|i, j| block[i] < block[j])
}

/// `X = Σ c_k B_k` over the nilradical basis with seeded coefficients.
pub fn generic_nilradical_element(b: &BlockVector, seed: u64) -> Result<ExactMatrix> {
    let real = MatrixRealization::new(b.kind())?;
    let basis = nilradical_basis(&real, b);
    Ok(to_exact(
        real.size(),
        &random_combination(real.size(), &basis, seed),
    ))
}

/// Jordan type of a nilpotent matrix from exact ranks of its powers.
pub fn jordan_partition(x: &ExactMatrix) -> Result<Partition> {
    let n = x.rows();
    let ranks = x.power_ranks(n.max(1))?;
    let kdims: Vec<usize> = ranks.iter().map(|r| n - r).collect();
    jordan_from_kernel_dims(&kdims)
}

/// `dim {Y in g : [X, Y] = 0}`, by exact rank of `ad X` on g.
pub fn centralizer_dim_in_g(real: &MatrixRealization, x: &ExactMatrix) -> Result<usize> {
    real.require_member(x)?;
    Ok(real.dim() - real.ad_matrix(x).rank())
}

/// Centralizer dimension when `floor` is a proven lower bound for it.
///
/// The modular rank bounds the rational rank from below, so hitting
/// `dim g - floor` settles the value without big-integer elimination.
fn centralizer_dim_with_floor(real: &MatrixRealization, x: &[i64], floor: usize) -> usize {
    let n = real.size();
    let ad = real.ad_matrix_i64(x);
    let rank_p = modular::rank_mod_p(n * n, real.dim(), &ad);
    if real.dim() - rank_p == floor {
        return floor;
    }
    real.dim()
        - ExactMatrix::from_i64(n * n, real.dim(), &ad)
            .expect("shape")
            .rank()
}

/// One random element and what the oracle learned from it.
#[derive(Debug, Clone)]
pub struct OracleSample {
    pub seed: u64,
    pub partition: Partition,
    pub centralizer_dim: usize,
    /// `centralizer_dim == dim m`, i.e. the sample is a Richardson element.
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub partition: Partition,
    pub certified: bool,
    pub samples: Vec<OracleSample>,
    pub warnings: Vec<String>,
}

fn sample_nilradical(real: &MatrixRealization, b: &BlockVector, seed: u64) -> Result<OracleSample> {
    let basis = nilradical_basis(real, b);
    let x = random_combination(real.size(), &basis, seed);
    let partition = jordan_partition(&to_exact(real.size(), &x))?;
    let levi = b.levi_dim();
    let centralizer_dim = centralizer_dim_with_floor(real, &x, levi);
    Ok(OracleSample {
        seed,
        partition,
        centralizer_dim,
        certified: centralizer_dim == levi,
    })
}

/// Richardson partition from random nilradical elements, seeds `1..=trials`.
pub fn oracle_richardson_partition(b: &BlockVector, trials: usize) -> Result<OracleOutcome> {
    oracle_richardson_partition_from(b, trials, 1)
}

/// Runs seeds `first_seed..first_seed + trials`, stopping at the first
/// certified sample. Returns the dominance-maximal partition seen.
pub fn oracle_richardson_partition_from(
    b: &BlockVector,
    trials: usize,
    first_seed: u64,
) -> Result<OracleOutcome> {
    let real = MatrixRealization::new(b.kind())?;
    let mut samples = Vec::new();
    for seed in first_seed..first_seed + trials.max(1) as u64 {
        let s = sample_nilradical(&real, b, seed)?;
        let done = s.certified;
        samples.push(s);
        if done {
            break;
        }
    }
    let best = samples
        .iter()
        .fold(None::<&OracleSample>, |best, s| match best {
            Some(cur) if !s.partition.dominates(&cur.partition) || s.partition == cur.partition => {
                Some(cur)
            }
            _ => Some(s),
        })
        .expect("at least one trial");
    let mut warnings = Vec::new();
    if !best.certified {
        warnings.push(format!(
            "{b}: no sample reached centralizer dimension {} (best {}); partition not certified",
            b.levi_dim(),
            best.centralizer_dim
        ));
    }
    Ok(OracleOutcome {
        partition: best.partition.clone(),
        certified: best.certified,
        warnings,
        samples,
    })
}

/// Exact solution of the grading system `α_i(2H) = 2 u_i` in the realization,
/// with `2H` in the Cartan subalgebra of g.
pub fn grading_element(c: &Coloring) -> Result<Vec<BigRational>> {
    let kind = c.kind();
    let real = MatrixRealization::new(kind)?;
    let size = real.size();
    let n = kind.rank();
    let u = c.canonicalize();
    let u = u.entries();
    // simple root vectors: leading positions in the realization
    let mut simple: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match kind.family() {
        Family::A => simple.push((n - 1, n)),
        Family::B | Family::C => simple.push((n - 1, n)),
        Family::D => simple.push((n - 2, n)),
        _ => unreachable!(),
    }
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
    for (k, &(i, j)) in simple.iter().enumerate() {
        let mut eq = vec![0i64; size];
        eq[i] += 1;
        eq[j] -= 1;
        rows.push((eq, 2 * i64::from(u[k])));
    }
    if kind.family() == Family::A {
        rows.push((vec![1; size], 0));
    } else {
        for i in 0..size / 2 + size % 2 {
            let mut eq = vec![0i64; size];
            eq[i] += 1;
            eq[real.mirror(i)] += 1;
            rows.push((eq, 0));
        }
    }
    solve_unique(size, &rows)
}

fn solve_unique(unknowns: usize, rows: &[(Vec<i64>, i64)]) -> Result<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|(eq, rhs)| {
            eq.iter()
                .chain(std::iter::once(rhs))
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    if pivot_cols.len() != unknowns || m[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::Dimension(
            "grading system is not uniquely solvable".into(),
        ));
    }
    Ok((0..unknowns).map(|i| m[i][unknowns].clone()).collect())
}

/// Levi blocks read off the diagonal of `2H` built in the realization.
pub fn levi_blocks_from_matrices(c: &Coloring) -> Result<BlockVector> {
    let h = grading_element(c)?;
    half_from_runs(c.kind(), &constant_runs(&h))
}

/// Same as [`levi_blocks_from_matrices`] starting from a block vector.
pub fn levi_blocks_from_block_vector(b: &BlockVector) -> Result<BlockVector> {
    levi_blocks_from_matrices(&coloring_from_blocks(b)?)
}

/// `2H` scaled to integers by a common denominator, and `2H` shifted so
/// that its first entry is zero (differences of entries are integers).
fn integral_grading(b: &BlockVector) -> Result<(Vec<i64>, Vec<i64>)> {
    let h = grading_element(&coloring_from_blocks(b)?)?;
    let lcm = h.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let lcm = BigRational::from_integer(lcm);
    let as_i64 = |q: BigRational| {
        q.to_integer()
            .to_i64()
            .ok_or_else(|| Error::Dimension("grading entry out of range".into()))
    };
    let scaled = h
        .iter()
        .map(|q| as_i64(q * &lcm))
        .collect::<Result<Vec<_>>>()?;
    let shifted = h
        .iter()
        .map(|q| as_i64(q - &h[0]))
        .collect::<Result<Vec<_>>>()?;
    Ok((scaled, shifted))
}

fn grade_of(grade2h: &[i64], i: usize, j: usize) -> i64 {
    let d = grade2h[i] - grade2h[j];
    debug_assert!(d % 2 == 0);
    d / 2
}

/// Basis of the graded piece `g_k` for the grading defined by `b`.
pub fn graded_basis<'a>(
    real: &'a MatrixRealization,
    b: &BlockVector,
    k: i64,
) -> Result<Vec<&'a SparseBasis>> {
    let (_, g2h) = integral_grading(b)?;
    Ok(real.sub_basis(|i, j| i != j && grade_of(&g2h, i, j) == k))
}

/// Looks for a Richardson element inside `g_1`, certified by its centralizer
/// dimension. `false` means no sample among `trials` was certified.
pub fn oracle_nice(b: &BlockVector, trials: usize, first_seed: u64) -> Result<bool> {
    let real = MatrixRealization::new(b.kind())?;
    let g1 = graded_basis(&real, b, 1)?;
    let levi = b.levi_dim();
    for seed in first_seed..first_seed + trials.max(1) as u64 {
        let x = random_combination(real.size(), &g1, seed);
        if centralizer_dim_with_floor(&real, &x, levi) == levi {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides whether a generic Richardson `x` in `g_1` sits in an sl2-triple
/// `{x, 2H, y}`, i.e. whether `2H` lies in `[x, g_{-1}]`.
pub fn oracle_sl2_given(b: &BlockVector, trials: usize, first_seed: u64) -> Result<bool> {
    let real = MatrixRealization::new(b.kind())?;
    let size = real.size();
    let g1 = graded_basis(&real, b, 1)?;
    let gm1 = graded_basis(&real, b, -1)?;
    let (h2, _) = integral_grading(b)?;
    let levi = b.levi_dim();
    for seed in first_seed..first_seed + trials.max(1) as u64 {
        let x = random_combination(size, &g1, seed);
        if centralizer_dim_with_floor(&real, &x, levi) != levi {
            continue;
        }
        let xm = to_exact(size, &x);
        let cols = gm1.len();
        let mut a = ExactMatrix::zeros(size * size, cols + 1);
        for (k, y) in gm1.iter().enumerate() {
            let ym = y.to_matrix(size);
            let br = xm.mul(&ym)?.sub(&ym.mul(&xm)?)?;
            for i in 0..size {
                for j in 0..size {
                    a.set(i * size + j, k, br.get(i, j).clone());
                }
            }
        }
        for (i, v) in h2.iter().enumerate() {
            a.set(i * size + i, cols, BigInt::from(*v));
        }
        let with_h = a.rank();
        let mut without = ExactMatrix::zeros(size * size, cols);
        for r in 0..size * size {
            for c in 0..cols {
                without.set(r, c, a.get(r, c).clone());
            }
        }
        return Ok(without.rank() == with_h);
    }
    Ok(false)
}
