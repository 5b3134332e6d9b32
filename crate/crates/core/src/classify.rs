//! Nice / birational / sl2 / normality decisions for classical parabolics.

use serde::{Deserialize, Serialize};

use crate::blocks::{coloring_from_blocks, BlockVector, Coloring, Shape};
use crate::error::{Error, Result};
use crate::formulas::OddEntrySet;
use crate::kind::LieKind;
use crate::partition::Partition;
use crate::strategy::{BirationalityTest, PartitionStrategy};

pub(crate) fn is_ascending(d: &[usize]) -> bool {
    d.windows(2).all(|w| w[0] <= w[1])
}

/// Weakly increasing then weakly decreasing; plateaus allowed anywhere.
pub fn is_unimodal(d: &[usize]) -> bool {
    let mut i = 1;
    while i < d.len() && d[i - 1] <= d[i] {
        i += 1;
    }
    while i < d.len() && d[i - 1] >= d[i] {
        i += 1;
    }
    i >= d.len()
}

fn all_equal(d: &[usize]) -> bool {
    d.windows(2).all(|w| w[0] == w[1])
}

fn odd_entries_distinct(d: &[usize]) -> bool {
    let mut odd: Vec<usize> = d.iter().copied().filter(|x| x % 2 == 1).collect();
    let n = odd.len();
    odd.sort_unstable();
    odd.dedup();
    odd.len() == n
}

/// `d_1 <= ... <= d_{t-1} < d_t` and `d_{t+1} = ... = d_r = d_t - 1` for some `t < r`.
fn ascending_then_plateau_drop(d: &[usize]) -> bool {
    let r = d.len();
    (1..r).any(|t| {
        let top = d[t - 1];
        is_ascending(&d[..t])
            && (t == 1 || d[t - 2] < top)
            && top > 1
            && d[t..].iter().all(|&x| x + 1 == top)
    })
}

/// `d_1 <= ... <= d_{t-1} < d_t` and `d_{t+1} = ... = d_r = c = d_t - 1` for some `t <= r`.
fn ascending_then_central_drop(d: &[usize], c: usize) -> bool {
    let r = d.len();
    (1..=r).any(|t| {
        let top = d[t - 1];
        is_ascending(&d[..t])
            && (t == 1 || d[t - 2] < top)
            && top == c + 1
            && d[t..].iter().all(|&x| x == c)
    })
}

/// Whether the parabolic has a Richardson element in `g_1`.
///
/// The answer depends on the order of `d`: type A `(2,1,2)` is not nice
/// while `(1,2,2)` is.
pub fn nice_check(b: &BlockVector) -> bool {
    let d = b.d();
    let c = b.central_or_zero();
    match b.shape() {
        Shape::Linear => is_unimodal(d),
        Shape::SpEven => is_ascending(d),
        Shape::SpOdd => {
            is_ascending(d) && d.last().is_none_or(|&x| x <= c) && odd_entries_distinct(d)
        }
        Shape::SoEven => {
            (is_ascending(d) || ascending_then_plateau_drop(d)) && odd_entries_distinct(d)
        }
        Shape::SoOdd => {
            (is_ascending(d) && d.last().is_none_or(|&x| x <= c))
                || ascending_then_central_drop(d, c)
        }
    }
}

/// Whether there is a Richardson element `x` in `g_1` with `G_x = P_x`.
///
/// This is the conjunction "nice and birational"; for type A it reduces to
/// unimodality.
pub fn birational_via_blocks(b: &BlockVector) -> bool {
    let d = b.d();
    let c = b.central_or_zero();
    let bounded = d.last().is_none_or(|&x| x <= c);
    match b.shape() {
        Shape::Linear => is_unimodal(d),
        Shape::SpEven => is_ascending(d),
        Shape::SpOdd => is_ascending(d) && bounded && d.iter().all(|x| x % 2 == 0),
        Shape::SoOdd => is_ascending(d) && bounded,
        Shape::SoEven => {
            if !is_ascending(d) {
                return false;
            }
            let odd = OddEntrySet::of(d);
            match odd.entries() {
                [] => true,
                [(i, v)] => *i < d.len() && v + 3 <= d[d.len() - 1],
                _ => false,
            }
        }
    }
}

/// Birationality of the moment map from the Jordan partition of a Richardson
/// element. For type A the answer is always true.
pub fn birational_via_partition(kind: LieKind, b: &BlockVector, lam: &Partition) -> Result<bool> {
    if kind != b.kind() {
        return Err(Error::InvalidBlocks {
            kind,
            reason: format!("block vector is for {}", b.kind()),
        });
    }
    let n = b.matrix_size();
    if lam.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: lam.size(),
        });
    }
    Ok(match b.shape() {
        Shape::Linear => true,
        Shape::SpOdd | Shape::SoOdd => lam.n_odd() == b.central_or_zero(),
        Shape::SpEven => lam.n_odd() == 0,
        Shape::SoEven => {
            let empty = lam.b_set(0).is_empty();
            (empty && lam.n_odd() == 0) || (!empty && lam.n_odd() == 2)
        }
    })
}

/// Whether the grading of the parabolic comes from an `sl_2`-triple.
pub fn sl2_check(b: &BlockVector) -> bool {
    let d = b.d();
    match b.shape() {
        Shape::Linear => is_unimodal(d) && d.iter().eq(d.iter().rev()),
        Shape::SoEven => birational_via_blocks(b) && d.iter().all(|x| x % 2 == 0),
        _ => birational_via_blocks(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalClosure {
    Normal,
    NotNormal,
    /// Only parabolics with `G_x = P_x` for a Richardson `x` in `g_1` are covered.
    OutOfScope,
}

impl std::fmt::Display for NormalClosure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NormalClosure::Normal => "normal",
            NormalClosure::NotNormal => "not_normal",
            NormalClosure::OutOfScope => "out_of_scope",
        })
    }
}

/// Case (b): `d_1 = ... = d_s`, `d_{s+1} = d_s + 2`, `d_{s+1} = ... = d_r`,
/// entries even, with `1 <= s < r`.
fn two_even_plateaus(d: &[usize]) -> bool {
    let r = d.len();
    d.iter().all(|x| x % 2 == 0)
        && (1..r).any(|s| all_equal(&d[..s]) && all_equal(&d[s..]) && d[s] == d[s - 1] + 2)
}

/// Case (c): exactly one odd `d_i <= d_r - 3` sitting between two plateaus.
fn one_odd_between_plateaus(d: &[usize]) -> bool {
    let odd = OddEntrySet::of(d);
    let [(i, v)] = odd.entries() else {
        return false;
    };
    let (i, v) = (*i, *v);
    let r = d.len();
    if v + 3 > d[r - 1] {
        return false;
    }
    if i == 1 {
        all_equal(&d[1..])
    } else {
        all_equal(&d[..i - 1]) && v == d[i - 2] + 1 && all_equal(&d[i..])
    }
}

/// Normality of the closure of the Richardson orbit.
pub fn normal_closure_check(b: &BlockVector) -> NormalClosure {
    let verdict = |ok: bool| {
        if ok {
            NormalClosure::Normal
        } else {
            NormalClosure::NotNormal
        }
    };
    if b.shape() == Shape::Linear {
        return NormalClosure::Normal;
    }
    if !birational_via_blocks(b) {
        return NormalClosure::OutOfScope;
    }
    let d = b.d();
    match b.shape() {
        Shape::SpEven | Shape::SoOdd => NormalClosure::Normal,
        Shape::SpOdd => verdict(all_equal(d)),
        Shape::SoEven => verdict(
            (all_equal(d) && d.iter().all(|x| x % 2 == 0))
                || two_even_plateaus(d)
                || one_odd_between_plateaus(d),
        ),
        Shape::Linear => unreachable!(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoveringDegree {
    pub degree: Option<u64>,
    pub diagnostic: Option<String>,
}

/// Degree of the moment map onto the Richardson orbit closure, where known.
pub fn covering_degree(b: &BlockVector) -> CoveringDegree {
    let known = |k: u64| CoveringDegree {
        degree: Some(k),
        diagnostic: None,
    };
    if !nice_check(b) {
        return CoveringDegree {
            degree: None,
            diagnostic: Some("no Richardson element in g_1".into()),
        };
    }
    if b.shape() == Shape::Linear || birational_via_blocks(b) {
        return known(1);
    }
    match b.shape() {
        Shape::SpOdd => {
            let half = b.central_or_zero() / 2;
            let odd = OddEntrySet::of(b.d()).len();
            match half.checked_sub(odd) {
                Some(e) if (1..64).contains(&e) => known(1u64 << e),
                Some(e) => CoveringDegree {
                    degree: None,
                    diagnostic: Some(format!(
                        "2^(d_(r+1)/2 - |D_o|) = 2^{e} contradicts non-birationality; degree left undetermined"
                    )),
                },
                None => CoveringDegree {
                    degree: None,
                    diagnostic: Some(format!(
                        "d_(r+1)/2 - |D_o| = {half} - {odd} is negative; degree left undetermined"
                    )),
                },
            }
        }
        Shape::SoOdd
            if !is_ascending(b.d()) || b.d().last().is_some_and(|&x| x > b.central_or_zero()) =>
        {
            known(2)
        }
        _ => CoveringDegree {
            degree: None,
            diagnostic: Some("degree not determined by the closed-form cases".into()),
        },
    }
}

/// Everything known about one parabolic subalgebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub kind: LieKind,
    pub coloring: Option<Coloring>,
    pub blocks: Option<BlockVector>,
    pub nice: bool,
    /// Birationality of the moment map. `None` when it could not be decided
    /// with the selected strategies (non-nice, no oracle partition).
    pub birational: Option<bool>,
    pub sl2_given: bool,
    pub normal_closure: NormalClosure,
    pub partition: Option<Partition>,
    pub orbit_dim: Option<usize>,
    pub covering_degree: Option<u64>,
    pub bala_carter_label: Option<String>,
    pub diagnostics: Vec<String>,
}

/// Classify with the closed-form partitions and the block criteria.
pub fn classify(b: &BlockVector) -> Result<ClassificationReport> {
    let registry = crate::strategy::StrategyRegistry::with_builtins();
    classify_with(
        b,
        registry.partition("closed-form")?,
        registry.birationality("blocks")?,
    )
}

/// Classify with explicitly chosen strategies.
pub fn classify_with(
    b: &BlockVector,
    partitions: &dyn PartitionStrategy,
    birationality: &dyn BirationalityTest,
) -> Result<ClassificationReport> {
    let kind = b.kind();
    let mut diagnostics = Vec::new();
    let nice = nice_check(b);

    let partition = match partitions.partition(b) {
        Ok(p) => Some(p),
        Err(Error::UnsupportedFormula(msg)) => {
            diagnostics.push(msg);
            None
        }
        Err(e) => return Err(e),
    };

    let birational = match b.shape() {
        Shape::Linear => Some(true),
        _ => birationality.decide(b, partitions)?,
    };

    if let (Some(lam), Shape::SpEven | Shape::SpOdd | Shape::SoEven | Shape::SoOdd, true) =
        (&partition, b.shape(), nice)
    {
        let by_partition = birational_via_partition(kind, b, lam)?;
        if Some(by_partition) != birational {
            diagnostics.push(format!(
                "partition criterion on {lam} gives birational={by_partition}, {} gives {birational:?}",
                birationality.name()
            ));
        }
    }

    let cover = covering_degree(b);
    if let Some(msg) = &cover.diagnostic {
        if nice {
            diagnostics.push(format!("covering degree: {msg}"));
        }
    }

    Ok(ClassificationReport {
        kind,
        coloring: Some(coloring_from_blocks(b)?),
        blocks: Some(b.clone()),
        nice,
        birational,
        sl2_given: sl2_check(b),
        normal_closure: normal_closure_check(b),
        partition,
        orbit_dim: Some(kind.dim() - b.levi_dim()),
        covering_degree: cover.degree,
        bala_carter_label: None,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(k: &str, d: &[usize], c: Option<usize>) -> BlockVector {
        BlockVector::new(k.parse().unwrap(), d.to_vec(), c).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unimodal_with_plateaus() {
        assert!(is_unimodal(&[1, 2, 2, 1]));
        assert!(is_unimodal(&[3, 3, 1]));
        assert!(is_unimodal(&[]));
        assert!(!is_unimodal(&[2, 1, 2]));
        assert!(!is_unimodal(&[1, 3, 1, 2]));
    }

    #[test]
    fn nice_examples() {
        assert!(nice_check(&bv("A3", &[1, 2, 1], None)));
        assert!(!nice_check(&bv("A4", &[2, 1, 2], None)));
        assert!(!nice_check(&bv("C4", &[1, 1], Some(4))));
        assert!(nice_check(&bv("C2", &[1], Some(2))));
        assert!(nice_check(&bv("D4", &[3], Some(2))));
        assert!(nice_check(&bv("D5", &[3, 2], None)));
        assert!(nice_check(&bv("D5", &[2, 3], None)));
    }

    #[test]
    fn birational_examples() {
        assert!(birational_via_blocks(&bv("C3", &[2], Some(2))));
        assert!(birational_via_blocks(&bv("D5", &[1, 4], None)));
        assert!(!birational_via_blocks(&bv("D7", &[3, 4], None)));
        assert!(!birational_via_blocks(&bv("C2", &[1], Some(2))));
    }

    #[test]
    fn partition_route_examples() {
        let b3 = bv("B3", &[2], Some(3));
        assert!(birational_via_partition(b3.kind(), &b3, &p(&[3, 3, 1])).unwrap());
        let c2 = bv("C2", &[1], Some(2));
        assert!(!birational_via_partition(c2.kind(), &c2, &p(&[2, 2])).unwrap());
        let d5 = bv("D5", &[1, 4], None);
        assert!(birational_via_partition(d5.kind(), &d5, &p(&[3, 3, 2, 2])).unwrap());
        assert!(matches!(
            birational_via_partition(d5.kind(), &d5, &p(&[3, 3])),
            Err(Error::SizeMismatch {
                expected: 10,
                got: 6
            })
        ));
    }

    #[test]
    fn sl2_examples() {
        assert!(sl2_check(&bv("A3", &[1, 2, 1], None)));
        assert!(!sl2_check(&bv("A5", &[1, 2, 3], None)));
        assert!(nice_check(&bv("A5", &[1, 2, 3], None)));
        assert!(!sl2_check(&bv("D5", &[1, 4], None)));
        assert!(sl2_check(&bv("D4", &[2, 2], None)));
    }

    #[test]
    fn normal_closure_examples() {
        assert_eq!(
            normal_closure_check(&bv("C3", &[2], Some(2))),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("C7", &[2, 4], Some(2))),
            NormalClosure::OutOfScope
        );
        assert_eq!(
            normal_closure_check(&bv("C8", &[2, 4], Some(4))),
            NormalClosure::NotNormal
        );
        assert_eq!(
            normal_closure_check(&bv("D4", &[2, 2], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("A3", &[2, 1, 1], None)),
            NormalClosure::Normal
        );
    }

    #[test]
    fn normal_closure_two_plateaus_boundaries() {
        // s = 1 and s = r - 1 are both covered; d = (2,4) has s = 1 = r - 1
        assert_eq!(
            normal_closure_check(&bv("D6", &[2, 4], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("D8", &[2, 2, 4], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("D10", &[2, 4, 4], None)),
            NormalClosure::Normal
        );
        // s = 0 is not allowed: a single plateau is case (a)
        assert_eq!(
            normal_closure_check(&bv("D8", &[4, 4], None)),
            NormalClosure::Normal
        );
        // gap of 4 between plateaus
        assert_eq!(
            normal_closure_check(&bv("D8", &[2, 6], None)),
            NormalClosure::NotNormal
        );
        // three plateaus
        assert_eq!(
            normal_closure_check(&bv("D12", &[2, 4, 6], None)),
            NormalClosure::NotNormal
        );
    }

    #[test]
    fn normal_closure_one_odd() {
        assert_eq!(
            normal_closure_check(&bv("D5", &[1, 4], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("D9", &[1, 4, 4], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("D11", &[2, 3, 6], None)),
            NormalClosure::Normal
        );
        assert_eq!(
            normal_closure_check(&bv("D12", &[2, 4, 6], None)),
            NormalClosure::NotNormal
        );
        assert_eq!(
            normal_closure_check(&bv("D10", &[1, 4, 5], None)),
            NormalClosure::OutOfScope
        );
    }

    #[test]
    fn covering_degrees() {
        assert_eq!(covering_degree(&bv("C3", &[2], Some(2))).degree, Some(1));
        assert_eq!(covering_degree(&bv("D4", &[3], Some(2))).degree, Some(2));
        let sp = covering_degree(&bv("C2", &[1], Some(2)));
        assert_eq!(sp.degree, None);
        assert!(sp.diagnostic.is_some());
        assert_eq!(covering_degree(&bv("C4", &[1], Some(6))).degree, Some(4));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&bv("A3", &[1, 2, 1], None)).unwrap();
        assert!(r.nice && r.sl2_given);
        assert_eq!(r.birational, Some(true));
        assert_eq!(r.partition, Some(p(&[3, 1])));
        assert_eq!(r.normal_closure, NormalClosure::Normal);

        let r = classify(&bv("C3", &[2], Some(2))).unwrap();
        assert!(r.nice && r.sl2_given);
        assert_eq!(r.birational, Some(true));
        assert_eq!(r.partition, Some(p(&[3, 3])));

        let r = classify(&bv("D7", &[3, 4], None)).unwrap();
        assert!(r.nice && !r.sl2_given);
        assert_eq!(r.birational, Some(false));
        assert_eq!(r.normal_closure, NormalClosure::OutOfScope);
    }
}
