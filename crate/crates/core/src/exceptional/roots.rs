use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use crate::blocks::Coloring;
use crate::error::{Error, Result};
use crate::kind::{Family, LieKind};

/// Positive roots as coefficient vectors over the simple roots, Bourbaki
/// numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    kind: LieKind,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

/// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
fn cartan_matrix(family: Family) -> Option<Vec<Vec<i64>>> {
    let simply_laced = |n: usize, edges: &[(usize, usize)]| {
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in edges {
            a[i - 1][j - 1] = -1;
            a[j - 1][i - 1] = -1;
        }
        a
    };
    // 1 - 3 - 4 - 5 - 6 - 7 - 8 with 2 attached to 4
    let e_edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)];
    let e = |n: usize| {
        let edges: Vec<_> = e_edges
            .iter()
            .copied()
            .filter(|&(i, j)| i <= n && j <= n)
            .collect();
        simply_laced(n, &edges)
    };
    Some(match family {
        Family::G2 => vec![vec![2, -3], vec![-1, 2]],
        Family::F4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Family::E6 => e(6),
        Family::E7 => e(7),
        Family::E8 => e(8),
        _ => return None,
    })
}

fn not_exceptional(kind: LieKind) -> Error {
    Error::UnsupportedKind {
        kind,
        reason: "root systems are built for exceptional types only",
    }
}

fn generate(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far the alpha_i-string extends below beta
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

impl RootSystem {
    pub fn build(kind: LieKind) -> Result<RootSystem> {
        let cartan = cartan_matrix(kind.family()).ok_or_else(|| not_exceptional(kind))?;
        let positive_roots = generate(&cartan);
        Ok(RootSystem {
            kind,
            cartan,
            positive_roots,
        })
    }

    /// Shared instance for each exceptional type.
    pub fn cached(kind: LieKind) -> Result<&'static RootSystem> {
        static CACHE: [OnceLock<RootSystem>; 5] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let slot = match kind.family() {
            Family::G2 => 0,
            Family::F4 => 1,
            Family::E6 => 2,
            Family::E7 => 3,
            Family::E8 => 4,
            _ => return Err(not_exceptional(kind)),
        };
        if let Some(rs) = CACHE[slot].get() {
            return Ok(rs);
        }
        let rs = RootSystem::build(kind)?;
        Ok(CACHE[slot].get_or_init(|| rs))
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Positive roots of maximal height; a single root for irreducible systems.
    pub fn highest_roots(&self) -> Vec<&[i64]> {
        let height = |r: &[i64]| r.iter().sum::<i64>();
        let top = self
            .positive_roots
            .iter()
            .map(|r| height(r))
            .max()
            .unwrap_or(0);
        self.positive_roots
            .iter()
            .filter(|r| height(r) == top)
            .map(Vec::as_slice)
            .collect()
    }
}

/// `dim g_i` for every grade `i` with `g_i != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn get(&self, grade: i64) -> usize {
        self.dims.get(&grade).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

fn check_kind(rs: &RootSystem, c: &Coloring) -> Result<()> {
    if rs.kind() != c.kind() {
        return Err(Error::InvalidColoring {
            kind: c.kind(),
            reason: format!("root system is for {}", rs.kind()),
        });
    }
    Ok(())
}

/// Root `sum c_i alpha_i` has grade `sum c_i u_i`.
pub fn grading_dims(rs: &RootSystem, c: &Coloring) -> Result<GradedDims> {
    check_kind(rs, c)?;
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank());
    for root in rs.positive_roots() {
        let grade: i64 = root
            .iter()
            .zip(c.entries())
            .map(|(&a, &u)| a * i64::from(u))
            .sum();
        *dims.entry(grade).or_insert(0) += 1;
        *dims.entry(-grade).or_insert(0) += 1;
    }
    Ok(GradedDims { dims })
}

/// `dim g - dim g_0`, the dimension of the Richardson orbit when `c` is nice.
pub fn orbit_dim(rs: &RootSystem, c: &Coloring) -> Result<usize> {
    Ok(rs.dim() - grading_dims(rs, c)?.get(0))
}
