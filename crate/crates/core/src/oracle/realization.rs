//! Classical Lie algebras as matrix algebras inside gl_N.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kind::{Family, LieKind};
use crate::oracle::exact::ExactMatrix;

/// A basis element stored sparsely as `(row, col, coefficient)` triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBasis {
    /// Row-major leading position, used for ordering and grading.
    pub lead: (usize, usize),
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseBasis {
    pub fn to_matrix(&self, n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        for &(i, j, c) in &self.entries {
            m.add_to(i, j, c);
        }
        m
    }
}

/// Type A: trace-zero matrices. B, D: skew-adjoint for the symmetric form
/// with ones on the anti-diagonal. C: skew-adjoint for the symplectic form
/// whose anti-diagonal is `+1` in the first `n` rows and `-1` in the last `n`.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    kind: LieKind,
    size: usize,
    form: Option<ExactMatrix>,
    basis: Vec<SparseBasis>,
}

impl MatrixRealization {
    pub fn new(kind: LieKind) -> Result<Self> {
        let size = kind.require_classical()?;
        let form = form_matrix(kind, size);
        let basis = build_basis(kind, size);
        Ok(MatrixRealization {
            kind,
            size,
            form,
            basis,
        })
    }

    pub fn kind(&self) -> LieKind {
        self.kind
    }

    /// N, the size of the matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn form(&self) -> Option<&ExactMatrix> {
        self.form.as_ref()
    }

    pub fn basis(&self) -> &[SparseBasis] {
        &self.basis
    }

    pub fn basis_matrices(&self) -> Vec<ExactMatrix> {
        self.basis.iter().map(|b| b.to_matrix(self.size)).collect()
    }

    /// Basis elements whose leading position satisfies `keep`.
    pub fn sub_basis(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<&SparseBasis> {
        self.basis
            .iter()
            .filter(|b| keep(b.lead.0, b.lead.1))
            .collect()
    }

    /// Mirror index `i' = N - 1 - i`.
    pub fn mirror(&self, i: usize) -> usize {
        self.size - 1 - i
    }

    pub fn contains(&self, x: &ExactMatrix) -> bool {
        if x.rows() != self.size || x.cols() != self.size {
            return false;
        }
        match &self.form {
            None => x.trace().is_zero(),
            Some(j) => {
                let lhs = x.transpose().mul(j).and_then(|a| a.add(&j.mul(x)?));
                lhs.map(|m| m.is_zero()).unwrap_or(false)
            }
        }
    }

    pub fn require_member(&self, x: &ExactMatrix) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInAlgebra(self.kind))
        }
    }

    /// Matrix of `Y -> [X, Y]` from g (columns, in basis order) to gl_N
    /// (rows, row-major entries). Returned row-major as `i64`.
    pub fn ad_matrix_i64(&self, x: &[i64]) -> Vec<i64> {
        let n = self.size;
        let cols = self.basis.len();
        let mut out = vec![0i64; n * n * cols];
        for (k, b) in self.basis.iter().enumerate() {
            for &(p, q, c) in &b.entries {
                // X E_pq contributes column q from X's column p
                for i in 0..n {
                    let xv = x[i * n + p];
                    if xv != 0 {
                        out[(i * n + q) * cols + k] += xv * c;
                    }
                }
                // E_pq X contributes row p from X's row q
                for j in 0..n {
                    let xv = x[q * n + j];
                    if xv != 0 {
                        out[(p * n + j) * cols + k] -= xv * c;
                    }
                }
            }
        }
        out
    }

    /// Same map as [`MatrixRealization::ad_matrix_i64`] with exact entries.
    pub fn ad_matrix(&self, x: &ExactMatrix) -> ExactMatrix {
        let n = self.size;
        let cols = self.basis.len();
        let mut out = ExactMatrix::zeros(n * n, cols);
        for (k, b) in self.basis.iter().enumerate() {
            for &(p, q, c) in &b.entries {
                let c = BigInt::from(c);
                for i in 0..n {
                    let xv = x.get(i, p);
                    if !xv.is_zero() {
                        let cur = out.get(i * n + q, k) + xv * &c;
                        out.set(i * n + q, k, cur);
                    }
                }
                for j in 0..n {
                    let xv = x.get(q, j);
                    if !xv.is_zero() {
                        let cur = out.get(p * n + j, k) - xv * &c;
                        out.set(p * n + j, k, cur);
                    }
                }
            }
        }
        out
    }
}

fn sign_sp(k: usize, n: usize) -> i64 {
    if k < n {
        1
    } else {
        -1
    }
}

fn form_matrix(kind: LieKind, size: usize) -> Option<ExactMatrix> {
    let n = kind.rank();
    match kind.family() {
        Family::A => None,
        fam => {
            let mut j = ExactMatrix::zeros(size, size);
            for i in 0..size {
                let v = if fam == Family::C { sign_sp(i, n) } else { 1 };
                j.set(i, size - 1 - i, BigInt::from(v));
            }
            Some(j)
        }
    }
}

fn build_basis(kind: LieKind, size: usize) -> Vec<SparseBasis> {
    let n = kind.rank();
    let mut basis = Vec::new();
    if kind.family() == Family::A {
        for i in 0..size {
            for j in 0..size {
                if i != j {
                    basis.push(SparseBasis {
                        lead: (i, j),
                        entries: vec![(i, j, 1)],
                    });
                } else if i + 1 < size {
                    basis.push(SparseBasis {
                        lead: (i, i),
                        entries: vec![(i, i, 1), (i + 1, i + 1, -1)],
                    });
                }
            }
        }
        return basis;
    }
    let mirror = |i: usize| size - 1 - i;
    for i in 0..size {
        for j in 0..size {
            let partner = (mirror(j), mirror(i));
            if partner < (i, j) {
                continue;
            }
            let sigma = match kind.family() {
                Family::C => sign_sp(mirror(i), n) * sign_sp(j, n),
                _ => -1,
            };
            if partner == (i, j) {
                if sigma == 1 {
                    basis.push(SparseBasis {
                        lead: (i, j),
                        entries: vec![(i, j, 1)],
                    });
                }
                continue;
            }
            basis.push(SparseBasis {
                lead: (i, j),
                entries: vec![(i, j, 1), (partner.0, partner.1, sigma)],
            });
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(s: &str) -> MatrixRealization {
        MatrixRealization::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn dimensions_match_family_formulas() {
        for s in ["A1", "A3", "A6", "B2", "B4", "C2", "C5", "D3", "D4", "D6"] {
            let r = real(s);
            assert_eq!(r.dim(), r.kind().dim(), "{s}");
        }
    }

    #[test]
    fn basis_satisfies_form_identity_exactly() {
        for s in ["A3", "B3", "C3", "D4", "C4", "B2"] {
            let r = real(s);
            for m in r.basis_matrices() {
                assert!(r.contains(&m), "{s}");
            }
        }
    }

    #[test]
    fn basis_is_linearly_independent() {
        for s in ["A3", "B3", "C3", "D4"] {
            let r = real(s);
            let n = r.size();
            let rows: Vec<i64> = r
                .basis_matrices()
                .iter()
                .flat_map(|m| m.to_i64().unwrap())
                .collect();
            let stacked = ExactMatrix::from_i64(r.dim(), n * n, &rows).unwrap();
            assert_eq!(stacked.rank(), r.dim(), "{s}");
        }
    }

    #[test]
    fn ad_matrix_routes_agree() {
        let r = real("C2");
        let n = r.size();
        let x: Vec<i64> = r.basis()[3].to_matrix(n).to_i64().unwrap();
        let xm = ExactMatrix::from_i64(n, n, &x).unwrap();
        let fast = r.ad_matrix_i64(&x);
        let slow = r.ad_matrix(&xm).to_i64().unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn non_member_rejected() {
        let r = real("B2");
        let mut x = ExactMatrix::zeros(5, 5);
        x.set(0, 1, BigInt::from(1));
        assert!(!r.contains(&x));
        assert!(r.require_member(&x).is_err());
    }
}
