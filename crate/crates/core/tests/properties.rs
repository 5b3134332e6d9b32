use parabolic_core::blocks::{all_block_vectors, blocks_from_coloring, coloring_from_blocks};
use parabolic_core::classify::{
    birational_via_blocks, birational_via_partition, covering_degree, nice_check,
    normal_closure_check, sl2_check,
};
use parabolic_core::formulas::{
    jordan_from_kernel_dims, richardson_dual_partition_bcd, richardson_partition,
    so_even_one_odd_explicit,
};
use parabolic_core::oracle::levi_blocks_from_matrices;
use parabolic_core::oracle::realization::MatrixRealization;
use parabolic_core::partition::partitions_of;
use parabolic_core::verify::classical_kinds_up_to;
use parabolic_core::*;
use proptest::prelude::*;

fn all_classical(max_n: usize) -> Vec<BlockVector> {
    classical_kinds_up_to(max_n)
        .into_iter()
        .flat_map(|k| all_block_vectors(k).unwrap())
        .collect()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permutations(b: &BlockVector) -> Vec<BlockVector> {
    let mut d = b.d().to_vec();
    d.sort_unstable();
    let mut out = Vec::new();
    loop {
        if let Ok(p) = BlockVector::new(b.kind(), d.clone(), b.central()) {
            out.push(p);
        }
        if !next_permutation(&mut d) {
            return out;
        }
    }
}

fn kernel_profile(lam: &Partition) -> Vec<usize> {
    let m = lam.parts().first().copied().unwrap_or(0);
    (0..=m)
        .map(|j| lam.parts().iter().map(|&p| p.min(j)).sum())
        .collect()
}

#[test]
fn transpose_is_an_involution_up_to_thirty() {
    for n in 0..=30 {
        for p in partitions_of(n) {
            assert_eq!(p.transpose().transpose(), p);
            assert_eq!(p.transpose().size(), n);
        }
    }
}

#[test]
fn odd_and_even_parts_add_up() {
    for n in 0..=20 {
        for p in partitions_of(n) {
            let even = p.parts().iter().filter(|x| *x % 2 == 0).count();
            assert_eq!(p.n_odd() + even, p.len());
        }
    }
}

#[test]
fn kernel_profile_recovers_partition() {
    for n in 0..=16 {
        for p in partitions_of(n) {
            assert_eq!(jordan_from_kernel_dims(&kernel_profile(&p)).unwrap(), p);
            assert_eq!(kernel_profile(&p).get(1).copied().unwrap_or(0), p.len());
        }
    }
}

#[test]
fn coloring_round_trip_up_to_rank_eight() {
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=8 {
            let Ok(kind) = LieKind::new(family, rank) else {
                continue;
            };
            for c in Coloring::all(kind) {
                let b = blocks_from_coloring(&c).unwrap();
                assert_eq!(coloring_from_blocks(&b).unwrap(), c.canonicalize(), "{c}");
                assert_eq!(
                    b.expanded().iter().sum::<usize>(),
                    kind.matrix_size().unwrap()
                );
            }
        }
    }
}

#[test]
fn blocks_agree_with_realized_grading() {
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=5 {
            let Ok(kind) = LieKind::new(family, rank) else {
                continue;
            };
            for c in Coloring::all(kind) {
                assert_eq!(
                    levi_blocks_from_matrices(&c).unwrap(),
                    blocks_from_coloring(&c).unwrap(),
                    "{c}"
                );
            }
        }
    }
}

#[test]
fn levi_dim_counts_block_diagonal_basis() {
    for b in all_classical(10) {
        let real = MatrixRealization::new(b.kind()).unwrap();
        let rows = b.block_of_rows();
        let count = real.sub_basis(|i, j| rows[i] == rows[j]).len();
        assert_eq!(count, b.levi_dim(), "{b}");
    }
}

#[test]
fn partition_sizes_and_transpose_route() {
    for b in all_classical(14).into_iter().filter(nice_check) {
        let lam = richardson_partition(&b).unwrap();
        assert_eq!(lam.size(), b.matrix_size(), "{b}");
        if b.shape() != Shape::Linear {
            if let Ok(dual) = richardson_dual_partition_bcd(&b) {
                assert_eq!(dual.transpose(), lam, "{b}");
            }
        }
    }
}

#[test]
fn sp_odd_all_even_has_only_odd_parts() {
    for b in all_classical(14) {
        if b.shape() == Shape::SpOdd && nice_check(&b) && b.d().iter().all(|x| x % 2 == 0) {
            let lam = richardson_partition(&b).unwrap();
            assert_eq!(lam.n_odd(), b.central_or_zero(), "{b}");
            assert_eq!(lam.n_odd(), lam.len(), "{b}");
        }
    }
}

#[test]
fn so_odd_drop_adds_two_odd_parts() {
    let mut seen = 0;
    for b in all_classical(14) {
        let c = b.central_or_zero();
        if b.shape() == Shape::SoOdd && nice_check(&b) && b.d().iter().max() == Some(&(c + 1)) {
            let lam = richardson_partition(&b).unwrap();
            assert_eq!(lam.len(), c + 2, "{b}");
            assert_eq!(lam.n_odd(), c + 2, "{b}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn one_odd_explicit_formula_matches() {
    let mut seen = 0;
    for b in all_classical(14) {
        let odd = b.d().iter().filter(|x| *x % 2 == 1).count();
        if b.shape() == Shape::SoEven && nice_check(&b) && odd == 1 {
            assert_eq!(
                so_even_one_odd_explicit(&b).unwrap(),
                richardson_partition(&b).unwrap(),
                "{b}"
            );
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn sl2_implies_birational() {
    for b in all_classical(14) {
        if sl2_check(&b) {
            assert!(birational_via_blocks(&b), "{b}");
        }
    }
}

#[test]
fn type_a_is_always_birational() {
    for b in all_classical(10)
        .into_iter()
        .filter(|b| b.shape() == Shape::Linear)
    {
        let report = classify(&b).unwrap();
        assert_eq!(report.birational, Some(true), "{b}");
        if let Some(lam) = &report.partition {
            assert!(birational_via_partition(b.kind(), &b, lam).unwrap());
        }
    }
}

#[test]
fn normal_closure_scope() {
    for b in all_classical(14) {
        let out = normal_closure_check(&b) == NormalClosure::OutOfScope;
        assert_eq!(
            out,
            b.shape() != Shape::Linear && !birational_via_blocks(&b),
            "{b}"
        );
    }
}

#[test]
fn birational_parabolics_cover_once() {
    for b in all_classical(14) {
        if birational_via_blocks(&b) {
            assert_eq!(covering_degree(&b).degree, Some(1), "{b}");
        }
    }
}

#[test]
fn reordering_keeps_partition_and_birationality() {
    for b in all_classical(14).into_iter().filter(nice_check) {
        let lam = richardson_partition(&b).unwrap();
        let bir = birational_via_partition(b.kind(), &b, &lam).unwrap();
        for p in permutations(&b).into_iter().filter(nice_check) {
            assert_eq!(richardson_partition(&p).unwrap(), lam, "{b} vs {p}");
            if b.shape() != Shape::Linear {
                assert_eq!(
                    birational_via_blocks(&p),
                    birational_via_blocks(&b.sorted()),
                    "{p}"
                );
            }
            assert_eq!(
                birational_via_partition(p.kind(), &p, &lam).unwrap(),
                bir,
                "{p}"
            );
        }
    }
}

#[test]
fn niceness_depends_on_order() {
    let kind: LieKind = "A4".parse().unwrap();
    assert!(!nice_check(
        &BlockVector::new(kind, vec![2, 1, 2], None).unwrap()
    ));
    assert!(nice_check(
        &BlockVector::new(kind, vec![1, 2, 2], None).unwrap()
    ));
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 0..12).prop_map(Partition::from_multiset)
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..18).prop_flat_map(|n| {
        let all = partitions_of(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn transpose_reverses_dominance((a, b) in same_size_pair()) {
        prop_assert_eq!(a.dominates(&b), b.transpose().dominates(&a.transpose()));
    }

    #[test]
    fn union_is_additive(a in partition_strategy(), b in partition_strategy()) {
        let u = a.union(&b);
        prop_assert_eq!(u.size(), a.size() + b.size());
        prop_assert_eq!(u.len(), a.len() + b.len());
        prop_assert_eq!(u.n_odd(), a.n_odd() + b.n_odd());
    }

    #[test]
    fn kernel_profile_round_trip(p in partition_strategy()) {
        prop_assert_eq!(jordan_from_kernel_dims(&kernel_profile(&p)).unwrap(), p);
    }
}
