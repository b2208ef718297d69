mod common;

use common::{arb_graph, unlabelled_graphs};
use ctrlgraph_core::laplacian::{
    edge_perturbation_polys, laplacian_pair_automorphism_check, laplacian_pair_controllable, laplacian_pair_ranks,
    laplacian_pole_count, EdgeVector, PerturbMode,
};
use ctrlgraph_core::{Matrix, Scalar, WalkMatrix};
use num_traits::Zero;
use proptest::prelude::*;

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn laplacian_is_sum_of_outer_products(g in arb_graph(7)) {
        let n = g.order();
        let sum = g
            .edges()
            .map(|(i, j)| EdgeVector::new(n, i, j).unwrap().outer())
            .fold(Matrix::zeros(n, n), |acc, h| &acc + &h);
        prop_assert_eq!(sum, g.laplacian());
    }

    #[test]
    fn module_is_orthogonal_to_ones(g in arb_graph(6), a in 0usize..6, b in 0usize..6) {
        let n = g.order();
        prop_assume!(n >= 2);
        let (i, j) = (a % n, b % n);
        prop_assume!(i != j);
        let h = EdgeVector::new(n, i, j).unwrap().vector();
        prop_assert!(h.iter().sum::<Scalar>().is_zero());
        let k = WalkMatrix::krylov(&g.laplacian(), &h).into_matrix();
        for c in 0..n {
            prop_assert!(k.column(c).iter().sum::<Scalar>().is_zero());
        }
        let ranks = laplacian_pair_ranks(&g, i, j).unwrap();
        prop_assert_eq!(ranks.bordered_rank, ranks.module_dim + 1);
        prop_assert_eq!(laplacian_pole_count(&g, i, j).unwrap(), ranks.module_dim);
    }

    #[test]
    fn perturbation_formula_on_random_graphs(g in arb_graph(7), a in 0usize..7, b in 0usize..7) {
        let n = g.order();
        prop_assume!(n >= 2);
        let (i, j) = (a % n, b % n);
        prop_assume!(i != j);
        let mode = if g.has_edge(i, j) { PerturbMode::Delete } else { PerturbMode::Add };
        let (direct, formula) = edge_perturbation_polys(&g, i, j, mode).unwrap();
        prop_assert_eq!(direct, formula);
    }
}

#[test]
fn perturbation_formula_exhaustive() {
    for n in 2..=5 {
        for g in unlabelled_graphs(n) {
            for (i, j) in pairs(n) {
                let mode = if g.has_edge(i, j) { PerturbMode::Delete } else { PerturbMode::Add };
                edge_perturbation_polys(&g, i, j, mode).unwrap();
                let wrong = if g.has_edge(i, j) { PerturbMode::Add } else { PerturbMode::Delete };
                assert!(edge_perturbation_polys(&g, i, j, wrong).is_err());
            }
        }
    }
}

#[test]
fn controllable_laplacian_pairs_are_rigid() {
    let mut controllable = 0;
    for n in 3..=5 {
        for g in unlabelled_graphs(n) {
            for (i, j) in pairs(n) {
                if laplacian_pair_controllable(&g, i, j).unwrap() {
                    controllable += 1;
                    assert!(laplacian_pair_automorphism_check(&g, i, j).unwrap(), "{g:?} {i} {j}");
                }
            }
        }
    }
    assert!(controllable > 0);
}

#[test]
fn module_dim_never_exceeds_v_minus_one() {
    for n in 2..=5 {
        for g in unlabelled_graphs(n) {
            for (i, j) in pairs(n) {
                let r = laplacian_pair_ranks(&g, i, j).unwrap();
                assert!(r.module_dim < n);
            }
        }
    }
}
