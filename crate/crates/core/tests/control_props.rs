mod common;

use common::{arb_graph, arb_permutation, int, unlabelled_graphs};
use ctrlgraph_core::algebra::{char_poly, poly_gcd, poly_squarefree};
use ctrlgraph_core::control::{
    algebra_basis_check, cone_charpoly_identity, cone_transfer_check, full_report, is_controllable_poles,
    is_controllable_rank, is_vertex_controllable, numerator_poly, walk_matrix,
};
use ctrlgraph_core::{Graph, IntPoly, PairSpec, Radius, VertexSet};
use proptest::prelude::*;

fn pairs(n: usize) -> impl Iterator<Item = (Graph, VertexSet)> {
    unlabelled_graphs(n).into_iter().flat_map(move |g| VertexSet::all_subsets(n).map(move |s| (g.clone(), s)))
}

#[test]
fn characterizations_agree_exhaustively() {
    for n in 1..=5 {
        for (g, s) in pairs(n) {
            let p = PairSpec::from_subset(g.clone(), s.clone()).unwrap();
            let rank = is_controllable_rank(&p);
            assert_eq!(rank, is_controllable_poles(&p).unwrap(), "{g:?} {s:?}");
            if s.len() == 1 {
                assert_eq!(rank, is_vertex_controllable(&g, s.members()[0]).unwrap());
            }
            let report = full_report(&p).unwrap();
            assert_eq!(report.controllable, rank);
            assert_eq!(report.rank, walk_matrix(&p).matrix().rank());
        }
    }
}

#[test]
fn covering_radius_bounded_by_dual_degree() {
    for n in 1..=5 {
        for (g, s) in pairs(n) {
            if s.is_empty() {
                continue;
            }
            let report = full_report(&PairSpec::from_subset(g.clone(), s.clone()).unwrap()).unwrap();
            if let Some(Radius::Finite(r)) = report.covering_radius {
                assert!(r as isize <= report.dual_degree, "{g:?} {s:?}");
                assert_eq!(report.covering_bound_holds, Some(true));
            }
        }
    }
}

#[test]
fn controllable_pairs_have_no_fixing_automorphism() {
    for n in 1..=5 {
        for (g, s) in pairs(n) {
            let p = PairSpec::from_subset(g.clone(), s.clone()).unwrap();
            if !is_controllable_rank(&p) {
                continue;
            }
            let auts = g.automorphisms().unwrap();
            assert!(auts.iter().skip(1).all(|a| s.map(a) != s), "{g:?} {s:?}");
            // all eigenvalues simple
            let phi = char_poly(&g.adjacency()).unwrap();
            assert!(poly_squarefree(&phi).unwrap());
        }
    }
}

#[test]
fn algebra_basis_matches_rank() {
    for n in 1..=4 {
        for (g, s) in pairs(n) {
            let p = PairSpec::from_subset(g, s).unwrap();
            assert_eq!(algebra_basis_check(&p).unwrap(), is_controllable_rank(&p));
        }
    }
}

#[test]
fn cone_identity_and_transfer() {
    for n in 1..=4 {
        for (g, s) in pairs(n) {
            let (a, b) = cone_charpoly_identity(&g, &s).unwrap();
            assert_eq!(a, b);
            cone_transfer_check(&g, &s).unwrap();
        }
    }
}

#[test]
fn small_graphs_are_not_controllable_except_k1() {
    for n in 1..=5 {
        let count = unlabelled_graphs(n)
            .into_iter()
            .filter(|g| is_controllable_rank(&PairSpec::from_subset(g.clone(), VertexSet::full(n)).unwrap()))
            .count();
        assert_eq!(count, usize::from(n == 1), "n = {n}");
    }
}

#[test]
fn path_recurrence_and_end_vertex() {
    let t = IntPoly::t();
    let mut prev = IntPoly::one();
    let mut cur = t.clone();
    for n in 1..=20 {
        let next = &(&t * &cur) - &prev;
        assert_eq!(char_poly(&Graph::path(n + 1).adjacency()).unwrap(), next);
        assert!(poly_gcd(&next, &cur).unwrap().is_constant());
        prev = cur;
        cur = next;
    }
    for n in 1..=12 {
        assert!(is_vertex_controllable(&Graph::path(n), 0).unwrap(), "P_{n}");
    }
}

#[test]
fn dual_degree_of_zero_vector() {
    let g = Graph::path(3);
    let report = full_report(&PairSpec::from_subset(g, VertexSet::empty(3)).unwrap()).unwrap();
    assert!(report.degenerate && !report.controllable);
    assert_eq!((report.rank, report.dual_degree), (0, -1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn controllability_invariant_under_relabelling(
        (g, p, mask) in arb_graph(7).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), arb_permutation(n), any::<u64>())
        })
    ) {
        let n = g.order();
        let s = VertexSet::from_mask(n, mask);
        let a = full_report(&PairSpec::from_subset(g.clone(), s.clone()).unwrap()).unwrap();
        let b = full_report(&PairSpec::from_subset(g.permute(&p), s.map(&p)).unwrap()).unwrap();
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.char_poly, b.char_poly);
        prop_assert_eq!(a.numerator, b.numerator);
    }

    #[test]
    fn complement_invariance(g in arb_graph(7)) {
        let n = g.order();
        let a = is_controllable_rank(&PairSpec::from_subset(g.clone(), VertexSet::full(n)).unwrap());
        let b = is_controllable_rank(&PairSpec::from_subset(g.complement(), VertexSet::full(n)).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn general_vector_scaling(g in arb_graph(5), v in proptest::collection::vec(-3i64..=3, 5), k in 1i64..=4) {
        // the numerator scales by k^2 and the rank is unchanged
        let n = g.order();
        let base: Vec<_> = v[..n].iter().map(|&x| int(x)).collect();
        let scaled: Vec<_> = v[..n].iter().map(|&x| int(k * x)).collect();
        let p = PairSpec::from_vector(g.clone(), base).unwrap();
        let q = PairSpec::from_vector(g, scaled).unwrap();
        prop_assert_eq!(is_controllable_rank(&p), is_controllable_rank(&q));
        prop_assert_eq!(numerator_poly(&p).unwrap().scale(&(k * k).into()), numerator_poly(&q).unwrap());
    }
}
