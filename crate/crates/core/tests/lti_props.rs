mod common;

use common::{int, ints, unlabelled_graphs};
use ctrlgraph_core::algebra::char_poly;
use ctrlgraph_core::control::numerator_poly;
use ctrlgraph_core::lti::{
    controllability_matrix, generating_identity_check, generating_identity_check_trajectory, is_observable,
    observability_matrix, recover_state, reversed_char_poly, simulate, transfer_function, DiscreteSystem,
};
use ctrlgraph_core::{Matrix, PairSpec, Scalar, VertexSet};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut ChaCha8Rng, d: usize, span: i64) -> Vec<Scalar> {
    (0..d).map(|_| int(rng.gen_range(-span..=span))).collect()
}

fn random_system(rng: &mut ChaCha8Rng, d: usize) -> DiscreteSystem {
    let a = Matrix::from_fn(d, d, |_, _| int(rng.gen_range(-2..=2)));
    let (b, c, x0) = (random_vec(rng, d, 3), random_vec(rng, d, 3), random_vec(rng, d, 3));
    DiscreteSystem::new(a, b, c, x0).unwrap()
}

fn signs(rng: &mut ChaCha8Rng, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| int(if rng.gen_bool(0.5) { 1 } else { -1 })).collect()
}

#[test]
fn generating_identity_to_order_3d() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..50 {
        let d = 1 + k % 5;
        let sys = random_system(&mut rng, d);
        let inputs = signs(&mut rng, 3 * d);
        let check = generating_identity_check(&sys, &inputs, 3 * d).unwrap();
        assert!(check.holds, "{sys:?}");
    }
}

#[test]
fn corrupted_trajectory_is_caught_at_first_bad_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..20 {
        let d = 1 + k % 5;
        let sys = random_system(&mut rng, d);
        let inputs = signs(&mut rng, 12);
        let mut traj = simulate(&sys, &inputs, 11).unwrap();
        let bad = rng.gen_range(0..12);
        let coord = rng.gen_range(0..d);
        traj[bad][coord] += Scalar::one();
        let check = generating_identity_check_trajectory(&sys, &inputs, &traj, 12).unwrap();
        assert!(!check.holds);
        assert_eq!(check.first_mismatch, Some(bad));
    }
}

#[test]
fn state_recovery_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    while done < 20 {
        let d = 1 + done % 5;
        let sys = random_system(&mut rng, d);
        if !is_observable(&sys).unwrap() {
            assert!(recover_state(&sys, &vec![Scalar::zero(); d], 0).is_err());
            continue;
        }
        let m = rng.gen_range(0..4);
        let mut inputs = signs(&mut rng, m);
        inputs.extend(std::iter::repeat(Scalar::zero()).take(d));
        let traj = simulate(&sys, &inputs, m + d).unwrap();
        let outputs: Vec<Scalar> = traj[m..m + d].iter().map(|x| sys.output(x)).collect();
        assert_eq!(recover_state(&sys, &outputs, m).unwrap(), traj[m]);
        done += 1;
    }
}

#[test]
fn cayley_hamilton_keeps_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..40 {
        let d = 1 + k % 6;
        let sys = random_system(&mut rng, d);
        let w = controllability_matrix(sys.a(), sys.b()).unwrap();
        let mut last = sys.b().to_vec();
        for _ in 0..d {
            last = sys.a().mul_vec(&last);
        }
        let mut cols: Vec<Vec<Scalar>> = (0..d).map(|j| w.column(j)).collect();
        cols.push(last);
        assert_eq!(Matrix::from_columns(d, &cols).unwrap().rank(), w.rank());
    }
}

#[test]
fn transfer_denominator_is_reversed_char_poly() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..30 {
        let d = 1 + k % 5;
        let sys = random_system(&mut rng, d);
        let tf = transfer_function(&sys).unwrap();
        assert_eq!(tf.denominator(), &reversed_char_poly(sys.a()).unwrap());
        // the numerator matches the Neumann series c^T A^n b
        let mut x = sys.b().to_vec();
        let mut series = Vec::new();
        for _ in 0..2 * d + 1 {
            series.push(sys.output(&x));
            x = sys.a().mul_vec(&x);
        }
        let den = tf.denominator().coeffs();
        for n in 0..2 * d + 1 {
            let conv: Scalar =
                (0..=n).map(|k| int(den.get(k).map_or(0, |c| i64::try_from(c).unwrap())) * &series[n - k]).sum();
            let expect = Scalar::from_integer(tf.numerator().coeff(n));
            assert_eq!(conv, expect, "degree {n}");
        }
    }
}

#[test]
fn transfer_of_graph_pair_is_reversed_resolvent() {
    // z^T (I - tA)^{-1} z = s phi_S(s) / phi(s) with s = 1/t
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 2..=5 {
        for g in unlabelled_graphs(n) {
            let s = VertexSet::from_mask(n, rng.gen());
            let z = s.characteristic_vector();
            let sys = DiscreteSystem::new(g.adjacency(), z.clone(), z, vec![Scalar::zero(); n]).unwrap();
            let tf = transfer_function(&sys).unwrap();
            let phi = char_poly(&g.adjacency()).unwrap();
            let phi_s = numerator_poly(&PairSpec::from_subset(g.clone(), s).unwrap()).unwrap();
            for _ in 0..3 {
                let t = Scalar::new(rng.gen_range(1..20i64).into(), rng.gen_range(21..60i64).into());
                let inv = t.recip();
                if phi.eval_rational(&inv).is_zero() {
                    continue;
                }
                let lhs = tf.numerator().eval_rational(&t) / tf.denominator().eval_rational(&t);
                let rhs = &inv * phi_s.eval_rational(&inv) / phi.eval_rational(&inv);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn observability_is_transpose_for_symmetric_a() {
    let a = Matrix::from_i64_rows(&[&[0, 1, 2], &[1, -1, 0], &[2, 0, 3]]).unwrap();
    let c = ints(&[1, 0, -1]);
    assert_eq!(observability_matrix(&a, &c).unwrap(), controllability_matrix(&a, &c).unwrap().transpose());
}
