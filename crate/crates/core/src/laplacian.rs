//! Laplacian edge perturbations and controllability of vertex pairs
//! relative to `L = D - A`.
//!
//! With `h = e_i - e_j`, adding the edge `ij` gives
//! `phi(L(Y)) = phi(L(X)) - h^T adj(tI - L) h`; deleting it flips the sign.
//! Since every `L^r h` is orthogonal to the all-ones vector, the module
//! generated by `h` has dimension at most `v - 1`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{char_poly, distinct_pole_count, rational_to_int_poly, IntPoly, Matrix, RationalFunction, Scalar};
use crate::control::{krylov_columns, resolvent_numerator};
use crate::graph::{Graph, AUTOMORPHISM_BOUND};
use crate::{Error, Result};

/// The vector `e_i - e_j` for distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    order: usize,
    i: usize,
    j: usize,
}

impl EdgeVector {
    pub fn new(order: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x >= order {
                return Err(Error::VertexOutOfRange { vertex: x, order });
            }
        }
        if i == j {
            return Err(Error::RepeatedVertex(i));
        }
        Ok(EdgeVector { order, i, j })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn vector(&self) -> Vec<Scalar> {
        (0..self.order)
            .map(|k| {
                if k == self.i {
                    Scalar::one()
                } else if k == self.j {
                    -Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    }

    /// `H_{i,j} = h h^T`.
    pub fn outer(&self) -> Matrix {
        let h = self.vector();
        Matrix::from_fn(self.order, self.order, |a, b| &h[a] * &h[b])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbMode {
    Add,
    Delete,
}

fn laplacian_numerator(l: &Matrix, h: &EdgeVector) -> Result<IntPoly> {
    rational_to_int_poly(&resolvent_numerator(l, &h.vector())?)
        .ok_or_else(|| Error::Inconsistency("Laplacian numerator is not integral".into()))
}

/// Returns `(phi(L(Y)) computed directly, phi(L(X)) -/+ h^T adj(tI - L) h)`,
/// which must agree.
pub fn edge_perturbation_polys(g: &Graph, i: usize, j: usize, mode: PerturbMode) -> Result<(IntPoly, IntPoly)> {
    let h = EdgeVector::new(g.order(), i, j)?;
    let mut y = g.clone();
    match (mode, g.has_edge(i, j)) {
        (PerturbMode::Add, false) => y.add_edge(i, j)?,
        (PerturbMode::Delete, true) => y.remove_edge(i, j)?,
        _ => return Err(Error::EdgeMismatch(i, j)),
    }
    let l = g.laplacian();
    let direct = char_poly(&y.laplacian())?;
    let base = char_poly(&l)?;
    let correction = laplacian_numerator(&l, &h)?;
    let formula = match mode {
        PerturbMode::Add => &base - &correction,
        PerturbMode::Delete => &base + &correction,
    };
    if direct != formula {
        return Err(Error::Inconsistency(format!(
            "perturbed Laplacian polynomial {direct} differs from formula {formula}"
        )));
    }
    Ok((direct, formula))
}

/// Dimensions relevant to Laplacian controllability of `{i, j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaplacianPairRanks {
    /// Rank of `(h, Lh, ..., L^{v-1} h)`.
    pub module_dim: usize,
    /// Rank of `(1, h, Lh, ..., L^{v-1} h)`; always `module_dim + 1`.
    pub bordered_rank: usize,
}

pub fn laplacian_pair_ranks(g: &Graph, i: usize, j: usize) -> Result<LaplacianPairRanks> {
    let v = g.order();
    let h = EdgeVector::new(v, i, j)?;
    let l = g.laplacian();
    let k = krylov_columns(&l, &h.vector(), v);
    let ones = Matrix::from_fn(v, 1, |_, _| Scalar::one());
    let bordered = Matrix::from_fn(v, v + 1, |r, c| if c == 0 { ones[(r, 0)].clone() } else { k[(r, c - 1)].clone() });
    Ok(LaplacianPairRanks { module_dim: k.rank(), bordered_rank: bordered.rank() })
}

/// `{i, j}` is controllable relative to `L` when the `L`-module generated by
/// `e_i - e_j` has dimension `v - 1` (bordered rank `v`).
pub fn laplacian_pair_controllable(g: &Graph, i: usize, j: usize) -> Result<bool> {
    let ranks = laplacian_pair_ranks(g, i, j)?;
    Ok(ranks.module_dim + 1 == g.order())
}

/// Distinct poles of `h^T (tI - L)^{-1} h`.
pub fn laplacian_pole_count(g: &Graph, i: usize, j: usize) -> Result<usize> {
    let h = EdgeVector::new(g.order(), i, j)?;
    let l = g.laplacian();
    let num = laplacian_numerator(&l, &h)?;
    distinct_pole_count(&RationalFunction::new(num, char_poly(&l)?)?)
}

/// For a Laplacian-controllable pair: true iff only the identity
/// automorphism fixes `{i, j}` setwise.
///
/// On two vertices the swap fixes `{0, 1}` and acts on `h` as `-1`, so the
/// answer for `K_2` is `false`; the implication holds from three vertices on.
pub fn laplacian_pair_automorphism_check(g: &Graph, i: usize, j: usize) -> Result<bool> {
    if !laplacian_pair_controllable(g, i, j)? {
        return Err(Error::NotControllable);
    }
    let auts = g.automorphisms_with_bound(AUTOMORPHISM_BOUND)?;
    Ok(auts.iter().all(|p| {
        let fixes = (p[i] == i && p[j] == j) || (p[i] == j && p[j] == i);
        !fixes || p.iter().enumerate().all(|(k, &x)| k == x)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbation_examples() {
        let k2 = Graph::complete(2);
        let (a, b) = edge_perturbation_polys(&k2, 0, 1, PerturbMode::Delete).unwrap();
        assert_eq!((a.clone(), b), (IntPoly::from_i64s(&[0, 0, 1]), a));
        let (a, _) = edge_perturbation_polys(&Graph::empty(2), 0, 1, PerturbMode::Add).unwrap();
        assert_eq!(a, IntPoly::from_i64s(&[0, -2, 1]));
        assert_eq!(edge_perturbation_polys(&k2, 0, 1, PerturbMode::Add), Err(Error::EdgeMismatch(0, 1)));
    }

    #[test]
    fn add_then_delete_restores() {
        let g = Graph::path(4);
        let (after, _) = edge_perturbation_polys(&g, 0, 3, PerturbMode::Add).unwrap();
        let mut y = g.clone();
        y.add_edge(0, 3).unwrap();
        assert_eq!(after, char_poly(&y.laplacian()).unwrap());
        let (back, _) = edge_perturbation_polys(&y, 0, 3, PerturbMode::Delete).unwrap();
        assert_eq!(back, char_poly(&g.laplacian()).unwrap());
    }

    #[test]
    fn laplacian_is_sum_of_edge_outers() {
        let g = Graph::path(3);
        let sum = g
            .edges()
            .map(|(i, j)| EdgeVector::new(3, i, j).unwrap().outer())
            .fold(Matrix::zeros(3, 3), |acc, h| &acc + &h);
        assert_eq!(sum, g.laplacian());
    }

    #[test]
    fn pair_controllability_examples() {
        let k2 = Graph::complete(2);
        assert!(laplacian_pair_controllable(&k2, 0, 1).unwrap());
        assert_eq!(laplacian_pair_ranks(&k2, 0, 1).unwrap(), LaplacianPairRanks { module_dim: 1, bordered_rank: 2 });
        let c4 = Graph::cycle(4);
        for j in 0..4 {
            for i in 0..j {
                assert!(!laplacian_pair_controllable(&c4, i, j).unwrap());
            }
        }
        assert!(!laplacian_pair_controllable(&Graph::path(3), 0, 2).unwrap());
        assert_eq!(laplacian_pair_controllable(&k2, 1, 1), Err(Error::RepeatedVertex(1)));
    }

    #[test]
    fn automorphism_consequence() {
        // the K_2 boundary case
        assert!(!laplacian_pair_automorphism_check(&Graph::complete(2), 0, 1).unwrap());
        // P_4 with its end-to-interior pair {0, 2}: nothing but the identity fixes it
        let p4 = Graph::path(4);
        if laplacian_pair_controllable(&p4, 0, 2).unwrap() {
            assert!(laplacian_pair_automorphism_check(&p4, 0, 2).unwrap());
        }
        assert_eq!(laplacian_pair_automorphism_check(&Graph::cycle(4), 0, 1), Err(Error::NotControllable));
    }

    #[test]
    fn pole_count_matches_module_dim() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        for j in 0..5 {
            for i in 0..j {
                let dim = laplacian_pair_ranks(&g, i, j).unwrap().module_dim;
                assert_eq!(laplacian_pole_count(&g, i, j).unwrap(), dim);
            }
        }
    }
}
