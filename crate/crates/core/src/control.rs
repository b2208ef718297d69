//! Walk matrices and the equivalent characterizations of controllability.
//!
//! For a symmetric matrix `A` and a vector `z` the following agree:
//!
//! * the walk matrix `W = (z, Az, ..., A^{v-1}z)` is invertible;
//! * `z^T (tI - A)^{-1} z = phi_z(t) / phi(t)` has `v` distinct poles;
//! * for `z = e_u`, `phi(X \ u, t)` and `phi(X, t)` are coprime.
//!
//! The rank of `W` equals the number of eigenvalues in the support of `z`
//! (the spectral projections never need to be formed).

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{
    self, char_poly, distinct_pole_count, int, interpolate, is_irreducible, poly_gcd, IntPoly, Matrix,
    RationalFunction, Scalar,
};
use crate::graph::{Graph, Radius, VertexSet};
use crate::{Error, Result};

/// Default vertex bound for [`algebra_basis_check`]; the check ranks a
/// `v^2 x v^2` matrix.
pub const ALGEBRA_BOUND: usize = 7;

/// Default vertex bound for [`is_charpoly_irreducible`].
pub const IRREDUCIBILITY_BOUND: usize = 10;

/// A graph together with a vector on its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpec {
    graph: Graph,
    vector: Vec<Scalar>,
    subset: Option<VertexSet>,
}

impl PairSpec {
    pub fn from_subset(graph: Graph, subset: VertexSet) -> Result<Self> {
        graph.check_set(&subset)?;
        Ok(PairSpec { vector: subset.characteristic_vector(), graph, subset: Some(subset) })
    }

    pub fn from_vector(graph: Graph, vector: Vec<Scalar>) -> Result<Self> {
        if vector.len() != graph.order() {
            return Err(Error::DimensionMismatch { expected: graph.order(), found: vector.len() });
        }
        Ok(PairSpec { graph, vector, subset: None })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vector(&self) -> &[Scalar] {
        &self.vector
    }

    /// The subset when the pair was built from one.
    pub fn subset(&self) -> Option<&VertexSet> {
        self.subset.as_ref()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// `v x v` matrix whose column `r` is `A^r z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix(Matrix);

impl WalkMatrix {
    /// Krylov matrix `(z, Az, ..., A^{n-1} z)` for any square `a`.
    pub fn krylov(a: &Matrix, z: &[Scalar]) -> WalkMatrix {
        WalkMatrix(krylov_columns(a, z, a.rows()))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

pub(crate) fn krylov_columns(a: &Matrix, z: &[Scalar], count: usize) -> Matrix {
    let mut cols = Vec::with_capacity(count);
    let mut cur = z.to_vec();
    for _ in 0..count {
        let next = a.mul_vec(&cur);
        cols.push(core::mem::replace(&mut cur, next));
    }
    Matrix::from_fn(z.len(), count, |i, j| cols[j][i].clone())
}

pub fn walk_matrix(p: &PairSpec) -> WalkMatrix {
    WalkMatrix::krylov(&p.graph.adjacency(), &p.vector)
}

pub fn is_controllable_rank(p: &PairSpec) -> bool {
    walk_matrix(p).matrix().rank() == p.order()
}

/// Coefficients of `y^T adj(tI - m) y` for a square matrix `m`.
///
/// By the matrix determinant lemma `y^T adj(M) y = det(M + y y^T) - det(M)`
/// for every square `M`, so the polynomial is sampled exactly at
/// `c = 0, ..., n-1` and interpolated.
pub fn resolvent_numerator(m: &Matrix, y: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = m.rows();
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    let outer = Matrix::from_fn(n, n, |i, j| &y[i] * &y[j]);
    let pts = (0..n as i64)
        .map(|c| {
            let cs = int(c);
            let shifted = m.shifted_negation(&cs);
            let bordered = &shifted + &outer;
            Ok((cs, bordered.det()? - shifted.det()?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&pts))
}

/// `phi_S(X, t) = z^T adj(tI - A) z`, the numerator of
/// `z^T (tI - A)^{-1} z = phi_S / phi`.
///
/// For a vector with fractional entries the result is scaled by `d^2`,
/// where `d` is the lcm of the entry denominators (pole structure is
/// unchanged); integral vectors are unscaled.
pub fn numerator_poly(p: &PairSpec) -> Result<IntPoly> {
    let d = p.vector.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ds = Scalar::from_integer(d);
    let scaled: Vec<Scalar> = p.vector.iter().map(|x| x * &ds).collect();
    let coeffs = resolvent_numerator(&p.graph.adjacency(), &scaled)?;
    algebra::rational_to_int_poly(&coeffs)
        .ok_or_else(|| Error::Inconsistency("numerator polynomial is not integral".into()))
}

/// Number of distinct poles of `phi_S / phi`.
pub fn pole_count(p: &PairSpec) -> Result<usize> {
    let phi = char_poly(&p.graph.adjacency())?;
    let num = numerator_poly(p)?;
    distinct_pole_count(&RationalFunction::new(num, phi)?)
}

pub fn is_controllable_poles(p: &PairSpec) -> Result<bool> {
    Ok(pole_count(p)? == p.order())
}

/// Vertex `u` is controllable iff `phi(X \ u)` and `phi(X)` are coprime.
pub fn is_vertex_controllable(g: &Graph, u: usize) -> Result<bool> {
    let deleted = g.delete_vertex(u)?;
    let phi = char_poly(&g.adjacency())?;
    let phi_u = char_poly(&deleted.adjacency())?;
    Ok(poly_gcd(&phi_u, &phi)?.is_constant())
}

/// Support size (the rank of `W`) and dual degree (support size - 1).
pub fn support_and_dual_degree(p: &PairSpec) -> (usize, isize) {
    let support = walk_matrix(p).matrix().rank();
    (support, support as isize - 1)
}

/// True iff the `v^2` matrices `A^i z z^T A^j` (`0 <= i, j < v`) are
/// linearly independent, i.e. a basis of all `v x v` matrices.
pub fn algebra_basis_check(p: &PairSpec) -> Result<bool> {
    algebra_basis_check_with_bound(p, ALGEBRA_BOUND)
}

pub fn algebra_basis_check_with_bound(p: &PairSpec, bound: usize) -> Result<bool> {
    let v = p.order();
    if v > bound {
        return Err(Error::TooLarge { size: v, bound });
    }
    let w = walk_matrix(p).into_matrix();
    let cols: Vec<Vec<Scalar>> = (0..v).map(|j| w.column(j)).collect();
    // row (i, j) of the stack is the flattened outer product of columns i and j
    let stacked = Matrix::from_fn(v * v, v * v, |r, c| {
        let (i, j) = (r / v, r % v);
        let (a, b) = (c / v, c % v);
        &cols[i][a] * &cols[j][b]
    });
    Ok(stacked.rank() == v * v)
}

/// Characterization verdicts carried by a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub rank: bool,
    pub poles: bool,
    /// Present only for singleton subsets.
    pub coprime: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControllabilityReport {
    pub order: usize,
    pub subset: Option<VertexSet>,
    pub rank: usize,
    /// Number of distinct poles of `phi_S / phi`; always equals `rank`.
    pub support_size: usize,
    pub dual_degree: isize,
    /// `None` for pairs built from a general vector.
    pub covering_radius: Option<Radius>,
    /// Whether `covering radius <= dual degree`; `None` when the subset is
    /// empty, the radius is infinite, or there is no subset.
    pub covering_bound_holds: Option<bool>,
    pub controllable: bool,
    pub verdicts: Verdicts,
    /// The zero vector: support 0, dual degree -1, never controllable.
    pub degenerate: bool,
    pub char_poly: IntPoly,
    pub numerator: IntPoly,
}

/// Runs every applicable characterization and checks that they agree.
pub fn full_report(p: &PairSpec) -> Result<ControllabilityReport> {
    let v = p.order();
    let adjacency = p.graph.adjacency();
    let rank = WalkMatrix::krylov(&adjacency, &p.vector).matrix().rank();
    let phi = char_poly(&adjacency)?;
    let numerator = numerator_poly(p)?;
    let poles = distinct_pole_count(&RationalFunction::new(numerator.clone(), phi.clone())?)?;
    if poles != rank {
        return Err(Error::Inconsistency(format!("walk matrix rank {rank} differs from pole count {poles}")));
    }
    let verdicts = Verdicts {
        rank: rank == v,
        poles: poles == v,
        coprime: match p.subset() {
            Some(s) if s.len() == 1 => Some(is_vertex_controllable(&p.graph, s.members()[0])?),
            _ => None,
        },
    };
    if verdicts.rank != verdicts.poles || verdicts.coprime.is_some_and(|c| c != verdicts.rank) {
        return Err(Error::Inconsistency(format!("characterizations disagree: {verdicts:?}")));
    }
    let dual_degree = rank as isize - 1;
    let covering_radius = p.subset().map(|s| p.graph.covering_radius(s)).transpose()?;
    let covering_bound_holds = match (p.subset(), covering_radius) {
        (Some(s), Some(Radius::Finite(r))) if !s.is_empty() => Some(r as isize <= dual_degree),
        _ => None,
    };
    Ok(ControllabilityReport {
        order: v,
        subset: p.subset.clone(),
        rank,
        support_size: poles,
        dual_degree,
        covering_radius,
        covering_bound_holds,
        controllable: verdicts.rank,
        verdicts,
        degenerate: p.vector.iter().all(Zero::is_zero),
        char_poly: phi,
        numerator,
    })
}

/// Returns `(phi(cone), t * phi(X) - phi_S(X))`, which must be equal.
pub fn cone_charpoly_identity(g: &Graph, s: &VertexSet) -> Result<(IntPoly, IntPoly)> {
    let cone = g.cone(s)?;
    let direct = char_poly(&cone.adjacency())?;
    let phi = char_poly(&g.adjacency())?;
    let phi_s = numerator_poly(&PairSpec::from_subset(g.clone(), s.clone())?)?;
    let formula = &phi.shift(1) - &phi_s;
    if direct != formula {
        return Err(Error::Inconsistency(format!(
            "cone characteristic polynomial {direct} differs from t*phi - phi_S = {formula}"
        )));
    }
    Ok((direct, formula))
}

/// Controllability of `(cone, {apex})`, checked against that of `(X, S)`.
pub fn cone_transfer_check(g: &Graph, s: &VertexSet) -> Result<bool> {
    let base = is_controllable_rank(&PairSpec::from_subset(g.clone(), s.clone())?);
    let cone = g.cone(s)?;
    let apex = VertexSet::singleton(cone.order(), 0)?;
    let lifted = is_controllable_rank(&PairSpec::from_subset(cone, apex)?);
    if base != lifted {
        return Err(Error::Inconsistency(format!("pair controllable = {base} but cone apex controllable = {lifted}")));
    }
    Ok(lifted)
}

pub fn is_charpoly_irreducible(g: &Graph) -> Result<bool> {
    is_charpoly_irreducible_with_bound(g, IRREDUCIBILITY_BOUND)
}

pub fn is_charpoly_irreducible_with_bound(g: &Graph, bound: usize) -> Result<bool> {
    if g.order() > bound {
        return Err(Error::TooLarge { size: g.order(), bound });
    }
    is_irreducible(&char_poly(&g.adjacency())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pair(g: Graph, members: &[usize]) -> PairSpec {
        let v = g.order();
        PairSpec::from_subset(g, VertexSet::new(v, members.iter().copied()).unwrap()).unwrap()
    }

    fn cols(w: &WalkMatrix) -> Vec<Vec<i64>> {
        let m = w.matrix();
        (0..m.cols()).map(|j| m.column(j).iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect()).collect()
    }

    #[test]
    fn walk_matrix_examples() {
        assert_eq!(cols(&walk_matrix(&pair(Graph::empty(1), &[0]))), vec![vec![1]]);
        assert_eq!(cols(&walk_matrix(&pair(Graph::path(3), &[0]))), vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(
            cols(&walk_matrix(&pair(Graph::path(3), &[0, 1, 2]))),
            vec![vec![1, 1, 1], vec![1, 2, 1], vec![2, 2, 2]]
        );
    }

    #[test]
    fn rank_characterization() {
        for n in 1..=8 {
            assert!(is_controllable_rank(&pair(Graph::path(n), &[0])), "P_{n}");
        }
        for mask in 0..16 {
            let s = VertexSet::from_mask(4, mask);
            let p = PairSpec::from_subset(Graph::cycle(4), s).unwrap();
            assert!(!is_controllable_rank(&p));
        }
        assert!(!is_controllable_rank(&pair(Graph::complete(2), &[0, 1])));
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(numerator_poly(&pair(Graph::path(3), &[0])).unwrap(), IntPoly::from_i64s(&[-1, 0, 1]));
        assert!(numerator_poly(&pair(Graph::path(3), &[])).unwrap().is_zero());
        assert_eq!(numerator_poly(&pair(Graph::complete(2), &[0, 1])).unwrap(), IntPoly::from_i64s(&[2, 2]));
    }

    #[test]
    fn singleton_numerator_is_vertex_deleted_charpoly() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        for u in 0..5 {
            let num = numerator_poly(&pair(g.clone(), &[u])).unwrap();
            let del = char_poly(&g.delete_vertex(u).unwrap().adjacency()).unwrap();
            assert_eq!(num, del, "vertex {u}");
        }
    }

    #[test]
    fn pole_characterization() {
        assert!(is_controllable_poles(&pair(Graph::path(3), &[0])).unwrap());
        assert!(!is_controllable_poles(&pair(Graph::cycle(4), &[0])).unwrap());
        assert!(!is_controllable_poles(&pair(Graph::complete(2), &[0, 1])).unwrap());
    }

    #[test]
    fn vertex_coprimality() {
        for n in 1..=20 {
            assert!(is_vertex_controllable(&Graph::path(n), 0).unwrap(), "P_{n}");
        }
        assert!(!is_vertex_controllable(&Graph::path(3), 1).unwrap());
        for u in 0..4 {
            assert!(!is_vertex_controllable(&Graph::cycle(4), u).unwrap());
        }
        assert!(is_vertex_controllable(&Graph::path(3), 3).is_err());
    }

    #[test]
    fn support_examples() {
        for n in 1..=7 {
            assert_eq!(support_and_dual_degree(&pair(Graph::path(n), &[0])), (n, n as isize - 1));
        }
        assert_eq!(support_and_dual_degree(&pair(Graph::path(3), &[0, 1, 2])), (2, 1));
        assert_eq!(support_and_dual_degree(&pair(Graph::path(3), &[])), (0, -1));
    }

    #[test]
    fn algebra_basis_examples() {
        assert!(algebra_basis_check(&pair(Graph::path(3), &[0])).unwrap());
        assert!(!algebra_basis_check(&pair(Graph::complete(2), &[0, 1])).unwrap());
        assert!(algebra_basis_check(&pair(Graph::empty(1), &[0])).unwrap());
        assert!(matches!(algebra_basis_check(&pair(Graph::path(8), &[0])), Err(Error::TooLarge { size: 8, bound: 7 })));
    }

    #[test]
    fn report_examples() {
        let r = full_report(&pair(Graph::path(4), &[0])).unwrap();
        assert!(r.controllable);
        assert_eq!(r.dual_degree, 3);
        assert_eq!(r.covering_radius, Some(Radius::Finite(3)));
        assert_eq!(r.verdicts.coprime, Some(true));
        assert_eq!(r.covering_bound_holds, Some(true));

        let r = full_report(&pair(Graph::cycle(4), &[0, 1])).unwrap();
        assert!(!r.controllable);
        assert_eq!(r.verdicts.coprime, None);

        let r = full_report(&pair(Graph::empty(1), &[0])).unwrap();
        assert!(r.controllable);
        assert_eq!(r.covering_radius, Some(Radius::Finite(0)));

        let r = full_report(&pair(Graph::path(3), &[])).unwrap();
        assert!(r.degenerate && !r.controllable);
        assert_eq!((r.support_size, r.dual_degree), (0, -1));
        assert_eq!(r.covering_bound_holds, None);
    }

    #[test]
    fn rational_vector_pairs() {
        let half = Scalar::new(1.into(), 2.into());
        let p = PairSpec::from_vector(Graph::path(3), vec![half.clone(), int(0), int(0)]).unwrap();
        assert!(is_controllable_rank(&p));
        assert!(is_controllable_poles(&p).unwrap());
        // (2y)^T adj (2y) for y = e_0 / 2
        assert_eq!(numerator_poly(&p).unwrap(), IntPoly::from_i64s(&[-1, 0, 1]));
        let r = full_report(&p).unwrap();
        assert_eq!(r.covering_radius, None);
        assert!(PairSpec::from_vector(Graph::path(3), vec![half]).is_err());
    }

    #[test]
    fn cone_identity_examples() {
        let (a, b) = cone_charpoly_identity(&Graph::empty(1), &VertexSet::full(1)).unwrap();
        assert_eq!((a.clone(), b), (IntPoly::from_i64s(&[-1, 0, 1]), a));
        let (a, _) = cone_charpoly_identity(&Graph::complete(2), &VertexSet::full(2)).unwrap();
        assert_eq!(a, IntPoly::from_i64s(&[-2, -3, 0, 1]));
        let g = Graph::path(4);
        let (a, _) = cone_charpoly_identity(&g, &VertexSet::empty(4)).unwrap();
        assert_eq!(a, char_poly(&g.adjacency()).unwrap().shift(1));
    }

    #[test]
    fn cone_transfer_examples() {
        assert!(cone_transfer_check(&Graph::path(3), &VertexSet::singleton(3, 0).unwrap()).unwrap());
        assert!(!cone_transfer_check(&Graph::cycle(4), &VertexSet::singleton(4, 0).unwrap()).unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!is_charpoly_irreducible(&Graph::path(2)).unwrap());
        assert!(!is_charpoly_irreducible(&Graph::path(3)).unwrap());
        assert!(is_charpoly_irreducible(&Graph::empty(1)).unwrap());
        assert!(is_charpoly_irreducible(&Graph::path(11)).is_err());
    }
}
