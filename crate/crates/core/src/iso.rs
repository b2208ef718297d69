//! Isomorphism of pairs, the rational orthogonal matrix `Q = W_T W_S^{-1}`
//! relating isomorphic controllable pairs, and canonical vertex orderings of
//! controllable graphs.
//!
//! Pairs `(A, y)` and `(B, z)` are isomorphic when some orthogonal `L` has
//! `L A L^T = B` and `L y = z`. That happens exactly when `A` and `B` are
//! cospectral and `y^T (tI - A)^{-1} y = z^T (tI - B)^{-1} z`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{char_poly, Matrix, Scalar};
use crate::control::{is_controllable_rank, resolvent_numerator, walk_matrix, PairSpec, WalkMatrix};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

fn same_order(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: a, found: b })
    }
}

/// Decides isomorphism by comparing characteristic polynomials and the
/// numerators of the two resolvent forms.
pub fn pairs_isomorphic(p1: &PairSpec, p2: &PairSpec) -> Result<bool> {
    same_order(p1.order(), p2.order())?;
    let a = p1.graph().adjacency();
    let b = p2.graph().adjacency();
    if char_poly(&a)? != char_poly(&b)? {
        return Ok(false);
    }
    Ok(resolvent_numerator(&a, p1.vector())? == resolvent_numerator(&b, p2.vector())?)
}

/// Second route for subsets: `X` cospectral to `Y` and the cone over `S`
/// cospectral to the cone over `T`.
pub fn pairs_isomorphic_by_cone(g1: &Graph, s1: &VertexSet, g2: &Graph, s2: &VertexSet) -> Result<bool> {
    same_order(g1.order(), g2.order())?;
    if char_poly(&g1.adjacency())? != char_poly(&g2.adjacency())? {
        return Ok(false);
    }
    Ok(char_poly(&g1.cone(s1)?.adjacency())? == char_poly(&g2.cone(s2)?.adjacency())?)
}

/// `Q = W_T W_S^{-1}` for isomorphic controllable pairs, with
/// `Q^T Q = I`, `Q A Q^T = B` and `Q y = z` verified exactly.
pub fn q_matrix(p1: &PairSpec, p2: &PairSpec) -> Result<Matrix> {
    same_order(p1.order(), p2.order())?;
    if !is_controllable_rank(p1) || !is_controllable_rank(p2) {
        return Err(Error::NotControllable);
    }
    if !pairs_isomorphic(p1, p2)? {
        return Err(Error::NotIsomorphic);
    }
    let ws = walk_matrix(p1).into_matrix();
    let wt = walk_matrix(p2).into_matrix();
    let q = &wt * &ws.inverse()?;

    let n = p1.order();
    let qt = q.transpose();
    if &qt * &q != Matrix::identity(n) {
        return Err(Error::Inconsistency("Q is not orthogonal".into()));
    }
    let a = p1.graph().adjacency();
    let b = p2.graph().adjacency();
    if &(&q * &a) * &qt != b {
        return Err(Error::Inconsistency("Q A Q^T differs from B".into()));
    }
    if q.mul_vec(p1.vector()) != p2.vector() {
        return Err(Error::Inconsistency("Q y differs from z".into()));
    }
    Ok(q)
}

/// For `(X, S)` and `(X, T)` isomorphic and controllable: `Q` commutes with
/// `A`, is symmetric, and squares to the identity.
pub fn q_involution_check(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    let p1 = PairSpec::from_subset(g.clone(), s.clone())?;
    let p2 = PairSpec::from_subset(g.clone(), t.clone())?;
    let q = q_matrix(&p1, &p2)?;
    let a = g.adjacency();
    Ok(&q * &a == &a * &q && q.is_symmetric() && &q * &q == Matrix::identity(g.order()))
}

/// True iff `q` swaps `e_u` and `e_w` and is otherwise zero on rows and
/// columns `u`, `w`: a `2 x 2` swap block once `u, w` are ordered first.
pub fn has_swap_block(q: &Matrix, u: usize, w: usize) -> bool {
    let n = q.rows();
    (0..n).all(|k| {
        let expect = |i: usize, j: usize| {
            if (i == u && j == w) || (i == w && j == u) {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        };
        q[(u, k)] == expect(u, k) && q[(w, k)] == expect(w, k) && q[(k, u)] == expect(k, u) && q[(k, w)] == expect(k, w)
    })
}

/// Vertex order from sorting the rows of `W_V` lexicographically (column 0
/// first). Entry `k` is the original vertex placed at position `k`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let w = walk_matrix(&PairSpec::from_subset(g.clone(), VertexSet::full(g.order()))?).into_matrix();
    if w.rank() != g.order() {
        return Err(Error::NotControllable);
    }
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by(|&i, &j| w.row(i).cmp(w.row(j)));
    Ok(order)
}

/// Walk matrix of `(X, V)` with its rows in canonical order.
pub fn canonical_walk_matrix(g: &Graph) -> Result<Matrix> {
    let order = canonical_order(g)?;
    let w = walk_matrix(&PairSpec::from_subset(g.clone(), VertexSet::full(g.order()))?).into_matrix();
    Ok(Matrix::from_fn(w.rows(), w.cols(), |i, j| w[(order[i], j)].clone()))
}

/// The controllable graph relabelled into canonical order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = alloc::vec![0; order.len()];
    for (pos, &u) in order.iter().enumerate() {
        perm[u] = pos;
    }
    Ok(g.permute(&perm))
}

/// Pairs `u < w` with `phi(X \ u) = phi(X \ w)`.
pub fn cospectral_vertices(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let polys = (0..g.order()).map(|u| char_poly(&g.delete_vertex(u)?.adjacency())).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for w in 0..g.order() {
        for u in 0..w {
            if polys[u] == polys[w] {
                out.push((u, w));
            }
        }
    }
    Ok(out)
}

/// Structure of the cyclic modules generated by `e_u + e_w` and `e_u - e_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleSplit {
    /// Every `A^i (e_u + e_w)` is orthogonal to every `A^j (e_u - e_w)`.
    pub orthogonal: bool,
    /// The module generated by `{e_u, e_w}` is the whole space.
    pub generates_full_space: bool,
    /// When the module is full: the two cyclic modules have dimensions
    /// summing to `v`.
    pub direct_sum: Option<bool>,
}

pub fn module_split(g: &Graph, u: usize, w: usize) -> Result<ModuleSplit> {
    let n = g.order();
    for x in [u, w] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, order: n });
        }
    }
    if u == w {
        return Err(Error::RepeatedVertex(u));
    }
    if char_poly(&g.delete_vertex(u)?.adjacency())? != char_poly(&g.delete_vertex(w)?.adjacency())? {
        return Err(Error::VerticesNotCospectral(u, w));
    }
    let a = g.adjacency();
    let unit = |x: usize| (0..n).map(|k| if k == x { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
    let (eu, ew) = (unit(u), unit(w));
    let plus: Vec<Scalar> = eu.iter().zip(&ew).map(|(a, b)| a + b).collect();
    let minus: Vec<Scalar> = eu.iter().zip(&ew).map(|(a, b)| a - b).collect();
    let kp = WalkMatrix::krylov(&a, &plus).into_matrix();
    let km = WalkMatrix::krylov(&a, &minus).into_matrix();
    let orthogonal = (&kp.transpose() * &km).entries().iter().all(Zero::is_zero);

    let ku = WalkMatrix::krylov(&a, &eu).into_matrix();
    let kw = WalkMatrix::krylov(&a, &ew).into_matrix();
    let both: Vec<Vec<Scalar>> = (0..n).flat_map(|j| [ku.column(j), kw.column(j)]).collect();
    let generates_full_space = Matrix::from_columns(n, &both)?.rank() == n;
    let direct_sum = generates_full_space.then(|| kp.rank() + km.rank() == n);
    Ok(ModuleSplit { orthogonal, generates_full_space, direct_sum })
}

/// Orthogonality of the two modules, plus the direct-sum decomposition when
/// `{e_u, e_w}` generates everything.
pub fn module_orthogonality_check(g: &Graph, u: usize, w: usize) -> Result<bool> {
    let split = module_split(g, u, w)?;
    Ok(split.orthogonal && split.direct_sum.unwrap_or(true))
}

/// For cospectral graphs: whether `1^T (tI - A)^{-1} 1` agrees for both.
/// The answer is cross-checked against direct cospectrality of the
/// complements.
pub fn johnson_newman_check(g1: &Graph, g2: &Graph) -> Result<bool> {
    same_order(g1.order(), g2.order())?;
    let (a, b) = (g1.adjacency(), g2.adjacency());
    if char_poly(&a)? != char_poly(&b)? {
        return Err(Error::NotCospectral);
    }
    let ones = VertexSet::full(g1.order()).characteristic_vector();
    let walks_equal = resolvent_numerator(&a, &ones)? == resolvent_numerator(&b, &ones)?;
    let complements_cospectral = char_poly(&g1.complement().adjacency())? == char_poly(&g2.complement().adjacency())?;
    if walks_equal != complements_cospectral {
        return Err(Error::Inconsistency(format!(
            "generating functions equal = {walks_equal}, complements cospectral = {complements_cospectral}"
        )));
    }
    Ok(walks_equal)
}
