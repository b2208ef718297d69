//! Simple undirected graphs on vertices `0..v`, vertex subsets, and the
//! constructions used by the controllability theory.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{int, Matrix, Scalar};
use crate::{Error, Result};

/// Default cap on the vertex count for exhaustive automorphism search.
pub const AUTOMORPHISM_BOUND: usize = 10;

/// Undirected simple graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { order, adj: vec![false; order * order] }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints
    /// are rejected; repeated edges collapse.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(order);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for i in 0..order {
            for j in 0..i {
                g.set(i, j, true);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Self {
        let mut g = Self::empty(order);
        for i in 1..order {
            g.set(i - 1, i, true);
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = Self::path(order);
        if order > 2 {
            g.set(0, order - 1, true);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges().count()
    }

    fn set(&mut self, i: usize, j: usize, on: bool) {
        self.adj[i * self.order + j] = on;
        self.adj[j * self.order + i] = on;
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, order: self.order })
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::RepeatedVertex(i));
        }
        self.set(i, j, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        self.set(i, j, false);
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.order && j < self.order && self.adj[i * self.order + j]
    }

    /// Edges as pairs `(i, j)` with `i < j`, in column-major upper-triangle
    /// order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.order).flat_map(move |j| (0..j).filter(move |&i| self.has_edge(i, j)).map(move |i| (i, j)))
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&w| self.has_edge(u, w))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn adjacency(&self) -> Matrix {
        Matrix::from_fn(self.order, self.order, |i, j| if self.has_edge(i, j) { Scalar::one() } else { Scalar::zero() })
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> Matrix {
        Matrix::from_fn(self.order, self.order, |i, j| {
            if i == j {
                int(self.degree(i) as i64)
            } else if self.has_edge(i, j) {
                int(-1)
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.order);
        for i in 0..self.order {
            for j in 0..i {
                g.set(i, j, !self.has_edge(i, j));
            }
        }
        g
    }

    /// Cone over `s`: a new apex labelled 0 joined to each vertex of `s`;
    /// old vertex `i` becomes `i + 1`.
    pub fn cone(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let mut g = Self::empty(self.order + 1);
        for (i, j) in self.edges() {
            g.set(i + 1, j + 1, true);
        }
        for &u in s.members() {
            g.set(0, u + 1, true);
        }
        Ok(g)
    }

    /// Attaches a path on `k` vertices, one end joined to every vertex of
    /// `s`. The path occupies labels `0..k` with the far end at 0 and the
    /// end adjacent to `s` at `k - 1`; old vertex `i` becomes `i + k`.
    /// Returns the graph and the far end-vertex (always 0).
    pub fn path_extension(&self, s: &VertexSet, k: usize) -> Result<(Graph, usize)> {
        if k == 0 {
            return Err(Error::EmptyPath);
        }
        self.check_set(s)?;
        let mut g = Self::empty(self.order + k);
        for (i, j) in self.edges() {
            g.set(i + k, j + k, true);
        }
        for i in 1..k {
            g.set(i - 1, i, true);
        }
        for &u in s.members() {
            g.set(k - 1, u + k, true);
        }
        Ok((g, 0))
    }

    /// Deletes `u`, shifting later labels down by one.
    pub fn delete_vertex(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        let keep: Vec<usize> = (0..self.order).filter(|&w| w != u).collect();
        Ok(self.induced(&keep))
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Self::empty(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().take(a) {
                if self.has_edge(i, j) {
                    g.set(a, b, true);
                }
            }
        }
        g
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Self::empty(self.order);
        for (i, j) in self.edges() {
            g.set(perm[i], perm[j], true);
        }
        g
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.order() != self.order {
            return Err(Error::DimensionMismatch { expected: self.order, found: s.order() });
        }
        Ok(())
    }

    /// All automorphisms as vertex maps `perm[i] = image of i`, found by
    /// backtracking over degree-compatible assignments. The identity is first.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        self.automorphisms_with_bound(AUTOMORPHISM_BOUND)
    }

    pub fn automorphisms_with_bound(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        if self.order > bound {
            return Err(Error::TooLarge { size: self.order, bound });
        }
        let degrees: Vec<usize> = (0..self.order).map(|u| self.degree(u)).collect();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; self.order];
        let mut used = vec![false; self.order];
        self.extend_automorphism(0, &degrees, &mut perm, &mut used, &mut out);
        Ok(out)
    }

    fn extend_automorphism(
        &self,
        next: usize,
        degrees: &[usize],
        perm: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if next == self.order {
            out.push(perm.to_vec());
            return;
        }
        for image in 0..self.order {
            if used[image] || degrees[image] != degrees[next] {
                continue;
            }
            let consistent = (0..next).all(|w| self.has_edge(next, w) == self.has_edge(image, perm[w]));
            if !consistent {
                continue;
            }
            perm[next] = image;
            used[image] = true;
            self.extend_automorphism(next + 1, degrees, perm, used, out);
            used[image] = false;
        }
        perm[next] = usize::MAX;
    }

    pub fn is_vertex_transitive(&self) -> Result<bool> {
        if self.order == 0 {
            return Ok(true);
        }
        let auts = self.automorphisms()?;
        let mut reached = vec![false; self.order];
        for p in &auts {
            reached[p[0]] = true;
        }
        Ok(reached.iter().all(|&r| r))
    }

    /// BFS distance from the nearest vertex of `sources`; `None` if unreachable.
    pub fn distances_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Least `r` such that every vertex lies within distance `r` of `s`.
    pub fn covering_radius(&self, s: &VertexSet) -> Result<Radius> {
        self.check_set(s)?;
        if s.is_empty() {
            return Ok(Radius::Infinite);
        }
        let dist = self.distances_from(s.members());
        Ok(dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))).map_or(Radius::Infinite, Radius::Finite))
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.distances_from(&[0]).iter().all(Option::is_some)
    }

    /// Largest distance between two vertices, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.order).try_fold(0, |acc, u| self.distances_from(&[u]).iter().try_fold(acc, |a, d| d.map(|d| a.max(d))))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Covering radius; `Infinite` when some vertex cannot reach the subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Radius {
    Finite(usize),
    Infinite,
}

impl Radius {
    pub fn finite(self) -> Option<usize> {
        match self {
            Radius::Finite(r) => Some(r),
            Radius::Infinite => None,
        }
    }
}

/// Sorted, duplicate-free subset of `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    order: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&u| u >= order) {
            return Err(Error::VertexOutOfRange { vertex: bad, order });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet { order, members })
    }

    pub fn empty(order: usize) -> Self {
        VertexSet { order, members: Vec::new() }
    }

    pub fn full(order: usize) -> Self {
        VertexSet { order, members: (0..order).collect() }
    }

    pub fn singleton(order: usize, u: usize) -> Result<Self> {
        Self::new(order, [u])
    }

    /// Subset whose members are the set bits of `mask`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        VertexSet { order, members: (0..order.min(64)).filter(|&u| mask >> u & 1 == 1).collect() }
    }

    /// Every subset of `0..order` (including the empty set), by bitmask.
    pub fn all_subsets(order: usize) -> impl Iterator<Item = VertexSet> {
        assert!(order < 64, "subset enumeration needs order < 64");
        (0..1u64 << order).map(move |m| VertexSet::from_mask(order, m))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.members.binary_search(&u).is_ok()
    }

    pub fn characteristic_vector(&self) -> Vec<Scalar> {
        (0..self.order).map(|u| if self.contains(u) { Scalar::one() } else { Scalar::zero() }).collect()
    }

    /// Image of the set under `perm`.
    pub fn map(&self, perm: &[usize]) -> VertexSet {
        let mut members: Vec<usize> = self.members.iter().map(|&u| perm[u]).collect();
        members.sort_unstable();
        VertexSet { order: self.order, members }
    }
}
