#![allow(dead_code)]

use ctrlgraph_core::{Graph, Scalar};
use proptest::prelude::*;

pub fn int(x: i64) -> Scalar {
    Scalar::from_integer(x.into())
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

/// Every labelled graph on `n` vertices (edge masks over i < j).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e)).unwrap()
    })
}

/// One representative per isomorphism class, found by brute-force minimum
/// edge mask over all relabellings. Fine up to five vertices.
pub fn unlabelled_graphs(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let key = |g: &Graph| {
        perms
            .iter()
            .map(|p| {
                let h = g.permute(p);
                let mut e: Vec<(usize, usize)> = h.edges().collect();
                e.sort();
                e
            })
            .min()
            .unwrap()
    };
    let mut seen = std::collections::BTreeSet::new();
    labelled_graphs(n).filter(|g| seen.insert(key(g))).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Random labelled graphs on `n` vertices with `(X, V)` controllable.
pub fn random_controllable_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    use ctrlgraph_core::control::is_controllable_rank;
    use ctrlgraph_core::{PairSpec, VertexSet};
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        let edges: Vec<_> = pairs.filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        if is_controllable_rank(&PairSpec::from_subset(g.clone(), VertexSet::full(n)).unwrap()) {
            out.push(g);
        }
    }
    out
}

pub fn random_permutation(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
