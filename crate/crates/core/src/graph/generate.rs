use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

fn require_positive(value: usize, what: &str) -> Result<()> {
    if value == 0 {
        Err(Error::arg(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    require_positive(n, "path order")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,r}` with center 0 and leaves `1..=r`.
pub fn gen_star(r: usize) -> Result<Graph> {
    require_positive(r, "star leaf count")?;
    let edges: Vec<_> = (1..=r).map(|i| (0, i)).collect();
    Graph::from_edges(r + 1, &edges)
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    require_positive(n, "complete graph order")?;
    let adjacency = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
    Ok(Graph::from_sorted_unchecked(adjacency))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg("cycle order must be at least 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The corona `G ∘ K̄_r`: every vertex of `g` gets `r` new pendant leaves.
/// Original vertices keep their ids; the leaves of `v` are
/// `n + v*r .. n + (v+1)*r`.
pub fn corona(g: &Graph, r: usize) -> Result<Graph> {
    require_positive(r, "corona leaf count")?;
    let n = g.order();
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(n * (1 + r));
    for v in 0..n {
        let mut nbrs = g.neighbors(v).to_vec();
        nbrs.extend(n + v * r..n + (v + 1) * r);
        adjacency.push(nbrs);
    }
    for v in 0..n {
        adjacency.extend(std::iter::repeat_n(vec![v], r));
    }
    Ok(Graph::from_sorted_unchecked(adjacency))
}

/// Uniformly random labeled tree on `n` vertices, decoded from a Prüfer
/// sequence drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    require_positive(n, "tree order")?;
    if n <= 2 {
        return gen_path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, &prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut remaining = vec![1usize; n];
    for &c in code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf available");
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Random connected graph: a random Prüfer spanning tree plus each remaining
/// vertex pair independently with probability `extra_edge_prob`.
pub fn random_connected(n: usize, extra_edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&extra_edge_prob) {
        return Err(Error::arg("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_with(n, &mut rng)?;
    let mut edges: Vec<_> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
