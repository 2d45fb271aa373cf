//! Simple undirected graphs with dense `0..n` vertex ids.
//!
//! A [`Graph`] is immutable once built. Every constructor goes through
//! [`Graph::from_adjacency`], which checks symmetry, range and simplicity, so
//! any value of this type satisfies those invariants.

mod canon;
mod generate;
mod parse;
mod structure;

pub(crate) use canon::tree_code_unchecked;
pub use canon::{canonical_code, TreeCode};
pub use generate::{
    corona, gen_complete, gen_cycle, gen_path, gen_star, random_connected, random_tree, random_tree_with,
};
pub use parse::parse_edge_list;
pub use structure::{
    bouquet, ones, quasi_star_vertices, reduce_bouquet_minus2, reduce_minus1, support_vertices, Bouquet, MinusTwo,
    Reduced,
};
pub(crate) use structure::{bouquet_and_strip, strip_leaves};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Compressed adjacency: the sorted neighbors of `v` are
/// `targets[offsets[v]..offsets[v + 1]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects `n = 0`, self-loops,
    /// out-of-range endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::arg("graph must have at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Self::from_adjacency(adjacency)
    }

    /// Builds a graph from neighbor lists, sorting them and validating the
    /// invariants.
    pub fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::arg("graph must have at least one vertex"));
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            for w in nbrs.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::arg(format!("duplicate edge {{{u}, {}}}", w[0])));
                }
            }
            if let Some(&v) = nbrs.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if nbrs.binary_search(&u).is_ok() {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
        }
        for (u, nbrs) in adjacency.iter().enumerate() {
            for &v in nbrs {
                if adjacency[v].binary_search(&u).is_err() {
                    return Err(Error::arg(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(adjacency))
    }

    /// Internal constructor for adjacency lists that are already sorted,
    /// symmetric and simple.
    pub(crate) fn from_sorted_unchecked(adjacency: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(adjacency.iter().map(Vec::len).sum());
        for nbrs in adjacency {
            targets.extend(nbrs);
            offsets.push(targets.len());
        }
        Self::from_csr_unchecked(offsets, targets)
    }

    pub(crate) fn from_csr_unchecked(offsets: Vec<usize>, targets: Vec<usize>) -> Self {
        let g = Graph { offsets, targets };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.degrees().any(|d| d == 0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// True when some vertex is adjacent to every other vertex (covers `K_1`
    /// and `K_2`). Only meaningful as a star test when the graph is a tree.
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n == 1 || self.degrees().any(|d| d == n - 1)
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::arg("relabeling is not a permutation of the vertex set"));
        }
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            adjacency[perm[u]] = self.neighbors(u).iter().map(|&v| perm[v]).collect();
            adjacency[perm[u]].sort_unstable();
        }
        Ok(Self::from_sorted_unchecked(adjacency))
    }

    /// Keeps the vertices with `keep[v] == true`, renumbered in increasing
    /// old-id order. Returns the graph and the old-to-new map.
    pub(crate) fn induced(&self, keep: &[bool]) -> (Self, Vec<Option<usize>>) {
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if keep[v] {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut offsets = Vec::with_capacity(next + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(self.targets.len());
        for v in (0..self.order()).filter(|&v| keep[v]) {
            targets.extend(self.neighbors(v).iter().filter_map(|&w| map[w]));
            offsets.push(targets.len());
        }
        (Self::from_csr_unchecked(offsets, targets), map)
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let n = self.order();
        self.offsets.first() == Some(&0)
            && self.offsets.last() == Some(&self.targets.len())
            && (0..n).all(|u| {
                let nbrs = self.neighbors(u);
                nbrs.windows(2).all(|w| w[0] < w[1])
                    && nbrs
                        .iter()
                        .all(|&v| v < n && v != u && self.neighbors(v).binary_search(&u).is_ok())
            })
    }

    /// Serializes to the edge-list text format: an `n m` header followed by
    /// one `u v` line per edge, each line newline-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
