//! Leaf structure of trees and the two reductions used by the tree counter.
//!
//! Reductions renumber surviving vertices contiguously in increasing old-id
//! order and hand back the old-to-new map so callers can follow vertices
//! through a chain of reductions.

use super::Graph;
use crate::error::{Error, Result};

/// Result of deleting vertices: the new graph plus `map[old] = Some(new)` for
/// survivors and `None` for deleted vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub graph: Graph,
    pub map: Vec<Option<usize>>,
}

/// Result of identifying a vertex set into one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bouquet {
    pub graph: Graph,
    /// New id of the identified vertex.
    pub merged: usize,
    /// Old-to-new map; every member of the identified set maps to `merged`.
    pub map: Vec<usize>,
}

/// Outcome of [`reduce_bouquet_minus2`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinusTwo {
    /// `y` has no non-leaf neighbor, so the tree is a star centered at `y`
    /// and there is nothing to bouquet.
    Star,
    Reduced(Reduced),
}

/// Degree-1 neighbors of `u`, ascending.
pub fn ones(g: &Graph, u: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    Ok(g.neighbors(u).iter().copied().filter(|&v| g.is_leaf(v)).collect())
}

/// Vertices with at least one degree-1 neighbor, ascending.
pub fn support_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&u| g.neighbors(u).iter().any(|&v| g.is_leaf(v)))
        .collect()
}

/// Vertices of a tree adjacent to exactly one non-leaf vertex and to at least
/// one leaf, ascending.
pub fn quasi_star_vertices(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree()?;
    Ok((0..t.order()).filter(|&v| is_quasi_star(t, v)).collect())
}

pub(crate) fn is_quasi_star(t: &Graph, v: usize) -> bool {
    let mut leaves = 0;
    let mut internal = 0;
    for &w in t.neighbors(v) {
        if t.is_leaf(w) {
            leaves += 1;
        } else {
            internal += 1;
        }
    }
    leaves > 0 && internal == 1
}

fn require_support(t: &Graph, y: usize) -> Result<Vec<usize>> {
    t.require_tree()?;
    let leaves = ones(t, y)?;
    if leaves.is_empty() {
        return Err(Error::arg(format!("vertex {y} is not a support vertex")));
    }
    Ok(leaves)
}

/// `T_y^{-1}`: the tree with every leaf hanging from support vertex `y`
/// removed.
pub fn reduce_minus1(t: &Graph, y: usize) -> Result<Reduced> {
    let leaves = require_support(t, y)?;
    Ok(strip_leaves(t, &leaves))
}

pub(crate) fn strip_leaves(t: &Graph, leaves: &[usize]) -> Reduced {
    let mut keep = vec![true; t.order()];
    for &v in leaves {
        keep[v] = false;
    }
    let (graph, map) = t.induced(&keep);
    Reduced { graph, map }
}

/// Identifies the vertices of `ws` into one vertex `w`. The neighborhood of
/// `w` is the union of their neighborhoods; parallel edges collapse. `ws` must
/// be nonempty and independent (an edge inside `ws` would become a loop).
/// `w` takes the place of the smallest member of `ws`.
pub fn bouquet(g: &Graph, ws: &[usize]) -> Result<Bouquet> {
    let mut ws = ws.to_vec();
    ws.sort_unstable();
    ws.dedup();
    let &first = ws
        .first()
        .ok_or_else(|| Error::arg("bouquet needs at least one vertex"))?;
    for &w in &ws {
        g.check_vertex(w)?;
    }
    for (i, &a) in ws.iter().enumerate() {
        if let Some(&b) = ws[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(Error::arg(format!("bouquet vertices {a} and {b} are adjacent")));
        }
    }

    let n = g.order();
    let mut in_ws = vec![false; n];
    for &w in &ws {
        in_ws[w] = true;
    }
    let mut map = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        if in_ws[v] && v != first {
            continue;
        }
        map[v] = next;
        next += 1;
    }
    let merged = map[first];
    for &w in &ws {
        map[w] = merged;
    }

    // Only the merged vertex and its neighbors see more than one old list.
    let mut offsets = Vec::with_capacity(next + 1);
    offsets.push(0);
    let mut targets = Vec::with_capacity(2 * g.edge_count());
    for u in (0..n).filter(|&u| !in_ws[u] || u == first) {
        let from = targets.len();
        if u == first {
            for &w in &ws {
                targets.extend(g.neighbors(w).iter().map(|&v| map[v]));
            }
        } else {
            targets.extend(g.neighbors(u).iter().map(|&v| map[v]));
        }
        let row = &mut targets[from..];
        row.sort_unstable();
        let unique = dedup_sorted(row);
        targets.truncate(from + unique);
        offsets.push(targets.len());
    }
    Ok(Bouquet {
        graph: Graph::from_csr_unchecked(offsets, targets),
        merged,
        map,
    })
}

/// Moves the distinct values of a sorted slice to its front; returns how many.
fn dedup_sorted(row: &mut [usize]) -> usize {
    let mut len = 0;
    for i in 0..row.len() {
        if len == 0 || row[i] != row[len - 1] {
            row[len] = row[i];
            len += 1;
        }
    }
    len
}

/// `T'_y^{-2}`: identify the non-leaf neighbors of support vertex `y` into a
/// single vertex, then delete `y` together with its leaves. Returns
/// [`MinusTwo::Star`] when `y` has no non-leaf neighbor.
pub fn reduce_bouquet_minus2(t: &Graph, y: usize) -> Result<MinusTwo> {
    let leaves = require_support(t, y)?;
    bouquet_and_strip(t, y, &leaves)
}

pub(crate) fn bouquet_and_strip(t: &Graph, y: usize, leaves: &[usize]) -> Result<MinusTwo> {
    let internal: Vec<usize> = t.neighbors(y).iter().copied().filter(|&v| !t.is_leaf(v)).collect();
    if internal.is_empty() {
        return Ok(MinusTwo::Star);
    }

    if let [_] = internal[..] {
        let mut keep = vec![true; t.order()];
        keep[y] = false;
        for &v in leaves {
            keep[v] = false;
        }
        let (graph, map) = t.induced(&keep);
        return Ok(MinusTwo::Reduced(Reduced { graph, map }));
    }
    let b = bouquet(t, &internal)?;
    let mut keep = vec![true; b.graph.order()];
    keep[b.map[y]] = false;
    for &v in leaves {
        keep[b.map[v]] = false;
    }
    let (graph, inner) = b.graph.induced(&keep);
    let map = b.map.iter().map(|&mid| inner[mid]).collect();
    debug_assert!(graph.is_tree());
    Ok(MinusTwo::Reduced(Reduced { graph, map }))
}
