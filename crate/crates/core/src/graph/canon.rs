//! AHU canonical codes for unrooted trees.
//!
//! The tree is rooted at its center (or at each of its two centers, keeping
//! the smaller code). Children are ordered by an isomorphism-invariant label
//! assigned level by level from the bottom, and the resulting ordered tree is
//! written as a balanced-parenthesis bit string: `1` opens a vertex, `0`
//! closes it.

use super::Graph;
use crate::error::Result;

/// Canonical byte encoding of an unrooted tree. Equal codes iff isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode(Vec<u8>);

impl TreeCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_code(t: &Graph) -> Result<TreeCode> {
    t.require_tree()?;
    Ok(tree_code_unchecked(t))
}

pub(crate) fn tree_code_unchecked(t: &Graph) -> TreeCode {
    SCRATCH.with(|scratch| {
        let scratch = &mut *scratch.borrow_mut();
        let mut bytes = (t.order() as u64).to_le_bytes().to_vec();
        let centers = centers(t, scratch);
        let mut best = rooted_bits(t, centers[0], scratch);
        if let Some(&other) = centers.get(1) {
            best = best.min(rooted_bits(t, other, scratch));
        }
        bytes.extend(best);
        TreeCode(bytes)
    })
}

/// Buffers reused across calls on the same thread.
#[derive(Default)]
struct Scratch {
    degree: Vec<u32>,
    layer: Vec<u32>,
    next: Vec<u32>,
    visited: Vec<bool>,
    depth: Vec<u32>,
    order: Vec<u32>,
    first_child: Vec<u32>,
    child_count: Vec<u32>,
    label: Vec<u32>,
    keys: Vec<u32>,
    spans: Vec<(u32, u32, u32)>,
    stack: Vec<(u32, u32)>,
}

thread_local! {
    static SCRATCH: std::cell::RefCell<Scratch> = std::cell::RefCell::default();
}

fn centers(t: &Graph, s: &mut Scratch) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    s.degree.clear();
    s.degree.extend((0..n).map(|v| t.degree(v) as u32));
    s.layer.clear();
    s.layer.extend((0..n as u32).filter(|&v| s.degree[v as usize] == 1));
    let mut remaining = n;
    while remaining > 2 {
        remaining -= s.layer.len();
        s.next.clear();
        for &leaf in &s.layer {
            for &w in t.neighbors(leaf as usize) {
                s.degree[w] -= 1;
                if s.degree[w] == 1 {
                    s.next.push(w as u32);
                }
            }
        }
        std::mem::swap(&mut s.layer, &mut s.next);
    }
    let mut out: Vec<usize> = s.layer.iter().map(|&v| v as usize).collect();
    out.sort_unstable();
    out
}

/// Packed parenthesis string of `t` rooted at `root`.
fn rooted_bits(t: &Graph, root: usize, s: &mut Scratch) -> Vec<u8> {
    let n = t.order();
    for buf in [&mut s.depth, &mut s.first_child, &mut s.child_count, &mut s.label] {
        buf.clear();
        buf.resize(n, 0);
    }
    s.visited.clear();
    s.visited.resize(n, false);

    // BFS lays out the children of each vertex contiguously in `order`.
    s.order.clear();
    s.order.push(root as u32);
    s.visited[root] = true;
    let mut head = 0;
    while head < s.order.len() {
        let u = s.order[head] as usize;
        let first = s.order.len();
        for &v in t.neighbors(u) {
            if !s.visited[v] {
                s.visited[v] = true;
                s.depth[v] = s.depth[u] + 1;
                s.order.push(v as u32);
            }
        }
        s.first_child[u] = first as u32;
        s.child_count[u] = (s.order.len() - first) as u32;
        head += 1;
    }

    // Label each level bottom-up by the sorted multiset of child labels, and
    // order every sibling group by label.
    let mut end = n;
    while end > 0 {
        let d = s.depth[s.order[end - 1] as usize];
        let mut start = end;
        while start > 0 && s.depth[s.order[start - 1] as usize] == d {
            start -= 1;
        }
        s.keys.clear();
        s.spans.clear();
        for i in start..end {
            let v = s.order[i] as usize;
            let from = s.first_child[v] as usize;
            let kids = &mut s.order[from..from + s.child_count[v] as usize];
            if kids.len() > 1 {
                let label = &s.label;
                kids.sort_unstable_by_key(|&c| label[c as usize]);
            }
            let key_from = s.keys.len();
            s.keys.extend(kids.iter().map(|&c| s.label[c as usize]));
            s.spans.push((key_from as u32, s.keys.len() as u32, v as u32));
        }
        let keys = &s.keys;
        let key = |span: &(u32, u32, u32)| &keys[span.0 as usize..span.1 as usize];
        s.spans.sort_unstable_by(|a, b| key(a).cmp(key(b)));
        let mut next_label = 0;
        for i in 0..s.spans.len() {
            if i > 0 && key(&s.spans[i]) != key(&s.spans[i - 1]) {
                next_label += 1;
            }
            s.label[s.spans[i].2 as usize] = next_label;
        }
        end = start;
    }

    let mut bits = BitWriter::with_capacity(2 * n);
    s.stack.clear();
    s.stack.push((root as u32, 0));
    bits.push(true);
    while let Some((v, next)) = s.stack.last_mut() {
        let v = *v as usize;
        if *next < s.child_count[v] {
            let c = s.order[(s.first_child[v] + *next) as usize];
            *next += 1;
            bits.push(true);
            s.stack.push((c, 0));
        } else {
            bits.push(false);
            s.stack.pop();
        }
    }
    bits.finish()
}

struct BitWriter {
    bytes: Vec<u8>,
    len: usize,
}

impl BitWriter {
    fn with_capacity(bits: usize) -> Self {
        BitWriter {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            len: 0,
        }
    }

    fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(8) {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().unwrap() |= 0x80 >> (self.len % 8);
        }
        self.len += 1;
    }

    fn finish(self) -> Vec<u8> {
        self.bytes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{gen_cycle, gen_path, gen_star, random_tree};

    #[test]
    fn equal_for_isomorphic() {
        assert_eq!(
            canonical_code(&gen_path(3).unwrap()).unwrap(),
            canonical_code(&gen_star(2).unwrap()).unwrap()
        );
    }

    #[test]
    fn distinguishes_p4_and_claw() {
        assert_ne!(
            canonical_code(&gen_path(4).unwrap()).unwrap(),
            canonical_code(&gen_star(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn centers_of_paths() {
        let s = &mut Scratch::default();
        assert_eq!(centers(&gen_path(5).unwrap(), s), [2]);
        assert_eq!(centers(&gen_path(6).unwrap(), s), [2, 3]);
        assert_eq!(centers(&gen_path(1).unwrap(), s), [0]);
        assert_eq!(centers(&gen_path(2).unwrap(), s), [0, 1]);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(canonical_code(&gen_cycle(4).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn path_bits() {
        // P_3 rooted at the middle: ( () () )  -> 110100
        assert_eq!(
            rooted_bits(&gen_path(3).unwrap(), 1, &mut Scratch::default()),
            [0b1101_0000]
        );
    }

    #[test]
    fn all_trees_on_seven_vertices() {
        // There are 11 unlabeled trees on 7 vertices.
        let mut codes = std::collections::HashSet::new();
        for seed in 0..4000 {
            codes.insert(canonical_code(&random_tree(7, seed).unwrap()).unwrap());
        }
        assert_eq!(codes.len(), 11);
    }
}
